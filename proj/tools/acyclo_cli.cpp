// Command-line front end. One subcommand per construction; all randomized
// commands take an explicit --seed. Exit codes: 0 ok, 1 usage, 2 format
// error, 3 verification failed, 4 size/timeout.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "acyclo/acyclo.hpp"

namespace {

using namespace acyclo;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write file: " + path);
    out << content;
}

GraphKind kind_from_path(const std::string& path) {
    auto ends_with = [&](const char* suffix) {
        std::string s(suffix);
        return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".trn")) return GraphKind::tournament;
    if (ends_with(".dg")) return GraphKind::digraph;
    if (ends_with(".ug")) return GraphKind::undirected;
    if (ends_with(".ord")) return GraphKind::order;
    throw PreconditionViolated("cannot tell graph kind from extension: " + path);
}

// For commands that work on any directed input.
OrientedGraph load_directed(const std::string& path) {
    GraphKind kind = kind_from_path(path);
    std::string text = read_file(path);
    if (kind == GraphKind::tournament) return parse_tournament(text).as_oriented();
    if (kind == GraphKind::digraph) return parse_digraph(text);
    throw PreconditionViolated("expected a .trn or .dg file: " + path);
}

UndirectedGraph load_undirected(const std::string& path) {
    GraphKind kind = kind_from_path(path);
    std::string text = read_file(path);
    if (kind == GraphKind::undirected) return parse_undirected(text);
    if (kind == GraphKind::tournament) return underlying_graph(parse_tournament(text));
    if (kind == GraphKind::digraph) return underlying_graph(parse_digraph(text));
    throw PreconditionViolated("expected a graph file: " + path);
}

std::vector<GridPoint> load_points(const std::string& path) {
    std::string text = read_file(path);
    std::vector<GridPoint> pts;
    for (std::string_view line : detail::split_lines(text)) {
        if (line.empty()) continue;
        auto xy = detail::parse_ints(line, 2);
        pts.push_back({static_cast<int>(xy[0]), static_cast<int>(xy[1])});
    }
    return pts;
}

std::string format_vertex_set(const VertexSet& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s[i]);
    }
    return out;
}

struct Args {
    int n = 0;
    std::uint64_t seed = 0;
    int samples = 1000;
    int limit = 0;
    bool verify = false;
    std::string out;
    std::string input;
    std::string order_file;
    std::string config_file;
};

int dispatch(CLI::App& app, Args& a);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tournaments, order splits and acyclic-subgraph certificates"};
    app.require_subcommand(1);
    Args a;

    auto* gen = app.add_subcommand("gen", "generate a tournament file");
    gen->require_subcommand(1);
    auto* gen_gn = gen->add_subcommand("gn", "grid tournament on [n]^2");
    gen_gn->add_option("--n", a.n, "grid side")->required();
    gen_gn->add_option("-o", a.out, "output file");
    auto* gen_random = gen->add_subcommand("random", "seeded random tournament");
    gen_random->add_option("--n", a.n, "vertex count")->required();
    gen_random->add_option("--seed", a.seed, "seed")->required();
    gen_random->add_option("-o", a.out, "output file");
    gen_random->add_option("--limit", a.limit, "size cap override");
    auto* gen_trans = gen->add_subcommand("transitive", "transitive tournament");
    gen_trans->add_option("--n", a.n, "vertex count")->required();
    gen_trans->add_option("-o", a.out, "output file");

    auto* f = app.add_subcommand("f", "max chromatic number over acyclic subgraphs");
    f->require_subcommand(1);
    auto* f_exact_cmd = f->add_subcommand("exact", "exact value (brute force over orders)");
    f_exact_cmd->add_option("file", a.input, "graph file (.trn/.dg)")->required();
    f_exact_cmd->add_option("--limit", a.limit, "vertex cap override");
    auto* f_bound = f->add_subcommand("bound", "sampled lower bound");
    f_bound->add_option("file", a.input, "graph file (.trn/.dg)")->required();
    f_bound->add_option("--samples", a.samples, "random orders to try")->required();
    f_bound->add_option("--seed", a.seed, "seed")->required();

    auto* chrom = app.add_subcommand("chromatic", "exact chromatic number");
    chrom->add_option("file", a.input, "graph file")->required();
    chrom->add_option("--limit", a.limit, "vertex cap override");
    chrom->add_flag("--verify", a.verify, "re-check the coloring");

    auto* clique = app.add_subcommand("clique", "exact maximum clique");
    clique->add_option("file", a.input, "graph file")->required();
    clique->add_option("--limit", a.limit, "vertex cap override");
    clique->add_flag("--verify", a.verify, "re-check the clique");

    auto* destroyer = app.add_subcommand("destroyer", "order killing all large transitive subtournaments");
    destroyer->add_option("file", a.input, "tournament file")->required();
    destroyer->add_option("-o", a.out, "write the order as .ord");
    destroyer->add_flag("--verify", a.verify, "re-check via exact max clique");

    auto* thm1 = app.add_subcommand("thm1", "six-part ordering bound check");
    thm1->add_option("file", a.input, "tournament file")->required();
    thm1->add_option("--n", a.n, "color budget n")->required();
    thm1->add_flag("--verify", a.verify, "re-check colorings and structure");

    auto* cyc = app.add_subcommand("cyclic-triangles", "per-edge cyclic triangle census");
    cyc->add_option("file", a.input, "tournament file")->required();

    auto* points = app.add_subcommand("points", "interval lemma on grid points");
    points->require_subcommand(1);
    auto* points_check = points->add_subcommand("check", "search a point set for a quadruple");
    points_check->add_option("file", a.input, "points file, lines \"x y\"")->required();
    points_check->add_option("--n", a.n, "grid side")->required();
    auto* points_tight = points->add_subcommand("tight", "largest set with no quadruple");
    points_tight->add_option("--n", a.n, "grid side")->required();
    points_tight->add_option("-o", a.out, "output file");

    auto* cover = app.add_subcommand("cover", "cover a grid tournament's right graph by transitive tournaments");
    cover->add_option("--n", a.n, "grid side")->required();
    cover->add_option("--seed", a.seed, "seed for a random order");
    cover->add_option("--order", a.order_file, "order file (.ord)");
    cover->add_option("-o", a.out, "write the parts");
    cover->add_flag("--verify", a.verify, "re-check the cover");

    auto* oddcycle = app.add_subcommand("oddcycle", "inconsistent odd cycle certificate");
    oddcycle->add_option("file", a.input, "graph file (.dg/.trn)")->required();
    oddcycle->add_flag("--verify", a.verify, "re-check the witness");

    auto* experiment = app.add_subcommand("experiment", "random tournament chi(right) experiment");
    experiment->add_option("--config", a.config_file, "config file")->required();
    experiment->add_option("-o", a.out, "output CSV file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // 0 for --help, 1 for any usage problem
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        return dispatch(app, a);
    } catch (const SizeLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const TimeoutExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 3;
    } catch (const ChromaticTooLow& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 3;
    } catch (const NoOddCycle& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 3;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

namespace {

int dispatch(CLI::App& app, Args& a) {
    auto got = [&](const std::string& names) { return app.got_subcommand(names); };

    if (got("gen")) {
        CLI::App* gen = app.get_subcommand("gen");
        Tournament t;
        if (gen->got_subcommand("gn"))
            t = grid_tournament(a.n);
        else if (gen->got_subcommand("random"))
            t = random_tournament(a.n, a.seed, a.limit > 0 ? a.limit : kDefaultSizeCap);
        else
            t = transitive_tournament(a.n);
        write_output(a.out, serialize_tournament(t));
        return 0;
    }

    if (got("f")) {
        CLI::App* f = app.get_subcommand("f");
        OrientedGraph g = load_directed(a.input);
        if (f->got_subcommand("exact")) {
            FExactLimits limits;
            if (a.limit > 0) limits.max_n = a.limit;
            int value = f_exact(g, limits);
            std::cout << "f = " << value << "\n";
        } else {
            int value = f_lower_heuristic(g, a.samples, a.seed);
            std::cout << "f >= " << value << "\n";
        }
        return 0;
    }

    if (got("chromatic")) {
        UndirectedGraph h = load_undirected(a.input);
        SolverLimits limits;
        if (a.limit > 0) limits.chromatic_max_n = a.limit;
        Coloring c = chromatic_number(h, limits);
        if (a.verify && !is_proper_coloring(h, c)) throw VerificationFailed("coloring is not proper");
        std::cout << "chi = " << c.k << "\n";
        return 0;
    }

    if (got("clique")) {
        UndirectedGraph h = load_undirected(a.input);
        VertexSet c = max_clique(h, a.limit > 0 ? a.limit : 64);
        if (a.verify)
            for (size_t i = 0; i < c.size(); ++i)
                for (size_t j = i + 1; j < c.size(); ++j)
                    if (!h.edge(c[i], c[j])) throw VerificationFailed("clique has a non-adjacent pair");
        std::cout << "omega = " << c.size() << "\n";
        std::cout << "clique: " << format_vertex_set(c) << "\n";
        return 0;
    }

    if (got("destroyer")) {
        Tournament g = parse_tournament(read_file(a.input));
        DestroyerTrace trace = destroyer_ordering(g);
        if (a.verify) {
            VertexSet clique = max_clique(underlying_graph(right_subgraph(g, trace.pi)));
            if (static_cast<int>(clique.size()) >= trace.s)
                throw VerificationFailed("right graph contains a transitive subtournament of order s");
        }
        std::cout << "s = " << trace.s << ", stages = " << trace.stages.size() << "\n";
        std::cout << "order: " << format_vertex_set(trace.pi.order()) << "\n";
        if (!a.out.empty()) write_output(a.out, serialize_order(trace.pi));
        return 0;
    }

    if (got("thm1")) {
        Tournament g = parse_tournament(read_file(a.input));
        SplitBoundReport report = verify_split_bound(g, a.n);
        if (a.verify) {
            SixParts parts = six_part_ordering(g);
            Coloring cr = chromatic_number(right_underlying(g, parts.pi));
            Coloring cl = chromatic_number(right_underlying(g, parts.pi.reversed()));
            if (!is_proper_coloring(right_underlying(g, parts.pi), cr) ||
                !is_proper_coloring(right_underlying(g, parts.pi.reversed()), cl))
                throw VerificationFailed("side coloring is not proper");
        }
        std::cout << "m = " << report.m << ", n = " << report.n << ", chi_right = " << report.chi_right
                  << ", chi_left = " << report.chi_left << ", holds = " << (report.holds ? "true" : "false")
                  << "\n";
        if (!report.holds) throw VerificationFailed("neither side needs more than n colors");
        return 0;
    }

    if (got("cyclic-triangles")) {
        Tournament g = parse_tournament(read_file(a.input));
        EdgeTriangleReport report = cyclic_triangle_counts(g);
        std::cout << "total_cyclic = " << report.total_cyclic << "\n";
        if (g.size() >= 2) {
            MinCyclicEdge e = min_cyclic_edge(g);
            std::cout << "min_edge = (" << e.u << "," << e.v << "), q = " << e.q << ", bound (t+1)/4 = "
                      << (g.size() + 1) / 4.0 << "\n";
        }
        return 0;
    }

    if (got("points")) {
        CLI::App* points = app.get_subcommand("points");
        if (points->got_subcommand("check")) {
            auto pts = load_points(a.input);
            auto q = find_interval_quadruple(pts, a.n);
            if ((static_cast<int>(pts.size()) >= 2 * a.n) && !q)
                throw VerificationFailed("no quadruple in a point set of size >= 2n");
            if (q)
                std::cout << "quadruple: (" << q->a.x << "," << q->a.y << ") (" << q->b.x << "," << q->b.y
                          << ") (" << q->c.x << "," << q->c.y << ") (" << q->d.x << "," << q->d.y << ")\n";
            else
                std::cout << "none\n";
            return 0;
        }
        std::string out;
        for (GridPoint p : points_tightness_example(a.n))
            out += std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
        write_output(a.out, out);
        return 0;
    }

    if (got("cover")) {
        CLI::App* cover_cmd = app.get_subcommand("cover");
        bool have_seed = cover_cmd->count("--seed") > 0;
        bool have_order = !a.order_file.empty();
        if (have_seed == have_order)
            throw PreconditionViolated("cover needs exactly one of --seed or --order");
        LinearOrder pi = have_order ? parse_order(read_file(a.order_file))
                                    : random_order(a.n * a.n, a.seed);
        CoverFamily family = cover_by_transitive(a.n, pi);
        if (a.verify && !cover_is_valid(grid_tournament(a.n), family))
            throw VerificationFailed("cover is not a partition into right-graph cliques");
        std::cout << "parts = " << family.parts.size() << ", bound = " << cover_part_bound(a.n)
                  << ", min_part_size = " << cover_min_part_size(a.n) << "\n";
        if (!a.out.empty()) {
            std::string out;
            for (const VertexSet& part : family.parts) out += format_vertex_set(part) + "\n";
            write_output(a.out, out);
        }
        return 0;
    }

    if (got("oddcycle")) {
        OrientedGraph g = load_directed(a.input);
        CycleWitness wit = acyclic_3chromatic_subgraph(g);
        if (a.verify) {
            CycleWitness again = cycle_witness(g, wit.vertices);
            if (!again.is_odd || again.is_directed)
                throw VerificationFailed("witness is not an inconsistent odd cycle");
        }
        std::cout << "cycle (" << wit.length << " vertices, odd=" << (wit.is_odd ? "true" : "false")
                  << ", directed=" << (wit.is_directed ? "true" : "false")
                  << "): " << format_vertex_set(wit.vertices) << "\n";
        return 0;
    }

    if (got("experiment")) {
        ExperimentConfig cfg = parse_experiment_config(read_file(a.config_file));
        write_output(a.out, experiment_csv(run_experiment(cfg)));
        return 0;
    }

    throw PreconditionViolated("no subcommand");
}

}  // namespace
