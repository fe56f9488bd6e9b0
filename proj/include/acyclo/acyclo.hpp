#pragma once

#include "acyclo/bits.hpp"
#include "acyclo/chromatic.hpp"
#include "acyclo/destroyer.hpp"
#include "acyclo/errors.hpp"
#include "acyclo/experiment.hpp"
#include "acyclo/graph.hpp"
#include "acyclo/grid_tournament.hpp"
#include "acyclo/io.hpp"
#include "acyclo/odd_k4.hpp"
#include "acyclo/orderings.hpp"
#include "acyclo/rng.hpp"
#include "acyclo/split_bound.hpp"
#include "acyclo/triangles.hpp"
