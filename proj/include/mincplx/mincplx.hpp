#pragma once

#include "mincplx/error.hpp"
#include "mincplx/rng.hpp"
#include "mincplx/complex.hpp"
#include "mincplx/graph.hpp"
#include "mincplx/random_gen.hpp"
#include "mincplx/link_graphs.hpp"
#include "mincplx/witness.hpp"
#include "mincplx/minor_finder.hpp"
#include "mincplx/parallel.hpp"
#include "mincplx/pi1_filler.hpp"
#include "mincplx/surface_census.hpp"
#include "mincplx/oracles.hpp"
#include "mincplx/harness.hpp"
