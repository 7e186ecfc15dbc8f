#pragma once

#include "kpvc/bounds.hpp"
#include "kpvc/chordal.hpp"
#include "kpvc/cover.hpp"
#include "kpvc/error.hpp"
#include "kpvc/exact.hpp"
#include "kpvc/generators.hpp"
#include "kpvc/graph.hpp"
#include "kpvc/graph_io.hpp"
#include "kpvc/harness.hpp"
#include "kpvc/pk_oracle.hpp"
#include "kpvc/rational.hpp"
#include "kpvc/rng.hpp"
