#pragma once

#include "lgtw/appendix.hpp"
#include "lgtw/bounds.hpp"
#include "lgtw/congestion.hpp"
#include "lgtw/congestion_io.hpp"
#include "lgtw/constructions.hpp"
#include "lgtw/decomposition.hpp"
#include "lgtw/decomposition_io.hpp"
#include "lgtw/embedding.hpp"
#include "lgtw/enumerate.hpp"
#include "lgtw/error.hpp"
#include "lgtw/exact.hpp"
#include "lgtw/families.hpp"
#include "lgtw/graph.hpp"
#include "lgtw/graph_io.hpp"
#include "lgtw/limits.hpp"
#include "lgtw/rational.hpp"
#include "lgtw/tree.hpp"
