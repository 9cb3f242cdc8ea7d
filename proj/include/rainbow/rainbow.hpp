#pragma once

#include "rainbow/colour_analysis.hpp"
#include "rainbow/decomposition.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/matching.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/rainbow_tree.hpp"
#include "rainbow/ratio.hpp"
#include "rainbow/union_find.hpp"
#include "rainbow/verify.hpp"
