#pragma once

// Tree diagrams for Thompson's group F, the 3-colorable subgroup, the
// associated link diagrams and their Fox colorings.

#include "treelink/coloring.hpp"
#include "treelink/diagram.hpp"
#include "treelink/dyadic.hpp"
#include "treelink/edge_coloring.hpp"
#include "treelink/errors.hpp"
#include "treelink/link.hpp"
#include "treelink/pl_map.hpp"
#include "treelink/quaternary.hpp"
#include "treelink/render.hpp"
#include "treelink/strip.hpp"
#include "treelink/tangle.hpp"
#include "treelink/tree.hpp"
#include "treelink/verify.hpp"
#include "treelink/words.hpp"
