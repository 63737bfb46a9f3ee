#pragma once

#include <functional>
#include <vector>

#include "fairset/graph.hpp"

namespace fairset {

// Visit every rooted tree on n vertices exactly once as a parent array
// (parent[0] = -1, parent[i] < i, vertices in preorder). Trees are produced
// in decreasing level-sequence order starting from the path.
void for_each_rooted_tree(int n, const std::function<void(const std::vector<int>&)>& visit);

// One representative per isomorphism class of free (unrooted) trees on n
// vertices, in first-seen order of the rooted enumeration. Labeling of each
// representative matches its rooted parent array.
std::vector<Graph> free_trees(int n);

}  // namespace fairset
