#pragma once

#include <vector>

#include "widthlab/graph.hpp"

namespace enumeration {

// One representative per isomorphism class of graphs on n vertices
// (n <= 8), built by vertex augmentation.
const std::vector<widthlab::Graph>& all_graphs(std::size_t n);
std::vector<widthlab::Graph> connected_graphs(std::size_t n);
bool is_connected(const widthlab::Graph& g);

}  // namespace enumeration
