#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega6/lattice.hpp"

namespace omega6 {

struct PlumbingVertex {
  std::string id;
  Int weight;

  bool operator==(const PlumbingVertex&) const = default;
};

/// Weighted graph presenting a 4-manifold built from disc bundles: vertex
/// weights are the framings (matrix diagonal), edges the plumbings (+1 off
/// the diagonal, unsigned convention). Vertices keep declaration order.
struct PlumbingGraph {
  std::vector<PlumbingVertex> vertices;
  std::vector<std::pair<int, int>> edges;  // index pairs, first < second

  bool operator==(const PlumbingGraph&) const = default;
};

/// Line-oriented parser, '#' starts a comment:
///   v <id> <integer-weight>
///   e <id> <id>
/// Throws SyntaxError (with line number), DuplicateVertex, UnknownVertex,
/// SelfLoop, DuplicateEdge.
PlumbingGraph parse_plumbing(std::string_view text);

/// Linking matrix: Q[i][i] = weight(i), Q[i][j] = 1 iff {i,j} is an edge.
IntMatrix form_from_plumbing(const PlumbingGraph& g);

/// Star-shaped tree with arms of 1, 2 and 4 edges, all weights +2: the
/// positive-definite E8 form, bounding the Poincare sphere.
PlumbingGraph e8_graph();

/// Star-shaped tree with arms of 1, 2 and 6 edges, all weights -2: an even
/// unimodular rank-10 presentation of the Brieskorn sphere Sigma(2,3,7).
PlumbingGraph sigma237_graph();

}  // namespace omega6
