#pragma once

#include <vector>

#include "apx/graph.hpp"

namespace fixtures {

inline apx::Graph cycle(int n) {
  std::vector<apx::Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return apx::Graph(n, edges);
}

inline apx::Graph path(int nodes) {
  std::vector<apx::Edge> edges;
  for (int i = 0; i + 1 < nodes; ++i) edges.emplace_back(i, i + 1);
  return apx::Graph(nodes, edges);
}

inline apx::Graph star(int nodes) {
  std::vector<apx::Edge> edges;
  for (int i = 1; i < nodes; ++i) edges.emplace_back(0, i);
  return apx::Graph(nodes, edges);
}

inline apx::Graph single_edge() { return apx::Graph(2, {{0, 1}}); }

// 5-cycle 0-1-2-3-4 with chord {1,3}.
inline apx::Graph contraction_example() {
  return apx::Graph(5, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 3}});
}

// Two blocks glued along {0,3}: a triangle fan 0-1-2-3 and the 0-3-4-5-6 side.
inline apx::Graph running_example() {
  return apx::Graph(7, {{0, 1}, {0, 3}, {1, 2}, {0, 2}, {2, 3}, {0, 6},
                        {3, 4}, {4, 5}, {5, 6}, {3, 5}, {0, 5}});
}

// Directed point labels of the corank-2 cell of the running example.
inline std::vector<apx::DirectedEdge> corank2_cell() {
  return {{1, 2}, {0, 3}, {3, 0}, {0, 2}, {3, 2}, {0, 6}, {3, 4}, {3, 5}, {0, 5}};
}

// Another cell of the running example, with arrows mostly into 0 and 3.
// The cell subgraph drawn for the running example, arrow for arrow. The path
// 1 -> 2 -> 0 cannot occur in a cell (edge {0,1} would lie below the lift).
inline std::vector<apx::DirectedEdge> running_cell_as_drawn() {
  return {{1, 2}, {0, 3}, {3, 0}, {2, 0}, {2, 3}, {6, 0}, {4, 3}, {5, 3}, {5, 0}};
}

// The drawn cell with {1,2} reoriented; same undirected cell subgraph.
inline std::vector<apx::DirectedEdge> running_cell() {
  return {{2, 1}, {0, 3}, {3, 0}, {2, 0}, {2, 3}, {6, 0}, {4, 3}, {5, 3}, {5, 0}};
}

}  // namespace fixtures
