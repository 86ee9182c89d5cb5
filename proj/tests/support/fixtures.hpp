#pragma once

#include <string>
#include <vector>

#include "idim/families.hpp"
#include "idim/graph.hpp"

namespace idim::fixtures {

/// Path 0-1-2-3 with pendant 4 on vertex 1; the critical edge is {0,1}.
inline Graph pendant_path() { return Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}}); }

/// 15-vertex tree: spine a1..a7, legs a1-b1-c1, a4-b2-c2, a7-b3-c3, leaves
/// d1 on a1 and d2 on a7.
enum SpineTree : Vertex { a1, a2, a3, a4, a5, a6, a7, b1, b2, b3, c1, c2, c3, d1, d2 };

inline Graph spine_tree() {
  return Graph::build(15, {{a1, a2}, {a2, a3}, {a3, a4}, {a4, a5}, {a5, a6}, {a6, a7},
                           {a1, b1}, {a4, b2}, {a7, b3}, {b1, c1}, {b2, c2}, {b3, c3},
                           {a1, d1}, {a7, d2}});
}

inline Graph family(Family f, std::vector<std::size_t> params) {
  return generate_family(FamilySpec{f, std::move(params)}).graph;
}

inline Graph path(std::size_t n) { return family(Family::path, {n}); }
inline Graph cycle(std::size_t n) { return family(Family::cycle, {n}); }
inline Graph complete(std::size_t n) { return family(Family::complete, {n}); }
inline Graph kbip(std::size_t r, std::size_t t) { return family(Family::complete_bipartite, {r, t}); }
inline Graph star(std::size_t leaves) { return kbip(1, leaves); }

}  // namespace idim::fixtures
