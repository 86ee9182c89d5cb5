#include "packing_search.hpp"

#include <algorithm>

namespace idim::detail {

std::vector<Word> conflict_rows(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t words = (n + 63) / 64;
  std::vector<Word> rows(n * words, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto ball = g.ball2(v).words();
    std::copy(ball.begin(), ball.end(), rows.begin() + static_cast<std::ptrdiff_t>(v * words));
  }
  return rows;
}

}  // namespace idim::detail
