#pragma once

// Exact Hungarian method used by the popularity verifier.

#include <cstddef>
#include <vector>

namespace popmatch::detail {

// Minimum-cost perfect assignment on a square matrix. Returns row -> column.
// T needs +, -, < and value-initialisation to zero; arithmetic must be exact.
template <typename T>
std::vector<std::size_t> min_cost_assignment(const std::vector<std::vector<T>>& cost) {
  const std::size_t n = cost.size();
  std::vector<T> u(n + 1), v(n + 1), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1), seen(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(used.begin(), used.end(), 0);
    std::fill(seen.begin(), seen.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      std::size_t j1 = 0;
      T delta{};
      bool have_delta = false;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        T cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (!seen[j] || cur < minv[j]) {
          minv[j] = cur;
          seen[j] = 1;
          way[j] = j0;
        }
        if (!have_delta || minv[j] < delta) {
          delta = minv[j];
          j1 = j;
          have_delta = true;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n, 0);
  for (std::size_t j = 1; j <= n; ++j)
    if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace popmatch::detail
