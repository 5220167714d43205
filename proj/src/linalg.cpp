#include "nefkit/linalg.hpp"

#include <algorithm>

namespace nefkit {

std::vector<RatVec> rref(std::vector<RatVec> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows.size() && lead < cols; ++r) {
    // find a pivot in column `lead` at or below row r
    std::size_t pr = r;
    while (pr < rows.size() && rows[pr][lead] == 0) ++pr;
    if (pr == rows.size()) {
      ++lead;
      --r;
      continue;
    }
    std::swap(rows[r], rows[pr]);
    const Rat inv = Rat(1) / rows[r][lead];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][lead] == 0) continue;
      const Rat f = rows[i][lead];
      for (std::size_t c = 0; c < cols; ++c) rows[i][c] -= f * rows[r][c];
    }
    ++lead;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const RatVec& v) { return is_zero_vec(v); }),
             rows.end());
  return rows;
}

std::size_t rank(const std::vector<RatVec>& rows) { return rref(rows).size(); }

std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, std::size_t dim) {
  const auto e = rref(rows);
  // pivot column of each echelon row
  std::vector<std::size_t> pivot_col(e.size());
  std::vector<bool> is_pivot(dim, false);
  for (std::size_t r = 0; r < e.size(); ++r) {
    std::size_t c = 0;
    while (c < dim && e[r][c] == 0) ++c;
    pivot_col[r] = c;
    if (c < dim) is_pivot[c] = true;
  }
  std::vector<RatVec> basis;
  for (std::size_t free_c = 0; free_c < dim; ++free_c) {
    if (is_pivot[free_c]) continue;
    RatVec v(dim, Rat(0));
    v[free_c] = 1;
    for (std::size_t r = 0; r < e.size(); ++r) {
      if (pivot_col[r] < dim) v[pivot_col[r]] = -e[r][free_c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nefkit
