#include "nefkit/lp.hpp"

#include <cstddef>

#include "nefkit/errors.hpp"

namespace nefkit {

// Phase-1 simplex on: minimize sum of artificials subject to
// G*lambda + a = t', lambda >= 0, a >= 0 (rows pre-negated so t' >= 0).
std::optional<RatVec> nonneg_combination(const RatVec& target,
                                         const std::vector<RatVec>& generators) {
  const std::size_t d = target.size();
  const std::size_t m = generators.size();
  for (const auto& g : generators)
    if (g.size() != d)
      throw InputError("generator length does not match target length");

  const std::size_t cols = m + d;
  std::vector<RatVec> tab(d, RatVec(cols + 1, Rat(0)));
  for (std::size_t i = 0; i < d; ++i) {
    const bool flip = target[i] < 0;
    for (std::size_t j = 0; j < m; ++j)
      tab[i][j] = flip ? Rat(-generators[j][i]) : generators[j][i];
    tab[i][m + i] = 1;
    tab[i][cols] = flip ? Rat(-target[i]) : target[i];
  }
  std::vector<std::size_t> basis(d);
  for (std::size_t i = 0; i < d; ++i) basis[i] = m + i;

  // reduced costs; artificials start at 0, originals at -column sum
  RatVec obj(cols, Rat(0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < d; ++i) obj[j] -= tab[i][j];

  for (;;) {
    // Bland: entering = lowest index with negative reduced cost
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = d;
    Rat best_ratio = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (tab[i][enter] <= 0) continue;
      const Rat ratio = tab[i][cols] / tab[i][enter];
      if (leave == d || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == d) break;  // cannot happen: phase-1 objective is bounded

    // pivot on (leave, enter)
    const Rat piv = tab[leave][enter];
    for (auto& x : tab[leave]) x /= piv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const Rat f = tab[i][enter];
      for (std::size_t c = 0; c <= cols; ++c) tab[i][c] -= f * tab[leave][c];
    }
    if (obj[enter] != 0) {
      const Rat f = obj[enter];
      for (std::size_t c = 0; c < cols; ++c) obj[c] -= f * tab[leave][c];
    }
    basis[leave] = enter;
  }

  Rat residual = 0;
  for (std::size_t i = 0; i < d; ++i)
    if (basis[i] >= m) residual += tab[i][cols];
  if (residual != 0) return std::nullopt;

  RatVec lambda(m, Rat(0));
  for (std::size_t i = 0; i < d; ++i)
    if (basis[i] < m) lambda[basis[i]] = tab[i][cols];
  return lambda;
}

}  // namespace nefkit
