// Brute-force reference implementations used only by the test suites.
// Independent of the library's conversion path: feasibility questions
// go through Fourier-Motzkin elimination and facet normals come from
// nullspaces of (d-1)-subsets of rays.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nefkit/linalg.hpp"
#include "nefkit/rational.hpp"

namespace oracle {

using nefkit::Rat;
using nefkit::RatVec;

// One inequality sum_k c_k * x_k + d >= 0, stored as (c..., d).
// Plain elimination without any redundancy acceleration; intended for
// the small fixed systems of the worked examples (a hard budget guards
// against accidental blow-up).
using Ineq = std::vector<Rat>;

inline bool fm_feasible(std::vector<Ineq> system, std::size_t vars) {
  for (std::size_t v = 0; v < vars; ++v) {
    const std::size_t col = vars - 1 - v;  // eliminate from the back
    std::vector<Ineq> zero, pos, neg;
    for (auto& q : system) {
      if (q[col] == 0)
        zero.push_back(std::move(q));
      else if (q[col] > 0)
        pos.push_back(std::move(q));
      else
        neg.push_back(std::move(q));
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Ineq combined(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
          combined[i] = p[i] * (-n[col]) + n[i] * p[col];
        combined = nefkit::canonical(combined);
        // drop tautologies (all variable coefficients zero, constant >= 0)
        bool trivial = combined.back() >= 0;
        for (std::size_t i = 0; i + 1 < combined.size(); ++i)
          if (combined[i] != 0) trivial = false;
        if (!trivial) zero.push_back(std::move(combined));
      }
    std::sort(zero.begin(), zero.end(),
              [](const Ineq& a, const Ineq& b) { return nefkit::compare_lex(a, b) < 0; });
    zero.erase(std::unique(zero.begin(), zero.end()), zero.end());
    if (zero.size() > 50000)
      throw std::runtime_error("oracle: elimination blow-up");
    system = std::move(zero);
  }
  for (const auto& q : system)
    if (q.back() < 0) return false;
  return true;
}

// Is the halfspace <h, y> >= 0 implied by the system `others`? By the
// cone form of the Farkas lemma this is the feasibility of expressing
// h as a nonnegative combination; checked here geometrically instead,
// by eliminating y from { y : others >= 0, <h, y> < 0 }: the strict
// side is emptied exactly when h is implied. Strictness is encoded by
// -<h, y> - 1 >= 0 (cones are scale-invariant, so the offset is
// harmless).
inline bool implied_halfspace(const RatVec& h, const std::vector<RatVec>& others) {
  const std::size_t d = h.size();
  std::vector<Ineq> system;
  for (const auto& o : others) {
    Ineq q(d + 1, Rat(0));
    for (std::size_t i = 0; i < d; ++i) q[i] = o[i];
    system.push_back(std::move(q));
  }
  Ineq strict(d + 1, Rat(0));
  for (std::size_t i = 0; i < d; ++i) strict[i] = -h[i];
  strict[d] = -1;
  system.push_back(std::move(strict));
  return !fm_feasible(std::move(system), d);
}

// Is target a nonnegative combination of the generators? By the conic
// Caratheodory theorem it suffices to find a linearly independent
// subset carrying the target with nonnegative coordinates, so all
// small subsets are enumerated and solved exactly.
inline bool nonneg_combination(const RatVec& target,
                               const std::vector<RatVec>& generators) {
  if (nefkit::is_zero_vec(target)) return true;
  const std::size_t d = target.size();
  const std::size_t m = generators.size();
  if (m > 24) throw std::runtime_error("oracle: too many generators");

  for (std::size_t size = 1; size <= std::min(d, m); ++size) {
    std::vector<bool> mask(m, false);
    std::fill(mask.end() - static_cast<long>(size), mask.end(), true);
    do {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < m; ++i)
        if (mask[i]) idx.push_back(i);
      // solve sum_j lambda_j * g_{idx[j]} = target by exact elimination
      std::vector<RatVec> aug(d, RatVec(size + 1, Rat(0)));
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t j = 0; j < size; ++j) aug[r][j] = generators[idx[j]][r];
        aug[r][size] = target[r];
      }
      const auto e = nefkit::rref(aug);
      bool consistent = true;
      RatVec lambda(size, Rat(0));
      std::size_t solved = 0;
      for (const auto& row : e) {
        std::size_t lead = 0;
        while (lead < size + 1 && row[lead] == 0) ++lead;
        if (lead == size) {
          consistent = false;  // 0 = nonzero
          break;
        }
        if (lead == size + 1) continue;
        // unique solution only when the subset is independent: every
        // echelon row must be a pivot row with no free columns among
        // the leading ones we read off
        lambda[lead] = row[size];
        ++solved;
        for (std::size_t j = lead + 1; j < size; ++j)
          if (row[j] != 0) consistent = false;  // dependent subset: skip
        if (!consistent) break;
      }
      if (!consistent || solved != size) continue;
      bool nonneg = true;
      for (const auto& l : lambda)
        if (l < 0) nonneg = false;
      if (!nonneg) continue;
      // verify the certificate
      RatVec rebuilt(d, Rat(0));
      for (std::size_t j = 0; j < size; ++j)
        rebuilt = nefkit::add(rebuilt, nefkit::scaled(generators[idx[j]], lambda[j]));
      if (rebuilt == target) return true;
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  return false;
}

// All facet normals of the full-dimensional pointed cone spanned by
// `rays`: candidates are (up to sign) the one-dimensional nullspaces of
// (d-1)-subsets, kept when nonnegative on every ray. Canonicalized and
// sorted.
inline std::vector<RatVec> dual_generators(const std::vector<RatVec>& rays,
                                           std::size_t dim) {
  std::vector<RatVec> found;
  std::vector<std::size_t> pick(dim >= 1 ? dim - 1 : 0);
  auto consider = [&](const RatVec& candidate) {
    for (const RatVec& sign : {candidate, nefkit::scaled(candidate, Rat(-1))}) {
      bool ok = true;
      for (const auto& r : rays)
        if (nefkit::dot(sign, r) < 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      const RatVec c = nefkit::canonical(sign);
      if (std::find(found.begin(), found.end(), c) == found.end())
        found.push_back(c);
    }
  };
  if (dim == 1) {
    consider({Rat(1)});
  } else {
    std::vector<bool> mask(rays.size(), false);
    std::fill(mask.end() - static_cast<long>(dim - 1), mask.end(), true);
    do {
      std::vector<RatVec> subset;
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (mask[i]) subset.push_back(rays[i]);
      const auto ns = nefkit::nullspace(subset, dim);
      if (ns.size() == 1) consider(ns.front());
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  std::sort(found.begin(), found.end(), [](const RatVec& a, const RatVec& b) {
    return nefkit::compare_lex(a, b) < 0;
  });
  return found;
}

// Indices of rays that are not nonnegative combinations of the others.
inline std::vector<std::size_t> extremal_subset(const std::vector<RatVec>& rays) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::vector<RatVec> others;
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (j != i) others.push_back(rays[j]);
    if (!nonneg_combination(rays[i], others)) out.push_back(i);
  }
  return out;
}

// Characteristic polynomial coefficients of a square rational matrix
// (monic, by the trace recursion), and the signature of a symmetric
// one counted from sign changes: all roots are real, so the positive
// and negative root counts are exact.
inline std::vector<Rat> char_poly(const std::vector<RatVec>& m) {
  const std::size_t n = m.size();
  std::vector<RatVec> mk(n, RatVec(n, Rat(0)));  // starts as identity
  for (std::size_t i = 0; i < n; ++i) mk[i][i] = 1;
  std::vector<Rat> coeff{Rat(1)};
  auto mat_mul = [&](const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
    std::vector<RatVec> c(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  for (std::size_t k = 1; k <= n; ++k) {
    mk = mat_mul(m, mk);
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mk[i][i];
    const Rat ck = -tr / Rat(static_cast<long>(k));
    coeff.push_back(ck);
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += ck;
  }
  return coeff;  // x^n + c1 x^{n-1} + ... + cn
}

inline std::pair<int, int> signature(const std::vector<RatVec>& symmetric) {
  const auto c = char_poly(symmetric);
  auto variations = [](const std::vector<Rat>& seq) {
    int count = 0;
    int last = 0;
    for (const auto& x : seq) {
      if (x == 0) continue;
      const int s = x > 0 ? 1 : -1;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  std::vector<Rat> flipped(c);
  for (std::size_t i = 0; i < flipped.size(); ++i)
    if (i % 2 == 1) flipped[i] = -flipped[i];  // p(-x) up to sign
  return {variations(c), variations(flipped)};  // (#positive, #negative)
}

}  // namespace oracle
