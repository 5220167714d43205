#pragma once

#include <string>
#include <vector>

#include "nefkit/bundle.hpp"
#include "nefkit/nefcone.hpp"
#include "nefkit/rational.hpp"

namespace nefkit {

enum class SeshadriMethod { ClosedForm, ConeLP };

/// Either an exact value (lo == hi) or a closed interval of bounds,
/// with human-readable witnesses for how the optimum is pinned down.
struct SeshadriResult {
  bool exact = false;
  Rat lo, hi;
  std::vector<std::string> witness;
  SeshadriMethod method = SeshadriMethod::ClosedForm;

  static SeshadriResult exact_value(Rat v, std::vector<std::string> witness,
                                    SeshadriMethod method);
  static SeshadriResult bounds(Rat lo, Rat hi,
                               std::vector<std::string> witness,
                               SeshadriMethod method);
};

/// sup { lambda : xi - lambda*etilde stays in the cone }. Each row is
/// linear in lambda; the answer is the minimum breakeven ratio over
/// rows with positive lambda-coefficient, with the binding rows as
/// witnesses. If xi itself violates a row the result is exactly 0; if
/// no row bounds lambda the input is degenerate and UnboundedError is
/// raised.
SeshadriResult seshadri_sup_lambda(const NefConeResult& cone,
                                   const DivisorClass& xi,
                                   const DivisorClass& etilde);

/// Seshadri constant of an ample V on the projective plane at a closed
/// point: exactly the minimal summand degree for decomposable V, and
/// the interval [0, mu_min of the pullback restricted to H - E]
/// otherwise (when that mu_min is computable).
SeshadriResult seshadri_p2(const BundleModel& V);

/// Seshadri constant of an ample V on a catalogued ruled surface at a
/// point of the section sigma: exactly min{mu(V|sigma), mu(V|f)} for
/// semistable V with vanishing discriminant, and the interval
/// [0, min of the two pullback mu_min values] otherwise. Only the
/// on-sigma site is catalogued.
SeshadriResult seshadri_ruled(const BundleModel& V, BlowUpSite site);

/// Closed form versus the cone route (blow up, pull back, build the
/// applicable nef cone, optimize lambda against the exceptional
/// fibre direction), compared as exact rationals.
struct CrosscheckReport {
  SeshadriResult closed_form;
  SeshadriResult cone_route;
  bool agree = false;
  std::string detail;
};

CrosscheckReport crosscheck(const BundleModel& V);

}  // namespace nefkit
