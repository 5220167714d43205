#pragma once

#include <string>
#include <vector>

#include "nefkit/rational.hpp"
#include "nefkit/surface.hpp"

namespace nefkit {

enum class BundleKind { Decomposable, SemistableDelta0, Formal };

/// Numerical vector-bundle data on a catalogued surface: rank, Chern
/// classes, and a structure tag. Decomposable bundles also carry their
/// line-bundle summands; formal bundles carry no structural claim and
/// only admit degree/slope computations.
class BundleModel {
 public:
  SurfacePtr surface;
  int rank;
  NSClass c1;
  Rat c2;
  BundleKind kind;
  std::vector<NSClass> summands;  // Decomposable only; size == rank
  std::string id;

  /// c1 and c2 are derived from the summands (first and second
  /// elementary symmetric functions under the intersection form).
  static BundleModel decomposable(const SurfacePtr& X,
                                  std::vector<NSClass> summands);

  /// Declared semistable with vanishing discriminant; the vanishing is
  /// the checkable consequence and is enforced here.
  static BundleModel semistable_delta0(const SurfacePtr& X, int rank,
                                       NSClass c1, Rat c2);

  static BundleModel formal(const SurfacePtr& X, int rank, NSClass c1, Rat c2);

 private:
  BundleModel(SurfacePtr X, int rank_, NSClass c1_, Rat c2_, BundleKind kind_,
              std::vector<NSClass> summands_);
};

/// 2*r*c2 - (r-1)*c1^2.
Rat discriminant(const BundleModel& E);

/// c1(E).C.
Rat deg_restriction(const BundleModel& E, const NSClass& C);

/// deg_restriction / rank.
Rat slope_restriction(const BundleModel& E, const NSClass& C);

/// Minimal slope of E restricted to (the normalization of) C, in the
/// two cases it is determined by the numerical data: min over summand
/// degrees for decomposable E, the plain slope for semistable E with
/// vanishing discriminant. Formal bundles are rejected.
Rat mu_min_restriction(const BundleModel& E, const NSClass& C);

/// Transport to a one-point blow-up of E's surface: pullback
/// coordinates (exceptional coefficient 0), c2 and kind unchanged.
/// The discriminant is invariant.
BundleModel pullback_blowup(const BundleModel& E, const SurfacePtr& target);

/// rho^*(V) for V of the given rank and degree on the base curve of a
/// ruled surface: c1 = degree * f, c2 = 0, declared semistable with
/// vanishing discriminant (the caller asserts V semistable).
BundleModel pullback_ruling(int rank, long degree, const SurfacePtr& target);

/// E (x) L: c1 += r*L, c2 += (r-1)*(c1.L) + r(r-1)/2 * L^2; summands
/// shift by L; kind is preserved.
BundleModel twist(const BundleModel& E, const NSClass& L);

}  // namespace nefkit
