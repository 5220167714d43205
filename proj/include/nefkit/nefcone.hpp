#pragma once

#include <string>
#include <vector>

#include "nefkit/bundle.hpp"
#include "nefkit/cone.hpp"
#include "nefkit/rational.hpp"
#include "nefkit/surface.hpp"

namespace nefkit {

/// y0*xi + sum_i y_i * pi^*(C_i) on the projective bundle P(E), in the
/// coordinates of the generating set {xi, pi^*C_1, ..., pi^*C_n}. The
/// generating set may fail to be a basis; membership questions are
/// posed in these coordinates throughout.
struct DivisorClass {
  std::string surface_id;
  std::string bundle_id;
  Rat y0;
  RatVec y;
};

/// a * xi^{r-2}F + xi^{r-1} pi^*(base): the one-cycle classes spanning
/// the closed cone of curves of P(E). F is a fibre of the projection.
struct CycleClass {
  Rat fibre_coeff;
  NSClass base;
  std::string label;
};

enum class NefConeMethod { Semistable, Decomposable, PicardRank1 };

std::string method_name(NefConeMethod method);

/// A computed nef cone: the inequality rows in construction order
/// (redundant rows kept and flagged), the curve-cone generators both
/// as cycle classes and as pairing functionals, and the construction
/// method that produced it.
struct NefConeResult {
  SurfacePtr surface;
  std::string bundle_id;
  int rank = 0;
  NefConeMethod method = NefConeMethod::Semistable;
  ConeH cone;                   // all rows, construction order
  std::vector<bool> redundant;  // one flag per row
  std::vector<CycleClass> cycles;
  ConeV generators;  // the cycles encoded as pairing functionals

  /// The rows with the flagged redundancies removed.
  ConeH minimized() const;
};

/// Intersection number of the divisor D with the cycle Z on P(E),
/// evaluated through xi^r.pi^*C = deg(E|_C), pi^*D.xi^{r-1}pi^*C = D.C,
/// xi.xi^{r-2}F = 1 and pi^*D.xi^{r-2}F = 0.
Rat pair(const DivisorClass& D, const CycleClass& Z, const BundleModel& E);

/// The functional y |-> pair(y, Z) as a coordinate vector over
/// (y0, ..., yn); equals the nef-cone row that Z induces.
RatVec pairing_functional(const CycleClass& Z, const BundleModel& E);

/// Nef cone of P(E) for semistable E with vanishing discriminant:
/// rows y0 >= 0 and, per curve-cone generator C_j,
/// y0*mu(E|C_j) + sum_i y_i (C_i.C_j) >= 0. Generators: xi^{r-2}F and
/// xi^{r-1}pi^*C_i - ((r-1)/r) deg(E|C_i) xi^{r-2}F.
NefConeResult nef_cone_semistable(const SurfacePtr& X, const BundleModel& E);

/// Nef cone of P(E) for completely decomposable E = L_1 + ... + L_r:
/// rows use mu_min of the restrictions, plus one extra row for the
/// summed generator C' = C_1 + ... + C_n.
NefConeResult nef_cone_decomposable(const SurfacePtr& X, const BundleModel& E);

/// Picard-rank-1 specialization: X with one ample basis generator L,
/// E decomposable with summands a_i * L sorted ascending, and m the
/// least positive multiple of L carrying an irreducible curve C_0
/// (caller-supplied). Coordinates are (y0, y1) over {xi, pi^*C_0}; the
/// cone is generated by xi - a_1*m*(L^2)*pi^*C_0 and pi^*C_0.
NefConeResult nef_cone_picard1(const SurfacePtr& X, const BundleModel& E,
                               long m);

}  // namespace nefkit
