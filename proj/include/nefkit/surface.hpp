#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nefkit/rational.hpp"

namespace nefkit {

class SurfaceModel;
using SurfacePtr = std::shared_ptr<const SurfaceModel>;

/// A divisor (or curve) class on a surface: exact coordinates in the
/// surface's named basis. Arithmetic is componentwise and only defined
/// between classes on the same surface.
struct NSClass {
  SurfacePtr surface;
  RatVec coords;

  NSClass(SurfacePtr surface_, RatVec coords_);
  NSClass operator+(const NSClass& other) const;
  NSClass operator-(const NSClass& other) const;
  NSClass operator*(const Rat& factor) const;
  bool operator==(const NSClass& other) const;
};

struct IntersectionForm {
  std::vector<RatVec> matrix;  // symmetric, size = basis rank
};

enum class SurfaceKind { ProjectivePlane, Ruled, BlowUp };

/// Where a surface is blown up. Only the two sites the catalogue
/// provides curve-cone generators for are accepted.
enum class BlowUpSite { GenericPoint, OnSigma };

/// A catalogued surface: basis labels, intersection form, and the
/// finite list of irreducible curve classes generating the closed cone
/// of curves. Entries are immutable and shared by pointer; two entries
/// with the same id are interchangeable.
class SurfaceModel {
 public:
  std::string id;
  SurfaceKind kind;
  long genus = 0;  // Ruled only
  long deg_w = 0;  // Ruled only: W is normalized with mu_min(W) = deg(W)
  SurfacePtr parent;  // BlowUp only
  BlowUpSite site = BlowUpSite::GenericPoint;  // BlowUp only

  std::vector<std::string> ns_basis;
  IntersectionForm form;
  std::vector<std::pair<std::string, NSClass>> ne_generators;

  std::size_t rank() const { return ns_basis.size(); }
};

SurfacePtr projective_plane();

/// P(W) -> C for a curve of the given genus; W normalized with
/// mu_min(W) = deg(W) = degW (caller-asserted; only the numerics are
/// stored). Basis {zeta, f}; curve cone generated by zeta and f.
SurfacePtr ruled_surface(long genus, long deg_w);

/// One-point blow-up. Catalogued pairs: (projective plane, generic
/// point) and (ruled surface, point on the section sigma). Anything
/// else is rejected: the curve-cone generators are unknown.
SurfacePtr blow_up(const SurfacePtr& parent, BlowUpSite site);

/// Intersection number a.b through the surface's form. Both classes
/// must live on the same surface.
Rat intersect(const NSClass& a, const NSClass& b);

/// Class with the given coordinates on X (validates the length).
NSClass ns_class(const SurfacePtr& X, RatVec coords);

/// The zero class on X.
NSClass zero_class(const SurfacePtr& X);

}  // namespace nefkit
