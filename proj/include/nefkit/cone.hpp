#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nefkit/rational.hpp"

namespace nefkit {

/// A ray of a rational polyhedral cone: a nonzero coordinate vector,
/// identified with all its positive rational multiples.
struct Ray {
  RatVec coords;
  std::string label;

  explicit Ray(RatVec coords_, std::string label_ = "");
  Ray canonicalized() const;
};

/// The constraint <normal, y> >= 0; nonzero and identified with its
/// positive multiples, like a Ray.
struct Halfspace {
  RatVec normal;
  std::string label;

  explicit Halfspace(RatVec normal_, std::string label_ = "");
  Halfspace canonicalized() const;
};

/// Generator representation of a cone in a named ambient space.
struct ConeV {
  std::size_t dim = 0;
  std::vector<Ray> rays;
  std::vector<std::string> coord_names;

  ConeV(std::size_t dim_, std::vector<Ray> rays_,
        std::vector<std::string> coord_names_ = {});
};

/// Halfspace representation: the set { y : <h, y> >= 0 for all h }.
/// `note` carries construction remarks (e.g. that an empty system came
/// from dualizing the trivial cone and describes all of space).
struct ConeH {
  std::size_t dim = 0;
  std::vector<Halfspace> halfspaces;
  std::vector<std::string> coord_names;
  std::string note;

  ConeH(std::size_t dim_, std::vector<Halfspace> halfspaces_,
        std::vector<std::string> coord_names_ = {});
};

/// Dual cone of the span of `cone`'s rays, as its minimal generator
/// list packaged into halfspaces: extremal directions first, then any
/// lineality as +/- pairs. Read as inequalities the result carves out
/// exactly the cone spanned by the input rays. Computed by the double
/// description method, inserting one ray-constraint at a time and
/// keeping the dual's ray list adjacency-filtered. An empty input
/// returns the empty system with an explanatory note (the dual is all
/// of the ambient space).
ConeH dual_of_rays(const ConeV& cone);

/// Generators of { x : <h, x> >= 0 for all halfspaces h }: the reverse
/// duality direction, i.e. dual_of_rays applied to the normals read as
/// rays. Lineality comes out as +/- ray pairs.
ConeV rays_of_dual(const ConeH& cone);

/// True iff every halfspace evaluates nonnegatively at `point`.
bool is_member(const ConeH& cone, const RatVec& point);

/// Minimal subsystem carving the same set: a halfspace is dropped iff
/// it is a nonnegative combination of the others (exact LP
/// certificate). Survivors keep their input order.
ConeH remove_redundant(const ConeH& cone);

/// True iff the two systems cut out the same point set: every
/// generator of each cone satisfies all halfspaces of the other.
bool cones_equal(const ConeH& a, const ConeH& b);

/// The unique minimal generator set of a pointed cone, canonicalized
/// and sorted lexicographically. Throws NotPointedError (with a
/// witness direction) when the cone contains a line.
ConeV extremal_rays(const ConeH& cone);

/// "y0 >= 0", "1/2*y0 + y2 >= 0", ... for reports.
std::string format_halfspace(const Halfspace& h,
                             const std::vector<std::string>& coord_names);

}  // namespace nefkit
