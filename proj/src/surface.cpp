#include "nefkit/surface.hpp"

#include <sstream>

#include "nefkit/errors.hpp"

namespace nefkit {

namespace {

void require_same_surface(const NSClass& a, const NSClass& b) {
  if (!a.surface || !b.surface || a.surface->id != b.surface->id)
    throw InputError("classes live on different surfaces");
}

}  // namespace

NSClass::NSClass(SurfacePtr surface_, RatVec coords_)
    : surface(std::move(surface_)), coords(std::move(coords_)) {
  if (!surface) throw InputError("class without a surface");
  if (coords.size() != surface->rank())
    throw InputError("class length does not match the surface basis of " +
                     surface->id);
}

NSClass NSClass::operator+(const NSClass& other) const {
  require_same_surface(*this, other);
  return NSClass(surface, add(coords, other.coords));
}

NSClass NSClass::operator-(const NSClass& other) const {
  require_same_surface(*this, other);
  return NSClass(surface, sub(coords, other.coords));
}

NSClass NSClass::operator*(const Rat& factor) const {
  return NSClass(surface, scaled(coords, factor));
}

bool NSClass::operator==(const NSClass& other) const {
  return surface && other.surface && surface->id == other.surface->id &&
         coords == other.coords;
}

NSClass ns_class(const SurfacePtr& X, RatVec coords) {
  return NSClass(X, std::move(coords));
}

NSClass zero_class(const SurfacePtr& X) {
  return NSClass(X, RatVec(X->rank(), Rat(0)));
}

Rat intersect(const NSClass& a, const NSClass& b) {
  require_same_surface(a, b);
  const auto& m = a.surface->form.matrix;
  Rat acc = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] == 0) continue;
    acc += a.coords[i] * dot(m[i], b.coords);
  }
  return acc;
}

SurfacePtr projective_plane() {
  auto X = std::make_shared<SurfaceModel>();
  X->id = "p2";
  X->kind = SurfaceKind::ProjectivePlane;
  X->ns_basis = {"H"};
  X->form.matrix = {{Rat(1)}};
  SurfacePtr ptr = X;
  X->ne_generators.emplace_back("H", ns_class(ptr, {Rat(1)}));
  return ptr;
}

SurfacePtr ruled_surface(long genus, long deg_w) {
  if (genus < 0) throw InputError("ruled surface with negative genus");
  auto X = std::make_shared<SurfaceModel>();
  std::ostringstream id;
  id << "ruled(g=" << genus << ",w=" << deg_w << ")";
  X->id = id.str();
  X->kind = SurfaceKind::Ruled;
  X->genus = genus;
  X->deg_w = deg_w;
  X->ns_basis = {"zeta", "f"};
  X->form.matrix = {{Rat(deg_w), Rat(1)}, {Rat(1), Rat(0)}};
  SurfacePtr ptr = X;
  X->ne_generators.emplace_back("zeta", ns_class(ptr, {Rat(1), Rat(0)}));
  X->ne_generators.emplace_back("f", ns_class(ptr, {Rat(0), Rat(1)}));
  return ptr;
}

SurfacePtr blow_up(const SurfacePtr& parent, BlowUpSite site) {
  if (!parent) throw InputError("blow-up of a null surface");
  const bool p2_point = parent->kind == SurfaceKind::ProjectivePlane &&
                        site == BlowUpSite::GenericPoint;
  const bool ruled_sigma =
      parent->kind == SurfaceKind::Ruled && site == BlowUpSite::OnSigma;
  if (!p2_point && !ruled_sigma)
    throw PreconditionError(
        "curve-cone generators are not catalogued for blowing up " +
        parent->id + " at this site");

  auto X = std::make_shared<SurfaceModel>();
  X->kind = SurfaceKind::BlowUp;
  X->parent = parent;
  X->site = site;
  X->id = "blowup(" + parent->id +
          (site == BlowUpSite::OnSigma ? ";sigma)" : ";point)");

  const std::size_t pr = parent->rank();
  X->ns_basis = parent->ns_basis;
  X->ns_basis.push_back("E");
  // pullbacks intersect as in the parent and are orthogonal to E, E^2 = -1
  X->form.matrix.assign(pr + 1, RatVec(pr + 1, Rat(0)));
  for (std::size_t i = 0; i < pr; ++i)
    for (std::size_t j = 0; j < pr; ++j)
      X->form.matrix[i][j] = parent->form.matrix[i][j];
  X->form.matrix[pr][pr] = -1;

  SurfacePtr ptr = X;
  if (p2_point) {
    X->ne_generators.emplace_back("H-E", ns_class(ptr, {Rat(1), Rat(-1)}));
    X->ne_generators.emplace_back("E", ns_class(ptr, {Rat(0), Rat(1)}));
  } else {
    X->ne_generators.emplace_back("f-E",
                                  ns_class(ptr, {Rat(0), Rat(1), Rat(-1)}));
    X->ne_generators.emplace_back("zeta-E",
                                  ns_class(ptr, {Rat(1), Rat(0), Rat(-1)}));
    X->ne_generators.emplace_back("E", ns_class(ptr, {Rat(0), Rat(0), Rat(1)}));
  }
  return ptr;
}

}  // namespace nefkit
