#include "nefkit/cone.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "nefkit/errors.hpp"
#include "nefkit/linalg.hpp"
#include "nefkit/lp.hpp"

namespace nefkit {

namespace {

std::vector<std::string> default_names(std::size_t dim) {
  std::vector<std::string> names(dim);
  for (std::size_t i = 0; i < dim; ++i) names[i] = "x" + std::to_string(i);
  return names;
}

std::vector<std::string> resolve_names(std::size_t dim,
                                       std::vector<std::string> names) {
  if (names.empty()) return default_names(dim);
  if (names.size() != dim)
    throw InputError("coordinate name list does not match dimension");
  return names;
}

void require_same_space(const char* what, std::size_t dim,
                        const std::vector<std::string>& a,
                        const std::vector<std::string>& b) {
  if (a != b)
    throw InputError(std::string(what) + ": coordinate names disagree");
  (void)dim;
}

// --- double description -----------------------------------------------

struct GenRay {
  RatVec v;
  std::vector<bool> tight;  // tight[k] <=> <constraint k, v> == 0
};

struct Generators {
  std::vector<GenRay> rays;
  std::vector<RatVec> lineality;
};

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b,
               std::size_t upto) {
  for (std::size_t k = 0; k < upto; ++k)
    if (a[k] && !b[k]) return false;
  return true;
}

// Incremental double description: start from the whole space (pure
// lineality) and intersect with one halfspace <h_k, y> >= 0 at a time.
// Rays carry their tight sets over the constraints inserted so far;
// the combinatorial adjacency test keeps the ray list minimal.
Generators dd_generators(std::size_t dim,
                         const std::vector<RatVec>& constraints) {
  Generators g;
  for (std::size_t i = 0; i < dim; ++i) {
    RatVec e(dim, Rat(0));
    e[i] = 1;
    g.lineality.push_back(std::move(e));
  }
  const std::size_t total = constraints.size();

  for (std::size_t k = 0; k < total; ++k) {
    const RatVec& h = constraints[k];

    // Phase 1: if some lineality direction leaves the hyperplane,
    // trade it for a single new ray and project everything else onto
    // <h, .> = 0 along it. Older constraints vanish on lineality, so
    // previous tight sets survive the projection.
    std::size_t wi = g.lineality.size();
    for (std::size_t i = 0; i < g.lineality.size(); ++i)
      if (dot(h, g.lineality[i]) != 0) {
        wi = i;
        break;
      }
    if (wi != g.lineality.size()) {
      RatVec w = g.lineality[wi];
      Rat s = dot(h, w);
      if (s < 0) {
        w = scaled(w, Rat(-1));
        s = -s;
      }
      std::vector<RatVec> new_lin;
      for (std::size_t i = 0; i < g.lineality.size(); ++i) {
        if (i == wi) continue;
        const Rat t = dot(h, g.lineality[i]);
        new_lin.push_back(t == 0 ? g.lineality[i]
                                 : sub(g.lineality[i], scaled(w, t / s)));
      }
      g.lineality = std::move(new_lin);
      for (auto& r : g.rays) {
        const Rat t = dot(h, r.v);
        if (t != 0) r.v = canonical(sub(r.v, scaled(w, t / s)));
        r.tight.push_back(true);
      }
      GenRay nr;
      nr.v = canonical(w);
      nr.tight.assign(k, true);
      nr.tight.push_back(false);
      g.rays.push_back(std::move(nr));
      continue;
    }

    // Phase 2: lineality is inside the hyperplane; split the rays.
    std::vector<Rat> val(g.rays.size());
    for (std::size_t i = 0; i < g.rays.size(); ++i) val[i] = dot(h, g.rays[i].v);

    std::vector<GenRay> next;
    for (std::size_t i = 0; i < g.rays.size(); ++i) {
      if (val[i] < 0) continue;
      GenRay r = g.rays[i];
      r.tight.push_back(val[i] == 0);
      next.push_back(std::move(r));
    }
    for (std::size_t p = 0; p < g.rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t n = 0; n < g.rays.size(); ++n) {
        if (val[n] >= 0) continue;
        // adjacency: no third ray is tight everywhere both p and n are
        std::vector<bool> common(k);
        for (std::size_t c = 0; c < k; ++c)
          common[c] = g.rays[p].tight[c] && g.rays[n].tight[c];
        bool adjacent = true;
        for (std::size_t r = 0; r < g.rays.size(); ++r) {
          if (r == p || r == n) continue;
          if (subset_of(common, g.rays[r].tight, k)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        GenRay nr;
        nr.v = canonical(sub(scaled(g.rays[n].v, val[p]), scaled(g.rays[p].v, val[n])));
        common.push_back(true);
        nr.tight = std::move(common);
        next.push_back(std::move(nr));
      }
    }
    g.rays = std::move(next);
  }

  g.lineality = rref(std::move(g.lineality));
  for (auto& v : g.lineality) v = canonical(v);
  return g;
}

std::vector<RatVec> canonical_dedup(const std::vector<RatVec>& vecs) {
  std::vector<RatVec> out;
  for (const auto& v : vecs) {
    const RatVec c = canonical(v);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

}  // namespace

Ray::Ray(RatVec coords_, std::string label_)
    : coords(std::move(coords_)), label(std::move(label_)) {
  if (is_zero_vec(coords)) throw InputError("ray with zero coordinate vector");
}

Ray Ray::canonicalized() const { return Ray(canonical(coords), label); }

Halfspace::Halfspace(RatVec normal_, std::string label_)
    : normal(std::move(normal_)), label(std::move(label_)) {
  if (is_zero_vec(normal)) throw InputError("halfspace with zero normal");
}

Halfspace Halfspace::canonicalized() const {
  return Halfspace(canonical(normal), label);
}

ConeV::ConeV(std::size_t dim_, std::vector<Ray> rays_,
             std::vector<std::string> coord_names_)
    : dim(dim_), rays(std::move(rays_)),
      coord_names(resolve_names(dim_, std::move(coord_names_))) {
  if (dim == 0) throw InputError("cone in dimension 0");
  for (const auto& r : rays)
    if (r.coords.size() != dim)
      throw InputError("ray length does not match cone dimension");
}

ConeH::ConeH(std::size_t dim_, std::vector<Halfspace> halfspaces_,
             std::vector<std::string> coord_names_)
    : dim(dim_), halfspaces(std::move(halfspaces_)),
      coord_names(resolve_names(dim_, std::move(coord_names_))) {
  if (dim == 0) throw InputError("cone in dimension 0");
  for (const auto& h : halfspaces)
    if (h.normal.size() != dim)
      throw InputError("halfspace length does not match cone dimension");
}

ConeH dual_of_rays(const ConeV& cone) {
  if (cone.rays.empty()) {
    ConeH out(cone.dim, {}, cone.coord_names);
    out.note = "dual of the trivial cone: all of the ambient space";
    return out;
  }
  std::vector<RatVec> constraints;
  constraints.reserve(cone.rays.size());
  for (const auto& r : cone.rays) constraints.push_back(r.coords);
  const auto g = dd_generators(cone.dim, canonical_dedup(constraints));

  std::vector<Halfspace> out;
  for (const auto& r : g.rays) out.emplace_back(r.v);
  for (const auto& v : g.lineality) {
    out.emplace_back(v);
    out.emplace_back(scaled(v, Rat(-1)));
  }
  return ConeH(cone.dim, std::move(out), cone.coord_names);
}

ConeV rays_of_dual(const ConeH& cone) {
  std::vector<RatVec> constraints;
  constraints.reserve(cone.halfspaces.size());
  for (const auto& h : cone.halfspaces) constraints.push_back(h.normal);
  const auto g = dd_generators(cone.dim, canonical_dedup(constraints));

  std::vector<Ray> out;
  for (const auto& r : g.rays) out.emplace_back(r.v);
  for (const auto& v : g.lineality) {
    out.emplace_back(v);
    out.emplace_back(canonical(scaled(v, Rat(-1))));
  }
  return ConeV(cone.dim, std::move(out), cone.coord_names);
}

bool is_member(const ConeH& cone, const RatVec& point) {
  if (point.size() != cone.dim)
    throw InputError("membership query point does not match cone dimension");
  for (const auto& h : cone.halfspaces)
    if (dot(h.normal, point) < 0) return false;
  return true;
}

ConeH remove_redundant(const ConeH& cone) {
  std::vector<Halfspace> kept;
  std::vector<bool> alive(cone.halfspaces.size(), true);
  for (std::size_t i = 0; i < cone.halfspaces.size(); ++i) {
    std::vector<RatVec> others;
    for (std::size_t j = 0; j < cone.halfspaces.size(); ++j)
      if (j != i && alive[j]) others.push_back(cone.halfspaces[j].normal);
    if (nonneg_combination(cone.halfspaces[i].normal, others))
      alive[i] = false;
    else
      kept.push_back(cone.halfspaces[i]);
  }
  ConeH out(cone.dim, std::move(kept), cone.coord_names);
  out.note = cone.note;
  return out;
}

bool cones_equal(const ConeH& a, const ConeH& b) {
  if (a.dim != b.dim)
    throw InputError("cone comparison across different dimensions");
  require_same_space("cone comparison", a.dim, a.coord_names, b.coord_names);
  const ConeV ga = rays_of_dual(a);
  const ConeV gb = rays_of_dual(b);
  for (const auto& r : ga.rays)
    if (!is_member(b, r.coords)) return false;
  for (const auto& r : gb.rays)
    if (!is_member(a, r.coords)) return false;
  return true;
}

ConeV extremal_rays(const ConeH& cone) {
  std::vector<RatVec> constraints;
  for (const auto& h : cone.halfspaces) constraints.push_back(h.normal);
  const auto g = dd_generators(cone.dim, canonical_dedup(constraints));
  if (!g.lineality.empty())
    throw NotPointedError("cone is not pointed: it contains a line",
                          g.lineality.front());
  std::vector<RatVec> vecs;
  for (const auto& r : g.rays) vecs.push_back(r.v);
  std::sort(vecs.begin(), vecs.end(), [](const RatVec& x, const RatVec& y) {
    return compare_lex(x, y) < 0;
  });
  std::vector<Ray> rays;
  for (auto& v : vecs) rays.emplace_back(std::move(v));
  return ConeV(cone.dim, std::move(rays), cone.coord_names);
}

std::string format_halfspace(const Halfspace& h,
                             const std::vector<std::string>& coord_names) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < h.normal.size(); ++i) {
    const Rat& c = h.normal[i];
    if (c == 0) continue;
    const std::string name =
        i < coord_names.size() ? coord_names[i] : "x" + std::to_string(i);
    if (first) {
      if (c == -1)
        out << "-";
      else if (c != 1)
        out << format_rat(c) << "*";
    } else {
      out << (c > 0 ? " + " : " - ");
      const Rat mag = c > 0 ? c : Rat(-c);
      if (mag != 1) out << format_rat(mag) << "*";
    }
    out << name;
    first = false;
  }
  if (first) out << "0";
  out << " >= 0";
  return out.str();
}

}  // namespace nefkit
