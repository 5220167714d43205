#include "nefkit/seshadri.hpp"

#include <algorithm>
#include <sstream>

#include "nefkit/errors.hpp"

namespace nefkit {

namespace {

void require_ample_necessary(const BundleModel& V) {
  for (const auto& [label, C] : V.surface->ne_generators)
    if (deg_restriction(V, C) <= 0)
      throw PreconditionError("bundle fails the ampleness necessary check: "
                              "deg along " + label + " is " +
                              format_rat(deg_restriction(V, C)));
}

RatVec divisor_coords(const DivisorClass& D) {
  RatVec v;
  v.reserve(D.y.size() + 1);
  v.push_back(D.y0);
  for (const auto& x : D.y) v.push_back(x);
  return v;
}

std::string row_text(const NefConeResult& cone, std::size_t i) {
  const auto& h = cone.cone.halfspaces[i];
  std::ostringstream out;
  out << format_halfspace(h, cone.cone.coord_names);
  if (!h.label.empty()) out << "  [" << h.label << "]";
  return out.str();
}

}  // namespace

SeshadriResult SeshadriResult::exact_value(Rat v,
                                           std::vector<std::string> witness,
                                           SeshadriMethod method) {
  if (v < 0) throw InvariantError("negative Seshadri value");
  SeshadriResult r;
  r.exact = true;
  r.lo = v;
  r.hi = std::move(v);
  r.witness = std::move(witness);
  r.method = method;
  return r;
}

SeshadriResult SeshadriResult::bounds(Rat lo, Rat hi,
                                      std::vector<std::string> witness,
                                      SeshadriMethod method) {
  if (lo < 0 || hi < lo) throw InvariantError("invalid Seshadri bounds");
  SeshadriResult r;
  r.exact = false;
  r.lo = std::move(lo);
  r.hi = std::move(hi);
  r.witness = std::move(witness);
  r.method = method;
  return r;
}

SeshadriResult seshadri_sup_lambda(const NefConeResult& cone,
                                   const DivisorClass& xi,
                                   const DivisorClass& etilde) {
  if (xi.surface_id != cone.surface->id || etilde.surface_id != cone.surface->id)
    throw InputError("divisor classes live on a different surface than the cone");
  if (xi.bundle_id != cone.bundle_id || etilde.bundle_id != cone.bundle_id)
    throw InputError("divisor classes belong to a different bundle than the cone");
  const RatVec x = divisor_coords(xi);
  const RatVec e = divisor_coords(etilde);
  if (x.size() != cone.cone.dim || e.size() != cone.cone.dim)
    throw InputError("divisor coordinates do not match the cone dimension");

  // xi must be in the cone; otherwise the sup is empty and reported as 0.
  std::vector<std::string> violated;
  for (std::size_t i = 0; i < cone.cone.halfspaces.size(); ++i)
    if (dot(cone.cone.halfspaces[i].normal, x) < 0)
      violated.push_back("violated: " + row_text(cone, i));
  if (!violated.empty())
    return SeshadriResult::exact_value(Rat(0), std::move(violated),
                                       SeshadriMethod::ConeLP);

  bool found = false;
  Rat best = 0;
  std::vector<std::size_t> binding;
  for (std::size_t i = 0; i < cone.cone.halfspaces.size(); ++i) {
    const Rat coeff = dot(cone.cone.halfspaces[i].normal, e);
    if (coeff <= 0) continue;  // row never caps lambda from above
    const Rat ratio = dot(cone.cone.halfspaces[i].normal, x) / coeff;
    if (!found || ratio < best) {
      found = true;
      best = ratio;
      binding.clear();
    }
    if (ratio == best) binding.push_back(i);
  }
  if (!found)
    throw UnboundedError(
        "no inequality row bounds lambda from above; the input direction is "
        "degenerate or the class is not ample");

  std::vector<std::string> witness;
  for (const auto i : binding) witness.push_back("binding: " + row_text(cone, i));
  return SeshadriResult::exact_value(std::move(best), std::move(witness),
                                     SeshadriMethod::ConeLP);
}

SeshadriResult seshadri_p2(const BundleModel& V) {
  if (V.surface->kind != SurfaceKind::ProjectivePlane)
    throw PreconditionError("Seshadri closed form on the plane called for " +
                            V.surface->id);
  require_ample_necessary(V);
  const NSClass line = V.surface->ne_generators[0].second;

  if (V.kind == BundleKind::Decomposable) {
    Rat best = intersect(V.summands[0], line);
    std::size_t best_i = 0;
    for (std::size_t i = 1; i < V.summands.size(); ++i) {
      const Rat d = intersect(V.summands[i], line);
      if (d < best) {
        best = d;
        best_i = i;
      }
    }
    return SeshadriResult::exact_value(
        best,
        {"minimal summand degree attained by summand " +
         std::to_string(best_i + 1)},
        SeshadriMethod::ClosedForm);
  }

  const SurfacePtr blown = blow_up(V.surface, BlowUpSite::GenericPoint);
  const BundleModel pulled = pullback_blowup(V, blown);
  const NSClass h_minus_e = ns_class(blown, {Rat(1), Rat(-1)});
  const Rat hi = mu_min_restriction(pulled, h_minus_e);
  return SeshadriResult::bounds(
      Rat(0), hi, {"upper bound: minimal slope of the pullback along H-E"},
      SeshadriMethod::ClosedForm);
}

SeshadriResult seshadri_ruled(const BundleModel& V, BlowUpSite site) {
  if (V.surface->kind != SurfaceKind::Ruled)
    throw PreconditionError("Seshadri closed form on a ruled surface called "
                            "for " + V.surface->id);
  if (site != BlowUpSite::OnSigma)
    throw PreconditionError(
        "blow-up site uncatalogued: only points on the section sigma are "
        "supported on ruled surfaces");
  require_ample_necessary(V);
  const NSClass sigma = ns_class(V.surface, {Rat(1), Rat(0)});
  const NSClass fibre = ns_class(V.surface, {Rat(0), Rat(1)});

  if (V.kind == BundleKind::SemistableDelta0) {
    const Rat mu_sigma = slope_restriction(V, sigma);
    const Rat mu_fibre = slope_restriction(V, fibre);
    const Rat value = std::min(mu_sigma, mu_fibre);
    std::vector<std::string> witness;
    if (mu_sigma <= mu_fibre)
      witness.push_back("slope along sigma: " + format_rat(mu_sigma));
    if (mu_fibre <= mu_sigma)
      witness.push_back("slope along f: " + format_rat(mu_fibre));
    return SeshadriResult::exact_value(value, std::move(witness),
                                       SeshadriMethod::ClosedForm);
  }

  const SurfacePtr blown = blow_up(V.surface, BlowUpSite::OnSigma);
  const BundleModel pulled = pullback_blowup(V, blown);
  const NSClass zeta_minus_e = ns_class(blown, {Rat(1), Rat(0), Rat(-1)});
  const NSClass f_minus_e = ns_class(blown, {Rat(0), Rat(1), Rat(-1)});
  const Rat hi = std::min(mu_min_restriction(pulled, zeta_minus_e),
                          mu_min_restriction(pulled, f_minus_e));
  return SeshadriResult::bounds(
      Rat(0), hi,
      {"upper bound: min of the pullback minimal slopes along zeta-E and f-E"},
      SeshadriMethod::ClosedForm);
}

CrosscheckReport crosscheck(const BundleModel& V) {
  CrosscheckReport report;
  SurfacePtr blown;
  switch (V.surface->kind) {
    case SurfaceKind::ProjectivePlane:
      report.closed_form = seshadri_p2(V);
      blown = blow_up(V.surface, BlowUpSite::GenericPoint);
      break;
    case SurfaceKind::Ruled:
      report.closed_form = seshadri_ruled(V, BlowUpSite::OnSigma);
      blown = blow_up(V.surface, BlowUpSite::OnSigma);
      break;
    default:
      throw PreconditionError(
          "Seshadri constants are catalogued on the plane and on ruled "
          "surfaces; got " + V.surface->id);
  }

  const BundleModel pulled = pullback_blowup(V, blown);
  NefConeResult cone =
      pulled.kind == BundleKind::Decomposable
          ? nef_cone_decomposable(blown, pulled)
          : nef_cone_semistable(blown, pulled);

  const std::size_t n = blown->ne_generators.size();
  DivisorClass xi{blown->id, pulled.id, Rat(1), RatVec(n, Rat(0))};
  // pi^* of the exceptional curve: the last catalogued generator is E.
  DivisorClass etilde{blown->id, pulled.id, Rat(0), RatVec(n, Rat(0))};
  etilde.y[n - 1] = 1;

  report.cone_route = seshadri_sup_lambda(cone, xi, etilde);

  if (report.closed_form.exact) {
    report.agree = report.cone_route.lo == report.closed_form.lo;
    report.detail = report.agree
                        ? "closed form and cone route agree exactly"
                        : "closed form " + format_rat(report.closed_form.lo) +
                              " differs from cone route " +
                              format_rat(report.cone_route.lo);
  } else {
    report.agree = report.closed_form.lo <= report.cone_route.lo &&
                   report.cone_route.lo <= report.closed_form.hi;
    report.detail = report.agree
                        ? "cone route lies inside the closed-form bounds"
                        : "cone route " + format_rat(report.cone_route.lo) +
                              " escapes the bounds [" +
                              format_rat(report.closed_form.lo) + ", " +
                              format_rat(report.closed_form.hi) + "]";
  }
  return report;
}

}  // namespace nefkit
