#include "nefkit/nefcone.hpp"

#include <algorithm>
#include <utility>

#include "nefkit/errors.hpp"

namespace nefkit {

namespace {

std::vector<std::string> y_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

void require_bundle_on(const SurfacePtr& X, const BundleModel& E) {
  if (!X || E.surface->id != X->id)
    throw InputError("bundle " + E.id + " does not live on " +
                     (X ? X->id : std::string("?")));
}

std::vector<bool> redundancy_flags(const ConeH& cone) {
  const ConeH minimal = remove_redundant(cone);
  std::vector<bool> flags(cone.halfspaces.size(), true);
  std::size_t next = 0;
  for (std::size_t i = 0; i < cone.halfspaces.size(); ++i) {
    if (next < minimal.halfspaces.size() &&
        cone.halfspaces[i].normal == minimal.halfspaces[next].normal &&
        cone.halfspaces[i].label == minimal.halfspaces[next].label) {
      flags[i] = false;
      ++next;
    }
  }
  return flags;
}

NefConeResult assemble(const SurfacePtr& X, const BundleModel& E,
                       NefConeMethod method, std::vector<Halfspace> rows,
                       std::vector<CycleClass> cycles,
                       std::vector<std::string> names,
                       std::vector<Ray> functional_rays) {
  const std::size_t dim = names.size();
  ConeH cone(dim, std::move(rows), std::move(names));
  ConeV generators(cone.dim, std::move(functional_rays), cone.coord_names);
  NefConeResult result{X,
                       E.id,
                       E.rank,
                       method,
                       std::move(cone),
                       {},
                       std::move(cycles),
                       std::move(generators)};
  result.redundant = redundancy_flags(result.cone);
  return result;
}

std::vector<Ray> default_functionals(const std::vector<CycleClass>& cycles,
                                     const BundleModel& E) {
  std::vector<Ray> rays;
  rays.reserve(cycles.size());
  for (const auto& z : cycles)
    rays.emplace_back(pairing_functional(z, E), z.label);
  return rays;
}

}  // namespace

std::string method_name(NefConeMethod method) {
  switch (method) {
    case NefConeMethod::Semistable: return "semistable";
    case NefConeMethod::Decomposable: return "decomposable";
    case NefConeMethod::PicardRank1: return "picard-rank-1";
  }
  return "?";
}

ConeH NefConeResult::minimized() const {
  std::vector<Halfspace> kept;
  for (std::size_t i = 0; i < cone.halfspaces.size(); ++i)
    if (!redundant[i]) kept.push_back(cone.halfspaces[i]);
  return ConeH(cone.dim, std::move(kept), cone.coord_names);
}

Rat pair(const DivisorClass& D, const CycleClass& Z, const BundleModel& E) {
  if (D.surface_id != E.surface->id || Z.base.surface->id != E.surface->id)
    throw InputError("pairing across different surfaces");
  if (D.bundle_id != E.id)
    throw InputError("divisor class belongs to a different bundle");
  const auto& gens = E.surface->ne_generators;
  if (D.y.size() != gens.size())
    throw InputError("divisor coordinates do not match the generator count");
  Rat acc = D.y0 * Z.fibre_coeff + D.y0 * deg_restriction(E, Z.base);
  for (std::size_t i = 0; i < gens.size(); ++i)
    acc += D.y[i] * intersect(gens[i].second, Z.base);
  return acc;
}

RatVec pairing_functional(const CycleClass& Z, const BundleModel& E) {
  const auto& gens = E.surface->ne_generators;
  RatVec row(gens.size() + 1, Rat(0));
  row[0] = Z.fibre_coeff + deg_restriction(E, Z.base);
  for (std::size_t i = 0; i < gens.size(); ++i)
    row[i + 1] = intersect(gens[i].second, Z.base);
  return row;
}

NefConeResult nef_cone_semistable(const SurfacePtr& X, const BundleModel& E) {
  require_bundle_on(X, E);
  if (E.kind != BundleKind::SemistableDelta0)
    throw PreconditionError(
        "semistable nef-cone construction needs a bundle declared semistable "
        "with vanishing discriminant; got " + E.id);
  if (discriminant(E) != 0)
    throw InvariantError("discriminant of " + E.id + " is nonzero");

  const auto& gens = X->ne_generators;
  const std::size_t n = gens.size();
  std::vector<Halfspace> rows;
  rows.reserve(n + 1);
  RatVec first(n + 1, Rat(0));
  first[0] = 1;
  rows.emplace_back(std::move(first), "F");
  for (std::size_t j = 0; j < n; ++j) {
    RatVec row(n + 1, Rat(0));
    row[0] = slope_restriction(E, gens[j].second);
    for (std::size_t i = 0; i < n; ++i)
      row[i + 1] = intersect(gens[i].second, gens[j].second);
    rows.emplace_back(std::move(row), gens[j].first);
  }

  std::vector<CycleClass> cycles;
  cycles.push_back({Rat(1), zero_class(X), "F"});
  const Rat ratio = Rat(E.rank - 1) / E.rank;
  for (const auto& [label, C] : gens)
    cycles.push_back({-ratio * deg_restriction(E, C), C, label});

  auto functionals = default_functionals(cycles, E);
  return assemble(X, E, NefConeMethod::Semistable, std::move(rows),
                  std::move(cycles), y_names(n), std::move(functionals));
}

NefConeResult nef_cone_decomposable(const SurfacePtr& X, const BundleModel& E) {
  require_bundle_on(X, E);
  if (E.kind != BundleKind::Decomposable)
    throw PreconditionError(
        "decomposable nef-cone construction needs a completely decomposable "
        "bundle; got " + E.id);

  const auto& gens = X->ne_generators;
  const std::size_t n = gens.size();

  NSClass c_sum = zero_class(X);
  for (const auto& [label, C] : gens) c_sum = c_sum + C;
  // min over summands of the total summand degree along the generator sum
  Rat min_total = intersect(E.summands[0], c_sum);
  for (const auto& L : E.summands)
    min_total = std::min(min_total, intersect(L, c_sum));
  const Rat l_sum = deg_restriction(E, c_sum) - min_total;

  std::vector<Halfspace> rows;
  rows.reserve(n + 2);
  RatVec first(n + 1, Rat(0));
  first[0] = 1;
  rows.emplace_back(std::move(first), "F");
  for (std::size_t j = 0; j < n; ++j) {
    RatVec row(n + 1, Rat(0));
    row[0] = mu_min_restriction(E, gens[j].second);
    for (std::size_t i = 0; i < n; ++i)
      row[i + 1] = intersect(gens[i].second, gens[j].second);
    rows.emplace_back(std::move(row), gens[j].first);
  }
  {
    RatVec row(n + 1, Rat(0));
    row[0] = deg_restriction(E, c_sum) - l_sum;  // = min_total
    for (std::size_t i = 0; i < n; ++i)
      row[i + 1] = intersect(gens[i].second, c_sum);
    rows.emplace_back(std::move(row), "C'");
  }

  std::vector<CycleClass> cycles;
  cycles.push_back({Rat(1), zero_class(X), "F"});
  for (const auto& [label, C] : gens) {
    const Rat l_c = deg_restriction(E, C) - mu_min_restriction(E, C);
    cycles.push_back({-l_c, C, label});
  }
  cycles.push_back({-l_sum, c_sum, "C'"});

  auto functionals = default_functionals(cycles, E);
  return assemble(X, E, NefConeMethod::Decomposable, std::move(rows),
                  std::move(cycles), y_names(n), std::move(functionals));
}

NefConeResult nef_cone_picard1(const SurfacePtr& X, const BundleModel& E,
                               long m) {
  require_bundle_on(X, E);
  if (X->rank() != 1)
    throw PreconditionError("surface " + X->id + " does not have Picard number 1");
  if (E.kind != BundleKind::Decomposable)
    throw PreconditionError(
        "Picard-rank-1 nef-cone construction needs a completely decomposable "
        "bundle; got " + E.id);
  if (m < 1) throw InputError("curve multiple m must be a positive integer");
  std::vector<Rat> a;
  a.reserve(E.summands.size());
  for (const auto& L : E.summands) a.push_back(L.coords[0]);
  if (!std::is_sorted(a.begin(), a.end()))
    throw PreconditionError("summand multiples must be sorted ascending");

  const Rat L2 = X->form.matrix[0][0];
  const NSClass c0 = ns_class(X, {Rat(m)});
  const Rat scale = a.front() * Rat(m) * L2;

  std::vector<Halfspace> rows;
  rows.emplace_back(RatVec{Rat(1), Rat(0)}, "F");
  rows.emplace_back(RatVec{scale, Rat(1)}, "C0");

  std::vector<CycleClass> cycles;
  cycles.push_back({Rat(1), zero_class(X), "F"});
  const Rat l_c0 = deg_restriction(E, c0) - mu_min_restriction(E, c0);
  cycles.push_back({-l_c0, c0, "C0"});

  // Functionals over {xi, pi^*C_0} rather than the catalogued basis:
  // pair(y0*xi + y1*pi^*C_0, Z) = y0*(a + deg E|beta) + y1*(C_0.beta).
  std::vector<Ray> functionals;
  functionals.emplace_back(RatVec{Rat(1), Rat(0)}, "F");
  functionals.emplace_back(
      RatVec{cycles[1].fibre_coeff + deg_restriction(E, c0), intersect(c0, c0)},
      "C0");

  return assemble(X, E, NefConeMethod::PicardRank1, std::move(rows),
                  std::move(cycles), {"y0", "y1"}, std::move(functionals));
}

}  // namespace nefkit
