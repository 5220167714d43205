#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nefkit/errors.hpp"
#include "nefkit/nefcone.hpp"
#include "test_util.hpp"

using namespace nefkit;
using testutil::canon_set;
using testutil::normal_coords;
using testutil::rv;

namespace {

std::vector<RatVec> row_set(const NefConeResult& r) {
  return canon_set(normal_coords(r.cone));
}

// Every curve-cone generator, encoded through the pairing, must carve
// out the same cone as the inequality system, and pushing the
// functionals through the engine twice must land back on it.
void check_duality_closure(const NefConeResult& r) {
  const ConeH direct(r.cone.dim,
                     [&] {
                       std::vector<Halfspace> hs;
                       for (const auto& ray : r.generators.rays)
                         hs.emplace_back(ray.coords, ray.label);
                       return hs;
                     }(),
                     r.cone.coord_names);
  CHECK(cones_equal(direct, r.cone));

  const ConeH once = dual_of_rays(r.generators);
  const ConeV back(once.dim,
                   [&] {
                     std::vector<Ray> rays;
                     for (const auto& h : once.halfspaces)
                       rays.emplace_back(h.normal);
                     return rays;
                   }(),
                   once.coord_names);
  const ConeH twice = dual_of_rays(back);
  CHECK(cones_equal(twice, r.cone));
}

}  // namespace

TEST_CASE("pairing against the fibre cycle and the exceptional row") {
  const SurfacePtr x = blow_up(projective_plane(), BlowUpSite::GenericPoint);
  const BundleModel e = BundleModel::decomposable(
      x, {ns_class(x, {Rat(1), Rat(0)}), ns_class(x, {Rat(0), Rat(1)})});

  const CycleClass fibre{Rat(1), zero_class(x), "F"};
  const DivisorClass xi{x->id, e.id, Rat(1), rv({0, 0})};
  CHECK(pair(xi, fibre, e) == 1);

  const DivisorClass pullback{x->id, e.id, Rat(0), rv({1, 0})};
  CHECK(pair(pullback, fibre, e) == 0);

  // xi - lambda*pi^*E against the cycle over C_1 = H - E with shift l_{c_1}
  const NSClass c1 = x->ne_generators[0].second;
  const Rat l1 = deg_restriction(e, c1) - mu_min_restriction(e, c1);
  const CycleClass z1{-l1, c1, "C1"};
  const Rat lambda(3, 2);
  const DivisorClass d{x->id, e.id, Rat(1), {Rat(0), -lambda}};
  CHECK(pair(d, z1, e) == mu_min_restriction(e, c1) - lambda);  // = 1 - lambda

  const DivisorClass wrong{x->id, "other", Rat(1), rv({0, 0})};
  CHECK_THROWS_AS(pair(wrong, fibre, e), InputError);
}

TEST_CASE("nef cone of a pulled-back ruling bundle") {
  const SurfacePtr x = ruled_surface(1, 0);
  const BundleModel e = pullback_ruling(2, 1, x);
  const NefConeResult r = nef_cone_semistable(x, e);

  CHECK(r.cone.coord_names == std::vector<std::string>{"y0", "y1", "y2"});
  REQUIRE(r.cone.halfspaces.size() == 3);
  CHECK(r.cone.halfspaces[0].normal == rv({1, 0, 0}));
  CHECK(r.cone.halfspaces[1].normal == RatVec{Rat(1, 2), Rat(0), Rat(1)});
  CHECK(r.cone.halfspaces[2].normal == rv({0, 1, 0}));
  CHECK(row_set(r) ==
        canon_set({rv({1, 0, 0}), rv({0, 1, 0}), rv({1, 0, 2})}));
  CHECK(std::none_of(r.redundant.begin(), r.redundant.end(),
                     [](bool b) { return b; }));

  // generator fibre coefficients: -(r-1)/r * deg(E|C_i)
  REQUIRE(r.cycles.size() == 3);
  CHECK(r.cycles[1].fibre_coeff == Rat(-1, 2));  // over zeta, deg = 1
  CHECK(r.cycles[2].fibre_coeff == 0);           // over f, deg = 0
  check_duality_closure(r);

  CHECK_THROWS_AS(
      nef_cone_semistable(x, BundleModel::formal(x, 2, zero_class(x), Rat(0))),
      PreconditionError);
}

TEST_CASE("nef cone climbs the blow-up of the ruled surface") {
  const SurfacePtr base = ruled_surface(1, 0);
  const SurfacePtr x = blow_up(base, BlowUpSite::OnSigma);
  const BundleModel e = pullback_blowup(pullback_ruling(2, 1, base), x);
  const NefConeResult r = nef_cone_semistable(x, e);

  REQUIRE(r.cone.halfspaces.size() == 4);
  CHECK(r.cone.halfspaces[0].normal == rv({1, 0, 0, 0}));
  CHECK(r.cone.halfspaces[1].normal == rv({0, -1, 0, 1}));
  CHECK(r.cone.halfspaces[2].normal == RatVec{Rat(1, 2), Rat(0), Rat(-1), Rat(1)});
  CHECK(r.cone.halfspaces[3].normal == rv({0, 1, 1, -1}));
  check_duality_closure(r);
}

TEST_CASE("all-zero slopes reduce the rows to the intersection form") {
  const SurfacePtr x = ruled_surface(1, 0);
  const BundleModel e = BundleModel::semistable_delta0(x, 2, zero_class(x), Rat(0));
  const NefConeResult r = nef_cone_semistable(x, e);
  CHECK(row_set(r) ==
        canon_set({rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})}));
}

TEST_CASE("decomposable cone on the blown-up plane flags the redundant row") {
  const SurfacePtr x = blow_up(projective_plane(), BlowUpSite::GenericPoint);
  const BundleModel e = BundleModel::decomposable(
      x, {ns_class(x, {Rat(1), Rat(0)}), ns_class(x, {Rat(0), Rat(1)})});
  const NefConeResult r = nef_cone_decomposable(x, e);

  REQUIRE(r.cone.halfspaces.size() == 4);
  CHECK(r.cone.halfspaces[0].normal == rv({1, 0, 0}));
  CHECK(r.cone.halfspaces[1].normal == rv({1, 0, 1}));
  CHECK(r.cone.halfspaces[2].normal == rv({-1, 1, -1}));
  CHECK(r.cone.halfspaces[3].normal == rv({0, 1, 0}));
  CHECK(r.redundant == std::vector<bool>{false, false, false, true});
  CHECK(cones_equal(r.cone, r.minimized()));
  CHECK(r.minimized().halfspaces.size() == 3);
  check_duality_closure(r);
}

TEST_CASE("decomposable cone over the negative-section ruling, parametric") {
  struct Params {
    long l, m, n;
  };
  for (const Params p : {Params{-1, 1, 2}, Params{-2, -1, 3}, Params{-3, 0, 0}}) {
    CAPTURE(p.l);
    CAPTURE(p.m);
    CAPTURE(p.n);
    const SurfacePtr x = blow_up(ruled_surface(0, p.l), BlowUpSite::OnSigma);
    const BundleModel e = BundleModel::decomposable(
        x, {ns_class(x, {Rat(0), Rat(0), Rat(p.m)}),
            ns_class(x, {Rat(0), Rat(0), Rat(p.n)})});
    const NefConeResult r = nef_cone_decomposable(x, e);
    REQUIRE(r.cone.halfspaces.size() == 5);
    CHECK(r.cone.halfspaces[0].normal == rv({1, 0, 0, 0}));
    CHECK(r.cone.halfspaces[1].normal == rv({p.m, -1, 0, 1}));
    CHECK(r.cone.halfspaces[2].normal == rv({p.m, 0, p.l - 1, 1}));
    CHECK(r.cone.halfspaces[3].normal == rv({-p.n, 1, 1, -1}));
    CHECK(r.cone.halfspaces[4].normal == rv({p.m, 0, p.l, 1}));
    check_duality_closure(r);
  }
}

TEST_CASE("coinciding rows collapse under minimization") {
  const SurfacePtr p2 = projective_plane();
  const BundleModel e =
      BundleModel::decomposable(p2, {zero_class(p2), zero_class(p2)});
  const NefConeResult r = nef_cone_decomposable(p2, e);
  CHECK(canon_set(normal_coords(r.minimized())) ==
        canon_set({rv({1, 0}), rv({0, 1})}));
}

TEST_CASE("equal summands agree with the semistable construction") {
  const std::vector<SurfacePtr> surfaces{
      projective_plane(), ruled_surface(1, 0),
      blow_up(projective_plane(), BlowUpSite::GenericPoint),
      blow_up(ruled_surface(0, -1), BlowUpSite::OnSigma)};
  for (const auto& x : surfaces) {
    CAPTURE(x->id);
    RatVec coords(x->rank(), Rat(1));
    const NSClass l = ns_class(x, coords);
    const BundleModel dec = BundleModel::decomposable(x, {l, l, l});
    CHECK(discriminant(dec) == 0);
    const BundleModel ss =
        BundleModel::semistable_delta0(x, dec.rank, dec.c1, dec.c2);
    const NefConeResult a = nef_cone_decomposable(x, dec);
    const NefConeResult b = nef_cone_semistable(x, ss);
    CHECK(cones_equal(a.cone, b.cone));
  }
}

TEST_CASE("Picard-rank-1 specialization") {
  const SurfacePtr p2 = projective_plane();
  const BundleModel e = BundleModel::decomposable(
      p2, {ns_class(p2, {Rat(2)}), ns_class(p2, {Rat(5)})});
  const NefConeResult r = nef_cone_picard1(p2, e, 1);
  CHECK(r.cone.halfspaces.size() == 2);
  CHECK(r.cone.halfspaces[0].normal == rv({1, 0}));
  CHECK(r.cone.halfspaces[1].normal == rv({2, 1}));
  // generated by xi - 2*pi^*H and pi^*H
  const ConeV rays = extremal_rays(r.cone);
  CHECK(canon_set(testutil::ray_coords(rays)) ==
        canon_set({rv({1, -2}), rv({0, 1})}));
  check_duality_closure(r);

  // degenerate twist: a_1 = 0 gives the coordinate orthant
  const BundleModel e0 = BundleModel::decomposable(
      p2, {ns_class(p2, {Rat(0)}), ns_class(p2, {Rat(3)})});
  const NefConeResult r0 = nef_cone_picard1(p2, e0, 1);
  CHECK(canon_set(normal_coords(r0.cone)) ==
        canon_set({rv({1, 0}), rv({0, 1})}));

  // agrees with the general decomposable route on the plane
  const NefConeResult general = nef_cone_decomposable(p2, e);
  CHECK(cones_equal(r.cone, general.minimized()));

  CHECK_THROWS_AS(nef_cone_picard1(p2, e, 0), InputError);
  const BundleModel unsorted = BundleModel::decomposable(
      p2, {ns_class(p2, {Rat(5)}), ns_class(p2, {Rat(2)})});
  CHECK_THROWS_AS(nef_cone_picard1(p2, unsorted, 1), PreconditionError);
  const SurfacePtr ruled = ruled_surface(1, 0);
  const BundleModel on_ruled = BundleModel::decomposable(
      ruled, {zero_class(ruled), zero_class(ruled)});
  CHECK_THROWS_AS(nef_cone_picard1(ruled, on_ruled, 1), PreconditionError);
}

TEST_CASE("every construction row is a valid halfspace") {
  const SurfacePtr x = blow_up(ruled_surface(0, -1), BlowUpSite::OnSigma);
  const BundleModel e = BundleModel::decomposable(
      x, {ns_class(x, {Rat(1), Rat(2), Rat(0)}),
          ns_class(x, {Rat(0), Rat(1), Rat(-1)})});
  const NefConeResult r = nef_cone_decomposable(x, e);
  for (const auto& h : r.cone.halfspaces) CHECK_FALSE(is_zero_vec(h.normal));
  check_duality_closure(r);
}
