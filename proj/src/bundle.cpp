#include "nefkit/bundle.hpp"

#include <algorithm>
#include <sstream>

#include "nefkit/errors.hpp"

namespace nefkit {

namespace {

void require_surface(const BundleModel& E, const NSClass& C) {
  if (!C.surface || C.surface->id != E.surface->id)
    throw InputError("class on " + (C.surface ? C.surface->id : "?") +
                     " paired with a bundle on " + E.surface->id);
}

std::string kind_name(BundleKind k) {
  switch (k) {
    case BundleKind::Decomposable: return "decomposable";
    case BundleKind::SemistableDelta0: return "semistable_delta0";
    case BundleKind::Formal: return "formal";
  }
  return "?";
}

std::string bundle_id(const SurfacePtr& X, int rank, const NSClass& c1,
                      const Rat& c2, BundleKind kind) {
  std::ostringstream out;
  out << kind_name(kind) << "(r=" << rank << ",c1=" << format_vec(c1.coords)
      << ",c2=" << format_rat(c2) << ") on " << X->id;
  return out.str();
}

}  // namespace

BundleModel::BundleModel(SurfacePtr X, int rank_, NSClass c1_, Rat c2_,
                         BundleKind kind_, std::vector<NSClass> summands_)
    : surface(std::move(X)), rank(rank_), c1(std::move(c1_)),
      c2(std::move(c2_)), kind(kind_), summands(std::move(summands_)) {
  if (!surface) throw InputError("bundle without a surface");
  if (rank < 2) throw InputError("bundle rank must be at least 2");
  if (c1.surface->id != surface->id)
    throw InputError("c1 lives on a different surface");
  id = bundle_id(surface, rank, c1, c2, kind);
}

BundleModel BundleModel::decomposable(const SurfacePtr& X,
                                      std::vector<NSClass> summands) {
  if (summands.size() < 2)
    throw InputError("decomposable bundle needs at least two summands");
  const int rank = static_cast<int>(summands.size());
  NSClass c1 = zero_class(X);
  Rat c2 = 0;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (summands[i].surface->id != X->id)
      throw InputError("summand lives on a different surface");
    c1 = c1 + summands[i];
    for (std::size_t j = i + 1; j < summands.size(); ++j)
      c2 += intersect(summands[i], summands[j]);
  }
  return BundleModel(X, rank, std::move(c1), std::move(c2),
                     BundleKind::Decomposable, std::move(summands));
}

BundleModel BundleModel::semistable_delta0(const SurfacePtr& X, int rank,
                                           NSClass c1, Rat c2) {
  BundleModel E(X, rank, std::move(c1), std::move(c2),
                BundleKind::SemistableDelta0, {});
  if (discriminant(E) != 0)
    throw InvariantError(
        "bundle declared semistable with vanishing discriminant has "
        "discriminant " +
        format_rat(discriminant(E)));
  return E;
}

BundleModel BundleModel::formal(const SurfacePtr& X, int rank, NSClass c1,
                                Rat c2) {
  return BundleModel(X, rank, std::move(c1), std::move(c2), BundleKind::Formal,
                     {});
}

Rat discriminant(const BundleModel& E) {
  return Rat(2 * E.rank) * E.c2 - Rat(E.rank - 1) * intersect(E.c1, E.c1);
}

Rat deg_restriction(const BundleModel& E, const NSClass& C) {
  require_surface(E, C);
  return intersect(E.c1, C);
}

Rat slope_restriction(const BundleModel& E, const NSClass& C) {
  return deg_restriction(E, C) / E.rank;
}

Rat mu_min_restriction(const BundleModel& E, const NSClass& C) {
  require_surface(E, C);
  switch (E.kind) {
    case BundleKind::Decomposable: {
      Rat best = intersect(E.summands[0], C);
      for (std::size_t j = 1; j < E.summands.size(); ++j)
        best = std::min(best, intersect(E.summands[j], C));
      return best;
    }
    case BundleKind::SemistableDelta0:
      return slope_restriction(E, C);
    case BundleKind::Formal:
      break;
  }
  throw PreconditionError(
      "minimal slope is not computable from the numerical data of a formal "
      "bundle");
}

BundleModel pullback_blowup(const BundleModel& E, const SurfacePtr& target) {
  if (!target || target->kind != SurfaceKind::BlowUp ||
      target->parent->id != E.surface->id)
    throw InputError("pullback target is not a blow-up of " + E.surface->id);
  auto lift = [&](const NSClass& c) {
    RatVec coords = c.coords;
    coords.push_back(Rat(0));
    return ns_class(target, std::move(coords));
  };
  switch (E.kind) {
    case BundleKind::Decomposable: {
      std::vector<NSClass> summands;
      summands.reserve(E.summands.size());
      for (const auto& s : E.summands) summands.push_back(lift(s));
      return BundleModel::decomposable(target, std::move(summands));
    }
    case BundleKind::SemistableDelta0:
      return BundleModel::semistable_delta0(target, E.rank, lift(E.c1), E.c2);
    case BundleKind::Formal:
      return BundleModel::formal(target, E.rank, lift(E.c1), E.c2);
  }
  throw InputError("unknown bundle kind");
}

BundleModel pullback_ruling(int rank, long degree, const SurfacePtr& target) {
  if (!target || target->kind != SurfaceKind::Ruled)
    throw PreconditionError("ruling pullback onto a surface that is not ruled");
  NSClass c1 = ns_class(target, {Rat(0), Rat(degree)});
  return BundleModel::semistable_delta0(target, rank, std::move(c1), Rat(0));
}

BundleModel twist(const BundleModel& E, const NSClass& L) {
  require_surface(E, L);
  const Rat r(E.rank);
  NSClass c1 = E.c1 + L * r;
  Rat c2 = E.c2 + Rat(E.rank - 1) * intersect(E.c1, L) +
           r * Rat(E.rank - 1) / 2 * intersect(L, L);
  switch (E.kind) {
    case BundleKind::Decomposable: {
      std::vector<NSClass> summands;
      summands.reserve(E.summands.size());
      for (const auto& s : E.summands) summands.push_back(s + L);
      return BundleModel::decomposable(E.surface, std::move(summands));
    }
    case BundleKind::SemistableDelta0:
      return BundleModel::semistable_delta0(E.surface, E.rank, std::move(c1),
                                            std::move(c2));
    case BundleKind::Formal:
      return BundleModel::formal(E.surface, E.rank, std::move(c1),
                                 std::move(c2));
  }
  throw InputError("unknown bundle kind");
}

}  // namespace nefkit
