#include "nefkit/problem.hpp"

#include <algorithm>
#include <sstream>

#include "nefkit/errors.hpp"
#include "nefkit/nefcone.hpp"
#include "nefkit/seshadri.hpp"

namespace nefkit {

namespace {

struct SchemaErrors {
  std::vector<std::string> messages;
  void add(const std::string& path, const std::string& what) {
    messages.push_back(path + ": " + what);
  }
  void raise_if_any() const {
    if (messages.empty()) return;
    std::string joined = "schema error";
    for (const auto& m : messages) joined += "\n  " + m;
    throw InputError(joined);
  }
};

void reject_unknown_keys(const Json& obj, const std::string& path,
                         const std::vector<std::string>& allowed,
                         SchemaErrors& errs) {
  for (const auto& [key, value] : obj.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      errs.add(path + "." + key, "unknown key");
}

std::optional<Rat> read_rat(const Json& v, const std::string& path,
                            SchemaErrors& errs) {
  if (v.is_number_integer() || v.is_number_unsigned())
    return Rat(Int(v.dump()));
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const InputError& e) {
      errs.add(path, e.what());
      return std::nullopt;
    }
  }
  errs.add(path, "expected an integer or a \"p/q\" string (floats are rejected)");
  return std::nullopt;
}

std::optional<RatVec> read_coords(const Json& v, const std::string& path,
                                  std::size_t expected, SchemaErrors& errs) {
  if (!v.is_array()) {
    errs.add(path, "expected a coordinate array");
    return std::nullopt;
  }
  if (v.size() != expected) {
    errs.add(path, "expected " + std::to_string(expected) +
                       " coordinates, got " + std::to_string(v.size()));
    return std::nullopt;
  }
  RatVec out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto r = read_rat(v[i], path + "[" + std::to_string(i) + "]", errs);
    if (!r) return std::nullopt;
    out.push_back(std::move(*r));
  }
  return out;
}

std::optional<long> read_long(const Json& v, const std::string& path,
                              SchemaErrors& errs) {
  if (v.is_number_integer() || v.is_number_unsigned())
    return v.get<long>();
  errs.add(path, "expected an integer");
  return std::nullopt;
}

std::size_t ns_rank_of(const ProblemSpec::Surface& s) {
  if (s.kind == "p2") return 1;
  if (s.kind == "ruled") return 2;
  if (s.kind == "blowup") return s.site == "on_sigma" ? 3 : 2;
  return 0;
}

Json rat_array(const RatVec& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(format_rat(x));
  return arr;
}

std::string result_method_name(SeshadriMethod m) {
  return m == SeshadriMethod::ClosedForm ? "closed-form" : "cone-lp";
}

Json seshadri_json(const SeshadriResult& r) {
  Json out;
  if (r.exact)
    out["result"] = Json{{"exact", format_rat(r.lo)}};
  else
    out["result"] =
        Json{{"bounds", Json::array({format_rat(r.lo), format_rat(r.hi)})}};
  out["method"] = result_method_name(r.method);
  out["witness"] = r.witness;
  return out;
}

void seshadri_text(std::ostream& out, const SeshadriResult& r) {
  if (r.exact)
    out << "result: exact " << format_rat(r.lo) << "\n";
  else
    out << "result: bounds [" << format_rat(r.lo) << ", " << format_rat(r.hi)
        << "]\n";
  out << "method: " << result_method_name(r.method) << "\n";
  for (const auto& w : r.witness) out << "  " << w << "\n";
}

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("schema error\n  document: ") + e.what());
  }

  SchemaErrors errs;
  if (!doc.is_object()) {
    errs.add("document", "expected a JSON object");
    errs.raise_if_any();
  }
  reject_unknown_keys(doc, "document",
                      {"surface", "bundle", "query", "options"}, errs);

  ProblemSpec spec;

  // --- surface ---------------------------------------------------------
  if (!doc.contains("surface") || !doc["surface"].is_object()) {
    errs.add("surface", "missing object");
  } else {
    const Json& s = doc["surface"];
    reject_unknown_keys(s, "surface", {"kind", "genus", "degW", "site"}, errs);
    spec.surface.kind = s.value("kind", "");
    const bool ruled_keys_needed =
        spec.surface.kind == "ruled" ||
        (spec.surface.kind == "blowup" && s.value("site", "") == "on_sigma");
    if (spec.surface.kind != "p2" && spec.surface.kind != "ruled" &&
        spec.surface.kind != "blowup")
      errs.add("surface.kind", "expected one of p2|ruled|blowup");
    if (spec.surface.kind == "blowup") {
      const std::string site = s.value("site", "");
      if (site != "point" && site != "on_sigma")
        errs.add("surface.site", "expected one of point|on_sigma");
      else
        spec.surface.site = site;
    } else if (s.contains("site")) {
      errs.add("surface.site", "only meaningful for blow-ups");
    }
    if (ruled_keys_needed) {
      if (!s.contains("genus"))
        errs.add("surface.genus", "missing (required for ruled geometry)");
      else
        spec.surface.genus = read_long(s["genus"], "surface.genus", errs);
      if (spec.surface.genus && *spec.surface.genus < 0)
        errs.add("surface.genus", "must be nonnegative");
      if (!s.contains("degW"))
        errs.add("surface.degW", "missing (required for ruled geometry)");
      else
        spec.surface.deg_w = read_long(s["degW"], "surface.degW", errs);
    } else {
      if (s.contains("genus")) errs.add("surface.genus", "not applicable");
      if (s.contains("degW")) errs.add("surface.degW", "not applicable");
    }
  }

  const std::size_t ns_rank = ns_rank_of(spec.surface);

  // --- bundle ----------------------------------------------------------
  if (!doc.contains("bundle") || !doc["bundle"].is_object()) {
    errs.add("bundle", "missing object");
  } else {
    const Json& b = doc["bundle"];
    reject_unknown_keys(b, "bundle",
                        {"kind", "rank", "summands", "base_rank", "base_degree",
                         "c1", "c2", "twist"},
                        errs);
    spec.bundle.kind = b.value("kind", "");
    const std::string k = spec.bundle.kind;
    if (k != "decomposable" && k != "semistable_delta0" &&
        k != "pullback_ruling" && k != "formal")
      errs.add("bundle.kind",
               "expected one of decomposable|semistable_delta0|"
               "pullback_ruling|formal");

    if (b.contains("rank")) {
      auto r = read_long(b["rank"], "bundle.rank", errs);
      if (r) {
        if (*r < 2)
          errs.add("bundle.rank", "must be at least 2");
        else
          spec.bundle.rank = static_cast<int>(*r);
      }
    }

    if (k == "decomposable") {
      if (!b.contains("summands") || !b["summands"].is_array() ||
          b["summands"].size() < 2) {
        errs.add("bundle.summands", "expected an array of at least two classes");
      } else if (ns_rank > 0) {
        for (std::size_t i = 0; i < b["summands"].size(); ++i) {
          auto c = read_coords(b["summands"][i],
                               "bundle.summands[" + std::to_string(i) + "]",
                               ns_rank, errs);
          if (c) spec.bundle.summands.push_back(std::move(*c));
        }
        if (spec.bundle.rank &&
            static_cast<std::size_t>(*spec.bundle.rank) !=
                b["summands"].size())
          errs.add("bundle.rank", "does not match the summand count");
      }
      for (const char* key : {"base_rank", "base_degree", "c1", "c2"})
        if (b.contains(key))
          errs.add(std::string("bundle.") + key,
                   "not applicable to a decomposable bundle");
    } else if (k == "semistable_delta0" || k == "formal") {
      if (!spec.bundle.rank) errs.add("bundle.rank", "missing");
      if (!b.contains("c1"))
        errs.add("bundle.c1", "missing");
      else if (ns_rank > 0)
        spec.bundle.c1 = read_coords(b["c1"], "bundle.c1", ns_rank, errs);
      if (!b.contains("c2"))
        errs.add("bundle.c2", "missing");
      else
        spec.bundle.c2 = read_rat(b["c2"], "bundle.c2", errs);
      for (const char* key : {"summands", "base_rank", "base_degree"})
        if (b.contains(key))
          errs.add(std::string("bundle.") + key,
                   "not applicable to this bundle kind");
    } else if (k == "pullback_ruling") {
      if (!b.contains("base_rank")) {
        errs.add("bundle.base_rank", "missing");
      } else {
        auto r = read_long(b["base_rank"], "bundle.base_rank", errs);
        if (r) {
          if (*r < 2)
            errs.add("bundle.base_rank", "must be at least 2");
          else
            spec.bundle.base_rank = static_cast<int>(*r);
        }
      }
      if (!b.contains("base_degree"))
        errs.add("bundle.base_degree", "missing");
      else
        spec.bundle.base_degree =
            read_long(b["base_degree"], "bundle.base_degree", errs);
      if (spec.bundle.rank && spec.bundle.base_rank &&
          *spec.bundle.rank != *spec.bundle.base_rank)
        errs.add("bundle.rank", "does not match base_rank");
      if (spec.surface.kind == "p2" ||
          (spec.surface.kind == "blowup" && spec.surface.site == "point"))
        errs.add("bundle.kind",
                 "pullback_ruling needs a ruled surface (possibly blown up on "
                 "the section)");
      for (const char* key : {"summands", "c1", "c2"})
        if (b.contains(key))
          errs.add(std::string("bundle.") + key,
                   "not applicable to a ruling pullback");
    }

    if (b.contains("twist") && ns_rank > 0)
      spec.bundle.twist = read_coords(b["twist"], "bundle.twist", ns_rank, errs);
  }

  // --- query / options -------------------------------------------------
  if (!doc.contains("query") || !doc["query"].is_string()) {
    errs.add("query", "missing");
  } else {
    spec.query = doc["query"].get<std::string>();
    if (spec.query != "nefcone" && spec.query != "negcone" &&
        spec.query != "seshadri" && spec.query != "check")
      errs.add("query", "expected one of nefcone|negcone|seshadri|check");
  }
  if (doc.contains("options")) {
    const Json& o = doc["options"];
    if (!o.is_object()) {
      errs.add("options", "expected an object");
    } else {
      reject_unknown_keys(o, "options", {"minimize", "format"}, errs);
      if (o.contains("minimize")) {
        if (!o["minimize"].is_boolean())
          errs.add("options.minimize", "expected a boolean");
        else
          spec.options.minimize = o["minimize"].get<bool>();
      }
      if (o.contains("format")) {
        const std::string f = o["format"].is_string() ? o["format"].get<std::string>() : "";
        if (f != "text" && f != "json")
          errs.add("options.format", "expected text|json");
        else
          spec.options.format = f;
      }
    }
  }

  errs.raise_if_any();
  return spec;
}

Json serialize_problem(const ProblemSpec& spec) {
  Json s;
  s["kind"] = spec.surface.kind;
  if (spec.surface.genus) s["genus"] = *spec.surface.genus;
  if (spec.surface.deg_w) s["degW"] = *spec.surface.deg_w;
  if (spec.surface.site) s["site"] = *spec.surface.site;

  Json b;
  b["kind"] = spec.bundle.kind;
  if (spec.bundle.rank) b["rank"] = *spec.bundle.rank;
  if (!spec.bundle.summands.empty()) {
    Json arr = Json::array();
    for (const auto& c : spec.bundle.summands) arr.push_back(rat_array(c));
    b["summands"] = arr;
  }
  if (spec.bundle.base_rank) b["base_rank"] = *spec.bundle.base_rank;
  if (spec.bundle.base_degree) b["base_degree"] = *spec.bundle.base_degree;
  if (spec.bundle.c1) b["c1"] = rat_array(*spec.bundle.c1);
  if (spec.bundle.c2) b["c2"] = format_rat(*spec.bundle.c2);
  if (spec.bundle.twist) b["twist"] = rat_array(*spec.bundle.twist);

  Json out;
  out["surface"] = s;
  out["bundle"] = b;
  out["query"] = spec.query;
  out["options"] =
      Json{{"minimize", spec.options.minimize}, {"format", spec.options.format}};
  return out;
}

BuiltProblem build_problem(const ProblemSpec& spec) {
  SurfacePtr X;
  if (spec.surface.kind == "p2") {
    X = projective_plane();
  } else if (spec.surface.kind == "ruled") {
    X = ruled_surface(*spec.surface.genus, *spec.surface.deg_w);
  } else {
    if (*spec.surface.site == "point") {
      X = blow_up(projective_plane(), BlowUpSite::GenericPoint);
    } else {
      X = blow_up(ruled_surface(*spec.surface.genus, *spec.surface.deg_w),
                  BlowUpSite::OnSigma);
    }
  }

  std::optional<BundleModel> E;
  if (spec.bundle.kind == "decomposable") {
    std::vector<NSClass> summands;
    summands.reserve(spec.bundle.summands.size());
    for (const auto& c : spec.bundle.summands) summands.push_back(ns_class(X, c));
    E = BundleModel::decomposable(X, std::move(summands));
  } else if (spec.bundle.kind == "semistable_delta0") {
    E = BundleModel::semistable_delta0(X, *spec.bundle.rank,
                                       ns_class(X, *spec.bundle.c1),
                                       *spec.bundle.c2);
  } else if (spec.bundle.kind == "formal") {
    E = BundleModel::formal(X, *spec.bundle.rank, ns_class(X, *spec.bundle.c1),
                            *spec.bundle.c2);
  } else {  // pullback_ruling, possibly transported over a blow-up
    if (X->kind == SurfaceKind::Ruled) {
      E = pullback_ruling(*spec.bundle.base_rank, *spec.bundle.base_degree, X);
    } else {
      BundleModel on_parent = pullback_ruling(*spec.bundle.base_rank,
                                              *spec.bundle.base_degree,
                                              X->parent);
      E = pullback_blowup(on_parent, X);
    }
  }
  if (spec.bundle.twist) E = twist(*E, ns_class(X, *spec.bundle.twist));
  return BuiltProblem{X, std::move(*E)};
}

namespace {

NefConeResult build_cone(const BuiltProblem& p) {
  switch (p.bundle.kind) {
    case BundleKind::Decomposable:
      return nef_cone_decomposable(p.surface, p.bundle);
    case BundleKind::SemistableDelta0:
      return nef_cone_semistable(p.surface, p.bundle);
    case BundleKind::Formal:
      break;
  }
  throw PreconditionError(
      "no nef-cone construction applies to a formal bundle: declare it "
      "decomposable or semistable with vanishing discriminant");
}

std::string render_nefcone(const BuiltProblem& p, bool minimize,
                           const std::string& format) {
  const NefConeResult result = build_cone(p);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < result.cone.halfspaces.size(); ++i)
    if (!minimize || !result.redundant[i]) order.push_back(i);

  if (format == "json") {
    Json out;
    out["query"] = "nefcone";
    out["surface"] = p.surface->id;
    out["bundle"] = p.bundle.id;
    out["method"] = method_name(result.method);
    out["coords"] = result.cone.coord_names;
    out["minimize"] = minimize;
    Json rows = Json::array();
    for (const auto i : order) {
      const auto& h = result.cone.halfspaces[i];
      rows.push_back(Json{{"normal", rat_array(h.normal)},
                          {"label", h.label},
                          {"redundant", static_cast<bool>(result.redundant[i])},
                          {"text", format_halfspace(h, result.cone.coord_names)}});
    }
    out["rows"] = rows;
    return out.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "query: nefcone\nsurface: " << p.surface->id
      << "\nbundle: " << p.bundle.id << "\nmethod: " << method_name(result.method)
      << "\ncoords:";
  for (const auto& n : result.cone.coord_names) out << " " << n;
  out << "\nrows:\n";
  for (const auto i : order) {
    const auto& h = result.cone.halfspaces[i];
    out << "  " << format_halfspace(h, result.cone.coord_names);
    if (!h.label.empty()) out << "  [" << h.label << "]";
    if (result.redundant[i]) out << "  (redundant)";
    out << "\n";
  }
  return out.str();
}

std::string render_negcone(const BuiltProblem& p, const std::string& format) {
  const NefConeResult result = build_cone(p);
  if (format == "json") {
    Json out;
    out["query"] = "negcone";
    out["surface"] = p.surface->id;
    out["bundle"] = p.bundle.id;
    out["method"] = method_name(result.method);
    out["coords"] = result.cone.coord_names;
    Json gens = Json::array();
    for (std::size_t i = 0; i < result.cycles.size(); ++i) {
      const auto& z = result.cycles[i];
      gens.push_back(Json{{"label", z.label},
                          {"fibre_coeff", format_rat(z.fibre_coeff)},
                          {"base", rat_array(z.base.coords)},
                          {"functional",
                           rat_array(result.generators.rays[i].coords)}});
    }
    out["generators"] = gens;
    return out.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "query: negcone\nsurface: " << p.surface->id
      << "\nbundle: " << p.bundle.id << "\nmethod: " << method_name(result.method)
      << "\ngenerators (fibre coefficient; base class; functional):\n";
  for (std::size_t i = 0; i < result.cycles.size(); ++i) {
    const auto& z = result.cycles[i];
    out << "  [" << z.label << "] " << format_rat(z.fibre_coeff) << "; "
        << format_vec(z.base.coords) << "; "
        << format_vec(result.generators.rays[i].coords) << "\n";
  }
  return out.str();
}

std::string render_seshadri(const BuiltProblem& p, bool with_crosscheck,
                            const std::string& format) {
  SeshadriResult closed;
  if (p.surface->kind == SurfaceKind::ProjectivePlane)
    closed = seshadri_p2(p.bundle);
  else if (p.surface->kind == SurfaceKind::Ruled)
    closed = seshadri_ruled(p.bundle, BlowUpSite::OnSigma);
  else
    throw PreconditionError(
        "Seshadri constants are catalogued on the plane (any point) and on "
        "ruled surfaces (points of sigma); got " + p.surface->id);

  std::optional<CrosscheckReport> xc;
  if (with_crosscheck) xc = crosscheck(p.bundle);

  if (format == "json") {
    Json out;
    out["query"] = "seshadri";
    out["surface"] = p.surface->id;
    out["bundle"] = p.bundle.id;
    out.update(seshadri_json(closed));
    if (xc) {
      Json check = seshadri_json(xc->cone_route);
      check["agree"] = xc->agree;
      check["detail"] = xc->detail;
      out["crosscheck"] = check;
    }
    return out.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "query: seshadri\nsurface: " << p.surface->id
      << "\nbundle: " << p.bundle.id << "\n";
  seshadri_text(out, closed);
  if (xc) {
    out << "crosscheck:\n";
    seshadri_text(out, xc->cone_route);
    out << (xc->agree ? "agree: yes" : "agree: NO") << " (" << xc->detail
        << ")\n";
  }
  return out.str();
}

std::string render_check(const BuiltProblem& p, const std::string& format) {
  const Rat delta = discriminant(p.bundle);
  struct RowData {
    std::string curve;
    Rat degree, slope;
    std::optional<Rat> mu_min;
  };
  std::vector<RowData> rows;
  for (const auto& [label, C] : p.surface->ne_generators) {
    RowData r;
    r.curve = label;
    r.degree = deg_restriction(p.bundle, C);
    r.slope = slope_restriction(p.bundle, C);
    if (p.bundle.kind != BundleKind::Formal)
      r.mu_min = mu_min_restriction(p.bundle, C);
    rows.push_back(std::move(r));
  }

  if (format == "json") {
    Json out;
    out["query"] = "check";
    out["surface"] = p.surface->id;
    out["bundle"] = p.bundle.id;
    out["rank"] = p.bundle.rank;
    out["delta"] = format_rat(delta);
    Json table = Json::array();
    for (const auto& r : rows) {
      Json row{{"curve", r.curve},
               {"degree", format_rat(r.degree)},
               {"slope", format_rat(r.slope)}};
      row["mu_min"] = r.mu_min ? Json(format_rat(*r.mu_min)) : Json(nullptr);
      table.push_back(row);
    }
    out["table"] = table;
    return out.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "query: check\nsurface: " << p.surface->id
      << "\nbundle: " << p.bundle.id << "\nrank: " << p.bundle.rank
      << "\ndelta: " << format_rat(delta)
      << "\ncurve | degree | slope | mu_min\n";
  for (const auto& r : rows) {
    out << r.curve << " | " << format_rat(r.degree) << " | "
        << format_rat(r.slope) << " | "
        << (r.mu_min ? format_rat(*r.mu_min) : std::string("n/a")) << "\n";
  }
  return out.str();
}

}  // namespace

std::string run_problem(const ProblemSpec& spec, const RunFlags& flags) {
  const BuiltProblem p = build_problem(spec);
  const bool minimize = flags.minimize.value_or(spec.options.minimize);
  const std::string format = flags.format.value_or(spec.options.format);
  if (format != "text" && format != "json")
    throw InputError("options.format: expected text|json");

  if (spec.query == "nefcone") return render_nefcone(p, minimize, format);
  if (spec.query == "negcone") return render_negcone(p, format);
  if (spec.query == "seshadri")
    return render_seshadri(p, flags.with_crosscheck, format);
  if (spec.query == "check") return render_check(p, format);
  throw InputError("query: expected one of nefcone|negcone|seshadri|check");
}

}  // namespace nefkit
