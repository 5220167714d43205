#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nefkit/bundle.hpp"
#include "nefkit/rational.hpp"
#include "nefkit/surface.hpp"

namespace nefkit {

using Json = nlohmann::ordered_json;

/// Declarative problem description, mirroring the JSON input schema.
/// Keys: surface.kind in {p2, ruled, blowup}; surface.genus and
/// surface.degW for ruled geometry; surface.site in {point, on_sigma}
/// for blow-ups (point implies a plane parent, on_sigma a ruled one);
/// bundle.kind in {decomposable, semistable_delta0, pullback_ruling,
/// formal} with the matching payload; optional bundle.twist; query in
/// {nefcone, negcone, seshadri, check}; options.minimize and
/// options.format. Unknown keys are rejected.
struct ProblemSpec {
  struct Surface {
    std::string kind;
    std::optional<long> genus;
    std::optional<long> deg_w;
    std::optional<std::string> site;
    bool operator==(const Surface&) const = default;
  };
  struct Bundle {
    std::string kind;
    std::optional<int> rank;
    std::vector<RatVec> summands;
    std::optional<int> base_rank;
    std::optional<long> base_degree;
    std::optional<RatVec> c1;
    std::optional<Rat> c2;
    std::optional<RatVec> twist;
    bool operator==(const Bundle&) const = default;
  };
  struct Options {
    bool minimize = false;
    std::string format = "text";
    bool operator==(const Options&) const = default;
  };

  Surface surface;
  Bundle bundle;
  std::string query;
  Options options;
  bool operator==(const ProblemSpec&) const = default;
};

/// Parses and validates a problem document. Throws InputError listing
/// every schema problem found, each tagged with its field path.
ProblemSpec parse_problem(const std::string& text);

Json serialize_problem(const ProblemSpec& spec);

/// Instantiated models for a validated spec.
struct BuiltProblem {
  SurfacePtr surface;
  BundleModel bundle;
};

BuiltProblem build_problem(const ProblemSpec& spec);

struct RunFlags {
  std::optional<bool> minimize;        // overrides options.minimize
  std::optional<std::string> format;   // overrides options.format
  bool with_crosscheck = false;        // seshadri only
};

/// Executes the query and renders the report (text or JSON, trailing
/// newline included). Throws on schema or computation errors.
std::string run_problem(const ProblemSpec& spec, const RunFlags& flags = {});

}  // namespace nefkit
