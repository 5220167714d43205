#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nefkit/errors.hpp"
#include "nefkit/problem.hpp"

namespace {

int run_query(const std::string& query, const std::string& path,
              const std::optional<bool>& minimize,
              const std::optional<std::string>& format, bool with_crosscheck) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 1;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  try {
    nefkit::ProblemSpec spec = nefkit::parse_problem(buffer.str());
    if (spec.query != query)
      throw nefkit::InputError("query: file declares \"" + spec.query +
                               "\" but the " + query +
                               " subcommand was invoked");
    nefkit::RunFlags flags;
    flags.minimize = minimize;
    flags.format = format;
    flags.with_crosscheck = with_crosscheck;
    std::cout << nefkit::run_problem(spec, flags);
    return 0;
  } catch (const nefkit::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact nef cones, curve cones and Seshadri constants of projective "
      "bundles over catalogued surfaces"};
  app.require_subcommand(1);

  struct Common {
    std::string file;
    bool minimize = false;
    bool minimize_set = false;
    std::string format;
  };

  auto add_common = [](CLI::App* cmd, Common& c) {
    cmd->add_option("file", c.file, "problem description (JSON)")->required();
    cmd->add_flag("--minimize", c.minimize,
                  "drop redundant inequality rows from the report");
    cmd->add_option("--format", c.format, "report format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  Common nef, neg, ses, chk;
  bool with_crosscheck = false;
  CLI::App* cmd_nef = app.add_subcommand("nefcone", "nef cone of P(E)");
  add_common(cmd_nef, nef);
  CLI::App* cmd_neg =
      app.add_subcommand("negcone", "closed cone of curves of P(E)");
  add_common(cmd_neg, neg);
  CLI::App* cmd_ses = app.add_subcommand("seshadri", "Seshadri constant");
  add_common(cmd_ses, ses);
  cmd_ses->add_flag("--crosscheck", with_crosscheck,
                    "also run the cone-optimization route and compare");
  CLI::App* cmd_chk =
      app.add_subcommand("check", "discriminant and slope table");
  add_common(cmd_chk, chk);

  CLI11_PARSE(app, argc, argv);

  auto dispatch = [&](const char* name, Common& c, CLI::App* cmd,
                      bool crosscheck) {
    std::optional<bool> minimize;
    if (cmd->count("--minimize")) minimize = true;
    std::optional<std::string> format;
    if (!c.format.empty()) format = c.format;
    return run_query(name, c.file, minimize, format, crosscheck);
  };

  if (cmd_nef->parsed()) return dispatch("nefcone", nef, cmd_nef, false);
  if (cmd_neg->parsed()) return dispatch("negcone", neg, cmd_neg, false);
  if (cmd_ses->parsed()) return dispatch("seshadri", ses, cmd_ses, with_crosscheck);
  return dispatch("check", chk, cmd_chk, false);
}
