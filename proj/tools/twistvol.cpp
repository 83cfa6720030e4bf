// Command-line front end. Exit codes: 0 success, 1 usage, 2 unreadable or
// invalid input, 3 hypothesis or domain failure, 4 corpus mismatch.

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twistvol/augmentation.hpp"
#include "twistvol/bounds.hpp"
#include "twistvol/cone_engine.hpp"
#include "twistvol/corpus.hpp"
#include "twistvol/diagram.hpp"
#include "twistvol/errors.hpp"
#include "twistvol/generators.hpp"
#include "twistvol/twist_analysis.hpp"

#ifndef TWISTVOL_DEFAULT_CORPUS
#define TWISTVOL_DEFAULT_CORPUS "corpus"
#endif

using namespace twistvol;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kInapplicable = 3, kMismatch = 4 };

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

std::string fmt_error(double v) {
  std::ostringstream s;
  s << std::setprecision(2) << v;
  return s.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string list(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "[" + s + "]";
}

int analyze(const std::string& path, bool as_json) {
  const PlanarDiagram d = load_diagram(path);
  const auto regions = twist_regions(d);
  std::vector<std::size_t> counts;
  for (const TwistRegion& r : regions) counts.push_back(r.crossing_count());
  std::size_t bigons = 0;
  for (const Face& f : d.faces()) bigons += f.is_bigon() ? 1 : 0;
  std::optional<bool> prime, reduced;
  if (d.crossing_count() > 0 && d.is_connected()) {
    prime = is_prime(d).prime;
    reduced = is_twist_reduced(d).twist_reduced;
  }

  if (as_json) {
    json j = {{"name", d.name()},          {"crossings", d.crossing_count()}, {"components", d.component_count()},
              {"faces", d.face_count()},   {"bigons", bigons},                {"twist_count", regions.size()},
              {"regions", counts},
              {"prime", prime ? json(*prime) : json(nullptr)},
              {"twist_reduced", reduced ? json(*reduced) : json(nullptr)}};
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  auto flag = [](const std::optional<bool>& v) { return v ? yes_no(*v) : std::string("n/a"); };
  if (!d.name().empty()) std::cout << d.name() << '\n';
  std::cout << "crossings=" << d.crossing_count() << ", components=" << d.component_count()
            << ", faces=" << d.face_count() << ", bigons=" << bigons << '\n';
  std::cout << "tw=" << regions.size() << ", regions=" << list(counts) << ", prime=" << flag(prime)
            << ", twist-reduced=" << flag(reduced) << '\n';
  return kOk;
}

int bounds(const std::string& path, bool as_json, std::optional<int> threshold) {
  const PlanarDiagram d = load_diagram(path);
  const VolumeBoundReport r = volume_bounds(d, threshold);
  if (as_json)
    std::cout << report_to_json(r) << '\n';
  else
    std::cout << report_table(r);
  if (r.gate.threshold_overridden)
    std::cerr << "note: threshold " << r.gate.threshold << " replaces the default " << crossing_threshold()
              << "; this is a what-if run\n";
  return kOk;
}

int check(const std::string& path, bool as_json, std::optional<int> threshold) {
  const PlanarDiagram d = load_diagram(path);
  const DiagramGate g = gate(d, threshold.value_or(crossing_threshold()));
  if (as_json) {
    std::cout << json{{"passed", g.passed()}, {"failures", g.failures}}.dump(2) << '\n';
  } else {
    std::cout << (g.passed() ? "PASS" : "FAIL") << '\n';
    for (const std::string& f : g.failures) std::cout << "  " << f << '\n';
  }
  return g.passed() ? kOk : kInapplicable;
}

int hk_integral(std::optional<double> z_hat, std::optional<int> worst_case, bool as_json) {
  if (worst_case) {
    if (*worst_case < 1) throw DomainError("--worst-case needs at least one cusp");
    const auto one = cone::delta_v_per_cusp(cone::min_z());
    const double total = cone::delta_v_bound(static_cast<std::size_t>(*worst_case));
    const double error = one.error_estimate * *worst_case;
    if (as_json)
      std::cout << json{{"cusps", *worst_case}, {"value", total}, {"error_estimate", error}}.dump(2) << '\n';
    else
      std::cout << "delta V <= " << fmt(total) << " +- " << fmt_error(error) << " (" << *worst_case
                << " cusps, z_hat = " << fmt(cone::min_z()) << ")\n";
    return kOk;
  }
  const double z = z_hat.value_or(cone::min_z());
  const auto q = cone::delta_v_per_cusp(z);
  if (as_json)
    std::cout << json{{"z_hat", z},
                      {"value", q.value},
                      {"error_estimate", q.error_estimate},
                      {"subintervals", q.subinterval_count}}
                     .dump(2)
              << '\n';
  else
    std::cout << "integral from " << fmt(z) << " to 1 = " << fmt(q.value) << " +- " << fmt_error(q.error_estimate)
              << '\n';
  return kOk;
}

int hk_rho(double l_hat, bool as_json) {
  const double rho = cone::solve_rho_hat(l_hat);
  const double z = std::tanh(rho);
  const double per_cusp = cone::delta_v_per_cusp(z).value;
  if (as_json)
    std::cout << json{{"l_hat", l_hat}, {"rho_hat", rho}, {"z_hat", z}, {"delta_v", per_cusp}}.dump(2) << '\n';
  else
    std::cout << "rho_hat = " << fmt(rho) << ", z_hat = " << fmt(z) << ", delta V <= " << fmt(per_cusp) << '\n';
  return kOk;
}

int corpus(std::string dir, bool as_json) {
  if (dir.empty()) {
    const char* env = std::getenv("TWISTVOL_CORPUS");
    dir = env && *env ? env : TWISTVOL_DEFAULT_CORPUS;
  }
  const auto entries = load_corpus(dir);
  const auto results = run_corpus(entries);
  std::size_t failed = 0;
  json out = json::array();
  for (const CorpusResult& r : results) {
    if (!r.passed()) ++failed;
    if (as_json) {
      out.push_back({{"name", r.name}, {"passed", r.passed()}, {"mismatches", r.mismatches}});
      continue;
    }
    std::cout << (r.passed() ? "ok    " : "FAIL  ") << r.name << '\n';
    for (const std::string& m : r.mismatches) std::cout << "        " << m << '\n';
  }
  if (as_json)
    std::cout << out.dump(2) << '\n';
  else
    std::cout << results.size() - failed << "/" << results.size() << " entries match\n";
  return failed == 0 ? kOk : kMismatch;
}

int generate(const std::string& family, const std::vector<int>& terms, const std::string& name, bool as_json) {
  const PlanarDiagram d = family == "rational" ? rational_diagram(terms, name) : pretzel_diagram(terms, name);
  std::cout << (as_json ? to_pd_json(d) + "\n" : to_pd_text(d));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twist regions, diagram checks and volume bounds for knot and link diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print JSON instead of text");

  std::string path;
  std::optional<int> threshold;

  auto* analyze_cmd = app.add_subcommand("analyze", "Crossings, twist regions, primeness and faces");
  analyze_cmd->add_option("file", path, "PD code file (.json for the JSON form)")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "Volume bounds report");
  bounds_cmd->add_option("file", path, "PD code file")->required();
  bounds_cmd->add_option("--threshold", threshold, "Crossings required per twist region (what-if; default 113)");

  auto* check_cmd = app.add_subcommand("check", "Check the hypotheses of the lower bound; exit 3 if any fails");
  check_cmd->add_option("file", path, "PD code file")->required();
  check_cmd->add_option("--threshold", threshold, "Crossings required per twist region (what-if; default 113)");

  std::optional<double> z_hat;
  std::optional<int> worst_case;
  auto* integral_cmd = app.add_subcommand("hk-integral", "Volume change integral for one cusp, or the worst case");
  auto* zhat_opt = integral_cmd->add_option("--zhat", z_hat, "Lower limit tanh(rho_hat); default tanh(0.531)");
  integral_cmd->add_option("--worst-case", worst_case, "Worst-case total for this many cusps")->excludes(zhat_opt);

  double l_hat = 0;
  auto* rho_cmd = app.add_subcommand("hk-rho", "Final tube radius for a normalized length");
  rho_cmd->add_option("--lhat", l_hat, "Normalized length of the filling slope")->required();

  std::string corpus_dir;
  auto* corpus_cmd = app.add_subcommand("corpus", "Check the reference corpus (TWISTVOL_CORPUS overrides the default)");
  corpus_cmd->add_option("dir", corpus_dir, "Corpus directory");

  std::string family;
  std::vector<int> terms;
  std::string name;
  auto* generate_cmd = app.add_subcommand("generate", "Print a rational or pretzel diagram");
  generate_cmd->add_option("family", family, "rational or pretzel")
      ->required()
      ->check(CLI::IsMember({"rational", "pretzel"}));
  generate_cmd->add_option("terms", terms, "Twist counts")->required()->allow_extra_args();
  generate_cmd->add_option("--name", name, "Diagram name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) return analyze(path, as_json);
    if (*bounds_cmd) return bounds(path, as_json, threshold);
    if (*check_cmd) return check(path, as_json, threshold);
    if (*integral_cmd) return hk_integral(z_hat, worst_case, as_json);
    if (*rho_cmd) return hk_rho(l_hat, as_json);
    if (*corpus_cmd) return corpus(corpus_dir, as_json);
    if (*generate_cmd) return generate(family, terms, name, as_json);
  } catch (const InapplicableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInapplicable;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInapplicable;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
