// Command-line front end: verify, bracket, reduce, apply.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "threept/current.hpp"
#include "threept/kahler.hpp"
#include "threept/realization.hpp"
#include "threept/text.hpp"
#include "threept/verify.hpp"

namespace {

using namespace threept;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct HeisOptions {
  std::string lambda = "1", mu = "0", nu = "1", varkappa = "1", kappa0 = "1", chi1 = "0", c = "0";
  std::string variant = "derived";

  HeisParams params() const {
    HeisParams p;
    p.lambda = Rational::parse(lambda);
    p.mu = Rational::parse(mu);
    p.nu = Rational::parse(nu);
    p.varkappa = Rational::parse(varkappa);
    p.kappa0 = Rational::parse(kappa0);
    p.chi1 = Rational::parse(chi1);
    p.c = Rational::parse(c);
    if (variant == "derived") {
      p.variant = HeisVariant::Derived;
    } else if (variant == "paper") {
      p.variant = HeisVariant::Paper;
    } else {
      throw ConfigError("--variant must be derived or paper");
    }
    return p;
  }
};

int cmd_verify(const std::string& config_path, const std::string& out_path, const CLI::App& sub,
               const std::vector<std::string>& suites, const std::vector<int>& r, const std::vector<std::string>& kappa0,
               const std::vector<int>& window, int degree, const std::string& variant, int max_details) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot read config file '" + config_path + "'");
    try {
      j = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  }
  if (sub.count("--suites")) j["suites"] = suites;
  if (sub.count("--r")) j["r"] = r;
  if (sub.count("--kappa0")) j["kappa0"] = kappa0;
  if (sub.count("--window")) j["window"] = window;
  if (sub.count("--degree")) j["degree_max"] = degree;
  if (sub.count("--variant")) j["heis_variant"] = variant;
  if (sub.count("--max-details")) j["max_details"] = max_details;
  const VerifyConfig cfg = VerifyConfig::from_json(j);

  const Report rep = run(cfg);
  const std::string text = rep.dump();
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write report '" + out_path + "'");
    out << text;
  }
  std::cerr << "checks: " << rep.checks() << ", failures: " << rep.failures()
            << ", asserted failures: " << rep.asserted_failures() << "\n";
  return rep.passed() ? 0 : kExitFailure;
}

int cmd_bracket(const std::string& x, const std::string& y) {
  const CurrentElem z = bracket(CurrentElem::parse(x), CurrentElem::parse(y));
  std::cout << z.loop_str() << "\n";
  if (!z.central_part().is_zero()) std::cout << "central: " << z.central_part().str() << "\n";
  return 0;
}

int cmd_reduce(const std::string& f, const std::string& g) {
  std::cout << pairing(RingElem::parse(f), RingElem::parse(g)).str() << "\n";
  return 0;
}

int cmd_apply(const std::string& op, int m, const std::string& state, int r, const HeisOptions& h) {
  const FockVector v = FockVector::parse(state);
  FockVector out;
  const OscConfig oc{r};
  if (r != 0 && r != 1) throw ConfigError("--r must be 0 or 1");
  if (op == "a" || op == "a*" || op == "a1" || op == "a1*") {
    const OscKind k = op == "a" ? OscKind::A : op == "a*" ? OscKind::AStar : op == "a1" ? OscKind::A1 : OscKind::A1Star;
    out = apply_osc(k, m, v, oc);
  } else if (op == "b" || op == "b1") {
    out = apply_heis(op == "b" ? HeisKind::B : HeisKind::B1, m, v, h.params());
  } else {
    const Gen g = parse_gen(op);
    if (g == Gen::w0 || g == Gen::w1) {
      out = tau_extend(CurrentElem::generator(g), v, RealizationConfig::make(r, h.params()));
    } else {
      out = apply_mode(g, m, v, RealizationConfig::make(r, h.params()));
    }
  }
  std::cout << out.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the three-point sl(2) current algebra and its free-field realization"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run verification suites; JSON config in, JSON report out");
  std::string config_path, out_path;
  std::vector<std::string> suites, kappa0;
  std::vector<int> r, window;
  int degree = 2, max_details = 5;
  std::string variant;
  verify->add_option("--config", config_path, "JSON config file");
  verify->add_option("--out", out_path, "Report file (default: stdout)");
  verify->add_option("--suites", suites, "Suites to run")->delimiter(',');
  verify->add_option("--r", r, "Normal-ordering conventions")->delimiter(',');
  verify->add_option("--kappa0", kappa0, "Central parameters kappa0")->delimiter(',');
  verify->add_option("--window", window, "Realization mode window: lo hi")->expected(2);
  verify->add_option("--degree", degree, "Realization state degree bound");
  verify->add_option("--variant", variant, "Heisenberg variant: derived or paper");
  verify->add_option("--max-details", max_details, "Failure details kept per record");

  auto* br = app.add_subcommand("bracket", "Bracket of two current-algebra elements");
  std::string bx, by;
  br->add_option("x", bx, "e.g. \"h1[0]\" or \"e[t^2 - 3*t^-1*u]\"")->required();
  br->add_option("y", by)->required();

  auto* red = app.add_subcommand("reduce", "Class of f dg in the Kaehler differentials modulo exact forms");
  std::string rf, rg;
  red->add_option("f", rf, "Ring element, e.g. \"t^1*u\"")->required();
  red->add_option("g", rg)->required();

  auto* ap = app.add_subcommand("apply", "Apply one mode to a Fock vector");
  std::string aop, astate;
  int am = 0, ar = 0;
  HeisOptions ho;
  ap->add_option("op", aop, "e, f, h, e1, f1, h1, w0, w1, a, a*, a1, a1*, b or b1")->required();
  ap->add_option("m", am, "Mode index")->required();
  ap->add_option("state", astate, "Fock vector, e.g. \"x_-1*y1_-2*v1 + 1/2*v0\"")->required();
  ap->add_option("--r", ar, "Normal-ordering convention (0 or 1)");
  ap->add_option("--lambda", ho.lambda);
  ap->add_option("--mu", ho.mu);
  ap->add_option("--nu", ho.nu);
  ap->add_option("--varkappa", ho.varkappa);
  ap->add_option("--kappa0", ho.kappa0);
  ap->add_option("--chi1", ho.chi1);
  ap->add_option("--c", ho.c);
  ap->add_option("--variant", ho.variant);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify)
      return cmd_verify(config_path, out_path, *verify, suites, r, kappa0, window, degree, variant, max_details);
    if (*br) return cmd_bracket(bx, by);
    if (*red) return cmd_reduce(rf, rg);
    if (*ap) return cmd_apply(aop, am, astate, ar, ho);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
