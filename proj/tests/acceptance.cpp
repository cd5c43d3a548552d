// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            all criteria
//   acceptance 3 7        the listed criteria
//
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "threept/verify.hpp"

using namespace threept;

namespace {

struct Outcome {
  bool pass = false;
  std::string note;
};

VerifyConfig only(std::vector<std::string> suites) {
  VerifyConfig cfg;
  cfg.suites = std::move(suites);
  return cfg;
}

std::string tally(const Report& rep) {
  return std::to_string(rep.checks()) + " checks, " + std::to_string(rep.asserted_failures()) + " failures";
}

/// Lists failing families as "suite family (n)".
std::string failing_families(const Report& rep) {
  std::string s;
  for (const auto& r : rep.records) {
    if (!r.asserted || r.passed()) continue;
    s += (s.empty() ? "" : "; ") + r.family + (r.config.empty() ? "" : " {" + r.config + "}") + " (" +
         std::to_string(r.failures) + ")";
  }
  return s;
}

Outcome from_report(const Report& rep) {
  Outcome o{rep.passed(), tally(rep)};
  if (!o.pass) o.note += ": " + failing_families(rep);
  return o;
}

Outcome criterion1() { return from_report(run(only({"ring"}))); }

Outcome criterion2() {
  const Report rep = run(only({"kahler"}));
  long long closed = 0;
  for (const auto& r : rep.records)
    if (r.family.rfind("closed form", 0) == 0) closed += r.checks;
  Outcome o = from_report(rep);
  if (closed != 507) {
    o.pass = false;
    o.note += ", expected 507 closed-form checks";
  }
  return o;
}

Outcome criterion3() {
  const Report rep = run(only({"current"}));
  long long table = 0;
  for (const auto& r : rep.records)
    if (r.family != "Jacobi") table += r.checks;
  Outcome o = from_report(rep);
  if (table != 4356) {
    o.pass = false;
    o.note += ", expected 4356 table brackets";
  }
  return o;
}

Outcome criterion4() { return from_report(run(only({"oscillator"}))); }

Outcome criterion5() {
  Outcome o = from_report(run(only({"heisenberg"})));
  VerifyConfig literal = only({"heisenberg"});
  literal.heis_variant = HeisVariant::Paper;
  const Report rep = run(literal);
  o.note += "; literal variant (report only): " + std::to_string(rep.failures()) + " residuals";
  return o;
}

Outcome criterion6() { return from_report(run(only({"pairs"}))); }

Outcome criterion7() {
  VerifyConfig cfg = only({"realization"});
  cfg.max_details = 3;
  return from_report(run(cfg));
}

Outcome criterion8() {
  VerifyConfig cfg;
  cfg.r = {0, 1};
  cfg.kappa0 = {Rational(1), Rational(-2)};
  cfg.m_min = -1;
  cfg.m_max = 1;
  cfg.degree_max = 1;
  const std::string a = run(cfg).dump();
  const std::string b = run(VerifyConfig::from_json(nlohmann::ordered_json::parse(cfg.to_json().dump()))).dump();
  return {a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
}

struct Criterion {
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

const Criterion kCriteria[] = {
    {"ring isomorphisms", 1, criterion1},
    {"Kahler reduction and closed forms", 1, criterion2},
    {"relation table and Jacobi", 10, criterion3},
    {"oscillator relations", 10, criterion4},
    {"Heisenberg relations", 10, criterion5},
    {"pairwise lambda-brackets", 30, criterion6},
    {"free field realization", 600, criterion7},
    {"determinism", 600, criterion8},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    int n = 0;
    try {
      n = std::stoi(argv[i]);
    } catch (const std::exception&) {
    }
    if (n < 1 || n > 8) {
      std::cerr << "usage: acceptance [criterion 1-8 ...]\n";
      return 2;
    }
    selected.push_back(n);
  }
  if (selected.empty())
    for (int n = 1; n <= 8; ++n) selected.push_back(n);

  bool all = true;
  for (int n : selected) {
    const Criterion& c = kCriteria[n - 1];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.note += ", over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.2f s", secs);
    std::cout << "criterion " << n << " " << (o.pass ? "PASS" : "FAIL") << " " << c.title << " (" << time_buf
              << "): " << o.note << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
