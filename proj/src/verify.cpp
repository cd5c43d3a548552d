#include "threept/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>

#include "threept/current.hpp"
#include "threept/kahler.hpp"
#include "threept/realization.hpp"
#include "threept/ring.hpp"

namespace threept {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Config

namespace {

Rational rational_from_json(const json& j, const std::string& key) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key + ": " + e.what());
    }
  }
  throw ConfigError(key + ": expected an integer or a \"p/q\" string");
}

int int_from_json(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ConfigError(key + ": expected an integer");
  const long long v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw ConfigError(key + ": out of range");
  return static_cast<int>(v);
}

std::pair<int, int> pair_from_json(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(key + ": expected [lo, hi]");
  return {int_from_json(j[0], key), int_from_json(j[1], key)};
}

json rational_json(const Rational& q) { return q.str(); }

std::string variant_name(HeisVariant v) { return v == HeisVariant::Paper ? "paper" : "derived"; }

}  // namespace

VerifyConfig VerifyConfig::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  VerifyConfig cfg;
  for (const auto& [key, val] : j.items()) {
    if (key == "r") {
      cfg.r.clear();
      if (val.is_array()) {
        for (const auto& x : val) cfg.r.push_back(int_from_json(x, key));
      } else {
        cfg.r.push_back(int_from_json(val, key));
      }
    } else if (key == "kappa0") {
      cfg.kappa0.clear();
      if (val.is_array()) {
        for (const auto& x : val) cfg.kappa0.push_back(rational_from_json(x, key));
      } else {
        cfg.kappa0.push_back(rational_from_json(val, key));
      }
    } else if (key == "lambda") {
      cfg.lambda = rational_from_json(val, key);
    } else if (key == "mu") {
      cfg.mu = rational_from_json(val, key);
    } else if (key == "nu") {
      cfg.nu = rational_from_json(val, key);
    } else if (key == "varkappa") {
      cfg.varkappa = rational_from_json(val, key);
    } else if (key == "c") {
      cfg.c = rational_from_json(val, key);
    } else if (key == "heis_variant") {
      if (val == "derived") {
        cfg.heis_variant = HeisVariant::Derived;
      } else if (val == "paper") {
        cfg.heis_variant = HeisVariant::Paper;
      } else {
        throw ConfigError("heis_variant: expected \"derived\" or \"paper\"");
      }
    } else if (key == "window") {
      std::tie(cfg.m_min, cfg.m_max) = pair_from_json(val, key);
    } else if (key == "degree_max") {
      cfg.degree_max = int_from_json(val, key);
    } else if (key == "index_range") {
      cfg.index_range = pair_from_json(val, key);
    } else if (key == "heisenberg") {
      if (!val.is_object()) throw ConfigError("heisenberg: expected an object");
      for (const auto& [k2, v2] : val.items()) {
        if (k2 == "kappa0") {
          cfg.heis_kappa0 = rational_from_json(v2, "heisenberg.kappa0");
        } else if (k2 == "chi1") {
          cfg.heis_chi1 = rational_from_json(v2, "heisenberg.chi1");
        } else {
          throw ConfigError("heisenberg: unknown key '" + k2 + "'");
        }
      }
    } else if (key == "windows") {
      if (!val.is_object()) throw ConfigError("windows: expected an object");
      for (const auto& [name, w] : val.items()) {
        auto it = cfg.windows.find(name);
        if (it == cfg.windows.end()) throw ConfigError("windows: unknown suite '" + name + "'");
        if (!w.is_object()) throw ConfigError("windows." + name + ": expected an object");
        for (const auto& [k2, v2] : w.items()) {
          if (k2 == "window") {
            std::tie(it->second.lo, it->second.hi) = pair_from_json(v2, "windows." + name + ".window");
          } else if (k2 == "degree_max") {
            it->second.degree_max = int_from_json(v2, "windows." + name + ".degree_max");
          } else {
            throw ConfigError("windows." + name + ": unknown key '" + k2 + "'");
          }
        }
      }
    } else if (key == "suites") {
      if (!val.is_array()) throw ConfigError("suites: expected an array");
      cfg.suites.clear();
      for (const auto& s : val) {
        if (!s.is_string()) throw ConfigError("suites: expected suite names");
        cfg.suites.push_back(s.get<std::string>());
      }
    } else if (key == "max_details") {
      cfg.max_details = int_from_json(val, key);
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

void VerifyConfig::validate() const {
  for (int x : r)
    if (x != 0 && x != 1) throw ConfigError("r: must be 0 or 1");
  if (r.empty()) throw ConfigError("r: at least one value required");
  if (kappa0.empty()) throw ConfigError("kappa0: at least one value required");
  if (m_min > m_max) throw ConfigError("window: m_min > m_max");
  if (degree_max < 0) throw ConfigError("degree_max: must be >= 0");
  if (max_details < 0) throw ConfigError("max_details: must be >= 0");
  if (index_range && index_range->first > index_range->second) throw ConfigError("index_range: lo > hi");
  for (const auto& [name, w] : windows) {
    if (w.lo > w.hi) throw ConfigError("windows." + name + ": lo > hi");
    if (w.degree_max < 0) throw ConfigError("windows." + name + ": degree_max must be >= 0");
  }
  const int reach = std::max({std::abs(m_min), std::abs(m_max)}) + 8;
  const auto [lo, hi] = realization_index_range();
  if (std::max(std::abs(lo), std::abs(hi)) + reach > 56 ||
      std::max(std::abs(windows.at("pairs").lo), std::abs(windows.at("pairs").hi)) > 40)
    throw ConfigError("window: indices too large for the mode tables");
  for (const auto& s : suites)
    if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end())
      throw ConfigError("suites: unknown suite '" + s + "'");
}

std::pair<int, int> VerifyConfig::realization_index_range() const {
  return index_range ? *index_range : std::pair<int, int>{m_min - 4, m_max + 4};
}

json VerifyConfig::to_json() const {
  json j;
  j["r"] = r;
  json k = json::array();
  for (const auto& q : kappa0) k.push_back(rational_json(q));
  j["kappa0"] = k;
  j["lambda"] = rational_json(lambda);
  j["mu"] = rational_json(mu);
  j["nu"] = rational_json(nu);
  j["varkappa"] = rational_json(varkappa);
  j["c"] = rational_json(c);
  j["heis_variant"] = variant_name(heis_variant);
  j["window"] = {m_min, m_max};
  j["degree_max"] = degree_max;
  const auto [lo, hi] = realization_index_range();
  j["index_range"] = {lo, hi};
  j["heisenberg"] = {{"kappa0", rational_json(heis_kappa0)}, {"chi1", rational_json(heis_chi1)}};
  json w;
  for (const auto& [name, sw] : windows) w[name] = {{"window", {sw.lo, sw.hi}}, {"degree_max", sw.degree_max}};
  j["windows"] = w;
  j["suites"] = suites;
  j["max_details"] = max_details;
  return j;
}

// ---------------------------------------------------------------------------
// Records

namespace {

constexpr std::size_t kMaxFailingIds = 200;

class Recorder {
 public:
  Recorder(CheckRecord& rec, std::string suite, std::string family, std::string config, bool asserted,
           int max_details)
      : rec_(rec), max_details_(max_details) {
    rec_.suite = std::move(suite);
    rec_.family = std::move(family);
    rec_.config = std::move(config);
    rec_.asserted = asserted;
  }
  Recorder(const Recorder&) = delete;
  Recorder& operator=(const Recorder&) = delete;

  void pass() { ++rec_.checks; }

  /// `describe` yields {residual, expected}; it only runs while details are still kept.
  void fail(const std::string& mode_id, const std::string& state,
            const std::function<std::pair<std::string, std::string>()>& describe) {
    ++rec_.checks;
    ++rec_.failures;
    if (rec_.failing_ids.size() < kMaxFailingIds && seen_.insert(mode_id).second)
      rec_.failing_ids.push_back(mode_id);
    if (static_cast<int>(rec_.details.size()) < max_details_) {
      auto [res, exp] = describe();
      rec_.details.push_back({state.empty() ? mode_id : mode_id + ", v=" + state, std::move(res), std::move(exp)});
    }
  }

  void check(bool ok, const std::string& mode_id, const std::string& state,
             const std::function<std::pair<std::string, std::string>()>& describe) {
    if (ok) {
      pass();
    } else {
      fail(mode_id, state, describe);
    }
  }

 private:
  CheckRecord& rec_;
  int max_details_;
  std::set<std::string> seen_;
};

std::string mn_id(int m, int n) { return "m=" + std::to_string(m) + ", n=" + std::to_string(n); }

std::string basis_name(int k, int eps) { return RingElem::monomial(k, eps).str(); }

HeisParams heis_params(const VerifyConfig& cfg, const Rational& kappa0, const Rational& chi1, HeisVariant v) {
  HeisParams p;
  p.lambda = cfg.lambda;
  p.mu = cfg.mu;
  p.nu = cfg.nu;
  p.varkappa = cfg.varkappa;
  p.c = cfg.c;
  p.kappa0 = kappa0;
  p.chi1 = chi1;
  p.variant = v;
  return p;
}

std::vector<Var> var_range(VarKind kind, int lo, int hi) {
  std::vector<Var> out;
  for (int i = lo; i <= hi; ++i) out.emplace_back(kind, i);
  return out;
}

void append(std::vector<Var>& a, const std::vector<Var>& b) { a.insert(a.end(), b.begin(), b.end()); }

/// [x, y] s - expected * s using bare operators.
FockVector op_commutator(const ModeOp& x, const ModeOp& y, const VMatrixEntries& vm, const BasisState& s,
                         const Rational& expected) {
  std::vector<FockTerm> a, b, out;
  apply_op(y, vm, s, 1, a);
  for (const auto& [t, c] : a) apply_op(x, vm, t, c, out);
  apply_op(x, vm, s, 1, b);
  for (const auto& [t, c] : b) apply_op(y, vm, t, -c, out);
  if (!expected.is_zero()) out.emplace_back(s, -expected);
  return FockVector::from_terms(std::move(out));
}

// ---------------------------------------------------------------------------
// ring

void suite_ring(const VerifyConfig& cfg, std::vector<CheckRecord>& out) {
  const SuiteWindow w = cfg.windows.at("ring");
  std::vector<RingElem> basis;
  for (int k = w.lo; k <= w.hi; ++k)
    for (int e = 0; e <= 1; ++e) basis.push_back(RingElem::monomial(k, e));
  {
    Recorder rec(out.emplace_back(), "ring", "from_s(to_s(x)) = x", "", true, cfg.max_details);
    for (const auto& x : basis) {
      const RingElem back = from_s(to_s(x));
      rec.check(back == x, x.str(), "", [&] { return std::pair{(back - x).str(), x.str()}; });
    }
  }
  {
    Recorder rec(out.emplace_back(), "ring", "to_s(xy) = to_s(x) to_s(y)", "", true, cfg.max_details);
    for (const auto& x : basis) {
      const SFraction sx = to_s(x);
      for (const auto& y : basis) {
        const SFraction lhs = to_s(x * y);
        const SFraction rhs = sx * to_s(y);
        rec.check(lhs == rhs, x.str() + " * " + y.str(), "", [&] { return std::pair{lhs.str(), rhs.str()}; });
      }
    }
  }
  for (const Rational& a : {Rational(1), Rational(2), Rational(-1, 3)}) {
    Recorder rec(out.emplace_back(), "ring", "from_a(to_a(x, a), a) = x", "a=" + a.str(), true, cfg.max_details);
    for (const auto& x : basis) {
      const RingElem back = from_a(to_a(x, a), a);
      rec.check(back == x, x.str(), "", [&] { return std::pair{(back - x).str(), x.str()}; });
    }
  }
}

// ---------------------------------------------------------------------------
// kahler

void suite_kahler(const VerifyConfig& cfg, std::vector<CheckRecord>& out) {
  const SuiteWindow w = cfg.windows.at("kahler");
  const std::pair<PairingKind, const char*> kinds[] = {
      {PairingKind::TT, "t^k d(t^l)"}, {PairingKind::UU, "t^k u d(t^l u)"}, {PairingKind::TU, "t^k d(t^l u)"}};
  for (const auto& [kind, label] : kinds) {
    Recorder rec(out.emplace_back(), "kahler", std::string("closed form ") + label, "", true, cfg.max_details);
    const int ef = kind == PairingKind::UU ? 1 : 0;
    const int eg = kind == PairingKind::TT ? 0 : 1;
    for (int k = w.lo; k <= w.hi; ++k) {
      for (int l = w.lo; l <= w.hi; ++l) {
        const CentralPair got = pairing(RingElem::monomial(k, ef), RingElem::monomial(l, eg));
        const CentralPair want = closed_form_pairing(kind, k, l);
        rec.check(got == want, "k=" + std::to_string(k) + ", l=" + std::to_string(l), "",
                  [&] { return std::pair{"reduce: " + got.str(), "closed form: " + want.str()}; });
      }
    }
  }
  {
    Recorder rec(out.emplace_back(), "kahler", "reduce(dg) = 0", "", true, cfg.max_details);
    for (int k = w.lo; k <= w.hi; ++k) {
      for (int e = 0; e <= 1; ++e) {
        const CentralPair got = reduce(differential(RingElem::monomial(k, e)));
        rec.check(got.is_zero(), basis_name(k, e), "", [&] { return std::pair{got.str(), std::string("c0 = 0, c1 = 0")}; });
      }
    }
  }
  {
    Recorder rec(out.emplace_back(), "kahler", "pairing(f,g) + pairing(g,f) = 0", "", true, cfg.max_details);
    for (int k = w.lo; k <= w.hi; ++k) {
      for (int e = 0; e <= 1; ++e) {
        for (int l = w.lo; l <= w.hi; ++l) {
          for (int e2 = 0; e2 <= 1; ++e2) {
            const RingElem f = RingElem::monomial(k, e);
            const RingElem g = RingElem::monomial(l, e2);
            const CentralPair sum = pairing(f, g) + pairing(g, f);
            rec.check(sum.is_zero(), f.str() + ", " + g.str(), "",
                      [&] { return std::pair{sum.str(), std::string("c0 = 0, c1 = 0")}; });
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// current

void suite_current(const VerifyConfig& cfg, std::vector<CheckRecord>& out) {
  const SuiteWindow w = cfg.windows.at("current");
  for (Gen x : kCurrentGens) {
    for (Gen y : kCurrentGens) {
      Recorder rec(out.emplace_back(), "current", "[" + gen_name(x) + ", " + gen_name(y) + "]", "", true, cfg.max_details);
      for (int m = w.lo; m <= w.hi; ++m) {
        for (int n = w.lo; n <= w.hi; ++n) {
          const CurrentElem got = bracket(CurrentElem::generator(x, m), CurrentElem::generator(y, n));
          const CurrentElem want = relation_table_rhs(x, m, y, n);
          rec.check(got == want, mn_id(m, n), "", [&] {
            return std::pair{"bracket - table = " + (got - want).str(), "table: " + want.str()};
          });
        }
      }
    }
  }
  const SuiteWindow jw = cfg.windows.at("jacobi");
  Recorder rec(out.emplace_back(), "current", "Jacobi", "", true, cfg.max_details);
  for (Gen x : kCurrentGens) {
    for (Gen y : kCurrentGens) {
      for (Gen z : kCurrentGens) {
        for (int m = jw.lo; m <= jw.hi; ++m) {
          const CurrentElem a = CurrentElem::generator(x, m);
          for (int n = jw.lo; n <= jw.hi; ++n) {
            const CurrentElem b = CurrentElem::generator(y, n);
            const CurrentElem ab = bracket(a, b);
            for (int p = jw.lo; p <= jw.hi; ++p) {
              const CurrentElem c = CurrentElem::generator(z, p);
              const CurrentElem jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, ab);
              rec.check(jac.is_zero(),
                        gen_name(x) + "_" + std::to_string(m) + ", " + gen_name(y) + "_" + std::to_string(n) + ", " +
                            gen_name(z) + "_" + std::to_string(p),
                        "", [&] { return std::pair{jac.str(), std::string("0")}; });
            }
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// oscillator

void suite_oscillator(const VerifyConfig& cfg, std::vector<CheckRecord>& out) {
  const SuiteWindow w = cfg.windows.at("oscillator");
  std::vector<Var> vars = var_range(VarKind::X, w.lo, w.hi);
  append(vars, var_range(VarKind::X1, w.lo, w.hi));
  const auto states = enumerate_states(vars, w.degree_max, {0});
  const OscKind kinds[] = {OscKind::A, OscKind::AStar, OscKind::A1, OscKind::A1Star};
  for (int r : cfg.r) {
    const OscConfig oc{r};
    const std::string conf = "r=" + std::to_string(r);
    for (OscKind x : kinds) {
      for (OscKind y : kinds) {
        Recorder rec(out.emplace_back(), "oscillator", "[" + osc_name(x) + ", " + osc_name(y) + "]", conf, true, cfg.max_details);
        for (int m = w.lo; m <= w.hi; ++m) {
          const ModeOp opx = osc_mode_op(x, m, oc);
          for (int n = w.lo; n <= w.hi; ++n) {
            const ModeOp opy = osc_mode_op(y, n, oc);
            Rational want = 0;
            if (m + n == 0) {
              if ((x == OscKind::A && y == OscKind::AStar) || (x == OscKind::A1 && y == OscKind::A1Star)) want = 1;
              if ((x == OscKind::AStar && y == OscKind::A) || (x == OscKind::A1Star && y == OscKind::A1)) want = -1;
            }
            for (const auto& s : states) {
              const FockVector res = op_commutator(opx, opy, {}, s, want);
              rec.check(res.is_zero(), mn_id(m, n), s.str(),
                        [&] { return std::pair{res.str(), want.str() + "*" + s.str()}; });
            }
          }
        }
      }
    }
    Recorder rec(out.emplace_back(), "oscillator", "vacuum annihilators", conf, true, cfg.max_details);
    const FockVector vac(BasisState::vacuum());
    for (OscKind x : kinds) {
      const bool star = x == OscKind::AStar || x == OscKind::A1Star;
      for (int m = w.lo; m <= w.hi; ++m) {
        const bool kills = r == 1 ? star : (star ? m > 0 : m >= 0);
        if (!kills) continue;
        const FockVector res = apply_osc(x, m, vac, oc);
        rec.check(res.is_zero(), osc_name(x) + "_" + std::to_string(m), "",
                  [&] { return std::pair{res.str(), std::string("0")}; });
      }
    }
  }
}

// ---------------------------------------------------------------------------
// heisenberg

void suite_heisenberg(const VerifyConfig& cfg, std::vector<CheckRecord>& out) {
  const SuiteWindow w = cfg.windows.at("heisenberg");
  const int ylo = std::min(w.lo, -w.hi) - 4;
  std::vector<Var> vars = var_range(VarKind::Y, ylo, -1);
  append(vars, var_range(VarKind::Y1, ylo, -1));
  const auto states = enumerate_states(vars, w.degree_max);
  const HeisKind kinds[] = {HeisKind::B, HeisKind::B1};
  for (HeisVariant variant : {HeisVariant::Derived, HeisVariant::Paper}) {
    const HeisParams p = heis_params(cfg, cfg.heis_kappa0, cfg.heis_chi1, variant);
    const VMatrixEntries vm = p.b1_zero_matrix();
    const std::string conf = "variant=" + variant_name(variant) + ", kappa0=" + p.kappa0.str() +
                             ", chi1=" + p.chi1.str() + (variant == HeisVariant::Paper ? ", c=" + p.c.str() : "");
    for (HeisKind x : kinds) {
      for (HeisKind y : kinds) {
        Recorder rec(out.emplace_back(), "heisenberg", "[" + heis_name(x) + ", " + heis_name(y) + "]", conf,
                     variant == HeisVariant::Derived, cfg.max_details);
        for (int m = w.lo; m <= w.hi; ++m) {
          const ModeOp opx = heis_mode_op(x, m, p);
          for (int n = w.lo; n <= w.hi; ++n) {
            const ModeOp opy = heis_mode_op(y, n, p);
            const Rational want = heis_bracket_value(x, m, y, n, p);
            for (const auto& s : states) {
              const FockVector res = op_commutator(opx, opy, vm, s, want);
              rec.check(res.is_zero(), mn_id(m, n), s.str(),
                        [&] { return std::pair{res.str(), want.str() + "*" + s.str()}; });
            }
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// pairs

void suite_pairs(const VerifyConfig& cfg, std::vector<CheckRecord>& out) {
  const SuiteWindow w = cfg.windows.at("pairs");
  const int lo = w.lo - 4;
  const int hi = w.hi + 4;
  const auto y_states = [&] {
    std::vector<Var> vars = var_range(VarKind::Y, lo, -1);
    append(vars, var_range(VarKind::Y1, lo, -1));
    return enumerate_states(vars, w.degree_max);
  }();
  const auto x_states = enumerate_states(var_range(VarKind::X, lo, hi), w.degree_max, {0});
  const bool asserted = cfg.heis_variant == HeisVariant::Derived;

  auto run_item = [&](const ModeEngine& eng, PairItem item, const std::vector<BasisState>& states,
                      const std::string& conf, bool item_asserted) {
    Recorder rec(out.emplace_back(), "pairs", field_str(pair_field(item)), conf, item_asserted, cfg.max_details);
    for (int m = w.lo; m <= w.hi; ++m) {
      for (int n = w.lo; n <= w.hi; ++n) {
        for (const auto& s : states) {
          const FockVector res = pair_residual(eng, item, m, n, FockVector(s));
          rec.check(res.is_zero(), mn_id(m, n), s.str(), [&] {
            std::string want;
            const auto coeffs = pair_lambda_coeffs(item, eng.config());
            for (std::size_t j = 0; j < coeffs.size(); ++j)
              want += (j ? "; " : "") + std::string("c") + std::to_string(j) + " = " + field_str(coeffs[j]);
            return std::pair{res.str(), want};
          });
        }
      }
    }
  };

  for (int r : cfg.r) {
    for (const Rational& k0 : cfg.kappa0) {
      const ModeEngine eng(RealizationConfig::make(r, heis_params(cfg, k0, 0, cfg.heis_variant)));
      run_item(eng, PairItem::Beta1Beta1, y_states,
               "r=" + std::to_string(r) + ", kappa0=" + k0.str() + ", variant=" + variant_name(cfg.heis_variant),
               asserted);
    }
    const ModeEngine eng(RealizationConfig::make(r, heis_params(cfg, cfg.kappa0.front(), 0, cfg.heis_variant)));
    run_item(eng, PairItem::AlphaAlphaStar, x_states, "r=" + std::to_string(r), true);
    run_item(eng, PairItem::AlphaAlphaStarSq, x_states, "r=" + std::to_string(r), true);
  }
}

// ---------------------------------------------------------------------------
// realization

Gen generator_of(Sl2Basis b, int eps) {
  switch (b) {
    case Sl2Basis::E: return eps ? Gen::e1 : Gen::e;
    case Sl2Basis::F: return eps ? Gen::f1 : Gen::f;
    case Sl2Basis::H: return eps ? Gen::h1 : Gen::h;
  }
  return Gen::h;
}

void suite_realization(const VerifyConfig& cfg, std::vector<CheckRecord>& out) {
  const auto [ilo, ihi] = cfg.realization_index_range();
  std::vector<Var> vars = var_range(VarKind::X, ilo, ihi);
  append(vars, var_range(VarKind::X1, ilo, ihi));
  append(vars, var_range(VarKind::Y, std::min(ilo, -1), std::min(ihi, -1)));
  append(vars, var_range(VarKind::Y1, std::min(ilo, -1), std::min(ihi, -1)));
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  const auto states = enumerate_states(vars, cfg.degree_max);

  const int width = cfg.m_max - cfg.m_min + 1;
  const int ng = static_cast<int>(std::size(kCurrentGens));
  const int nxm = ng * width;
  auto xm_index = [&](int gi, int m) { return gi * width + (m - cfg.m_min); };

  // Abstract brackets, shared by every configuration.
  std::vector<CurrentElem> brackets(static_cast<std::size_t>(nxm) * nxm);
  for (int gx = 0; gx < ng; ++gx)
    for (int m = cfg.m_min; m <= cfg.m_max; ++m)
      for (int gy = 0; gy < ng; ++gy)
        for (int n = cfg.m_min; n <= cfg.m_max; ++n)
          brackets[xm_index(gx, m) * nxm + xm_index(gy, n)] =
              bracket(CurrentElem::generator(kCurrentGens[gx], m), CurrentElem::generator(kCurrentGens[gy], n));

  const bool asserted = cfg.heis_variant == HeisVariant::Derived;
  for (int r : cfg.r) {
    for (const Rational& k0 : cfg.kappa0) {
      const ModeEngine eng(RealizationConfig::make(r, heis_params(cfg, k0, 0, cfg.heis_variant)));
      const Rational chi0 = eng.config().chi0();
      const std::string conf = "r=" + std::to_string(r) + ", kappa0=" + k0.str() + ", chi0=" + chi0.str() +
                               ", variant=" + variant_name(cfg.heis_variant);

      // Per-family tallies, emitted in a fixed order after the sweep.
      std::vector<CheckRecord> local(static_cast<std::size_t>(ng * ng + ng));
      std::vector<std::unique_ptr<Recorder>> pair_rec;
      std::vector<std::unique_ptr<Recorder>> reorder_rec;
      for (int gx = 0; gx < ng; ++gx)
        for (int gy = 0; gy < ng; ++gy)
          pair_rec.push_back(std::make_unique<Recorder>(
              local[gx * ng + gy], "realization", "[" + gen_name(kCurrentGens[gx]) + ", " + gen_name(kCurrentGens[gy]) + "]", conf,
              asserted, cfg.max_details));
      for (int gx = 0; gx < ng; ++gx)
        reorder_rec.push_back(std::make_unique<Recorder>(local[ng * ng + gx], "realization",
                                                         "reordering within normal-ordered groups of tau(" +
                                                             gen_name(kCurrentGens[gx]) + ")",
                                                         conf, true, cfg.max_details));

      std::vector<FockVector> first(nxm);
      std::unordered_map<BasisState, std::size_t> slot;
      std::vector<BasisState> inter;
      std::vector<FockVector> second;
      std::map<std::pair<int, int>, FockVector> rhs_cache;
      std::vector<FockTerm> buf;

      for (const auto& s : states) {
        const auto cand = eng.candidates(s);
        for (int gx = 0; gx < ng; ++gx) {
          for (int m = cfg.m_min; m <= cfg.m_max; ++m) {
            buf.clear();
            eng.apply_mode(kCurrentGens[gx], m, s, 1, cand, buf);
            first[xm_index(gx, m)] = FockVector::from_terms(std::move(buf));
            buf.clear();
            eng.apply_field(eng.tau(kCurrentGens[gx]), m, s, 1, buf, true);
            const FockVector rev = FockVector::from_terms(std::move(buf));
            const FockVector& fwd = first[xm_index(gx, m)];
            reorder_rec[gx]->check(rev == fwd, "m=" + std::to_string(m), s.str(),
                                   [&] { return std::pair{(rev - fwd).str(), fwd.str()}; });
          }
        }

        // Second applications, once per intermediate state.
        slot.clear();
        inter.clear();
        for (const auto& v : first)
          for (const auto& [t, c] : v.terms())
            if (slot.emplace(t, inter.size()).second) inter.push_back(t);
        second.assign(inter.size() * nxm, FockVector());
        for (std::size_t i = 0; i < inter.size(); ++i) {
          const auto tc = eng.candidates(inter[i]);
          for (int gx = 0; gx < ng; ++gx) {
            for (int m = cfg.m_min; m <= cfg.m_max; ++m) {
              buf.clear();
              eng.apply_mode(kCurrentGens[gx], m, inter[i], 1, tc, buf);
              second[i * nxm + xm_index(gx, m)] = FockVector::from_terms(std::move(buf));
            }
          }
        }

        rhs_cache.clear();
        auto rhs_piece = [&](Gen g, int k) -> const FockVector& {
          auto key = std::pair{static_cast<int>(g), k};
          auto it = rhs_cache.find(key);
          if (it == rhs_cache.end()) {
            buf.clear();
            eng.apply_mode(g, k, s, 1, cand, buf);
            it = rhs_cache.emplace(key, FockVector::from_terms(std::move(buf))).first;
          }
          return it->second;
        };

        for (int gx = 0; gx < ng; ++gx) {
          for (int m = cfg.m_min; m <= cfg.m_max; ++m) {
            const int ix = xm_index(gx, m);
            for (int gy = 0; gy < ng; ++gy) {
              for (int n = cfg.m_min; n <= cfg.m_max; ++n) {
                const int iy = xm_index(gy, n);
                std::vector<FockTerm> acc;
                for (const auto& [t, c] : first[iy].terms())
                  for (const auto& [u, d] : second[slot.at(t) * nxm + ix].terms()) acc.emplace_back(u, c * d);
                for (const auto& [t, c] : first[ix].terms())
                  for (const auto& [u, d] : second[slot.at(t) * nxm + iy].terms()) acc.emplace_back(u, -(c * d));
                const CurrentElem& br = brackets[ix * nxm + iy];
                for (const auto& [key, coef] : br.terms()) {
                  const auto& [b, k, eps] = key;
                  for (const auto& [u, d] : rhs_piece(generator_of(b, eps), k).terms())
                    acc.emplace_back(u, -(coef * d));
                }
                const Rational central = br.central_part().c0 * chi0;
                if (!central.is_zero()) acc.emplace_back(s, -central);
                const FockVector res = FockVector::from_terms(std::move(acc));
                pair_rec[gx * ng + gy]->check(res.is_zero(), mn_id(m, n), s.str(), [&] {
                  return std::pair{"lhs - rhs = " + res.str(),
                                   "bracket " + br.str() + " acting as " + eng.tau_extend(br, FockVector(s)).str()};
                });
              }
            }
          }
        }
      }
      pair_rec.clear();
      reorder_rec.clear();
      for (auto& r2 : local) out.push_back(std::move(r2));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Report

long long Report::checks() const {
  long long n = 0;
  for (const auto& r : records) n += r.checks;
  return n;
}

long long Report::failures() const {
  long long n = 0;
  for (const auto& r : records) n += r.failures;
  return n;
}

long long Report::asserted_failures() const {
  long long n = 0;
  for (const auto& r : records)
    if (r.asserted) n += r.failures;
  return n;
}

json Report::to_json() const {
  json j;
  j["config"] = config;
  json recs = json::array();
  json suites = json::object();
  for (const auto& r : records) {
    json x;
    x["suite"] = r.suite;
    x["family"] = r.family;
    x["config"] = r.config;
    x["asserted"] = r.asserted;
    x["checks"] = r.checks;
    x["failures"] = r.failures;
    x["pass"] = r.passed();
    if (!r.failing_ids.empty()) x["failing_ids"] = r.failing_ids;
    if (!r.details.empty()) {
      json d = json::array();
      for (const auto& f : r.details) d.push_back({{"id", f.id}, {"residual", f.residual}, {"expected", f.expected}});
      x["details"] = d;
    }
    recs.push_back(std::move(x));
    if (!suites.contains(r.suite)) suites[r.suite] = {{"checks", 0}, {"failures", 0}, {"asserted_failures", 0}};
    auto& s = suites[r.suite];
    s["checks"] = s["checks"].get<long long>() + r.checks;
    s["failures"] = s["failures"].get<long long>() + r.failures;
    if (r.asserted) s["asserted_failures"] = s["asserted_failures"].get<long long>() + r.failures;
  }
  j["records"] = recs;
  j["summary"] = {{"checks", checks()},
                  {"failures", failures()},
                  {"asserted_failures", asserted_failures()},
                  {"passed", passed()},
                  {"suites", suites}};
  return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

std::vector<CheckRecord> run_suite(const std::string& suite, const VerifyConfig& cfg) {
  std::vector<CheckRecord> out;
  if (suite == "ring") {
    suite_ring(cfg, out);
  } else if (suite == "kahler") {
    suite_kahler(cfg, out);
  } else if (suite == "current") {
    suite_current(cfg, out);
  } else if (suite == "oscillator") {
    suite_oscillator(cfg, out);
  } else if (suite == "heisenberg") {
    suite_heisenberg(cfg, out);
  } else if (suite == "pairs") {
    suite_pairs(cfg, out);
  } else if (suite == "realization") {
    suite_realization(cfg, out);
  } else {
    throw ConfigError("unknown suite '" + suite + "'");
  }
  return out;
}

Report run(const VerifyConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.config = cfg.to_json();
  for (const auto& s : kSuites) {
    if (std::find(cfg.suites.begin(), cfg.suites.end(), s) == cfg.suites.end()) continue;
    auto recs = run_suite(s, cfg);
    for (auto& r : recs) rep.records.push_back(std::move(r));
  }
  return rep;
}

}  // namespace threept
