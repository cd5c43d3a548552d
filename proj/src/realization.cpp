#include "threept/realization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "threept/text.hpp"

namespace threept {

int field_weight(FieldKind k) { return (k == FieldKind::AlphaStar || k == FieldKind::Alpha1Star) ? 0 : 1; }

std::string field_name(FieldKind k) {
  switch (k) {
    case FieldKind::Alpha: return "alpha";
    case FieldKind::Alpha1: return "alpha1";
    case FieldKind::Beta: return "beta";
    case FieldKind::Beta1: return "beta1";
    case FieldKind::AlphaStar: return "alpha*";
    case FieldKind::Alpha1Star: return "alpha1*";
    case FieldKind::DAlphaStar: return "d(alpha*)";
    case FieldKind::DAlpha1Star: return "d(alpha1*)";
  }
  return "?";
}

std::string FieldTerm::str() const {
  std::ostringstream os;
  os << coeff;
  if (!(zpoly.size() == 1 && zpoly.begin()->first == 0 && zpoly.begin()->second.is_one())) {
    os << "*(";
    bool first = true;
    for (auto it = zpoly.rbegin(); it != zpoly.rend(); ++it) {
      const std::string mono = it->first == 0 ? "" : it->first == 1 ? "z" : "z^" + std::to_string(it->first);
      text::write_term(os, it->second, mono, first);
      first = false;
    }
    os << ")";
  }
  os << "*:";
  for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " " : "") << field_name(factors[i]);
  os << ":";
  return os.str();
}

std::string field_str(const Field& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " + " : "") << f[i].str();
  return f.empty() ? "0" : os.str();
}

namespace {

using FK = FieldKind;
using Z = std::map<int, Rational>;

const Z kOne{{0, Rational(1)}};
const Z kP{{2, Rational(1)}, {1, Rational(4)}};

FieldTerm term(Rational c, Z z, std::initializer_list<FieldKind> fs) {
  FieldTerm t;
  t.coeff = std::move(c);
  t.zpoly = std::move(z);
  t.factors.assign(fs.begin(), fs.end());
  return t;
}

}  // namespace

Field tau_field(Gen g, const Rational& chi0) {
  switch (g) {
    case Gen::f: return {term(-1, kOne, {FK::Alpha})};
    case Gen::f1: return {term(-1, kOne, {FK::Alpha1})};
    case Gen::h:
      return {term(2, kOne, {FK::Alpha, FK::AlphaStar}), term(2, kOne, {FK::Alpha1, FK::Alpha1Star}),
              term(1, kOne, {FK::Beta})};
    case Gen::h1:
      return {term(2, kOne, {FK::Alpha1, FK::AlphaStar}), term(2, kP, {FK::Alpha, FK::Alpha1Star}),
              term(1, kOne, {FK::Beta1})};
    case Gen::e:
      return {term(1, kOne, {FK::Alpha, FK::AlphaStar, FK::AlphaStar}),
              term(1, kP, {FK::Alpha, FK::Alpha1Star, FK::Alpha1Star}),
              term(2, kOne, {FK::Alpha1, FK::AlphaStar, FK::Alpha1Star}),
              term(1, kOne, {FK::Beta, FK::AlphaStar}),
              term(1, kOne, {FK::Beta1, FK::Alpha1Star}),
              term(chi0, kOne, {FK::DAlphaStar})};
    case Gen::e1:
      return {term(1, kOne, {FK::Alpha1, FK::AlphaStar, FK::AlphaStar}),
              term(1, kP, {FK::Alpha1, FK::Alpha1Star, FK::Alpha1Star}),
              term(2, kP, {FK::Alpha, FK::AlphaStar, FK::Alpha1Star}),
              term(1, kOne, {FK::Beta1, FK::AlphaStar}),
              term(1, kP, {FK::Beta, FK::Alpha1Star}),
              term(chi0, kP, {FK::DAlpha1Star}),
              term(chi0, Z{{1, Rational(1)}, {0, Rational(2)}}, {FK::Alpha1Star})};
    default: throw std::invalid_argument("tau_field: central generators are scalars");
  }
}

RealizationConfig RealizationConfig::make(int r, HeisParams heis) {
  RealizationConfig c;
  c.osc.r = r;
  c.heis = std::move(heis);
  c.validate();
  return c;
}

Rational RealizationConfig::chi0() const { return heis.kappa0 + (osc.r == 0 ? 4 : 0); }

void RealizationConfig::validate() const {
  if (osc.r != 0 && osc.r != 1) throw std::invalid_argument("realization: r must be 0 or 1");
  if (!heis.chi1.is_zero()) throw std::invalid_argument("realization: chi1 must be 0");
}

// ---------------------------------------------------------------------------
// ModeEngine

namespace {

ModeOp build_atomic(FieldKind k, int n, const RealizationConfig& cfg) {
  switch (k) {
    case FK::Alpha: return osc_mode_op(OscKind::A, n, cfg.osc);
    case FK::Alpha1: return osc_mode_op(OscKind::A1, n, cfg.osc);
    case FK::AlphaStar: return osc_mode_op(OscKind::AStar, n, cfg.osc);
    case FK::Alpha1Star: return osc_mode_op(OscKind::A1Star, n, cfg.osc);
    case FK::Beta: return heis_mode_op(HeisKind::B, n, cfg.heis);
    case FK::Beta1: return heis_mode_op(HeisKind::B1, n, cfg.heis);
    case FK::DAlphaStar:
    case FK::DAlpha1Star: {
      ModeOp op = osc_mode_op(k == FK::DAlphaStar ? OscKind::AStar : OscKind::A1Star, n, cfg.osc);
      if (n == 0) {
        op.atoms.clear();
      } else {
        for (auto& a : op.atoms) a.scale *= Rational(-n);
      }
      return op;
    }
  }
  throw std::logic_error("build_atomic");
}

// Creation indices of a field: none, n <= upper, or every integer.
struct CreationRange {
  enum class Kind { None, Upper, Free } kind;
  int upper = 0;
};

CreationRange creation_range(FieldKind k, int r) {
  switch (k) {
    case FK::Alpha:
    case FK::Alpha1:
      return r == 0 ? CreationRange{CreationRange::Kind::Upper, -1} : CreationRange{CreationRange::Kind::Free};
    case FK::AlphaStar:
    case FK::Alpha1Star:
    case FK::DAlphaStar:
    case FK::DAlpha1Star:
      return r == 0 ? CreationRange{CreationRange::Kind::Upper, 0} : CreationRange{CreationRange::Kind::None};
    case FK::Beta:
    case FK::Beta1: return {CreationRange::Kind::Upper, -1};
  }
  return {CreationRange::Kind::None};
}

bool acts_on_every_state(const ModeOp& op, const VMatrixEntries& vm) {
  for (const auto& a : op.atoms) {
    if (a.kind == OpAtom::Kind::Scalar && !a.scale.is_zero()) return true;
    if (a.kind == OpAtom::Kind::VMatrix &&
        !(vm.m00.is_zero() && vm.m01.is_zero() && vm.m10.is_zero() && vm.m11.is_zero()))
      return true;
  }
  return false;
}

void apply_op_to(const ModeOp& op, const VMatrixEntries& vm, const std::vector<FockTerm>& in,
                 std::vector<FockTerm>& out) {
  out.clear();
  for (const auto& [s, c] : in) apply_op(op, vm, s, c, out);
}

}  // namespace

ModeEngine::ModeEngine(RealizationConfig cfg, int table_radius)
    : cfg_(std::move(cfg)), vm_(cfg_.heis.b1_zero_matrix()), radius_(table_radius) {
  cfg_.validate();
  for (int k = 0; k < kFieldKinds; ++k) {
    const auto kind = static_cast<FieldKind>(k);
    table_[k].reserve(2 * radius_ + 1);
    for (int n = -radius_; n <= radius_; ++n) {
      table_[k].push_back(build_atomic(kind, n, cfg_));
      const ModeOp& op = table_[k].back();
      if (!op.annihilation) continue;
      if (acts_on_every_state(op, vm_)) always_[k].push_back(n);
      for (const auto& a : op.atoms) {
        if (a.kind != OpAtom::Kind::Deriv) continue;
        auto& list = by_var_[k][a.var.packed()];
        if (list.empty() || list.back() != n) list.push_back(n);
      }
    }
  }
  for (Gen g : kCurrentGens) tau_[static_cast<int>(g)] = tau_field(g, cfg_.chi0());
}

const ModeOp& ModeEngine::atomic_op(FieldKind k, int n) const {
  if (n < -radius_ || n > radius_) throw std::out_of_range("ModeEngine: mode index beyond table radius");
  return table_[static_cast<int>(k)][n + radius_];
}

bool ModeEngine::is_annihilation(FieldKind k, int n) const { return atomic_op(k, n).annihilation; }

ModeEngine::Candidates ModeEngine::candidates(const BasisState& s) const {
  Candidates c;
  for (int k = 0; k < kFieldKinds; ++k) {
    auto& list = c.annih[k];
    list = always_[k];
    for (std::size_t i = 0; i < s.mono.size(); ++i) {
      if (i > 0 && s.mono[i] == s.mono[i - 1]) continue;
      const int idx = Var::from_packed(s.mono[i]).index();
      if (idx < -radius_ + 8 || idx > radius_ - 8)
        throw std::out_of_range("ModeEngine: state variable index beyond table radius");
      auto it = by_var_[k].find(s.mono[i]);
      if (it != by_var_[k].end()) list.insert(list.end(), it->second.begin(), it->second.end());
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return c;
}

void ModeEngine::apply_term(const FieldTerm& t, int m, const BasisState& s, const Rational& c,
                            const Candidates& cand, std::vector<FockTerm>& out, bool reverse_groups) const {
  const std::size_t k = t.factors.size();
  int weight = 0;
  for (FieldKind f : t.factors) weight += field_weight(f);

  std::array<int, 3> idx{};
  std::array<bool, 3> ann{};
  std::vector<FockTerm> cur, next;
  Rational scale;

  auto emit = [&]() {
    std::array<const ModeOp*, 3> order{};
    std::size_t len = 0;
    std::size_t n_ann = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (ann[i]) order[len++] = &atomic_op(t.factors[i], idx[i]);
    n_ann = len;
    for (std::size_t i = 0; i < k; ++i)
      if (!ann[i]) order[len++] = &atomic_op(t.factors[i], idx[i]);
    if (reverse_groups) {
      std::reverse(order.begin(), order.begin() + n_ann);
      std::reverse(order.begin() + n_ann, order.begin() + len);
    }
    cur.clear();
    cur.emplace_back(s, scale);
    for (std::size_t i = 0; i < len && !cur.empty(); ++i) {
      apply_op_to(*order[i], vm_, cur, next);
      cur.swap(next);
    }
    out.insert(out.end(), cur.begin(), cur.end());
  };

  for (const auto& [p, zc] : t.zpoly) {
    if (zc.is_zero()) continue;
    scale = c * t.coeff * zc;
    const long long target = static_cast<long long>(m) + 1 + p - weight;

    // Creation factors: all indices but one range over bounded windows, the last is forced.
    auto finish = [&](long long rem) {
      std::array<std::size_t, 3> pos{};
      std::size_t np = 0;
      bool free_seen = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (ann[i]) continue;
        const CreationRange cr = creation_range(t.factors[i], cfg_.osc.r);
        if (cr.kind == CreationRange::Kind::None) return;
        if (cr.kind == CreationRange::Kind::Free) free_seen = true;
        pos[np++] = i;
      }
      if (np == 0) {
        if (rem == 0) emit();
        return;
      }
      if (free_seen) {
        if (np > 1) throw std::logic_error("ModeEngine: unbounded creation sum in " + t.str());
        idx[pos[0]] = static_cast<int>(rem);
        emit();
        return;
      }
      std::array<int, 3> upper{};
      for (std::size_t j = 0; j < np; ++j) upper[j] = creation_range(t.factors[pos[j]], cfg_.osc.r).upper;
      auto crec = [&](auto&& self, std::size_t j, long long left) -> void {
        if (j + 1 == np) {
          if (left <= upper[j]) {
            idx[pos[j]] = static_cast<int>(left);
            emit();
          }
          return;
        }
        long long rest = 0;
        for (std::size_t l = j + 1; l < np; ++l) rest += upper[l];
        for (long long n = left - rest; n <= upper[j]; ++n) {
          idx[pos[j]] = static_cast<int>(n);
          self(self, j + 1, left - n);
        }
      };
      crec(crec, 0, rem);
    };

    auto rec = [&](auto&& self, std::size_t i, long long sum) -> void {
      if (i == k) {
        finish(target - sum);
        return;
      }
      ann[i] = true;
      for (int n : cand.annih[static_cast<int>(t.factors[i])]) {
        idx[i] = n;
        self(self, i + 1, sum + n);
      }
      ann[i] = false;
      self(self, i + 1, sum);
    };
    rec(rec, 0, 0);
  }
}

void ModeEngine::apply_field(const Field& f, int m, const BasisState& s, const Rational& c,
                             std::vector<FockTerm>& out, bool reverse_groups) const {
  const Candidates cand = candidates(s);
  for (const FieldTerm& t : f)
    if (!t.coeff.is_zero()) apply_term(t, m, s, c, cand, out, reverse_groups);
}

FockVector ModeEngine::apply_field(const Field& f, int m, const FockVector& v, bool reverse_groups) const {
  std::vector<FockTerm> out;
  for (const auto& [s, c] : v.terms()) apply_field(f, m, s, c, out, reverse_groups);
  return FockVector::from_terms(std::move(out));
}

void ModeEngine::apply_mode(Gen g, int m, const BasisState& s, const Rational& c, const Candidates& cand,
                            std::vector<FockTerm>& out) const {
  if (g == Gen::w0) {
    out.emplace_back(s, c * cfg_.chi0());
    return;
  }
  if (g == Gen::w1) return;
  for (const FieldTerm& t : tau(g))
    if (!t.coeff.is_zero()) apply_term(t, m, s, c, cand, out, false);
}

void ModeEngine::apply_mode(Gen g, int m, const BasisState& s, const Rational& c, std::vector<FockTerm>& out) const {
  apply_mode(g, m, s, c, candidates(s), out);
}

FockVector ModeEngine::apply_mode(Gen g, int m, const FockVector& v) const {
  std::vector<FockTerm> out;
  for (const auto& [s, c] : v.terms()) apply_mode(g, m, s, c, out);
  return FockVector::from_terms(std::move(out));
}

FockVector ModeEngine::tau_extend(const CurrentElem& x, const FockVector& v) const {
  std::vector<FockTerm> out;
  for (const auto& [key, c] : x.terms()) {
    const auto& [b, k, eps] = key;
    Gen g;
    switch (b) {
      case Sl2Basis::E: g = eps ? Gen::e1 : Gen::e; break;
      case Sl2Basis::F: g = eps ? Gen::f1 : Gen::f; break;
      default: g = eps ? Gen::h1 : Gen::h; break;
    }
    for (const auto& [s, vc] : v.terms()) apply_mode(g, k, s, c * vc, out);
  }
  const Rational central = x.central_part().c0 * cfg_.chi0();
  if (!central.is_zero())
    for (const auto& [s, vc] : v.terms()) out.emplace_back(s, central * vc);
  return FockVector::from_terms(std::move(out));
}

FockVector apply_mode(Gen g, int m, const FockVector& v, const RealizationConfig& cfg) {
  return ModeEngine(cfg).apply_mode(g, m, v);
}

FockVector tau_extend(const CurrentElem& x, const FockVector& v, const RealizationConfig& cfg) {
  return ModeEngine(cfg).tau_extend(x, v);
}

// ---------------------------------------------------------------------------
// Pair items

Field pair_field(PairItem item) {
  switch (item) {
    case PairItem::Beta1Beta1: return {term(1, kOne, {FK::Beta1})};
    case PairItem::AlphaAlphaStar: return {term(1, kOne, {FK::Alpha, FK::AlphaStar})};
    case PairItem::AlphaAlphaStarSq: return {term(1, kOne, {FK::Alpha, FK::AlphaStar, FK::AlphaStar})};
  }
  throw std::logic_error("pair_field");
}

std::vector<Field> pair_lambda_coeffs(PairItem item, const RealizationConfig& cfg) {
  const Rational k0 = cfg.heis.kappa0;
  const Rational d = cfg.osc.r == 0 ? 1 : 0;
  switch (item) {
    case PairItem::Beta1Beta1:
      return {{term(1, Z{{1, Rational(-2) * k0}, {0, Rational(-4) * k0}}, {})},
              {term(1, Z{{2, Rational(-2) * k0}, {1, Rational(-8) * k0}}, {})}};
    case PairItem::AlphaAlphaStar: return {{}, {term(-d, kOne, {})}};
    case PairItem::AlphaAlphaStarSq:
      return {{term(Rational(-4) * d, kOne, {FK::AlphaStar, FK::DAlphaStar})},
              {term(Rational(-4) * d, kOne, {FK::AlphaStar, FK::AlphaStar})}};
  }
  throw std::logic_error("pair_lambda_coeffs");
}

Rational binomial(int m, int j) {
  Rational r = 1;
  for (int i = 0; i < j; ++i) r = r * Rational(m - i) / Rational(i + 1);
  return r;
}

FockVector pair_residual(const ModeEngine& eng, PairItem item, int m, int n, const FockVector& v) {
  const Field a = pair_field(item);
  FockVector r = eng.apply_field(a, m, eng.apply_field(a, n, v));
  r -= eng.apply_field(a, n, eng.apply_field(a, m, v));
  const auto coeffs = pair_lambda_coeffs(item, eng.config());
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    r -= binomial(m, static_cast<int>(j)) * eng.apply_field(coeffs[j], m + n - static_cast<int>(j), v);
  return r;
}

}  // namespace threept
