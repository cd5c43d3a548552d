#include "threept/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "threept/text.hpp"

namespace threept {

// ---------------------------------------------------------------------------
// Variables and states

std::string Var::str() const {
  static constexpr const char* kNames[] = {"x", "x1", "y", "y1"};
  return std::string(kNames[static_cast<int>(kind())]) + "_" + std::to_string(index());
}

BasisState BasisState::vacuum(int v_index) {
  BasisState s;
  s.v = static_cast<std::uint8_t>(v_index);
  return s;
}

int BasisState::multiplicity(Var x) const {
  const auto [lo, hi] = std::equal_range(mono.begin(), mono.end(), x.packed());
  return static_cast<int>(hi - lo);
}

void BasisState::multiply(Var x) { mono.insert(std::upper_bound(mono.begin(), mono.end(), x.packed()), x.packed()); }

void BasisState::remove_one(Var x) { mono.erase(std::lower_bound(mono.begin(), mono.end(), x.packed())); }

std::string BasisState::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < mono.size();) {
    std::size_t j = i;
    while (j < mono.size() && mono[j] == mono[i]) ++j;
    os << Var::from_packed(mono[i]).str();
    if (j - i > 1) os << "^" << (j - i);
    os << "*";
    i = j;
  }
  os << "v" << static_cast<int>(v);
  return os.str();
}

std::size_t BasisState::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ v;
  for (std::uint32_t x : mono) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---------------------------------------------------------------------------
// FockVector

FockVector::FockVector(BasisState s, Rational c) {
  if (!c.is_zero()) terms_.emplace_back(std::move(s), std::move(c));
}

FockVector FockVector::from_terms(std::vector<FockTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const FockTerm& a, const FockTerm& b) { return a.first < b.first; });
  FockVector out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (o.terms_.empty()) return *this;
  std::vector<FockTerm> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (!c.is_zero()) merged.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) { return *this += Rational(-1) * o; }

FockVector& FockVector::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

std::string FockVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    text::write_term(os, c, s.str(), first);
    first = false;
  }
  return os.str();
}

namespace {

BasisState parse_state_product(text::Cursor& cur, Rational& coeff) {
  BasisState s;
  bool v_seen = false;
  do {
    if (cur.at_digit()) {
      coeff *= cur.rational_literal();
      continue;
    }
    if (cur.accept('v')) {
      const long long i = cur.integer();
      if ((i != 0 && i != 1) || v_seen) cur.fail("expected a single v0 or v1");
      s.v = static_cast<std::uint8_t>(i);
      v_seen = true;
      continue;
    }
    VarKind kind;
    if (cur.accept('x')) {
      kind = VarKind::X;
    } else if (cur.accept('y')) {
      kind = VarKind::Y;
    } else {
      cur.fail("expected x_n, x1_n, y_n, y1_n, v0, v1 or a number");
    }
    if (cur.peek() == '1') {
      cur.accept('1');
      kind = kind == VarKind::X ? VarKind::X1 : VarKind::Y1;
    }
    cur.expect('_');
    const long long idx = cur.integer();
    if ((kind == VarKind::Y || kind == VarKind::Y1) && idx > -1) cur.fail("y variables have negative indices");
    if (idx < -(Var::kOffset - 1) || idx > Var::kOffset - 1) cur.fail("variable index out of range");
    long long e = 1;
    if (cur.accept('^')) e = cur.integer();
    if (e < 0) cur.fail("negative exponent");
    for (long long i = 0; i < e; ++i) s.multiply(Var(kind, static_cast<int>(idx)));
  } while (cur.accept('*'));
  return s;
}

}  // namespace

FockVector FockVector::parse(std::string_view text) {
  text::Cursor cur(text);
  std::vector<FockTerm> terms;
  bool neg = false;
  if (cur.accept('-')) {
    neg = true;
  } else {
    cur.accept('+');
  }
  for (;;) {
    Rational c = neg ? -1 : 1;
    BasisState s = parse_state_product(cur, c);
    terms.emplace_back(std::move(s), std::move(c));
    if (cur.accept('+')) {
      neg = false;
    } else if (cur.accept('-')) {
      neg = true;
    } else {
      break;
    }
  }
  cur.skip_ws();
  if (!cur.done()) cur.fail("unexpected trailing input");
  return from_terms(std::move(terms));
}

void FockAccumulator::add(const FockVector& v, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [s, x] : v.terms()) terms_.emplace_back(s, x * c);
}

std::vector<BasisState> enumerate_states(const std::vector<Var>& vars, int degree_max,
                                         const std::vector<int>& v_indices) {
  std::vector<Var> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<BasisState> monos;
  BasisState cur;
  // Monomials as non-decreasing index sequences.
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    monos.push_back(cur);
    if (left == 0) return;
    for (std::size_t i = from; i < sorted.size(); ++i) {
      cur.mono.push_back(sorted[i].packed());
      self(self, i, left - 1);
      cur.mono.pop_back();
    }
  };
  rec(rec, 0, degree_max);
  std::sort(monos.begin(), monos.end());
  std::vector<BasisState> out;
  out.reserve(monos.size() * v_indices.size());
  for (const auto& m : monos) {
    for (int vi : v_indices) {
      BasisState s = m;
      s.v = static_cast<std::uint8_t>(vi);
      out.push_back(std::move(s));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operators

void apply_op(const ModeOp& op, const VMatrixEntries& vm, const BasisState& s, const Rational& c,
              std::vector<FockTerm>& out) {
  for (const OpAtom& a : op.atoms) {
    switch (a.kind) {
      case OpAtom::Kind::Mul: {
        BasisState t = s;
        t.multiply(a.var);
        out.emplace_back(std::move(t), c * a.scale);
        break;
      }
      case OpAtom::Kind::Deriv: {
        const int k = s.multiplicity(a.var);
        if (k == 0) break;
        BasisState t = s;
        t.remove_one(a.var);
        out.emplace_back(std::move(t), c * a.scale * k);
        break;
      }
      case OpAtom::Kind::Scalar:
        out.emplace_back(s, c * a.scale);
        break;
      case OpAtom::Kind::VMatrix: {
        const Rational& to0 = s.v == 0 ? vm.m00 : vm.m01;
        const Rational& to1 = s.v == 0 ? vm.m10 : vm.m11;
        if (!to0.is_zero()) {
          BasisState t = s;
          t.v = 0;
          out.emplace_back(std::move(t), c * to0);
        }
        if (!to1.is_zero()) {
          BasisState t = s;
          t.v = 1;
          out.emplace_back(std::move(t), c * to1);
        }
        break;
      }
    }
  }
}

namespace {

OpAtom mul(Var v) { return {OpAtom::Kind::Mul, v, 1}; }
OpAtom deriv(Var v, Rational scale) { return {OpAtom::Kind::Deriv, v, std::move(scale)}; }

FockVector apply_to_vector(const ModeOp& op, const VMatrixEntries& vm, const FockVector& v) {
  std::vector<FockTerm> out;
  for (const auto& [s, c] : v.terms()) apply_op(op, vm, s, c, out);
  return FockVector::from_terms(std::move(out));
}

}  // namespace

std::string osc_name(OscKind k) {
  switch (k) {
    case OscKind::A: return "a";
    case OscKind::AStar: return "a*";
    case OscKind::A1: return "a1";
    case OscKind::A1Star: return "a1*";
  }
  return "?";
}

std::string heis_name(HeisKind k) { return k == HeisKind::B ? "b" : "b1"; }

ModeOp osc_mode_op(OscKind which, int m, const OscConfig& cfg) {
  if (cfg.r != 0 && cfg.r != 1) throw std::invalid_argument("OscConfig: r must be 0 or 1");
  const VarKind family = (which == OscKind::A || which == OscKind::AStar) ? VarKind::X : VarKind::X1;
  ModeOp op;
  if (which == OscKind::A || which == OscKind::A1) {
    if (m >= 0 && cfg.r == 0) {
      op.atoms.push_back(deriv(Var(family, m), 1));
      op.annihilation = true;
    } else {
      op.atoms.push_back(mul(Var(family, m)));
    }
  } else {
    if (m <= 0 && cfg.r == 0) {
      op.atoms.push_back(mul(Var(family, -m)));
    } else {
      op.atoms.push_back(deriv(Var(family, -m), -1));
      op.annihilation = true;
    }
  }
  return op;
}

FockVector apply_osc(OscKind which, int m, const FockVector& v, const OscConfig& cfg) {
  return apply_to_vector(osc_mode_op(which, m, cfg), {}, v);
}

ModeOp heis_mode_op(HeisKind which, int n, const HeisParams& p) {
  ModeOp op;
  const Var y = Var(VarKind::Y, -n);
  const Var y1 = Var(VarKind::Y1, -n);
  auto add_deriv = [&](VarKind k, int idx, const Rational& scale) {
    if (!scale.is_zero()) op.atoms.push_back(deriv(Var(k, idx), scale));
  };
  if (which == HeisKind::B) {
    if (n < 0) {
      op.atoms.push_back(mul(Var(VarKind::Y, n)));
    } else if (n > 0) {
      add_deriv(VarKind::Y, -n, Rational(-2 * n) * p.kappa0);
      add_deriv(VarKind::Y1, -n, Rational(-2 * n) * p.chi1);
      op.annihilation = true;
    } else {
      op.atoms.push_back({OpAtom::Kind::Scalar, Var(), p.lambda});
      op.annihilation = true;
    }
    return op;
  }
  (void)y;
  (void)y1;
  if (p.variant == HeisVariant::Derived) {
    if (n < 0) {
      op.atoms.push_back(mul(Var(VarKind::Y1, n)));
    } else if (n > 0) {
      add_deriv(VarKind::Y, -n, Rational(-2 * n) * p.chi1);
      add_deriv(VarKind::Y1, -n - 2, Rational(-2 * (n + 1)) * p.kappa0);
      add_deriv(VarKind::Y1, -n - 1, Rational(-4 * (2 * n + 1)) * p.kappa0);
      op.annihilation = true;
    } else {
      op.atoms.push_back({OpAtom::Kind::VMatrix, Var(), 1});
      add_deriv(VarKind::Y1, -2, Rational(-2) * p.kappa0);
      add_deriv(VarKind::Y1, -1, Rational(-4) * p.kappa0);
      op.annihilation = true;
    }
    return op;
  }
  // Literal formulas.
  if (n < 0) {
    op.atoms.push_back(mul(Var(VarKind::Y1, n)));
    if (n == -1) add_deriv(VarKind::Y1, -3, p.kappa0);
    if (n == -3) add_deriv(VarKind::Y1, -1, -p.kappa0);
  } else if (n > 0) {
    add_deriv(VarKind::Y, -n, Rational(-2 * n) * p.chi1);
    add_deriv(VarKind::Y1, -n - 4, Rational(2 * (n + 2)) * p.kappa0);
    add_deriv(VarKind::Y1, -n - 2, Rational(-4 * (n + 1)) * p.c * p.kappa0);
    add_deriv(VarKind::Y1, -n, Rational(2 * n) * p.kappa0);
    op.annihilation = true;
  } else {
    add_deriv(VarKind::Y1, -4, Rational(4) * p.kappa0);
    add_deriv(VarKind::Y1, -2, Rational(-2) * p.c * p.kappa0);
    op.atoms.push_back({OpAtom::Kind::VMatrix, Var(), 1});
    op.annihilation = true;
  }
  return op;
}

FockVector apply_heis(HeisKind which, int n, const FockVector& v, const HeisParams& p) {
  return apply_to_vector(heis_mode_op(which, n, p), p.b1_zero_matrix(), v);
}

Rational heis_bracket_value(HeisKind x, int m, HeisKind y, int n, const HeisParams& p) {
  auto delta = [](int a, int b) { return a == b ? 1 : 0; };
  if (x == HeisKind::B && y == HeisKind::B) return Rational(-2 * m * delta(m + n, 0)) * p.kappa0;
  if (x == HeisKind::B1 && y == HeisKind::B1)
    return Rational(2 * ((n + 1) * delta(m + n, -2) + (4 * n + 2) * delta(m + n, -1))) * p.kappa0;
  if (x == HeisKind::B1 && y == HeisKind::B) return Rational(-2 * m * delta(m, -n)) * p.chi1;
  return Rational(2 * n * delta(m, -n)) * p.chi1;
}

FockVector heis_bracket_check(HeisKind x, int m, HeisKind y, int n, const FockVector& v, const HeisParams& p) {
  FockVector r = apply_heis(x, m, apply_heis(y, n, v, p), p);
  r -= apply_heis(y, n, apply_heis(x, m, v, p), p);
  r -= heis_bracket_value(x, m, y, n, p) * v;
  return r;
}

}  // namespace threept
