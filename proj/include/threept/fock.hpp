#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "threept/rational.hpp"

namespace threept {

// ---------------------------------------------------------------------------
// State space Q[x] (x) Q[y] (x) V

/// Polynomial variable families: x_n, x1_n (n in Z) and y_n, y1_n (n <= -1).
enum class VarKind : std::uint8_t { X = 0, X1 = 1, Y = 2, Y1 = 3 };

/// A variable packed into 32 bits so that monomials sort by (kind, index).
class Var {
 public:
  static constexpr std::int32_t kOffset = 1 << 23;

  constexpr Var() = default;
  constexpr Var(VarKind kind, int index)
      : packed_((static_cast<std::uint32_t>(kind) << 24) | static_cast<std::uint32_t>(index + kOffset)) {}
  static constexpr Var from_packed(std::uint32_t p) {
    Var v;
    v.packed_ = p;
    return v;
  }

  constexpr VarKind kind() const { return static_cast<VarKind>(packed_ >> 24); }
  constexpr int index() const { return static_cast<int>(packed_ & 0xFFFFFFu) - kOffset; }
  constexpr std::uint32_t packed() const { return packed_; }

  std::string str() const;

  friend constexpr bool operator==(Var a, Var b) { return a.packed_ == b.packed_; }
  friend constexpr bool operator<(Var a, Var b) { return a.packed_ < b.packed_; }

 private:
  std::uint32_t packed_ = 0;
};

/// Basis vector: a monomial (sorted multiset of variables) tensored with v0 or v1.
struct BasisState {
  boost::container::small_vector<std::uint32_t, 8> mono;
  std::uint8_t v = 0;

  static BasisState vacuum(int v_index = 0);

  std::size_t degree() const { return mono.size(); }
  int multiplicity(Var x) const;
  void multiply(Var x);
  /// Removes one copy of x; the caller checks multiplicity first.
  void remove_one(Var x);

  std::string str() const;
  std::size_t hash() const;

  friend bool operator==(const BasisState& a, const BasisState& b) { return a.v == b.v && a.mono == b.mono; }
  friend bool operator<(const BasisState& a, const BasisState& b) {
    return a.mono != b.mono ? a.mono < b.mono : a.v < b.v;
  }
};

struct BasisStateHash {
  std::size_t operator()(const BasisState& s) const noexcept { return s.hash(); }
};

using FockTerm = std::pair<BasisState, Rational>;

/// Finite linear combination of basis states, sorted by state with no zero coefficients.
class FockVector {
 public:
  FockVector() = default;
  explicit FockVector(BasisState s, Rational c = 1);
  /// Sorts and merges arbitrary terms.
  static FockVector from_terms(std::vector<FockTerm> terms);
  /// Text syntax: "2*x_-1^2*y1_-2*v1 - 1/3*v0"; the V factor defaults to v0.
  static FockVector parse(std::string_view text);

  const std::vector<FockTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const Rational& c);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Rational& c, FockVector a) { return a *= c; }
  friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

  std::string str() const;

 private:
  std::vector<FockTerm> terms_;
};

/// Collects terms in any order; `finish` merges them into a FockVector.
class FockAccumulator {
 public:
  void add(const BasisState& s, const Rational& c) {
    if (!c.is_zero()) terms_.emplace_back(s, c);
  }
  void add(BasisState&& s, const Rational& c) {
    if (!c.is_zero()) terms_.emplace_back(std::move(s), c);
  }
  void add(const FockVector& v, const Rational& c = 1);
  FockVector finish() { return FockVector::from_terms(std::move(terms_)); }

 private:
  std::vector<FockTerm> terms_;
};

/// All states of total degree <= degree_max in `vars`, tensored with each of `v_indices`.
std::vector<BasisState> enumerate_states(const std::vector<Var>& vars, int degree_max,
                                         const std::vector<int>& v_indices = {0, 1});

// ---------------------------------------------------------------------------
// Elementary operators

/// One summand of a linear operator: multiplication by a variable, a scaled
/// derivative, a scalar, or the 2x2 matrix of b1_0 on V.
struct OpAtom {
  enum class Kind : std::uint8_t { Mul, Deriv, Scalar, VMatrix } kind;
  Var var;
  Rational scale;
};

/// Entries of the 2x2 matrix acting on V = Q v0 + Q v1:
/// v0 -> m00 v0 + m10 v1, v1 -> m01 v0 + m11 v1.
struct VMatrixEntries {
  Rational m00, m10, m01, m11;
};

/// A mode operator as a sum of atoms, labelled creation or annihilation for normal ordering.
struct ModeOp {
  boost::container::small_vector<OpAtom, 4> atoms;
  bool annihilation = false;
};

/// Applies `op` to a single term and appends the results to `out`.
void apply_op(const ModeOp& op, const VMatrixEntries& vm, const BasisState& s, const Rational& c,
              std::vector<FockTerm>& out);

// ---------------------------------------------------------------------------
// beta-gamma oscillators

enum class OscKind : std::uint8_t { A, AStar, A1, A1Star };

/// Normal-ordering / representation choice r in {0, 1}.
struct OscConfig {
  int r = 0;
};

/// rho_r(a_m) = d/dx_m (m >= 0, r = 0) else x_m;
/// rho_r(a*_m) = x_-m (m <= 0, r = 0) else -d/dx_-m. Same for a1 on x1.
ModeOp osc_mode_op(OscKind which, int m, const OscConfig& cfg);

FockVector apply_osc(OscKind which, int m, const FockVector& v, const OscConfig& cfg);

// ---------------------------------------------------------------------------
// Three-point Heisenberg algebra

enum class HeisKind : std::uint8_t { B, B1 };
enum class HeisVariant : std::uint8_t { Paper, Derived };

struct HeisParams {
  Rational lambda = 1;
  Rational mu = 0;
  Rational nu = 1;
  Rational varkappa = 1;
  Rational chi1 = 0;
  Rational kappa0 = 1;
  Rational c = 0;  ///< free constant of the literal b1 formulas; unused by Derived
  HeisVariant variant = HeisVariant::Derived;

  VMatrixEntries b1_zero_matrix() const { return {mu, nu, varkappa, mu}; }
};

/// Mode operators of the Borel representation on Q[y] (x) V.
///
/// Both variants share b_n (n < 0: y_n; n > 0: -n(2 kappa0 d/dy_-n + 2 chi1 d/dy1_-n);
/// b_0 = lambda). For b1_n the Derived variant uses
///   n < 0: y1_n
///   n > 0: -2n chi1 d/dy_-n - 2(n+1) kappa0 d/dy1_(-n-2) - 4(2n+1) kappa0 d/dy1_(-n-1)
///   n = 0: B0 - 2 kappa0 d/dy1_-2 - 4 kappa0 d/dy1_-1
/// and the Paper variant the formulas as printed, with kappa0 in place of chi0.
ModeOp heis_mode_op(HeisKind which, int n, const HeisParams& p);

FockVector apply_heis(HeisKind which, int n, const FockVector& v, const HeisParams& p);

/// Central value of [X_m, Y_n] in the Heisenberg algebra:
/// [b_m,b_n] = -2m d(m+n,0) kappa0, [b1_m,b1_n] = 2((n+1) d(m+n,-2) + (4n+2) d(m+n,-1)) kappa0,
/// [b1_m,b_n] = -2m d(m,-n) chi1, [b_m,b1_n] = 2n d(m,-n) chi1.
Rational heis_bracket_value(HeisKind x, int m, HeisKind y, int n, const HeisParams& p);

/// [X_m, Y_n] v - (central value) v; zero means the relation holds on v.
FockVector heis_bracket_check(HeisKind x, int m, HeisKind y, int n, const FockVector& v, const HeisParams& p);

std::string osc_name(OscKind k);
std::string heis_name(HeisKind k);

}  // namespace threept

template <>
struct std::hash<threept::BasisState> {
  std::size_t operator()(const threept::BasisState& s) const noexcept { return s.hash(); }
};
