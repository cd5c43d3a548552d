#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "threept/current.hpp"
#include "threept/fock.hpp"

namespace threept {

/// Free fields. Weight-1 fields expand as sum X_n z^(-n-1), the weight-0
/// fields alpha*, alpha1* as sum X_n z^(-n); the derivatives carry mode -n a*_n.
enum class FieldKind : std::uint8_t { Alpha, Alpha1, Beta, Beta1, AlphaStar, Alpha1Star, DAlphaStar, DAlpha1Star };

inline constexpr int kFieldKinds = 8;

int field_weight(FieldKind k);
std::string field_name(FieldKind k);

/// coeff * (sum_p zpoly[p] z^p) * :F1 ... Fk:
struct FieldTerm {
  Rational coeff = 1;
  std::map<int, Rational> zpoly{{0, Rational(1)}};
  boost::container::small_vector<FieldKind, 3> factors;

  std::string str() const;
};

using Field = std::vector<FieldTerm>;

std::string field_str(const Field& f);

/// The image of a current generator as a normal-ordered field in alpha, alpha*,
/// alpha1, alpha1*, beta, beta1 (z^2 + 4z written out as a z-polynomial).
Field tau_field(Gen g, const Rational& chi0);

struct RealizationConfig {
  OscConfig osc;
  HeisParams heis;

  /// Builds a config; throws std::invalid_argument if r is not 0/1 or chi1 != 0.
  static RealizationConfig make(int r, HeisParams heis);

  /// kappa0 + 4 for r = 0, kappa0 for r = 1.
  Rational chi0() const;
  void validate() const;
};

/// Applies field modes to Fock states for one fixed configuration.
///
/// For a term z^p :F1..Fk: the m-th mode sums over index tuples with
/// sum(n_i + w_i) = m + 1 + p. Annihilation-labelled modes act first. A
/// factor's annihilation indices are those whose operator touches the
/// state; creation indices range over a half-line (or all of Z for alpha at
/// r = 1) and are pinned down by the sum constraint, so every mode is a
/// finite sum.
class ModeEngine {
 public:
  explicit ModeEngine(RealizationConfig cfg, int table_radius = 64);

  const RealizationConfig& config() const { return cfg_; }
  const Field& tau(Gen g) const { return tau_[static_cast<int>(g)]; }

  /// Mode of an atomic field (derivative fields include the -n factor).
  const ModeOp& atomic_op(FieldKind k, int n) const;
  bool is_annihilation(FieldKind k, int n) const;

  /// Appends c * (field)_m s to `out` (unmerged). `reverse_groups` applies the
  /// annihilation and the creation modes each in reverse factor order.
  void apply_field(const Field& f, int m, const BasisState& s, const Rational& c, std::vector<FockTerm>& out,
                   bool reverse_groups = false) const;
  FockVector apply_field(const Field& f, int m, const FockVector& v, bool reverse_groups = false) const;

  FockVector apply_mode(Gen g, int m, const FockVector& v) const;
  void apply_mode(Gen g, int m, const BasisState& s, const Rational& c, std::vector<FockTerm>& out) const;

  /// Linear extension with w0 -> chi0 and w1 -> 0.
  FockVector tau_extend(const CurrentElem& x, const FockVector& v) const;

  /// Annihilation indices, per field kind, whose modes act nontrivially on a state.
  struct Candidates {
    std::array<std::vector<int>, kFieldKinds> annih;
  };
  Candidates candidates(const BasisState& s) const;
  /// apply_mode with candidates precomputed for `s`.
  void apply_mode(Gen g, int m, const BasisState& s, const Rational& c, const Candidates& cand,
                  std::vector<FockTerm>& out) const;

 private:
  void apply_term(const FieldTerm& t, int m, const BasisState& s, const Rational& c, const Candidates& cand,
                  std::vector<FockTerm>& out, bool reverse_groups) const;

  RealizationConfig cfg_;
  VMatrixEntries vm_;
  int radius_;
  std::array<std::vector<ModeOp>, kFieldKinds> table_;  // index n + radius_
  std::array<std::vector<int>, kFieldKinds> always_;     // annihilation modes acting on every state
  // For each kind, packed variable -> annihilation indices whose operator differentiates it.
  std::array<std::map<std::uint32_t, std::vector<int>>, kFieldKinds> by_var_;
  std::array<Field, 8> tau_;
};

FockVector apply_mode(Gen g, int m, const FockVector& v, const RealizationConfig& cfg);
FockVector tau_extend(const CurrentElem& x, const FockVector& v, const RealizationConfig& cfg);

// ---------------------------------------------------------------------------
// Pairwise lambda-brackets at mode level

enum class PairItem : std::uint8_t {
  Beta1Beta1 = 1,  ///< [beta1_lambda beta1] = -(2 P lambda + P') kappa0
  AlphaAlphaStar = 2,  ///< [:aa*:_lambda :aa*:] = -delta(r,0) lambda
  AlphaAlphaStarSq = 3,  ///< [:a(a*)^2:_lambda :a(a*)^2:] = -4 delta(r,0)(:a* da*: + :(a*)^2: lambda)
};

/// The field A of a pair item.
Field pair_field(PairItem item);

/// Coefficients c_j of lambda^j in [A_lambda A] (c_j = A_(j) A).
std::vector<Field> pair_lambda_coeffs(PairItem item, const RealizationConfig& cfg);

/// Generalised binomial coefficient C(m, j) for integer m, j >= 0.
Rational binomial(int m, int j);

/// [A_m, A_n] v - sum_j C(m, j) (c_j)_(m+n-j) v.
FockVector pair_residual(const ModeEngine& eng, PairItem item, int m, int n, const FockVector& v);

}  // namespace threept
