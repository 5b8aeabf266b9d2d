#pragma once

#include "nabext/cocycle.hpp"
#include "nabext/linalg.hpp"
#include "nabext/split_dgla.hpp"

namespace nabext {

/// A linear map β: B → A, stored as a dim A × dim B matrix. It is both the
/// degree-0 gauge parameter in L and the witness of cocycle equivalence.
struct GaugeParam {
  Matrix beta;

  static GaugeParam zero(Field f, std::size_t a_dim, std::size_t b_dim) {
    return {Matrix(f, a_dim, b_dim)};
  }
  GaugeParam operator-() const { return {-beta}; }
  friend bool operator==(const GaugeParam &, const GaugeParam &) = default;
};

/// β as an arity-1 element of L (B-inputs mapped into A, A-inputs to zero).
LElement gauge_to_lelement(const GaugeParam &beta, const SplitSpace &split);

/// Closed-form gauge action on an arity-2 element x = χ + φ + ψ:
///
///   x'(e1, e2) = x(e1, e2) − φ_{b1}(β b2) − ψ_{b2}(β b1) − (β b1)·a2 − a1·(β b2)
///              + β(b1 b2) + (β b1)·(β b2)
///
/// with e_i = a_i + b_i. No division, so valid in every characteristic.
/// Throws std::invalid_argument if x has a nonzero AA-component or shapes
/// disagree with `base`.
LElement gauge_closed_form(const LElement &x, const GaugeParam &beta, const Algebra &base);

struct GaugeSeriesResult {
  LElement value;
  /// Smallest n with (ad_β)^n x = 0.
  std::size_t exp_nilpotency = 0;
  /// Smallest n with (ad_β)^n dβ = 0.
  std::size_t g_nilpotency = 0;
};

/// exp(ad_β) x + g_β with g_β = −Σ_{n≥0} (ad_β)^n dβ / (n+1)!, summed until
/// the iterated brackets vanish. Throws std::domain_error in characteristic 2
/// or when a nonzero term needs a factorial that is not invertible, and
/// std::runtime_error if ad_β is not nilpotent within `max_order` steps.
GaugeSeriesResult gauge_series_detail(const LElement &x, const GaugeParam &beta,
                                      const Algebra &base, std::size_t max_order = 16);
LElement gauge_series(const LElement &x, const GaugeParam &beta, const Algebra &base);

/// x' == gauge_closed_form(x, beta, base), exactly.
bool check_gauge_witness(const LElement &x, const LElement &x_prime, const GaugeParam &beta,
                         const Algebra &base);

/// The cocycle c' that is β-equivalent to c, computed on the three maps:
///   φ'_b(a)    = φ_b(a) − β(b)·a
///   ψ'_b(a)    = ψ_b(a) − a·β(b)
///   χ'(b1, b2) = χ(b1, b2) − φ_{b1}(β(b2)) − ψ_{b2}(β(b1)) + β(b1 b2) + β(b1)·β(b2)
/// This is the cocycle obtained by replacing a section s with s − β.
NabCocycle apply_cocycle_equivalence(const NabCocycle &c, const GaugeParam &beta);

/// Hochschild differential of f: B^{⊗n} → A where A is a B-bimodule with
/// left action `left` (B ⊗ A → A) and right action `right` (A ⊗ B → A):
///   δf(b1..b_{n+1}) = b1·f(b2..) + Σ (−1)^i f(.., b_i b_{i+1}, ..) + (−1)^{n+1} f(b1..b_n)·b_{n+1}
MultilinearMap bimodule_hochschild_delta(const MultilinearMap &f, const Algebra &B,
                                         const BilinearMap &left, const BilinearMap &right);

/// χ as an arity-2 cochain B ⊗ B → A.
MultilinearMap chi_as_cochain(const NabCocycle &c);
/// β as an arity-1 cochain B → A.
MultilinearMap gauge_as_cochain(const GaugeParam &beta);

struct AbelianData {
  BilinearMap left_action;  ///< φ: B ⊗ A → A
  BilinearMap right_action; ///< ψ: A ⊗ B → A
  MultilinearMap chi;       ///< Hochschild 2-cochain B ⊗ B → A
  MultilinearMap delta_chi; ///< its bimodule Hochschild differential (zero)
};

/// For m_A = 0 a valid cocycle is a B-bimodule structure (φ, ψ) on A plus
/// a Hochschild 2-cocycle χ. Throws std::invalid_argument if m_A ≠ 0 or c is
/// not a cocycle; std::logic_error if the bimodule axioms or δχ = 0 fail.
AbelianData abelian_specialize(const NabCocycle &c);

} // namespace nabext
