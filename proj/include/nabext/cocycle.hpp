#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "nabext/algebra.hpp"
#include "nabext/multilinear.hpp"
#include "nabext/split_dgla.hpp"

namespace nabext {

/// Bilinear map X ⊗ Y → Z between different spaces: entry (k, i, j) is the
/// coefficient of z_k in f(x_i, y_j).
class BilinearMap {
public:
  BilinearMap() = default;
  BilinearMap(Field f, std::size_t left_dim, std::size_t right_dim, std::size_t out_dim);

  Field field() const { return field_; }
  std::size_t left_dim() const { return left_; }
  std::size_t right_dim() const { return right_; }
  std::size_t out_dim() const { return out_; }

  Scalar &at(std::size_t k, std::size_t i, std::size_t j) {
    return coeffs_.at((k * left_ + i) * right_ + j);
  }
  const Scalar &at(std::size_t k, std::size_t i, std::size_t j) const {
    return coeffs_.at((k * left_ + i) * right_ + j);
  }
  std::span<const Scalar> coeffs() const { return coeffs_; }
  std::span<Scalar> coeffs() { return coeffs_; }

  Vector apply(const Vector &x, const Vector &y) const;
  Vector on_basis(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  friend BilinearMap operator-(const BilinearMap &a, const BilinearMap &b);
  friend bool operator==(const BilinearMap &, const BilinearMap &) = default;

private:
  Field field_{};
  std::size_t left_ = 0, right_ = 0, out_ = 0;
  std::vector<Scalar> coeffs_;
};

/// A candidate non-abelian 2-cocycle (φ, ψ, χ) of B with values in A:
///   phi: B ⊗ A → A   (φ_b(a), the left twisted action)
///   psi: A ⊗ B → A   (ψ_b(a) = psi(a, b), the right twisted action)
///   chi: B ⊗ B → A
/// Validity is checked by check_cocycle, not enforced.
struct NabCocycle {
  Algebra A;
  Algebra B;
  BilinearMap phi;
  BilinearMap psi;
  BilinearMap chi;

  static NabCocycle zero(Algebra A, Algebra B);
  /// Throws std::invalid_argument if any map has the wrong shape or field.
  void validate_shapes() const;
  SplitSpace split() const { return {A.dim(), B.dim()}; }

  /// φ_b(a), ψ_b(a), χ(b1, b2) on coordinate vectors.
  Vector phi_of(const Vector &b, const Vector &a) const { return phi.apply(b, a); }
  Vector psi_of(const Vector &b, const Vector &a) const { return psi.apply(a, b); }
  Vector chi_of(const Vector &b1, const Vector &b2) const { return chi.apply(b1, b2); }

  friend bool operator==(const NabCocycle &x, const NabCocycle &y) {
    return x.A == y.A && x.B == y.B && x.phi == y.phi && x.psi == y.psi && x.chi == y.chi;
  }
};

enum class CocycleEquation {
  Eq1_LeftTwist,
  Eq2_RightTwist,
  Eq3_Commute,
  Eq4_Derivation,
  Eq5_ChiCocycle,
};

std::string to_string(CocycleEquation e);

/// A failed cocycle identity at a basis tuple. The discrepancy is the value
/// of the matching associator component of build_extension(c) at the
/// witness, so it is nonzero exactly when the identity fails there.
struct CocycleViolation {
  CocycleEquation which;
  std::string clause;
  Pattern pattern;                       ///< blocks of the witness arguments
  std::array<std::size_t, 3> witness{};  ///< basis indices local to each block
  Vector discrepancy;
};

/// Evaluates every cocycle identity on every basis tuple:
///   Eq1  φ_{b1}(φ_{b2}(a)) = φ_{b1 b2}(a) + χ(b1, b2)·a                (BBA)
///   Eq2  ψ_{b2}(ψ_{b1}(a)) = ψ_{b1 b2}(a) + a·χ(b1, b2)                (ABB)
///   Eq3  φ_{b1}(ψ_{b2}(a)) = ψ_{b2}(φ_{b1}(a))                          (BAB)
///   Eq4  ψ_b(a1 a2) = a1·ψ_b(a2)                                        (AAB)
///        ψ_b(a1)·a2 = a1·φ_b(a2)                                        (ABA)
///        φ_b(a1 a2) = φ_b(a1)·a2                                        (BAA)
///   Eq5  −φ_{b1}(χ(b2,b3)) + χ(b1 b2, b3) − χ(b1, b2 b3) + ψ_{b3}(χ(b1,b2)) = 0  (BBB)
/// Eq4 is enforced through its three compatibility identities; the weaker
/// "ψ − φ is a derivation" form is reported by psi_minus_phi_is_derivation.
/// Throws std::invalid_argument if A or B is not associative.
std::vector<CocycleViolation> check_cocycle(const NabCocycle &c, bool stop_at_first = false);
bool is_cocycle(const NabCocycle &c);

/// ψ_b − φ_b is a derivation of A for every basis b.
bool psi_minus_phi_is_derivation(const NabCocycle &c);

/// m_E(a1 + b1, a2 + b2) = a1 a2 + φ_{b1}(a2) + ψ_{b2}(a1) + χ(b1, b2) + b1 b2
/// on the split space A ⊕ B. No validity requirement.
Algebra build_extension(const NabCocycle &c);

/// The associator (x·y)·z − x·(y·z) of an algebra as an arity-3 cochain.
MultilinearMap associator_map(const Algebra &alg);

struct ComponentKey {
  Pattern in;
  Block out;
  friend auto operator<=>(const ComponentKey &, const ComponentKey &) = default;
};

/// All 16 components As^{out}_{XYZ} of the associator of a split algebra.
std::map<ComponentKey, MultilinearMap> associator_component_table(const Algebra &m);

/// The seven A-valued associator components that encode the cocycle
/// identities: BBB, BBA, BAB, ABB, AAB, ABA, BAA.
const std::vector<Pattern> &cocycle_patterns();

/// χ + φ + ψ as one A-valued arity-2 cochain on A ⊕ B.
LElement cocycle_to_mc(const NabCocycle &c);
/// Reads φ, ψ, χ back from the BA, AB and BB components of x.
NabCocycle mc_to_cocycle(const LElement &x, const Algebra &A, const Algebra &B);

/// l_delta(x) + x∘x, with l_delta = [m_A + m_B, ·].
///
/// x∘x = ½[x, x] for degree-1 x whenever 2 is invertible; x∘x is the form
/// that also makes sense in characteristic 2.
LElement mc_residual(const LElement &x, const Algebra &base);
bool is_mc(const LElement &x, const Algebra &base);

} // namespace nabext
