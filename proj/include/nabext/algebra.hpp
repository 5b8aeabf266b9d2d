#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nabext/multilinear.hpp"
#include "nabext/scalar.hpp"

namespace nabext {

/// Finite-dimensional algebra given by structure constants e_i·e_j = Σ_k c_ij^k e_k.
///
/// Associativity is a predicate, not an invariant: candidate products
/// produced during enumeration are representable. The product is kept as a
/// dense arity-2 MultilinearMap so it can enter Gerstenhaber brackets
/// directly.
class Algebra {
public:
  Algebra() = default;
  /// Zero multiplication on a dim-dimensional space. Basis names default to e0, e1, ...
  Algebra(Field f, std::size_t dim, std::vector<std::string> basis = {});
  /// Wraps an arity-2 map V⊗V → V.
  static Algebra from_product(MultilinearMap product, std::vector<std::string> basis = {});

  Field field() const { return product_.field(); }
  std::size_t dim() const { return product_.source_dim(); }
  const std::vector<std::string> &basis() const { return basis_; }
  const MultilinearMap &product() const { return product_; }
  const std::optional<SplitSpace> &split() const { return product_.split(); }
  void set_split(std::optional<SplitSpace> s) { product_.set_split(s); }

  const Scalar &constant(std::size_t i, std::size_t j, std::size_t k) const {
    return product_.at(k, {i, j});
  }
  void set_constant(std::size_t i, std::size_t j, std::size_t k, Scalar c);
  /// e_i·e_j
  Vector basis_product(std::size_t i, std::size_t j) const;

  friend bool operator==(const Algebra &a, const Algebra &b) {
    return a.product_ == b.product_;
  }

private:
  std::vector<std::string> basis_;
  MultilinearMap product_;
};

Vector multiply(const Algebra &alg, const Vector &x, const Vector &y);
/// (x·y)·z − x·(y·z)
Vector associator(const Algebra &alg, const Vector &x, const Vector &y, const Vector &z);

struct AssociatorWitness {
  std::array<std::size_t, 3> basis_triple{};
  Vector value;
};

/// First basis triple (lexicographic) with nonzero associator, if any.
std::optional<AssociatorWitness> find_associator_witness(const Algebra &alg);
bool is_associative(const Algebra &alg);

/// A ⊕ B with product m_A ⊕ m_B (cross terms zero) and the split recorded.
/// Throws std::invalid_argument on field mismatch.
Algebra direct_sum_space(const Algebra &a, const Algebra &b);

/// The restriction of a split algebra's product to one block, as an algebra
/// on that block (i.e. P_X ∘ m ∘ i restricted to X⊗X).
Algebra block_algebra(const Algebra &split_alg, Block block);

} // namespace nabext
