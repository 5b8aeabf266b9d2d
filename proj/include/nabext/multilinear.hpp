#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "nabext/scalar.hpp"

namespace nabext {

enum class Block { A, B };

/// A vector space presented as A ⊕ B: indices [0, a_dim) span A and
/// [a_dim, a_dim + b_dim) span B.
struct SplitSpace {
  std::size_t a_dim = 0;
  std::size_t b_dim = 0;

  std::size_t total() const { return a_dim + b_dim; }
  Block block_of(std::size_t i) const { return i < a_dim ? Block::A : Block::B; }
  std::size_t a_index(std::size_t local) const { return local; }
  std::size_t b_index(std::size_t local) const { return a_dim + local; }
  std::size_t block_dim(Block b) const { return b == Block::A ? a_dim : b_dim; }
  std::size_t global_index(Block b, std::size_t local) const {
    return b == Block::A ? a_index(local) : b_index(local);
  }

  friend bool operator==(const SplitSpace &, const SplitSpace &) = default;
};

/// An n-ary multilinear map V^{⊗n} → W stored as a dense tensor.
///
/// Entry (k, i1, ..., in) is the coefficient of target basis vector k in
/// f(e_i1, ..., e_in). Storage is row-major with k outermost. The graded
/// degree of a cochain is arity - 1. Equality compares the tensors only;
/// the optional split is descriptive metadata about the source space.
class MultilinearMap {
public:
  MultilinearMap() = default;
  MultilinearMap(Field f, std::size_t arity, std::size_t source_dim,
                 std::size_t target_dim);

  /// Zero map on an endomorphism space, carrying the split.
  static MultilinearMap zero_on(Field f, std::size_t arity, const SplitSpace &split);
  static MultilinearMap identity(Field f, std::size_t dim);

  Field field() const { return field_; }
  std::size_t arity() const { return arity_; }
  int degree() const { return static_cast<int>(arity_) - 1; }
  std::size_t source_dim() const { return source_dim_; }
  std::size_t target_dim() const { return target_dim_; }
  const std::optional<SplitSpace> &split() const { return split_; }
  void set_split(std::optional<SplitSpace> s);

  /// Number of input tuples, source_dim^arity.
  std::size_t input_count() const { return input_count_; }
  std::size_t size() const { return coeffs_.size(); }

  Scalar &at(std::size_t k, std::span<const std::size_t> inputs);
  const Scalar &at(std::size_t k, std::span<const std::size_t> inputs) const;
  Scalar &at(std::size_t k, std::initializer_list<std::size_t> inputs) {
    return at(k, std::span<const std::size_t>(inputs.begin(), inputs.size()));
  }
  const Scalar &at(std::size_t k, std::initializer_list<std::size_t> inputs) const {
    return at(k, std::span<const std::size_t>(inputs.begin(), inputs.size()));
  }
  /// Direct access by (output, flattened input tuple).
  Scalar &entry(std::size_t k, std::size_t input_flat) {
    return coeffs_[k * input_count_ + input_flat];
  }
  const Scalar &entry(std::size_t k, std::size_t input_flat) const {
    return coeffs_[k * input_count_ + input_flat];
  }
  std::span<const Scalar> coeffs() const { return coeffs_; }

  std::size_t flatten(std::span<const std::size_t> inputs) const;
  void unflatten(std::size_t flat, std::span<std::size_t> inputs) const;

  /// f(e_i1, ..., e_in) as a vector in the target.
  Vector on_basis(std::span<const std::size_t> inputs) const;
  Vector evaluate(std::span<const Vector> args) const;

  bool is_zero() const;

  MultilinearMap operator-() const;
  MultilinearMap &operator+=(const MultilinearMap &o);
  MultilinearMap &operator-=(const MultilinearMap &o);
  friend MultilinearMap operator+(MultilinearMap a, const MultilinearMap &b) { return a += b; }
  friend MultilinearMap operator-(MultilinearMap a, const MultilinearMap &b) { return a -= b; }
  friend MultilinearMap operator*(const Scalar &s, MultilinearMap f);
  friend bool operator==(const MultilinearMap &a, const MultilinearMap &b);

private:
  void require_same_shape(const MultilinearMap &o) const;

  Field field_{};
  std::size_t arity_ = 0;
  std::size_t source_dim_ = 0;
  std::size_t target_dim_ = 0;
  std::size_t input_count_ = 1;
  std::optional<SplitSpace> split_;
  std::vector<Scalar> coeffs_;
};

/// Odometer over all index tuples in [0, base)^n, last index fastest; matches
/// MultilinearMap's input flattening.
class IndexTuples {
public:
  IndexTuples(std::size_t n, std::size_t base) : idx_(n, 0), base_(base) {
    done_ = n > 0 && base == 0;
  }
  bool done() const { return done_; }
  std::span<const std::size_t> current() const { return idx_; }
  void next();

private:
  std::vector<std::size_t> idx_;
  std::size_t base_;
  bool done_;
};

} // namespace nabext
