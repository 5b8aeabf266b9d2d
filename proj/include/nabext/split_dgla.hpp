#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nabext/algebra.hpp"
#include "nabext/multilinear.hpp"

namespace nabext {

/// Word X1...Xn over {A, B} selecting one block per input slot.
using Pattern = std::vector<Block>;

std::vector<Pattern> all_patterns(std::size_t n);
std::string to_string(const Pattern &p);
/// Parses a word such as "BBA".
Pattern parse_pattern(std::string_view word);
char block_letter(Block b);

/// Number of A's and B's in a pattern: the bidegree (i, j) of L_{i,j}.
struct Bidegree {
  std::size_t a_count = 0;
  std::size_t b_count = 0;
  friend auto operator<=>(const Bidegree &, const Bidegree &) = default;
};

Bidegree bidegree(const Pattern &p);

/// Pattern of a basis input tuple on the split space.
Pattern pattern_of(const SplitSpace &split, std::span<const std::size_t> inputs);

/// The component f^{out}_{pattern} = P_out ∘ f ∘ i ∘ P_pattern, kept on the
/// whole split space and zero off-pattern, so components add as tensors.
MultilinearMap extract_component(const MultilinearMap &f, const Pattern &in_pattern, Block out);

/// True iff f is an endomorphism cochain on a split space whose B-output is
/// identically zero.
bool in_L(const MultilinearMap &f);

/// Bidegrees of the patterns on which f has a nonzero component.
std::vector<Bidegree> bidegree_support(const MultilinearMap &f);

/// True iff alg is split and its product is m_A ⊕ m_B with no cross terms.
bool is_base_product(const Algebra &alg);

/// An A-valued cochain on A ⊕ B; construction enforces membership in L.
///
/// L is taken to be all A-valued multilinear maps on A ⊕ B (every input
/// word), graded by arity − 1. The finer bigrading is available through
/// bidegree_support.
class LElement {
public:
  /// Throws std::invalid_argument if f is not in L.
  static LElement from(MultilinearMap f);
  static LElement zero(Field f, std::size_t arity, const SplitSpace &split);

  const MultilinearMap &map() const { return map_; }
  const SplitSpace &split() const { return *map_.split(); }
  std::size_t arity() const { return map_.arity(); }
  int degree() const { return map_.degree(); }
  bool is_zero() const { return map_.is_zero(); }

  LElement operator-() const { return LElement(-map_); }
  friend LElement operator+(const LElement &a, const LElement &b) {
    return LElement(a.map_ + b.map_);
  }
  friend LElement operator-(const LElement &a, const LElement &b) {
    return LElement(a.map_ - b.map_);
  }
  friend LElement operator*(const Scalar &s, const LElement &a) { return LElement(s * a.map_); }
  friend bool operator==(const LElement &a, const LElement &b) { return a.map_ == b.map_; }

private:
  explicit LElement(MultilinearMap f) : map_(std::move(f)) {}
  MultilinearMap map_;
};

/// The differential of L: [m_A + m_B, f] for the base product of `base`.
/// Equal to the Hochschild differential on arity-1 elements such as gauge
/// parameters. Throws std::invalid_argument unless `base` is a base product
/// on f's split space.
LElement l_delta(const LElement &f, const Algebra &base);

/// Gerstenhaber bracket restricted to L.
LElement l_bracket(const LElement &f, const LElement &g);

} // namespace nabext
