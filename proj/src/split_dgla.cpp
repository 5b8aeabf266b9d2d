#include "nabext/split_dgla.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nabext/cochain.hpp"

namespace nabext {

std::vector<Pattern> all_patterns(std::size_t n) {
  std::vector<Pattern> out;
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t bits = 0; bits < count; ++bits) {
    Pattern p(n);
    for (std::size_t s = 0; s < n; ++s)
      p[s] = (bits >> (n - 1 - s)) & 1 ? Block::B : Block::A;
    out.push_back(std::move(p));
  }
  return out;
}

char block_letter(Block b) { return b == Block::A ? 'A' : 'B'; }

std::string to_string(const Pattern &p) {
  std::string s;
  for (Block b : p)
    s.push_back(block_letter(b));
  return s;
}

Pattern parse_pattern(std::string_view word) {
  Pattern p;
  for (char c : word) {
    if (c == 'A')
      p.push_back(Block::A);
    else if (c == 'B')
      p.push_back(Block::B);
    else
      throw std::invalid_argument("pattern letters must be A or B: '" + std::string(word) + "'");
  }
  return p;
}

Bidegree bidegree(const Pattern &p) {
  Bidegree d;
  for (Block b : p)
    ++(b == Block::A ? d.a_count : d.b_count);
  return d;
}

Pattern pattern_of(const SplitSpace &split, std::span<const std::size_t> inputs) {
  Pattern p;
  p.reserve(inputs.size());
  for (std::size_t i : inputs)
    p.push_back(split.block_of(i));
  return p;
}

namespace {

const SplitSpace &require_split(const MultilinearMap &f) {
  if (!f.split())
    throw std::invalid_argument("cochain carries no A/B split");
  if (f.target_dim() != f.source_dim())
    throw std::invalid_argument("split cochain must be an endomorphism cochain");
  return *f.split();
}

} // namespace

MultilinearMap extract_component(const MultilinearMap &f, const Pattern &in_pattern, Block out) {
  const SplitSpace &split = require_split(f);
  if (in_pattern.size() != f.arity())
    throw std::invalid_argument("pattern length " + std::to_string(in_pattern.size()) +
                                " does not match arity " + std::to_string(f.arity()));
  MultilinearMap comp(f.field(), f.arity(), f.source_dim(), f.target_dim());
  comp.set_split(split);
  for (IndexTuples it(f.arity(), f.source_dim()); !it.done(); it.next()) {
    auto idx = it.current();
    if (pattern_of(split, idx) != in_pattern)
      continue;
    std::size_t flat = f.flatten(idx);
    for (std::size_t k = 0; k < f.target_dim(); ++k)
      if (split.block_of(k) == out)
        comp.entry(k, flat) = f.entry(k, flat);
  }
  return comp;
}

bool in_L(const MultilinearMap &f) {
  if (!f.split() || f.target_dim() != f.source_dim())
    return false;
  const SplitSpace &split = *f.split();
  for (std::size_t k = split.a_dim; k < split.total(); ++k)
    for (std::size_t flat = 0; flat < f.input_count(); ++flat)
      if (!f.entry(k, flat).is_zero())
        return false;
  return true;
}

std::vector<Bidegree> bidegree_support(const MultilinearMap &f) {
  const SplitSpace &split = require_split(f);
  std::set<Bidegree> found;
  for (IndexTuples it(f.arity(), f.source_dim()); !it.done(); it.next()) {
    auto idx = it.current();
    std::size_t flat = f.flatten(idx);
    for (std::size_t k = 0; k < f.target_dim(); ++k)
      if (!f.entry(k, flat).is_zero()) {
        found.insert(bidegree(pattern_of(split, idx)));
        break;
      }
  }
  return {found.begin(), found.end()};
}

bool is_base_product(const Algebra &alg) {
  if (!alg.split())
    return false;
  const SplitSpace &s = *alg.split();
  for (std::size_t i = 0; i < s.total(); ++i)
    for (std::size_t j = 0; j < s.total(); ++j)
      for (std::size_t k = 0; k < s.total(); ++k) {
        Block bi = s.block_of(i), bj = s.block_of(j), bk = s.block_of(k);
        bool allowed = bi == bj && bj == bk;
        if (!allowed && !alg.constant(i, j, k).is_zero())
          return false;
      }
  return true;
}

LElement LElement::from(MultilinearMap f) {
  if (!in_L(f))
    throw std::invalid_argument("cochain is not an A-valued map on a split space");
  return LElement(std::move(f));
}

LElement LElement::zero(Field f, std::size_t arity, const SplitSpace &split) {
  return LElement(MultilinearMap::zero_on(f, arity, split));
}

LElement l_delta(const LElement &f, const Algebra &base) {
  if (!is_base_product(base))
    throw std::invalid_argument("l_delta: base must be a split product m_A ⊕ m_B");
  if (*base.split() != f.split())
    throw std::invalid_argument("l_delta: split mismatch between cochain and base");
  MultilinearMap d = dgla_differential(f.map(), base.product());
  d.set_split(f.split());
  if (!in_L(d))
    throw std::logic_error("l_delta left L");
  return LElement::from(std::move(d));
}

LElement l_bracket(const LElement &f, const LElement &g) {
  if (f.split() != g.split())
    throw std::invalid_argument("l_bracket: split mismatch");
  MultilinearMap b = gerstenhaber_bracket(f.map(), g.map());
  b.set_split(f.split());
  if (!in_L(b))
    throw std::logic_error("l_bracket left L");
  return LElement::from(std::move(b));
}

} // namespace nabext
