#include "nabext/algebra.hpp"

#include <stdexcept>

namespace nabext {

namespace {

std::vector<std::string> default_basis(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i)
    names.push_back("e" + std::to_string(i));
  return names;
}

} // namespace

Algebra::Algebra(Field f, std::size_t dim, std::vector<std::string> basis)
    : basis_(basis.empty() ? default_basis(dim) : std::move(basis)),
      product_(f, 2, dim, dim) {
  if (dim == 0)
    throw std::invalid_argument("algebra dimension must be positive");
  if (basis_.size() != dim)
    throw std::invalid_argument("basis name count does not match dimension");
}

Algebra Algebra::from_product(MultilinearMap product, std::vector<std::string> basis) {
  if (product.arity() != 2 || product.source_dim() != product.target_dim())
    throw std::invalid_argument("algebra product must be an arity-2 endomorphism cochain");
  Algebra alg(product.field(), product.source_dim(), std::move(basis));
  alg.product_ = std::move(product);
  return alg;
}

void Algebra::set_constant(std::size_t i, std::size_t j, std::size_t k, Scalar c) {
  if (c.field() != field())
    throw std::invalid_argument("structure constant field mismatch");
  product_.at(k, {i, j}) = c;
}

Vector Algebra::basis_product(std::size_t i, std::size_t j) const {
  std::array<std::size_t, 2> idx{i, j};
  return product_.on_basis(idx);
}

Vector multiply(const Algebra &alg, const Vector &x, const Vector &y) {
  if (x.size() != alg.dim() || y.size() != alg.dim())
    throw std::invalid_argument("multiply: vector dimension does not match algebra");
  Vector out = zero_vector(alg.field(), alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      if (y[j].is_zero())
        continue;
      Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < alg.dim(); ++k) {
        const Scalar &c = alg.constant(i, j, k);
        if (!c.is_zero())
          out[k] += w * c;
      }
    }
  }
  return out;
}

Vector associator(const Algebra &alg, const Vector &x, const Vector &y, const Vector &z) {
  return sub(multiply(alg, multiply(alg, x, y), z), multiply(alg, x, multiply(alg, y, z)));
}

std::optional<AssociatorWitness> find_associator_witness(const Algebra &alg) {
  const std::size_t n = alg.dim();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i)
    basis.push_back(basis_vector(alg.field(), n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = alg.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = multiply(alg, ij, basis[k]);
        Vector rhs = multiply(alg, basis[i], alg.basis_product(j, k));
        Vector diff = sub(lhs, rhs);
        if (!is_zero(diff))
          return AssociatorWitness{{i, j, k}, std::move(diff)};
      }
    }
  return std::nullopt;
}

bool is_associative(const Algebra &alg) { return !find_associator_witness(alg).has_value(); }

Algebra direct_sum_space(const Algebra &a, const Algebra &b) {
  if (a.field() != b.field())
    throw std::invalid_argument("direct sum of algebras over different fields");
  SplitSpace split{a.dim(), b.dim()};
  std::vector<std::string> names;
  for (const auto &n : a.basis())
    names.push_back(n);
  for (const auto &n : b.basis())
    names.push_back(n);
  Algebra sum(a.field(), split.total(), std::move(names));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        sum.set_constant(split.a_index(i), split.a_index(j), split.a_index(k),
                         a.constant(i, j, k));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        sum.set_constant(split.b_index(i), split.b_index(j), split.b_index(k),
                         b.constant(i, j, k));
  sum.set_split(split);
  return sum;
}

Algebra block_algebra(const Algebra &split_alg, Block block) {
  if (!split_alg.split())
    throw std::invalid_argument("algebra carries no A/B split");
  const SplitSpace &s = *split_alg.split();
  const std::size_t n = s.block_dim(block);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(split_alg.basis().at(s.global_index(block, i)));
  Algebra out(split_alg.field(), n, std::move(names));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        out.set_constant(i, j, k,
                         split_alg.constant(s.global_index(block, i), s.global_index(block, j),
                                            s.global_index(block, k)));
  return out;
}

} // namespace nabext
