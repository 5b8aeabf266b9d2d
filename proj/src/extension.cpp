#include "nabext/extension.hpp"

#include <stdexcept>

namespace nabext {

namespace {

std::size_t dim_e(const ExtensionPresentation &ext) { return ext.E.dim(); }

Vector pull_back(const Matrix &iota, const Vector &v, const char *what) {
  auto x = solve(iota, v);
  if (!x)
    throw std::logic_error(std::string(what) + " is not in the image of iota");
  return *x;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t budget) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (n > budget / base)
      throw std::length_error("enumeration exceeds the budget of " + std::to_string(budget));
    n *= base;
  }
  if (n > budget)
    throw std::length_error("enumeration exceeds the budget of " + std::to_string(budget));
  return n;
}

std::string basis_label(const char *space, std::size_t i) {
  return std::string(space) + "[" + std::to_string(i) + "]";
}

} // namespace

ExtensionPresentation ExtensionPresentation::induced(Algebra E, Matrix iota, Matrix p) {
  const Field f = E.field();
  const std::size_t de = E.dim();
  if (iota.rows() != de || p.cols() != de)
    throw std::invalid_argument("extension: iota must be dim E × dim A and p dim B × dim E");
  if (iota.field() != f || p.field() != f)
    throw std::invalid_argument("extension: field mismatch");
  const std::size_t da = iota.cols(), db = p.rows();

  Algebra A(f, da), B(f, db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      Vector prod = multiply(E, iota.column(i), iota.column(j));
      auto x = solve(iota, prod);
      if (!x)
        throw std::invalid_argument("extension: image of iota is not closed under the product");
      for (std::size_t k = 0; k < da; ++k)
        A.set_constant(i, j, k, (*x)[k]);
    }
  ExtensionPresentation ext{std::move(E), std::move(A), std::move(B), std::move(iota),
                            std::move(p)};
  std::optional<Section> s;
  try {
    s = any_section(ext);
  } catch (const std::invalid_argument &) {
    throw std::invalid_argument("extension: p is not surjective");
  }
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      Vector prod = ext.p.apply(multiply(ext.E, s->s.column(i), s->s.column(j)));
      for (std::size_t k = 0; k < db; ++k)
        ext.B.set_constant(i, j, k, prod[k]);
    }
  return ext;
}

ExtensionPresentation ExtensionPresentation::from_cocycle(const NabCocycle &c) {
  c.validate_shapes();
  const Field f = c.A.field();
  const SplitSpace s = c.split();
  Matrix iota(f, s.total(), s.a_dim), p(f, s.b_dim, s.total());
  for (std::size_t i = 0; i < s.a_dim; ++i)
    iota.at(s.a_index(i), i) = Scalar::one(f);
  for (std::size_t j = 0; j < s.b_dim; ++j)
    p.at(j, s.b_index(j)) = Scalar::one(f);
  return {build_extension(c), c.A, c.B, std::move(iota), std::move(p)};
}

Diagnostics verify_extension(const ExtensionPresentation &ext) {
  Diagnostics d;
  const Field f = ext.E.field();
  const std::size_t de = dim_e(ext), da = ext.A.dim(), db = ext.B.dim();
  if (ext.A.field() != f || ext.B.field() != f || ext.iota.field() != f || ext.p.field() != f)
    d.failures.push_back("field mismatch");
  if (ext.iota.rows() != de || ext.iota.cols() != da)
    d.failures.push_back("iota must be dim E × dim A");
  if (ext.p.rows() != db || ext.p.cols() != de)
    d.failures.push_back("p must be dim B × dim E");
  if (!d.ok())
    return d;

  const std::size_t ri = rank(ext.iota), rp = rank(ext.p);
  if (ri != da)
    d.failures.push_back("iota is not injective (rank " + std::to_string(ri) + " < " +
                         std::to_string(da) + ")");
  if (rp != db)
    d.failures.push_back("p is not surjective (rank " + std::to_string(rp) + " < " +
                         std::to_string(db) + ")");
  if (!(ext.p * ext.iota).is_zero())
    d.failures.push_back("p ∘ iota is not zero");
  else if (ri + rp != de)
    d.failures.push_back("not exact at E: image(iota) is smaller than kernel(p)");

  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      Vector lhs = ext.iota.apply(ext.A.basis_product(i, j));
      Vector rhs = multiply(ext.E, ext.iota.column(i), ext.iota.column(j));
      if (lhs != rhs)
        d.failures.push_back("iota is not multiplicative at (" + basis_label("A", i) + ", " +
                             basis_label("A", j) + ")");
    }
  for (std::size_t i = 0; i < de; ++i)
    for (std::size_t j = 0; j < de; ++j) {
      Vector lhs = ext.p.apply(ext.E.basis_product(i, j));
      Vector rhs = multiply(ext.B, ext.p.column(i), ext.p.column(j));
      if (lhs != rhs)
        d.failures.push_back("p is not multiplicative at (" + basis_label("E", i) + ", " +
                             basis_label("E", j) + ")");
    }
  if (!is_associative(ext.A))
    d.failures.push_back("A is not associative");
  if (!is_associative(ext.B))
    d.failures.push_back("B is not associative");
  if (auto w = find_associator_witness(ext.E))
    d.failures.push_back("E is not associative at (" + basis_label("E", w->basis_triple[0]) +
                         ", " + basis_label("E", w->basis_triple[1]) + ", " +
                         basis_label("E", w->basis_triple[2]) + ")");
  return d;
}

bool is_section(const ExtensionPresentation &ext, const Section &s) {
  if (s.s.rows() != dim_e(ext) || s.s.cols() != ext.B.dim() || s.s.field() != ext.E.field())
    return false;
  return ext.p * s.s == Matrix::identity(ext.E.field(), ext.B.dim());
}

Section any_section(const ExtensionPresentation &ext) {
  const Field f = ext.E.field();
  const std::size_t db = ext.B.dim();
  Matrix s(f, dim_e(ext), db);
  for (std::size_t b = 0; b < db; ++b) {
    auto x = solve(ext.p, basis_vector(f, db, b));
    if (!x)
      throw std::invalid_argument("p has no section: it is not surjective");
    for (std::size_t r = 0; r < dim_e(ext); ++r)
      s.at(r, b) = (*x)[r];
  }
  return {std::move(s)};
}

Section canonical_section(const SplitSpace &split, Field f) {
  Matrix s(f, split.total(), split.b_dim);
  for (std::size_t j = 0; j < split.b_dim; ++j)
    s.at(split.b_index(j), j) = Scalar::one(f);
  return {std::move(s)};
}

NabCocycle cocycle_from_section(const ExtensionPresentation &ext, const Section &s) {
  if (!is_section(ext, s))
    throw std::invalid_argument("cocycle_from_section: p ∘ s is not the identity");
  const std::size_t da = ext.A.dim(), db = ext.B.dim();
  NabCocycle c = NabCocycle::zero(ext.A, ext.B);
  for (std::size_t i = 0; i < db; ++i) {
    const Vector sb = s.s.column(i);
    for (std::size_t j = 0; j < da; ++j) {
      const Vector a = ext.iota.column(j);
      Vector phi = pull_back(ext.iota, multiply(ext.E, sb, a), "s(b)·a");
      Vector psi = pull_back(ext.iota, multiply(ext.E, a, sb), "a·s(b)");
      for (std::size_t k = 0; k < da; ++k) {
        c.phi.at(k, i, j) = phi[k];
        c.psi.at(k, j, i) = psi[k];
      }
    }
    for (std::size_t j = 0; j < db; ++j) {
      Vector v = multiply(ext.E, sb, s.s.column(j));
      v = sub(v, s.s.apply(ext.B.basis_product(i, j)));
      Vector chi = pull_back(ext.iota, v, "s(b1)·s(b2) − s(b1 b2)");
      for (std::size_t k = 0; k < da; ++k)
        c.chi.at(k, i, j) = chi[k];
    }
  }
  return c;
}

GaugeParam section_difference(const ExtensionPresentation &ext, const Section &s,
                              const Section &s_prime) {
  if (!is_section(ext, s) || !is_section(ext, s_prime))
    throw std::invalid_argument("section_difference: arguments must be sections");
  const Field f = ext.E.field();
  const std::size_t da = ext.A.dim(), db = ext.B.dim();
  const Matrix diff = s.s - s_prime.s;
  GaugeParam beta = GaugeParam::zero(f, da, db);
  for (std::size_t j = 0; j < db; ++j) {
    Vector x = pull_back(ext.iota, diff.column(j), "s − s'");
    for (std::size_t k = 0; k < da; ++k)
      beta.beta.at(k, j) = x[k];
  }
  return beta;
}

Diagnostics check_extension_equivalence(const ExtensionPresentation &ext,
                                        const ExtensionPresentation &ext_prime,
                                        const Matrix &theta) {
  Diagnostics d;
  const std::size_t de = dim_e(ext);
  if (theta.rows() != dim_e(ext_prime) || theta.cols() != de) {
    d.failures.push_back("theta must be dim E' × dim E");
    return d;
  }
  if (ext.iota.cols() != ext_prime.iota.cols() || ext.p.rows() != ext_prime.p.rows() ||
      theta.field() != ext.E.field() || ext_prime.E.field() != ext.E.field()) {
    d.failures.push_back("extensions have different A, B or field");
    return d;
  }
  for (std::size_t i = 0; i < de; ++i)
    for (std::size_t j = 0; j < de; ++j) {
      Vector lhs = theta.apply(ext.E.basis_product(i, j));
      Vector rhs = multiply(ext_prime.E, theta.column(i), theta.column(j));
      if (lhs != rhs)
        d.failures.push_back("theta is not multiplicative at (" + basis_label("E", i) + ", " +
                             basis_label("E", j) + ")");
    }
  if (theta * ext.iota != ext_prime.iota)
    d.failures.push_back("theta ∘ iota != iota'");
  if (ext_prime.p * theta != ext.p)
    d.failures.push_back("p' ∘ theta != p");
  return d;
}

Matrix equivalence_map(const SplitSpace &split, const GaugeParam &beta) {
  const Field f = beta.beta.field();
  if (beta.beta.rows() != split.a_dim || beta.beta.cols() != split.b_dim)
    throw std::invalid_argument("equivalence_map: beta shape mismatch");
  Matrix theta = Matrix::identity(f, split.total());
  for (std::size_t i = 0; i < split.a_dim; ++i)
    for (std::size_t j = 0; j < split.b_dim; ++j)
      theta.at(split.a_index(i), split.b_index(j)) = beta.beta.at(i, j);
  return theta;
}

std::vector<Matrix> all_matrices(Field f, std::size_t rows, std::size_t cols,
                                 std::uint64_t budget) {
  if (!f.is_prime())
    throw std::invalid_argument("all_matrices: needs a finite field");
  const std::uint32_t p = f.characteristic();
  const std::uint64_t n = checked_power(p, rows * cols, budget);
  std::vector<Matrix> out;
  out.reserve(n);
  for (std::uint64_t code = 0; code < n; ++code) {
    Matrix m(f, rows, cols);
    std::uint64_t c = code;
    for (std::size_t e = rows * cols; e-- > 0;) {
      m.at(e / cols, e % cols) = Scalar(f, static_cast<std::int64_t>(c % p));
      c /= p;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Section> enumerate_sections(const ExtensionPresentation &ext, std::uint64_t budget) {
  const Section s0 = any_section(ext);
  std::vector<Section> out;
  for (const Matrix &beta : all_matrices(ext.E.field(), ext.A.dim(), ext.B.dim(), budget))
    out.push_back({s0.s + ext.iota * beta});
  return out;
}

} // namespace nabext
