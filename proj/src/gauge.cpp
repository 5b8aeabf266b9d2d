#include "nabext/gauge.hpp"

#include <array>
#include <stdexcept>

#include "nabext/cochain.hpp"

namespace nabext {

namespace {

void require_beta_shape(const GaugeParam &beta, const SplitSpace &split) {
  if (beta.beta.rows() != split.a_dim || beta.beta.cols() != split.b_dim)
    throw std::invalid_argument("gauge parameter must be a dim A x dim B matrix");
}

void require_gauge_inputs(const LElement &x, const GaugeParam &beta, const Algebra &base) {
  if (x.arity() != 2)
    throw std::invalid_argument("gauge: element must have arity 2");
  if (!is_base_product(base) || *base.split() != x.split())
    throw std::invalid_argument("gauge: base must be the split product m_A ⊕ m_B of x's space");
  if (beta.beta.field() != base.field())
    throw std::invalid_argument("gauge: field mismatch");
  require_beta_shape(beta, x.split());
}

Vector block_part(const Vector &v, const SplitSpace &s, Block b) {
  Vector r = zero_vector(v.front().field(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (s.block_of(i) == b)
      r[i] = v[i];
  return r;
}

} // namespace

LElement gauge_to_lelement(const GaugeParam &beta, const SplitSpace &split) {
  require_beta_shape(beta, split);
  MultilinearMap m = MultilinearMap::zero_on(beta.beta.field(), 1, split);
  for (std::size_t i = 0; i < split.a_dim; ++i)
    for (std::size_t j = 0; j < split.b_dim; ++j)
      m.at(split.a_index(i), {split.b_index(j)}) = beta.beta.at(i, j);
  return LElement::from(std::move(m));
}

LElement gauge_closed_form(const LElement &x, const GaugeParam &beta, const Algebra &base) {
  require_gauge_inputs(x, beta, base);
  const SplitSpace s = x.split();
  const Field f = base.field();
  const std::size_t d = s.total();
  const MultilinearMap &l = x.map();
  for (std::size_t i = 0; i < s.a_dim; ++i)
    for (std::size_t j = 0; j < s.a_dim; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!l.at(k, {i, j}).is_zero())
          throw std::invalid_argument("gauge_closed_form: element has a nonzero AA component");

  const MultilinearMap bmap = gauge_to_lelement(beta, s).map();
  auto apply_beta = [&](const Vector &v) {
    std::array<Vector, 1> arg{v};
    return bmap.evaluate(arg);
  };
  auto apply_l = [&](const Vector &u, const Vector &v) {
    std::array<Vector, 2> args{u, v};
    return l.evaluate(args);
  };
  auto m = [&](const Vector &u, const Vector &v) { return multiply(base, u, v); };

  MultilinearMap out = MultilinearMap::zero_on(f, 2, s);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      const Vector e1 = basis_vector(f, d, p);
      const Vector e2 = basis_vector(f, d, q);
      const Vector a1 = block_part(e1, s, Block::A), b1 = block_part(e1, s, Block::B);
      const Vector a2 = block_part(e2, s, Block::A), b2 = block_part(e2, s, Block::B);
      const Vector bb1 = apply_beta(b1), bb2 = apply_beta(b2);

      Vector v = apply_l(e1, e2);
      v = sub(v, apply_l(b1, bb2));
      v = sub(v, apply_l(bb1, b2));
      v = sub(v, m(bb1, a2));
      v = sub(v, m(a1, bb2));
      v = add(v, apply_beta(m(b1, b2)));
      v = add(v, m(bb1, bb2));
      for (std::size_t k = 0; k < d; ++k)
        out.at(k, {p, q}) = v[k];
    }
  return LElement::from(std::move(out));
}

GaugeSeriesResult gauge_series_detail(const LElement &x, const GaugeParam &beta,
                                      const Algebra &base, std::size_t max_order) {
  require_gauge_inputs(x, beta, base);
  const Field f = base.field();
  if (f.characteristic() == 2)
    throw std::domain_error("gauge_series needs 1/2; use gauge_closed_form in characteristic 2");

  const LElement b = gauge_to_lelement(beta, x.split());
  const LElement db = l_delta(b, base);

  auto inverse_factorial = [&](std::size_t n) {
    Scalar fact = Scalar::one(f);
    for (std::size_t i = 2; i <= n; ++i)
      fact *= Scalar(f, static_cast<std::int64_t>(i));
    if (fact.is_zero())
      throw std::domain_error(std::to_string(n) + "! is not invertible in " + f.name());
    return fact.inverse();
  };

  GaugeSeriesResult r{x, 0, 0};

  // exp(ad_β) x
  LElement term = x;
  std::size_t n = 0;
  while (!term.is_zero()) {
    if (n > 0)
      r.value = r.value + inverse_factorial(n) * term;
    if (++n > max_order)
      throw std::runtime_error("ad_beta is not nilpotent within the series bound");
    term = l_bracket(b, term);
  }
  r.exp_nilpotency = n;

  // g_β = −Σ (ad_β)^n dβ / (n+1)!
  term = db;
  n = 0;
  while (!term.is_zero()) {
    r.value = r.value - inverse_factorial(n + 1) * term;
    if (++n > max_order)
      throw std::runtime_error("ad_beta is not nilpotent within the series bound");
    term = l_bracket(b, term);
  }
  r.g_nilpotency = n;
  return r;
}

LElement gauge_series(const LElement &x, const GaugeParam &beta, const Algebra &base) {
  return gauge_series_detail(x, beta, base).value;
}

bool check_gauge_witness(const LElement &x, const LElement &x_prime, const GaugeParam &beta,
                         const Algebra &base) {
  if (x.split() != x_prime.split() || x_prime.arity() != 2)
    throw std::invalid_argument("check_gauge_witness: shape mismatch");
  return gauge_closed_form(x, beta, base) == x_prime;
}

NabCocycle apply_cocycle_equivalence(const NabCocycle &c, const GaugeParam &beta) {
  c.validate_shapes();
  require_beta_shape(beta, c.split());
  const Field f = c.A.field();
  const std::size_t m = c.A.dim(), n = c.B.dim();
  std::vector<Vector> ea, eb, bb;
  for (std::size_t i = 0; i < m; ++i)
    ea.push_back(basis_vector(f, m, i));
  for (std::size_t j = 0; j < n; ++j) {
    eb.push_back(basis_vector(f, n, j));
    bb.push_back(beta.beta.column(j));
  }
  auto ma = [&](const Vector &x, const Vector &y) { return multiply(c.A, x, y); };

  NabCocycle out = NabCocycle::zero(c.A, c.B);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector v = sub(c.phi_of(eb[i], ea[j]), ma(bb[i], ea[j]));
      for (std::size_t k = 0; k < m; ++k)
        out.phi.at(k, i, j) = v[k];
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = sub(c.psi_of(eb[j], ea[i]), ma(ea[i], bb[j]));
      for (std::size_t k = 0; k < m; ++k)
        out.psi.at(k, i, j) = v[k];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = c.chi_of(eb[i], eb[j]);
      v = sub(v, c.phi_of(eb[i], bb[j]));
      v = sub(v, c.psi_of(eb[j], bb[i]));
      v = add(v, beta.beta.apply(multiply(c.B, eb[i], eb[j])));
      v = add(v, ma(bb[i], bb[j]));
      for (std::size_t k = 0; k < m; ++k)
        out.chi.at(k, i, j) = v[k];
    }
  return out;
}

MultilinearMap bimodule_hochschild_delta(const MultilinearMap &f, const Algebra &B,
                                         const BilinearMap &left, const BilinearMap &right) {
  const std::size_t nb = B.dim();
  const std::size_t na = f.target_dim();
  if (f.source_dim() != nb || left.left_dim() != nb || left.right_dim() != na ||
      left.out_dim() != na || right.left_dim() != na || right.right_dim() != nb ||
      right.out_dim() != na)
    throw std::invalid_argument("bimodule_hochschild_delta: shape mismatch");
  const Field field = B.field();
  const std::size_t n = f.arity();
  MultilinearMap out(field, n + 1, nb, na);
  std::vector<std::size_t> inner(n);
  for (IndexTuples it(n + 1, nb); !it.done(); it.next()) {
    auto idx = it.current();
    Vector v = left.apply(basis_vector(field, nb, idx[0]), f.on_basis(idx.subspan(1)));
    for (std::size_t i = 1; i <= n; ++i) {
      Vector prod = B.basis_product(idx[i - 1], idx[i]);
      for (std::size_t r = 0; r < nb; ++r) {
        if (prod[r].is_zero())
          continue;
        std::size_t pos = 0;
        for (std::size_t s = 0; s < i - 1; ++s)
          inner[pos++] = idx[s];
        inner[pos++] = r;
        for (std::size_t s = i + 1; s <= n; ++s)
          inner[pos++] = idx[s];
        Scalar w = i % 2 == 1 ? -prod[r] : prod[r];
        axpy(v, w, f.on_basis(inner));
      }
    }
    Vector last = right.apply(f.on_basis(idx.first(n)), basis_vector(field, nb, idx[n]));
    v = (n + 1) % 2 == 1 ? sub(v, last) : add(v, last);
    std::size_t flat = out.flatten(idx);
    for (std::size_t k = 0; k < na; ++k)
      out.entry(k, flat) = v[k];
  }
  return out;
}

MultilinearMap chi_as_cochain(const NabCocycle &c) {
  MultilinearMap m(c.A.field(), 2, c.B.dim(), c.A.dim());
  for (std::size_t k = 0; k < c.A.dim(); ++k)
    for (std::size_t i = 0; i < c.B.dim(); ++i)
      for (std::size_t j = 0; j < c.B.dim(); ++j)
        m.at(k, {i, j}) = c.chi.at(k, i, j);
  return m;
}

MultilinearMap gauge_as_cochain(const GaugeParam &beta) {
  MultilinearMap m(beta.beta.field(), 1, beta.beta.cols(), beta.beta.rows());
  for (std::size_t k = 0; k < beta.beta.rows(); ++k)
    for (std::size_t j = 0; j < beta.beta.cols(); ++j)
      m.at(k, {j}) = beta.beta.at(k, j);
  return m;
}

AbelianData abelian_specialize(const NabCocycle &c) {
  c.validate_shapes();
  if (!c.A.product().is_zero())
    throw std::invalid_argument("abelian_specialize: A must have zero multiplication");
  if (!is_cocycle(c))
    throw std::invalid_argument("abelian_specialize: not a valid cocycle");

  const Field f = c.A.field();
  const std::size_t m = c.A.dim(), n = c.B.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vector b1 = basis_vector(f, n, i), b2 = basis_vector(f, n, j);
        const Vector a = basis_vector(f, m, k);
        const Vector b12 = multiply(c.B, b1, b2);
        if (c.phi_of(b1, c.phi_of(b2, a)) != c.phi_of(b12, a))
          throw std::logic_error("abelian_specialize: left action is not a module action");
        if (c.psi_of(b2, c.psi_of(b1, a)) != c.psi_of(b12, a))
          throw std::logic_error("abelian_specialize: right action is not a module action");
        if (c.phi_of(b1, c.psi_of(b2, a)) != c.psi_of(b2, c.phi_of(b1, a)))
          throw std::logic_error("abelian_specialize: actions do not commute");
      }

  AbelianData out{c.phi, c.psi, chi_as_cochain(c), {}};
  out.delta_chi = bimodule_hochschild_delta(out.chi, c.B, c.phi, c.psi);
  if (!out.delta_chi.is_zero())
    throw std::logic_error("abelian_specialize: chi is not a Hochschild cocycle");
  return out;
}

} // namespace nabext
