#pragma once

// Fixtures and independent oracles for the test suites.

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "nabext/algebra.hpp"
#include "nabext/classifier.hpp"
#include "nabext/cocycle.hpp"
#include "nabext/gauge.hpp"
#include "nabext/linalg.hpp"
#include "nabext/multilinear.hpp"

namespace testsupport {

using namespace nabext;

inline Field Q() { return Field::rationals(); }
inline Field F(std::uint32_t p) { return Field::prime(p); }

/// Small random scalars: over Q numerators in [-3, 3] and denominators in
/// {1, 2, 3}; over F_p a uniform residue.
inline Scalar random_scalar(std::mt19937_64 &rng, Field f, double zero_bias = 0.3) {
  std::uniform_real_distribution<double> coin(0, 1);
  if (coin(rng) < zero_bias)
    return Scalar::zero(f);
  if (f.is_prime()) {
    std::uniform_int_distribution<std::int64_t> d(0, f.characteristic() - 1);
    return Scalar(f, d(rng));
  }
  std::uniform_int_distribution<std::int64_t> num(-3, 3), den(1, 3);
  return Scalar(f, num(rng), den(rng));
}

inline Vector random_vector(std::mt19937_64 &rng, Field f, std::size_t dim) {
  Vector v;
  for (std::size_t i = 0; i < dim; ++i)
    v.push_back(random_scalar(rng, f, 0.2));
  return v;
}

inline MultilinearMap random_map(std::mt19937_64 &rng, Field f, std::size_t arity,
                                 std::size_t dim, double zero_bias = 0.5) {
  MultilinearMap m(f, arity, dim, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t flat = 0; flat < m.input_count(); ++flat)
      m.entry(k, flat) = random_scalar(rng, f, zero_bias);
  return m;
}

inline Matrix random_matrix(std::mt19937_64 &rng, Field f, std::size_t r, std::size_t c) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.at(i, j) = random_scalar(rng, f);
  return m;
}

inline Matrix random_invertible(std::mt19937_64 &rng, Field f, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, f, n, n);
    if (rank(m) == n)
      return m;
  }
}

inline Algebra algebra_from_table(Field f, std::size_t dim,
                                  const std::vector<std::array<std::int64_t, 4>> &terms) {
  Algebra a(f, dim);
  for (auto [i, j, k, c] : terms)
    a.set_constant(i, j, k, Scalar(f, c));
  return a;
}

/// A zoo of associative algebras of dimension <= 3.
inline std::vector<Algebra> associative_zoo(Field f) {
  std::vector<Algebra> out;
  out.push_back(Algebra(f, 1));                                   // zero product
  out.push_back(algebra_from_table(f, 1, {{0, 0, 0, 1}}));        // the field
  out.push_back(algebra_from_table(f, 2, {{0, 0, 0, 1}, {1, 1, 1, 1}}));  // k × k
  out.push_back(algebra_from_table(f, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}));  // k[x]/x²
  out.push_back(algebra_from_table(f, 3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1},
                                          {0, 2, 2, 1}, {2, 0, 2, 1}, {1, 1, 2, 1}}));  // k[x]/x³
  out.push_back(algebra_from_table(f, 2, {{0, 0, 1, 1}}));        // x·x = y, rest 0
  // upper-triangular 2×2: e11, e12, e22
  out.push_back(algebra_from_table(
      f, 3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}));
  // left-zero semigroup algebra: e_i e_j = e_i
  out.push_back(algebra_from_table(f, 2, {{0, 0, 0, 1}, {0, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 1, 1}}));
  return out;
}

/// Transports a product along a change of basis g (columns are new basis
/// vectors in old coordinates).
inline Algebra change_basis(const Algebra &a, const Matrix &g) {
  const Matrix ginv = *inverse(g);
  Algebra out(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector v = ginv.apply(multiply(a, g.column(i), g.column(j)));
      for (std::size_t k = 0; k < a.dim(); ++k)
        out.set_constant(i, j, k, v[k]);
    }
  return out;
}

/// Every product on F_2^dim, filtered by associativity with a direct
/// triple loop over basis elements.
inline std::vector<Algebra> all_associative_f2(std::size_t dim) {
  const Field f = F(2);
  const std::size_t cells = dim * dim * dim;
  std::vector<Algebra> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    Algebra a(f, dim);
    for (std::size_t t = 0; t < cells; ++t)
      if ((code >> t) & 1)
        a.set_constant(t / (dim * dim), (t / dim) % dim, t % dim, Scalar::one(f));
    bool assoc = true;
    for (std::size_t x = 0; x < dim && assoc; ++x)
      for (std::size_t y = 0; y < dim && assoc; ++y)
        for (std::size_t z = 0; z < dim && assoc; ++z) {
          Vector l = multiply(a, a.basis_product(x, y), basis_vector(f, dim, z));
          Vector r = multiply(a, basis_vector(f, dim, x), a.basis_product(y, z));
          assoc = l == r;
        }
    if (assoc)
      out.push_back(std::move(a));
  }
  return out;
}

inline Vector eval(const MultilinearMap &f, const std::vector<Vector> &args) {
  return f.evaluate(args);
}

/// δf on explicit vectors, straight from the defining formula.
inline Vector naive_delta(const MultilinearMap &f, const Algebra &amb,
                          const std::vector<Vector> &xs) {
  const std::size_t n = f.arity();
  Vector out = multiply(amb, xs[0], eval(f, {xs.begin() + 1, xs.end()}));
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Vector> args;
    for (std::size_t s = 0; s + 1 < i; ++s)
      args.push_back(xs[s]);
    args.push_back(multiply(amb, xs[i - 1], xs[i]));
    for (std::size_t s = i + 1; s <= n; ++s)
      args.push_back(xs[s]);
    Vector term = eval(f, args);
    out = i % 2 ? sub(out, term) : add(out, term);
  }
  Vector last = multiply(amb, eval(f, {xs.begin(), xs.begin() + n}), xs[n]);
  return (n + 1) % 2 ? sub(out, last) : add(out, last);
}

/// f ∘_i g on explicit vectors.
inline Vector naive_circ_i(const MultilinearMap &f, const MultilinearMap &g, std::size_t i,
                           const std::vector<Vector> &xs) {
  const std::size_t n = g.arity();
  std::vector<Vector> args(xs.begin(), xs.begin() + (i - 1));
  args.push_back(eval(g, {xs.begin() + (i - 1), xs.begin() + (i - 1 + n)}));
  args.insert(args.end(), xs.begin() + (i - 1 + n), xs.end());
  return eval(f, args);
}

inline std::vector<Vector> random_args(std::mt19937_64 &rng, Field f, std::size_t dim,
                                       std::size_t count) {
  std::vector<Vector> xs;
  for (std::size_t i = 0; i < count; ++i)
    xs.push_back(random_vector(rng, f, dim));
  return xs;
}

/// Scales a map by (−1)^k.
inline MultilinearMap signed_map(int k, const MultilinearMap &m) {
  return k % 2 ? -m : m;
}

inline NabCocycle random_candidate(std::mt19937_64 &rng, const Algebra &A, const Algebra &B) {
  NabCocycle c = NabCocycle::zero(A, B);
  for (auto *m : {&c.phi, &c.psi, &c.chi})
    for (Scalar &s : m->coeffs())
      s = random_scalar(rng, A.field(), 0.5);
  return c;
}

/// The four (a², b²) presets at dimension 1.
inline std::vector<std::pair<std::string, std::string>> square_variants() {
  return {{"zero", "zero"}, {"zero", "idem"}, {"idem", "zero"}, {"idem", "idem"}};
}

} // namespace testsupport
