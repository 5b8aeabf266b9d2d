#include "nabext/cocycle.hpp"

#include <stdexcept>

#include "nabext/cochain.hpp"

namespace nabext {

BilinearMap::BilinearMap(Field f, std::size_t left_dim, std::size_t right_dim,
                         std::size_t out_dim)
    : field_(f), left_(left_dim), right_(right_dim), out_(out_dim),
      coeffs_(left_dim * right_dim * out_dim, Scalar::zero(f)) {}

Vector BilinearMap::apply(const Vector &x, const Vector &y) const {
  if (x.size() != left_ || y.size() != right_)
    throw std::invalid_argument("bilinear map argument dimension mismatch");
  Vector out = zero_vector(field_, out_);
  for (std::size_t i = 0; i < left_; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < right_; ++j) {
      if (y[j].is_zero())
        continue;
      Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < out_; ++k) {
        const Scalar &c = at(k, i, j);
        if (!c.is_zero())
          out[k] += w * c;
      }
    }
  }
  return out;
}

Vector BilinearMap::on_basis(std::size_t i, std::size_t j) const {
  Vector out(out_);
  for (std::size_t k = 0; k < out_; ++k)
    out[k] = at(k, i, j);
  return out;
}

bool BilinearMap::is_zero() const {
  for (const auto &c : coeffs_)
    if (!c.is_zero())
      return false;
  return true;
}

BilinearMap operator-(const BilinearMap &a, const BilinearMap &b) {
  if (a.left_ != b.left_ || a.right_ != b.right_ || a.out_ != b.out_)
    throw std::invalid_argument("bilinear map shape mismatch");
  BilinearMap r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] -= b.coeffs_[i];
  return r;
}

NabCocycle NabCocycle::zero(Algebra A, Algebra B) {
  if (A.field() != B.field())
    throw std::invalid_argument("cocycle algebras over different fields");
  const Field f = A.field();
  const std::size_t m = A.dim(), n = B.dim();
  NabCocycle c{std::move(A), std::move(B), BilinearMap(f, n, m, m), BilinearMap(f, m, n, m),
               BilinearMap(f, n, n, m)};
  return c;
}

void NabCocycle::validate_shapes() const {
  const std::size_t m = A.dim(), n = B.dim();
  const Field f = A.field();
  if (B.field() != f || phi.field() != f || psi.field() != f || chi.field() != f)
    throw std::invalid_argument("cocycle field mismatch");
  auto check = [](const BilinearMap &g, std::size_t l, std::size_t r, std::size_t o,
                  const char *name) {
    if (g.left_dim() != l || g.right_dim() != r || g.out_dim() != o)
      throw std::invalid_argument(std::string("cocycle component ") + name + " has wrong shape");
  };
  check(phi, n, m, m, "phi");
  check(psi, m, n, m, "psi");
  check(chi, n, n, m, "chi");
}

std::string to_string(CocycleEquation e) {
  switch (e) {
  case CocycleEquation::Eq1_LeftTwist:
    return "Eq1_LeftTwist";
  case CocycleEquation::Eq2_RightTwist:
    return "Eq2_RightTwist";
  case CocycleEquation::Eq3_Commute:
    return "Eq3_Commute";
  case CocycleEquation::Eq4_Derivation:
    return "Eq4_Derivation";
  case CocycleEquation::Eq5_ChiCocycle:
    return "Eq5_ChiCocycle";
  }
  return "?";
}

namespace {

struct CocycleContext {
  const NabCocycle &c;
  Field f;
  std::vector<Vector> ea, eb;

  explicit CocycleContext(const NabCocycle &cc) : c(cc), f(cc.A.field()) {
    for (std::size_t i = 0; i < c.A.dim(); ++i)
      ea.push_back(basis_vector(f, c.A.dim(), i));
    for (std::size_t i = 0; i < c.B.dim(); ++i)
      eb.push_back(basis_vector(f, c.B.dim(), i));
  }
  Vector ma(const Vector &x, const Vector &y) const { return multiply(c.A, x, y); }
  Vector mb(const Vector &x, const Vector &y) const { return multiply(c.B, x, y); }
};

} // namespace

std::vector<CocycleViolation> check_cocycle(const NabCocycle &c, bool stop_at_first) {
  c.validate_shapes();
  if (!is_associative(c.A))
    throw std::invalid_argument("check_cocycle: algebra A is not associative");
  if (!is_associative(c.B))
    throw std::invalid_argument("check_cocycle: algebra B is not associative");

  const CocycleContext ctx(c);
  const std::size_t m = c.A.dim(), n = c.B.dim();
  std::vector<CocycleViolation> out;
  auto report = [&](CocycleEquation which, const char *clause, const char *word, std::size_t i,
                    std::size_t j, std::size_t k, Vector disc) {
    if (is_zero(disc))
      return false;
    out.push_back({which, clause, parse_pattern(word), {i, j, k}, std::move(disc)});
    return stop_at_first;
  };
  const auto &ea = ctx.ea;
  const auto &eb = ctx.eb;

  // Eq5 (BBB): χ(b1 b2, b3) + ψ_{b3}(χ(b1,b2)) − χ(b1, b2 b3) − φ_{b1}(χ(b2,b3))
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector d = c.chi_of(ctx.mb(eb[i], eb[j]), eb[k]);
        d = add(d, c.psi_of(eb[k], c.chi_of(eb[i], eb[j])));
        d = sub(d, c.chi_of(eb[i], ctx.mb(eb[j], eb[k])));
        d = sub(d, c.phi_of(eb[i], c.chi_of(eb[j], eb[k])));
        if (report(CocycleEquation::Eq5_ChiCocycle,
                   "-phi_b1(chi(b2,b3)) + chi(b1 b2,b3) - chi(b1,b2 b3) + psi_b3(chi(b1,b2)) = 0",
                   "BBB", i, j, k, std::move(d)))
          return out;
      }
  // Eq1 (BBA): φ_{b1 b2}(a) + χ(b1,b2)·a − φ_{b1}(φ_{b2}(a))
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Vector d = add(c.phi_of(ctx.mb(eb[i], eb[j]), ea[k]), ctx.ma(c.chi_of(eb[i], eb[j]), ea[k]));
        d = sub(d, c.phi_of(eb[i], c.phi_of(eb[j], ea[k])));
        if (report(CocycleEquation::Eq1_LeftTwist,
                   "phi_b1(phi_b2(a)) = phi_{b1 b2}(a) + chi(b1,b2)·a", "BBA", i, j, k,
                   std::move(d)))
          return out;
      }
  // Eq2 (ABB): ψ_{b2}(ψ_{b1}(a)) − ψ_{b1 b2}(a) − a·χ(b1,b2)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector d = c.psi_of(eb[k], c.psi_of(eb[j], ea[i]));
        d = sub(d, c.psi_of(ctx.mb(eb[j], eb[k]), ea[i]));
        d = sub(d, ctx.ma(ea[i], c.chi_of(eb[j], eb[k])));
        if (report(CocycleEquation::Eq2_RightTwist,
                   "psi_b2(psi_b1(a)) = psi_{b1 b2}(a) + a·chi(b1,b2)", "ABB", i, j, k,
                   std::move(d)))
          return out;
      }
  // Eq3 (BAB): ψ_{b2}(φ_{b1}(a)) − φ_{b1}(ψ_{b2}(a))
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector d = sub(c.psi_of(eb[k], c.phi_of(eb[i], ea[j])),
                       c.phi_of(eb[i], c.psi_of(eb[k], ea[j])));
        if (report(CocycleEquation::Eq3_Commute, "phi_b1(psi_b2(a)) = psi_b2(phi_b1(a))", "BAB",
                   i, j, k, std::move(d)))
          return out;
      }
  // Eq4 via its three compatibility identities.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector d = sub(c.psi_of(eb[k], ctx.ma(ea[i], ea[j])), ctx.ma(ea[i], c.psi_of(eb[k], ea[j])));
        if (report(CocycleEquation::Eq4_Derivation, "psi_b(a1 a2) = a1·psi_b(a2)", "AAB", i, j, k,
                   std::move(d)))
          return out;
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Vector d = sub(ctx.ma(c.psi_of(eb[j], ea[i]), ea[k]), ctx.ma(ea[i], c.phi_of(eb[j], ea[k])));
        if (report(CocycleEquation::Eq4_Derivation, "psi_b(a1)·a2 = a1·phi_b(a2)", "ABA", i, j, k,
                   std::move(d)))
          return out;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Vector d = sub(ctx.ma(c.phi_of(eb[i], ea[j]), ea[k]), c.phi_of(eb[i], ctx.ma(ea[j], ea[k])));
        if (report(CocycleEquation::Eq4_Derivation, "phi_b(a1 a2) = phi_b(a1)·a2", "BAA", i, j, k,
                   std::move(d)))
          return out;
      }
  return out;
}

bool is_cocycle(const NabCocycle &c) { return check_cocycle(c, true).empty(); }

bool psi_minus_phi_is_derivation(const NabCocycle &c) {
  c.validate_shapes();
  const CocycleContext ctx(c);
  auto D = [&](const Vector &b, const Vector &a) { return sub(c.psi_of(b, a), c.phi_of(b, a)); };
  for (const auto &b : ctx.eb)
    for (const auto &a1 : ctx.ea)
      for (const auto &a2 : ctx.ea) {
        Vector lhs = D(b, ctx.ma(a1, a2));
        Vector rhs = add(ctx.ma(D(b, a1), a2), ctx.ma(a1, D(b, a2)));
        if (lhs != rhs)
          return false;
      }
  return true;
}

Algebra build_extension(const NabCocycle &c) {
  c.validate_shapes();
  Algebra E = direct_sum_space(c.A, c.B);
  const SplitSpace s = c.split();
  const std::size_t m = s.a_dim, n = s.b_dim;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        E.set_constant(s.b_index(i), s.a_index(j), s.a_index(k), c.phi.at(k, i, j));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        E.set_constant(s.a_index(i), s.b_index(j), s.a_index(k), c.psi.at(k, i, j));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        E.set_constant(s.b_index(i), s.b_index(j), s.a_index(k), c.chi.at(k, i, j));
  }
  return E;
}

MultilinearMap associator_map(const Algebra &alg) {
  MultilinearMap as = circ_i(alg.product(), alg.product(), 1) - circ_i(alg.product(), alg.product(), 2);
  as.set_split(alg.split());
  return as;
}

std::map<ComponentKey, MultilinearMap> associator_component_table(const Algebra &m) {
  if (!m.split())
    throw std::invalid_argument("associator_component_table: algebra carries no split");
  MultilinearMap as = associator_map(m);
  std::map<ComponentKey, MultilinearMap> table;
  for (const Pattern &p : all_patterns(3))
    for (Block out : {Block::A, Block::B})
      table.emplace(ComponentKey{p, out}, extract_component(as, p, out));
  return table;
}

const std::vector<Pattern> &cocycle_patterns() {
  static const std::vector<Pattern> patterns = {
      parse_pattern("BBB"), parse_pattern("BBA"), parse_pattern("BAB"), parse_pattern("ABB"),
      parse_pattern("AAB"), parse_pattern("ABA"), parse_pattern("BAA")};
  return patterns;
}

LElement cocycle_to_mc(const NabCocycle &c) {
  c.validate_shapes();
  const SplitSpace s = c.split();
  MultilinearMap x = MultilinearMap::zero_on(c.A.field(), 2, s);
  for (std::size_t k = 0; k < s.a_dim; ++k) {
    for (std::size_t i = 0; i < s.b_dim; ++i)
      for (std::size_t j = 0; j < s.a_dim; ++j)
        x.at(s.a_index(k), {s.b_index(i), s.a_index(j)}) = c.phi.at(k, i, j);
    for (std::size_t i = 0; i < s.a_dim; ++i)
      for (std::size_t j = 0; j < s.b_dim; ++j)
        x.at(s.a_index(k), {s.a_index(i), s.b_index(j)}) = c.psi.at(k, i, j);
    for (std::size_t i = 0; i < s.b_dim; ++i)
      for (std::size_t j = 0; j < s.b_dim; ++j)
        x.at(s.a_index(k), {s.b_index(i), s.b_index(j)}) = c.chi.at(k, i, j);
  }
  return LElement::from(std::move(x));
}

NabCocycle mc_to_cocycle(const LElement &x, const Algebra &A, const Algebra &B) {
  const SplitSpace s = x.split();
  if (x.arity() != 2 || s.a_dim != A.dim() || s.b_dim != B.dim())
    throw std::invalid_argument("mc_to_cocycle: element does not match A ⊕ B");
  NabCocycle c = NabCocycle::zero(A, B);
  const MultilinearMap &f = x.map();
  for (std::size_t k = 0; k < s.a_dim; ++k) {
    for (std::size_t i = 0; i < s.b_dim; ++i)
      for (std::size_t j = 0; j < s.a_dim; ++j)
        c.phi.at(k, i, j) = f.at(s.a_index(k), {s.b_index(i), s.a_index(j)});
    for (std::size_t i = 0; i < s.a_dim; ++i)
      for (std::size_t j = 0; j < s.b_dim; ++j)
        c.psi.at(k, i, j) = f.at(s.a_index(k), {s.a_index(i), s.b_index(j)});
    for (std::size_t i = 0; i < s.b_dim; ++i)
      for (std::size_t j = 0; j < s.b_dim; ++j)
        c.chi.at(k, i, j) = f.at(s.a_index(k), {s.b_index(i), s.b_index(j)});
  }
  return c;
}

LElement mc_residual(const LElement &x, const Algebra &base) {
  if (x.arity() != 2)
    throw std::invalid_argument("mc_residual: element must have arity 2");
  MultilinearMap sq = circ(x.map(), x.map());
  sq.set_split(x.split());
  return l_delta(x, base) + LElement::from(std::move(sq));
}

bool is_mc(const LElement &x, const Algebra &base) { return mc_residual(x, base).is_zero(); }

} // namespace nabext
