#include <doctest.h>

#include <algorithm>

#include "nabext/cochain.hpp"
#include "nabext/split_dgla.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

Algebra line(Field f, bool idempotent) {
  return preset_algebra(f, 1, idempotent ? "idem" : "zero");
}

NabCocycle f2_example(int phi, int psi, int chi) {
  const Field f = F(2);
  NabCocycle c = NabCocycle::zero(line(f, false), line(f, true));
  c.phi.at(0, 0, 0) = Scalar(f, phi);
  c.psi.at(0, 0, 0) = Scalar(f, psi);
  c.chi.at(0, 0, 0) = Scalar(f, chi);
  return c;
}

LElement random_l(std::mt19937_64 &rng, Field f, std::size_t arity, const SplitSpace &s) {
  MultilinearMap m = random_map(rng, f, arity, s.total());
  m.set_split(s);
  for (std::size_t k = s.a_dim; k < s.total(); ++k)
    for (std::size_t flat = 0; flat < m.input_count(); ++flat)
      m.entry(k, flat) = Scalar::zero(f);
  return LElement::from(std::move(m));
}

// Random associative A and B drawn from the zoo, restricted to the given dims.
Algebra zoo_pick(std::mt19937_64 &rng, Field f, std::size_t dim) {
  std::vector<Algebra> fits;
  for (const Algebra &a : associative_zoo(f))
    if (a.dim() == dim)
      fits.push_back(a);
  std::uniform_int_distribution<std::size_t> pick(0, fits.size() - 1);
  return fits[pick(rng)];
}

const std::vector<SplitSpace> kSplits = {{1, 1}, {2, 1}, {1, 2}};

} // namespace

TEST_CASE("patterns and bidegrees") {
  CHECK(all_patterns(2).size() == 4);
  CHECK(to_string(all_patterns(3)[3]) == "ABB");
  CHECK(parse_pattern("BAB") == Pattern{Block::B, Block::A, Block::B});
  CHECK_THROWS_AS(parse_pattern("BXA"), std::invalid_argument);
  CHECK(bidegree(parse_pattern("BAB")) == Bidegree{1, 2});
}

TEST_CASE("components of the base product") {
  const Field q = Q();
  Algebra A = associative_zoo(q)[3], B = associative_zoo(q)[1];
  Algebra base = direct_sum_space(A, B);
  const MultilinearMap &m = base.product();
  for (const char *w : {"AB", "BA", "AA"})
    CHECK(extract_component(m, parse_pattern(w), Block::B).is_zero());
  MultilinearMap bb = extract_component(m, parse_pattern("BB"), Block::B);
  CHECK(bb.at(2, {2, 2}) == Scalar::one(q));
  CHECK(is_base_product(base));
  CHECK_FALSE(in_L(m));
  CHECK_THROWS_AS(extract_component(m, parse_pattern("ABA"), Block::A), std::invalid_argument);
}

TEST_CASE("components reassemble the map") {
  std::mt19937_64 rng(21);
  for (Field f : {Q(), F(2)})
    for (SplitSpace s : {SplitSpace{1, 1}, SplitSpace{2, 1}})
      for (std::size_t arity = 1; arity <= 3; ++arity) {
        MultilinearMap m = random_map(rng, f, arity, s.total());
        m.set_split(s);
        MultilinearMap sum = MultilinearMap::zero_on(f, arity, s);
        for (const Pattern &p : all_patterns(arity))
          for (Block out : {Block::A, Block::B})
            sum += extract_component(m, p, out);
        CHECK(sum == m);
      }
}

TEST_CASE("L is closed under the differential and the bracket") {
  std::mt19937_64 rng(22);
  for (Field f : {Q(), F(2), F(3)})
    for (SplitSpace s : kSplits) {
      Algebra base = direct_sum_space(zoo_pick(rng, f, s.a_dim), zoo_pick(rng, f, s.b_dim));
      for (int t = 0; t < 10; ++t) {
        std::uniform_int_distribution<std::size_t> ar(1, 2);
        LElement x = random_l(rng, f, ar(rng), s), y = random_l(rng, f, ar(rng), s);
        CHECK(in_L(l_delta(x, base).map()));
        CHECK(in_L(l_bracket(x, y).map()));
        CHECK(l_delta(l_delta(x, base), base).is_zero());
      }
      CHECK(l_delta(LElement::zero(f, 2, s), base).is_zero());
    }
}

TEST_CASE("L is a dgLa at dims (1,1) and (2,1)") {
  std::mt19937_64 rng(23);
  for (Field f : {Q(), F(2)})
    for (SplitSpace s : {SplitSpace{1, 1}, SplitSpace{2, 1}}) {
      Algebra base = direct_sum_space(zoo_pick(rng, f, s.a_dim), zoo_pick(rng, f, s.b_dim));
      for (int t = 0; t < 8; ++t) {
        LElement x = random_l(rng, f, 1 + t % 2, s), y = random_l(rng, f, 1 + (t / 2) % 2, s);
        const int p = x.degree();
        LElement dxy = l_delta(l_bracket(x, y), base);
        LElement rhs = l_bracket(l_delta(x, base), y);
        LElement second = l_bracket(x, l_delta(y, base));
        rhs = p % 2 ? rhs - second : rhs + second;
        CHECK(dxy == rhs);
        CHECK(l_delta(x, base).degree() == x.degree() + 1);
      }
    }
}

TEST_CASE("bidegree rule for brackets of concentrated generators") {
  std::mt19937_64 rng(24);
  const SplitSpace s{2, 1};
  for (int t = 0; t < 20; ++t) {
    std::uniform_int_distribution<std::size_t> ar(1, 2);
    const std::size_t ax = ar(rng), ay = ar(rng);
    auto patterns_x = all_patterns(ax), patterns_y = all_patterns(ay);
    std::uniform_int_distribution<std::size_t> px(0, patterns_x.size() - 1),
        py(0, patterns_y.size() - 1);
    const Pattern wx = patterns_x[px(rng)], wy = patterns_y[py(rng)];
    MultilinearMap fx = extract_component(random_l(rng, Q(), ax, s).map(), wx, Block::A);
    MultilinearMap fy = extract_component(random_l(rng, Q(), ay, s).map(), wy, Block::A);
    LElement b = l_bracket(LElement::from(fx), LElement::from(fy));
    const Bidegree dx = bidegree(wx), dy = bidegree(wy);
    for (Bidegree d : bidegree_support(b.map())) {
      CHECK(d.a_count == dx.a_count + dy.a_count - 1);
      CHECK(d.b_count == dx.b_count + dy.b_count);
    }
  }
}

TEST_CASE("l_delta on a gauge parameter and the two small brackets") {
  std::mt19937_64 rng(25);
  for (Field f : {Q(), F(3)})
    for (int t = 0; t < 10; ++t) {
      Algebra A = zoo_pick(rng, f, 2), B = zoo_pick(rng, f, 1);
      Algebra base = direct_sum_space(A, B);
      const SplitSpace s{2, 1};
      GaugeParam beta{random_matrix(rng, f, 2, 1)};
      LElement b = gauge_to_lelement(beta, s);
      NabCocycle c = random_candidate(rng, A, B);
      LElement x = cocycle_to_mc(c);
      LElement db = l_delta(b, base);
      LElement bphi = l_bracket(b, LElement::from(extract_component(x.map(), parse_pattern("BA"),
                                                                   Block::A)));
      LElement bchi = l_bracket(b, LElement::from(extract_component(x.map(), parse_pattern("BB"),
                                                                   Block::A)));
      LElement bdb = l_bracket(b, db);
      CHECK(bchi.is_zero());
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 3; ++q) {
          Vector e1 = basis_vector(f, 3, p), e2 = basis_vector(f, 3, q);
          Vector a1 = e1, b1 = e1, a2 = e2, b2 = e2;
          a1[2] = Scalar::zero(f);
          a2[2] = Scalar::zero(f);
          for (std::size_t i = 0; i < 2; ++i)
            b1[i] = b2[i] = Scalar::zero(f);
          std::vector<Vector> args{e1, e2};
          auto beta_of = [&](const Vector &v) {
            return eval(b.map(), std::vector<Vector>{v});
          };
          // δβ(e1, e2) = β(b1)·a2 + a1·β(b2) − β(b1 b2)
          Vector expect = add(multiply(base, beta_of(b1), a2), multiply(base, a1, beta_of(b2)));
          expect = sub(expect, beta_of(multiply(base, b1, b2)));
          CHECK(eval(db.map(), args) == expect);
          // [β, φ](e1, e2) = −φ_{b1}(β(b2))
          Vector phi_term = eval(x.map(), std::vector<Vector>{b1, beta_of(b2)});
          CHECK(eval(bphi.map(), args) == scale(Scalar(f, -1), phi_term));
          // −[β, δβ](e1, e2) = 2 β(b1)·β(b2)
          CHECK(scale(Scalar(f, -1), eval(bdb.map(), args)) ==
                scale(Scalar(f, 2), multiply(base, beta_of(b1), beta_of(b2))));
        }
    }
}

TEST_CASE("the hand-checked F2 cocycle and its extension") {
  NabCocycle c = f2_example(1, 1, 1);
  CHECK(check_cocycle(c).empty());
  CHECK(is_mc(cocycle_to_mc(c), direct_sum_space(c.A, c.B)));
  CHECK(mc_residual(cocycle_to_mc(c), direct_sum_space(c.A, c.B)).is_zero());
  Algebra e = build_extension(c);
  const Field f = F(2);
  // a = e0, b = e1: a² = 0, b² = b + a, ab = a, ba = a
  CHECK(e.basis_product(0, 0) == Vector{Scalar(f, 0), Scalar(f, 0)});
  CHECK(e.basis_product(1, 1) == Vector{Scalar(f, 1), Scalar(f, 1)});
  CHECK(e.basis_product(0, 1) == Vector{Scalar(f, 1), Scalar(f, 0)});
  CHECK(e.basis_product(1, 0) == Vector{Scalar(f, 1), Scalar(f, 0)});
  CHECK(is_associative(e));
  for (const auto &[key, comp] : associator_component_table(e))
    CHECK(comp.is_zero());
  CHECK(associator_component_table(e).size() == 16);
}

TEST_CASE("the left-action-only candidate: all three identities hold because a² = 0") {
  NabCocycle c = f2_example(1, 0, 0);
  // φ_b = id, ψ_b = 0, χ = 0. The ABA identity reads ψ_b(a)·a = a·φ_b(a), i.e.
  // 0 = a·a, which holds here; every other identity is immediate.
  CHECK(check_cocycle(c).empty());
  CHECK(psi_minus_phi_is_derivation(c));
  CHECK(is_associative(build_extension(c)));
  CHECK(is_mc(cocycle_to_mc(c), direct_sum_space(c.A, c.B)));
}

TEST_CASE("the derivation reading is strictly weaker than the three identities") {
  // A = k[x]/x² over Q, B = k with b² = b, φ_b = ψ_b = (1 ↦ 0, x ↦ x).
  // ψ − φ = 0 is a derivation, but φ_b(1·x) = x while φ_b(1)·x = 0.
  const Field q = Q();
  Algebra A = associative_zoo(q)[3], B = associative_zoo(q)[1];
  NabCocycle c = NabCocycle::zero(A, B);
  c.phi.at(1, 0, 1) = Scalar::one(q);
  c.psi.at(1, 1, 0) = Scalar::one(q);
  CHECK(psi_minus_phi_is_derivation(c));
  auto v = check_cocycle(c);
  REQUIRE_FALSE(v.empty());
  CHECK(std::any_of(v.begin(), v.end(),
                    [](const CocycleViolation &x) { return x.which == CocycleEquation::Eq4_Derivation; }));
  CHECK_FALSE(is_associative(build_extension(c)));
}

TEST_CASE("violations are the associator components at their witnesses") {
  std::mt19937_64 rng(26);
  for (Field f : {Q(), F(2), F(3)})
    for (SplitSpace s : kSplits)
      for (int t = 0; t < 10; ++t) {
        NabCocycle c = random_candidate(rng, zoo_pick(rng, f, s.a_dim), zoo_pick(rng, f, s.b_dim));
        Algebra e = build_extension(c);
        auto table = associator_component_table(e);
        auto violations = check_cocycle(c);
        CHECK(violations.empty() == is_associative(e));
        for (const CocycleViolation &v : violations) {
          CHECK_FALSE(is_zero(v.discrepancy));
          std::vector<std::size_t> idx;
          for (std::size_t i = 0; i < v.pattern.size(); ++i)
            idx.push_back(s.global_index(v.pattern[i], v.witness[i]));
          const MultilinearMap &comp = table.at(ComponentKey{v.pattern, Block::A});
          Vector value = comp.on_basis(idx);
          Vector a_part(value.begin(), value.begin() + s.a_dim);
          CHECK(a_part == v.discrepancy);
        }
      }
}

TEST_CASE("B-valued mixed associator components vanish for twisted products") {
  std::mt19937_64 rng(27);
  for (Field f : {Q(), F(2)})
    for (SplitSpace s : kSplits) {
      NabCocycle c = random_candidate(rng, zoo_pick(rng, f, s.a_dim), zoo_pick(rng, f, s.b_dim));
      auto table = associator_component_table(build_extension(c));
      for (const char *w : {"ABB", "AAB", "ABA", "BAA", "AAA", "BAB", "BBA"})
        CHECK(table.at(ComponentKey{parse_pattern(w), Block::B}).is_zero());
      CHECK(table.at(ComponentKey{parse_pattern("BBB"), Block::B}).is_zero());
    }
}

TEST_CASE("BBB associator of base plus chi is minus the Hochschild differential of chi") {
  std::mt19937_64 rng(28);
  for (Field f : {Q(), F(3)})
    for (int t = 0; t < 10; ++t) {
      Algebra A = zoo_pick(rng, f, 1), B = zoo_pick(rng, f, 2);
      NabCocycle c = NabCocycle::zero(A, B);
      for (Scalar &x : c.chi.coeffs())
        x = random_scalar(rng, f);
      auto table = associator_component_table(build_extension(c));
      // with φ = ψ = 0, A is the zero bimodule on both sides
      MultilinearMap dchi = bimodule_hochschild_delta(chi_as_cochain(c), B, c.phi, c.psi);
      const MultilinearMap &bbb = table.at(ComponentKey{parse_pattern("BBB"), Block::A});
      const SplitSpace s = c.split();
      for (IndexTuples it(3, B.dim()); !it.done(); it.next()) {
        auto idx = it.current();
        std::vector<std::size_t> g{s.b_index(idx[0]), s.b_index(idx[1]), s.b_index(idx[2])};
        for (std::size_t k = 0; k < A.dim(); ++k)
          CHECK(bbb.at(k, g) == -dchi.at(k, idx));
      }
    }
}

TEST_CASE("MC residual equals the seven A-valued associator components") {
  std::mt19937_64 rng(29);
  for (Field f : {Q(), F(2), F(3)})
    for (SplitSpace s : kSplits)
      for (int t = 0; t < 10; ++t) {
        NabCocycle c = random_candidate(rng, zoo_pick(rng, f, s.a_dim), zoo_pick(rng, f, s.b_dim));
        Algebra e = build_extension(c);
        auto table = associator_component_table(e);
        MultilinearMap sum = MultilinearMap::zero_on(f, 3, s);
        for (const Pattern &p : cocycle_patterns())
          sum += table.at(ComponentKey{p, Block::A});
        Algebra base = direct_sum_space(c.A, c.B);
        CHECK(mc_residual(cocycle_to_mc(c), base).map() == sum);
        CHECK(is_mc(cocycle_to_mc(c), base) == check_cocycle(c).empty());
      }
}

TEST_CASE("cocycle and MC element round-trip through components") {
  std::mt19937_64 rng(30);
  for (SplitSpace s : kSplits) {
    NabCocycle c = random_candidate(rng, zoo_pick(rng, Q(), s.a_dim), zoo_pick(rng, Q(), s.b_dim));
    LElement x = cocycle_to_mc(c);
    CHECK(in_L(x.map()));
    CHECK(mc_to_cocycle(x, c.A, c.B) == c);
    CHECK(extract_component(x.map(), parse_pattern("AA"), Block::A).is_zero());
    MultilinearMap phi = extract_component(x.map(), parse_pattern("BA"), Block::A);
    for (std::size_t k = 0; k < s.a_dim; ++k)
      for (std::size_t b = 0; b < s.b_dim; ++b)
        for (std::size_t a = 0; a < s.a_dim; ++a)
          CHECK(phi.at(k, {s.b_index(b), s.a_index(a)}) == c.phi.at(k, b, a));
  }
  CHECK(cocycle_to_mc(NabCocycle::zero(associative_zoo(Q())[1], associative_zoo(Q())[1])).is_zero());
}

TEST_CASE("single-entry mutations of valid MC elements are cross-checked") {
  const Field f = F(2);
  for (auto [a2, b2] : square_variants()) {
    CandidateSpace space(preset_algebra(f, 1, a2), preset_algebra(f, 2, b2));
    for (const IndexedCocycle &c : enumerate_cocycles(space)) {
      for (std::size_t d = 0; d < space.digits(); ++d) {
        const std::uint64_t weight = std::uint64_t{1} << (space.digits() - 1 - d);
        NabCocycle m = space.decode(c.index ^ weight);
        CHECK(is_mc(cocycle_to_mc(m), space.base()) == check_cocycle(m).empty());
      }
    }
  }
}

TEST_CASE("check_cocycle refuses non-associative inputs") {
  Algebra bad = algebra_from_table(Q(), 2, {{0, 0, 1, 1}, {1, 0, 0, 1}});
  NabCocycle c = NabCocycle::zero(bad, associative_zoo(Q())[1]);
  CHECK_THROWS_AS(check_cocycle(c), std::invalid_argument);
}
