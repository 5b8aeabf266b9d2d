#include <doctest.h>

#include "nabext/extension.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

std::vector<NabCocycle> valid_cocycles(Field f, std::size_t a_dim, std::size_t b_dim,
                                       const std::string &a2, const std::string &b2) {
  CandidateSpace space(preset_algebra(f, a_dim, a2), preset_algebra(f, b_dim, b2));
  std::vector<NabCocycle> out;
  for (IndexedCocycle &c : enumerate_cocycles(space))
    out.push_back(std::move(c.cocycle));
  return out;
}

// A presentation of the same extension in a scrambled basis of E.
ExtensionPresentation scrambled(const ExtensionPresentation &ext, const Matrix &g) {
  const Matrix ginv = *inverse(g);
  return ExtensionPresentation::induced(change_basis(ext.E, g), ginv * ext.iota, ext.p * g);
}

} // namespace

TEST_CASE("the split extension of the zero cocycle is the direct sum") {
  const Field q = Q();
  NabCocycle c = NabCocycle::zero(associative_zoo(q)[3], associative_zoo(q)[1]);
  ExtensionPresentation ext = ExtensionPresentation::from_cocycle(c);
  CHECK(verify_extension(ext).ok());
  CHECK(ext.E.product() == direct_sum_space(c.A, c.B).product());
}

TEST_CASE("broken presentations are diagnosed") {
  const Field q = Q();
  NabCocycle c = NabCocycle::zero(associative_zoo(q)[3], associative_zoo(q)[1]);
  ExtensionPresentation ext = ExtensionPresentation::from_cocycle(c);

  ExtensionPresentation zero_p = ext;
  zero_p.p = Matrix(q, 1, 3);
  CHECK_FALSE(verify_extension(zero_p).ok());

  ExtensionPresentation thin = ext;
  thin.iota.at(1, 1) = Scalar::zero(q);
  CHECK_FALSE(verify_extension(thin).ok());

  ExtensionPresentation bad_shape = ext;
  bad_shape.iota = Matrix(q, 2, 2);
  CHECK_FALSE(verify_extension(bad_shape).ok());

  // A non-associative E with an otherwise exact sequence.
  ExtensionPresentation bad_e = ext;
  bad_e.E.set_constant(2, 2, 0, Scalar::one(q));
  bad_e.E.set_constant(0, 2, 1, Scalar::one(q));
  CHECK_FALSE(verify_extension(bad_e).ok());
}

TEST_CASE("the canonical section recovers the cocycle") {
  std::mt19937_64 rng(50);
  for (Field f : {F(2), F(3)})
    for (auto [a2, b2] : square_variants())
      for (const NabCocycle &c : valid_cocycles(f, 1, 1, a2, b2)) {
        ExtensionPresentation ext = ExtensionPresentation::from_cocycle(c);
        CHECK(verify_extension(ext).ok());
        Section s = canonical_section(c.split(), f);
        CHECK(is_section(ext, s));
        CHECK(cocycle_from_section(ext, s) == c);
        CHECK(is_section(ext, any_section(ext)));
      }
  // over Q, on cocycles obtained by gauging the trivial one
  for (int t = 0; t < 10; ++t) {
    const auto zoo = associative_zoo(Q());
    NabCocycle c = apply_cocycle_equivalence(NabCocycle::zero(zoo[3], zoo[2]),
                                             {random_matrix(rng, Q(), 2, 2)});
    ExtensionPresentation ext = ExtensionPresentation::from_cocycle(c);
    CHECK(verify_extension(ext).ok());
    CHECK(cocycle_from_section(ext, canonical_section(c.split(), Q())) == c);
  }
}

TEST_CASE("a non-section is refused") {
  const Field f = F(2);
  NabCocycle c = valid_cocycles(f, 1, 1, "zero", "idem").back();
  ExtensionPresentation ext = ExtensionPresentation::from_cocycle(c);
  Section s{Matrix(f, 2, 1)};
  CHECK_FALSE(is_section(ext, s));
  CHECK_THROWS_AS(cocycle_from_section(ext, s), std::invalid_argument);
}

TEST_CASE("section counts over F2 with dim B = 1") {
  for (std::size_t a_dim : {1u, 2u}) {
    NabCocycle c = valid_cocycles(F(2), a_dim, 1, "zero", "idem").front();
    auto sections = enumerate_sections(ExtensionPresentation::from_cocycle(c));
    CHECK(sections.size() == (std::size_t{1} << a_dim));
  }
  NabCocycle c = valid_cocycles(F(3), 1, 1, "zero", "idem").front();
  CHECK(enumerate_sections(ExtensionPresentation::from_cocycle(c)).size() == 3);
}

TEST_CASE("changing the section moves the cocycle by the section difference") {
  // Over F3 the two orientations of β differ, so only one can match.
  int forward = 0, backward = 0, total = 0;
  for (auto [a2, b2] : square_variants())
    for (const NabCocycle &c : valid_cocycles(F(3), 1, 1, a2, b2)) {
      ExtensionPresentation ext = ExtensionPresentation::from_cocycle(c);
      Section canon = canonical_section(c.split(), F(3));
      for (const Section &s : enumerate_sections(ext)) {
        NabCocycle cs = cocycle_from_section(ext, s);
        CHECK(check_cocycle(cs).empty());
        GaugeParam beta = section_difference(ext, canon, s);
        CHECK(ext.iota * beta.beta == canon.s - s.s);
        forward += apply_cocycle_equivalence(c, beta) == cs;
        backward += apply_cocycle_equivalence(c, -beta) == cs;
        ++total;
      }
    }
  CHECK(forward == total);
  CHECK(backward < total);
}

TEST_CASE("a scrambled presentation yields equivalent cocycles from any section") {
  std::mt19937_64 rng(51);
  const Field f = F(3);
  for (const NabCocycle &c : valid_cocycles(f, 1, 1, "zero", "idem")) {
    ExtensionPresentation ext = ExtensionPresentation::from_cocycle(c);
    ExtensionPresentation other = scrambled(ext, random_invertible(rng, f, 2));
    REQUIRE(verify_extension(other).ok());
    CHECK(other.A == c.A);
    CHECK(other.B == c.B);
    NabCocycle c2 = cocycle_from_section(other, any_section(other));
    CHECK(check_cocycle(c2).empty());
    // witnesses form a coset of the stabilizer of c
    int witnesses = 0, stabilizer = 0;
    for (const Matrix &m : all_matrices(f, 1, 1, 100)) {
      witnesses += apply_cocycle_equivalence(c, {m}) == c2;
      stabilizer += apply_cocycle_equivalence(c, {m}) == c;
    }
    CHECK(witnesses == stabilizer);
  }
}

TEST_CASE("the equivalence map relates gauge-equivalent extensions") {
  std::mt19937_64 rng(52);
  for (Field f : {F(2), F(3)})
    for (const NabCocycle &c : valid_cocycles(f, 2, 1, "zero", "idem")) {
      GaugeParam beta{random_matrix(rng, f, 2, 1)};
      NabCocycle moved = apply_cocycle_equivalence(c, beta);
      auto e1 = ExtensionPresentation::from_cocycle(c);
      auto e2 = ExtensionPresentation::from_cocycle(moved);
      Matrix theta = equivalence_map(c.split(), beta);
      CHECK(check_extension_equivalence(e1, e2, theta).ok());
      Matrix broken = theta;
      broken.at(0, 0) = broken.at(0, 0) + Scalar::one(f);
      CHECK_FALSE(check_extension_equivalence(e1, e2, broken).ok());
    }
}

TEST_CASE("all_matrices is lexicographic and budgeted") {
  auto ms = all_matrices(F(2), 1, 2, 16);
  REQUIRE(ms.size() == 4);
  CHECK(ms[1].at(0, 1) == Scalar::one(F(2)));
  CHECK(ms[2].at(0, 0) == Scalar::one(F(2)));
  CHECK_THROWS_AS(all_matrices(F(3), 3, 3, 1000), std::length_error);
}
