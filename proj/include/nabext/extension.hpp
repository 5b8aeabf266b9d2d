#pragma once

#include <string>
#include <vector>

#include "nabext/algebra.hpp"
#include "nabext/cocycle.hpp"
#include "nabext/gauge.hpp"
#include "nabext/linalg.hpp"

namespace nabext {

/// 0 → A --iota--> E --p--> B → 0.
/// iota is dim E × dim A and p is dim B × dim E (columns are images).
struct ExtensionPresentation {
  Algebra E;
  Algebra A;
  Algebra B;
  Matrix iota;
  Matrix p;

  /// A and B products read off E: a1·a2 pulled back through iota, and
  /// b1·b2 = p(s(b1)·s(b2)) for any linear section s. Throws
  /// std::invalid_argument if iota's image is not a subalgebra or p has no
  /// section.
  static ExtensionPresentation induced(Algebra E, Matrix iota, Matrix p);
  /// build_extension(c) with iota(a) = (a, 0) and p(a, b) = b.
  static ExtensionPresentation from_cocycle(const NabCocycle &c);
};

/// A linear map s: B → E, dim E × dim B.
struct Section {
  Matrix s;
  friend bool operator==(const Section &, const Section &) = default;
};

struct Diagnostics {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Injectivity, surjectivity, p∘iota = 0, exactness at E, iota and p algebra
/// morphisms, and associativity of A, B and E. Never throws on bad data;
/// shape mismatches are reported as failures.
Diagnostics verify_extension(const ExtensionPresentation &ext);

bool is_section(const ExtensionPresentation &ext, const Section &s);
/// Some section of p, found by solving p x = e_b column by column.
Section any_section(const ExtensionPresentation &ext);
/// s(b) = (0, b) on a split space A ⊕ B.
Section canonical_section(const SplitSpace &split, Field f);

/// φ_b(a) = s(b)·a, ψ_b(a) = a·s(b), χ(b1, b2) = s(b1)·s(b2) − s(b1 b2),
/// pulled back through iota. Throws std::invalid_argument if s is not a
/// section and std::logic_error if a value falls outside image(iota).
NabCocycle cocycle_from_section(const ExtensionPresentation &ext, const Section &s);

/// β with iota∘β = s − s'. The cocycle of s' is then
/// apply_cocycle_equivalence(cocycle of s, β).
GaugeParam section_difference(const ExtensionPresentation &ext, const Section &s,
                              const Section &s_prime);

/// θ: E → E' is an algebra morphism with θ∘iota = iota' and p'∘θ = p.
Diagnostics check_extension_equivalence(const ExtensionPresentation &ext,
                                        const ExtensionPresentation &ext_prime,
                                        const Matrix &theta);

/// θ(a + b) = a + β(b) + b on A ⊕ B, relating build_extension(c) to
/// build_extension(apply_cocycle_equivalence(c, β)).
Matrix equivalence_map(const SplitSpace &split, const GaugeParam &beta);

/// Every matrix of the given shape over F_p, in lexicographic order of the
/// row-major residues. Throws std::length_error if there are more than
/// `budget`.
std::vector<Matrix> all_matrices(Field f, std::size_t rows, std::size_t cols,
                                 std::uint64_t budget);

/// All sections s0 + iota∘β over a finite field.
std::vector<Section> enumerate_sections(const ExtensionPresentation &ext,
                                        std::uint64_t budget = std::uint64_t{1} << 24);

} // namespace nabext
