#pragma once

#include "nabext/algebra.hpp"
#include "nabext/multilinear.hpp"

namespace nabext {

/// Hochschild differential of f: amb^{⊗n} → M, with M ⊆ amb and both
/// bimodule actions taken from amb's product:
///
///   δf(a1, ..., a_{n+1}) = a1·f(a2, ..., a_{n+1})
///                        + Σ_{i=1}^{n} (−1)^i f(a1, ..., a_i a_{i+1}, ..., a_{n+1})
///                        + (−1)^{n+1} f(a1, ..., a_n)·a_{n+1}
MultilinearMap hochschild_delta(const MultilinearMap &f, const Algebra &amb);

/// f ∘_i g: g plugged into the i-th (1-based) slot of f.
MultilinearMap circ_i(const MultilinearMap &f, const MultilinearMap &g, std::size_t i);

/// f ∘ g = Σ_{i=1}^{m+1} (−1)^{n(i+1)} f ∘_i g, with n the graded degree of g.
MultilinearMap circ(const MultilinearMap &f, const MultilinearMap &g);

/// [f, g] = f ∘ g − (−1)^{mn} g ∘ f, with m, n the graded degrees.
MultilinearMap gerstenhaber_bracket(const MultilinearMap &f, const MultilinearMap &g);

/// (−1)^{n−1} [m, f] with n the arity of f. Coincides with
/// hochschild_delta(f, alg) when m is alg's (associative) product.
MultilinearMap delta_as_bracket(const MultilinearMap &f, const MultilinearMap &m);

/// d f = [m, f], the differential making (C^{•+1}, [ , ], d) a dgLa.
///
/// d = (−1)^{arity−1} δ. The two agree on arity-1 cochains; on higher
/// arities only d is a graded derivation of the bracket, and only with d
/// does d x + x∘x = 0 express associativity of m + x.
MultilinearMap dgla_differential(const MultilinearMap &f, const MultilinearMap &m);

} // namespace nabext
