#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nabext/algebra.hpp"
#include "nabext/cocycle.hpp"
#include "nabext/gauge.hpp"

namespace nabext {

/// All triples (φ, ψ, χ) over F_p for fixed A and B, indexed by an integer.
///
/// The index is read in base p with the most significant digit first; the
/// digits are φ's coefficients, then ψ's, then χ's, each in BilinearMap
/// storage order. Comparing indices therefore compares residue vectors
/// lexicographically.
class CandidateSpace {
public:
  /// Throws std::invalid_argument unless A and B are associative algebras
  /// over the same prime field.
  CandidateSpace(Algebra A, Algebra B);

  const Algebra &A() const { return A_; }
  const Algebra &B() const { return B_; }
  Field field() const { return A_.field(); }
  SplitSpace split() const { return {A_.dim(), B_.dim()}; }
  std::size_t phi_entries() const { return A_.dim() * B_.dim() * A_.dim(); }
  std::size_t psi_entries() const { return phi_entries(); }
  std::size_t chi_entries() const { return A_.dim() * B_.dim() * B_.dim(); }
  std::size_t digits() const { return phi_entries() + psi_entries() + chi_entries(); }
  /// p^digits, or nullopt if that does not fit in 63 bits.
  std::optional<std::uint64_t> count() const;

  NabCocycle decode(std::uint64_t index) const;
  /// Throws std::invalid_argument if c is not over this A and B.
  std::uint64_t encode(const NabCocycle &c) const;
  /// m_A ⊕ m_B on A ⊕ B.
  const Algebra &base() const { return base_; }

private:
  Algebra A_, B_, base_;
};

/// "zero" (all products 0) or "idem" (e_i·e_i = e_i, other products 0).
Algebra preset_algebra(Field f, std::size_t dim, const std::string &kind);

struct EnumerationOptions {
  /// Exhaustive sweeps must visit fewer candidates than this.
  std::uint64_t budget = std::uint64_t{1} << 24;
  unsigned jobs = 1;
  /// Draw this many candidates (sorted, duplicates removed) instead of
  /// sweeping. Required once the candidate count exceeds the budget.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
};

/// The candidate indices an enumeration visits. Throws std::length_error if
/// the sweep exceeds the budget and no sample size is given.
std::vector<std::uint64_t> candidate_indices(const CandidateSpace &space,
                                             const EnumerationOptions &opts);

struct IndexedCocycle {
  std::uint64_t index;
  NabCocycle cocycle;
};

/// Candidates passing check_cocycle, in increasing index order.
std::vector<IndexedCocycle> enumerate_cocycles(const CandidateSpace &space,
                                               const EnumerationOptions &opts = {});

struct IndexedExtension {
  std::uint64_t index;
  Algebra product;
};

/// Associative products on A ⊕ B whose AA, BB components are m_A, m_B,
/// whose B-valued mixed components vanish, and whose A-valued mixed
/// components are free. Built directly from the candidate digits.
std::vector<IndexedExtension> enumerate_extensions(const CandidateSpace &space,
                                                   const EnumerationOptions &opts = {});

struct OrbitMember {
  std::uint64_t index;
  /// β's taking the representative to this member, applied in order.
  std::vector<GaugeParam> chain;
};

struct Orbit {
  std::uint64_t representative;
  NabCocycle cocycle;
  std::vector<OrbitMember> members;
};

/// Blocks of a partition of cocycle indices, each sorted, ordered by their
/// smallest element.
using Partition = std::vector<std::vector<std::uint64_t>>;

struct OrbitResult {
  std::vector<Orbit> classes;
  Partition cocycle_partition;
  Partition gauge_partition;
  bool partitions_agree = false;
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  std::uint64_t beta_count = 0;
  std::uint64_t witness_edges = 0;
  std::vector<std::string> failures;
};

/// Partitions cocycles by β-equivalence and, separately, their MC images by
/// the closed-form gauge action, then compares the two. Both closures are
/// computed by union-find over every β. Edges to cocycles outside the input
/// list are ignored. The result does not depend on the input order.
OrbitResult orbit_partition(const std::vector<IndexedCocycle> &cocycles,
                            const CandidateSpace &space, std::uint64_t budget);

struct ClassificationReport {
  std::string field;
  Algebra A;
  Algebra B;
  bool exhaustive = true;
  std::uint64_t total_candidates = 0;
  std::uint64_t num_candidates = 0;
  std::uint64_t num_cocycles = 0;
  std::uint64_t num_mc = 0;
  std::uint64_t num_associative_extensions = 0;
  std::uint64_t num_enumerated_extensions = 0;
  std::uint64_t beta_count = 0;
  std::uint64_t witness_edges = 0;
  std::vector<Orbit> classes;

  bool cocycle_mc_agree = false;
  bool cocycle_assoc_agree = false;
  bool residual_matches_associator = false;
  bool extensions_biject = false;
  bool round_trip = false;
  bool section_independence = false;
  bool partitions_agree = false;
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  /// Only meaningful when m_A = 0.
  std::optional<bool> abelian_consistent;

  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// The full pipeline: every candidate is judged by check_cocycle, is_mc and
/// associativity of its extension; extensions are enumerated independently
/// and matched; canonical sections round-trip; every section of every
/// extension yields an equivalent cocycle; orbits are computed both ways.
/// Cross-check failures land in `failures` with witnesses.
ClassificationReport census(const CandidateSpace &space, const EnumerationOptions &opts = {});

std::string format_summary(const ClassificationReport &r);

} // namespace nabext
