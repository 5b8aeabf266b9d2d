#include "nabext/classifier.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nabext/extension.hpp"

namespace nabext {

namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return;
    if (size_[a] < size_[b])
      std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Runs fn over contiguous chunks of `items` on up to `jobs` threads and
// concatenates the per-chunk outputs in order.
template <class T, class Fn>
std::vector<T> chunked(const std::vector<std::uint64_t> &items, unsigned jobs, Fn fn) {
  const std::size_t n = items.size();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
  std::vector<std::vector<T>> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](std::size_t w) {
    try {
      const std::size_t lo = n * w / workers, hi = n * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i)
        if (auto r = fn(items[i]))
          parts[w].push_back(std::move(*r));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w)
      threads.emplace_back(run, w);
    for (auto &t : threads)
      t.join();
  }
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  std::vector<T> out;
  for (auto &p : parts)
    std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

Partition normalize(std::vector<std::vector<std::uint64_t>> blocks) {
  for (auto &b : blocks)
    std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

Partition blocks_of(DisjointSets &uf, const std::vector<std::uint64_t> &ids) {
  std::map<std::size_t, std::vector<std::uint64_t>> by_root;
  for (std::size_t i = 0; i < ids.size(); ++i)
    by_root[uf.find(i)].push_back(ids[i]);
  std::vector<std::vector<std::uint64_t>> blocks;
  for (auto &[root, members] : by_root)
    blocks.push_back(std::move(members));
  return normalize(std::move(blocks));
}

std::string index_label(std::uint64_t i) { return "#" + std::to_string(i); }

MultilinearMap seven_components_sum(const Algebra &ext) {
  const auto table = associator_component_table(ext);
  MultilinearMap sum = MultilinearMap::zero_on(ext.field(), 3, *ext.split());
  for (const Pattern &p : cocycle_patterns())
    sum += table.at(ComponentKey{p, Block::A});
  return sum;
}

} // namespace

CandidateSpace::CandidateSpace(Algebra A, Algebra B) : A_(std::move(A)), B_(std::move(B)) {
  if (A_.field() != B_.field())
    throw std::invalid_argument("candidate space: A and B have different fields");
  if (!A_.field().is_prime())
    throw std::invalid_argument("candidate space: enumeration needs a finite field");
  if (!is_associative(A_) || !is_associative(B_))
    throw std::invalid_argument("candidate space: A and B must be associative");
  base_ = direct_sum_space(A_, B_);
}

std::optional<std::uint64_t> CandidateSpace::count() const {
  const std::uint64_t p = field().characteristic();
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < digits(); ++i) {
    if (n > (std::uint64_t{1} << 62) / p)
      return std::nullopt;
    n *= p;
  }
  return n;
}

NabCocycle CandidateSpace::decode(std::uint64_t index) const {
  const Field f = field();
  const std::uint64_t p = f.characteristic();
  NabCocycle c = NabCocycle::zero(A_, B_);
  const std::size_t np = phi_entries(), ns = psi_entries();
  auto phi = c.phi.coeffs();
  auto psi = c.psi.coeffs();
  auto chi = c.chi.coeffs();
  for (std::size_t t = digits(); t-- > 0;) {
    Scalar v(f, static_cast<std::int64_t>(index % p));
    index /= p;
    if (t < np)
      phi[t] = v;
    else if (t < np + ns)
      psi[t - np] = v;
    else
      chi[t - np - ns] = v;
  }
  if (index != 0)
    throw std::out_of_range("candidate index out of range");
  return c;
}

std::uint64_t CandidateSpace::encode(const NabCocycle &c) const {
  if (c.A.dim() != A_.dim() || c.B.dim() != B_.dim() || c.A.field() != field())
    throw std::invalid_argument("encode: cocycle is not over this candidate space");
  const std::uint64_t p = field().characteristic();
  std::uint64_t index = 0;
  for (auto span : {c.phi.coeffs(), c.psi.coeffs(), c.chi.coeffs()})
    for (const Scalar &s : span)
      index = index * p + s.residue();
  return index;
}

Algebra preset_algebra(Field f, std::size_t dim, const std::string &kind) {
  Algebra a(f, dim);
  if (kind == "zero")
    return a;
  if (kind == "idem") {
    for (std::size_t i = 0; i < dim; ++i)
      a.set_constant(i, i, i, Scalar::one(f));
    return a;
  }
  throw std::invalid_argument("unknown algebra preset '" + kind + "' (use zero or idem)");
}

std::vector<std::uint64_t> candidate_indices(const CandidateSpace &space,
                                             const EnumerationOptions &opts) {
  const auto total = space.count();
  std::vector<std::uint64_t> out;
  if (opts.sample) {
    if (!total)
      throw std::length_error("candidate space too large to index");
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, *total - 1);
    out.reserve(*opts.sample);
    for (std::uint64_t i = 0; i < *opts.sample; ++i)
      out.push_back(pick(rng));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  if (!total || *total >= opts.budget)
    throw std::length_error("candidate count " +
                            (total ? std::to_string(*total) : std::string("> 2^62")) +
                            " exceeds the budget of " + std::to_string(opts.budget) +
                            "; pass a sample size");
  out.resize(*total);
  std::iota(out.begin(), out.end(), std::uint64_t{0});
  return out;
}

std::vector<IndexedCocycle> enumerate_cocycles(const CandidateSpace &space,
                                               const EnumerationOptions &opts) {
  return chunked<IndexedCocycle>(candidate_indices(space, opts), opts.jobs,
                                 [&](std::uint64_t i) -> std::optional<IndexedCocycle> {
                                   NabCocycle c = space.decode(i);
                                   if (!check_cocycle(c, true).empty())
                                     return std::nullopt;
                                   return IndexedCocycle{i, std::move(c)};
                                 });
}

namespace {

Algebra extension_from_digits(const CandidateSpace &space, std::uint64_t index) {
  const Field f = space.field();
  const std::uint64_t p = f.characteristic();
  const SplitSpace s = space.split();
  const std::size_t da = s.a_dim, db = s.b_dim;

  std::vector<std::uint32_t> d(space.digits());
  for (std::size_t t = d.size(); t-- > 0;) {
    d[t] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  auto digit = [&](std::size_t t) { return Scalar(f, d[t]); };

  Algebra e(f, s.total());
  e.set_split(s);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k)
        e.set_constant(s.a_index(i), s.a_index(j), s.a_index(k), space.A().constant(i, j, k));
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k)
        e.set_constant(s.b_index(i), s.b_index(j), s.b_index(k), space.B().constant(i, j, k));

  // Digit layout: phi (k, b, a), psi (k, a, b), chi (k, b1, b2).
  const std::size_t np = space.phi_entries(), ns = space.psi_entries();
  for (std::size_t k = 0; k < da; ++k)
    for (std::size_t b = 0; b < db; ++b)
      for (std::size_t a = 0; a < da; ++a) {
        e.set_constant(s.b_index(b), s.a_index(a), s.a_index(k), digit((k * db + b) * da + a));
        e.set_constant(s.a_index(a), s.b_index(b), s.a_index(k),
                       digit(np + (k * da + a) * db + b));
      }
  for (std::size_t k = 0; k < da; ++k)
    for (std::size_t b1 = 0; b1 < db; ++b1)
      for (std::size_t b2 = 0; b2 < db; ++b2)
        e.set_constant(s.b_index(b1), s.b_index(b2), s.a_index(k),
                       digit(np + ns + (k * db + b1) * db + b2));
  return e;
}

} // namespace

std::vector<IndexedExtension> enumerate_extensions(const CandidateSpace &space,
                                                   const EnumerationOptions &opts) {
  return chunked<IndexedExtension>(candidate_indices(space, opts), opts.jobs,
                                   [&](std::uint64_t i) -> std::optional<IndexedExtension> {
                                     Algebra e = extension_from_digits(space, i);
                                     if (!is_associative(e))
                                       return std::nullopt;
                                     return IndexedExtension{i, std::move(e)};
                                   });
}

OrbitResult orbit_partition(const std::vector<IndexedCocycle> &cocycles,
                            const CandidateSpace &space, std::uint64_t budget) {
  OrbitResult r;
  std::vector<const IndexedCocycle *> sorted;
  for (const auto &c : cocycles)
    sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(),
            [](const IndexedCocycle *x, const IndexedCocycle *y) { return x->index < y->index; });
  std::vector<std::uint64_t> ids;
  for (const auto *c : sorted)
    ids.push_back(c->index);
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("orbit_partition: duplicate cocycle index");
  auto position = [&](std::uint64_t idx) -> std::optional<std::size_t> {
    auto it = std::lower_bound(ids.begin(), ids.end(), idx);
    if (it == ids.end() || *it != idx)
      return std::nullopt;
    return static_cast<std::size_t>(it - ids.begin());
  };

  const SplitSpace split = space.split();
  const std::vector<Matrix> betas = all_matrices(space.field(), split.a_dim, split.b_dim, budget);
  r.beta_count = betas.size();
  const std::size_t n = sorted.size();

  DisjointSets by_cocycle(n), by_gauge(n);
  // adjacency[i] holds (target position, beta index) for each edge i → target.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(n);
  bool reflexive = true;
  for (std::size_t i = 0; i < n; ++i) {
    const NabCocycle &c = sorted[i]->cocycle;
    const LElement x = cocycle_to_mc(c);
    for (std::size_t k = 0; k < betas.size(); ++k) {
      const GaugeParam beta{betas[k]};
      const NabCocycle image = apply_cocycle_equivalence(c, beta);
      const std::uint64_t img = space.encode(image);
      if (auto j = position(img)) {
        by_cocycle.unite(i, *j);
        adjacency[i].emplace_back(*j, k);
      } else if (!is_cocycle(image)) {
        r.failures.push_back("beta image of cocycle " + index_label(ids[i]) +
                             " is not a cocycle (" + index_label(img) + ")");
      }
      if (k == 0 && img != ids[i])
        reflexive = false;

      const LElement gx = gauge_closed_form(x, beta, space.base());
      const std::uint64_t gimg = space.encode(mc_to_cocycle(gx, space.A(), space.B()));
      if (auto j = position(gimg))
        by_gauge.unite(i, *j);
      else if (!is_mc(gx, space.base()))
        r.failures.push_back("gauge image of " + index_label(ids[i]) + " is not Maurer–Cartan");
      if (k == 0 && gimg != ids[i])
        reflexive = false;
    }
  }
  for (const auto &edges : adjacency)
    r.witness_edges += edges.size();

  r.cocycle_partition = blocks_of(by_cocycle, ids);
  r.gauge_partition = blocks_of(by_gauge, ids);
  r.partitions_agree = r.cocycle_partition == r.gauge_partition;
  if (!r.partitions_agree)
    r.failures.push_back("β-equivalence and gauge partitions differ");

  r.reflexive = reflexive && !betas.empty() && betas.front().is_zero();
  if (!r.reflexive)
    r.failures.push_back("β = 0 does not fix every cocycle");

  r.symmetric = true;
  for (std::size_t i = 0; i < n && r.symmetric; ++i)
    for (auto [j, k] : adjacency[i]) {
      bool back = std::any_of(adjacency[j].begin(), adjacency[j].end(),
                              [&](const auto &e) { return e.first == i; });
      if (!back) {
        r.symmetric = false;
        r.failures.push_back("no reverse witness for " + index_label(ids[i]) + " → " +
                             index_label(ids[j]));
        break;
      }
    }

  // Transitivity: the direct β-images of each cocycle already exhaust its
  // union-find class.
  r.transitive = true;
  for (std::size_t i = 0; i < n && r.transitive; ++i) {
    std::vector<std::size_t> direct;
    for (auto [j, k] : adjacency[i])
      direct.push_back(j);
    std::sort(direct.begin(), direct.end());
    direct.erase(std::unique(direct.begin(), direct.end()), direct.end());
    std::vector<std::size_t> cls;
    for (std::size_t j = 0; j < n; ++j)
      if (by_cocycle.find(j) == by_cocycle.find(i))
        cls.push_back(j);
    if (direct != cls) {
      r.transitive = false;
      r.failures.push_back("class of " + index_label(ids[i]) +
                           " is not reached by single β steps");
    }
  }

  for (const auto &block : r.cocycle_partition) {
    const std::size_t rep = *position(block.front());
    Orbit orbit{ids[rep], sorted[rep]->cocycle, {}};
    std::vector<std::optional<std::vector<GaugeParam>>> chain(n);
    chain[rep] = std::vector<GaugeParam>{};
    std::vector<std::size_t> queue{rep};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t u = queue[q];
      for (auto [v, k] : adjacency[u])
        if (!chain[v]) {
          chain[v] = *chain[u];
          chain[v]->push_back(GaugeParam{betas[k]});
          queue.push_back(v);
        }
    }
    for (std::uint64_t idx : block) {
      const std::size_t pos = *position(idx);
      if (!chain[pos])
        throw std::logic_error("orbit member without a witness chain");
      orbit.members.push_back({idx, *chain[pos]});
    }
    r.classes.push_back(std::move(orbit));
  }
  return r;
}

ClassificationReport census(const CandidateSpace &space, const EnumerationOptions &opts) {
  ClassificationReport r;
  r.field = space.field().name();
  r.A = space.A();
  r.B = space.B();
  const auto total = space.count();
  r.total_candidates = total.value_or(0);

  const std::vector<std::uint64_t> indices = candidate_indices(space, opts);
  r.num_candidates = indices.size();
  r.exhaustive = total && indices.size() == *total;

  struct Verdict {
    std::uint64_t index;
    bool cocycle, mc, assoc, residual;
  };
  const std::vector<Verdict> verdicts =
      chunked<Verdict>(indices, opts.jobs, [&](std::uint64_t i) -> std::optional<Verdict> {
        const NabCocycle c = space.decode(i);
        const bool cocycle = check_cocycle(c, true).empty();
        const LElement x = cocycle_to_mc(c);
        const LElement res = mc_residual(x, space.base());
        const Algebra e = build_extension(c);
        const bool residual = res.map() == seven_components_sum(e);
        return Verdict{i, cocycle, res.is_zero(), is_associative(e), residual};
      });

  r.cocycle_mc_agree = r.cocycle_assoc_agree = r.residual_matches_associator = true;
  std::vector<IndexedCocycle> cocycles;
  for (const Verdict &v : verdicts) {
    r.num_cocycles += v.cocycle;
    r.num_mc += v.mc;
    r.num_associative_extensions += v.assoc;
    if (v.cocycle != v.mc) {
      r.cocycle_mc_agree = false;
      r.failures.push_back("cocycle/MC verdicts differ at " + index_label(v.index));
    }
    if (v.cocycle != v.assoc) {
      r.cocycle_assoc_agree = false;
      r.failures.push_back("cocycle/associativity verdicts differ at " + index_label(v.index));
    }
    if (!v.residual) {
      r.residual_matches_associator = false;
      r.failures.push_back("MC residual differs from the associator sum at " +
                           index_label(v.index));
    }
    if (v.cocycle)
      cocycles.push_back({v.index, space.decode(v.index)});
  }

  const std::vector<IndexedExtension> extensions = enumerate_extensions(space, opts);
  r.num_enumerated_extensions = extensions.size();
  r.extensions_biject = extensions.size() == cocycles.size();
  for (std::size_t i = 0; r.extensions_biject && i < cocycles.size(); ++i)
    if (extensions[i].index != cocycles[i].index ||
        extensions[i].product != build_extension(cocycles[i].cocycle)) {
      r.extensions_biject = false;
      r.failures.push_back("enumerated extension differs from build_extension at " +
                           index_label(cocycles[i].index));
    }
  if (extensions.size() != cocycles.size())
    r.failures.push_back("|Z²| = " + std::to_string(cocycles.size()) + " but " +
                         std::to_string(extensions.size()) + " associative twisted products");

  const Section canonical = canonical_section(space.split(), space.field());
  r.round_trip = true;
  for (const auto &e : extensions) {
    ExtensionPresentation ext = ExtensionPresentation::from_cocycle(space.decode(e.index));
    ext.E = e.product;
    const Diagnostics diag = verify_extension(ext);
    if (!diag.ok() || cocycle_from_section(ext, canonical) != space.decode(e.index)) {
      r.round_trip = false;
      r.failures.push_back("canonical section does not round-trip at " + index_label(e.index));
    }
  }

  OrbitResult orbits = orbit_partition(cocycles, space, opts.budget);
  r.beta_count = orbits.beta_count;
  r.witness_edges = orbits.witness_edges;
  r.partitions_agree = orbits.partitions_agree;
  r.reflexive = orbits.reflexive;
  r.symmetric = orbits.symmetric;
  r.transitive = orbits.transitive;
  for (auto &f : orbits.failures)
    r.failures.push_back(std::move(f));
  r.classes = std::move(orbits.classes);

  std::map<std::uint64_t, std::uint64_t> class_of;
  for (const Orbit &o : r.classes)
    for (const OrbitMember &m : o.members)
      class_of[m.index] = o.representative;

  r.section_independence = true;
  for (const IndexedCocycle &c : cocycles) {
    const ExtensionPresentation ext = ExtensionPresentation::from_cocycle(c.cocycle);
    for (const Section &s : enumerate_sections(ext, opts.budget)) {
      const NabCocycle cs = cocycle_from_section(ext, s);
      const GaugeParam beta = section_difference(ext, canonical, s);
      const std::uint64_t idx = space.encode(cs);
      const bool same_class = !class_of.contains(idx) || class_of[idx] == class_of[c.index];
      const bool ok = is_cocycle(cs) && apply_cocycle_equivalence(c.cocycle, beta) == cs &&
                      check_gauge_witness(cocycle_to_mc(c.cocycle), cocycle_to_mc(cs), beta,
                                          space.base()) &&
                      same_class;
      if (!ok) {
        r.section_independence = false;
        r.failures.push_back("section change at " + index_label(c.index) + " → " +
                             index_label(idx) + " is not witnessed by s − s'");
      }
    }
  }

  // Each recorded witness β must also relate the two extensions through θ.
  for (const Orbit &o : r.classes) {
    const ExtensionPresentation rep = ExtensionPresentation::from_cocycle(o.cocycle);
    for (const OrbitMember &m : o.members) {
      if (m.chain.size() != 1)
        continue;
      const ExtensionPresentation other = ExtensionPresentation::from_cocycle(space.decode(m.index));
      if (!check_extension_equivalence(rep, other, equivalence_map(space.split(), m.chain[0])).ok())
        r.failures.push_back("θ built from β does not relate the extensions of " +
                             index_label(o.representative) + " and " + index_label(m.index));
    }
  }

  if (space.A().product().is_zero()) {
    bool ok = true;
    for (const IndexedCocycle &c : cocycles) {
      try {
        (void)abelian_specialize(c.cocycle);
      } catch (const std::exception &e) {
        ok = false;
        r.failures.push_back("abelian specialisation failed at " + index_label(c.index) + ": " +
                             e.what());
      }
    }
    for (const Orbit &o : r.classes)
      for (const OrbitMember &m : o.members) {
        NabCocycle cur = o.cocycle;
        for (const GaugeParam &beta : m.chain) {
          const NabCocycle next = apply_cocycle_equivalence(cur, beta);
          const MultilinearMap dbeta =
              bimodule_hochschild_delta(gauge_as_cochain(beta), cur.B, cur.phi, cur.psi);
          const MultilinearMap diff = chi_as_cochain(next) - chi_as_cochain(cur);
          if (next.phi != cur.phi || next.psi != cur.psi || diff != -dbeta) {
            ok = false;
            r.failures.push_back("abelian equivalence is not a coboundary shift at " +
                                 index_label(m.index));
          }
          cur = next;
        }
      }
    r.abelian_consistent = ok;
  }
  return r;
}

std::string format_summary(const ClassificationReport &r) {
  std::ostringstream out;
  auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
  out << "field " << r.field << ", dim A = " << r.A.dim() << ", dim B = " << r.B.dim() << "\n";
  out << "candidates   " << r.num_candidates << " of " << r.total_candidates
      << (r.exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
  out << "cocycles     " << r.num_cocycles << "\n";
  out << "MC elements  " << r.num_mc << "\n";
  out << "extensions   " << r.num_enumerated_extensions << " enumerated, "
      << r.num_associative_extensions << " from cocycles\n";
  out << "classes      " << r.classes.size() << " (" << r.beta_count << " β, "
      << r.witness_edges << " witness edges)\n\n";
  out << "  rep        size  members\n";
  for (const Orbit &o : r.classes) {
    std::ostringstream members;
    for (std::size_t i = 0; i < o.members.size(); ++i)
      members << (i ? " " : "") << o.members[i].index;
    out << "  " << o.representative;
    for (std::size_t pad = std::to_string(o.representative).size(); pad < 11; ++pad)
      out << ' ';
    out << o.members.size();
    for (std::size_t pad = std::to_string(o.members.size()).size(); pad < 6; ++pad)
      out << ' ';
    out << members.str() << "\n";
  }
  out << "\n";
  out << "cocycle <-> MC           " << flag(r.cocycle_mc_agree) << "\n";
  out << "cocycle <-> associative  " << flag(r.cocycle_assoc_agree) << "\n";
  out << "residual = associator    " << flag(r.residual_matches_associator) << "\n";
  out << "extensions biject        " << flag(r.extensions_biject) << "\n";
  out << "canonical round trip     " << flag(r.round_trip) << "\n";
  out << "section independence     " << flag(r.section_independence) << "\n";
  out << "partitions agree         " << flag(r.partitions_agree) << "\n";
  out << "reflexive/symm./trans.   " << flag(r.reflexive) << "/" << flag(r.symmetric) << "/"
      << flag(r.transitive) << "\n";
  if (r.abelian_consistent)
    out << "abelian specialisation   " << flag(*r.abelian_consistent) << "\n";
  for (const auto &f : r.failures)
    out << "failure: " << f << "\n";
  return out.str();
}

} // namespace nabext
