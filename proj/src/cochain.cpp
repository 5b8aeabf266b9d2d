#include "nabext/cochain.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace nabext {

namespace {

bool odd(long long x) { return (x % 2) != 0; }

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0)
    r *= base;
  return r;
}

std::optional<SplitSpace> merged_split(const MultilinearMap &f, const MultilinearMap &g) {
  return f.split() ? f.split() : g.split();
}

} // namespace

MultilinearMap hochschild_delta(const MultilinearMap &f, const Algebra &amb) {
  const std::size_t d = amb.dim();
  if (f.source_dim() != d || f.target_dim() != d || f.field() != amb.field())
    throw std::invalid_argument("hochschild_delta: cochain does not live on the ambient algebra");
  const std::size_t n = f.arity();
  const Field field = f.field();
  MultilinearMap out(field, n + 1, d, d);
  out.set_split(f.split() ? f.split() : amb.split());

  std::vector<std::size_t> inner(n);
  for (IndexTuples it(n + 1, d); !it.done(); it.next()) {
    auto idx = it.current();
    const std::size_t oflat = out.flatten(idx);
    auto add_to = [&](const Scalar &w, std::size_t k) {
      if (!w.is_zero())
        out.entry(k, oflat) += w;
    };

    // a1 · f(a2, ..., a_{n+1})
    {
      std::size_t fflat = f.flatten(idx.subspan(1));
      for (std::size_t l = 0; l < d; ++l) {
        const Scalar &fv = f.entry(l, fflat);
        if (fv.is_zero())
          continue;
        for (std::size_t k = 0; k < d; ++k)
          add_to(fv * amb.constant(idx[0], l, k), k);
      }
    }
    // Σ (−1)^i f(..., a_i a_{i+1}, ...)
    for (std::size_t i = 1; i <= n; ++i) {
      const bool negate = odd(static_cast<long long>(i));
      for (std::size_t r = 0; r < d; ++r) {
        const Scalar &c = amb.constant(idx[i - 1], idx[i], r);
        if (c.is_zero())
          continue;
        std::size_t pos = 0;
        for (std::size_t s = 0; s < i - 1; ++s)
          inner[pos++] = idx[s];
        inner[pos++] = r;
        for (std::size_t s = i + 1; s <= n; ++s)
          inner[pos++] = idx[s];
        std::size_t fflat = f.flatten(inner);
        for (std::size_t k = 0; k < d; ++k) {
          const Scalar &fv = f.entry(k, fflat);
          if (fv.is_zero())
            continue;
          add_to(negate ? -(c * fv) : c * fv, k);
        }
      }
    }
    // (−1)^{n+1} f(a1, ..., a_n) · a_{n+1}
    {
      const bool negate = odd(static_cast<long long>(n + 1));
      std::size_t fflat = f.flatten(idx.first(n));
      for (std::size_t l = 0; l < d; ++l) {
        const Scalar &fv = f.entry(l, fflat);
        if (fv.is_zero())
          continue;
        for (std::size_t k = 0; k < d; ++k) {
          Scalar w = fv * amb.constant(l, idx[n], k);
          add_to(negate ? -w : w, k);
        }
      }
    }
  }
  return out;
}

MultilinearMap circ_i(const MultilinearMap &f, const MultilinearMap &g, std::size_t i) {
  if (i < 1 || i > f.arity())
    throw std::out_of_range("circ_i: slot " + std::to_string(i) + " out of range for arity " +
                            std::to_string(f.arity()));
  if (g.target_dim() != f.source_dim() || g.source_dim() != f.source_dim() ||
      f.field() != g.field())
    throw std::invalid_argument("circ_i: space mismatch");
  const std::size_t d = f.source_dim();
  const std::size_t af = f.arity();
  const std::size_t ag = g.arity();
  const std::size_t ar = af + ag - 1;
  MultilinearMap out(f.field(), ar, d, f.target_dim());
  out.set_split(merged_split(f, g));

  // Input flat index of f: prefix (i−1 slots), the plugged slot, suffix (af−i slots).
  const std::size_t suffix_len = af - i;
  const std::size_t slot_stride = ipow(d, suffix_len);
  const std::size_t prefix_stride = slot_stride * d;
  const std::size_t g_inputs = g.input_count();
  const std::size_t suffix_count = slot_stride;

  // Output flat = (prefix * g_inputs + mid) * suffix_count + suffix.
  const std::size_t prefix_count = ipow(d, i - 1);
  for (std::size_t pre = 0; pre < prefix_count; ++pre)
    for (std::size_t mid = 0; mid < g_inputs; ++mid)
      for (std::size_t l = 0; l < d; ++l) {
        const Scalar &gv = g.entry(l, mid);
        if (gv.is_zero())
          continue;
        for (std::size_t suf = 0; suf < suffix_count; ++suf) {
          const std::size_t fflat = pre * prefix_stride + l * slot_stride + suf;
          const std::size_t oflat = (pre * g_inputs + mid) * suffix_count + suf;
          for (std::size_t k = 0; k < f.target_dim(); ++k) {
            const Scalar &fv = f.entry(k, fflat);
            if (!fv.is_zero())
              out.entry(k, oflat) += fv * gv;
          }
        }
      }
  return out;
}

MultilinearMap circ(const MultilinearMap &f, const MultilinearMap &g) {
  if (f.arity() + g.arity() == 0)
    throw std::invalid_argument("circ: composite of two arity-0 cochains has degree -2");
  if (g.target_dim() != f.source_dim() || g.source_dim() != f.source_dim() ||
      f.field() != g.field())
    throw std::invalid_argument("circ: space mismatch");
  const long long n = g.degree();
  MultilinearMap out(f.field(), f.arity() + g.arity() - 1, f.source_dim(), f.target_dim());
  out.set_split(merged_split(f, g));
  for (std::size_t i = 1; i <= f.arity(); ++i) {
    MultilinearMap term = circ_i(f, g, i);
    if (odd(n * static_cast<long long>(i + 1)))
      out -= term;
    else
      out += term;
  }
  return out;
}

MultilinearMap gerstenhaber_bracket(const MultilinearMap &f, const MultilinearMap &g) {
  const long long m = f.degree();
  const long long n = g.degree();
  MultilinearMap fg = circ(f, g);
  MultilinearMap gf = circ(g, f);
  if (odd(m * n))
    return fg + gf;
  return fg - gf;
}

MultilinearMap delta_as_bracket(const MultilinearMap &f, const MultilinearMap &m) {
  if (m.arity() != 2)
    throw std::invalid_argument("delta_as_bracket: m must be an arity-2 product");
  MultilinearMap b = gerstenhaber_bracket(m, f);
  // (−1)^{n−1}, n = arity of f
  if (f.arity() % 2 == 0)
    return -b;
  return b;
}

MultilinearMap dgla_differential(const MultilinearMap &f, const MultilinearMap &m) {
  if (m.arity() != 2)
    throw std::invalid_argument("dgla_differential: m must be an arity-2 product");
  return gerstenhaber_bracket(m, f);
}

} // namespace nabext
