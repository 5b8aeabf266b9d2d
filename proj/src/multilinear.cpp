#include "nabext/multilinear.hpp"

#include <stdexcept>
#include <string>

namespace nabext {

MultilinearMap::MultilinearMap(Field f, std::size_t arity, std::size_t source_dim,
                               std::size_t target_dim)
    : field_(f), arity_(arity), source_dim_(source_dim), target_dim_(target_dim) {
  for (std::size_t i = 0; i < arity; ++i)
    input_count_ *= source_dim;
  coeffs_.assign(target_dim * input_count_, Scalar::zero(f));
}

MultilinearMap MultilinearMap::zero_on(Field f, std::size_t arity, const SplitSpace &split) {
  MultilinearMap m(f, arity, split.total(), split.total());
  m.split_ = split;
  return m;
}

MultilinearMap MultilinearMap::identity(Field f, std::size_t dim) {
  MultilinearMap m(f, 1, dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    m.entry(i, i) = Scalar::one(f);
  return m;
}

void MultilinearMap::set_split(std::optional<SplitSpace> s) {
  if (s && s->total() != source_dim_)
    throw std::invalid_argument("split does not match source dimension");
  split_ = s;
}

std::size_t MultilinearMap::flatten(std::span<const std::size_t> inputs) const {
  if (inputs.size() != arity_)
    throw std::invalid_argument("expected " + std::to_string(arity_) + " inputs, got " +
                                std::to_string(inputs.size()));
  std::size_t flat = 0;
  for (std::size_t i : inputs) {
    if (i >= source_dim_)
      throw std::out_of_range("input index out of range");
    flat = flat * source_dim_ + i;
  }
  return flat;
}

void MultilinearMap::unflatten(std::size_t flat, std::span<std::size_t> inputs) const {
  for (std::size_t pos = arity_; pos-- > 0;) {
    inputs[pos] = flat % source_dim_;
    flat /= source_dim_;
  }
}

Scalar &MultilinearMap::at(std::size_t k, std::span<const std::size_t> inputs) {
  if (k >= target_dim_)
    throw std::out_of_range("output index out of range");
  return entry(k, flatten(inputs));
}

const Scalar &MultilinearMap::at(std::size_t k, std::span<const std::size_t> inputs) const {
  if (k >= target_dim_)
    throw std::out_of_range("output index out of range");
  return entry(k, flatten(inputs));
}

Vector MultilinearMap::on_basis(std::span<const std::size_t> inputs) const {
  std::size_t flat = flatten(inputs);
  Vector v(target_dim_);
  for (std::size_t k = 0; k < target_dim_; ++k)
    v[k] = entry(k, flat);
  return v;
}

Vector MultilinearMap::evaluate(std::span<const Vector> args) const {
  if (args.size() != arity_)
    throw std::invalid_argument("evaluate: wrong number of arguments");
  for (const auto &a : args)
    if (a.size() != source_dim_)
      throw std::invalid_argument("evaluate: argument dimension mismatch");
  Vector out = zero_vector(field_, target_dim_);
  for (IndexTuples it(arity_, source_dim_); !it.done(); it.next()) {
    auto idx = it.current();
    Scalar weight = Scalar::one(field_);
    bool zero = false;
    for (std::size_t s = 0; s < arity_ && !zero; ++s) {
      if (args[s][idx[s]].is_zero())
        zero = true;
      else
        weight *= args[s][idx[s]];
    }
    if (zero)
      continue;
    std::size_t flat = flatten(idx);
    for (std::size_t k = 0; k < target_dim_; ++k)
      if (!entry(k, flat).is_zero())
        out[k] += weight * entry(k, flat);
  }
  return out;
}

bool MultilinearMap::is_zero() const {
  for (const auto &c : coeffs_)
    if (!c.is_zero())
      return false;
  return true;
}

void MultilinearMap::require_same_shape(const MultilinearMap &o) const {
  if (field_ != o.field_ || arity_ != o.arity_ || source_dim_ != o.source_dim_ ||
      target_dim_ != o.target_dim_)
    throw std::invalid_argument("multilinear map shape mismatch");
}

MultilinearMap MultilinearMap::operator-() const {
  MultilinearMap r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

MultilinearMap &MultilinearMap::operator+=(const MultilinearMap &o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!o.coeffs_[i].is_zero())
      coeffs_[i] += o.coeffs_[i];
  if (!split_)
    split_ = o.split_;
  return *this;
}

MultilinearMap &MultilinearMap::operator-=(const MultilinearMap &o) {
  require_same_shape(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!o.coeffs_[i].is_zero())
      coeffs_[i] -= o.coeffs_[i];
  if (!split_)
    split_ = o.split_;
  return *this;
}

MultilinearMap operator*(const Scalar &s, MultilinearMap f) {
  for (auto &c : f.coeffs_)
    c *= s;
  return f;
}

bool operator==(const MultilinearMap &a, const MultilinearMap &b) {
  return a.field_ == b.field_ && a.arity_ == b.arity_ && a.source_dim_ == b.source_dim_ &&
         a.target_dim_ == b.target_dim_ && a.coeffs_ == b.coeffs_;
}

void IndexTuples::next() {
  for (std::size_t pos = idx_.size(); pos-- > 0;) {
    if (++idx_[pos] < base_)
      return;
    idx_[pos] = 0;
  }
  done_ = true;
}

} // namespace nabext
