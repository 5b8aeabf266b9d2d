#include "nabext/scalar.hpp"

#include <charconv>
#include <stdexcept>

namespace nabext {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 x) {
  return x >= static_cast<i128>(INT64_MIN) && x <= static_cast<i128>(INT64_MAX);
}

std::int64_t parse_int(std::string_view text) {
  if (!text.empty() && text.front() == '+')
    text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw std::invalid_argument("malformed scalar: '" + std::string(text) + "'");
  return value;
}

std::int64_t mod_p(std::int64_t n, std::uint32_t p) {
  std::int64_t r = n % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

} // namespace

bool is_prime_number(std::uint32_t n) {
  if (n < 2)
    return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime_number(p))
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  if (p > kMaxPrime)
    throw std::invalid_argument("prime " + std::to_string(p) +
                                " exceeds supported maximum 251");
  return Field(p);
}

Field Field::parse(std::string_view name) {
  if (name == "Q")
    return rationals();
  if (name.size() >= 2 && name.front() == 'F') {
    std::int64_t p = parse_int(name.substr(1));
    if (p <= 0)
      throw std::invalid_argument("bad field name: " + std::string(name));
    return prime(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("bad field name: '" + std::string(name) +
                              "' (expected Q or F<p>)");
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(Field f, std::int64_t n) : field_(f) {
  if (f.is_prime()) {
    num_ = mod_p(n, f.characteristic());
  } else {
    num_ = n;
  }
}

Scalar::Scalar(Field f, std::int64_t num, std::int64_t den) : field_(f) {
  if (den == 0)
    throw std::domain_error("division by zero");
  if (f.is_prime()) {
    *this = Scalar(f, num) / Scalar(f, den);
  } else {
    set_rational(num, den);
  }
}

Scalar Scalar::parse(Field f, std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Scalar(f, parse_int(text));
  if (f.is_prime())
    throw std::invalid_argument("fraction '" + std::string(text) +
                                "' not allowed over " + f.name());
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Scalar(f, parse_int(text.substr(0, slash)), den);
}

void Scalar::check_same_field(const Scalar &o) const {
  if (field_ != o.field_)
    throw std::invalid_argument("scalar field mismatch: " + field_.name() +
                                " vs " + o.field_.name());
}

void Scalar::set_rational(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0)
    den = 1;
  if (!fits64(num) || !fits64(den))
    throw std::overflow_error("rational scalar exceeds 64-bit range");
  num_ = static_cast<std::int64_t>(num);
  den_ = static_cast<std::int64_t>(den);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_prime()) {
    r.num_ = num_ == 0 ? 0 : field_.characteristic() - num_;
  } else {
    if (num_ == INT64_MIN)
      throw std::overflow_error("rational scalar exceeds 64-bit range");
    r.num_ = -num_;
  }
  return r;
}

Scalar &Scalar::operator+=(const Scalar &o) {
  check_same_field(o);
  if (field_.is_prime()) {
    num_ = (num_ + o.num_) % field_.characteristic();
  } else if (den_ == 1 && o.den_ == 1) {
    set_rational(static_cast<i128>(num_) + o.num_, 1);
  } else {
    set_rational(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                 static_cast<i128>(den_) * o.den_);
  }
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) { return *this += -o; }

Scalar &Scalar::operator*=(const Scalar &o) {
  check_same_field(o);
  if (field_.is_prime()) {
    num_ = (num_ * o.num_) % field_.characteristic();
  } else {
    set_rational(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
  }
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) {
  check_same_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero())
    throw std::domain_error("division by zero");
  Scalar r = *this;
  if (field_.is_prime()) {
    // Fermat: x^(p-2) = x^-1
    return pow(field_.characteristic() - 2);
  }
  r.set_rational(den_, num_);
  return r;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1)
      result *= base;
    e >>= 1;
    if (e > 0)
      base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Vector zero_vector(Field f, std::size_t dim) { return Vector(dim, Scalar::zero(f)); }

Vector basis_vector(Field f, std::size_t dim, std::size_t i) {
  Vector v = zero_vector(f, dim);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector &v) {
  for (const auto &s : v)
    if (!s.is_zero())
      return false;
  return true;
}

Vector add(const Vector &x, const Vector &y) {
  if (x.size() != y.size())
    throw std::invalid_argument("vector dimension mismatch");
  Vector r = x;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += y[i];
  return r;
}

Vector sub(const Vector &x, const Vector &y) {
  if (x.size() != y.size())
    throw std::invalid_argument("vector dimension mismatch");
  Vector r = x;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= y[i];
  return r;
}

Vector scale(const Scalar &s, const Vector &x) {
  Vector r = x;
  for (auto &c : r)
    c *= s;
  return r;
}

void axpy(Vector &x, const Scalar &s, const Vector &y) {
  if (x.size() != y.size())
    throw std::invalid_argument("vector dimension mismatch");
  if (s.is_zero())
    return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!y[i].is_zero())
      x[i] += s * y[i];
}

} // namespace nabext
