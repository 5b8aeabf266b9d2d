#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nabext {

/// Ground field: the rationals or a prime field F_p with p <= 251.
class Field {
public:
  static constexpr std::uint32_t kMaxPrime = 251;

  Field() = default;
  static Field rationals() { return Field{}; }
  /// Throws std::invalid_argument unless p is a prime <= kMaxPrime.
  static Field prime(std::uint32_t p);
  /// Parses "Q" or "F<p>" (e.g. "F2").
  static Field parse(std::string_view name);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(Field, Field) = default;

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint32_t n);

/// An exact scalar tagged with its field.
///
/// Rationals are kept reduced with a positive denominator in 64-bit
/// numerator/denominator; intermediate products use 128-bit arithmetic and
/// any result that does not fit throws std::overflow_error, so a value is
/// either exact or an error. Prime-field elements are residues in [0, p).
/// Mixing scalars from different fields throws std::invalid_argument.
class Scalar {
public:
  Scalar() = default;
  Scalar(Field f, std::int64_t n);
  Scalar(Field f, std::int64_t num, std::int64_t den);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  /// Accepts "n" or "n/d" over Q and a bare integer over F_p.
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const { return num_ == 0; }
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  /// Residue in [0, p); only meaningful over F_p.
  std::uint32_t residue() const { return static_cast<std::uint32_t>(num_); }

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  Scalar &operator/=(const Scalar &o);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
  friend bool operator==(const Scalar &a, const Scalar &b) {
    return a.field_ == b.field_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  void check_same_field(const Scalar &o) const;
  void set_rational(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  Field field_{};
};

/// Coordinates of an element in a fixed basis.
using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t dim);
Vector basis_vector(Field f, std::size_t dim, std::size_t i);
bool is_zero(const Vector &v);
Vector add(const Vector &x, const Vector &y);
Vector sub(const Vector &x, const Vector &y);
Vector scale(const Scalar &s, const Vector &x);
/// x += s * y
void axpy(Vector &x, const Scalar &s, const Vector &y);

} // namespace nabext
