#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace beacon {

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p/q", "-p/q" or a bare integer. Throws ParseError.
  static Scalar parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  /// Largest integer not above the value.
  long floor() const;
  double to_double() const { return q_.get_d(); }
  /// Canonical "p/q" or "p" text.
  std::string str() const;

  Scalar operator-() const { return Scalar(mpq_class(-q_), Raw{}); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.q_ + b.q_), Raw{}); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.q_ - b.q_), Raw{}); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.q_ * b.q_), Raw{}); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { Scalar r = a; r /= b; return r; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

private:
  struct Raw {};
  // Results of gmp arithmetic on canonical operands are already canonical.
  Scalar(mpq_class&& q, Raw) : q_(std::move(q)) {}

  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

}  // namespace beacon

template <>
struct std::hash<beacon::Scalar> {
  std::size_t operator()(const beacon::Scalar& s) const noexcept { return s.hash(); }
};
