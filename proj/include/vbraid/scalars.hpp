#pragma once

// Exact arithmetic in Q(sqrt 2).

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vbraid {

/// Malformed textual input; `position()` is the byte offset of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Value a + b*sqrt(2) with a, b rational. Both parts are kept canonical by
/// GMP, so equality is componentwise.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(long a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(mpq_class a, mpq_class b);

  static QSqrt2 sqrt2() { return QSqrt2(mpq_class(0), mpq_class(1)); }
  static QSqrt2 parse(std::string_view text);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt2_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// Throws std::domain_error on zero.
  QSqrt2 inverse() const;
  std::string to_string() const;

  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  QSqrt2 operator-() const;

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Fused x += y * z, avoiding a temporary in elimination loops.
  void add_product(const QSqrt2& y, const QSqrt2& z);

 private:
  mpq_class a_;
  mpq_class b_;
};

std::string to_string(const mpq_class& q);

}  // namespace vbraid
