#pragma once

// Graded polynomials k[X_0, ..., X_{n-1}] over Q(sqrt 2) with deg X_k = 2.

#include "vbraid/scalars.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vbraid {

inline constexpr int kMaxVariables = 8;

/// Exponent vector. Entries beyond the ring's variable count stay zero.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exponents{};
  std::uint16_t total = 0;  // sum of exponents

  static Monomial variable(int k);
  static Monomial from_exponents(const std::vector<int>& e);

  int exponent(int k) const { return exponents[static_cast<std::size_t>(k)]; }
  /// Graded degree (each variable has degree 2).
  int degree() const { return 2 * total; }
  bool is_one() const { return total == 0; }

  Monomial operator*(const Monomial& o) const;
  /// Whether `o` divides this monomial.
  bool divisible_by(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;

  friend bool operator==(const Monomial& x, const Monomial& y) {
    return x.exponents == y.exponents;
  }
};

/// Graded lexicographic order with X_0 > X_1 > ...; `before(x, y)` means x is
/// the larger monomial, so sorted ranges list leading terms first.
struct GrlexDescending {
  bool operator()(const Monomial& x, const Monomial& y) const {
    if (x.total != y.total) return x.total > y.total;
    return x.exponents > y.exponents;
  }
};

class Poly {
 public:
  using Term = std::pair<Monomial, QSqrt2>;

  Poly() = default;
  Poly(const QSqrt2& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(QSqrt2(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Monomial& m, const QSqrt2& c);

  static Poly variable(int k) { return Poly(Monomial::variable(k), QSqrt2(1)); }
  /// Sums arbitrary (possibly repeated or cancelling) terms into canonical form.
  static Poly from_terms(std::vector<Term> terms);
  static Poly parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  /// Graded degree if homogeneous and nonzero.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  /// Coefficient of a monomial (zero when absent).
  QSqrt2 coefficient(const Monomial& m) const;
  /// Largest variable index occurring, or -1 for constants.
  int max_variable() const;

  std::string to_string() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const QSqrt2& c);
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(const Poly& x, const Poly& y);
  friend Poly operator*(Poly x, const QSqrt2& c) { return x *= c; }
  friend Poly operator*(const QSqrt2& c, Poly x) { return x *= c; }
  friend Poly operator*(Poly x, long c) { return x *= QSqrt2(c); }
  friend Poly operator*(long c, Poly x) { return x *= QSqrt2(c); }
  Poly operator-() const;

  /// this += c * m * p
  void add_scaled(const Poly& p, const QSqrt2& c, const Monomial& m);

  friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }

 private:
  std::vector<Term> terms_;  // strictly decreasing under GrlexDescending, no zero coefficients
};

Poly pow(const Poly& p, int e);

/// All monomials of graded degree d in n variables, in grlex-descending order.
/// Odd degrees yield an empty list.
std::vector<Monomial> homogeneous_basis(int n, int d);

/// Exact quotient q with p = l * q; throws std::domain_error otherwise.
Poly divide_by_linear(const Poly& p, const Poly& l);

/// Algebra endomorphism of k[X_0..X_{n-1}] given by the images of the X_j.
class LinearEndo {
 public:
  LinearEndo() = default;
  explicit LinearEndo(std::vector<Poly> images);
  static LinearEndo identity(int n);

  int nvars() const { return static_cast<int>(images_.size()); }
  const std::vector<Poly>& images() const { return images_; }
  const Poly& image(int j) const { return images_[static_cast<std::size_t>(j)]; }

  /// Ring-homomorphism extension of X_j -> image(j).
  Poly apply(const Poly& p) const;
  /// (this o other)(X_j) = this(other(X_j)).
  LinearEndo compose(const LinearEndo& other) const;

  friend bool operator==(const LinearEndo& x, const LinearEndo& y) {
    return x.images_ == y.images_;
  }

 private:
  std::vector<Poly> images_;
};

inline Poly substitute(const LinearEndo& e, const Poly& p) { return e.apply(p); }

/// Dense matrix of polynomials; used for right actions and morphisms.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  PolyMatrix& operator*=(const QSqrt2& c);
  friend PolyMatrix operator+(PolyMatrix x, const PolyMatrix& y) { return x += y; }
  friend PolyMatrix operator-(PolyMatrix x, const PolyMatrix& y) { return x -= y; }
  friend PolyMatrix operator*(PolyMatrix x, const QSqrt2& c) { return x *= c; }
  std::vector<Poly> apply(const std::vector<Poly>& v) const;

  /// Copy of the block [r0, r0+nr) x [c0, c0+nc).
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b);

  friend bool operator==(const PolyMatrix& x, const PolyMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> data_;
};

/// Evaluates polynomials at a tuple of pairwise commuting square matrices,
/// memoizing monomial powers.
class MatrixEvaluator {
 public:
  explicit MatrixEvaluator(const std::vector<PolyMatrix>& generators);
  PolyMatrix evaluate(const Poly& p);

 private:
  const PolyMatrix& power(const Monomial& m);

  const std::vector<PolyMatrix>& generators_;
  std::size_t size_;
  std::map<Monomial, PolyMatrix, GrlexDescending> powers_;
};

}  // namespace vbraid
