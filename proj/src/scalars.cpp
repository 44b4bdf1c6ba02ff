#include "vbraid/scalars.hpp"

#include <cctype>

namespace vbraid {

QSqrt2::QSqrt2(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  if (is_rational() && o.is_rational()) {
    a_ *= o.a_;
    return *this;
  }
  mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

void QSqrt2::add_product(const QSqrt2& y, const QSqrt2& z) {
  if (y.is_rational() && z.is_rational()) {
    a_ += y.a_ * z.a_;
    return;
  }
  a_ += y.a_ * z.a_ + 2 * y.b_ * z.b_;
  b_ += y.a_ * z.b_ + y.b_ * z.a_;
}

QSqrt2 QSqrt2::operator-() const { return QSqrt2(-a_, -b_); }

QSqrt2 QSqrt2::inverse() const {
  if (is_zero()) throw std::domain_error("QSqrt2: division by zero");
  // (a + b r)^-1 = (a - b r) / (a^2 - 2 b^2); the norm is nonzero since r is irrational.
  mpq_class norm = a_ * a_ - 2 * b_ * b_;
  return QSqrt2(a_ / norm, -b_ / norm);
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

std::string QSqrt2::to_string() const {
  if (sgn(b_) == 0) return vbraid::to_string(a_);
  if (sgn(a_) == 0) return vbraid::to_string(b_) + "*sqrt2";
  return vbraid::to_string(a_) + " + " + vbraid::to_string(b_) + "*sqrt2";
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  QSqrt2 parse_all() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("empty scalar", pos_);
    QSqrt2 acc = parse_term();
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      ++pos_;
      skip_ws();
      QSqrt2 t = parse_term();
      if (c == '-') t = -t;
      acc += t;
    }
    return acc;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool consume(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  // term := [-] rational ['*' 'sqrt2'] | [-] 'sqrt2'
  QSqrt2 parse_term() {
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    mpq_class value(1);
    bool have_number = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      value = parse_rational();
      have_number = true;
    }
    bool radical = false;
    std::size_t save = pos_;
    skip_ws();
    if (have_number && consume("*")) {
      skip_ws();
      if (!consume("sqrt2")) throw ParseError("expected 'sqrt2'", pos_);
      radical = true;
    } else if (!have_number) {
      if (!consume("sqrt2")) throw ParseError("expected number or 'sqrt2'", pos_);
      radical = true;
    } else {
      pos_ = save;
    }
    if (neg) value = -value;
    return radical ? QSqrt2(mpq_class(0), value) : QSqrt2(value, mpq_class(0));
  }

  mpq_class parse_rational() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string num(s_.substr(start, pos_ - start));
    std::string den = "1";
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == dstart) throw ParseError("expected denominator", pos_);
      den = std::string(s_.substr(dstart, pos_ - dstart));
    }
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator", start);
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return q;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QSqrt2 QSqrt2::parse(std::string_view text) { return ScalarParser(text).parse_all(); }

}  // namespace vbraid
