#include "vbraid/scalars.hpp"

#include <doctest.h>

#include <random>

using vbraid::ParseError;
using vbraid::QSqrt2;

namespace {

QSqrt2 q(long an, long ad, long bn, long bd) { return QSqrt2(mpq_class(an, ad), mpq_class(bn, bd)); }

QSqrt2 random_q(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return q(num(rng), den(rng), num(rng), den(rng));
}

}  // namespace

TEST_CASE("products and quotients involving sqrt2") {
  QSqrt2 half_root = q(0, 1, 1, 2);
  CHECK(half_root * half_root == q(1, 2, 0, 1));
  CHECK(-half_root + half_root == QSqrt2(0));
  // oracle: the quotient times the divisor gives back the dividend
  QSqrt2 quotient = QSqrt2(1) / QSqrt2::sqrt2();
  CHECK(quotient * QSqrt2::sqrt2() == QSqrt2(1));
  CHECK(quotient == half_root);
}

TEST_CASE("canonical rationals") {
  QSqrt2 x(mpq_class(6, -4), mpq_class(10, 20));
  CHECK(x.rational_part().get_num() == -3);
  CHECK(x.rational_part().get_den() == 2);
  CHECK(x.sqrt2_part().get_num() == 1);
  CHECK(x.sqrt2_part().get_den() == 2);
}

TEST_CASE("division by zero is reported") { CHECK_THROWS_AS(QSqrt2(1) / QSqrt2(0), std::domain_error); }

TEST_CASE("printing and parsing") {
  CHECK(QSqrt2::parse("-1/2*sqrt2") == q(0, 1, -1, 2));
  CHECK(QSqrt2::parse("3") == QSqrt2(3));
  CHECK(q(1, 1, -1, 1).to_string() == "1 + -1*sqrt2");
  CHECK(QSqrt2(0).to_string() == "0");
  CHECK(q(0, 1, 3, 4).to_string() == "3/4*sqrt2");
  CHECK(QSqrt2::parse("2/3 + 5*sqrt2") == q(2, 3, 5, 1));
  CHECK(QSqrt2::parse("sqrt2") == QSqrt2::sqrt2());
}

TEST_CASE("malformed scalars carry a position") {
  for (const char* bad : {"", "1/", "1/0", "3 +", "2*sqrt3", "x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(QSqrt2::parse(bad), ParseError);
  }
  try {
    QSqrt2::parse("1 + 2*sqrt3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 4);
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    QSqrt2 x = random_q(rng), y = random_q(rng), z = random_q(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == QSqrt2(1));
    CHECK(QSqrt2::parse(x.to_string()) == x);
  }
}
