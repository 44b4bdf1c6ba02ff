#include "vbraid/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace vbraid {

Monomial Monomial::variable(int k) {
  if (k < 0 || k >= kMaxVariables) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.exponents[static_cast<std::size_t>(k)] = 1;
  m.total = 1;
  return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& e) {
  if (e.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw std::out_of_range("too many variables");
  }
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > 255) throw std::out_of_range("exponent out of range");
    m.exponents[i] = static_cast<std::uint8_t>(e[i]);
    m.total = static_cast<std::uint16_t>(m.total + e[i]);
  }
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    m.exponents[i] = static_cast<std::uint8_t>(exponents[i] + o.exponents[i]);
  }
  m.total = static_cast<std::uint16_t>(total + o.total);
  return m;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < o.exponents[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    m.exponents[i] = static_cast<std::uint8_t>(exponents[i] - o.exponents[i]);
  }
  m.total = static_cast<std::uint16_t>(total - o.total);
  return m;
}

// ---------------------------------------------------------------------------

Poly::Poly(const QSqrt2& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

Poly::Poly(const Monomial& m, const QSqrt2& c) {
  if (!c.is_zero()) terms_.emplace_back(m, c);
}

Poly Poly::from_terms(std::vector<Term> terms) {
  GrlexDescending less;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return less(x.first, y.first); });
  Poly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

std::optional<int> Poly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.front().first.degree();
  for (const auto& t : terms_) {
    if (t.first.degree() != d) return std::nullopt;
  }
  return d;
}

QSqrt2 Poly::coefficient(const Monomial& m) const {
  GrlexDescending less;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [&](const Term& t, const Monomial& key) { return less(t.first, key); });
  if (it != terms_.end() && it->first == m) return it->second;
  return QSqrt2();
}

int Poly::max_variable() const {
  int best = -1;
  for (const auto& t : terms_) {
    for (int k = kMaxVariables - 1; k > best; --k) {
      if (t.first.exponent(k) != 0) {
        best = k;
        break;
      }
    }
  }
  return best;
}

namespace {

std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& x,
                                    const std::vector<Poly::Term>& y, bool subtract) {
  GrlexDescending less;
  std::vector<Poly::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && less(x[i].first, y[j].first))) {
      out.push_back(x[i++]);
    } else if (i == x.size() || less(y[j].first, x[i].first)) {
      out.emplace_back(y[j].first, subtract ? -y[j].second : y[j].second);
      ++j;
    } else {
      QSqrt2 c = x[i].second;
      if (subtract) {
        c -= y[j].second;
      } else {
        c += y[j].second;
      }
      if (!c.is_zero()) out.emplace_back(x[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

std::string monomial_string(const Monomial& m) {
  std::string s;
  for (int k = 0; k < kMaxVariables; ++k) {
    int e = m.exponent(k);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += "X" + std::to_string(k);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const QSqrt2& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

void Poly::add_scaled(const Poly& p, const QSqrt2& c, const Monomial& m) {
  if (p.is_zero() || c.is_zero()) return;
  std::vector<Term> shifted;
  shifted.reserve(p.terms_.size());
  for (const auto& t : p.terms_) shifted.emplace_back(t.first * m, t.second * c);
  if (terms_.empty()) {
    terms_ = std::move(shifted);
    return;
  }
  terms_ = merge_terms(terms_, shifted, false);
}

Poly operator*(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return Poly();
  if (x.terms_.size() == 1) {
    Poly out;
    out.add_scaled(y, x.terms_[0].second, x.terms_[0].first);
    return out;
  }
  if (y.terms_.size() == 1) {
    Poly out;
    out.add_scaled(x, y.terms_[0].second, y.terms_[0].first);
    return out;
  }
  std::vector<Poly::Term> prod;
  prod.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& a : x.terms_) {
    for (const auto& b : y.terms_) prod.emplace_back(a.first * b.first, a.second * b.second);
  }
  return Poly::from_terms(std::move(prod));
}

Poly pow(const Poly& p, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Poly result(1);
  Poly base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [m, c] = terms_[i];
    if (i > 0) s += " + ";
    bool compound = !c.is_rational() && sgn(c.rational_part()) != 0;
    std::string cs = compound ? "(" + c.to_string() + ")" : c.to_string();
    if (m.is_one()) {
      s += cs;
    } else if (c.is_one()) {
      s += monomial_string(m);
    } else if (c == QSqrt2(-1)) {
      s += "-" + monomial_string(m);
    } else {
      s += cs + "*" + monomial_string(m);
    }
  }
  return s;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Poly parse_all() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("empty polynomial", pos_);
    Poly p = parse_expr();
    skip_ws();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Poly parse_expr() {
    Poly acc = parse_term();
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly t = parse_term();
      if (c == '-') {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  Poly parse_term() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    Poly acc = parse_factor();
    while (peek('*')) {
      ++pos_;
      acc = acc * parse_factor();
    }
    return neg ? -acc : acc;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected digits", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly parse_factor() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of polynomial", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = parse_expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (s_.substr(pos_, 5) == "sqrt2") {
      pos_ += 5;
      return Poly(QSqrt2::sqrt2());
    }
    if (c == 'X') {
      std::size_t at = pos_;
      ++pos_;
      int k = std::stoi(digits());
      if (k >= kMaxVariables) throw ParseError("variable index too large", at);
      int e = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        e = std::stoi(digits());
      }
      return pow(Poly::variable(k), e);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      mpz_class num(digits());
      mpz_class den(1);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = mpz_class(digits());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      mpq_class q(num, den);
      q.canonicalize();
      return Poly(QSqrt2(q, mpq_class(0)));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse_all(); }

// ---------------------------------------------------------------------------

std::vector<Monomial> homogeneous_basis(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0 || d % 2 != 0 || n <= 0) return out;
  int total = d / 2;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  // Enumerate exponent vectors summing to `total` in lex-descending order.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      e[static_cast<std::size_t>(pos)] = remaining;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[static_cast<std::size_t>(pos)] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  rec(rec, 0, total);
  return out;
}

Poly divide_by_linear(const Poly& p, const Poly& l) {
  auto dl = l.homogeneous_degree();
  if (!dl || *dl != 2) throw std::invalid_argument("divide_by_linear: divisor is not a nonzero linear form");
  const auto& [lead_m, lead_c] = l.leading();
  QSqrt2 inv = lead_c.inverse();
  Poly rem = p;
  std::vector<Poly::Term> quotient;
  while (!rem.is_zero()) {
    const auto& [m, c] = rem.leading();
    if (!m.divisible_by(lead_m)) {
      throw std::domain_error("divide_by_linear: " + l.to_string() + " does not divide " +
                              p.to_string());
    }
    Monomial qm = m / lead_m;
    QSqrt2 qc = c * inv;
    rem.add_scaled(l, -qc, qm);
    quotient.emplace_back(qm, qc);
  }
  return Poly::from_terms(std::move(quotient));
}

// ---------------------------------------------------------------------------

LinearEndo::LinearEndo(std::vector<Poly> images) : images_(std::move(images)) {}

LinearEndo LinearEndo::identity(int n) {
  std::vector<Poly> im;
  for (int j = 0; j < n; ++j) im.push_back(Poly::variable(j));
  return LinearEndo(std::move(im));
}

Poly LinearEndo::apply(const Poly& p) const {
  if (p.is_zero()) return p;
  // powers[j][e] = image(j)^e, filled lazily
  std::vector<std::vector<Poly>> powers(images_.size());
  Poly result;
  for (const auto& [m, c] : p.terms()) {
    Poly term(c);
    for (std::size_t j = 0; j < static_cast<std::size_t>(kMaxVariables); ++j) {
      int e = m.exponents[j];
      if (e == 0) continue;
      if (j >= images_.size()) throw std::out_of_range("LinearEndo: variable outside domain");
      auto& pw = powers[j];
      if (pw.empty()) pw.push_back(Poly(1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images_[j]);
      term = term * pw[static_cast<std::size_t>(e)];
    }
    result += term;
  }
  return result;
}

LinearEndo LinearEndo::compose(const LinearEndo& other) const {
  std::vector<Poly> im;
  im.reserve(other.images_.size());
  for (const auto& q : other.images_) im.push_back(apply(q));
  return LinearEndo(std::move(im));
}

// ---------------------------------------------------------------------------

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly(1);
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch in product");
  PolyMatrix out(rows_, o.cols_);
  // Skip zero entries; morphism matrices are typically very sparse.
  std::vector<std::vector<std::size_t>> nonzero_in_row(o.rows_);
  for (std::size_t k = 0; k < o.rows_; ++k) {
    for (std::size_t j = 0; j < o.cols_; ++j) {
      if (!o.at(k, j).is_zero()) nonzero_in_row[k].push_back(j);
    }
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j : nonzero_in_row[k]) {
        const Poly& b = o.at(k, j);
        if (a.size() == 1) {
          out.at(i, j).add_scaled(b, a.leading().second, a.leading().first);
        } else {
          out.at(i, j) += a * b;
        }
      }
    }
  }
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("PolyMatrix: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator*=(const QSqrt2& c) {
  for (auto& p : data_) p *= c;
  return *this;
}

std::vector<Poly> PolyMatrix::apply(const std::vector<Poly>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("PolyMatrix: vector length mismatch");
  std::vector<Poly> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero() || v[k].is_zero()) continue;
      out[i] += at(i, k) * v[k];
    }
  }
  return out;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  PolyMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  }
  return b;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
  }
}

// ---------------------------------------------------------------------------

MatrixEvaluator::MatrixEvaluator(const std::vector<PolyMatrix>& generators)
    : generators_(generators), size_(generators.empty() ? 0 : generators.front().rows()) {}

const PolyMatrix& MatrixEvaluator::power(const Monomial& m) {
  auto it = powers_.find(m);
  if (it != powers_.end()) return it->second;
  PolyMatrix value;
  if (m.is_one()) {
    value = PolyMatrix::identity(size_);
  } else {
    int k = 0;
    while (m.exponent(k) == 0) ++k;
    if (static_cast<std::size_t>(k) >= generators_.size()) {
      throw std::out_of_range("MatrixEvaluator: variable outside domain");
    }
    Monomial rest = m / Monomial::variable(k);
    value = generators_[static_cast<std::size_t>(k)] * power(rest);
  }
  return powers_.emplace(m, std::move(value)).first->second;
}

PolyMatrix MatrixEvaluator::evaluate(const Poly& p) {
  PolyMatrix out(size_, size_);
  for (const auto& [m, c] : p.terms()) {
    PolyMatrix t = power(m);
    t *= c;
    out += t;
  }
  return out;
}

}  // namespace vbraid
