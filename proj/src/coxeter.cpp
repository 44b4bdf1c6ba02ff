#include "vbraid/coxeter.hpp"

#include <algorithm>
#include <stdexcept>

namespace vbraid {

namespace {

Poly X(int k) { return Poly::variable(k); }
QSqrt2 r2() { return QSqrt2::sqrt2(); }

void check_index(int i, int n) {
  if (i < 0 || i >= n) {
    throw std::out_of_range("Coxeter generator s" + std::to_string(i) + " outside B_" +
                            std::to_string(n));
  }
}

// Coefficient matrix of a degree-preserving endo on linear forms:
// entry (j, k) = coefficient of X_k in e(X_j).
std::vector<std::vector<QSqrt2>> linear_matrix(const LinearEndo& e) {
  int n = e.nvars();
  std::vector<std::vector<QSqrt2>> m(static_cast<std::size_t>(n),
                                     std::vector<QSqrt2>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
          e.image(j).coefficient(Monomial::variable(k));
    }
  }
  return m;
}

int dense_rank(std::vector<std::vector<QSqrt2>> m) {
  int rank = 0;
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    QSqrt2 inv = prow[c].inverse();
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c].is_zero()) continue;
      QSqrt2 f = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * prow[k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

CartanTable::CartanTable(int n) : n_(n), values_(static_cast<std::size_t>(n * n)) {
  if (n < 1 || n > kMaxVariables) throw std::out_of_range("CartanTable: unsupported rank");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      QSqrt2 v;
      if (i == j) {
        v = QSqrt2(1);
      } else if (std::abs(i - j) == 1) {
        v = (std::min(i, j) == 0) ? QSqrt2(mpq_class(0), mpq_class(-1, 2))
                                  : QSqrt2(mpq_class(-1, 2), mpq_class(0));
      }
      values_[static_cast<std::size_t>(i * n + j)] = v;
    }
  }
}

LinearEndo alpha(int i, int n) {
  check_index(i, n);
  CartanTable cartan(n);
  std::vector<Poly> im;
  im.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    im.push_back(X(j) - X(i) * (QSqrt2(2) * cartan(i, j)));
  }
  return LinearEndo(std::move(im));
}

LinearEndo word_endo(const CoxeterWord& w, int n) {
  LinearEndo acc = LinearEndo::identity(n);
  for (int i : w) acc = acc.compose(alpha(i, n));
  return acc;
}

Poly act(const CoxeterWord& w, const Poly& p, int n) { return word_endo(w, n).apply(p); }

bool element_equal(const CoxeterWord& w1, const CoxeterWord& w2, int n) {
  return word_endo(w1, n) == word_endo(w2, n);
}

bool is_invariant(const CoxeterWord& w, const Poly& p, int n) { return act(w, p, n) == p; }

CoxeterWord inverse_word(const CoxeterWord& w) { return CoxeterWord(w.rbegin(), w.rend()); }

CoxeterWord concat(const CoxeterWord& a, const CoxeterWord& b) {
  CoxeterWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string to_string(const CoxeterWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int i : w) s += "s" + std::to_string(i);
  return s;
}

Reflection make_reflection(const CoxeterWord& w, int n) {
  for (int i : w) check_index(i, n);
  LinearEndo e = word_endo(w, n);
  if (!(e.compose(e) == LinearEndo::identity(n))) {
    throw std::invalid_argument(to_string(w) + " is not an involution");
  }
  auto m = linear_matrix(e);
  for (int j = 0; j < n; ++j) {
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] -= QSqrt2(1);
  }
  if (dense_rank(m) != 1) {
    throw std::invalid_argument(to_string(w) + " is not a reflection");
  }

  Poly root;
  bool palindrome = w.size() % 2 == 1 && std::equal(w.begin(), w.end(), w.rbegin());
  if (palindrome) {
    std::size_t mid = w.size() / 2;
    CoxeterWord prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(mid));
    root = act(prefix, X(w[mid]), n);
  } else {
    for (int j = 0; j < n && root.is_zero(); ++j) root = X(j) - e.image(j);
  }
  if (!(e.apply(root) == -root)) {
    throw std::logic_error("make_reflection: root is not negated by " + to_string(w));
  }
  return Reflection{w, n, std::move(root), std::move(e)};
}

DemazureParts demazure_decompose(const Reflection& t, const Poly& f) {
  Poly diff = f - t.action.apply(f);
  Poly q = divide_by_linear(diff, t.root * QSqrt2(2));
  Poly p = f - q * t.root;
  return DemazureParts{std::move(p), std::move(q)};
}

std::vector<Poly> invariant_generator_table(const CoxeterWord& w, int n) {
  std::vector<Poly> gens;
  int first_free = 0;
  if (w == CoxeterWord{0}) {
    gens = {r2() * X(0) + QSqrt2(2) * X(1), X(0) * X(0), X(2)};
    first_free = 3;
  } else if (w == CoxeterWord{1}) {
    gens = {QSqrt2(2) * X(0) + r2() * X(1), X(1) + QSqrt2(2) * X(2), X(1) * X(1)};
    first_free = 3;
  } else if (w == CoxeterWord{1, 0, 1}) {
    gens = {X(0), X(1) + X(2), X(1) * (r2() * X(0) + X(1))};
    first_free = 3;
  } else if (w == CoxeterWord{0, 1, 0}) {
    gens = {X(0) + r2() * X(2), X(1), X(0) * (X(0) + r2() * X(1))};
    first_free = 3;
  } else {
    throw std::invalid_argument("no invariant generator table for " + to_string(w));
  }
  if (n < 2) throw std::invalid_argument("invariant tables need n >= 2");
  std::vector<Poly> out;
  for (auto& g : gens) {
    if (g.max_variable() < n) out.push_back(std::move(g));
  }
  for (int k = first_free; k < n; ++k) out.push_back(X(k));
  return out;
}

}  // namespace vbraid
