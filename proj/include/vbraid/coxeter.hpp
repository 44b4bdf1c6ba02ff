#pragma once

// The Coxeter group of type B_n acting on R = k[X_0..X_{n-1}] through its
// reflection representation.

#include "vbraid/poly.hpp"

#include <vector>

namespace vbraid {

/// Word s_{i_1} ... s_{i_k} in the Coxeter generators.
using CoxeterWord = std::vector<int>;

/// Symmetric bilinear form <s_i, s_j> = -cos(pi / m(s_i, s_j)) for B_n.
class CartanTable {
 public:
  explicit CartanTable(int n);
  int rank() const { return n_; }
  const QSqrt2& operator()(int i, int j) const {
    return values_[static_cast<std::size_t>(i * n_ + j)];
  }

 private:
  int n_;
  std::vector<QSqrt2> values_;
};

/// alpha_i(X_j) = X_j - 2 <s_i, s_j> X_i.
LinearEndo alpha(int i, int n);

/// Composite alpha_{i_1} o ... o alpha_{i_k}; the empty word gives the identity.
LinearEndo word_endo(const CoxeterWord& w, int n);

/// w(p) in k[X_0..X_{n-1}].
Poly act(const CoxeterWord& w, const Poly& p, int n);

bool element_equal(const CoxeterWord& w1, const CoxeterWord& w2, int n);
bool is_invariant(const CoxeterWord& w, const Poly& p, int n);

CoxeterWord inverse_word(const CoxeterWord& w);
CoxeterWord concat(const CoxeterWord& a, const CoxeterWord& b);
std::string to_string(const CoxeterWord& w);

/// A reflection t of W together with a root: a linear form beta with t(beta) = -beta.
struct Reflection {
  CoxeterWord word;
  int n = 0;
  Poly root;
  LinearEndo action;
};

/// Verifies that w acts as a reflection (involution whose fixed space has
/// codimension one) and picks the root u(X_i) when w is spelled u s_i u^{-1};
/// otherwise the root is the first nonzero X_j - w(X_j).
Reflection make_reflection(const CoxeterWord& w, int n);

struct DemazureParts {
  Poly invariant;    // p
  Poly coefficient;  // q
};

/// f = p + q * beta with p, q fixed by t.
DemazureParts demazure_decompose(const Reflection& t, const Poly& f);

/// Tabulated algebraically independent generators of R^w for w in
/// {s0, s1, s1s0s1, s0s1s0}. Generators involving X_k with k >= n are dropped.
std::vector<Poly> invariant_generator_table(const CoxeterWord& w, int n);

}  // namespace vbraid
