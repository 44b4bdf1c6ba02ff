#pragma once

// Graded R-bimodules that are free of finite rank as left modules, presented
// by a homogeneous left basis and the matrices of right multiplication by the
// X_j. Convention: e_l * X_j = sum_k A(j)_{kl} e_k.

#include "vbraid/coxeter.hpp"
#include "vbraid/poly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace vbraid {

/// A contiguous block of the basis spanning one tensor word (direct sums of
/// such blocks arise in total complexes).
struct Summand {
  std::size_t offset = 0;
  std::size_t rank = 0;
  std::string word;
};

struct Bimodule {
  int n = 0;
  std::size_t rank = 0;
  std::vector<std::string> basis_labels;
  std::vector<int> basis_degrees;
  std::vector<PolyMatrix> right_action;  // one rank x rank matrix per variable
  std::vector<Summand> summands;         // block-diagonal decomposition
  std::string factor_word;

  /// Summand i as a bimodule on its own.
  Bimodule summand(std::size_t i) const;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

Bimodule bimodule_R(int n);
/// R with right action twisted by w: 1 * X_j = w(X_j).
Bimodule bimodule_Rw(const CoxeterWord& w, int n);
/// B_t = R (x)_{R^t} R with basis {1(x)1, 1(x)beta}, beta the root of t.
Bimodule bimodule_Bs(const Reflection& t);
Bimodule shift(const Bimodule& m, int p);
Bimodule tensor(const Bimodule& m, const Bimodule& n);
Bimodule direct_sum(const std::vector<Bimodule>& parts);
/// Rank-0 bimodule.
Bimodule zero_bimodule(int n);

struct Check {
  bool ok = true;
  std::string message;  // first failure, empty when ok

  explicit operator bool() const { return ok; }
  static Check pass() { return Check{}; }
  static Check fail(std::string why) { return Check{false, std::move(why)}; }
};

/// Pairwise commuting right actions and homogeneity of every entry.
Check check_bimodule(const Bimodule& m);

/// Matrix of right multiplication by p, i.e. p evaluated at the right-action matrices.
PolyMatrix right_multiplication(const Bimodule& m, const Poly& p);

/// Coordinates of (1 (x) ... (x) 1) * p, i.e. the first basis vector times p.
std::vector<Poly> unit_times(const Bimodule& m, const Poly& p);

struct Morphism {
  BimodulePtr source;
  BimodulePtr target;
  PolyMatrix matrix;  // target.rank x source.rank, acts on coordinate columns
  int degree_shift = 0;
};

/// Degree that entry (k, l) of a map source -> target of the given shift must have.
inline int forced_degree(const Bimodule& source, const Bimodule& target, std::size_t k,
                         std::size_t l, int shift) {
  return source.basis_degrees[l] + shift - target.basis_degrees[k];
}

/// Right-action commutation M A_src(j) = A_tgt(j) M and entry grading.
Check check_morphism(const Bimodule& source, const Bimodule& target, const PolyMatrix& matrix,
                     int shift = 0);
inline Check is_morphism(const Morphism& f) {
  return check_morphism(*f.source, *f.target, f.matrix, f.degree_shift);
}

/// f (x) g : M (x) N -> M2 (x) N2 for f : M -> M2, g : N -> N2, respecting
/// the summand ordering produced by tensor().
PolyMatrix tensor_maps(const Bimodule& m, const Bimodule& m2, const PolyMatrix& f,
                       const Bimodule& n, const Bimodule& n2, const PolyMatrix& g);

/// Basis of the space of bimodule maps source -> target of the given degree
/// shift. Solved block by block over summand pairs; deterministic.
std::vector<PolyMatrix> solve_morphisms(const Bimodule& source, const Bimodule& target,
                                        int shift = 0);

/// Two-sided inverse of a degree-0 map, found inside the Hom space of
/// target -> source; empty when f is not invertible.
std::optional<PolyMatrix> invert_morphism(const Bimodule& source, const Bimodule& target,
                                          const PolyMatrix& f);

}  // namespace vbraid
