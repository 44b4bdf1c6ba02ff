#pragma once

// Families of matrices indexed by cohomological degree, and their flattening
// into coordinate vectors for the linear solvers.

#include "vbraid/linalg.hpp"
#include "vbraid/poly.hpp"

#include <map>
#include <vector>

namespace vbraid {

/// Components of a chain map or homotopy, keyed by the source degree.
using DegreeMaps = std::map<int, PolyMatrix>;

std::uint64_t pack_monomial(const Monomial& m);

/// Coordinate key of the coefficient of m in entry (row, col); prefix
/// occupies bits 48 and up.
inline LinKey flat_key(std::uint64_t prefix, std::size_t row, std::size_t col,
                       const Monomial& m) {
  return {prefix | (static_cast<std::uint64_t>(row) << 24) | static_cast<std::uint64_t>(col),
          pack_monomial(m)};
}

inline std::uint64_t degree_prefix(int degree) {
  return static_cast<std::uint64_t>(degree + 4096) << 48;
}

SparseVector flatten(const PolyMatrix& a, std::uint64_t prefix = 0);
SparseVector flatten(const DegreeMaps& maps);

/// sum_i combo_i * items[i] with combo keyed by index_key(i).
PolyMatrix combine(const std::vector<PolyMatrix>& items, const SparseVector& combo);
DegreeMaps combine(const std::vector<DegreeMaps>& items, const SparseVector& combo);

/// x += c * y, componentwise.
void add_scaled(DegreeMaps& x, const DegreeMaps& y, const QSqrt2& c);

}  // namespace vbraid
