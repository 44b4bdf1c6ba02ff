#pragma once

// Sparse exact linear algebra over Q(sqrt 2).

#include "vbraid/scalars.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace vbraid {

using LinKey = std::pair<std::uint64_t, std::uint64_t>;
using SparseVector = std::map<LinKey, QSqrt2>;

/// x += c * y, dropping entries that cancel.
void axpy(SparseVector& x, const QSqrt2& c, const SparseVector& y);
/// x[k] += c.
void add_entry(SparseVector& x, const LinKey& k, const QSqrt2& c);

/// Incrementally built echelon basis of span{v_0, v_1, ...}. Every stored row
/// remembers how it was obtained from the inserted vectors, so membership
/// queries return explicit combinations.
class EchelonBasis {
 public:
  /// Inserts the next vector (index = number of previous insertions).
  /// Returns the kernel relation sum_i c_i v_i = 0 when it is dependent,
  /// keyed by {0, i}.
  std::optional<SparseVector> insert(const SparseVector& v);

  /// Combination c with v = sum_i c_i v_i, if v lies in the span.
  std::optional<SparseVector> express(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return express(v).has_value(); }

  std::size_t inserted() const { return inserted_; }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    SparseVector values;  // leading entry (smallest key) equals 1
    SparseVector combo;   // values = sum combo_i v_i
  };

  // Reduces v in place, accumulating used = combination subtracted so far.
  void reduce(SparseVector& v, SparseVector& used) const;

  std::vector<Row> rows_;
  std::map<LinKey, std::size_t> pivot_row_;
  std::size_t inserted_ = 0;
};

/// Basis of {c : sum_i c_i columns[i] = 0}; entries keyed by {0, i}.
std::vector<SparseVector> kernel(const std::vector<SparseVector>& columns);

/// Some c with sum_i c_i columns[i] = target, if one exists.
std::optional<SparseVector> solve(const std::vector<SparseVector>& columns,
                                  const SparseVector& target);

inline LinKey index_key(std::size_t i) { return {0, static_cast<std::uint64_t>(i)}; }

/// Dense coefficient list (length size) from a combination keyed by index_key.
std::vector<QSqrt2> to_dense(const SparseVector& combo, std::size_t size);

}  // namespace vbraid
