#include "vbraid/linalg.hpp"

namespace vbraid {

void axpy(SparseVector& x, const QSqrt2& c, const SparseVector& y) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : y) {
    auto hint = x.lower_bound(k);
    if (hint != x.end() && hint->first == k) {
      hint->second.add_product(c, v);
      if (hint->second.is_zero()) x.erase(hint);
    } else {
      x.emplace_hint(hint, k, c * v);
    }
  }
}

void add_entry(SparseVector& x, const LinKey& k, const QSqrt2& c) {
  if (c.is_zero()) return;
  auto it = x.lower_bound(k);
  if (it != x.end() && it->first == k) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  } else {
    x.emplace_hint(it, k, c);
  }
}

void EchelonBasis::reduce(SparseVector& v, SparseVector& used) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto pr = pivot_row_.find(it->first);
    if (pr == pivot_row_.end()) {
      ++it;
      continue;
    }
    LinKey key = it->first;
    QSqrt2 factor = it->second;
    const Row& row = rows_[pr->second];
    axpy(v, -factor, row.values);
    axpy(used, factor, row.combo);
    // row entries have keys >= its pivot, so everything before `key` is final
    it = v.upper_bound(key);
  }
}

std::optional<SparseVector> EchelonBasis::insert(const SparseVector& v) {
  std::size_t index = inserted_++;
  SparseVector rest = v;
  SparseVector used;
  reduce(rest, used);
  // rest = v_index - sum used_i v_i
  SparseVector combo = std::move(used);
  for (auto& [k, c] : combo) c = -c;
  axpy(combo, QSqrt2(1), SparseVector{{index_key(index), QSqrt2(1)}});
  if (rest.empty()) return combo;
  QSqrt2 inv = rest.begin()->second.inverse();
  for (auto& [k, c] : rest) c *= inv;
  for (auto& [k, c] : combo) c *= inv;
  pivot_row_[rest.begin()->first] = rows_.size();
  rows_.push_back(Row{std::move(rest), std::move(combo)});
  return std::nullopt;
}

std::optional<SparseVector> EchelonBasis::express(const SparseVector& v) const {
  SparseVector rest = v;
  SparseVector used;
  reduce(rest, used);
  if (!rest.empty()) return std::nullopt;
  return used;
}

std::vector<SparseVector> kernel(const std::vector<SparseVector>& columns) {
  EchelonBasis basis;
  std::vector<SparseVector> out;
  for (const auto& c : columns) {
    if (auto rel = basis.insert(c)) out.push_back(std::move(*rel));
  }
  return out;
}

std::optional<SparseVector> solve(const std::vector<SparseVector>& columns,
                                  const SparseVector& target) {
  EchelonBasis basis;
  for (const auto& c : columns) basis.insert(c);
  return basis.express(target);
}

std::vector<QSqrt2> to_dense(const SparseVector& combo, std::size_t size) {
  std::vector<QSqrt2> out(size);
  for (const auto& [k, c] : combo) {
    if (k.first == 0 && k.second < size) out[k.second] = c;
  }
  return out;
}

}  // namespace vbraid
