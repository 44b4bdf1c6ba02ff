#include "vbraid/maps.hpp"

#include <stdexcept>

namespace vbraid {

std::uint64_t pack_monomial(const Monomial& m) {
  std::uint64_t v = 0;
  for (int k = 0; k < kMaxVariables; ++k) v = (v << 8) | m.exponent(k);
  return v;
}

SparseVector flatten(const PolyMatrix& a, std::uint64_t prefix) {
  SparseVector out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      for (const auto& [m, v] : a.at(r, c).terms()) out.emplace(flat_key(prefix, r, c, m), v);
    }
  }
  return out;
}

SparseVector flatten(const DegreeMaps& maps) {
  SparseVector out;
  for (const auto& [d, a] : maps) {
    SparseVector part = flatten(a, degree_prefix(d));
    out.insert(part.begin(), part.end());
  }
  return out;
}

PolyMatrix combine(const std::vector<PolyMatrix>& items, const SparseVector& combo) {
  if (items.empty()) throw std::invalid_argument("combine: no items");
  PolyMatrix out(items.front().rows(), items.front().cols());
  for (const auto& [k, c] : combo) {
    PolyMatrix t = items.at(k.second);
    t *= c;
    out += t;
  }
  return out;
}

void add_scaled(DegreeMaps& x, const DegreeMaps& y, const QSqrt2& c) {
  for (const auto& [d, a] : y) {
    PolyMatrix t = a;
    t *= c;
    auto it = x.find(d);
    if (it == x.end()) {
      x.emplace(d, std::move(t));
    } else {
      it->second += t;
    }
  }
}

DegreeMaps combine(const std::vector<DegreeMaps>& items, const SparseVector& combo) {
  DegreeMaps out;
  if (!items.empty()) {
    for (const auto& [d, a] : items.front()) out.emplace(d, PolyMatrix(a.rows(), a.cols()));
  }
  for (const auto& [k, c] : combo) add_scaled(out, items.at(k.second), c);
  return out;
}

}  // namespace vbraid
