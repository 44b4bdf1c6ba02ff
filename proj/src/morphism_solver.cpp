#include "vbraid/bimodule.hpp"
#include "vbraid/linalg.hpp"
#include "vbraid/maps.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace vbraid {

namespace {

// Right-action data and degrees identify a summand up to relabeling.
std::string fingerprint(const Bimodule& s, const Bimodule& t, int shift) {
  std::ostringstream os;
  os << s.n << '|' << shift << '|';
  for (const Bimodule* m : {&s, &t}) {
    os << m->rank << ':';
    for (int d : m->basis_degrees) os << d << ',';
    for (const auto& a : m->right_action) {
      for (std::size_t k = 0; k < a.rows(); ++k) {
        for (std::size_t l = 0; l < a.cols(); ++l) os << a.at(k, l).to_string() << ';';
      }
    }
    os << '#';
  }
  return os.str();
}

struct Unknown {
  std::size_t row;
  std::size_t col;
  Monomial mono;
};

std::vector<PolyMatrix> solve_block(const Bimodule& s, const Bimodule& t, int shift) {
  std::vector<Unknown> unknowns;
  for (std::size_t k = 0; k < t.rank; ++k) {
    for (std::size_t l = 0; l < s.rank; ++l) {
      for (const auto& m : homogeneous_basis(s.n, forced_degree(s, t, k, l, shift))) {
        unknowns.push_back(Unknown{k, l, m});
      }
    }
  }
  if (unknowns.empty()) return {};

  // Column of unknown m * E_{kl}: entries of Phi A_s(j) - A_t(j) Phi.
  std::vector<SparseVector> columns;
  columns.reserve(unknowns.size());
  for (const auto& u : unknowns) {
    SparseVector col;
    for (int j = 0; j < s.n; ++j) {
      const PolyMatrix& as = s.right_action[static_cast<std::size_t>(j)];
      const PolyMatrix& at = t.right_action[static_cast<std::size_t>(j)];
      std::uint64_t jj = static_cast<std::uint64_t>(j) << 48;
      for (std::size_t c = 0; c < s.rank; ++c) {
        const Poly& p = as.at(u.col, c);
        for (const auto& [m, v] : p.terms()) {
          add_entry(col, flat_key(jj, u.row, c, m * u.mono), v);
        }
      }
      for (std::size_t r = 0; r < t.rank; ++r) {
        const Poly& p = at.at(r, u.row);
        for (const auto& [m, v] : p.terms()) {
          add_entry(col, flat_key(jj, r, u.col, m * u.mono), -v);
        }
      }
    }
    columns.push_back(std::move(col));
  }

  std::vector<PolyMatrix> basis;
  for (const auto& rel : kernel(columns)) {
    PolyMatrix phi(t.rank, s.rank);
    for (const auto& [key, c] : rel) {
      const Unknown& u = unknowns[key.second];
      phi.at(u.row, u.col) += Poly(u.mono, c);
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

std::mutex cache_mutex;
std::map<std::string, std::vector<PolyMatrix>>& block_cache() {
  static std::map<std::string, std::vector<PolyMatrix>> cache;
  return cache;
}

std::vector<PolyMatrix> solve_block_cached(const Bimodule& s, const Bimodule& t, int shift) {
  std::string key = fingerprint(s, t, shift);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = block_cache().find(key);
    if (it != block_cache().end()) return it->second;
  }
  std::vector<PolyMatrix> basis = solve_block(s, t, shift);
  std::lock_guard<std::mutex> lock(cache_mutex);
  block_cache().emplace(std::move(key), basis);
  return basis;
}

}  // namespace

std::vector<PolyMatrix> solve_morphisms(const Bimodule& source, const Bimodule& target,
                                        int shift) {
  std::vector<PolyMatrix> out;
  if (source.rank == 0 || target.rank == 0) return out;
  std::vector<Bimodule> src_parts;
  for (std::size_t i = 0; i < source.summands.size(); ++i) src_parts.push_back(source.summand(i));
  for (std::size_t k = 0; k < target.summands.size(); ++k) {
    Bimodule tk = target.summand(k);
    for (std::size_t i = 0; i < source.summands.size(); ++i) {
      for (auto& blk : solve_block_cached(src_parts[i], tk, shift)) {
        PolyMatrix full(target.rank, source.rank);
        full.set_block(target.summands[k].offset, source.summands[i].offset, blk);
        out.push_back(std::move(full));
      }
    }
  }
  return out;
}

std::optional<PolyMatrix> invert_morphism(const Bimodule& source, const Bimodule& target,
                                          const PolyMatrix& f) {
  if (source.rank != target.rank) return std::nullopt;
  if (source.rank == 0) return PolyMatrix(0, 0);
  std::vector<PolyMatrix> hom = solve_morphisms(target, source, 0);
  std::vector<SparseVector> columns;
  columns.reserve(hom.size());
  for (const auto& g : hom) columns.push_back(flatten(f * g));
  auto combo = solve(columns, flatten(PolyMatrix::identity(target.rank)));
  if (!combo) return std::nullopt;
  PolyMatrix g = combine(hom, *combo);
  if (!(g * f == PolyMatrix::identity(source.rank))) return std::nullopt;
  return g;
}

}  // namespace vbraid
