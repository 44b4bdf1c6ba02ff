#include "vbraid/equivalence.hpp"

#include <set>

namespace vbraid {

namespace {

// Deterministic candidate list: basis elements, then a few dense combinations.
std::vector<DegreeMaps> candidates(const std::vector<DegreeMaps>& basis) {
  std::vector<DegreeMaps> out = basis;
  if (basis.size() < 2) return out;
  for (int scheme = 0; scheme < 3; ++scheme) {
    SparseVector combo;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      long w = scheme == 0 ? 1 : (scheme == 1 ? static_cast<long>(i + 1)
                                              : static_cast<long>((i + 1) * (i + 1)));
      combo[index_key(i)] = QSqrt2(w);
    }
    out.push_back(combine(basis, combo));
  }
  return out;
}

std::vector<DegreeMaps> boundaries(const Complex& c, const Complex& d,
                                  const std::vector<DegreeMaps>& hs) {
  std::vector<DegreeMaps> out;
  out.reserve(hs.size());
  for (const auto& h : hs) out.push_back(boundary(c, d, h));
  return out;
}

// Chain maps C -> D that are independent modulo null-homotopic ones.
std::vector<DegreeMaps> homology_representatives(const Complex& c, const Complex& d) {
  std::vector<DegreeMaps> z = chain_map_basis(c, d);
  EchelonBasis span;
  for (const auto& b : boundaries(c, d, hom_family_basis(c, d, -1))) span.insert(flatten(b));
  std::vector<DegreeMaps> reps;
  for (const auto& f : z) {
    if (!span.insert(flatten(f))) reps.push_back(f);
  }
  return reps;
}

}  // namespace

std::vector<DegreeMaps> hom_family_basis(const Complex& c, const Complex& d, int offset) {
  std::vector<DegreeMaps> out;
  for (const auto& [k, obj] : c.objects) {
    if (d.rank(k + offset) == 0) continue;
    for (auto& b : solve_morphisms(*obj, d.object(k + offset), 0)) {
      DegreeMaps m;
      m.emplace(k, std::move(b));
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<DegreeMaps> chain_map_basis(const Complex& c, const Complex& d) {
  std::vector<DegreeMaps> homs = hom_family_basis(c, d, 0);
  std::vector<SparseVector> columns;
  columns.reserve(homs.size());
  for (const auto& h : homs) columns.push_back(flatten(chain_defect(c, d, h)));
  std::vector<DegreeMaps> out;
  for (const auto& rel : kernel(columns)) out.push_back(combine(homs, rel));
  return out;
}

std::optional<ChainIso> find_chain_iso(const Complex& c, const Complex& d) {
  std::set<int> degrees;
  for (const auto& [k, _] : c.objects) degrees.insert(k);
  for (const auto& [k, _] : d.objects) degrees.insert(k);
  for (int k : degrees) {
    if (c.rank(k) != d.rank(k)) return std::nullopt;
  }
  std::vector<DegreeMaps> z = chain_map_basis(c, d);
  for (const auto& f : candidates(z)) {
    DegreeMaps g;
    bool ok = true;
    for (int k : degrees) {
      auto it = f.find(k);
      if (it == f.end()) {
        ok = false;
        break;
      }
      auto inv = invert_morphism(c.object(k), d.object(k), it->second);
      if (!inv) {
        ok = false;
        break;
      }
      g.emplace(k, std::move(*inv));
    }
    if (ok && verify_chain_iso(c, d, f, g)) return ChainIso{f, g};
  }
  return std::nullopt;
}

std::optional<HomotopyCertificate> find_homotopy_equiv(const Complex& c, const Complex& d,
                                                       int degree_bound) {
  if (static_cast<int>(c.objects.size()) > degree_bound ||
      static_cast<int>(d.objects.size()) > degree_bound) {
    return std::nullopt;
  }
  std::vector<DegreeMaps> f_reps = homology_representatives(c, d);
  if (f_reps.empty()) return std::nullopt;
  std::vector<DegreeMaps> z_dc = chain_map_basis(d, c);
  if (z_dc.empty()) return std::nullopt;
  std::vector<DegreeMaps> h_cc = hom_family_basis(c, c, -1);
  std::vector<DegreeMaps> h_dd = hom_family_basis(d, d, -1);
  std::vector<DegreeMaps> dh_cc = boundaries(c, c, h_cc);
  std::vector<DegreeMaps> dh_dd = boundaries(d, d, h_dd);
  std::vector<SparseVector> dh_dd_cols;
  for (const auto& b : dh_dd) dh_dd_cols.push_back(flatten(b));

  for (const auto& f : candidates(f_reps)) {
    // g f + d h + h d = id_C, linear in (g, h)
    std::vector<SparseVector> columns;
    for (const auto& g : z_dc) columns.push_back(flatten(compose(c, d, c, g, f)));
    for (const auto& b : dh_cc) columns.push_back(flatten(b));
    auto sol = solve(columns, flatten(identity_maps(c)));
    if (!sol) continue;
    SparseVector gy, hx;
    for (const auto& [k, v] : *sol) {
      if (k.second < z_dc.size()) {
        gy[k] = v;
      } else {
        hx[index_key(k.second - z_dc.size())] = v;
      }
    }
    HomotopyCertificate cert;
    cert.f = f;
    cert.g = combine(z_dc, gy);
    cert.h_source = combine(h_cc, hx);

    DegreeMaps rest = identity_maps(d);
    add_scaled(rest, compose(d, c, d, cert.f, cert.g), QSqrt2(-1));
    auto hy = solve(dh_dd_cols, flatten(rest));
    if (!hy) continue;
    cert.h_target = combine(h_dd, *hy);
    if (verify_homotopy(c, d, cert)) return cert;
  }
  return std::nullopt;
}

}  // namespace vbraid
