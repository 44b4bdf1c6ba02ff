#include "vbraid/complex.hpp"

#include <mutex>
#include <set>
#include <stdexcept>

namespace vbraid {

namespace {

const Bimodule& zero_of(int n) {
  static std::map<int, Bimodule> zeros;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = zeros.find(n);
  if (it == zeros.end()) it = zeros.emplace(n, zero_bimodule(n)).first;
  return it->second;
}

BimodulePtr share(Bimodule m) { return std::make_shared<const Bimodule>(std::move(m)); }

std::string describe(const PolyMatrix& a, const std::string& what, int degree) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a.at(r, c).is_zero()) {
        return what + " in degree " + std::to_string(degree) + " at (" + std::to_string(r) + "," +
               std::to_string(c) + "): residual " + a.at(r, c).to_string();
      }
    }
  }
  return what + " in degree " + std::to_string(degree);
}

std::set<int> joint_support(const Complex& c, const Complex& d) {
  std::set<int> s;
  for (const auto& [k, _] : c.objects) s.insert(k);
  for (const auto& [k, _] : d.objects) s.insert(k);
  return s;
}

}  // namespace

const Bimodule& Complex::object(int k) const {
  auto it = objects.find(k);
  return it == objects.end() ? zero_of(n) : *it->second;
}

std::size_t Complex::rank(int k) const { return object(k).rank; }

PolyMatrix Complex::differential(int k) const {
  auto it = differentials.find(k);
  if (it != differentials.end()) return it->second;
  return PolyMatrix(rank(k + 1), rank(k));
}

std::vector<int> Complex::support() const {
  std::vector<int> s;
  for (const auto& [k, _] : objects) s.push_back(k);
  return s;
}

Complex F_unit(int n) {
  Complex c;
  c.n = n;
  c.label = "1";
  c.objects[0] = share(bimodule_R(n));
  return c;
}

Complex F_letter(const BraidLetter& letter, int n) {
  int i = letter.index;
  if (i < 0 || i >= n) throw std::out_of_range("F: letter index out of range");
  Complex c;
  c.n = n;
  c.label = to_string(letter, Alphabet::Kind::VbB);
  if (letter.is_virtual) {
    c.objects[0] = share(bimodule_Rw({i}, n));
    return c;
  }
  Bimodule b = bimodule_Bs(make_reflection({i}, n));
  Poly xi = Poly::variable(i);
  if (letter.exponent == 1) {
    c.objects[-1] = share(shift(bimodule_R(n), 2));
    c.objects[0] = share(b);
    PolyMatrix d(2, 1);  // a -> a X_i (x) 1 + a (x) X_i
    d.at(0, 0) = xi;
    d.at(1, 0) = Poly(1);
    c.differentials[-1] = d;
  } else {
    c.objects[0] = share(shift(b, -2));
    c.objects[1] = share(shift(bimodule_R(n), -2));
    PolyMatrix d(1, 2);  // multiplication
    d.at(0, 0) = Poly(1);
    d.at(0, 1) = xi;
    c.differentials[0] = d;
  }
  return c;
}

Complex tensor_complex(const Complex& c, const Complex& d) {
  if (c.n != d.n) throw std::invalid_argument("tensor_complex: rings differ");
  Complex out;
  out.n = c.n;
  out.label = c.label == "1" ? d.label : (d.label == "1" ? c.label : c.label + " " + d.label);

  struct Part {
    int p;
    int q;
    std::size_t offset;
  };
  std::map<int, std::vector<Part>> parts;
  std::map<int, std::vector<Bimodule>> blocks;
  for (const auto& [p, cp] : c.objects) {
    for (const auto& [q, dq] : d.objects) {
      Bimodule t = tensor(*cp, *dq);
      if (t.rank == 0) continue;
      auto& ps = parts[p + q];
      std::size_t off = 0;
      for (const auto& b : blocks[p + q]) off += b.rank;
      ps.push_back(Part{p, q, off});
      blocks[p + q].push_back(std::move(t));
    }
  }
  for (auto& [k, bs] : blocks) out.objects[k] = share(direct_sum(bs));

  for (const auto& [k, src_parts] : parts) {
    auto tgt_it = parts.find(k + 1);
    if (tgt_it == parts.end()) continue;
    PolyMatrix dk(out.rank(k + 1), out.rank(k));
    bool nonzero = false;
    for (const auto& sp : src_parts) {
      const Bimodule& cp = c.object(sp.p);
      const Bimodule& dq = d.object(sp.q);
      for (const auto& tp : tgt_it->second) {
        PolyMatrix blk;
        if (tp.p == sp.p + 1 && tp.q == sp.q) {
          PolyMatrix dc = c.differential(sp.p);
          if (dc.is_zero()) continue;
          blk = tensor_maps(cp, c.object(tp.p), dc, dq, dq, PolyMatrix::identity(dq.rank));
        } else if (tp.p == sp.p && tp.q == sp.q + 1) {
          PolyMatrix dd = d.differential(sp.q);
          if (dd.is_zero()) continue;
          blk = tensor_maps(cp, cp, PolyMatrix::identity(cp.rank), dq, d.object(tp.q), dd);
          if (sp.p % 2 != 0) blk *= QSqrt2(-1);
        } else {
          continue;
        }
        dk.set_block(tp.offset, sp.offset, blk);
        nonzero = true;
      }
    }
    if (nonzero) out.differentials[k] = std::move(dk);
  }
  return out;
}

Complex F_word(const BraidWord& w) {
  if (w.alphabet.kind != Alphabet::Kind::VbB) throw std::invalid_argument("F expects a VB_B word");
  int n = w.alphabet.n;
  if (w.letters.empty()) return F_unit(n);
  Complex acc = F_letter(w.letters.front(), n);
  for (std::size_t i = 1; i < w.letters.size(); ++i) {
    acc = tensor_complex(acc, F_letter(w.letters[i], n));
  }
  acc.label = to_string(w);
  return acc;
}

PolyMatrix zero_map(const Complex& source, int source_degree, const Complex& target,
                    int target_degree) {
  return PolyMatrix(target.rank(target_degree), source.rank(source_degree));
}

PolyMatrix component(const DegreeMaps& f, int k, const Complex& source, int source_degree,
                     const Complex& target, int target_degree) {
  auto it = f.find(k);
  if (it != f.end()) return it->second;
  return zero_map(source, source_degree, target, target_degree);
}

DegreeMaps identity_maps(const Complex& c) {
  DegreeMaps id;
  for (const auto& [k, m] : c.objects) id[k] = PolyMatrix::identity(m->rank);
  return id;
}

DegreeMaps compose(const Complex& a, const Complex& b, const Complex& c, const DegreeMaps& g,
                   const DegreeMaps& f) {
  DegreeMaps out;
  for (const auto& [k, _] : a.objects) {
    if (c.rank(k) == 0) continue;
    out[k] = component(g, k, b, k, c, k) * component(f, k, a, k, b, k);
  }
  return out;
}

DegreeMaps chain_defect(const Complex& c, const Complex& d, const DegreeMaps& f) {
  DegreeMaps out;
  for (int k : joint_support(c, d)) {
    if (c.rank(k) == 0 || d.rank(k + 1) == 0) continue;
    PolyMatrix lhs = component(f, k + 1, c, k + 1, d, k + 1) * c.differential(k);
    PolyMatrix rhs = d.differential(k) * component(f, k, c, k, d, k);
    out[k] = lhs - rhs;
  }
  return out;
}

DegreeMaps boundary(const Complex& c, const Complex& d, const DegreeMaps& h) {
  DegreeMaps out;
  for (const auto& [k, _] : c.objects) {
    if (d.rank(k) == 0) continue;
    PolyMatrix acc(d.rank(k), c.rank(k));
    if (d.rank(k - 1) != 0) acc += d.differential(k - 1) * component(h, k, c, k, d, k - 1);
    if (c.rank(k + 1) != 0) acc += component(h, k + 1, c, k + 1, d, k) * c.differential(k);
    out[k] = std::move(acc);
  }
  return out;
}

namespace {

Check check_family(const Complex& c, const Complex& d, const DegreeMaps& f, int offset,
                   const std::string& what) {
  for (const auto& [k, m] : f) {
    const Bimodule& s = c.object(k);
    const Bimodule& t = d.object(k + offset);
    Check chk = check_morphism(s, t, m, 0);
    if (!chk) return Check::fail(what + " component in degree " + std::to_string(k) + ": " + chk.message);
  }
  return Check::pass();
}

Check all_zero(const DegreeMaps& m, const std::string& what) {
  for (const auto& [k, a] : m) {
    if (!a.is_zero()) return Check::fail(describe(a, what, k));
  }
  return Check::pass();
}

}  // namespace

Check verify_complex(const Complex& c) {
  for (const auto& [k, m] : c.objects) {
    Check chk = check_bimodule(*m);
    if (!chk) return Check::fail("object in degree " + std::to_string(k) + ": " + chk.message);
  }
  for (const auto& [k, d] : c.differentials) {
    Check chk = check_morphism(c.object(k), c.object(k + 1), d, 0);
    if (!chk) return Check::fail("differential in degree " + std::to_string(k) + ": " + chk.message);
  }
  for (const auto& [k, d] : c.differentials) {
    auto next = c.differentials.find(k + 1);
    if (next == c.differentials.end()) continue;
    PolyMatrix dd = next->second * d;
    if (!dd.is_zero()) return Check::fail(describe(dd, "d o d", k));
  }
  return Check::pass();
}

Check verify_chain_map(const Complex& c, const Complex& d, const DegreeMaps& f) {
  Check chk = check_family(c, d, f, 0, "chain map");
  if (!chk) return chk;
  return all_zero(chain_defect(c, d, f), "chain map square");
}

Check verify_chain_iso(const Complex& c, const Complex& d, const DegreeMaps& f,
                       const DegreeMaps& g) {
  Check chk = verify_chain_map(c, d, f);
  if (!chk) return chk;
  chk = verify_chain_map(d, c, g);
  if (!chk) return Check::fail("inverse: " + chk.message);
  DegreeMaps gf = compose(c, d, c, g, f);
  DegreeMaps fg = compose(d, c, d, f, g);
  for (const auto& [k, m] : gf) {
    if (!(m == PolyMatrix::identity(c.rank(k)))) {
      return Check::fail(describe(m - PolyMatrix::identity(c.rank(k)), "g o f - id", k));
    }
  }
  for (const auto& [k, m] : fg) {
    if (!(m == PolyMatrix::identity(d.rank(k)))) {
      return Check::fail(describe(m - PolyMatrix::identity(d.rank(k)), "f o g - id", k));
    }
  }
  return Check::pass();
}

Check verify_homotopy(const Complex& c, const Complex& d, const HomotopyCertificate& cert) {
  Check chk = verify_chain_map(c, d, cert.f);
  if (!chk) return Check::fail("f: " + chk.message);
  chk = verify_chain_map(d, c, cert.g);
  if (!chk) return Check::fail("g: " + chk.message);
  chk = check_family(c, c, cert.h_source, -1, "h_source");
  if (!chk) return chk;
  chk = check_family(d, d, cert.h_target, -1, "h_target");
  if (!chk) return chk;

  auto residual = [](const Complex& x, const Complex& y, const DegreeMaps& forward,
                     const DegreeMaps& back, const DegreeMaps& h) {
    DegreeMaps r = identity_maps(x);
    add_scaled(r, compose(x, y, x, back, forward), QSqrt2(-1));
    add_scaled(r, boundary(x, x, h), QSqrt2(-1));
    return r;
  };
  chk = all_zero(residual(c, d, cert.f, cert.g, cert.h_source), "id - g f - (d h + h d) on source");
  if (!chk) return chk;
  return all_zero(residual(d, c, cert.g, cert.f, cert.h_target), "id - f g - (d h + h d) on target");
}

}  // namespace vbraid
