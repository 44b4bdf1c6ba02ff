#include "vbraid/explicit_maps.hpp"

#include <functional>
#include <stdexcept>

namespace vbraid {

namespace {

Poly X(int k) { return Poly::variable(k); }

PolyMatrix column_matrix(const std::vector<std::vector<Poly>>& cols, std::size_t rows) {
  PolyMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

NamedCheck equal_check(const std::string& name, const std::vector<Poly>& got,
                       const std::vector<Poly>& want) {
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (!(got[i] == want[i])) {
      return NamedCheck{name, Check::fail("coordinate " + std::to_string(i) + ": got " +
                                              got[i].to_string() + ", expected " +
                                              want[i].to_string())};
    }
  }
  return NamedCheck{name, Check::pass()};
}

// (verif1)/(verif2)-style checks: the map sends 1(x)p(x)1 to p(x)1(x)1 for
// p invariant under the first reflection and to 1(x)1(x)p for p invariant
// under the second.
void generator_checks(std::vector<NamedCheck>& out, const std::string& tag,
                      const Bimodule& first, const Bimodule& second, const Bimodule& target,
                      const PolyMatrix& m, const CoxeterWord& w1, const CoxeterWord& w2, int n) {
  for (const auto& p : invariant_generator_table(w1, n)) {
    auto got = m.apply(middle_element(first, second, p));
    out.push_back(equal_check(tag + " left " + p.to_string(), got, left_element(target, p)));
  }
  for (const auto& p : invariant_generator_table(w2, n)) {
    auto got = m.apply(middle_element(first, second, p));
    out.push_back(equal_check(tag + " right " + p.to_string(), got, right_element(target, p)));
  }
}

void inverse_check(std::vector<NamedCheck>& out, BimoduleIso& iso) {
  auto inv = invert_morphism(iso.source, iso.target, iso.forward);
  if (!inv) {
    out.push_back(NamedCheck{"invertible", Check::fail("no two-sided inverse in degree 0")});
    return;
  }
  iso.inverse = *inv;
  out.push_back(NamedCheck{"inverse is a bimodule map", check_morphism(iso.target, iso.source, iso.inverse)});
  bool ok = iso.inverse * iso.forward == PolyMatrix::identity(iso.source.rank) &&
            iso.forward * iso.inverse == PolyMatrix::identity(iso.target.rank);
  out.push_back(NamedCheck{"two-sided inverse", ok ? Check::pass() : Check::fail("compositions are not the identity")});
}

}  // namespace

CoxeterWord short_reflection_word(const CoxeterWord& w, int n) {
  LinearEndo target = word_endo(w, n);
  for (std::size_t half = 0; half <= 3 && 2 * half + 1 < w.size(); ++half) {
    CoxeterWord u(half, 0);
    // enumerate u in {0..n-1}^half lexicographically
    std::function<std::optional<CoxeterWord>(std::size_t)> rec =
        [&](std::size_t pos) -> std::optional<CoxeterWord> {
      if (pos == half) {
        for (int i = 0; i < n; ++i) {
          CoxeterWord cand = concat(concat(u, {i}), inverse_word(u));
          if (word_endo(cand, n) == target) return cand;
        }
        return std::nullopt;
      }
      for (int a = 0; a < n; ++a) {
        u[pos] = a;
        if (auto r = rec(pos + 1)) return r;
      }
      return std::nullopt;
    };
    if (auto r = rec(0)) return *r;
  }
  return w;
}

BimoduleIso iso_swap_Rw(const CoxeterWord& w, const CoxeterWord& t, int n) {
  Reflection rt = make_reflection(t, n);
  CoxeterWord conj = short_reflection_word(concat(concat(w, t), inverse_word(w)), n);
  Reflection rc = make_reflection(conj, n);
  Bimodule rw = bimodule_Rw(w, n);
  Bimodule bc = bimodule_Bs(rc);
  BimoduleIso iso;
  iso.source = tensor(rw, bimodule_Bs(rt));
  iso.target = tensor(bc, rw);
  std::vector<Poly> e0(2);
  e0[0] = Poly(1);
  // 1 (x) 1 (x) beta -> (1 (x) w(beta)) (x) 1, coordinates taken inside B_c
  iso.forward = column_matrix({e0, unit_times(bc, act(w, rt.root, n))}, 2);
  Check c = check_morphism(iso.source, iso.target, iso.forward);
  if (!c) throw std::logic_error("iso_swap_Rw: " + c.message);
  auto inv = invert_morphism(iso.source, iso.target, iso.forward);
  if (!inv) throw std::logic_error("iso_swap_Rw: map is not invertible");
  iso.inverse = *inv;
  return iso;
}

std::vector<Poly> middle_element(const Bimodule& l, const Bimodule& n, const Poly& p) {
  std::vector<Poly> v = unit_times(l, p);
  std::vector<Poly> out(l.rank * n.rank);
  for (std::size_t a = 0; a < l.rank; ++a) out[a * n.rank] = v[a];
  return out;
}

std::vector<Poly> left_element(const Bimodule& m, const Poly& p) {
  std::vector<Poly> out(m.rank);
  out[0] = p;
  return out;
}

std::vector<Poly> right_element(const Bimodule& m, const Poly& p) { return unit_times(m, p); }

bool SpecialIso::all_pass() const {
  for (const auto& c : checks) {
    if (!c.result) return false;
  }
  return true;
}

SpecialIso phi(int n) {
  if (n < 3) throw std::invalid_argument("phi needs n >= 3 (its formula involves X2)");
  const CoxeterWord u{1, 0, 1};
  Reflection t0 = make_reflection({0}, n);
  Reflection tu = make_reflection(u, n);
  Bimodule b0 = bimodule_Bs(t0);
  Bimodule bu = bimodule_Bs(tu);
  SpecialIso out;
  BimoduleIso& iso = out.iso;
  iso.source = tensor(b0, bu);
  iso.target = tensor(bu, b0);
  const Bimodule& T = iso.target;

  // images of 1(x)x_a(x)1 for the basis {1, X0} of the first factor
  std::vector<std::vector<Poly>> mid = {left_element(T, Poly(1)), right_element(T, X(0))};
  std::vector<Poly> ys = {Poly(1), tu.root};
  std::vector<std::vector<Poly>> cols;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) cols.push_back(right_multiplication(T, ys[b]).apply(mid[a]));
  }
  iso.forward = column_matrix(cols, T.rank);

  auto& ch = out.checks;
  ch.push_back(NamedCheck{"bimodule map", check_morphism(iso.source, T, iso.forward)});
  auto image = [&](const Poly& p) { return iso.forward.apply(middle_element(b0, bu, p)); };
  ch.push_back(equal_check("1 (x) 1 (x) 1", image(Poly(1)), left_element(T, Poly(1))));
  ch.push_back(equal_check("1 (x) X0 (x) 1", image(X(0)), right_element(T, X(0))));
  std::vector<Poly> x1 = left_element(T, -X(2));
  std::vector<Poly> x1r = right_element(T, X(1) + X(2));
  for (std::size_t i = 0; i < x1.size(); ++i) x1[i] += x1r[i];
  ch.push_back(equal_check("1 (x) X1 (x) 1", image(X(1)), x1));
  for (int i = 2; i < n; ++i) {
    ch.push_back(equal_check("1 (x) X" + std::to_string(i) + " (x) 1", image(X(i)), left_element(T, X(i))));
  }
  generator_checks(ch, "verif", b0, bu, T, iso.forward, {0}, u, n);

  bool in_span = false;
  auto hom = solve_morphisms(iso.source, T, 0);
  {
    std::vector<SparseVector> columns;
    for (const auto& h : hom) columns.push_back(flatten(h));
    in_span = solve(columns, flatten(iso.forward)).has_value();
  }
  ch.push_back(NamedCheck{"lies in the solved Hom space",
                          in_span ? Check::pass() : Check::fail("not a combination of solver basis")});
  inverse_check(ch, iso);
  return out;
}

SpecialIso psi(int n) {
  if (n < 3) throw std::invalid_argument("psi needs n >= 3");
  const CoxeterWord v{0, 1, 0};
  Bimodule b1 = bimodule_Bs(make_reflection({1}, n));
  Bimodule bv = bimodule_Bs(make_reflection(v, n));
  SpecialIso out;
  BimoduleIso& iso = out.iso;
  iso.source = tensor(b1, bv);
  iso.target = tensor(bv, b1);
  const Bimodule& T = iso.target;

  auto hom = solve_morphisms(iso.source, T, 0);
  std::vector<SparseVector> firsts;
  for (const auto& h : hom) firsts.push_back(flatten(h.block(0, 0, T.rank, 1)));
  PolyMatrix e0(T.rank, 1);
  e0.at(0, 0) = Poly(1);
  auto combo = solve(firsts, flatten(e0));
  if (!combo) throw std::runtime_error("psi: no degree-0 bimodule map fixes 1 (x) 1 (x) 1");
  iso.forward = combine(hom, *combo);

  auto& ch = out.checks;
  ch.push_back(NamedCheck{"bimodule map", check_morphism(iso.source, T, iso.forward)});
  ch.push_back(NamedCheck{"degree-0 Hom space is one-dimensional",
                          hom.size() == 1 ? Check::pass()
                                          : Check::fail("dimension " + std::to_string(hom.size()))});
  generator_checks(ch, "verif", b1, bv, T, iso.forward, {1}, v, n);
  inverse_check(ch, iso);
  return out;
}

DegreeMaps mu_chain_map(int n) {
  BimoduleIso mu = iso_swap_Rw({1, 0, 1}, {0}, n);
  DegreeMaps f;
  f[-1] = PolyMatrix::identity(1);
  f[0] = mu.forward;
  return f;
}

DegreeMaps relmixB5_chain_map(int n) {
  SpecialIso ph = phi(n);
  if (!ph.all_pass()) throw std::logic_error("phi failed its checks");
  BimoduleIso sw = iso_swap_Rw({1}, {0}, n);  // R_{s1} B_{s0} -> B_u R_{s1}
  Bimodule b0 = bimodule_Bs(make_reflection({0}, n));
  Bimodule r1 = bimodule_Rw({1}, n);
  PolyMatrix i2 = PolyMatrix::identity(2);
  PolyMatrix i1 = PolyMatrix::identity(1);

  // source degree 0: B0 R1 B0 R1 -> B0 (B_u R1) R1 = B0 B_u
  PolyMatrix swap_r1 = tensor_maps(sw.source, sw.target, sw.forward, r1, r1, i1);
  PolyMatrix x = tensor_maps(b0, b0, i2, tensor(sw.source, r1), tensor(sw.target, r1), swap_r1);
  // target degree 0: R1 B0 R1 B0 -> (B_u R1) R1 B0 = B_u B0
  Bimodule r1b0 = tensor(r1, b0);
  PolyMatrix y_inv = tensor_maps(sw.target, sw.source, sw.inverse, r1b0, r1b0, PolyMatrix::identity(2));

  DegreeMaps f;
  f[-2] = PolyMatrix::identity(1);
  f[-2] *= QSqrt2(-1);
  PolyMatrix mid(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    mid.at(2 + i, i) = Poly(1);
    mid.at(i, 2 + i) = Poly(1);
  }
  f[-1] = mid;
  f[0] = y_inv * ph.iso.forward * x;
  return f;
}

}  // namespace vbraid
