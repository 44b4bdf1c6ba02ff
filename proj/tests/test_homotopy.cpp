#include "vbraid/equivalence.hpp"
#include "vbraid/explicit_maps.hpp"

#include <doctest.h>

#include <random>

using namespace vbraid;

namespace {

Poly X(int k) { return Poly::variable(k); }
const QSqrt2 r2 = QSqrt2::sqrt2();

Complex F(const char* w, int n) { return F_word(parse_word(w, Alphabet::vbB(n))); }

PolyMatrix column(std::vector<Poly> v) {
  PolyMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

bool same_complex(const Complex& a, const Complex& b) {
  if (a.support() != b.support()) return false;
  for (int k : a.support()) {
    if (a.object(k).right_action != b.object(k).right_action) return false;
    if (a.object(k).basis_degrees != b.object(k).basis_degrees) return false;
    if (!(a.differential(k) == b.differential(k))) return false;
  }
  return true;
}

// f = c g for a single nonzero scalar c
bool proportional(const DegreeMaps& f, const DegreeMaps& g) {
  std::optional<QSqrt2> c;
  if (f.size() != g.size()) return false;
  for (const auto& [k, m] : g) {
    const PolyMatrix& fm = f.at(k);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t s = 0; s < m.cols(); ++s) {
        const Poly& x = m.at(r, s);
        if (x.is_zero()) {
          if (!fm.at(r, s).is_zero()) return false;
          continue;
        }
        if (!c) c = fm.at(r, s).leading().second / x.leading().second;
        if (c->is_zero() || !(fm.at(r, s) == x * *c)) return false;
      }
  }
  return c.has_value();
}

DegreeMaps inverse_maps(const Complex& c, const Complex& d, const DegreeMaps& f) {
  DegreeMaps g;
  for (const auto& [k, m] : f) g[k] = *invert_morphism(c.object(k), d.object(k), m);
  return g;
}

}  // namespace

TEST_CASE("complexes of single letters") {
  Complex s = F("s0", 2);
  CHECK(s.support() == std::vector<int>{-1, 0});
  CHECK(s.differential(-1) == column({X(0), Poly(1)}));
  CHECK(s.object(-1).basis_degrees == std::vector<int>{2});
  Complex si = F("s0^-1", 2);
  CHECK(si.support() == std::vector<int>{0, 1});
  PolyMatrix row(1, 2);
  row.at(0, 0) = Poly(1);
  row.at(0, 1) = X(0);
  CHECK(si.differential(0) == row);
  CHECK(si.object(0).basis_degrees == std::vector<int>{-2, 0});
  for (int i = 0; i < 3; ++i) {
    Complex z = F_letter(BraidLetter::virt(i), 3);
    CHECK(z.support() == std::vector<int>{0});
    CHECK(z.differentials.empty());
  }
  CHECK(F("1", 2).support() == std::vector<int>{0});
  CHECK_THROWS(F_letter(BraidLetter::real(3), 3));
}

TEST_CASE("unit for the tensor product") {
  for (const char* w : {"s0 z1", "s1^-1 s0", "z0 s1 z0 z1"}) {
    Complex c = F(w, 2);
    CHECK(same_complex(tensor_complex(F_unit(2), c), c));
    CHECK(same_complex(tensor_complex(c, F_unit(2)), c));
  }
}

TEST_CASE("objects of the relmixB3 and relmixB5 complexes") {
  int n = 3;
  Bimodule b0 = bimodule_Bs(make_reflection({0}, n));
  Bimodule bu = bimodule_Bs(make_reflection({1, 0, 1}, n));
  Complex c = F("z1 z0 z1 s0", n);
  CHECK(c.object(0).right_action == tensor(bimodule_Rw({1, 0, 1}, n), b0).right_action);
  // d(a) = a (X0 (x) 1 + 1 (x) X0)
  CHECK(c.differential(-1) == column({X(0), Poly(1)}));

  Complex m = F("s0 z1 s0 z1", n);
  CHECK(m.support() == std::vector<int>{-2, -1, 0});
  CHECK(m.object(-2).basis_degrees == std::vector<int>{4});
  REQUIRE(m.object(-1).summands.size() == 2);
  CHECK(m.object(-1).summand(0).right_action == bu.right_action);
  CHECK(m.object(-1).summand(0).basis_degrees == std::vector<int>{2, 4});
  CHECK(m.object(-1).summand(1).right_action == b0.right_action);
  CHECK(m.object(0).right_action == tensor(b0, bu).right_action);
  // -a((X0 + sqrt2 X1) (x) 1 + 1 (x) (X0 + sqrt2 X1)) into the first summand
  Poly beta = X(0) + r2 * X(1);
  CHECK(m.differential(-2) == column({-beta, Poly(-1), X(0), Poly(1)}));
  CHECK(verify_complex(m).ok);
  CHECK(verify_complex(F("z1 s0 z1 s0", n)).ok);
}

TEST_CASE("d squared vanishes for words up to length 6 at n = 3") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> idx(0, 2), kind(0, 2), len(1, 6);
  Alphabet a = Alphabet::vbB(3);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord w{a, {}};
    for (int k = len(rng); k > 0; --k) {
      int c = kind(rng);
      w.letters.push_back(c == 0 ? BraidLetter::virt(idx(rng)) : BraidLetter::real(idx(rng), c == 1 ? 1 : -1));
    }
    CAPTURE(to_string(w));
    Complex c = F_word(w);
    Check v = verify_complex(c);
    CAPTURE(v.message);
    CHECK(v.ok);
  }
}

TEST_CASE("tensor product of complexes is associative up to isomorphism") {
  int n = 2;
  std::vector<Complex> parts = {F("s0", n), F("z1", n), F("s1^-1", n)};
  Complex l = tensor_complex(tensor_complex(parts[0], parts[1]), parts[2]);
  Complex r = tensor_complex(parts[0], tensor_complex(parts[1], parts[2]));
  auto iso = find_chain_iso(l, r);
  REQUIRE(iso);
  CHECK(verify_chain_iso(l, r, iso->forward, iso->inverse).ok);
}

TEST_CASE("mu as a chain map") {
  int n = 3;
  Complex c = F("z1 z0 z1 s0", n), d = F("s0 z1 z0 z1", n);
  DegreeMaps mu = mu_chain_map(n);
  CHECK(verify_chain_map(c, d, mu).ok);
  CHECK(verify_chain_iso(c, d, mu, inverse_maps(c, d, mu)).ok);
  DegreeMaps bad = mu;
  bad.at(0).at(1, 1) = -bad.at(0).at(1, 1);
  Check v = verify_chain_map(c, d, bad);
  CHECK_FALSE(v.ok);
  CHECK(v.message.find("degree") != std::string::npos);
  CHECK(v.message.find("residual") != std::string::npos);
}

TEST_CASE("chain isomorphism search") {
  Complex c = F("s0 z1 z0 z1", 2), d = F("z1 z0 z1 s0", 2);
  auto iso = find_chain_iso(c, d);
  REQUIRE(iso);
  CHECK(verify_chain_iso(c, d, iso->forward, iso->inverse).ok);
  // same direction as (id, mu)
  Complex c3 = F("z1 z0 z1 s0", 3), d3 = F("s0 z1 z0 z1", 3);
  auto iso3 = find_chain_iso(c3, d3);
  REQUIRE(iso3);
  CHECK(proportional(iso3->forward, mu_chain_map(3)));

  Complex p = F("s0 z1 s0 z1", 3), q = F("z1 s0 z1 s0", 3);
  auto five = find_chain_iso(p, q);
  REQUIRE(five);
  DegreeMaps explicit_map = relmixB5_chain_map(3);
  CHECK(verify_chain_iso(p, q, explicit_map, inverse_maps(p, q, explicit_map)).ok);
  CHECK(proportional(five->forward, explicit_map));
  CHECK(five->forward.at(-2) == PolyMatrix::identity(1) * QSqrt2(-1));
  CHECK(five->forward.at(0) == phi(3).iso.forward);

  for (int i = 0; i < 3; ++i) {
    BraidWord sz{Alphabet::vbB(3), {BraidLetter::real(i), BraidLetter::virt(i)}};
    BraidWord zs{Alphabet::vbB(3), {BraidLetter::virt(i), BraidLetter::real(i)}};
    CHECK(find_chain_iso(F_word(sz), F_word(zs)).has_value());
  }
}

TEST_CASE("homotopy equivalence search") {
  Complex c = F("s0 s0^-1", 2);
  CHECK(c.support().size() == 3);
  auto h = find_homotopy_equiv(c, F_unit(2));
  REQUIRE(h);
  CHECK(verify_homotopy(c, F_unit(2), *h).ok);
  CHECK_FALSE(find_chain_iso(c, F_unit(2)).has_value());
  CHECK_FALSE(find_homotopy_equiv(c, F_unit(2), 2).has_value());

  Complex b = F("s1 s2 s1", 3), b2 = F("s2 s1 s2", 3);
  auto hb = find_homotopy_equiv(b, b2);
  REQUIRE(hb);
  CHECK(verify_homotopy(b, b2, *hb).ok);
}

TEST_CASE("negative controls") {
  Complex s = F("s0", 2), z = F("z0", 2);
  CHECK_FALSE(find_chain_iso(s, z).has_value());
  CHECK_FALSE(find_homotopy_equiv(s, z).has_value());
  CHECK_FALSE(find_chain_iso(s, F("s0^-1", 2)).has_value());
}

TEST_CASE("corrupted homotopies are rejected with a witness") {
  Complex c = F("s0^-1 s0", 2);
  auto h = find_homotopy_equiv(c, F_unit(2));
  REQUIRE(h);
  HomotopyCertificate bad = *h;
  REQUIRE_FALSE(bad.h_source.empty());
  bool flipped = false;
  for (auto& [k, m] : bad.h_source) {
    for (std::size_t r = 0; r < m.rows() && !flipped; ++r)
      for (std::size_t s = 0; s < m.cols() && !flipped; ++s) {
        if (!m.at(r, s).is_zero()) {
          m.at(r, s) = -m.at(r, s);
          flipped = true;
        }
      }
  }
  REQUIRE(flipped);
  Check v = verify_homotopy(c, F_unit(2), bad);
  CHECK_FALSE(v.ok);
  CHECK(v.message.find("residual") != std::string::npos);
}
