#include "vbraid/certificate.hpp"
#include "vbraid/explicit_maps.hpp"

#include <doctest.h>

using namespace vbraid;

namespace {

Poly X(int k) { return Poly::variable(k); }
const QSqrt2 r2 = QSqrt2::sqrt2();
const QSqrt2 half_r2(mpq_class(0), mpq_class(1, 2));

PolyMatrix mat(std::vector<std::vector<Poly>> rows) {
  PolyMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

Bimodule B(const CoxeterWord& w, int n) { return bimodule_Bs(make_reflection(w, n)); }

// Right action on B_t (x) B_u computed from scratch: for the basis element
// 1 (x) b^a (x) c^e, split c^e X_j over R^u, then split b^a times each part
// over R^t, and read off the left coefficients.
std::vector<PolyMatrix> two_factor_action(const Reflection& t, const Reflection& u, int n) {
  std::vector<PolyMatrix> out;
  for (int j = 0; j < n; ++j) {
    PolyMatrix a(4, 4);
    for (int l = 0; l < 4; ++l) {
      int ea = l / 2, ee = l % 2;
      Poly right = ee == 0 ? X(j) : u.root * X(j);
      DemazureParts split = demazure_decompose(u, right);
      Poly mid = ea == 0 ? Poly(1) : t.root;
      DemazureParts p0 = demazure_decompose(t, mid * split.invariant);
      DemazureParts p1 = demazure_decompose(t, mid * split.coefficient);
      a.at(0, l) = p0.invariant;
      a.at(2, l) = p0.coefficient;
      a.at(1, l) = p1.invariant;
      a.at(3, l) = p1.coefficient;
    }
    out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("rank-one bimodules") {
  CHECK(bimodule_R(3).right_action[1] == mat({{X(1)}}));
  CHECK(bimodule_Rw({1, 0, 1}, 3).right_action[0] == mat({{X(0)}}));
  Bimodule r1 = bimodule_Rw({1}, 3);
  for (int j = 0; j < 3; ++j) CHECK(r1.right_action[j] == mat({{act({1}, X(j), 3)}}));
}

TEST_CASE("reflection bimodules") {
  Bimodule b0 = B({0}, 3);
  CHECK(b0.rank == 2);
  CHECK(b0.basis_degrees == std::vector<int>{0, 2});
  CHECK(b0.right_action[0] == mat({{Poly(), pow(X(0), 2)}, {Poly(1), Poly()}}));
  // by hand: X1 = (X1 + sqrt2/2 X0) - sqrt2/2 X0, and
  // X1 X0 = -sqrt2/2 X0^2 + (X1 + sqrt2/2 X0) X0 with both coefficients s0-invariant
  Poly p = X(1) + half_r2 * X(0);
  CHECK(b0.right_action[1] == mat({{p, -half_r2 * pow(X(0), 2)}, {Poly(-half_r2), p}}));
}

TEST_CASE("tensor products") {
  Bimodule bu = B({1, 0, 1}, 3);
  Bimodule t = tensor(bimodule_R(3), bu);
  CHECK(t.right_action == bu.right_action);
  CHECK(tensor(bu, bimodule_R(3)).right_action == bu.right_action);
  Bimodule rr = tensor(bimodule_Rw({1}, 3), bimodule_Rw({0, 2}, 3));
  for (int j = 0; j < 3; ++j) CHECK(rr.right_action[j] == mat({{act({1, 0, 2}, X(j), 3)}}));
  Bimodule b0bu = tensor(B({0}, 3), bu);
  CHECK(b0bu.rank == 4);
  CHECK(b0bu.basis_degrees == std::vector<int>{0, 2, 2, 4});
}

TEST_CASE("tensor right action agrees with the three-factor description") {
  for (auto [w1, w2] : std::vector<std::pair<CoxeterWord, CoxeterWord>>{
           {{0}, {1, 0, 1}}, {{1, 0, 1}, {0}}, {{1}, {0, 1, 0}}, {{0}, {0}}, {{1}, {2}}}) {
    Reflection t = make_reflection(w1, 3), u = make_reflection(w2, 3);
    CHECK(tensor(bimodule_Bs(t), bimodule_Bs(u)).right_action == two_factor_action(t, u, 3));
  }
}

TEST_CASE("shifts") {
  CHECK(shift(bimodule_R(2), 2).basis_degrees == std::vector<int>{2});
  Bimodule b = B({0}, 2);
  Bimodule back = shift(shift(b, 3), -3);
  CHECK(back.basis_degrees == b.basis_degrees);
  CHECK(back.right_action == b.right_action);
  CHECK(shift(b, -2).basis_degrees == std::vector<int>{-2, 0});
}

TEST_CASE("every constructed bimodule is well formed") {
  int n = 3;
  std::vector<Bimodule> ms = {bimodule_R(n), bimodule_Rw({1, 0, 1}, n), B({0}, n), B({1}, n), B({1, 0, 1}, n),
                              B({0, 1, 0}, n), B({2}, n)};
  std::size_t base = ms.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = 0; j < base; ++j) ms.push_back(tensor(ms[i], ms[j]));
  ms.push_back(tensor(tensor(B({0}, n), B({1}, n)), B({0}, n)));
  ms.push_back(direct_sum({B({0}, n), shift(bimodule_R(n), 2)}));
  for (const auto& m : ms) {
    CAPTURE(m.factor_word);
    CHECK(check_bimodule(m).ok);
  }
}

TEST_CASE("tensor is associative on the nose") {
  int n = 3;
  std::vector<Bimodule> fs = {B({0}, n), bimodule_Rw({1}, n), B({1, 0, 1}, n), shift(B({2}, n), 2)};
  for (const auto& a : fs)
    for (const auto& b : fs)
      for (const auto& c : fs) {
        Bimodule l = tensor(tensor(a, b), c), r = tensor(a, tensor(b, c));
        CHECK(l.right_action == r.right_action);
        CHECK(l.basis_degrees == r.basis_degrees);
      }
}

TEST_CASE("morphism checks") {
  Bimodule b0 = B({0}, 2);
  CHECK(check_morphism(b0, b0, PolyMatrix::identity(2)).ok);
  CHECK(check_morphism(shift(bimodule_R(2), 2), b0, mat({{X(0)}, {Poly(1)}})).ok);
  CHECK_FALSE(check_morphism(b0, b0, mat({{Poly(), Poly(1)}, {Poly(1), Poly()}})).ok);
  // wrong sign in the second coordinate breaks right linearity
  CHECK_FALSE(check_morphism(shift(bimodule_R(2), 2), b0, mat({{X(0)}, {Poly(-1)}})).ok);
  CHECK_FALSE(check_morphism(b0, b0, PolyMatrix::identity(3)).ok);
}

TEST_CASE("Hom spaces") {
  CHECK(solve_morphisms(bimodule_R(3), bimodule_R(3)).size() == 1);
  for (int i = 0; i < 3; ++i) CHECK(solve_morphisms(bimodule_Rw({i}, 3), bimodule_R(3)).empty());
  Bimodule b0 = B({0}, 3);
  // End(B_s) is free over R on generators of degree 0 and 2
  CHECK(solve_morphisms(b0, b0).size() == 1);
  CHECK(solve_morphisms(b0, b0, 2).size() == 4);
  CHECK(solve_morphisms(b0, b0, -2).empty());
  for (const auto& h : solve_morphisms(tensor(b0, B({1, 0, 1}, 3)), tensor(B({1, 0, 1}, 3), b0))) {
    CHECK(check_morphism(tensor(b0, B({1, 0, 1}, 3)), tensor(B({1, 0, 1}, 3), b0), h).ok);
  }
  CHECK(solve_morphisms(shift(bimodule_R(3), 2), b0).size() == 1);
}

TEST_CASE("twisted swaps") {
  BimoduleIso mu = iso_swap_Rw({1, 0, 1}, {0}, 3);
  CHECK(short_reflection_word({1, 0, 1, 0, 1, 0, 1}, 3) == CoxeterWord{0});
  CHECK(element_equal(concat(concat({1, 0, 1}, {0}), {1, 0, 1}), {0}, 3));
  CHECK(mu.inverse * mu.forward == PolyMatrix::identity(2));
  CHECK(mu.forward * mu.inverse == PolyMatrix::identity(2));
  CHECK(act({1, 0, 1}, X(0), 3) == X(0));
  BimoduleIso trivial = iso_swap_Rw({}, {0}, 3);
  CHECK(trivial.forward == PolyMatrix::identity(2));
  for (auto [w, t] : std::vector<std::pair<CoxeterWord, CoxeterWord>>{
           {{1}, {0}}, {{0}, {1}}, {{2}, {1}}, {{0, 1}, {0}}, {{1, 2}, {1, 0, 1}}}) {
    BimoduleIso s = iso_swap_Rw(w, t, 3);
    CHECK(check_morphism(s.source, s.target, s.forward).ok);
    CHECK(check_morphism(s.target, s.source, s.inverse).ok);
    CHECK(s.inverse * s.forward == PolyMatrix::identity(s.source.rank));
    CHECK(s.forward * s.inverse == PolyMatrix::identity(s.target.rank));
  }
}

TEST_CASE("phi") {
  SpecialIso ph = phi(3);
  for (const auto& c : ph.checks) {
    CAPTURE(c.name);
    CAPTURE(c.result.message);
    CHECK(c.result.ok);
  }
  const Bimodule& s = ph.iso.source;
  const Bimodule& t = ph.iso.target;
  auto image = [&](const Poly& p) { return ph.iso.forward.apply(middle_element(B({0}, 3), B({1, 0, 1}, 3), p)); };
  CHECK(image(Poly(1)) == left_element(t, Poly(1)));
  CHECK(image(X(0)) == right_element(t, X(0)));
  Poly g = X(1) * (r2 * X(0) + X(1));
  CHECK(image(g) == right_element(t, g));
  CHECK(check_morphism(s, t, ph.iso.forward).ok);
  CHECK_THROWS_AS(phi(2), std::invalid_argument);
  CHECK(phi(4).all_pass());
}

TEST_CASE("psi") {
  SpecialIso ps = psi(3);
  for (const auto& c : ps.checks) {
    CAPTURE(c.name);
    CAPTURE(c.result.message);
    CHECK(c.result.ok);
  }
  CHECK(ps.iso.inverse * ps.iso.forward == PolyMatrix::identity(4));
  CHECK(ps.iso.forward * ps.iso.inverse == PolyMatrix::identity(4));
  CHECK_THROWS_AS(psi(2), std::invalid_argument);
}

TEST_CASE("morphism JSON") {
  Bimodule b0 = B({0}, 2);
  nlohmann::json j = morphism_to_json(shift(bimodule_R(2), 2), b0, mat({{X(0)}, {Poly(1)}}));
  CHECK(j["source_word"] == "R{2}");
  CHECK(j["target_word"] == "B(s0)");
  CHECK(j["matrix"] == nlohmann::json::parse(R"([["X0"],["1"]])"));
  CHECK(matrix_from_json(j["matrix"]) == mat({{X(0)}, {Poly(1)}}));
}
