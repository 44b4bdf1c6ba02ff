// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails.

#include "vbraid/certificate.hpp"
#include "vbraid/explicit_maps.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

using namespace vbraid;
using nlohmann::json;

namespace {

Poly X(int k) { return Poly::variable(k); }
const QSqrt2 r2 = QSqrt2::sqrt2();

// Collects failed sub-checks for one criterion.
struct Tally {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

const std::vector<CoxeterWord> kTabulated = {{0}, {1}, {1, 0, 1}, {0, 1, 0}};

void coxeter_suite(Tally& t) {
  for (int n = 2; n <= 5; ++n) {
    LinearEndo id = LinearEndo::identity(n);
    std::string nn = " (n=" + std::to_string(n) + ")";
    for (int i = 0; i < n; ++i) {
      t.expect(alpha(i, n).compose(alpha(i, n)) == id, "alpha_" + std::to_string(i) + " involution" + nn);
      for (int j = i + 2; j < n; ++j) t.expect(word_endo({i, j}, n) == word_endo({j, i}, n), "commutation" + nn);
    }
    for (int i = 1; i + 1 < n; ++i)
      t.expect(word_endo({i, i + 1, i}, n) == word_endo({i + 1, i, i + 1}, n), "braid relation" + nn);
    t.expect(word_endo({0, 1, 0, 1}, n) == word_endo({1, 0, 1, 0}, n), "order-4 relation" + nn);
    for (const auto& w : kTabulated)
      for (const auto& p : invariant_generator_table(w, n))
        t.expect(is_invariant(w, p, n), to_string(w) + " fixes " + p.to_string() + nn);
  }
  Poly first = X(1) * (r2 * X(0) + X(1)) - pow(X(1) + X(2), 2) - r2 * X(0) * (X(1) + X(2));
  Poly second = r2 * X(0) + 2 * X(1) + 2 * X(2);
  t.expect(pow(X(2), 2) == first + second * X(2), "X2^2 identity");
  for (const CoxeterWord& w : {CoxeterWord{0}, CoxeterWord{1, 0, 1}}) {
    t.expect(is_invariant(w, first, 3) && is_invariant(w, second, 3), "X2^2 parts invariant under " + to_string(w));
  }
}

FreeAutomorphism vba(const char* w, int n) { return word_invariant(parse_word(w, Alphabet::vbA(n))); }

void manturov_regression(Tally& t) {
  auto same = [&](const FreeWord& got, const char* want, const std::string& what) {
    t.expect(got.to_string() == want, what + ": got " + got.to_string());
  };
  FreeSymbol a1 = FreeSymbol::a(1), a2 = FreeSymbol::a(2), a3 = FreeSymbol::a(3);
  same(vba("zet1 sig1", 3).image(a1), "t^-1 a1 t", "f(zeta sigma)(a_i)");
  same(vba("sig1 zet1", 3).image(a1), "t a2^-1 a1 a2 t^-1", "f(sigma zeta)(a_i)");
  FreeAutomorphism l = vba("zet1 sig2 sig1", 4), r = vba("sig2 sig1 zet2", 4);
  same(l.image(a1), "a3", "f(zeta sigma sigma)(a_i)");
  same(l.image(a2), "a3^-1 t a2 t^-1 a3", "f(zeta sigma sigma)(a_{i+1})");
  same(l.image(a3), "a3^-1 t^-1 a1 t a3", "f(zeta sigma sigma)(a_{i+2})");
  same(l.image(FreeSymbol::a(4)), "a4", "f(zeta sigma sigma)(a_j)");
  same(l.image(FreeSymbol::t()), "t", "f(zeta sigma sigma)(t)");
  same(r.image(a1), "a3", "f(sigma sigma zeta)(a_i)");
  same(r.image(a2), "t a3^-1 a2 a3 t^-1", "f(sigma sigma zeta)(a_{i+1})");
  same(r.image(a3), "t^-1 a3^-1 a1 a3 t", "f(sigma sigma zeta)(a_{i+2})");
  same(r.image(FreeSymbol::a(4)), "a4", "f(sigma sigma zeta)(a_j)");
  Alphabet b = Alphabet::vbB(2);
  same(word_invariant(parse_word("z0 s1 z0 s1", b)).image(a2),
       "a2^-1 t^-1 a0^-1 t a2 a1^-1 t^-1 a-1 t a1 a2^-1 t^-1 a0 t a2", "f(j(z0 s1 z0 s1))(a2)");
  same(word_invariant(parse_word("s1 z0 s1 z0", b)).image(a2),
       "a2^-1 a1^-1 a2 t^-1 a0^-1 a-1 a0 t a2^-1 a1 a2", "f(j(s1 z0 s1 z0))(a2)");
  for (int n = 2; n <= 5; ++n)
    for (const auto& c : check_relators_via_invariant(RelatorGroup::VbA, n))
      t.expect(c.comparison.equal, c.label + " at n=" + std::to_string(n));
}

void j_check(Tally& t) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& c : check_relators_via_invariant(RelatorGroup::VbB, n))
      t.expect(c.comparison.equal, c.label + " at n=" + std::to_string(n));
  auto unequal_with = [&](const BraidWord& u, const BraidWord& v, FreeSymbol witness, const std::string& what) {
    InvariantComparison c = compare_invariants(u, v);
    t.expect(!c.equal && c.witness == witness, what + " should be UNEQUAL with witness " + to_string(witness));
  };
  Alphabet a = Alphabet::vbA(4);
  unequal_with(parse_word("sig1 zet1", a), parse_word("zet1 sig1", a), FreeSymbol::a(1), "sigma zeta vs zeta sigma");
  unequal_with(parse_word("zet1 sig2 sig1", a), parse_word("sig2 sig1 zet2", a), FreeSymbol::a(2),
               "forbidden move");
  Alphabet b = Alphabet::vbB(2);
  unequal_with(parse_word("z0 s1 z0 s1", b), parse_word("s1 z0 s1 z0", b), FreeSymbol::a(2), "z0 s1 z0 s1");
  t.expect(compare_invariants(parse_word("zet1 sig2 sig1", a), parse_word("sig2 sig1 zet2", a), true).equal,
           "forbidden move EQUAL under t=1");
}

void bimodule_calculus(Tally& t) {
  int n = 3;
  std::vector<Bimodule> parts = {bimodule_R(n), bimodule_Rw({1, 0, 1}, n), bimodule_Rw({2, 1}, n)};
  for (const auto& w : kTabulated) parts.push_back(bimodule_Bs(make_reflection(w, n)));
  std::size_t base = parts.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = 0; j < base; ++j) parts.push_back(tensor(parts[i], parts[j]));
  for (const auto& m : parts) {
    Check c = check_bimodule(m);
    t.expect(c.ok, m.factor_word + ": " + c.message);
  }
  Bimodule rr = tensor(bimodule_Rw({1}, n), bimodule_Rw({0, 1}, n));
  t.expect(rr.right_action == bimodule_Rw({1, 0, 1}, n).right_action, "R_w R_w' = R_ww'");
  for (auto [w, s] : std::vector<std::pair<CoxeterWord, CoxeterWord>>{{{1, 0, 1}, {0}}, {{1}, {0}}, {{0}, {1}}, {{2}, {1}}}) {
    BimoduleIso iso = iso_swap_Rw(w, s, n);
    bool ok = check_morphism(iso.source, iso.target, iso.forward).ok &&
              check_morphism(iso.target, iso.source, iso.inverse).ok &&
              iso.inverse * iso.forward == PolyMatrix::identity(iso.source.rank) &&
              iso.forward * iso.inverse == PolyMatrix::identity(iso.target.rank);
    t.expect(ok, "R_w B_t swap for " + to_string(w) + ", " + to_string(s));
  }
  for (const auto& [name, iso] : {std::pair{"phi", phi(n)}, std::pair{"psi", psi(n)}}) {
    for (const auto& c : iso.checks) t.expect(c.result.ok, std::string(name) + " " + c.name + ": " + c.result.message);
  }
}

struct RunData {
  std::map<int, std::vector<RelationResult>> results;
};

void certificates(Tally& t, const RunData& data) {
  for (const auto& [n, rs] : data.results) {
    std::set<std::string> labels;
    for (const auto& r : rs) {
      labels.insert(r.target.label);
      t.expect(r.verified.ok, r.target.label + " " + to_string(r.target.lhs) + " ~ " + to_string(r.target.rhs) +
                                  " (n=" + std::to_string(n) + "): " + r.verified.message);
      if (r.certificate) t.expect(r.certificate->kind == r.target.kind, r.target.label + " has the wrong kind");
    }
    for (const char* l : {"relB3", "relWB3", "relWB0", "relmixB3", "relmixB4", "relmixB5", "reidemeister2"})
      t.expect(labels.count(l) == 1, std::string(l) + " missing at n=" + std::to_string(n));
    if (n >= 3)
      for (const char* l : {"relB1", "relB2", "relWB1", "relWB2", "relmixB1", "relmixB2"})
        t.expect(labels.count(l) == 1, std::string(l) + " missing at n=" + std::to_string(n));
  }
}

bool flip_first_sign(DegreeMaps& maps) {
  for (auto& [k, m] : maps)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m.at(r, c).is_zero()) {
          m.at(r, c) = -m.at(r, c);
          return true;
        }
  return false;
}

void negative_controls(Tally& t) {
  Alphabet a = Alphabet::vbB(2);
  Complex s = F_word(parse_word("s0", a)), z = F_word(parse_word("z0", a));
  t.expect(!find_homotopy_equiv(s, z).has_value(), "F(s0) ~ F(z0) should be NONE");
  t.expect(!find_chain_iso(s, z).has_value(), "F(s0) = F(z0) should be NONE");
  t.expect(!find_chain_iso(s, F_word(parse_word("s0^-1", a))).has_value(), "F(s0) = F(s0^-1) should be NONE");
  Complex c = F_word(parse_word("s0 s0^-1", a));
  auto h = find_homotopy_equiv(c, F_unit(2));
  t.expect(h.has_value(), "Reidemeister II certificate");
  if (!h) return;
  HomotopyCertificate bad = *h;
  t.expect(flip_first_sign(bad.h_source), "homotopy has a nonzero entry");
  Check v = verify_homotopy(c, F_unit(2), bad);
  t.expect(!v.ok && v.message.find("residual") != std::string::npos, "sign-flipped homotopy rejected with a witness");
}

void unequal_word_isomorphisms(Tally& t, const RunData& data) {
  for (const auto& r : data.results.at(3)) {
    if (r.target.label != "sz-iso" && r.target.label != "psi-iso") continue;
    std::string pair = to_string(r.target.lhs) + " vs " + to_string(r.target.rhs);
    t.expect(r.verified.ok && r.certificate && r.certificate->kind == CertificateKind::Iso, pair + ": complexes isomorphic");
    t.expect(!compare_invariants(r.target.lhs, r.target.rhs).equal, pair + ": words UNEQUAL in the group");
  }
  SpecialIso ps = psi(3);
  t.expect(ps.all_pass(), "psi verified");
}

void serialization(Tally& t, const RunData& data) {
  for (const auto& [n, rs] : data.results) {
    for (const auto& r : rs) {
      if (!r.certificate) continue;
      std::string text = certificate_to_json(*r.certificate).dump();
      Certificate back = certificate_from_json(json::parse(text));
      t.expect(certificate_to_json(back).dump() == text, r.target.label + " serializes bit-exactly");
      Check v = verify_certificate(back);
      t.expect(v.ok, r.target.label + " re-verifies: " + v.message);
    }
  }
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  RunData data;
  auto start = clock::now();
  for (int n : {2, 3}) data.results[n] = relation_certificates(n);

  struct Criterion {
    int id;
    const char* name;
    std::function<void(Tally&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "Coxeter action suite", coxeter_suite},
      {2, "Manturov regression", manturov_regression},
      {3, "homomorphism j necessary-condition check", j_check},
      {4, "bimodule calculus", bimodule_calculus},
      {5, "categorification certificates for n = 2, 3", [&](Tally& t) { certificates(t, data); }},
      {6, "negative controls", negative_controls},
      {7, "isomorphisms between unequal words", [&](Tally& t) { unequal_word_isomorphisms(t, data); }},
      {8, "serialization round-trip", [&](Tally& t) { serialization(t, data); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("criterion %d: %s  %s\n", c.id, t.failures.empty() ? "PASS" : "FAIL", c.name);
    for (const auto& f : t.failures) std::printf("    %s\n", f.c_str());
    if (!t.failures.empty()) ++failed;
  }
  double secs = std::chrono::duration<double>(clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
