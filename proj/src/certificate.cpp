#include "vbraid/certificate.hpp"

#include <future>
#include <stdexcept>

namespace vbraid {

using nlohmann::json;

namespace {

json matrix_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

void append_maps(json& out, const std::string& name, const DegreeMaps& maps) {
  for (const auto& [k, m] : maps) {
    out.push_back({{"map", name}, {"degree", k}, {"matrix", matrix_json(m)}});
  }
}

DegreeMaps& slot(Certificate& c, const std::string& name) {
  if (name == "f") return c.f;
  if (name == "g") return c.g;
  if (name == "h_source") return c.h_source;
  if (name == "h_target") return c.h_target;
  throw std::runtime_error("unknown map name '" + name + "'");
}

// Shapes must match the rebuilt complexes before any product is formed.
Check check_shapes(const Complex& src, const Complex& tgt, const DegreeMaps& maps, int offset,
                   const std::string& name) {
  for (const auto& [k, m] : maps) {
    if (m.rows() != tgt.rank(k + offset) || m.cols() != src.rank(k)) {
      return Check::fail(name + " in degree " + std::to_string(k) + ": expected " +
                         std::to_string(tgt.rank(k + offset)) + "x" + std::to_string(src.rank(k)) +
                         ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
  }
  return Check::pass();
}

const char* group_name(RelatorGroup g) {
  switch (g) {
    case RelatorGroup::VbA: return "vbA";
    case RelatorGroup::BraidB: return "braidB";
    case RelatorGroup::VbB: return "vbB";
  }
  return "?";
}

}  // namespace

PolyMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::runtime_error("matrix must be an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j.front().size();
  PolyMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw std::runtime_error("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Poly::parse(j[r][c].get<std::string>());
  }
  return m;
}

json morphism_to_json(const Bimodule& source, const Bimodule& target, const PolyMatrix& m) {
  return json{{"source_word", source.factor_word}, {"target_word", target.factor_word}, {"matrix", matrix_json(m)}};
}

std::string to_string(CertificateKind k) { return k == CertificateKind::Iso ? "iso" : "homotopy"; }

std::optional<Certificate> certify(const std::string& label, const BraidWord& lhs,
                                   const BraidWord& rhs, CertificateKind kind, int degree_bound) {
  if (lhs.alphabet.n != rhs.alphabet.n) throw std::invalid_argument("certify: words live on different n");
  Complex c = F_word(lhs);
  Complex d = F_word(rhs);
  Certificate cert;
  cert.relation_label = label;
  cert.kind = kind;
  cert.n = lhs.alphabet.n;
  cert.lhs = to_string(lhs);
  cert.rhs = to_string(rhs);
  if (kind == CertificateKind::Iso) {
    auto iso = find_chain_iso(c, d);
    if (!iso) return std::nullopt;
    cert.f = std::move(iso->forward);
    cert.g = std::move(iso->inverse);
  } else {
    auto h = find_homotopy_equiv(c, d, degree_bound);
    if (!h) return std::nullopt;
    cert.f = std::move(h->f);
    cert.g = std::move(h->g);
    cert.h_source = std::move(h->h_source);
    cert.h_target = std::move(h->h_target);
  }
  return cert;
}

std::optional<Certificate> certify_pair(const BraidWord& lhs, const BraidWord& rhs,
                                        int degree_bound) {
  std::string label = to_string(lhs) + " = " + to_string(rhs);
  if (auto c = certify(label, lhs, rhs, CertificateKind::Iso, degree_bound)) return c;
  return certify(label, lhs, rhs, CertificateKind::Homotopy, degree_bound);
}

Check verify_certificate(const Certificate& cert) {
  Alphabet a = Alphabet::vbB(cert.n);
  Complex c = F_word(parse_word(cert.lhs, a));
  Complex d = F_word(parse_word(cert.rhs, a));
  for (Check chk : {check_shapes(c, d, cert.f, 0, "f"), check_shapes(d, c, cert.g, 0, "g"),
                    check_shapes(c, c, cert.h_source, -1, "h_source"),
                    check_shapes(d, d, cert.h_target, -1, "h_target")}) {
    if (!chk) return chk;
  }
  if (cert.kind == CertificateKind::Iso) {
    if (!cert.h_source.empty() || !cert.h_target.empty()) {
      return Check::fail("isomorphism certificate carries homotopies");
    }
    return verify_chain_iso(c, d, cert.f, cert.g);
  }
  return verify_homotopy(c, d, HomotopyCertificate{cert.f, cert.g, cert.h_source, cert.h_target});
}

json certificate_to_json(const Certificate& c) {
  json components = json::array();
  append_maps(components, "f", c.f);
  append_maps(components, "g", c.g);
  json homotopies = json::array();
  append_maps(homotopies, "h_source", c.h_source);
  append_maps(homotopies, "h_target", c.h_target);
  return json{{"relation_label", c.relation_label},
              {"kind", to_string(c.kind)},
              {"n", c.n},
              {"complexes", json::array({c.lhs, c.rhs})},
              {"components", std::move(components)},
              {"homotopies", std::move(homotopies)}};
}

Certificate certificate_from_json(const json& j) {
  try {
    Certificate c;
    c.relation_label = j.at("relation_label").get<std::string>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "iso") {
      c.kind = CertificateKind::Iso;
    } else if (kind == "homotopy") {
      c.kind = CertificateKind::Homotopy;
    } else {
      throw std::runtime_error("unknown certificate kind '" + kind + "'");
    }
    c.n = j.at("n").get<int>();
    if (c.n < 2 || c.n > 8) throw std::runtime_error("n out of range");
    const json& words = j.at("complexes");
    if (!words.is_array() || words.size() != 2) throw std::runtime_error("complexes must list two words");
    c.lhs = words[0].get<std::string>();
    c.rhs = words[1].get<std::string>();
    for (const char* field : {"components", "homotopies"}) {
      for (const auto& e : j.at(field)) {
        DegreeMaps& maps = slot(c, e.at("map").get<std::string>());
        int k = e.at("degree").get<int>();
        if (!maps.emplace(k, matrix_from_json(e.at("matrix"))).second) {
          throw std::runtime_error("duplicate component in degree " + std::to_string(k));
        }
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed certificate: ") + e.what());
  }
}

std::vector<RelationTarget> relation_targets(int n) {
  std::vector<RelationTarget> out;
  for (auto& r : relator_table(RelatorGroup::VbB, n)) {
    bool braid = r.label == "relB2" || r.label == "relB3";
    out.push_back({r.label, r.lhs, r.rhs, braid ? CertificateKind::Homotopy : CertificateKind::Iso});
  }
  Alphabet a = Alphabet::vbB(n);
  BraidWord unit{a, {}};
  for (int i = 0; i < n; ++i) {
    BraidWord pos{a, {BraidLetter::real(i, 1), BraidLetter::real(i, -1)}};
    BraidWord neg{a, {BraidLetter::real(i, -1), BraidLetter::real(i, 1)}};
    out.push_back({"reidemeister2", pos, unit, CertificateKind::Homotopy});
    out.push_back({"reidemeister2", neg, unit, CertificateKind::Homotopy});
  }
  for (int i = 0; i < n; ++i) {
    BraidWord sz{a, {BraidLetter::real(i, 1), BraidLetter::virt(i)}};
    BraidWord zs{a, {BraidLetter::virt(i), BraidLetter::real(i, 1)}};
    out.push_back({"sz-iso", sz, zs, CertificateKind::Iso});
  }
  out.push_back({"psi-iso", parse_word("z0 s1 z0 s1", a), parse_word("s1 z0 s1 z0", a),
                 CertificateKind::Iso});
  return out;
}

std::vector<RelationResult> relation_certificates(int n, int degree_bound) {
  std::vector<RelationTarget> targets = relation_targets(n);
  std::vector<std::future<RelationResult>> jobs;
  for (const auto& t : targets) {
    jobs.push_back(std::async(std::launch::async, [t, degree_bound] {
      RelationResult r{t, certify(t.label, t.lhs, t.rhs, t.kind, degree_bound), Check::pass()};
      r.verified = r.certificate ? verify_certificate(*r.certificate)
                                 : Check::fail("no " + to_string(t.kind) + " certificate found");
      return r;
    }));
  }
  std::vector<RelationResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

json relation_report_json(int n, const std::vector<RelationResult>& results) {
  json entries = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.verified.ok;
    json e{{"relation_label", r.target.label},
           {"complexes", json::array({to_string(r.target.lhs), to_string(r.target.rhs)})},
           {"kind", to_string(r.target.kind)},
           {"status", r.verified.ok ? "pass" : "fail"}};
    if (!r.verified.ok) e["message"] = r.verified.message;
    if (r.certificate) e["certificate"] = certificate_to_json(*r.certificate);
    entries.push_back(std::move(e));
  }
  return json{{"n", n}, {"all_pass", all}, {"relations", std::move(entries)}};
}

json relator_check_json(RelatorGroup group, int n, const std::vector<RelatorCheck>& checks) {
  json entries = json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.comparison.equal;
    json e{{"relator_label", c.label},
           {"lhs", c.lhs},
           {"rhs", c.rhs},
           {"status", c.comparison.equal ? "pass" : "unequal"},
           {"witness_generator", nullptr},
           {"witness_image", nullptr}};
    if (c.comparison.witness) {
      e["witness_generator"] = to_string(*c.comparison.witness);
      e["witness_image"] = json::array({c.comparison.lhs_image.to_string(), c.comparison.rhs_image.to_string()});
    }
    entries.push_back(std::move(e));
  }
  return json{{"group", group_name(group)}, {"n", n}, {"all_pass", all}, {"relators", std::move(entries)}};
}

}  // namespace vbraid
