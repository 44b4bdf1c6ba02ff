// vbraid: virtual braid invariants and categorification certificates.

#include "vbraid/certificate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace vbraid;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Options {
  std::string group = "vbB";
  int n = 2;
  std::string format = "text";
  std::string out;
  bool t1 = false;
  bool shifted = false;
  int degree_bound = 8;
  std::string w1;
  std::string w2;
  std::string path;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Alphabet alphabet(const Options& o) {
  if (o.group == "vbB") return Alphabet::vbB(o.n);
  return o.shifted ? Alphabet::vbA_shifted(o.n) : Alphabet::vbA(o.n);
}

RelatorGroup relator_group(const Options& o) {
  return o.group == "vbB" ? RelatorGroup::VbB : RelatorGroup::VbA;
}

// Writes to --out when given, stdout otherwise.
void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot open " + o.out + " for writing");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_vbB(const Options& o, const std::string& cmd) {
  if (o.group != "vbB") throw UsageError(cmd + " works on VB_B words only (--group vbB)");
}

int cmd_invariant(const Options& o) {
  BraidWord w = parse_word(o.w1, alphabet(o));
  FreeAutomorphism f = word_invariant(w);
  if (o.t1) f = f.specialize_t1();
  if (o.format == "json") {
    json images = json::array();
    for (const auto& g : f.generators()) {
      images.push_back({{"generator", to_string(g)}, {"image", f.image(g).to_string()}});
    }
    emit(o, dump({{"group", o.group}, {"n", o.n}, {"word", to_string(w)}, {"images", images}}));
  } else {
    std::ostringstream s;
    for (const auto& g : f.generators()) s << to_string(g) << " -> " << f.image(g).to_string() << "\n";
    emit(o, s.str());
  }
  return kOk;
}

int cmd_distinguish(const Options& o) {
  Alphabet a = alphabet(o);
  InvariantComparison c = compare_invariants(parse_word(o.w1, a), parse_word(o.w2, a), o.t1);
  if (o.format == "json") {
    json j{{"status", c.equal ? "equal" : "unequal"}, {"t1", c.specialized_t1}};
    if (c.witness) {
      j["witness_generator"] = to_string(*c.witness);
      j["witness_image"] = json::array({c.lhs_image.to_string(), c.rhs_image.to_string()});
    }
    emit(o, dump(j));
  } else if (c.equal) {
    emit(o, std::string(c.specialized_t1 ? "equal under t=1" : "invariant-equal") +
                " (inconclusive for group equality)\n");
  } else {
    emit(o, "UNEQUAL: witness " + to_string(*c.witness) + "\n  first:  " + c.lhs_image.to_string() +
                "\n  second: " + c.rhs_image.to_string() + "\n");
  }
  return kOk;
}

int cmd_check_relations(const Options& o) {
  RelatorGroup g = relator_group(o);
  auto checks = check_relators_via_invariant(g, o.n);
  json report = relator_check_json(g, o.n, checks);
  if (o.format == "json") {
    emit(o, dump(report));
  } else {
    std::ostringstream s;
    for (const auto& c : checks) {
      s << (c.comparison.equal ? "pass " : "FAIL ") << c.label << ": " << c.lhs << " = " << c.rhs;
      if (c.comparison.witness) s << "  (witness " << to_string(*c.comparison.witness) << ")";
      s << "\n";
    }
    emit(o, s.str());
  }
  bool ok = report["all_pass"].get<bool>();
  if (!ok) {
    for (const auto& c : checks) {
      if (!c.comparison.equal) std::cerr << "failing relator: " << c.label << "\n";
    }
  }
  return ok ? kOk : kFailure;
}

int cmd_certify(const Options& o) {
  auto results = relation_certificates(o.n, o.degree_bound);
  json report = relation_report_json(o.n, results);
  if (o.format == "json") {
    emit(o, dump(report));
  } else {
    std::ostringstream s;
    for (const auto& r : results) {
      s << (r.verified ? "pass " : "FAIL ") << r.target.label << " [" << to_string(r.target.kind)
        << "]: " << to_string(r.target.lhs) << " ~ " << to_string(r.target.rhs);
      if (!r.verified) s << "  (" << r.verified.message << ")";
      s << "\n";
    }
    emit(o, s.str());
  }
  bool ok = report["all_pass"].get<bool>();
  for (const auto& r : results) {
    if (!r.verified) std::cerr << "uncertified relation: " << r.target.label << "\n";
  }
  return ok ? kOk : kFailure;
}

int cmd_certify_pair(const Options& o) {
  Alphabet a = alphabet(o);
  auto cert = certify_pair(parse_word(o.w1, a), parse_word(o.w2, a), o.degree_bound);
  if (!cert) {
    std::cerr << "no chain isomorphism or homotopy equivalence found\n";
    return kFailure;
  }
  Check v = verify_certificate(*cert);
  if (o.format == "json") {
    emit(o, dump(certificate_to_json(*cert)));
  } else {
    emit(o, to_string(cert->kind) + " certificate: " + cert->lhs + " ~ " + cert->rhs + "\n");
  }
  if (!v) std::cerr << "certificate failed verification: " << v.message << "\n";
  return v ? kOk : kFailure;
}

int cmd_verify_certificate(const Options& o) {
  std::ifstream f(o.path);
  if (!f) throw UsageError("cannot read " + o.path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  // a single certificate, or a report from `certify --format json`
  std::vector<json> certs;
  if (j.contains("relations")) {
    for (const auto& e : j.at("relations")) {
      if (e.contains("certificate")) certs.push_back(e.at("certificate"));
    }
  } else {
    certs.push_back(j);
  }
  bool ok = true;
  std::ostringstream s;
  for (const auto& cj : certs) {
    Certificate c = certificate_from_json(cj);
    Check v = verify_certificate(c);
    ok = ok && v.ok;
    s << (v ? "verified " : "REJECTED ") << c.relation_label << " [" << to_string(c.kind) << "]";
    if (!v) s << ": " << v.message;
    s << "\n";
  }
  emit(o, s.str());
  return ok ? kOk : kFailure;
}

// Experimental: is the word invisible to the invariant, and is F(word)
// equivalent to F(1)? No claim is made either way.
int cmd_kernel_probe(const Options& o) {
  BraidWord w = parse_word(o.w1, Alphabet::vbB(o.n));
  BraidWord unit{w.alphabet, {}};
  bool in_kernel = compare_invariants(w, unit).equal;
  auto cert = certify_pair(w, unit, o.degree_bound);
  json j{{"word", to_string(w)},
         {"n", o.n},
         {"invariant_trivial", in_kernel},
         {"equivalent_to_unit", cert.has_value()}};
  if (cert) j["kind"] = to_string(cert->kind);
  if (o.format == "json") {
    emit(o, dump(j));
  } else {
    emit(o, std::string("invariant after j: ") + (in_kernel ? "trivial" : "nontrivial") +
                "\nF(word) ~ F(1): " + (cert ? "yes (" + to_string(cert->kind) + ")" : "not found") + "\n");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Virtual braid groups of type B: invariants and categorification certificates"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "Alphabet")->check(CLI::IsMember({"vbA", "vbB"}));
    sub->add_option("--n", o.n, "Rank")->check(CLI::Range(2, 8));
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "Output file (default stdout)");
  };

  auto* inv = app.add_subcommand("invariant", "Print the free-group automorphism of a word");
  common(inv);
  inv->add_option("word", o.w1, "Word, e.g. \"z0 s1 z0 s1\"")->required();
  inv->add_flag("--t1", o.t1, "Specialize t = 1");
  inv->add_flag("--shifted", o.shifted, "vbA alphabet with indices -n+1..n-1");

  auto* dist = app.add_subcommand("distinguish", "Compare the invariants of two words");
  common(dist);
  dist->add_option("first", o.w1)->required();
  dist->add_option("second", o.w2)->required();
  dist->add_flag("--t1", o.t1, "Specialize t = 1 before comparing");
  dist->add_flag("--shifted", o.shifted, "vbA alphabet with indices -n+1..n-1");

  auto* rel = app.add_subcommand("check-relations", "Push every defining relator through the invariant");
  common(rel);

  auto* cert = app.add_subcommand("certify", "Certify every defining relation of VB_B(n)");
  common(cert);
  cert->add_option("--degree-bound", o.degree_bound, "Maximum number of objects per complex")
      ->check(CLI::PositiveNumber);

  auto* pair = app.add_subcommand("certify-pair", "Find an isomorphism or homotopy equivalence");
  common(pair);
  pair->add_option("first", o.w1)->required();
  pair->add_option("second", o.w2)->required();
  pair->add_option("--degree-bound", o.degree_bound)->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify-certificate", "Re-verify a certificate JSON file");
  ver->add_option("path", o.path)->required();
  ver->add_option("--out", o.out, "Output file (default stdout)");

  auto* probe = app.add_subcommand("kernel-probe", "Experimental: compare a word with the identity");
  common(probe);
  probe->add_option("word", o.w1)->required();
  probe->add_option("--degree-bound", o.degree_bound)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*inv) return cmd_invariant(o);
    if (*dist) return cmd_distinguish(o);
    if (*rel) return cmd_check_relations(o);
    if (*cert) {
      require_vbB(o, "certify");
      return cmd_certify(o);
    }
    if (*pair) {
      require_vbB(o, "certify-pair");
      return cmd_certify_pair(o);
    }
    if (*ver) return cmd_verify_certificate(o);
    if (*probe) {
      require_vbB(o, "kernel-probe");
      return cmd_kernel_probe(o);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    // malformed certificate files
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
