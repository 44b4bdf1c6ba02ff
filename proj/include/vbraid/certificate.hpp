#pragma once

// Certificates for relations between Rouquier complexes of VB_B words, their
// JSON form, and the batch run over all defining relations.

#include "vbraid/equivalence.hpp"
#include "vbraid/words.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace vbraid {

enum class CertificateKind { Iso, Homotopy };

std::string to_string(CertificateKind k);

struct Certificate {
  std::string relation_label;
  CertificateKind kind = CertificateKind::Iso;
  int n = 2;
  std::string lhs;  // words in the VB_B alphabet
  std::string rhs;
  DegreeMaps f;  // F(lhs) -> F(rhs)
  DegreeMaps g;  // F(rhs) -> F(lhs)
  DegreeMaps h_source;  // empty for chain isomorphisms
  DegreeMaps h_target;
};

/// Searches for a certificate of the requested kind; a homotopy search is
/// only run for CertificateKind::Homotopy.
std::optional<Certificate> certify(const std::string& label, const BraidWord& lhs,
                                   const BraidWord& rhs, CertificateKind kind,
                                   int degree_bound = 8);

/// Chain isomorphism if one exists, otherwise a homotopy equivalence.
std::optional<Certificate> certify_pair(const BraidWord& lhs, const BraidWord& rhs,
                                        int degree_bound = 8);

/// Rebuilds both complexes from the stored words and checks every identity.
Check verify_certificate(const Certificate& c);

/// {source_word, target_word, matrix} with polynomial strings.
nlohmann::json morphism_to_json(const Bimodule& source, const Bimodule& target, const PolyMatrix& m);
PolyMatrix matrix_from_json(const nlohmann::json& rows);

nlohmann::json certificate_to_json(const Certificate& c);
/// Throws std::runtime_error (ParseError for malformed polynomials or words)
/// on input that does not describe a certificate.
Certificate certificate_from_json(const nlohmann::json& j);

struct RelationTarget {
  std::string label;
  BraidWord lhs;
  BraidWord rhs;
  CertificateKind kind;
};

/// Every defining relator of VB_B(n), the Reidemeister II pairs
/// s_i s_i^-1 ~ 1 ~ s_i^-1 s_i, and the isomorphisms F(s_i z_i) = F(z_i s_i),
/// F(z0 s1 z0 s1) = F(s1 z0 s1 z0) between words that differ in the group.
std::vector<RelationTarget> relation_targets(int n);

struct RelationResult {
  RelationTarget target;
  std::optional<Certificate> certificate;
  Check verified;  // fails when no certificate was found
};

/// One result per target, in target order; targets are processed in parallel.
std::vector<RelationResult> relation_certificates(int n, int degree_bound = 8);

nlohmann::json relation_report_json(int n, const std::vector<RelationResult>& results);
nlohmann::json relator_check_json(RelatorGroup group, int n, const std::vector<RelatorCheck>& checks);

}  // namespace vbraid
