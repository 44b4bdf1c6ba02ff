#pragma once

// Words in the virtual braid groups VB_n (letters sig_i, zet_i) and VB_{B_n}
// (letters s_i, z_i), their defining relators, and the homomorphism
// j : VB_{B_n} -> VB_{2n}.

#include "vbraid/freegroup.hpp"
#include "vbraid/scalars.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vbraid {

struct Alphabet {
  enum class Kind { VbA, VbB };
  Kind kind = Kind::VbB;
  int n = 2;
  int lo = 0;  // smallest admissible letter index
  int hi = 1;  // largest admissible letter index

  /// sig_i, zet_i for 1 <= i <= n-1.
  static Alphabet vbA(int n);
  /// sig_i, zet_i for -n+1 <= i <= n-1: the target of j for rank n.
  static Alphabet vbA_shifted(int n);
  /// s_i, z_i for 0 <= i <= n-1.
  static Alphabet vbB(int n);

  bool contains(int index) const { return lo <= index && index <= hi; }
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// A real crossing (s_i / sig_i) with exponent +-1, or a virtual one (z_i / zet_i).
struct BraidLetter {
  bool is_virtual = false;
  int index = 0;
  int exponent = 1;

  static BraidLetter real(int i, int e = 1) { return BraidLetter{false, i, e}; }
  static BraidLetter virt(int i) { return BraidLetter{true, i, 1}; }
  bool cancels(const BraidLetter& o) const;
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  Alphabet alphabet;
  std::vector<BraidLetter> letters;

  bool empty() const { return letters.empty(); }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Whitespace separated letters such as "s0 s1^-1 z1" or "sig-1 zet2"; the
/// empty string and "1" denote the identity. z^-1 is read as z.
BraidWord parse_word(std::string_view text, const Alphabet& alphabet);
std::string to_string(const BraidLetter& l, Alphabet::Kind kind);
std::string to_string(const BraidWord& w);

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord free_reduce(const BraidWord& w);

/// s_0 -> sig_0, z_0 -> zet_0, s_i -> sig_{-i} sig_i, z_i -> zet_{-i} zet_i.
BraidWord embed_j(const BraidWord& w);

enum class RelatorGroup { VbA, BraidB, VbB };

struct RelatorPair {
  std::string label;
  BraidWord lhs;
  BraidWord rhs;
};

std::vector<RelatorPair> relator_table(RelatorGroup group, int n);

/// Manturov invariant of a word; VB_{B_n} words go through embed_j first.
FreeAutomorphism word_invariant(const BraidWord& w);

struct InvariantComparison {
  bool equal = false;
  bool specialized_t1 = false;
  std::optional<FreeSymbol> witness;
  FreeWord lhs_image;  // image of the witness under each side, when unequal
  FreeWord rhs_image;
};

InvariantComparison compare_invariants(const BraidWord& u, const BraidWord& v, bool t1 = false);

struct RelatorCheck {
  std::string label;
  std::string lhs;
  std::string rhs;
  InvariantComparison comparison;
};

/// Pushes every defining relator through the invariant. Agreement is only a
/// necessary condition for a relation to hold.
std::vector<RelatorCheck> check_relators_via_invariant(RelatorGroup group, int n);

}  // namespace vbraid
