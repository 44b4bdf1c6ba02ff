#include "vbraid/words.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace vbraid {

Alphabet Alphabet::vbA(int n) { return Alphabet{Kind::VbA, n, 1, n - 1}; }
Alphabet Alphabet::vbA_shifted(int n) { return Alphabet{Kind::VbA, n, -n + 1, n - 1}; }
Alphabet Alphabet::vbB(int n) { return Alphabet{Kind::VbB, n, 0, n - 1}; }

bool BraidLetter::cancels(const BraidLetter& o) const {
  if (is_virtual != o.is_virtual || index != o.index) return false;
  return is_virtual || exponent == -o.exponent;
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view s, const Alphabet& a) : s_(s), alphabet_(a) {}

  BraidWord parse() {
    BraidWord w{alphabet_, {}};
    skip_ws();
    if (s_.substr(pos_) == "1") return w;
    while (pos_ < s_.size()) {
      w.letters.push_back(letter());
      skip_ws();
    }
    return w;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool consume(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  BraidLetter letter() {
    bool type_a = alphabet_.kind == Alphabet::Kind::VbA;
    bool is_virtual;
    if (type_a) {
      if (consume("sig")) {
        is_virtual = false;
      } else if (consume("zet")) {
        is_virtual = true;
      } else {
        throw ParseError("expected 'sig' or 'zet'", pos_);
      }
    } else {
      if (consume("s")) {
        is_virtual = false;
      } else if (consume("z")) {
        is_virtual = true;
      } else {
        throw ParseError("expected 's' or 'z'", pos_);
      }
    }
    std::size_t num_pos = pos_;
    bool neg = consume("-");
    std::size_t ds = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == ds) throw ParseError("expected generator index", pos_);
    int index = std::stoi(std::string(s_.substr(ds, pos_ - ds)));
    if (neg) index = -index;
    if (!alphabet_.contains(index)) {
      throw ParseError("index " + std::to_string(index) + " out of range [" +
                           std::to_string(alphabet_.lo) + ", " + std::to_string(alphabet_.hi) + "]",
                       num_pos);
    }
    int exponent = 1;
    if (consume("^")) {
      if (consume("-1")) {
        exponent = -1;
      } else if (consume("1")) {
        exponent = 1;
      } else {
        throw ParseError("exponent must be 1 or -1", pos_);
      }
    }
    if (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      throw ParseError("unexpected character in letter", pos_);
    }
    if (is_virtual) return BraidLetter::virt(index);
    return BraidLetter::real(index, exponent);
  }

  std::string_view s_;
  Alphabet alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

BraidWord parse_word(std::string_view text, const Alphabet& alphabet) {
  return WordParser(text, alphabet).parse();
}

std::string to_string(const BraidLetter& l, Alphabet::Kind kind) {
  bool a = kind == Alphabet::Kind::VbA;
  std::string s = l.is_virtual ? (a ? "zet" : "z") : (a ? "sig" : "s");
  s += std::to_string(l.index);
  if (!l.is_virtual && l.exponent == -1) s += "^-1";
  return s;
}

std::string to_string(const BraidWord& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += to_string(l, w.alphabet.kind);
  }
  return out;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (!(u.alphabet == v.alphabet)) throw std::invalid_argument("concat: alphabets differ");
  BraidWord out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out{w.alphabet, {}};
  for (const auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().cancels(l)) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

BraidWord embed_j(const BraidWord& w) {
  if (w.alphabet.kind != Alphabet::Kind::VbB) {
    throw std::invalid_argument("embed_j expects a VB_B word");
  }
  BraidWord out{Alphabet::vbA_shifted(w.alphabet.n), {}};
  auto& L = out.letters;
  for (const auto& l : w.letters) {
    int i = l.index;
    if (l.is_virtual) {
      if (i != 0) L.push_back(BraidLetter::virt(-i));
      L.push_back(BraidLetter::virt(i));
    } else if (i == 0) {
      L.push_back(BraidLetter::real(0, l.exponent));
    } else if (l.exponent == 1) {
      L.push_back(BraidLetter::real(-i, 1));
      L.push_back(BraidLetter::real(i, 1));
    } else {
      L.push_back(BraidLetter::real(i, -1));
      L.push_back(BraidLetter::real(-i, -1));
    }
  }
  return out;
}

namespace {

struct TableBuilder {
  Alphabet alphabet;
  std::vector<RelatorPair> out;

  void add(const std::string& label, std::vector<BraidLetter> lhs, std::vector<BraidLetter> rhs) {
    out.push_back(RelatorPair{label, BraidWord{alphabet, std::move(lhs)},
                              BraidWord{alphabet, std::move(rhs)}});
  }
};

BraidLetter S(int i) { return BraidLetter::real(i); }
BraidLetter Z(int i) { return BraidLetter::virt(i); }

void braid_b_relations(TableBuilder& t, int n) {
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) t.add("relB1", {S(i), S(j)}, {S(j), S(i)});
  }
  for (int i = 1; i <= n - 2; ++i) {
    t.add("relB2", {S(i), S(i + 1), S(i)}, {S(i + 1), S(i), S(i + 1)});
  }
  t.add("relB3", {S(0), S(1), S(0), S(1)}, {S(1), S(0), S(1), S(0)});
}

}  // namespace

std::vector<RelatorPair> relator_table(RelatorGroup group, int n) {
  if (n < 2) throw std::invalid_argument("relator tables need n >= 2");
  if (group == RelatorGroup::VbA) {
    TableBuilder t{Alphabet::vbA(n), {}};
    int m = n - 1;  // generators 1..n-1
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 2; j <= m; ++j) t.add("vb1", {S(i), S(j)}, {S(j), S(i)});
    }
    for (int i = 1; i <= n - 2; ++i) {
      t.add("vb2", {S(i), S(i + 1), S(i)}, {S(i + 1), S(i), S(i + 1)});
    }
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 2; j <= m; ++j) t.add("vb3", {Z(i), Z(j)}, {Z(j), Z(i)});
    }
    for (int i = 1; i <= n - 2; ++i) {
      t.add("vb4", {Z(i), Z(i + 1), Z(i)}, {Z(i + 1), Z(i), Z(i + 1)});
    }
    for (int i = 1; i <= m; ++i) t.add("vb5", {Z(i), Z(i)}, {});
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        if (std::abs(i - j) > 1) t.add("vb6", {S(i), Z(j)}, {Z(j), S(i)});
      }
    }
    for (int i = 1; i <= n - 2; ++i) {
      t.add("vb7", {S(i), Z(i + 1), Z(i)}, {Z(i + 1), Z(i), S(i + 1)});
    }
    return t.out;
  }

  TableBuilder t{Alphabet::vbB(n), {}};
  braid_b_relations(t, n);
  if (group == RelatorGroup::BraidB) return t.out;

  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) t.add("relWB1", {Z(i), Z(j)}, {Z(j), Z(i)});
  }
  for (int i = 1; i <= n - 2; ++i) {
    t.add("relWB2", {Z(i), Z(i + 1), Z(i)}, {Z(i + 1), Z(i), Z(i + 1)});
  }
  t.add("relWB3", {Z(0), Z(1), Z(0), Z(1)}, {Z(1), Z(0), Z(1), Z(0)});
  for (int i = 0; i < n; ++i) t.add("relWB0", {Z(i), Z(i)}, {});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(i - j) > 1) t.add("relmixB1", {S(i), Z(j)}, {Z(j), S(i)});
    }
  }
  for (int i = 1; i <= n - 2; ++i) {
    t.add("relmixB2", {S(i), Z(i + 1), Z(i)}, {Z(i + 1), Z(i), S(i + 1)});
  }
  t.add("relmixB3", {S(0), Z(1), Z(0), Z(1)}, {Z(1), Z(0), Z(1), S(0)});
  t.add("relmixB4", {Z(0), S(1), Z(0), Z(1)}, {Z(1), Z(0), S(1), Z(0)});
  t.add("relmixB5", {S(0), Z(1), S(0), Z(1)}, {Z(1), S(0), Z(1), S(0)});
  return t.out;
}

FreeAutomorphism word_invariant(const BraidWord& w) {
  const BraidWord& a = w.alphabet.kind == Alphabet::Kind::VbB ? embed_j(w) : w;
  std::vector<VbaLetter> letters;
  letters.reserve(a.letters.size());
  for (const auto& l : a.letters) {
    letters.push_back(l.is_virtual ? VbaLetter{VbaLetter::Kind::Zeta, l.index, 1}
                                   : VbaLetter{VbaLetter::Kind::Sigma, l.index, l.exponent});
  }
  return manturov_image(letters, a.alphabet.lo, a.alphabet.hi);
}

InvariantComparison compare_invariants(const BraidWord& u, const BraidWord& v, bool t1) {
  if (!(u.alphabet == v.alphabet)) throw std::invalid_argument("words over different alphabets");
  FreeAutomorphism fu = word_invariant(u);
  FreeAutomorphism fv = word_invariant(v);
  if (t1) {
    fu = fu.specialize_t1();
    fv = fv.specialize_t1();
  }
  InvariantComparison c;
  c.specialized_t1 = t1;
  c.witness = fu.first_difference(fv);
  c.equal = !c.witness.has_value();
  if (c.witness) {
    c.lhs_image = fu.image(*c.witness);
    c.rhs_image = fv.image(*c.witness);
  }
  return c;
}

std::vector<RelatorCheck> check_relators_via_invariant(RelatorGroup group, int n) {
  std::vector<RelatorCheck> out;
  for (const auto& r : relator_table(group, n)) {
    out.push_back(RelatorCheck{r.label, to_string(r.lhs), to_string(r.rhs),
                               compare_invariants(r.lhs, r.rhs)});
  }
  return out;
}

}  // namespace vbraid
