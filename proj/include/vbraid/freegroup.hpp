#pragma once

// Free groups on a_j (j in a contiguous index range) and t, their
// endomorphisms, and Manturov's invariant of virtual braids.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vbraid {

/// Generator symbol: a_index, or t when is_t is set.
struct FreeSymbol {
  bool is_t = false;
  int index = 0;

  static FreeSymbol a(int j) { return FreeSymbol{false, j}; }
  static FreeSymbol t() { return FreeSymbol{true, 0}; }

  friend auto operator<=>(const FreeSymbol&, const FreeSymbol&) = default;
};

struct FreeLetter {
  FreeSymbol symbol;
  int exponent = 1;  // +1 or -1

  FreeLetter inverse() const { return FreeLetter{symbol, -exponent}; }
  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

/// Always freely reduced.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<FreeLetter> letters);
  static FreeWord generator(FreeSymbol s, int exponent = 1);
  static FreeWord parse(std::string_view text);

  const std::vector<FreeLetter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  /// Deletes every t-letter, then reduces.
  FreeWord erase_t() const;
  /// Space separated, e.g. "a1 a2^-1 t a-1"; "1" for the empty word.
  std::string to_string() const;

  FreeWord& operator*=(const FreeWord& o);
  friend FreeWord operator*(FreeWord x, const FreeWord& y) { return x *= y; }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<FreeLetter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
FreeWord reduce(const std::vector<FreeLetter>& letters);

std::string to_string(const FreeSymbol& s);

/// Endomorphism given by generator images; generators absent from the map are fixed.
class FreeAutomorphism {
 public:
  FreeAutomorphism() = default;
  explicit FreeAutomorphism(std::vector<FreeSymbol> generators);

  const std::vector<FreeSymbol>& generators() const { return generators_; }
  const FreeWord& image(const FreeSymbol& s) const;
  void set_image(const FreeSymbol& s, FreeWord w);

  /// Throws std::invalid_argument on a symbol outside the generating set.
  FreeWord apply(const FreeWord& w) const;
  /// (this o other)(g) = this(other(g)).
  FreeAutomorphism compose(const FreeAutomorphism& other) const;
  FreeAutomorphism specialize_t1() const;
  bool has_t() const;

  /// First generator (in generator order) whose images differ.
  std::optional<FreeSymbol> first_difference(const FreeAutomorphism& other) const;
  friend bool operator==(const FreeAutomorphism& x, const FreeAutomorphism& y) {
    return x.generators_ == y.generators_ && !x.first_difference(y).has_value();
  }

 private:
  std::vector<FreeSymbol> generators_;
  std::map<FreeSymbol, FreeWord> images_;
};

bool auto_equal(const FreeAutomorphism& x, const FreeAutomorphism& y);

/// Letter of a type-A virtual braid word: sigma_i^{+-1} or zeta_i.
struct VbaLetter {
  enum class Kind { Sigma, Zeta };
  Kind kind = Kind::Sigma;
  int index = 0;
  int exponent = 1;  // zeta letters always carry +1

  friend bool operator==(const VbaLetter&, const VbaLetter&) = default;
};

/// Generators a_lo .. a_{hi+1}, t of the free group on which the letters
/// sigma_i, zeta_i with lo <= i <= hi act.
std::vector<FreeSymbol> manturov_generators(int lo, int hi);

FreeAutomorphism manturov_letter(const VbaLetter& letter, int lo, int hi);

/// Image of the word l_1 l_2 ... l_k as f(l_1) o f(l_2) o ... o f(l_k).
FreeAutomorphism manturov_image(const std::vector<VbaLetter>& word, int lo, int hi);

}  // namespace vbraid
