#include "vbraid/freegroup.hpp"

#include "vbraid/scalars.hpp"

#include <cctype>
#include <stdexcept>

namespace vbraid {

FreeWord reduce(const std::vector<FreeLetter>& letters) {
  FreeWord w;
  for (const auto& l : letters) w *= FreeWord::generator(l.symbol, l.exponent);
  return w;
}

FreeWord::FreeWord(std::vector<FreeLetter> letters) { *this = reduce(letters); }

FreeWord FreeWord::generator(FreeSymbol s, int exponent) {
  if (exponent != 1 && exponent != -1) throw std::invalid_argument("exponent must be +-1");
  FreeWord w;
  w.letters_.push_back(FreeLetter{s, exponent});
  return w;
}

FreeWord& FreeWord::operator*=(const FreeWord& o) {
  for (const auto& l : o.letters_) {
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  return *this;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

FreeWord FreeWord::erase_t() const {
  std::vector<FreeLetter> kept;
  for (const auto& l : letters_) {
    if (!l.symbol.is_t) kept.push_back(l);
  }
  return reduce(kept);
}

std::string to_string(const FreeSymbol& s) {
  return s.is_t ? std::string("t") : "a" + std::to_string(s.index);
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += vbraid::to_string(l.symbol);
    if (l.exponent == -1) out += "^-1";
  }
  return out;
}

FreeWord FreeWord::parse(std::string_view text) {
  std::vector<FreeLetter> letters;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "1") return FreeWord();
  while (i < text.size()) {
    FreeSymbol sym;
    if (text[i] == 't') {
      sym = FreeSymbol::t();
      ++i;
    } else if (text[i] == 'a') {
      ++i;
      bool neg = i < text.size() && text[i] == '-';
      if (neg) ++i;
      std::size_t ds = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == ds) throw ParseError("expected generator index", i);
      int idx = std::stoi(std::string(text.substr(ds, i - ds)));
      sym = FreeSymbol::a(neg ? -idx : idx);
    } else {
      throw ParseError(std::string("unknown free generator '") + text[i] + "'", i);
    }
    int e = 1;
    if (text.substr(i, 3) == "^-1") {
      e = -1;
      i += 3;
    } else if (text.substr(i, 2) == "^1") {
      i += 2;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError("unexpected character after generator", i);
    }
    letters.push_back(FreeLetter{sym, e});
    skip();
  }
  return reduce(letters);
}

FreeAutomorphism::FreeAutomorphism(std::vector<FreeSymbol> generators)
    : generators_(std::move(generators)) {
  for (const auto& g : generators_) images_[g] = FreeWord::generator(g);
}

const FreeWord& FreeAutomorphism::image(const FreeSymbol& s) const {
  auto it = images_.find(s);
  if (it == images_.end()) {
    throw std::invalid_argument("generator " + to_string(s) + " not in the domain");
  }
  return it->second;
}

void FreeAutomorphism::set_image(const FreeSymbol& s, FreeWord w) {
  auto it = images_.find(s);
  if (it == images_.end()) {
    throw std::invalid_argument("generator " + to_string(s) + " not in the domain");
  }
  it->second = std::move(w);
}

FreeWord FreeAutomorphism::apply(const FreeWord& w) const {
  FreeWord out;
  for (const auto& l : w.letters()) {
    const FreeWord& im = image(l.symbol);
    out *= (l.exponent == 1) ? im : im.inverse();
  }
  return out;
}

FreeAutomorphism FreeAutomorphism::compose(const FreeAutomorphism& other) const {
  if (generators_ != other.generators_) {
    throw std::invalid_argument("compose: generator sets differ");
  }
  FreeAutomorphism out(generators_);
  for (const auto& g : generators_) out.images_[g] = apply(other.image(g));
  return out;
}

FreeAutomorphism FreeAutomorphism::specialize_t1() const {
  std::vector<FreeSymbol> gens;
  for (const auto& g : generators_) {
    if (!g.is_t) gens.push_back(g);
  }
  FreeAutomorphism out(gens);
  for (const auto& g : gens) out.images_[g] = image(g).erase_t();
  return out;
}

bool FreeAutomorphism::has_t() const {
  for (const auto& g : generators_) {
    if (g.is_t) return true;
  }
  return false;
}

std::optional<FreeSymbol> FreeAutomorphism::first_difference(const FreeAutomorphism& other) const {
  if (generators_ != other.generators_) {
    throw std::invalid_argument("comparing automorphisms of different free groups");
  }
  for (const auto& g : generators_) {
    if (!(image(g) == other.image(g))) return g;
  }
  return std::nullopt;
}

bool auto_equal(const FreeAutomorphism& x, const FreeAutomorphism& y) { return x == y; }

std::vector<FreeSymbol> manturov_generators(int lo, int hi) {
  std::vector<FreeSymbol> gens;
  for (int j = lo; j <= hi + 1; ++j) gens.push_back(FreeSymbol::a(j));
  gens.push_back(FreeSymbol::t());
  return gens;
}

FreeAutomorphism manturov_letter(const VbaLetter& letter, int lo, int hi) {
  int i = letter.index;
  if (i < lo || i > hi) {
    throw std::out_of_range("virtual braid generator index " + std::to_string(i) +
                            " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  FreeAutomorphism f(manturov_generators(lo, hi));
  FreeWord ai = FreeWord::generator(FreeSymbol::a(i));
  FreeWord aj = FreeWord::generator(FreeSymbol::a(i + 1));
  FreeWord t = FreeWord::generator(FreeSymbol::t());
  if (letter.kind == VbaLetter::Kind::Zeta) {
    f.set_image(FreeSymbol::a(i), t * aj * t.inverse());
    f.set_image(FreeSymbol::a(i + 1), t.inverse() * ai * t);
  } else if (letter.exponent == 1) {
    f.set_image(FreeSymbol::a(i), aj);
    f.set_image(FreeSymbol::a(i + 1), aj.inverse() * ai * aj);
  } else {
    f.set_image(FreeSymbol::a(i), ai * aj * ai.inverse());
    f.set_image(FreeSymbol::a(i + 1), ai);
  }
  return f;
}

FreeAutomorphism manturov_image(const std::vector<VbaLetter>& word, int lo, int hi) {
  FreeAutomorphism acc(manturov_generators(lo, hi));
  for (const auto& l : word) acc = acc.compose(manturov_letter(l, lo, hi));
  return acc;
}

}  // namespace vbraid
