#pragma once

// Bounded cochain complexes of bimodules, the Rouquier-type functor F on
// words of VB_{B_n}, and exact verification of chain maps and homotopies.

#include "vbraid/bimodule.hpp"
#include "vbraid/maps.hpp"
#include "vbraid/words.hpp"

#include <map>
#include <optional>
#include <string>

namespace vbraid {

struct Complex {
  int n = 0;
  std::string label;
  std::map<int, BimodulePtr> objects;     // nonzero objects only
  std::map<int, PolyMatrix> differentials;  // d^k : objects[k] -> objects[k+1]

  /// Object in degree k; a rank-0 bimodule outside the support.
  const Bimodule& object(int k) const;
  std::size_t rank(int k) const;
  /// d^k, or a zero matrix of the right shape.
  PolyMatrix differential(int k) const;
  /// Degrees carrying nonzero objects, ascending.
  std::vector<int> support() const;
};

Complex F_unit(int n);
/// s_i: R{2} -> B_{s_i} in degrees -1, 0; s_i^-1: B_{s_i}{-2} -> R{-2} in
/// degrees 0, 1; z_i: R_{s_i} in degree 0.
Complex F_letter(const BraidLetter& letter, int n);
/// Total complex with d(x (x) y) = dx (x) y + (-1)^p x (x) dy.
Complex tensor_complex(const Complex& c, const Complex& d);
/// F(l_1) (x) ... (x) F(l_k), folded from the left; F(1) for the empty word.
Complex F_word(const BraidWord& w);

/// Zero matrix of shape target(k) x source(k).
PolyMatrix zero_map(const Complex& source, int source_degree, const Complex& target,
                    int target_degree);
/// Component of a graded family, or zero when it is absent.
PolyMatrix component(const DegreeMaps& f, int k, const Complex& source, int source_degree,
                     const Complex& target, int target_degree);

DegreeMaps identity_maps(const Complex& c);
/// (g o f)_k = g_k f_k for degree-0 families f : A -> B, g : B -> C.
DegreeMaps compose(const Complex& a, const Complex& b, const Complex& c, const DegreeMaps& g,
                   const DegreeMaps& f);
/// Chain-map defect f_{k+1} d_C - d_D f_k, keyed by k.
DegreeMaps chain_defect(const Complex& c, const Complex& d, const DegreeMaps& f);
/// d_D h_k + h_{k+1} d_C for h_k : C^k -> D^{k-1}, keyed by k.
DegreeMaps boundary(const Complex& c, const Complex& d, const DegreeMaps& h);

Check verify_complex(const Complex& c);
Check verify_chain_map(const Complex& c, const Complex& d, const DegreeMaps& f);
Check verify_chain_iso(const Complex& c, const Complex& d, const DegreeMaps& f,
                       const DegreeMaps& g);

struct HomotopyCertificate {
  DegreeMaps f;         // C -> D
  DegreeMaps g;         // D -> C
  DegreeMaps h_source;  // C^k -> C^{k-1}
  DegreeMaps h_target;  // D^k -> D^{k-1}
};

/// id_C - g f = d h_C + h_C d and id_D - f g = d h_D + h_D d, plus all
/// components being bimodule maps and f, g chain maps.
Check verify_homotopy(const Complex& c, const Complex& d, const HomotopyCertificate& cert);

}  // namespace vbraid
