#pragma once

// Explicit bimodule isomorphisms: R_w (x) B_t ~ B_{wtw^-1} (x) R_w, the maps
// phi : B_{s0} B_{s1s0s1} -> B_{s1s0s1} B_{s0} and psi : B_{s1} B_{s0s1s0} ->
// B_{s0s1s0} B_{s1}, and the chain maps built from them.

#include "vbraid/complex.hpp"

#include <string>
#include <vector>

namespace vbraid {

struct BimoduleIso {
  Bimodule source;
  Bimodule target;
  PolyMatrix forward;
  PolyMatrix inverse;
};

/// Shortest palindromic word u s_i u^-1 (|u| <= 3) acting like w, or w itself.
CoxeterWord short_reflection_word(const CoxeterWord& w, int n);

/// a (x) b -> a (x) w(b); the conjugate reflection is spelled by
/// short_reflection_word. Throws if the map fails to be an invertible bimodule map.
BimoduleIso iso_swap_Rw(const CoxeterWord& w, const CoxeterWord& t, int n);

/// Coordinates in L (x) N of 1 (x) p (x) 1, i.e. (first basis vector of L) * p
/// tensored with the first basis vector of N.
std::vector<Poly> middle_element(const Bimodule& l, const Bimodule& n, const Poly& p);
/// p (x) 1 (x) 1 and 1 (x) 1 (x) p in a two-factor tensor product.
std::vector<Poly> left_element(const Bimodule& m, const Poly& p);
std::vector<Poly> right_element(const Bimodule& m, const Poly& p);

struct NamedCheck {
  std::string name;
  Check result;
};

struct SpecialIso {
  BimoduleIso iso;
  std::vector<NamedCheck> checks;  // all must pass

  bool all_pass() const;
};

/// Built from phi(1(x)1(x)1) = 1(x)1(x)1 and phi(1(x)X0(x)1) = 1(x)1(x)X0 by
/// right linearity; needs n >= 3.
SpecialIso phi(int n);
/// The degree-0 isomorphism found by the solver, normalized to fix 1(x)1(x)1; needs n >= 3.
SpecialIso psi(int n);

/// (id, mu) : F(z1 z0 z1 s0) -> F(s0 z1 z0 z1).
DegreeMaps mu_chain_map(int n);
/// Chain map F(s0 z1 s0 z1) -> F(z1 s0 z1 s0) with -id in degree -2, the
/// summand swap in degree -1 and phi conjugated by swaps in degree 0 (n >= 3).
DegreeMaps relmixB5_chain_map(int n);

}  // namespace vbraid
