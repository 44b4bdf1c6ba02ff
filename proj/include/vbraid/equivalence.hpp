#pragma once

// Search for chain isomorphisms and homotopy equivalences between complexes
// of bimodules, by exact linear algebra on finite-dimensional Hom spaces.

#include "vbraid/complex.hpp"

#include <optional>
#include <vector>

namespace vbraid {

/// Basis of degree-0 bimodule-map families C^k -> D^{k+offset}, each with a
/// single nonzero component.
std::vector<DegreeMaps> hom_family_basis(const Complex& c, const Complex& d, int offset);

/// Basis of the space of degree-0 chain maps C -> D.
std::vector<DegreeMaps> chain_map_basis(const Complex& c, const Complex& d);

struct ChainIso {
  DegreeMaps forward;
  DegreeMaps inverse;
};

/// First chain map (basis elements in solver order, then fixed combinations)
/// that is invertible in every degree; empty when none is.
std::optional<ChainIso> find_chain_iso(const Complex& c, const Complex& d);

/// Verified homotopy equivalence, or empty. Complexes with more than
/// degree_bound nonzero objects are not searched.
std::optional<HomotopyCertificate> find_homotopy_equiv(const Complex& c, const Complex& d,
                                                       int degree_bound = 8);

}  // namespace vbraid
