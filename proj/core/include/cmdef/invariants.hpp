#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cmdef/action.hpp"
#include "cmdef/linalg.hpp"

namespace cmdef {

struct InvariantSlice {
  unsigned degree = 0;
  // Set for a single multidegree; empty for a full total-degree slice.
  Multidegree multidegree;
  // Homogeneous invariants in K[V], linearly independent. Within one
  // multidegree this is the canonical nullspace basis (one vector per free
  // monomial in decreasing grevlex order); total-degree slices concatenate
  // the multidegree slices in decreasing lexicographic multidegree order.
  std::vector<Poly> basis;
};

InvariantSlice invariant_slice(const CoordinateRing& ring, const Multidegree& md, const Caps& caps = {});
InvariantSlice invariant_slice(const CoordinateRing& ring, unsigned d, const Caps& caps = {});
InvariantSlice invariant_slice(const Representation& v, unsigned d, const Caps& caps = {});

// dim K[V]^G_d for d = 0..max_degree.
std::vector<std::size_t> hilbert_function(const CoordinateRing& ring, unsigned max_degree, const Caps& caps = {});

struct MembershipResult {
  // f_i with m = sum f_i a_i, each f_i an invariant; set iff m is in the ideal
  // of the invariant ring generated by the a_i.
  std::optional<std::vector<Poly>> coefficients;
  SolveResult evidence;
};

// Membership of a homogeneous invariant m in (a_1..a_k) K[V]^G, decided in the
// degree of m by exact linear algebra over the invariant slices.
MembershipResult subring_membership(const Poly& m, std::span<const Poly> gens, const CoordinateRing& ring,
                                    const Caps& caps = {});

// Membership in the ideal (a_1..a_k) of the full polynomial ring K[V].
bool ambient_membership(const Poly& m, std::span<const Poly> gens, const Caps& caps = {});

}  // namespace cmdef
