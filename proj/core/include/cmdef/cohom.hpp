#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cmdef/action.hpp"
#include "cmdef/linalg.hpp"
#include "cmdef/rep.hpp"

namespace cmdef {

// Cocycle with values in K[V]_d: one polynomial in the combined ring
// [sigma coordinates][x0..x{n-1}], homogeneous of degree d in the x variables.
struct GradedCocycle {
  RingPtr ring;
  unsigned degree = 0;
  Poly poly;
};

// g_e = 0 and g_{sigma tau} = sigma g_tau + g_sigma, with two generic points.
std::vector<std::string> cocycle_law_failures(const Cocycle& g);
std::vector<std::string> cocycle_law_failures(const GradedCocycle& g);
bool verify_cocycle(const Cocycle& g);
bool verify_cocycle(const GradedCocycle& g);

// sigma -> (sigma - 1) w.
Cocycle coboundary(const Representation& u, const GfVector& w);
GradedCocycle coboundary(const RingPtr& ring, const Poly& f);

struct CoboundaryResult {
  std::optional<GfVector> witness;
  SolveResult evidence;
};
// Exact solve of (A(sigma) - 1) w = g_sigma over all K[G] monomials.
CoboundaryResult is_coboundary(const Cocycle& g);

struct ComponentEvidence {
  Multidegree multidegree;
  SolveResult evidence;
};
struct GradedCoboundaryResult {
  std::optional<Poly> witness;  // f in K[V]_d with sigma.f - f = g_sigma
  std::vector<ComponentEvidence> components;
};
// Solved one multidegree at a time; g is a coboundary iff every component is.
GradedCoboundaryResult is_coboundary(const GradedCocycle& g, const Caps& caps = {});

struct ProjectionCocycle {
  Hom0 hom;
  GfMatrix iota;
  Cocycle cocycle;  // values in hom.module
};
// g_sigma = sigma.iota - iota for a retraction iota: V -> W (iota restricted to
// W is the identity). Defaults to the submodule's own retraction.
ProjectionCocycle cocycle_from_projection(const Submodule& w, std::optional<GfMatrix> iota = std::nullopt);

// U realized inside K[V]_d: E(u_j) = embedding[j], and P_i(f) = sum over
// monomials of coeff(projection[i], mu) * coeff(f, mu). Both must intertwine
// and P o E = id.
struct SummandWitness {
  std::vector<Poly> embedding;
  std::vector<Poly> projection;
};
std::vector<std::string> summand_failures(const Representation& u, const CoordinateRing& ring,
                                          const SummandWitness& w);
// Searches Hom_G(U, K[V]_md) for an embedding that admits an equivariant
// projection. Deterministic.
std::optional<SummandWitness> find_summand(const Representation& u, const CoordinateRing& ring,
                                           const Multidegree& md, const Caps& caps = {});
GradedCocycle embed_in_coordinate_ring(const Cocycle& g, const RingPtr& ring, const SummandWitness& w);

// (a g)_sigma = a g_sigma for an invariant a.
GradedCocycle multiply_invariant(const Poly& a, const GradedCocycle& g);

struct AnnihilatorResult {
  std::optional<Poly> b;  // a g_sigma = sigma.b - b
  std::vector<ComponentEvidence> components;
};
AnnihilatorResult annihilator_witness(const Poly& a, const GradedCocycle& g, const Caps& caps = {});

struct AnnihilatorSpace {
  std::vector<Poly> basis;
  std::size_t candidates = 0;
};
// Span of the candidate invariants a with a g = 0 in H^1.
AnnihilatorSpace annihilator_space(const GradedCocycle& g, std::span<const Poly> candidates, const Caps& caps = {});
// Candidates = the full degree-d invariant slice.
AnnihilatorSpace annihilator_space(const GradedCocycle& g, unsigned d, const Caps& caps = {});

// Splits a combined-ring polynomial by its x-monomial; the coefficient keeps
// only group variables (still in the combined ring).
std::vector<std::pair<Monomial, Poly>> split_by_x(const CoordinateRing& ring, const Poly& f);

}  // namespace cmdef
