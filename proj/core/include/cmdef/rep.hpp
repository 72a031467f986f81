#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cmdef/group.hpp"
#include "cmdef/linalg.hpp"
#include "cmdef/poly.hpp"

namespace cmdef {

// Construction tree of a module, kept for audit output.
struct Provenance {
  std::string op;
  std::string detail;
  std::vector<Provenance> args;
};

// Finite-dimensional rational G-module. action(i, j) is the coefficient of
// basis vector i in sigma * e_j, a polynomial in one generic point's coordinates,
// stored reduced modulo the group relations.
class Representation {
 public:
  Representation(GroupPtr group, PolyMatrix action, std::vector<std::string> labels, Provenance prov);

  const GroupPtr& group_ptr() const { return group_; }
  const GroupPresentation& group() const { return *group_; }
  Coeff p() const { return group_->p(); }
  std::size_t dim() const { return action_.rows(); }
  const PolyMatrix& action() const { return action_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Provenance& provenance() const { return prov_; }

  // Action matrix of sigma, resp. sigma^{-1}, with sigma's coordinates in a
  // block of a larger ring.
  PolyMatrix action_at(std::size_t total, std::size_t offset) const;
  PolyMatrix inverse_action_at(std::size_t total, std::size_t offset) const;

  Representation relabeled(std::vector<std::string> labels) const;
  Representation with_provenance(Provenance prov) const;

 private:
  GroupPtr group_;
  PolyMatrix action_;
  std::vector<std::string> labels_;
  Provenance prov_;
};

// Entry-wise normal form modulo a Gröbner basis.
PolyMatrix reduce_entries(const PolyMatrix& m, std::span<const Poly> basis);
bool is_zero_mod(const PolyMatrix& m, std::span<const Poly> basis);
// Products of a polynomial matrix with a constant matrix, in the polynomial ring.
PolyMatrix operator*(const PolyMatrix& a, const GfMatrix& b);
PolyMatrix operator*(const GfMatrix& a, const PolyMatrix& b);
PolyMatrix to_poly_matrix(const GfMatrix& m, std::size_t nvars);

// Which of action(unit) = I and action(sigma tau) = action(sigma) action(tau) fail.
std::vector<std::string> representation_law_failures(const Representation& v);
bool verify_representation(const Representation& v);

Representation natural_module(GroupPtr g);
Representation trivial_module(GroupPtr g, std::size_t dim = 1);
Representation dual(const Representation& v);
Representation direct_sum(const Representation& v, const Representation& w);
Representation direct_sum(std::span<const Representation> parts);
// Basis e_i (x) f_j sits at index i * dim(w) + j.
Representation tensor(const Representation& v, const Representation& w);
// Basis: pure powers e_i^d in index order, then the remaining degree-d monomials
// in decreasing lexicographic order of exponent vectors.
Representation symmetric_power(const Representation& v, unsigned d);
// Exponent vectors of symmetric_power's basis, in basis order.
std::vector<std::vector<unsigned>> symmetric_basis(std::size_t n, unsigned d);

// Subspace of `ambient` spanned by the columns of `inclusion`; the constructor
// verifies full column rank and closure under the action.
class Submodule {
 public:
  Submodule(Representation ambient, GfMatrix inclusion, std::string name = "submodule");

  const Representation& ambient() const { return ambient_; }
  const GfMatrix& inclusion() const { return inclusion_; }
  // Left inverse of the inclusion (reads coordinates of vectors in the subspace).
  const GfMatrix& retraction() const { return retraction_; }
  std::size_t dim() const { return inclusion_.cols(); }
  // The submodule as a module in its own right (action L A I).
  const Representation& module() const { return module_; }

 private:
  Representation ambient_;
  GfMatrix inclusion_;
  GfMatrix retraction_;
  Representation module_;
};

// Span of the p-th powers of basis vectors inside S^p(V), p the characteristic.
Submodule frobenius_power(const Representation& v);

struct Quotient {
  Representation module;
  GfMatrix projection;  // (n - k) x n, kills the submodule
  GfMatrix section;     // n x (n - k), coordinate vectors of the residue basis
  std::vector<std::size_t> coords;
};
// Residue basis = ambient coordinates outside the pivots of the submodule's
// echelon form. Verifies that the projection intertwines.
Quotient quotient_data(const Submodule& w);
Representation quotient(const Submodule& w);

// Linear maps V -> W vanishing on W, realized inside Hom(V, W) = W (x) V*.
// Coordinates: h (k x q matrix, row-major) stands for the map h * projection.
struct Hom0 {
  Representation module;        // equal, after verification, to tensor(W, dual(V/W))
  Representation hom_space;     // tensor(W, dual(V))
  GfMatrix inclusion;           // hom0 coordinates -> Hom(V, W) coordinates
  Quotient quotient;
};
Hom0 hom0(const Submodule& w);

// Cocycle G -> U given by coordinates in K[G] (one generic point).
struct Cocycle {
  Representation target;
  std::vector<Poly> components;
};

// sigma . (v, lambda) = (sigma v + lambda g_sigma, lambda). Throws
// VerificationFailed when the block matrix is not a representation, which is
// exactly a failure of the cocycle identity.
Representation extend_by_cocycle(const Cocycle& g);

Representation restrict(const Representation& v, const GroupHom& h);

// Faithfulness on points: the kernel of the action has only the unit as a
// point over the algebraic closure. Decided by radical membership of each
// coordinate minus its unit value in the ideal of relations and action = I.
// nullopt when the Gröbner computation hits the cap.
std::optional<bool> is_faithful(const Representation& v, const Caps& caps = {});

// Basis of the space of Phi (dim W x dim V) with Phi A_V = A_W Phi.
std::vector<GfMatrix> intertwiner_space(const Representation& v, const Representation& w);
bool is_intertwiner(const GfMatrix& phi, const Representation& v, const Representation& w);
// An invertible intertwiner, searched deterministically through the space.
std::optional<GfMatrix> find_isomorphism(const Representation& v, const Representation& w);

}  // namespace cmdef
