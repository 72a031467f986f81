#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "cmdef/groebner.hpp"
#include "cmdef/poly.hpp"

namespace cmdef {

// An affine algebraic group given by its coordinate ring GF(p)[x0..x{n-1}]/I
// together with polynomial multiplication and inversion maps.
//
// Multiplication polynomials live in 2n variables: the first n are the
// coordinates of sigma, the next n those of tau; mult[i] is coordinate i of
// sigma*tau. Inversion and the natural matrix live in n variables.
class GroupPresentation {
 public:
  struct Data {
    std::string name;
    Coeff p = 2;
    std::vector<std::string> coord_names;
    std::vector<Poly> relations;
    std::vector<Coeff> unit;
    std::vector<Poly> mult;
    std::vector<Poly> inv;
    PolyMatrix natural{0, 0, 2, 0};
    bool reductive = false;
    bool torus = false;
  };

  // Validates ring shapes and computes the reduced Gröbner basis of the
  // relations. Group laws are not checked here; see verify_group_laws.
  explicit GroupPresentation(Data data);

  const std::string& name() const { return d_.name; }
  Coeff p() const { return d_.p; }
  std::size_t ncoords() const { return d_.coord_names.size(); }
  const std::vector<std::string>& coord_names() const { return d_.coord_names; }
  const std::vector<Poly>& relations() const { return d_.relations; }
  const std::vector<Poly>& relation_basis() const { return basis_; }
  const std::vector<Coeff>& unit() const { return d_.unit; }
  const std::vector<Poly>& mult() const { return d_.mult; }
  const std::vector<Poly>& inv() const { return d_.inv; }
  const PolyMatrix& natural() const { return d_.natural; }
  bool reductive() const { return d_.reductive; }
  bool torus() const { return d_.torus; }
  const Data& data() const { return d_; }

  // Generic point helpers. A ring of `total` variables holds several blocks
  // of group coordinates; `offset` selects the block.
  std::vector<Poly> point(std::size_t total, std::size_t offset) const;
  std::vector<Poly> relations_at(std::size_t total, std::size_t offset) const;
  std::vector<Poly> inv_at(std::size_t total, std::size_t offset) const;
  std::vector<Poly> mult_at(std::size_t total, std::size_t sigma, std::size_t tau) const;
  // Moves a polynomial in the coordinates (ring of ncoords variables) into a block.
  Poly place(const Poly& f, std::size_t total, std::size_t offset) const;
  PolyMatrix place(const PolyMatrix& m, std::size_t total, std::size_t offset) const;

  friend bool operator==(const GroupPresentation& a, const GroupPresentation& b);

 private:
  Data d_;
  std::vector<Poly> basis_;
};

using GroupPtr = std::shared_ptr<const GroupPresentation>;

// SL2, Ga or Gm over GF(p). Throws InvalidArgument on unknown name or non-prime p.
GroupPtr builtin_group(const std::string& name, Coeff p);

// Evaluates f at a point of GF(p)^nvars.
Coeff evaluate(const Poly& f, std::span<const Coeff> point);

// Union of relation bases over several coordinate blocks. Because the blocks
// use disjoint variables this union is again a Gröbner basis.
std::vector<Poly> block_relations(const GroupPresentation& g, std::size_t total,
                                  std::span<const std::size_t> offsets);

// Names of the failed group laws; empty when every law holds symbolically.
std::vector<std::string> group_law_failures(const GroupPresentation& g);
bool verify_group_laws(const GroupPresentation& g);

// Morphism H -> G given by G's coordinates as polynomials in H's coordinates.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Poly> coord_map;
};

// Checks that relations pull back into H's ideal and that unit, multiplication
// and inversion commute with the map. Throws VerificationFailed naming the law.
GroupHom homomorphism(GroupPtr source, GroupPtr target, std::vector<Poly> coord_map);
// first: H -> G, second: G -> F; returns the verified H -> F.
GroupHom compose(const GroupHom& first, const GroupHom& second);
GroupHom identity_hom(GroupPtr g);

}  // namespace cmdef
