#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cmdef/groebner.hpp"
#include "cmdef/rep.hpp"

namespace cmdef {

using Multidegree = std::vector<unsigned>;

// K[V] = GF(p)[x0..x{n-1}] for a module V of dimension n, x_i the coordinate
// functions of V's basis, with the action sigma.f = f o sigma^{-1}.
//
// Elements that depend on sigma live in the combined ring whose first m
// variables are sigma's coordinates and whose last n are x0..x{n-1}.
//
// Variables are grouped into blocks (connected components of the action's
// support); the action preserves the induced multigrading, so every linear
// problem splits by multidegree.
class CoordinateRing {
 public:
  explicit CoordinateRing(Representation v);

  const Representation& module() const { return v_; }
  const GroupPresentation& group() const { return v_.group(); }
  Coeff p() const { return v_.p(); }
  std::size_t nvars() const { return n_; }
  std::size_t group_vars() const { return m_; }
  std::size_t total() const { return m_ + n_; }

  // sigma.x_i in the combined ring.
  const std::vector<Poly>& coordinate_images() const { return images_; }
  // Relations of sigma's block inside the combined ring.
  const std::vector<Poly>& relations() const { return rel_; }

  // K[V] element -> combined ring (x_i -> variable m + i).
  Poly lift(const Poly& f) const;
  // Combined-ring element free of group variables -> K[V].
  Poly lower(const Poly& f) const;
  Poly reduce(const Poly& f) const;

  // sigma.f, reduced modulo relations. Monomial images are memoized.
  Poly act(const Poly& f) const;
  Poly act_minus_id(const Poly& f) const;
  bool is_invariant(const Poly& f) const;

  std::size_t nblocks() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t var) const { return block_of_[var]; }
  // Multidegree of a monomial in K[V], or of the x-part of a combined monomial.
  Multidegree multidegree(const Monomial& m, bool combined = false) const;
  // Distinct multidegrees occurring in f (K[V] or combined ring).
  std::vector<Multidegree> multidegrees_of(const Poly& f, bool combined = false) const;
  // Part of f of the given multidegree.
  Poly multihomogeneous_part(const Poly& f, const Multidegree& md, bool combined = false) const;
  // All multidegrees of total degree d, in decreasing lexicographic order.
  std::vector<Multidegree> multidegrees(unsigned d) const;
  // Monomials of K[V] of a given multidegree, in decreasing grevlex order.
  std::vector<Monomial> monomials(const Multidegree& md) const;
  std::size_t count_monomials(const Multidegree& md) const;

  // Write-once memo for per-multidegree results computed elsewhere.
  std::optional<std::vector<Poly>> memo_get(int kind, const Multidegree& md) const;
  void memo_put(int kind, const Multidegree& md, const std::vector<Poly>& value) const;

 private:
  Poly act_monomial(const Monomial& m) const;

  Representation v_;
  std::size_t m_, n_;
  std::vector<Poly> images_;
  std::vector<Poly> rel_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;

  mutable std::mutex mu_;
  mutable std::unordered_map<Monomial, Poly, MonomialHash> act_memo_;
  mutable std::map<std::pair<int, Multidegree>, std::vector<Poly>> memo_;
};

using RingPtr = std::shared_ptr<const CoordinateRing>;
RingPtr make_ring(Representation v);

}  // namespace cmdef
