#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cmdef/linalg.hpp"
#include "cmdef/poly.hpp"

namespace cmdef {

// Linear system over GF(p) whose equations are polynomial identities: unknown u
// contributes u * coeff_poly, and the system asserts that, for every tag, the
// sum of contributions equals the tag's right-hand side polynomial. One scalar
// equation is produced per (tag, monomial) pair.
class PolySystem {
 public:
  PolySystem(Coeff p, std::size_t unknowns);

  void add(std::size_t unknown, const Poly& coeff_poly, std::uint64_t tag = 0);
  void add_scalar(std::size_t unknown, const Monomial& m, Coeff c, std::uint64_t tag = 0);
  void add_rhs(const Poly& rhs, std::uint64_t tag = 0);

  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return lhs_.size(); }

  SolveResult solve() const;
  std::vector<GfVector> nullspace() const;

 private:
  struct Key {
    std::uint64_t tag;
    Monomial mono;
    bool operator==(const Key& o) const { return tag == o.tag && mono == o.mono; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.mono.hash() * 1000003u ^ k.tag; }
  };
  std::size_t row(std::uint64_t tag, const Monomial& m);

  PrimeField f_;
  std::size_t unknowns_;
  std::unordered_map<Key, std::size_t, KeyHash> index_;
  std::vector<std::vector<std::pair<std::size_t, Coeff>>> lhs_;
  std::vector<Coeff> rhs_;
};

}  // namespace cmdef
