#include "cmdef/polysystem.hpp"

#include "cmdef/errors.hpp"

namespace cmdef {

PolySystem::PolySystem(Coeff p, std::size_t unknowns) : f_(p), unknowns_(unknowns) {}

std::size_t PolySystem::row(std::uint64_t tag, const Monomial& m) {
  auto [it, inserted] = index_.try_emplace(Key{tag, m}, lhs_.size());
  if (inserted) {
    lhs_.emplace_back();
    rhs_.push_back(0);
  }
  return it->second;
}

void PolySystem::add(std::size_t unknown, const Poly& coeff_poly, std::uint64_t tag) {
  if (unknown >= unknowns_) throw InvalidArgument("unknown index out of range");
  if (coeff_poly.p() != f_.p()) throw RingMismatch("polynomial system over another field");
  for (const auto& t : coeff_poly.terms()) lhs_[row(tag, t.mono)].emplace_back(unknown, t.coeff);
}

void PolySystem::add_scalar(std::size_t unknown, const Monomial& m, Coeff c, std::uint64_t tag) {
  if (unknown >= unknowns_) throw InvalidArgument("unknown index out of range");
  if (c % f_.p()) lhs_[row(tag, m)].emplace_back(unknown, c % f_.p());
}

void PolySystem::add_rhs(const Poly& rhs, std::uint64_t tag) {
  if (rhs.p() != f_.p()) throw RingMismatch("polynomial system over another field");
  for (const auto& t : rhs.terms()) {
    std::size_t r = row(tag, t.mono);
    rhs_[r] = f_.add(rhs_[r], t.coeff);
  }
}

SolveResult PolySystem::solve() const {
  SparseSystem sys(f_.p(), unknowns_);
  for (std::size_t r = 0; r < lhs_.size(); ++r) sys.add_equation(lhs_[r], rhs_[r]);
  return sys.solve();
}

std::vector<GfVector> PolySystem::nullspace() const {
  SparseSystem sys(f_.p(), unknowns_);
  for (std::size_t r = 0; r < lhs_.size(); ++r) sys.add_equation(lhs_[r], 0);
  return sys.nullspace();
}

}  // namespace cmdef
