#include "cmdef/invariants.hpp"

#include "cmdef/errors.hpp"
#include "cmdef/polysystem.hpp"

namespace cmdef {

namespace {

constexpr int kSliceMemo = 1;

unsigned total_of(const Multidegree& md) {
  unsigned d = 0;
  for (auto e : md) d += e;
  return d;
}

}  // namespace

InvariantSlice invariant_slice(const CoordinateRing& ring, const Multidegree& md, const Caps& caps) {
  InvariantSlice out;
  out.degree = total_of(md);
  out.multidegree = md;
  if (auto hit = ring.memo_get(kSliceMemo, md)) {
    out.basis = std::move(*hit);
    return out;
  }
  if (out.degree > caps.max_degree)
    throw ResourceCapExceeded("invariant slice of degree " + std::to_string(out.degree));
  if (ring.count_monomials(md) > caps.max_basis)
    throw ResourceCapExceeded("invariant slice with " + std::to_string(ring.count_monomials(md)) + " unknowns");
  const auto monos = ring.monomials(md);
  const Coeff p = ring.p();
  const std::size_t n = ring.nvars();
  PolySystem sys(p, monos.size());
  for (std::size_t k = 0; k < monos.size(); ++k)
    sys.add(k, ring.act_minus_id(Poly::monomial(p, n, monos[k])));
  for (const auto& v : sys.nullspace()) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (v[k]) terms.push_back({monos[k], v[k]});
    Poly f = Poly::from_terms(p, n, std::move(terms));
    if (!ring.is_invariant(f)) throw VerificationFailed("invariant slice element fails re-verification");
    out.basis.push_back(std::move(f));
  }
  ring.memo_put(kSliceMemo, md, out.basis);
  return out;
}

InvariantSlice invariant_slice(const CoordinateRing& ring, unsigned d, const Caps& caps) {
  InvariantSlice out;
  out.degree = d;
  for (const auto& md : ring.multidegrees(d)) {
    auto part = invariant_slice(ring, md, caps);
    out.basis.insert(out.basis.end(), part.basis.begin(), part.basis.end());
  }
  return out;
}

InvariantSlice invariant_slice(const Representation& v, unsigned d, const Caps& caps) {
  CoordinateRing ring(v);
  return invariant_slice(ring, d, caps);
}

std::vector<std::size_t> hilbert_function(const CoordinateRing& ring, unsigned max_degree, const Caps& caps) {
  std::vector<std::size_t> out;
  for (unsigned d = 0; d <= max_degree; ++d) out.push_back(invariant_slice(ring, d, caps).basis.size());
  return out;
}

MembershipResult subring_membership(const Poly& m, std::span<const Poly> gens, const CoordinateRing& ring,
                                    const Caps& caps) {
  const Coeff p = ring.p();
  const std::size_t n = ring.nvars();
  if (m.p() != p || m.nvars() != n) throw RingMismatch("membership: m not in K[V]");
  if (!m.is_zero() && !m.is_homogeneous()) throw InvalidArgument("membership: m must be homogeneous");
  if (!ring.is_invariant(m)) throw InvalidArgument("membership: m is not invariant");
  for (const auto& a : gens) {
    if (a.p() != p || a.nvars() != n) throw RingMismatch("membership: generator not in K[V]");
    if (!a.is_zero() && !a.is_homogeneous()) throw InvalidArgument("membership: generators must be homogeneous");
    if (!ring.is_invariant(a)) throw InvalidArgument("membership: generator is not invariant");
  }
  MembershipResult res;
  if (m.is_zero()) {
    res.coefficients = std::vector<Poly>(gens.size(), Poly(p, n));
    return res;
  }
  const int big = m.total_degree();
  auto m_degrees = ring.multidegrees_of(m);

  // Candidate multipliers per generator.
  std::vector<std::vector<Poly>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& a = gens[i];
    if (a.is_zero() || a.total_degree() > big) continue;
    const unsigned e = static_cast<unsigned>(big - a.total_degree());
    auto a_degrees = ring.multidegrees_of(a);
    if (m_degrees.size() == 1 && a_degrees.size() == 1) {
      // Only the matching multidegree of f_i can reach m.
      Multidegree md = m_degrees[0];
      bool ok = true;
      for (std::size_t b = 0; b < md.size(); ++b) {
        if (md[b] < a_degrees[0][b]) ok = false;
        else md[b] -= a_degrees[0][b];
      }
      if (ok) cands[i] = invariant_slice(ring, md, caps).basis;
    } else {
      cands[i] = invariant_slice(ring, e, caps).basis;
    }
  }
  std::size_t unknowns = 0;
  for (const auto& c : cands) unknowns += c.size();
  if (unknowns > caps.max_basis) throw ResourceCapExceeded("membership system with " + std::to_string(unknowns) + " unknowns");
  PolySystem sys(p, unknowns);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (const auto& s : cands[i]) sys.add(idx++, s * gens[i]);
  sys.add_rhs(m);
  res.evidence = sys.solve();
  if (!res.evidence.solution) return res;

  std::vector<Poly> coeffs;
  Poly check(p, n);
  idx = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Poly f(p, n);
    for (const auto& s : cands[i]) {
      Coeff c = (*res.evidence.solution)[idx++];
      if (c) f.add_scaled(s, c, Monomial());
    }
    check += f * gens[i];
    coeffs.push_back(std::move(f));
  }
  if (!(check == m)) throw VerificationFailed("membership witness fails re-verification");
  res.coefficients = std::move(coeffs);
  return res;
}

bool ambient_membership(const Poly& m, std::span<const Poly> gens, const Caps& caps) {
  std::vector<Poly> g(gens.begin(), gens.end());
  auto basis = groebner(m.p(), m.nvars(), std::move(g), caps);
  return normal_form(m, basis).is_zero();
}

}  // namespace cmdef
