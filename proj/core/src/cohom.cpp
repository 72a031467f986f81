#include "cmdef/cohom.hpp"

#include <map>
#include <random>

#include "cmdef/errors.hpp"
#include "cmdef/invariants.hpp"
#include "cmdef/polysystem.hpp"

namespace cmdef {

namespace {

void check_module_cocycle(const Cocycle& g) {
  const auto& u = g.target;
  if (g.components.size() != u.dim()) throw InvalidArgument("cocycle has wrong number of components");
  for (const auto& c : g.components)
    if (c.p() != u.p() || c.nvars() != u.group().ncoords())
      throw RingMismatch("cocycle component outside the group's coordinate ring");
}

void check_graded(const GradedCocycle& g) {
  if (!g.ring) throw InvalidArgument("graded cocycle without a ring");
  if (g.poly.p() != g.ring->p() || g.poly.nvars() != g.ring->total())
    throw RingMismatch("graded cocycle outside the combined ring");
  const std::size_t m = g.ring->group_vars();
  for (const auto& t : g.poly.terms()) {
    unsigned d = 0;
    for (std::size_t i = 0; i < g.ring->nvars(); ++i) d += t.mono[m + i];
    if (d != g.degree) throw InvalidArgument("graded cocycle is not homogeneous of its declared degree");
  }
}

void check_caps(std::size_t unknowns, const Caps& caps, const char* what) {
  if (unknowns > caps.max_basis)
    throw ResourceCapExceeded(std::string(what) + " with " + std::to_string(unknowns) + " unknowns");
}

}  // namespace

std::vector<std::pair<Monomial, Poly>> split_by_x(const CoordinateRing& ring, const Poly& f) {
  const std::size_t m = ring.group_vars();
  std::map<Monomial, std::vector<Term>, GrevlexGreater> parts;
  for (const auto& t : f.terms()) {
    Monomial x, gpart;
    for (std::size_t i = 0; i < m; ++i) gpart.set(i, t.mono[i]);
    for (std::size_t i = 0; i < ring.nvars(); ++i) x.set(i, t.mono[m + i]);
    parts[x].push_back({gpart, t.coeff});
  }
  std::vector<std::pair<Monomial, Poly>> out;
  for (auto& [x, terms] : parts) out.emplace_back(x, Poly::from_terms(f.p(), f.nvars(), std::move(terms)));
  return out;
}

std::vector<std::string> cocycle_law_failures(const Cocycle& g) {
  check_module_cocycle(g);
  const auto& u = g.target;
  const auto& grp = u.group();
  const std::size_t m = grp.ncoords(), n = u.dim(), total = 2 * m;
  const Coeff p = u.p();
  std::vector<std::string> out;

  std::vector<Poly> unit;
  for (auto c : grp.unit()) unit.push_back(Poly::constant(p, 1, c));
  for (const auto& c : g.components)
    if (!c.substitute(unit, 1).is_zero()) {
      out.push_back("cocycle nonzero at unit");
      break;
    }

  const std::size_t offs[] = {0, m};
  auto rel = block_relations(grp, total, offs);
  auto prod = grp.mult_at(total, 0, m);
  PolyMatrix a = u.action_at(total, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Poly e = g.components[i].substitute(prod, total) - grp.place(g.components[i], total, 0);
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) e -= a(i, j) * grp.place(g.components[j], total, m);
    if (!normal_form(e, rel).is_zero()) {
      out.push_back("cocycle identity");
      break;
    }
  }
  return out;
}

std::vector<std::string> cocycle_law_failures(const GradedCocycle& g) {
  check_graded(g);
  const auto& ring = *g.ring;
  const auto& grp = ring.group();
  const std::size_t m = ring.group_vars(), n = ring.nvars(), big = 2 * m + n;
  const Coeff p = ring.p();
  std::vector<std::string> out;

  std::vector<Poly> at_unit;
  for (auto c : grp.unit()) at_unit.push_back(Poly::constant(p, n, c));
  for (std::size_t i = 0; i < n; ++i) at_unit.push_back(Poly::variable(p, n, i));
  if (!g.poly.substitute(at_unit, n).is_zero()) out.push_back("cocycle nonzero at unit");

  // [sigma][tau][x]
  std::vector<std::size_t> sig_map(m + n), tau_map(m + n);
  for (std::size_t i = 0; i < m; ++i) sig_map[i] = i, tau_map[i] = m + i;
  for (std::size_t j = 0; j < n; ++j) sig_map[m + j] = tau_map[m + j] = 2 * m + j;

  std::vector<Poly> prod_images = grp.mult_at(big, 0, m);
  for (std::size_t j = 0; j < n; ++j) prod_images.push_back(Poly::variable(p, big, 2 * m + j));
  Poly e = g.poly.substitute(prod_images, big) - g.poly.remap(big, sig_map);

  // sigma . g_tau, through the memoized action on x-monomials.
  for (const auto& [x, coeff] : split_by_x(ring, g.poly)) {
    Poly moved = ring.act(Poly::monomial(p, n, x)).remap(big, sig_map);
    e -= coeff.remap(big, tau_map) * moved;
  }
  const std::size_t offs[] = {0, m};
  if (!normal_form(e, block_relations(grp, big, offs)).is_zero()) out.push_back("cocycle identity");
  return out;
}

bool verify_cocycle(const Cocycle& g) { return cocycle_law_failures(g).empty(); }
bool verify_cocycle(const GradedCocycle& g) { return cocycle_law_failures(g).empty(); }

Cocycle coboundary(const Representation& u, const GfVector& w) {
  if (w.size() != u.dim()) throw InvalidArgument("coboundary: vector has wrong length");
  const std::size_t m = u.group().ncoords();
  Cocycle g{u, {}};
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Poly c = -Poly::constant(u.p(), m, w[i]);
    for (std::size_t j = 0; j < u.dim(); ++j)
      if (w[j]) c.add_scaled(u.action()(i, j), w[j], Monomial());
    g.components.push_back(std::move(c));
  }
  return g;
}

GradedCocycle coboundary(const RingPtr& ring, const Poly& f) {
  if (!f.is_zero() && !f.is_homogeneous()) throw InvalidArgument("coboundary: f must be homogeneous");
  unsigned d = f.is_zero() ? 0 : static_cast<unsigned>(f.total_degree());
  return {ring, d, ring->act_minus_id(f)};
}

CoboundaryResult is_coboundary(const Cocycle& g) {
  check_module_cocycle(g);
  const auto& u = g.target;
  const std::size_t n = u.dim(), m = u.group().ncoords();
  const Coeff p = u.p();
  PolySystem sys(p, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly c = u.action()(i, j);
      if (i == j) c -= Poly::constant(p, m, 1);
      if (!c.is_zero()) sys.add(j, c, i);
    }
    sys.add_rhs(normal_form(g.components[i], u.group().relation_basis()), i);
  }
  CoboundaryResult res;
  res.evidence = sys.solve();
  if (!res.evidence.solution) return res;
  auto check = coboundary(u, *res.evidence.solution);
  for (std::size_t i = 0; i < n; ++i)
    if (!normal_form(check.components[i] - g.components[i], u.group().relation_basis()).is_zero())
      throw VerificationFailed("coboundary witness fails re-verification");
  res.witness = res.evidence.solution;
  return res;
}

GradedCoboundaryResult is_coboundary(const GradedCocycle& g, const Caps& caps) {
  check_graded(g);
  const auto& ring = *g.ring;
  const Coeff p = ring.p();
  const std::size_t n = ring.nvars();
  const Poly target = ring.reduce(g.poly);
  GradedCoboundaryResult res;
  Poly witness(p, n);
  bool ok = true;
  for (const auto& md : ring.multidegrees_of(target, true)) {
    check_caps(ring.count_monomials(md), caps, "coboundary component");
    const auto monos = ring.monomials(md);
    PolySystem sys(p, monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k) sys.add(k, ring.act_minus_id(Poly::monomial(p, n, monos[k])));
    sys.add_rhs(ring.multihomogeneous_part(target, md, true));
    auto ev = sys.solve();
    if (ev.solution) {
      for (std::size_t k = 0; k < monos.size(); ++k)
        if ((*ev.solution)[k]) witness += Poly::monomial(p, n, monos[k], (*ev.solution)[k]);
    } else {
      ok = false;
    }
    res.components.push_back({md, std::move(ev)});
    if (!ok) break;
  }
  if (!ok) return res;
  if (!(ring.act_minus_id(witness) == target)) throw VerificationFailed("coboundary witness fails re-verification");
  res.witness = std::move(witness);
  return res;
}

ProjectionCocycle cocycle_from_projection(const Submodule& w, std::optional<GfMatrix> iota) {
  const auto& v = w.ambient();
  const std::size_t k = w.dim(), n = v.dim(), m = v.group().ncoords();
  const Coeff p = v.p();
  GfMatrix io = iota ? *iota : w.retraction();
  if (io.rows() != k || io.cols() != n) throw InvalidArgument("iota has wrong shape");
  if (!(io * w.inclusion() == GfMatrix::identity(k, p))) throw InvalidArgument("iota does not restrict to the identity");

  Hom0 hom = hom0(w);
  const auto& rel = v.group().relation_basis();
  PolyMatrix moved = (w.module().action() * io) * v.inverse_action_at(m, 0);
  PolyMatrix diff = reduce_entries(moved - to_poly_matrix(io, m), rel);
  const auto& q = hom.quotient;
  const std::size_t qd = q.section.cols();
  PolyMatrix h = diff * q.section;
  if (!is_zero_mod(diff - h * q.projection, rel))
    throw VerificationFailed("sigma.iota - iota does not vanish on the submodule");

  Cocycle g{hom.module, {}};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < qd; ++c) g.components.push_back(normal_form(h(i, c), rel));
  if (!verify_cocycle(g)) throw VerificationFailed("projection cocycle fails the cocycle identity");
  return {std::move(hom), std::move(io), std::move(g)};
}

std::vector<std::string> summand_failures(const Representation& u, const CoordinateRing& ring,
                                          const SummandWitness& w) {
  if (!(u.group() == ring.group())) throw InvalidArgument("summand: module over another group");
  const std::size_t k = u.dim(), n = ring.nvars(), total = ring.total();
  const Coeff p = ring.p();
  std::vector<std::string> out;
  if (w.embedding.size() != k || w.projection.size() != k) {
    out.push_back("witness has wrong size");
    return out;
  }
  int deg = -1;
  for (const auto* list : {&w.embedding, &w.projection})
    for (const auto& f : *list) {
      if (f.p() != p || f.nvars() != n) throw RingMismatch("summand witness outside K[V]");
      if (f.is_zero()) continue;
      if (!f.is_homogeneous() || (deg >= 0 && f.total_degree() != deg)) {
        out.push_back("witness is not homogeneous of one degree");
        return out;
      }
      deg = f.total_degree();
    }

  PolyMatrix a = u.action_at(total, 0);
  for (std::size_t j = 0; j < k; ++j) {
    Poly e = ring.act(w.embedding[j]);
    for (std::size_t i = 0; i < k; ++i)
      if (!a(i, j).is_zero()) e -= a(i, j) * ring.lift(w.embedding[i]);
    if (!ring.reduce(e).is_zero()) {
      out.push_back("embedding is not equivariant");
      break;
    }
  }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      PrimeField f(p);
      Coeff s = 0;
      for (const auto& t : w.projection[i].terms()) s = f.add(s, f.mul(t.coeff, w.embedding[j].coefficient(t.mono)));
      if (s != (i == j ? 1 : 0)) {
        out.push_back("projection composed with embedding is not the identity");
        i = k;
        break;
      }
    }

  std::vector<Multidegree> mds;
  for (const auto& f : w.projection)
    for (auto& md : ring.multidegrees_of(f))
      if (std::find(mds.begin(), mds.end(), md) == mds.end()) mds.push_back(std::move(md));
  for (const auto& md : mds) {
    for (const auto& mu : ring.monomials(md)) {
      auto parts = split_by_x(ring, ring.act(Poly::monomial(p, n, mu)));
      for (std::size_t i = 0; i < k; ++i) {
        Poly e(p, total);
        for (const auto& [x, c] : parts)
          if (Coeff pc = w.projection[i].coefficient(x)) e.add_scaled(c, pc, Monomial());
        for (std::size_t l = 0; l < k; ++l)
          if (Coeff pc = w.projection[l].coefficient(mu)) e.add_scaled(a(i, l), p - pc, Monomial());
        if (!ring.reduce(e).is_zero()) {
          out.push_back("projection is not equivariant");
          return out;
        }
      }
    }
  }
  return out;
}

namespace {

std::optional<std::vector<Poly>> solve_projection(const Representation& u, const CoordinateRing& ring,
                                                  const std::vector<Monomial>& monos, const std::vector<GfVector>& e,
                                                  const PolyMatrix& a) {
  const std::size_t k = u.dim(), big_m = monos.size(), n = ring.nvars();
  const Coeff p = ring.p();
  std::map<Monomial, std::size_t, GrevlexGreater> index;
  for (std::size_t s = 0; s < big_m; ++s) index[monos[s]] = s;

  PolySystem sys(p, k * big_m);
  for (std::size_t t = 0; t < big_m; ++t) {
    auto parts = split_by_x(ring, ring.act(Poly::monomial(p, n, monos[t])));
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t tag = i * big_m + t;
      for (const auto& [x, c] : parts) sys.add(i * big_m + index.at(x), c, tag);
      for (std::size_t l = 0; l < k; ++l)
        if (!a(i, l).is_zero()) sys.add(l * big_m + t, -a(i, l), tag);
    }
  }
  const std::uint64_t base = k * big_m;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t tag = base + i * k + j;
      for (std::size_t s = 0; s < big_m; ++s)
        if (e[j][s]) sys.add_scalar(i * big_m + s, Monomial(), e[j][s], tag);
      if (i == j) sys.add_rhs(Poly::constant(p, ring.total(), 1), tag);
    }
  auto ev = sys.solve();
  if (!ev.solution) return std::nullopt;
  std::vector<Poly> proj;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Term> terms;
    for (std::size_t s = 0; s < big_m; ++s)
      if (Coeff c = (*ev.solution)[i * big_m + s]) terms.push_back({monos[s], c});
    proj.push_back(Poly::from_terms(p, n, std::move(terms)));
  }
  return proj;
}

}  // namespace

std::optional<SummandWitness> find_summand(const Representation& u, const CoordinateRing& ring,
                                           const Multidegree& md, const Caps& caps) {
  if (!(u.group() == ring.group())) throw InvalidArgument("summand: module over another group");
  const std::size_t k = u.dim(), n = ring.nvars(), total = ring.total();
  const Coeff p = ring.p();
  const auto monos = ring.monomials(md);
  const std::size_t big_m = monos.size();
  check_caps(k * big_m, caps, "summand search");
  PolyMatrix a = u.action_at(total, 0);

  PolySystem sys(p, k * big_m);
  for (std::size_t t = 0; t < big_m; ++t) {
    Poly moved = ring.act(Poly::monomial(p, n, monos[t]));
    Poly fixed = ring.lift(Poly::monomial(p, n, monos[t]));
    for (std::size_t j = 0; j < k; ++j) {
      sys.add(j * big_m + t, moved, j);
      for (std::size_t i = 0; i < k; ++i)
        if (!a(i, j).is_zero()) sys.add(i * big_m + t, -(a(i, j) * fixed), j);
    }
  }
  const auto space = sys.nullspace();
  if (space.empty()) return std::nullopt;

  PrimeField f(p);
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<Coeff> coin(0, p - 1);
  const std::size_t tries = space.size() + 64;
  for (std::size_t attempt = 0; attempt < tries; ++attempt) {
    GfVector v(k * big_m, 0);
    if (attempt < space.size()) {
      v = space[attempt];
    } else {
      for (const auto& b : space) {
        Coeff c = coin(rng);
        for (std::size_t r = 0; r < v.size(); ++r) v[r] = f.add(v[r], f.mul(c, b[r]));
      }
    }
    std::vector<GfVector> e(k);
    GfMatrix em(k, big_m, p);
    for (std::size_t j = 0; j < k; ++j) {
      e[j].assign(v.begin() + j * big_m, v.begin() + (j + 1) * big_m);
      for (std::size_t s = 0; s < big_m; ++s) em(j, s) = e[j][s];
    }
    if (em.rank() != k) continue;
    auto proj = solve_projection(u, ring, monos, e, a);
    if (!proj) continue;
    SummandWitness w;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Term> terms;
      for (std::size_t s = 0; s < big_m; ++s)
        if (e[j][s]) terms.push_back({monos[s], e[j][s]});
      w.embedding.push_back(Poly::from_terms(p, n, std::move(terms)));
    }
    w.projection = std::move(*proj);
    if (!summand_failures(u, ring, w).empty()) throw VerificationFailed("summand witness fails re-verification");
    return w;
  }
  return std::nullopt;
}

GradedCocycle embed_in_coordinate_ring(const Cocycle& g, const RingPtr& ring, const SummandWitness& w) {
  check_module_cocycle(g);
  auto failures = summand_failures(g.target, *ring, w);
  if (!failures.empty()) throw VerificationFailed("summand witness: " + failures.front());
  const std::size_t total = ring->total();
  Poly out(ring->p(), total);
  unsigned d = 0;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    if (!w.embedding[i].is_zero()) d = static_cast<unsigned>(w.embedding[i].total_degree());
    out += ring->group().place(g.components[i], total, 0) * ring->lift(w.embedding[i]);
  }
  return {ring, d, ring->reduce(out)};
}

GradedCocycle multiply_invariant(const Poly& a, const GradedCocycle& g) {
  check_graded(g);
  const auto& ring = *g.ring;
  if (a.p() != ring.p() || a.nvars() != ring.nvars()) throw RingMismatch("multiplier not in K[V]");
  if (a.is_zero()) return {g.ring, g.degree, Poly(ring.p(), ring.total())};
  if (!a.is_homogeneous()) throw InvalidArgument("multiplier must be homogeneous");
  if (!ring.is_invariant(a)) throw InvalidArgument("multiplier is not invariant");
  return {g.ring, g.degree + static_cast<unsigned>(a.total_degree()), ring.lift(a) * g.poly};
}

AnnihilatorResult annihilator_witness(const Poly& a, const GradedCocycle& g, const Caps& caps) {
  auto r = is_coboundary(multiply_invariant(a, g), caps);
  return {std::move(r.witness), std::move(r.components)};
}

AnnihilatorSpace annihilator_space(const GradedCocycle& g, std::span<const Poly> candidates, const Caps& caps) {
  check_graded(g);
  const auto& ring = *g.ring;
  const Coeff p = ring.p();
  const std::size_t n = ring.nvars(), r = candidates.size();
  AnnihilatorSpace out;
  out.candidates = r;
  if (r == 0) return out;

  std::vector<Poly> products;
  std::vector<Multidegree> targets;
  for (const auto& c : candidates) {
    products.push_back(multiply_invariant(c, g).poly);
    for (auto& md : ring.multidegrees_of(products.back(), true))
      if (std::find(targets.begin(), targets.end(), md) == targets.end()) targets.push_back(std::move(md));
  }
  std::sort(targets.begin(), targets.end(), std::greater<>());
  std::vector<Monomial> monos;
  for (const auto& md : targets) {
    check_caps(monos.size() + ring.count_monomials(md), caps, "annihilator system");
    auto part = ring.monomials(md);
    monos.insert(monos.end(), part.begin(), part.end());
  }
  check_caps(r + monos.size(), caps, "annihilator system");

  PolySystem sys(p, r + monos.size());
  for (std::size_t j = 0; j < r; ++j)
    if (!products[j].is_zero()) sys.add(j, products[j]);
  for (std::size_t t = 0; t < monos.size(); ++t) sys.add(r + t, -ring.act_minus_id(Poly::monomial(p, n, monos[t])));

  std::vector<GfVector> alphas;
  for (const auto& v : sys.nullspace()) alphas.emplace_back(v.begin(), v.begin() + r);
  PrimeField f(p);
  for (const auto& alpha : echelon_basis(alphas, p, r)) {
    Poly a(p, n);
    for (std::size_t j = 0; j < r; ++j)
      if (alpha[j]) a.add_scaled(candidates[j], alpha[j], Monomial());
    if (a.is_zero()) continue;
    if (!annihilator_witness(a, g, caps).b) throw VerificationFailed("annihilator fails re-verification");
    out.basis.push_back(std::move(a));
  }
  return out;
}

AnnihilatorSpace annihilator_space(const GradedCocycle& g, unsigned d, const Caps& caps) {
  check_graded(g);
  auto slice = invariant_slice(*g.ring, d, caps);
  return annihilator_space(g, slice.basis, caps);
}

}  // namespace cmdef
