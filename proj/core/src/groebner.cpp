#include "cmdef/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

#include "cmdef/errors.hpp"

namespace cmdef {

Caps Caps::from_env() {
  Caps caps;
  if (const char* b = std::getenv("CMDEF_CAP_BASIS")) caps.max_basis = std::strtoull(b, nullptr, 10);
  if (const char* d = std::getenv("CMDEF_CAP_DEGREE"))
    caps.max_degree = static_cast<unsigned>(std::strtoul(d, nullptr, 10));
  return caps;
}

IdealBasis::IdealBasis(Coeff p, std::size_t nvars, std::vector<Poly> generators,
                       std::optional<std::vector<Poly>> groebner)
    : p_(p), nvars_(nvars), generators_(std::move(generators)), groebner_(std::move(groebner)) {
  for (const auto& g : generators_)
    if (g.p() != p_ || g.nvars() != nvars_) throw RingMismatch("ideal generator from another ring");
  if (groebner_)
    for (const auto& g : *groebner_)
      if (g.p() != p_ || g.nvars() != nvars_) throw RingMismatch("Gröbner element from another ring");
}

const std::vector<Poly>& IdealBasis::groebner() const {
  if (!groebner_) throw InvalidArgument("ideal has no Gröbner basis attached");
  return *groebner_;
}

Poly normal_form(const Poly& f, std::span<const Poly> basis) {
  for (const auto& g : basis)
    if (!g.same_ring(f)) throw RingMismatch("normal form across rings");
  if (f.is_zero() || basis.empty()) return f;
  PrimeField field(f.p());
  std::vector<Coeff> lc_inv;
  lc_inv.reserve(basis.size());
  for (const auto& g : basis) lc_inv.push_back(g.is_zero() ? 0 : field.inv(g.leading_coeff()));

  std::map<Monomial, Coeff, GrevlexGreater> work;
  for (const auto& t : f.terms()) work.emplace(t.mono, t.coeff);
  std::vector<Term> rest;
  while (!work.empty()) {
    auto it = work.begin();
    const Monomial m = it->first;
    const Coeff c = it->second;
    std::size_t k = 0;
    for (; k < basis.size(); ++k)
      if (!basis[k].is_zero() && basis[k].leading_monomial().divides(m)) break;
    if (k == basis.size()) {
      rest.push_back({m, c});
      work.erase(it);
      continue;
    }
    const Poly& g = basis[k];
    const Coeff factor = field.mul(c, lc_inv[k]);
    const Monomial shift = m / g.leading_monomial();
    work.erase(it);
    bool first = true;
    for (const auto& t : g.terms()) {
      if (first) {  // cancels the popped term exactly
        first = false;
        continue;
      }
      Monomial tm = t.mono * shift;
      Coeff delta = field.neg(field.mul(factor, t.coeff));
      auto [pos, inserted] = work.try_emplace(tm, delta);
      if (!inserted) {
        pos->second = field.add(pos->second, delta);
        if (pos->second == 0) work.erase(pos);
      }
    }
  }
  return Poly::from_terms(f.p(), f.nvars(), std::move(rest));
}

Poly normal_form(const Poly& f, const IdealBasis& rel) {
  if (rel.p() != f.p() || rel.nvars() != f.nvars()) throw RingMismatch("normal form across rings");
  return normal_form(f, std::span<const Poly>(rel.groebner()));
}

bool ideal_contains(const IdealBasis& ideal, const Poly& f) { return normal_form(f, ideal).is_zero(); }

namespace {

Poly s_polynomial(const Poly& a, const Poly& b) {
  Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
  PrimeField f(a.p());
  Poly s = a.shifted(l / a.leading_monomial(), f.inv(a.leading_coeff()));
  s.add_scaled(b, f.neg(f.inv(b.leading_coeff())), l / b.leading_monomial());
  return s;
}

bool coprime_monomials(const Monomial& a, const Monomial& b) { return gcd(a, b).is_one(); }

}  // namespace

IdealBasis groebner(Coeff p, std::size_t nvars, std::vector<Poly> generators, const Caps& caps) {
  for (const auto& g : generators)
    if (g.p() != p || g.nvars() != nvars) throw RingMismatch("Gröbner input from another ring");

  std::vector<Poly> basis;
  for (const auto& g : generators) {
    Poly r = normal_form(g, basis).monic();
    if (!r.is_zero()) basis.push_back(std::move(r));
  }
  if (!basis.empty() && basis.back().is_constant()) {
    return IdealBasis(p, nvars, std::move(generators), std::vector<Poly>{Poly::constant(p, nvars, 1)});
  }

  // Pending pairs ordered by (degree of lcm, lcm, indices): the normal strategy.
  struct PairKey {
    unsigned deg;
    Monomial lcm;
    std::size_t i, j;
    bool operator<(const PairKey& o) const {
      if (deg != o.deg) return deg < o.deg;
      if (!(lcm == o.lcm)) return grevlex_less(lcm, o.lcm);
      return std::pair(i, j) < std::pair(o.i, o.j);
    }
  };
  std::set<PairKey> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_index;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      pending.insert({l.degree(), l, i, j});
      pending_index.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pending.empty()) {
    PairKey key = *pending.begin();
    pending.erase(pending.begin());
    pending_index.erase({key.i, key.j});
    const Poly& a = basis[key.i];
    const Poly& b = basis[key.j];
    if (coprime_monomials(a.leading_monomial(), b.leading_monomial())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == key.i || k == key.j) continue;
      if (!basis[k].leading_monomial().divides(key.lcm)) continue;
      auto pi = std::minmax(k, key.i);
      auto pj = std::minmax(k, key.j);
      chain = !pending_index.count({pi.first, pi.second}) && !pending_index.count({pj.first, pj.second});
    }
    if (chain) continue;
    if (key.deg > caps.max_degree)
      throw ResourceCapExceeded("Gröbner pair degree " + std::to_string(key.deg) + " above cap " +
                                std::to_string(caps.max_degree));
    Poly r = normal_form(s_polynomial(a, b), basis);
    if (r.is_zero()) continue;
    r = r.monic();
    if (r.is_constant()) {
      return IdealBasis(p, nvars, std::move(generators), std::vector<Poly>{Poly::constant(p, nvars, 1)});
    }
    basis.push_back(std::move(r));
    if (basis.size() > caps.max_basis)
      throw ResourceCapExceeded("Gröbner basis larger than " + std::to_string(caps.max_basis));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].leading_monomial();
      const auto& lj = basis[j].leading_monomial();
      redundant = lj.divides(li) && (!(lj == li) || j < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly head = Poly::monomial(p, nvars, minimal[i].leading_monomial(), minimal[i].leading_coeff());
    Poly tail = minimal[i] - head;
    reduced.push_back((head + normal_form(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& x, const Poly& y) {
    return grevlex_less(x.leading_monomial(), y.leading_monomial());
  });
  return IdealBasis(p, nvars, std::move(generators), std::move(reduced));
}

namespace {

std::size_t min_cover(const std::vector<std::uint64_t>& supports, std::uint64_t chosen,
                      std::size_t best) {
  std::size_t used = static_cast<std::size_t>(std::popcount(chosen));
  if (used >= best) return best;
  for (std::uint64_t s : supports) {
    if (s & chosen) continue;
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      std::uint64_t bit = rest & (~rest + 1);
      best = std::min(best, min_cover(supports, chosen | bit, best));
    }
    return best;
  }
  return used;
}

}  // namespace

std::size_t monomial_ideal_codim(std::span<const Monomial> generators, std::size_t nvars) {
  std::vector<std::uint64_t> supports;
  for (const auto& m : generators) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) s |= std::uint64_t{1} << i;
    if (s == 0) return nvars;  // unit ideal: quotient is zero, by convention height n
    supports.push_back(s);
  }
  // Supersets never matter for a hitting set.
  std::sort(supports.begin(), supports.end(),
            [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint64_t> minimal;
  for (auto s : supports) {
    bool dominated = false;
    for (auto t : minimal)
      if ((t & s) == t) dominated = true;
    if (!dominated) minimal.push_back(s);
  }
  return min_cover(minimal, 0, nvars + 1);
}

std::size_t ideal_codim(Coeff p, std::size_t nvars, std::span<const Poly> generators, const Caps& caps) {
  std::vector<Poly> gens;
  for (const auto& g : generators) {
    if (g.p() != p || g.nvars() != nvars) throw RingMismatch("codim input from another ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw InvalidArgument("ideal_codim: non-homogeneous generator");
    if (g.total_degree() == 0) throw InvalidArgument("ideal_codim: generator of degree zero");
    gens.push_back(g);
  }
  if (gens.empty()) return 0;
  IdealBasis gb = groebner(p, nvars, std::move(gens), caps);
  std::vector<Monomial> lts;
  for (const auto& g : gb.groebner()) lts.push_back(g.leading_monomial());
  return monomial_ideal_codim(lts, nvars);
}

std::size_t ideal_codim(std::span<const Poly> generators, const Caps& caps) {
  if (generators.empty()) return 0;
  return ideal_codim(generators[0].p(), generators[0].nvars(), generators, caps);
}

bool coprime(const Poly& a1, const Poly& a2, const Caps& caps) {
  if (!a1.same_ring(a2)) throw RingMismatch("coprime: polynomials from different rings");
  if (a1.is_zero() || a2.is_zero()) throw InvalidArgument("coprime: zero input");
  if (!a1.is_homogeneous() || !a2.is_homogeneous() || a1.total_degree() == 0 || a2.total_degree() == 0)
    throw InvalidArgument("coprime: inputs must be homogeneous of positive degree");
  std::vector<Poly> gens{a1, a2};
  return ideal_codim(gens, caps) == 2;
}

}  // namespace cmdef
