#include "cmdef/action.hpp"

#include <algorithm>
#include <numeric>

#include "cmdef/errors.hpp"

namespace cmdef {

CoordinateRing::CoordinateRing(Representation v)
    : v_(std::move(v)), m_(v_.group().ncoords()), n_(v_.dim()) {
  if (m_ + n_ > kMaxVars)
    throw ResourceCapExceeded("K[V] with " + std::to_string(n_) + " variables over a group with " +
                              std::to_string(m_) + " coordinates");
  const Coeff p = v_.p();
  const std::size_t total = m_ + n_;
  rel_ = v_.group().relations_at(total, 0);
  PolyMatrix inv = v_.inverse_action_at(total, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    Poly img(p, total);
    for (std::size_t j = 0; j < n_; ++j)
      if (!inv(i, j).is_zero()) img += inv(i, j) * Poly::variable(p, total, m_ + j);
    images_.push_back(std::move(img));
  }

  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (images_[i].uses_var(m_ + j)) parent[find(i)] = find(j);
  block_of_.assign(n_, 0);
  std::map<std::size_t, std::size_t> root_to_block;
  for (std::size_t i = 0; i < n_; ++i) {
    auto [it, fresh] = root_to_block.try_emplace(find(i), blocks_.size());
    if (fresh) blocks_.emplace_back();
    blocks_[it->second].push_back(i);
    block_of_[i] = it->second;
  }
}

Poly CoordinateRing::lift(const Poly& f) const {
  if (f.p() != p() || f.nvars() != n_) throw RingMismatch("lift: polynomial not in K[V]");
  std::vector<std::size_t> idx(n_);
  std::iota(idx.begin(), idx.end(), m_);
  return f.remap(total(), idx);
}

Poly CoordinateRing::lower(const Poly& f) const {
  if (f.p() != p() || f.nvars() != total()) throw RingMismatch("lower: polynomial not in the combined ring");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Monomial mono;
    for (std::size_t i = 0; i < m_; ++i)
      if (t.mono[i]) throw InvalidArgument("lower: polynomial depends on group coordinates");
    for (std::size_t i = 0; i < n_; ++i) mono.set(i, t.mono[m_ + i]);
    out.push_back({mono, t.coeff});
  }
  return Poly::from_terms(p(), n_, std::move(out));
}

Poly CoordinateRing::reduce(const Poly& f) const { return rel_.empty() ? f : normal_form(f, rel_); }

Poly CoordinateRing::act_monomial(const Monomial& mono) const {
  // Caller holds mu_. sigma.(x^a) = sigma.(x^a / x_j) * sigma.x_j for the last
  // variable j in the support; every prefix is memoized.
  if (auto it = act_memo_.find(mono); it != act_memo_.end()) return it->second;
  Poly result(p(), total());
  if (mono.is_one()) {
    result = Poly::constant(p(), total(), 1);
  } else {
    std::size_t j = mono.support_end() - 1;
    Poly rest = act_monomial(mono / Monomial::var(j));
    result = reduce(rest * images_[j]);
  }
  act_memo_.emplace(mono, result);
  return result;
}

Poly CoordinateRing::act(const Poly& f) const {
  if (f.p() != p() || f.nvars() != n_) throw RingMismatch("act: polynomial not in K[V]");
  Poly out(p(), total());
  std::lock_guard lock(mu_);
  for (const auto& t : f.terms()) out.add_scaled(act_monomial(t.mono), t.coeff, Monomial());
  return out;
}

Poly CoordinateRing::act_minus_id(const Poly& f) const { return act(f) - lift(f); }

bool CoordinateRing::is_invariant(const Poly& f) const { return act_minus_id(f).is_zero(); }

Multidegree CoordinateRing::multidegree(const Monomial& m, bool combined) const {
  Multidegree md(blocks_.size(), 0);
  const std::size_t off = combined ? m_ : 0;
  for (std::size_t i = 0; i < n_; ++i) md[block_of_[i]] += m[off + i];
  return md;
}

std::vector<Multidegree> CoordinateRing::multidegrees_of(const Poly& f, bool combined) const {
  std::vector<Multidegree> out;
  for (const auto& t : f.terms()) {
    auto md = multidegree(t.mono, combined);
    if (std::find(out.begin(), out.end(), md) == out.end()) out.push_back(std::move(md));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Poly CoordinateRing::multihomogeneous_part(const Poly& f, const Multidegree& md, bool combined) const {
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (multidegree(t.mono, combined) == md) out.push_back(t);
  return Poly::from_terms(f.p(), f.nvars(), std::move(out));
}

std::vector<Multidegree> CoordinateRing::multidegrees(unsigned d) const {
  std::vector<Multidegree> out;
  const std::size_t b = blocks_.size();
  if (b == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Multidegree cur(b, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == b) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

namespace {

void block_monomials(const std::vector<std::size_t>& vars, unsigned d, std::size_t i, Monomial cur,
                     std::vector<Monomial>& out) {
  if (i + 1 >= vars.size()) {
    if (!vars.empty()) cur.set(vars.back(), d);
    else if (d != 0) return;
    out.push_back(cur);
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    Monomial next = cur;
    next.set(vars[i], e);
    block_monomials(vars, d - e, i + 1, next, out);
  }
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::size_t CoordinateRing::count_monomials(const Multidegree& md) const {
  std::size_t c = 1;
  for (std::size_t b = 0; b < blocks_.size(); ++b) c *= binom(blocks_[b].size() + md[b] - 1, md[b]);
  return c;
}

std::vector<Monomial> CoordinateRing::monomials(const Multidegree& md) const {
  if (md.size() != blocks_.size()) throw InvalidArgument("multidegree has wrong length");
  std::vector<Monomial> acc{Monomial()};
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (md[b] == 0) continue;
    std::vector<Monomial> part;
    block_monomials(blocks_[b], md[b], 0, Monomial(), part);
    std::vector<Monomial> next;
    for (const auto& a : acc)
      for (const auto& q : part) next.push_back(a * q);
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end(), GrevlexGreater());
  return acc;
}

std::optional<std::vector<Poly>> CoordinateRing::memo_get(int kind, const Multidegree& md) const {
  std::lock_guard lock(mu_);
  auto it = memo_.find({kind, md});
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void CoordinateRing::memo_put(int kind, const Multidegree& md, const std::vector<Poly>& value) const {
  std::lock_guard lock(mu_);
  memo_.try_emplace({kind, md}, value);
}

RingPtr make_ring(Representation v) { return std::make_shared<const CoordinateRing>(std::move(v)); }

}  // namespace cmdef
