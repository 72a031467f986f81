#pragma once

// Test-side helpers. The evaluators here deliberately avoid the library's own
// evaluate() so they can act as oracles for it.

#include <cstdint>
#include <random>
#include <vector>

#include "cmdef/group.hpp"
#include "cmdef/linalg.hpp"
#include "cmdef/rep.hpp"
#include "cmdef/poly.hpp"

namespace cmdef::testing {

inline Coeff eval_oracle(const Poly& f, const std::vector<Coeff>& pt) {
  const std::uint64_t p = f.p();
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t v = t.coeff;
    for (std::size_t i = 0; i < f.nvars(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v = v * pt[i] % p;
    acc = (acc + v) % p;
  }
  return static_cast<Coeff>(acc);
}

inline std::vector<Coeff> random_point(std::mt19937& rng, Coeff p, std::size_t n) {
  std::uniform_int_distribution<Coeff> d(0, p - 1);
  std::vector<Coeff> pt(n);
  for (auto& c : pt) c = d(rng);
  return pt;
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t n, unsigned max_deg) {
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  Monomial m;
  for (unsigned d = deg(rng); d > 0; --d) {
    auto i = var(rng);
    m.set(i, m[i] + 1);
  }
  return m;
}

inline Poly random_poly(std::mt19937& rng, Coeff p, std::size_t n, std::size_t terms, unsigned max_deg) {
  std::uniform_int_distribution<Coeff> c(1, p - 1);
  Poly f(p, n);
  for (std::size_t i = 0; i < terms; ++i) f += Poly::monomial(p, n, random_monomial(rng, n, max_deg), c(rng));
  return f;
}

// Random homogeneous polynomial of degree d.
inline Poly random_form(std::mt19937& rng, Coeff p, std::size_t n, std::size_t terms, unsigned d) {
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::uniform_int_distribution<Coeff> c(1, p - 1);
  Poly f(p, n);
  for (std::size_t i = 0; i < terms; ++i) {
    Monomial m;
    for (unsigned k = 0; k < d; ++k) {
      auto j = var(rng);
      m.set(j, m[j] + 1);
    }
    f += Poly::monomial(p, n, m, c(rng));
  }
  return f;
}

// Every GF(p)-point of the group, by brute force over GF(p)^ncoords.
inline std::vector<std::vector<Coeff>> group_points(const GroupPresentation& g) {
  const Coeff p = g.p();
  const std::size_t m = g.ncoords();
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= p;
  std::vector<std::vector<Coeff>> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Coeff> pt(m);
    std::size_t c = code;
    for (auto& x : pt) x = c % p, c /= p;
    bool on = true;
    for (const auto& r : g.relations()) on = on && eval_oracle(r, pt) == 0;
    if (on) out.push_back(pt);
  }
  return out;
}

inline GfMatrix eval_matrix(const PolyMatrix& a, const std::vector<Coeff>& pt) {
  GfMatrix out(a.rows(), a.cols(), a.p());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = eval_oracle(a(i, j), pt);
  return out;
}

inline std::vector<Coeff> eval_all(const std::vector<Poly>& fs, const std::vector<Coeff>& pt) {
  std::vector<Coeff> out;
  for (const auto& f : fs) out.push_back(eval_oracle(f, pt));
  return out;
}

// Gm acting diagonally with the given integer weights: s^w, or u^-w for w < 0.
inline Representation gm_diagonal(Coeff p, const std::vector<int>& weights) {
  auto g = builtin_group("Gm", p);
  const std::size_t n = weights.size();
  PolyMatrix a(n, n, p, 2);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m = weights[i] >= 0 ? Monomial::var(0, weights[i]) : Monomial::var(1, -weights[i]);
    a(i, i) = Poly::monomial(p, 2, m);
    labels.push_back("w" + std::to_string(weights[i]));
  }
  return Representation(g, a, labels, {"diagonal", "test", {}});
}

}  // namespace cmdef::testing
