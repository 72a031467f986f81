#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cmdef/field.hpp"

namespace cmdef {

// Hard ceiling on ring size. Every ring the toolkit builds (group coordinates of
// two generic points plus the K[V] variables) must fit.
inline constexpr std::size_t kMaxVars = 48;

// Exponent vector. Stored densely; entries past the ring's variable count are 0.
class Monomial {
 public:
  Monomial() { e_.fill(0); }

  static Monomial var(std::size_t i, unsigned exponent = 1);

  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned exponent);
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& other) const;
  // Largest variable index with nonzero exponent, plus one (0 for the unit).
  std::size_t support_end() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Precondition: b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> e_;
  std::uint16_t deg_ = 0;
};

// Graded reverse-lexicographic order with x0 > x1 > ... . Returns true iff a < b.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

struct Term {
  Monomial mono;
  Coeff coeff;
};

// Sparse polynomial over GF(p) in a fixed number of variables x0..x{n-1}.
// Terms are kept sorted by decreasing grevlex order with no zero coefficients,
// so structural equality is polynomial equality.
class Poly {
 public:
  Poly(Coeff p, std::size_t nvars);

  static Poly constant(Coeff p, std::size_t nvars, std::int64_t c);
  static Poly variable(Coeff p, std::size_t nvars, std::size_t i);
  static Poly monomial(Coeff p, std::size_t nvars, const Monomial& m, Coeff c = 1);
  // Sorts, merges equal monomials and drops zeros.
  static Poly from_terms(Coeff p, std::size_t nvars, std::vector<Term> terms);

  Coeff p() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  PrimeField field() const { return PrimeField(p_); }
  bool same_ring(const Poly& o) const { return p_ == o.p_ && nvars_ == o.nvars_; }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Poly homogeneous_component(unsigned d) const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }
  Coeff coefficient(const Monomial& m) const;
  bool uses_var(std::size_t i) const;

  Poly monic() const;
  Poly scaled(Coeff c) const;
  Poly shifted(const Monomial& m, Coeff c) const;  // c * m * this
  Poly pow(unsigned e) const;

  // Replaces x_i by images[i]. images.size() must equal nvars() and every image
  // must live in the ring (p, target_nvars), which becomes the ring of the result.
  Poly substitute(std::span<const Poly> images, std::size_t target_nvars) const;
  // Reinterprets the polynomial in a ring with more or equal variables, mapping
  // x_i to x_{index_map[i]}.
  Poly remap(std::size_t target_nvars, std::span<const std::size_t> index_map) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b);

  // this += c * m * g, in place.
  void add_scaled(const Poly& g, Coeff c, const Monomial& m);

  // Text format: terms joined by "+", each "c*x<i>^<e>*..." with c in 0..p-1,
  // exponent 1 omitted, terms in decreasing grevlex order; zero prints "0".
  std::string to_string() const;
  static Poly parse(std::string_view text, Coeff p, std::size_t nvars);

 private:
  void check_ring(const Poly& o) const;

  Coeff p_;
  std::uint32_t nvars_;
  std::vector<Term> terms_;
};

// Row-major matrix of polynomials sharing one ring.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, Coeff p, std::size_t nvars);
  static PolyMatrix identity(std::size_t n, Coeff p, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff p() const { return p_; }
  std::size_t nvars() const { return nvars_; }

  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix transpose() const;
  // Entry-wise substitution (see Poly::substitute).
  PolyMatrix substitute(std::span<const Poly> images, std::size_t target_nvars) const;
  PolyMatrix remap(std::size_t target_nvars, std::span<const std::size_t> index_map) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_, cols_;
  Coeff p_;
  std::size_t nvars_;
  std::vector<Poly> data_;
};

}  // namespace cmdef
