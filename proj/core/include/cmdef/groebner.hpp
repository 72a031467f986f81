#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cmdef/poly.hpp"

namespace cmdef {

// Desk-scale resource limits. Exceeding one throws ResourceCapExceeded.
struct Caps {
  // Gröbner basis size, and unknown count of any single linear system.
  std::size_t max_basis = 4000;
  // Degree bound for Gröbner intermediates and requested graded components.
  unsigned max_degree = 40;

  // Defaults overridden by CMDEF_CAP_BASIS / CMDEF_CAP_DEGREE when set.
  static Caps from_env();
};

// Generators of an ideal, optionally with a reduced Gröbner basis under grevlex.
class IdealBasis {
 public:
  IdealBasis(Coeff p, std::size_t nvars, std::vector<Poly> generators,
             std::optional<std::vector<Poly>> groebner = std::nullopt);

  Coeff p() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return generators_; }
  bool has_groebner() const { return groebner_.has_value(); }
  // Throws InvalidArgument when no Gröbner basis is attached.
  const std::vector<Poly>& groebner() const;

 private:
  Coeff p_;
  std::size_t nvars_;
  std::vector<Poly> generators_;
  std::optional<std::vector<Poly>> groebner_;
};

// Buchberger's algorithm with the product and chain criteria; returns the
// generators together with the reduced (monic, interreduced) basis.
IdealBasis groebner(Coeff p, std::size_t nvars, std::vector<Poly> generators, const Caps& caps = {});

// Remainder of full multivariate division. Zero iff f lies in the ideal when
// `basis` is a Gröbner basis.
Poly normal_form(const Poly& f, std::span<const Poly> basis);
Poly normal_form(const Poly& f, const IdealBasis& rel);

bool ideal_contains(const IdealBasis& ideal, const Poly& f);

// Codimension of a monomial ideal in n variables: the minimum number of
// variables meeting the support of every generator.
std::size_t monomial_ideal_codim(std::span<const Monomial> generators, std::size_t nvars);

// Height of a homogeneous ideal, read off its leading-term ideal.
std::size_t ideal_codim(std::span<const Poly> generators, const Caps& caps = {});
std::size_t ideal_codim(Coeff p, std::size_t nvars, std::span<const Poly> generators,
                        const Caps& caps = {});

// Two homogeneous forms of positive degree are coprime iff they generate an
// ideal of height two.
bool coprime(const Poly& a1, const Poly& a2, const Caps& caps = {});

}  // namespace cmdef
