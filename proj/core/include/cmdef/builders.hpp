#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmdef/certify.hpp"

namespace cmdef {

// A module together with everything certify_cmdef needs.
struct BuiltInstance {
  CertifyInput input;
  // The cocycle before embedding, valued in the module U.
  std::optional<Cocycle> source_cocycle;
  // Coordinates of a natural <X,Y> direct summand, when there is one.
  std::optional<std::pair<std::size_t, std::size_t>> natural_summand;
  std::vector<std::string> notes;

  const Representation& module() const { return input.ring->module(); }
};

// V = U* (+) k copies of the extension of U by g; annihilators are the
// extension coordinates. Throws InvalidArgument when g is a coboundary.
BuiltInstance build_extension_sum(const Cocycle& g, std::size_t k, const Caps& caps = {});

// k copies of [W (+)] U* (+) extension; the cocycle sits in the first copy.
BuiltInstance build_extension_blocks(const Cocycle& g, std::size_t k,
                                     const std::optional<Representation>& prefix = std::nullopt, const Caps& caps = {});

// F^p(V)* (+) S^p(V)/F^p(V) (+) k extensions of U = hom0(S^p V, F^p V), the
// cocycle embedded in degree 2 as (F^p coordinate) * (quotient coordinate).
// Faithfulness of the result is re-checked.
BuiltInstance build_frobenius_module(const Representation& v, std::size_t k, const Caps& caps = {});

// ex51 (p = 2), ex52a and ex52b (p = 3), thm52 (Ga, any p).
BuiltInstance build_example(const std::string& name, Coeff p, std::size_t k, const Caps& caps = {});
std::vector<std::string> example_names();

struct TransferResult {
  std::optional<Certificate> certificate;
  std::optional<CertifyInput> input;
  std::string status;  // "certified" or the reason it was not
};
// The Ga certification input without certifying: restricted module, evaluated
// cocycle and annihilators, and the phsop transfer data.
TransferResult transfer_input(const BuiltInstance& sl2);
// Restricts along t -> (1 t; 0 1), drops the natural summand by evaluating at
// X, and certifies afresh over Ga.
TransferResult roberts_transfer(const BuiltInstance& sl2, const Caps& caps = {});

}  // namespace cmdef
