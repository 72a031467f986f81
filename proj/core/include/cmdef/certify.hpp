#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmdef/cohom.hpp"
#include "cmdef/errors.hpp"

namespace cmdef {

// Exit codes of the five premise checks, shared with the CLI.
enum class Premise : int {
  cocycle = 10,
  nontriviality = 11,
  annihilator = 12,
  phsop = 13,
  witness_m = 14,
};
const char* premise_name(Premise p);

class PremiseFailed : public Error {
 public:
  PremiseFailed(Premise premise, const std::string& detail)
      : Error(std::string(premise_name(premise)) + " check failed: " + detail), premise_(premise) {}
  Premise premise() const { return premise_; }
  int code() const { return static_cast<int>(premise_); }

 private:
  Premise premise_;
};

// (a) G reductive and a_1..a_k a phsop in K[V].
// (b) a_1, a_2 coprime in K[V] and a_1..a_k a phsop in K[V]^G; the second half
//     needs either a reductive G (phsop in K[V] suffices) or a transfer fact.
enum class Condition { a, b };

struct RankEvidence {
  Multidegree multidegree;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::size_t augmented_rank = 0;
  friend bool operator==(const RankEvidence&, const RankEvidence&) = default;
};
RankEvidence rank_evidence(const SolveResult& r, Multidegree md = {});

// Phsop in K[V]^Ga through K[<X,Y> (+) V']^SL2 = K[V']^Ga: `module` is an SL2
// module with the natural module on coordinates (x_index, y_index) as a direct
// summand, whose complement restricts along t -> (1 t; 0 1) to the certified Ga
// module. lifts[i] is an SL2 invariant with lifts[i](X = 1, Y = 0) = a_i.
struct PhsopTransfer {
  Representation module;
  std::size_t x_index = 0;
  std::size_t y_index = 1;
  std::vector<Poly> lifts;
  std::size_t codim = 0;  // ideal_codim of the lifts in K[module]
};

struct Certificate {
  explicit Certificate(Representation mod)
      : module(std::move(mod)), cocycle(module.p(), module.group().ncoords() + module.dim()) {}

  Representation module;
  std::size_t k = 0;
  Condition condition = Condition::a;
  unsigned cocycle_degree = 0;
  Poly cocycle;  // in the combined ring [group coords][x]
  std::vector<RankEvidence> noncoboundary;
  std::vector<Poly> annihilators;
  std::vector<Poly> witnesses;
  std::optional<Poly> m;
  std::optional<std::size_t> codim;  // ideal_codim(a_1..a_k) in K[V] when used
  std::optional<bool> coprime;
  std::optional<RankEvidence> nonmembership;
  std::optional<PhsopTransfer> transfer;
  std::vector<std::string> declared_facts;
  int conclusion = 0;
  std::string name;
};

struct CertifyInput {
  std::string name;
  RingPtr ring;
  GradedCocycle cocycle;
  std::vector<Poly> annihilators;
  std::optional<std::vector<Poly>> witnesses;  // searched when absent
  std::optional<Poly> m;                       // computed when absent
  Condition condition = Condition::a;
  std::optional<PhsopTransfer> transfer;
};

// f with x_X = 1 and x_Y = 0 substituted, remaining coordinates renumbered in
// order (the point whose stabilizer in SL2 is the image of Ga).
Poly evaluate_at_x(const Poly& f, std::size_t x_index, std::size_t y_index);

// m = a1 b2 - a2 b1, re-verified invariant. Throws PremiseFailed(witness_m).
Poly build_witness_m(const CoordinateRing& ring, const Poly& a1, const Poly& b1, const Poly& a2, const Poly& b2);

// u_jl a_i - u_il a_j + u_ij a_l for every triple i < j < l; true when all vanish.
bool determinant_identities(std::span<const Poly> a, std::span<const Poly> b);

// Runs the premise checks in order and throws PremiseFailed at the first
// failure; never returns a certificate with a failed premise.
Certificate certify_cmdef(const CertifyInput& in, const Caps& caps = {});

struct CheckResult {
  std::string name;
  int code = 0;  // premise code, or 4 for structural checks
  bool passed = false;
  std::string detail;
};
struct VerifyReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  // 0, or the code of the first failed check.
  int exit_code() const;
};
// Recomputes every check from the certificate alone.
VerifyReport verify_certificate(const Certificate& cert, const Caps& caps = {});

}  // namespace cmdef
