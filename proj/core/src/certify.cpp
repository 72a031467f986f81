#include "cmdef/certify.hpp"

#include <algorithm>

#include "cmdef/groebner.hpp"
#include "cmdef/invariants.hpp"

namespace cmdef {

const char* premise_name(Premise p) {
  switch (p) {
    case Premise::cocycle: return "cocycle";
    case Premise::nontriviality: return "nontriviality";
    case Premise::annihilator: return "annihilator";
    case Premise::phsop: return "phsop";
    case Premise::witness_m: return "witness m";
  }
  return "unknown";
}

RankEvidence rank_evidence(const SolveResult& r, Multidegree md) {
  return {std::move(md), r.unknowns, r.equations, r.rank, r.augmented_rank};
}

Poly build_witness_m(const CoordinateRing& ring, const Poly& a1, const Poly& b1, const Poly& a2, const Poly& b2) {
  Poly m = a1 * b2 - a2 * b1;
  if (!ring.is_invariant(m)) throw PremiseFailed(Premise::witness_m, "m = a1 b2 - a2 b1 is not invariant");
  return m;
}

bool determinant_identities(std::span<const Poly> a, std::span<const Poly> b) {
  const std::size_t k = std::min(a.size(), b.size());
  auto u = [&](std::size_t i, std::size_t j) { return a[i] * b[j] - a[j] * b[i]; };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l)
        if (!(u(j, l) * a[i] - u(i, l) * a[j] + u(i, j) * a[l]).is_zero()) return false;
  return true;
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

int VerifyReport::exit_code() const {
  for (const auto& c : checks)
    if (!c.passed) return c.code;
  return 0;
}

Poly evaluate_at_x(const Poly& f, std::size_t xi, std::size_t yi) {
  const std::size_t n = f.nvars();
  std::vector<Poly> images;
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == xi) images.push_back(Poly::constant(f.p(), n - 2, 1));
    else if (i == yi) images.push_back(Poly(f.p(), n - 2));
    else images.push_back(Poly::variable(f.p(), n - 2, next++));
  }
  return f.substitute(images, n - 2);
}

namespace {

constexpr int kStructural = 4;

struct CheckFailed {
  std::string detail;
};

[[noreturn]] void fail(std::string detail) { throw CheckFailed{std::move(detail)}; }

std::string reductive_fact(const GroupPresentation& g) { return g.name() + " reductive"; }
const char* kRobertsFact = "K[<X,Y> (+) V]^SL2 = K[V]^Ga (Roberts)";

void check_transfer(Certificate& c, bool record, const Caps& caps) {
  if (!c.transfer) fail("condition (b) over a non-reductive group needs a phsop transfer");
  auto& t = *c.transfer;
  const auto& w = t.module;
  const auto& ga = c.module.group();
  if (ga.name() != "Ga") fail("transfer applies to Ga modules only");
  if (w.group().name() != "SL2" || w.p() != ga.p() || !w.group().reductive())
    fail("transfer module is not an SL2 module over the same field");
  if (!(w.group() == *builtin_group("SL2", ga.p()))) fail("transfer group differs from the builtin SL2");
  if (!verify_representation(w)) fail("transfer module fails the representation laws");
  const std::size_t nw = w.dim(), xi = t.x_index, yi = t.y_index;
  if (xi >= nw || yi >= nw || xi == yi || nw != c.module.dim() + 2) fail("transfer coordinates out of range");

  const auto& nat = w.group().natural();
  const std::size_t xy[2] = {xi, yi};
  for (std::size_t r = 0; r < nw; ++r)
    for (std::size_t s = 0; s < nw; ++s) {
      const bool rin = r == xi || r == yi, sin = s == xi || s == yi;
      if (rin && sin) {
        const std::size_t rr = r == xy[0] ? 0 : 1, ss = s == xy[0] ? 0 : 1;
        if (!(w.action()(r, s) == nat(rr, ss))) fail("<X,Y> block is not the natural module");
      } else if (rin != sin && !w.action()(r, s).is_zero()) {
        fail("<X,Y> is not a direct summand");
      }
    }

  auto ga_ptr = builtin_group("Ga", ga.p());
  auto sl_ptr = builtin_group("SL2", ga.p());
  const Coeff p = ga.p();
  auto h = homomorphism(ga_ptr, sl_ptr,
                        {Poly::constant(p, 1, 1), Poly::variable(p, 1, 0), Poly(p, 1), Poly::constant(p, 1, 1)});
  PolyMatrix restricted = w.action().substitute(h.coord_map, 1);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < nw; ++i)
    if (i != xi && i != yi) rest.push_back(i);
  for (std::size_t r = 0; r < rest.size(); ++r)
    for (std::size_t s = 0; s < rest.size(); ++s)
      if (!(normal_form(restricted(rest[r], rest[s]), ga.relation_basis()) == c.module.action()(r, s)))
        fail("complement of <X,Y> does not restrict to the certified module");

  if (t.lifts.size() != c.k) fail("transfer needs one lift per annihilator");
  CoordinateRing wring(w);
  for (std::size_t i = 0; i < c.k; ++i) {
    const auto& f = t.lifts[i];
    if (f.p() != p || f.nvars() != nw) fail("lift outside K[W]");
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() == 0) fail("lift is not homogeneous of positive degree");
    if (!wring.is_invariant(f)) fail("lift is not SL2-invariant");
    if (!(evaluate_at_x(f, xi, yi) == c.annihilators[i])) fail("lift does not evaluate to its annihilator");
  }
  const std::size_t codim = ideal_codim(p, nw, t.lifts, caps);
  if (record) t.codim = codim;
  else if (t.codim != codim) fail("recorded codim of the lifts does not match");
  if (codim != c.k) fail("lifts have codim " + std::to_string(codim) + ", need " + std::to_string(c.k));
}

std::vector<std::string> expected_facts(const Certificate& c) {
  std::vector<std::string> out;
  if (c.k < 2) return out;
  const auto& g = c.module.group();
  if (g.reductive()) out.push_back(reductive_fact(g));
  else if (c.condition == Condition::b) {
    out.push_back(reductive_fact(*builtin_group("SL2", g.p())));
    out.push_back(kRobertsFact);
  }
  return out;
}

// One pass over all checks. In record mode, missing data and evidence are
// filled in; otherwise recorded values must match the recomputation.
std::vector<CheckResult> run_checks(Certificate& c, const RingPtr& ring, bool record, bool stop_first,
                                    const Caps& caps) {
  std::vector<CheckResult> out;
  bool stopped = false;
  auto run = [&](const char* name, int code, auto&& body) {
    if (stopped) return;
    CheckResult r{name, code, true, ""};
    try {
      body();
    } catch (const CheckFailed& e) {
      r.passed = false;
      r.detail = e.detail;
    } catch (const ResourceCapExceeded&) {
      throw;
    } catch (const Error& e) {
      r.passed = false;
      r.detail = e.what();
    }
    out.push_back(r);
    if (!r.passed && (stop_first || code == kStructural)) stopped = true;
  };
  const auto& mod = c.module;
  const Coeff p = mod.p();
  const std::size_t n = mod.dim();
  const auto* g = &mod.group();

  run("representation laws", kStructural, [&] {
    auto f = representation_law_failures(mod);
    if (!f.empty()) fail(f.front());
  });
  run("shape", kStructural, [&] {
    if (c.annihilators.size() != c.k) fail("k differs from the number of annihilators");
    if (!record && c.witnesses.size() != c.k) fail("k differs from the number of witnesses");
    const int want = c.k >= 2 ? static_cast<int>(c.k) - 2 : 0;
    if (record) c.conclusion = want;
    else if (c.conclusion != want) fail("conclusion is not max(k - 2, 0)");
    if (c.cocycle.p() != p || c.cocycle.nvars() != g->ncoords() + n) fail("cocycle outside the combined ring");
    for (const auto* list : {&c.annihilators, &c.witnesses})
      for (const auto& f : *list)
        if (f.p() != p || f.nvars() != n) fail("polynomial outside K[V]");
    if (c.m && (c.m->p() != p || c.m->nvars() != n)) fail("m outside K[V]");
  });

  const GradedCocycle gc{ring, c.cocycle_degree, c.cocycle};
  run("cocycle", static_cast<int>(Premise::cocycle), [&] {
    auto f = cocycle_law_failures(gc);
    if (!f.empty()) fail(f.front());
  });

  run("nontriviality", static_cast<int>(Premise::nontriviality), [&] {
    auto r = is_coboundary(gc, caps);
    if (r.witness) fail("cocycle is a coboundary: sigma.f - f = g for f = " + r.witness->to_string());
    std::vector<RankEvidence> ev;
    for (auto& comp : r.components) ev.push_back(rank_evidence(comp.evidence, comp.multidegree));
    if (record) c.noncoboundary = std::move(ev);
    else if (c.noncoboundary != ev) fail("recorded rank evidence does not match");
  });

  run("annihilators", static_cast<int>(Premise::annihilator), [&] {
    const bool search = record && c.witnesses.empty();
    for (std::size_t i = 0; i < c.k; ++i) {
      const auto& a = c.annihilators[i];
      const std::string tag = "a" + std::to_string(i + 1);
      if (a.is_zero() || !a.is_homogeneous() || a.total_degree() == 0)
        fail(tag + " is not homogeneous of positive degree");
      if (!ring->is_invariant(a)) fail(tag + " is not invariant");
      auto ag = multiply_invariant(a, gc);
      if (search) {
        auto w = annihilator_witness(a, gc, caps);
        if (!w.b) fail(tag + " g is not a coboundary");
        c.witnesses.push_back(*w.b);
        continue;
      }
      const auto& b = c.witnesses[i];
      if (!b.is_zero() && (!b.is_homogeneous() || b.total_degree() != static_cast<int>(ag.degree)))
        fail("b" + std::to_string(i + 1) + " has the wrong degree");
      if (!(ring->act_minus_id(b) == ring->reduce(ag.poly)))
        fail(tag + " g differs from (sigma - 1) b" + std::to_string(i + 1));
    }
  });

  run("phsop", static_cast<int>(Premise::phsop), [&] {
    auto facts = expected_facts(c);
    if (record) c.declared_facts = facts;
    else if (c.declared_facts != facts) fail("declared facts do not match the route taken");
    if (c.k < 2) return;
    const bool cop = coprime(c.annihilators[0], c.annihilators[1]);
    if (record) c.coprime = cop;
    else if (c.coprime != cop) fail("recorded coprimality does not match");
    if (!cop) fail("a1, a2 are not coprime in K[V]");
    if (c.condition == Condition::a && !g->reductive()) fail("condition (a) needs a reductive group");
    if (g->reductive()) {
      if (c.transfer) fail("unexpected transfer data for a reductive group");
      const std::size_t codim = ideal_codim(p, n, c.annihilators, caps);
      if (record) c.codim = codim;
      else if (c.codim != codim) fail("recorded codim does not match");
      if (codim != c.k) fail("a_1..a_k have codim " + std::to_string(codim) + " in K[V], need " + std::to_string(c.k));
    } else {
      if (c.codim) fail("unexpected codim evidence");
      check_transfer(c, record, caps);
    }
  });

  run("witness m", static_cast<int>(Premise::witness_m), [&] {
    if (c.k < 2) {
      if (c.m || c.nonmembership) fail("unexpected witness for k < 2");
      return;
    }
    const auto& a = c.annihilators;
    const auto& b = c.witnesses;
    Poly m = a[0] * b[1] - a[1] * b[0];
    if (c.m && !(*c.m == m)) fail("m differs from a1 b2 - a2 b1");
    if (record) c.m = m;
    if (!c.m) fail("missing m");
    if (!ring->is_invariant(m)) fail("m is not invariant");
    if (m.is_zero()) fail("m is zero");
    const Poly gens[] = {a[0], a[1]};
    auto mem = subring_membership(m, gens, *ring, caps);
    if (mem.coefficients) fail("m lies in (a1, a2) of the invariant ring");
    auto ev = rank_evidence(mem.evidence);
    if (record) c.nonmembership = ev;
    else if (c.nonmembership != ev) fail("recorded membership rank evidence does not match");
    if (!determinant_identities(a, b)) fail("determinant identity fails");
  });
  return out;
}

}  // namespace

Certificate certify_cmdef(const CertifyInput& in, const Caps& caps) {
  if (!in.ring) throw InvalidArgument("certify: missing ring");
  if (in.cocycle.ring != in.ring && !(in.cocycle.ring && in.cocycle.ring->module().action() == in.ring->module().action()))
    throw InvalidArgument("certify: cocycle lives over another module");
  Certificate c(in.ring->module());
  c.name = in.name;
  c.k = in.annihilators.size();
  c.condition = in.condition;
  c.cocycle_degree = in.cocycle.degree;
  c.cocycle = in.cocycle.poly;
  c.annihilators = in.annihilators;
  if (in.witnesses) c.witnesses = *in.witnesses;
  if (in.witnesses && in.witnesses->size() != c.k) throw PremiseFailed(Premise::annihilator, "one witness per annihilator");
  c.m = in.m;
  c.transfer = in.transfer;
  if (c.k < 2) c.m.reset();

  for (const auto& r : run_checks(c, in.ring, true, true, caps)) {
    if (r.passed) continue;
    if (r.code == kStructural) throw VerificationFailed(r.name + ": " + r.detail);
    throw PremiseFailed(static_cast<Premise>(r.code), r.detail);
  }
  return c;
}

VerifyReport verify_certificate(const Certificate& cert, const Caps& caps) {
  Certificate c = cert;
  RingPtr ring = make_ring(c.module);
  return {run_checks(c, ring, false, false, caps)};
}

}  // namespace cmdef
