// Acceptance gate: runs every criterion and prints PASS/FAIL per criterion.
// Exit status is nonzero when any criterion fails.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cmdef/builders.hpp"
#include "cmdef/certify.hpp"
#include "cmdef/cohom.hpp"
#include "cmdef/invariants.hpp"
#include "cmdef/json_io.hpp"

using namespace cmdef;

namespace {

struct Log {
  std::ostringstream out;
  bool ok = true;
  void check(bool cond, const std::string& what) {
    out << "    " << (cond ? "ok   " : "FAIL ") << what << "\n";
    ok = ok && cond;
  }
};

// Re-verify from serialized text only, as an independent consumer would.
bool verify_from_text(const Certificate& c) {
  auto back = certificate_from_json(Json::parse(dump(to_json(c))));
  return verify_certificate(back).ok();
}

std::vector<Certificate>& certified() {
  static std::vector<Certificate> all;
  return all;
}

Certificate certify_and_keep(const CertifyInput& in) {
  auto c = certify_cmdef(in);
  certified().push_back(c);
  return c;
}

Representation gm_diagonal(Coeff p, int w0, int w1) {
  auto g = builtin_group("Gm", p);
  PolyMatrix a(2, 2, p, 2);
  int w[] = {w0, w1};
  for (int i = 0; i < 2; ++i)
    a(i, i) = Poly::monomial(p, 2, w[i] >= 0 ? Monomial::var(0, w[i]) : Monomial::var(1, -w[i]));
  return Representation(g, a, {"e0", "e1"}, {"diagonal", std::to_string(w0) + "," + std::to_string(w1), {}});
}

Cocycle add(const Cocycle& a, const Cocycle& b) {
  Cocycle out = a;
  for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] += b.components[i];
  return out;
}

GfVector random_vector(std::mt19937& rng, Coeff p, std::size_t n) {
  std::uniform_int_distribution<Coeff> d(0, p - 1);
  GfVector v(n);
  for (auto& c : v) c = d(rng);
  return v;
}

// ---------------------------------------------------------------------------

bool nontriviality_oracle(Log& log) {
  auto v = natural_module(builtin_group("SL2", 2));
  auto pc = cocycle_from_projection(frobenius_power(v));
  log.check(cocycle_law_failures(pc.cocycle).empty(), "F^2(V) in S^2(V) projection cocycle satisfies the cocycle law");
  auto r = is_coboundary(pc.cocycle);
  log.check(!r.witness, "SL2 p=2: no coboundary witness");
  log.check(r.evidence.rank < r.evidence.augmented_rank,
            "rank evidence: rank " + std::to_string(r.evidence.rank) + " < augmented rank " +
                std::to_string(r.evidence.augmented_rank) + " (" + std::to_string(r.evidence.unknowns) +
                " unknowns, " + std::to_string(r.evidence.equations) + " equations)");

  std::size_t cases = 0, found = 0;
  for (Coeff p : {2u, 3u, 5u})
    for (int w0 = -2; w0 <= 2; ++w0)
      for (int w1 = -2; w1 <= 2; ++w1) {
        auto m = gm_diagonal(p, w0, w1);
        // all lines when the weights agree, the two coordinate lines otherwise
        std::vector<GfVector> dirs{{1, 0}, {0, 1}};
        if (w0 == w1)
          for (Coeff t = 1; t < p; ++t) dirs.push_back({t, 1});
        for (const auto& d : dirs) {
          GfMatrix inc(2, 1, p);
          inc(0, 0) = d[0];
          inc(1, 0) = d[1];
          auto pc2 = cocycle_from_projection(Submodule(m, inc));
          auto res = is_coboundary(pc2.cocycle);
          ++cases;
          if (res.witness && coboundary(pc2.cocycle.target, *res.witness).components == pc2.cocycle.components) ++found;
        }
      }
  log.check(cases == found, "Gm diagonal: coboundary witness found for " + std::to_string(found) + "/" +
                                std::to_string(cases) + " (module, submodule) pairs");
  return log.ok;
}

bool example_51(Log& log) {
  for (std::size_t k : {2u, 3u, 4u}) {
    auto c = certify_and_keep(build_example("ex51", 2, k).input);
    log.check(c.conclusion == static_cast<int>(k) - 2,
              "ex51 k=" + std::to_string(k) + ": conclusion cmdef >= " + std::to_string(c.conclusion));
    log.check(verify_from_text(c), "ex51 k=" + std::to_string(k) + ": independent verify from JSON");
  }
  return log.ok;
}

bool example_52(Log& log) {
  for (const char* name : {"ex52a", "ex52b"})
    for (std::size_t k : {2u, 3u}) {
      auto inst = build_example(name, 3, k);
      auto c = certify_and_keep(inst.input);
      const std::string tag = std::string(name) + " k=" + std::to_string(k);
      log.check(c.conclusion == static_cast<int>(k) - 2, tag + ": conclusion cmdef >= " + std::to_string(c.conclusion));
      log.check(verify_from_text(c), tag + ": independent verify from JSON");
      if (std::string(name) == "ex52b") {
        const auto& m = inst.module();
        auto iso = find_isomorphism(m, dual(m));
        log.check(iso && is_intertwiner(*iso, m, dual(m)), tag + ": invertible intertwiner M -> M* (self-dual)");
      }
    }
  return log.ok;
}

bool frobenius_module(Log& log) {
  auto inst = build_frobenius_module(natural_module(builtin_group("SL2", 2)), 3);
  const auto& m = inst.module();
  log.check(m.dim() == 12, "dim M_3 = " + std::to_string(m.dim()));
  auto f = is_faithful(m);
  log.check(f && *f, "is_faithful(M_3)");
  auto c = certify_and_keep(inst.input);
  log.check(c.conclusion == 1, "conclusion cmdef >= " + std::to_string(c.conclusion));
  log.check(verify_from_text(c), "independent verify from JSON");
  return log.ok;
}

bool roberts(Log& log) {
  auto sl2 = build_example("ex52b", 3, 3);
  auto t = roberts_transfer(sl2);
  log.check(t.certificate.has_value(), "transfer status: " + t.status);
  if (!t.certificate) return false;
  const auto& c = *t.certificate;
  certified().push_back(c);
  log.check(c.module.group().name() == "Ga", "certificate is over Ga");
  log.check(c.conclusion == 1, "conclusion cmdef >= " + std::to_string(c.conclusion));
  log.check(!c.noncoboundary.empty(), "fresh nontriviality evidence for the restricted cocycle (" +
                                          std::to_string(c.noncoboundary.size()) + " components)");
  log.check(c.transfer.has_value(), "phsop transfer data recorded");
  log.check(verify_from_text(c), "independent verify from JSON");
  return log.ok;
}

bool determinant_identity(Log& log) {
  for (Coeff p : {2u, 3u})
    for (std::size_t k : {2u, 3u, 4u}) certified().push_back(certify_cmdef(build_example("thm52", p, k).input));
  std::size_t good = 0;
  for (const auto& c : certified()) good += determinant_identities(c.annihilators, c.witnesses);
  log.check(good == certified().size(),
            "determinant identity on " + std::to_string(good) + "/" + std::to_string(certified().size()) +
                " certified instances, all triples");

  // a_i -> c_i a_i, b_i -> c_i b_i for random invariants c_i keeps a g = (sigma - 1) b
  std::mt19937 rng(20240611);
  std::vector<BuiltInstance> bases{build_example("ex51", 2, 3), build_example("ex51", 2, 4),
                                   build_example("ex52b", 3, 3)};
  std::size_t passed = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto& inst = bases[trial % bases.size()];
    const auto& ring = *inst.input.ring;
    auto c = certify_cmdef(inst.input);
    std::vector<Poly> a, b;
    for (std::size_t i = 0; i < c.k; ++i) {
      unsigned d = std::uniform_int_distribution<unsigned>(0, 2)(rng);
      auto slice = invariant_slice(ring, d).basis;
      Poly mult(ring.p(), ring.nvars());
      for (const auto& s : slice) mult += s.scaled(std::uniform_int_distribution<Coeff>(0, ring.p() - 1)(rng));
      if (mult.is_zero()) mult = Poly::constant(ring.p(), ring.nvars(), 1);
      a.push_back(mult * c.annihilators[i]);
      b.push_back(mult * c.witnesses[i]);
    }
    GradedCocycle g{inst.input.ring, c.cocycle_degree, c.cocycle};
    bool ok = determinant_identities(a, b);
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      ok = ring.is_invariant(a[i]) && ring.act_minus_id(b[i]) == ring.reduce(multiply_invariant(a[i], g).poly);
    ++total;
    passed += ok;
  }
  log.check(passed == total, "randomized invariant multiples: " + std::to_string(passed) + "/" +
                                 std::to_string(total) + " consistent");
  return log.ok;
}

bool witness_m(Log& log) {
  auto inst = build_example("ex51", 2, 2);
  auto c = certify_cmdef(inst.input);
  const auto& ring = *inst.input.ring;
  const Poly gens[] = {c.annihilators[0], c.annihilators[1]};
  auto mem = subring_membership(*c.m, gens, ring);
  log.check(!mem.coefficients, "m not in (a1, a2) of the invariant ring: no witness (rank " +
                                   std::to_string(mem.evidence.rank) + ", augmented " +
                                   std::to_string(mem.evidence.augmented_rank) + ")");
  const bool ambient = ambient_membership(*c.m, gens);
  log.out << "    info ambient membership of m in (a1, a2) K[V]: " << (ambient ? "member" : "not a member") << "\n";

  // add a non-invariant of the right degree to b2
  auto bad = c;
  Poly extra(ring.p(), ring.nvars());
  const int d = c.witnesses[1].total_degree();
  for (std::size_t i = 0; i < ring.nvars() && extra.is_zero(); ++i) {
    Poly cand = Poly::variable(ring.p(), ring.nvars(), i).pow(static_cast<unsigned>(d));
    if (!ring.is_invariant(cand)) extra = cand;
  }
  log.check(!extra.is_zero() && !ring.is_invariant(extra), "corruption " + extra.to_string() + " is not invariant");
  bad.witnesses[1] = bad.witnesses[1] + extra;
  auto rep = verify_certificate(bad);
  std::string flipped;
  for (const auto& ch : rep.checks)
    if (!ch.passed) flipped += (flipped.empty() ? "" : ", ") + ch.name;
  log.check(!rep.ok(), "corrupted b2 flips: " + (flipped.empty() ? std::string("nothing") : flipped));
  return log.ok;
}

bool representation_laws(Log& log) {
  std::vector<Representation> mods;
  for (auto [name, p] : std::vector<std::pair<const char*, Coeff>>{{"SL2", 2}, {"SL2", 3}, {"Ga", 2}, {"Ga", 3},
                                                                    {"Gm", 3}, {"Gm", 5}}) {
    auto g = builtin_group(name, p);
    auto v = natural_module(g);
    auto s2 = symmetric_power(v, 2);
    mods.insert(mods.end(), {v, dual(v), s2, symmetric_power(v, 3), symmetric_power(v, 4), tensor(v, v),
                             tensor(dual(v), s2), direct_sum(v, dual(s2)), dual(tensor(v, s2)),
                             symmetric_power(dual(v), 2), trivial_module(g, 1)});
    auto f = frobenius_power(v);
    mods.push_back(f.module());
    if (f.dim() < symmetric_power(v, p).dim()) {
      auto h = hom0(f);
      mods.push_back(h.module);
      mods.push_back(quotient(f));
    }
  }
  for (Coeff p : {2u, 3u}) {
    auto v = natural_module(builtin_group("SL2", p));
    auto pc = cocycle_from_projection(frobenius_power(v));
    mods.push_back(extend_by_cocycle(pc.cocycle));
    for (std::size_t k : {2u, 3u}) {
      mods.push_back(build_extension_sum(pc.cocycle, k).module());
      mods.push_back(build_extension_blocks(pc.cocycle, k).module());
      mods.push_back(build_frobenius_module(v, k).module());
    }
  }
  mods.push_back(extend_by_cocycle(Cocycle{trivial_module(builtin_group("Ga", 3), 1), {Poly::parse("x0", 3, 1)}}));
  for (std::size_t k : {2u, 3u, 4u}) mods.push_back(build_example("ex51", 2, k).module());
  for (std::size_t k : {2u, 3u}) {
    mods.push_back(build_example("ex52a", 3, k).module());
    mods.push_back(build_example("ex52b", 3, k).module());
  }
  for (Coeff p : {2u, 3u})
    for (std::size_t k : {2u, 3u, 4u}) {
      auto inst = build_example("thm52", p, k);
      mods.push_back(inst.module());
      mods.push_back(inst.input.transfer->module);
    }
  std::size_t good = 0;
  for (const auto& m : mods) {
    auto f = representation_law_failures(m);
    good += f.empty();
    if (!f.empty()) log.out << "    FAIL " << m.provenance().op << " " << m.provenance().detail << ": " << f.front() << "\n";
  }
  log.check(good == mods.size(), "action(unit) = I and action(sigma tau) = action(sigma) action(tau): " +
                                     std::to_string(good) + "/" + std::to_string(mods.size()) + " modules");
  return log.ok;
}

bool cohomology_solver(Log& log) {
  std::mt19937 rng(97);
  for (const char* name : {"SL2", "Ga", "Gm"}) {
    const Coeff p = std::string(name) == "Gm" ? 5 : 3;
    auto g = builtin_group(name, p);
    auto v = natural_module(g);
    std::vector<Representation> targets{v, symmetric_power(v, 2), tensor(v, dual(v)), dual(symmetric_power(v, 3))};
    std::size_t ok = 0;
    for (int i = 0; i < 50; ++i) {
      const auto& u = targets[i % targets.size()];
      auto c = coboundary(u, random_vector(rng, p, u.dim()));
      auto r = is_coboundary(c);
      ok += r.witness && coboundary(u, *r.witness).components == c.components;
    }
    log.check(ok == 50, std::string(name) + ": " + std::to_string(ok) + "/50 random coboundaries recovered exactly");

    // class invariance
    std::vector<Cocycle> classes;
    if (std::string(name) == "SL2") classes.push_back(cocycle_from_projection(frobenius_power(v)).cocycle);
    if (std::string(name) == "Ga") classes.push_back(Cocycle{trivial_module(g, 1), {Poly::variable(p, 1, 0)}});
    std::size_t inv = 0, tries = 0;
    for (const auto& cls : classes) {
      const bool base = is_coboundary(cls).witness.has_value();
      for (int i = 0; i < 20; ++i, ++tries)
        inv += is_coboundary(add(cls, coboundary(cls.target, random_vector(rng, p, cls.target.dim())))).witness.has_value() ==
               base;
    }
    for (int i = 0; i < 20; ++i, ++tries) {
      const auto& u = targets[i % targets.size()];
      auto sum = add(coboundary(u, random_vector(rng, p, u.dim())), coboundary(u, random_vector(rng, p, u.dim())));
      inv += is_coboundary(sum).witness.has_value();
    }
    log.check(inv == tries, std::string(name) + ": class unchanged by adding coboundaries in " + std::to_string(inv) +
                                "/" + std::to_string(tries) + " cases");
  }
  return log.ok;
}

// Runs certify on a corrupted input; returns the premise code, 0 if it certified.
int certify_code(const CertifyInput& in) {
  try {
    certify_cmdef(in);
    return 0;
  } catch (const PremiseFailed& e) {
    return e.code();
  } catch (const Error&) {
    return -1;
  }
}

bool mutation_suite(Log& log) {
  struct Mutation {
    std::string name;
    Premise want;
    std::function<void(CertifyInput&)> apply;
  };
  std::vector<std::pair<std::string, BuiltInstance>> bases;
  bases.emplace_back("ex51 k=3", build_example("ex51", 2, 3));
  bases.emplace_back("ex52a k=3", build_example("ex52a", 3, 3));
  bases.emplace_back("thm52 p=2 k=3", build_example("thm52", 2, 3));

  std::vector<Mutation> muts{
      {"cocycle: add sigma-coordinate * x0", Premise::cocycle,
       [](CertifyInput& in) {
         const auto& r = *in.ring;
         in.cocycle.poly += Poly::variable(r.p(), r.total(), 0) * Poly::variable(r.p(), r.total(), r.group_vars());
       }},
      {"nontriviality: replace the cocycle by a coboundary", Premise::nontriviality,
       [](CertifyInput& in) {
         const auto& r = *in.ring;
         // the coboundary of the first non-invariant monomial of the cocycle's degree
         for (std::size_t i = 0; i < r.nvars(); ++i) {
           auto f = Poly::variable(r.p(), r.nvars(), i).pow(in.cocycle.degree);
           auto g = coboundary(in.ring, f);
           if (!g.poly.is_zero()) {
             in.cocycle = g;
             return;
           }
         }
       }},
      {"annihilator: replace a1 by a non-invariant", Premise::annihilator,
       [](CertifyInput& in) {
         const auto& r = *in.ring;
         for (std::size_t i = 0; i < r.nvars(); ++i) {
           auto f = Poly::variable(r.p(), r.nvars(), i);
           if (!r.is_invariant(f)) {
             in.annihilators[0] = f;
             return;
           }
         }
       }},
      {"annihilator: replace a1 by a nonzero constant", Premise::annihilator,
       [](CertifyInput& in) { in.annihilators[0] = Poly::constant(in.ring->p(), in.ring->nvars(), 1); }},
      {"phsop: a2 = a1 (not coprime)", Premise::phsop,
       [](CertifyInput& in) { in.annihilators[1] = in.annihilators[0]; }},
      {"phsop: a3 = a1^2 (codim drops)", Premise::phsop,
       [](CertifyInput& in) { in.annihilators[2] = in.annihilators[0] * in.annihilators[0]; }},
      {"phsop: wrong route declared", Premise::phsop,
       [](CertifyInput& in) {
         if (in.ring->group().reductive()) {
           in.condition = Condition::b;
           in.transfer = PhsopTransfer{in.ring->module(), 0, 1, in.annihilators, in.annihilators.size()};
         } else {
           in.condition = Condition::a;
         }
       }},
      {"witness m: m not equal to a1 b2 - a2 b1", Premise::witness_m,
       [](CertifyInput& in) {
         const auto& r = *in.ring;
         in.m = Poly::variable(r.p(), r.nvars(), 0);
       }},
  };

  std::size_t matched = 0, total = 0, false_certs = 0;
  for (const auto& [bname, inst] : bases) {
    log.check(certify_code(inst.input) == 0, bname + ": unmutated input certifies");
    for (const auto& m : muts) {
      auto in = inst.input;
      m.apply(in);
      const int code = certify_code(in);
      ++total;
      false_certs += code == 0;
      const bool ok = code == static_cast<int>(m.want);
      matched += ok;
      if (!ok)
        log.out << "    FAIL " << bname << " / " << m.name << ": got code " << code << ", want "
                << static_cast<int>(m.want) << "\n";
    }
  }
  log.check(matched == total, "targeted corruptions fail with the matching premise: " + std::to_string(matched) + "/" +
                                  std::to_string(total));
  log.check(false_certs == 0, "false certificates: " + std::to_string(false_certs));

  // recorded-certificate corruption is caught by verify with a named check
  auto good = certify_cmdef(bases[0].second.input);
  auto flipped = good;
  flipped.cocycle = flipped.cocycle + Poly::constant(good.module.p(), flipped.cocycle.nvars(), 1);
  auto rep = verify_certificate(flipped);
  log.check(rep.exit_code() == static_cast<int>(Premise::cocycle), "verify on a flipped cocycle coefficient exits " +
                                                                        std::to_string(rep.exit_code()));
  return log.ok;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    bool (*run)(Log&);
  };
  const Criterion criteria[] = {
      {1, "nontriviality oracle (SL2 non-coboundary, Gm splits)", nontriviality_oracle},
      {2, "ex51 end-to-end, k = 2, 3, 4", example_51},
      {3, "ex52a / ex52b end-to-end at p = 3, self-duality", example_52},
      {4, "Frobenius module M_3 for SL2, p = 2", frobenius_module},
      {7, "Roberts transfer of ex52b, p = 3, k = 3", roberts},
      {5, "determinant identity and randomized consistency", determinant_identity},
      {6, "witness m non-membership and b2 corruption", witness_m},
      {8, "representation laws for constructed modules", representation_laws},
      {9, "cohomology solver properties", cohomology_solver},
      {10, "soundness mutation suite", mutation_suite},
  };
  std::vector<std::pair<int, bool>> results;
  std::vector<std::string> lines(11);
  for (const auto& c : criteria) {
    Log log;
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log.out << "    exception: " << e.what() << "\n";
      ok = false;
    }
    std::ostringstream s;
    s << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "\n" << log.out.str();
    lines[c.id] = s.str();
    results.push_back({c.id, ok});
  }
  // certified instances accumulate across 2, 3, 4 and 7 before 5 runs; print in order
  int failed = 0;
  for (int id = 1; id <= 10; ++id) std::cout << lines[id];
  for (const auto& [id, ok] : results) failed += !ok;
  std::cout << (failed ? "acceptance: FAIL (" + std::to_string(failed) + " criteria)" : std::string("acceptance: PASS"))
            << "\n";
  return failed ? 1 : 0;
}
