#include "cmdef/builders.hpp"

#include "cmdef/invariants.hpp"

namespace cmdef {

namespace {

void require_nontrivial(const Cocycle& g) {
  if (!verify_cocycle(g)) throw InvalidArgument("g is not a cocycle");
  if (is_coboundary(g).witness) throw InvalidArgument("g is a coboundary");
}

std::vector<Representation> repeated(const Representation& v, std::size_t k) { return std::vector(k, v); }

// Coordinate functions x_off.. of a dual block transform like the basis of the
// original module, so they embed it with the identity as projection.
SummandWitness coordinate_summand(const CoordinateRing& ring, std::size_t offset, std::size_t dim) {
  SummandWitness w;
  for (std::size_t i = 0; i < dim; ++i) {
    w.embedding.push_back(Poly::variable(ring.p(), ring.nvars(), offset + i));
    w.projection.push_back(w.embedding.back());
  }
  return w;
}

Multidegree unit_multidegree(const CoordinateRing& ring, std::initializer_list<std::size_t> vars) {
  Multidegree md(ring.nblocks(), 0);
  for (auto v : vars) md[ring.block_of(v)] += 1;
  return md;
}

BuiltInstance instance(std::string name, RingPtr ring, GradedCocycle g, std::vector<Poly> anns, Condition cond) {
  return BuiltInstance{CertifyInput{std::move(name), std::move(ring), std::move(g), std::move(anns), std::nullopt,
                                    std::nullopt, cond, std::nullopt},
                       std::nullopt, std::nullopt, {}};
}

std::string kstr(std::size_t k) { return "k=" + std::to_string(k); }

}  // namespace

BuiltInstance build_extension_sum(const Cocycle& g, std::size_t k, const Caps&) {
  require_nontrivial(g);
  const auto& u = g.target;
  const std::size_t du = u.dim();
  Representation ext = extend_by_cocycle(g);
  std::vector<Representation> parts{dual(u)};
  for (auto& r : repeated(ext, k)) parts.push_back(r);
  auto v = direct_sum(parts).with_provenance({"extension_sum", kstr(k), {u.provenance()}});
  auto ring = make_ring(v);
  auto gc = embed_in_coordinate_ring(g, ring, coordinate_summand(*ring, 0, du));
  std::vector<Poly> anns;
  for (std::size_t i = 0; i < k; ++i) anns.push_back(Poly::variable(v.p(), v.dim(), du + i * (du + 1) + du));
  auto inst = instance("extension-sum " + kstr(k), ring, std::move(gc), std::move(anns), Condition::a);
  inst.source_cocycle = g;
  return inst;
}

BuiltInstance build_extension_blocks(const Cocycle& g, std::size_t k, const std::optional<Representation>& prefix,
                                     const Caps&) {
  require_nontrivial(g);
  const auto& u = g.target;
  const std::size_t du = u.dim(), dw = prefix ? prefix->dim() : 0;
  std::vector<Representation> block;
  if (prefix) block.push_back(*prefix);
  block.push_back(dual(u));
  block.push_back(extend_by_cocycle(g));
  auto one = direct_sum(block);
  auto v = direct_sum(repeated(one, k)).with_provenance({"extension_blocks", kstr(k), {u.provenance()}});
  auto ring = make_ring(v);
  if (k == 0) {
    GradedCocycle zero{ring, 0, Poly(v.p(), ring->total())};
    auto inst = instance("extension-blocks " + kstr(k), ring, std::move(zero), {}, Condition::a);
    inst.notes.push_back("k = 0: empty module, trivial bound");
    return inst;
  }
  auto gc = embed_in_coordinate_ring(g, ring, coordinate_summand(*ring, dw, du));
  std::vector<Poly> anns;
  for (std::size_t i = 0; i < k; ++i) anns.push_back(Poly::variable(v.p(), v.dim(), i * one.dim() + dw + du + du));
  auto inst = instance("extension-blocks " + kstr(k), ring, std::move(gc), std::move(anns), Condition::a);
  inst.source_cocycle = g;
  return inst;
}

BuiltInstance build_frobenius_module(const Representation& v, std::size_t k, const Caps& caps) {
  const auto& grp = v.group();
  if (grp.torus()) throw InvalidArgument("the group is a torus: Frobenius powers have complements");
  auto faithful = is_faithful(v, caps);
  if (!faithful) throw ResourceCapExceeded("faithfulness check of V");
  if (!*faithful) throw InvalidArgument("V is not faithful");

  Submodule f = frobenius_power(v);
  auto pc = cocycle_from_projection(f);
  require_nontrivial(pc.cocycle);
  const auto& u = pc.hom.module;
  const auto& q = pc.hom.quotient.module;
  const std::size_t df = f.dim(), dq = q.dim();
  std::vector<Representation> parts{dual(f.module()), q};
  for (auto& r : repeated(extend_by_cocycle(pc.cocycle), k)) parts.push_back(r);
  auto m = direct_sum(parts).with_provenance({"frobenius_module", kstr(k), {v.provenance()}});
  auto ring = make_ring(m);

  auto mf = is_faithful(m, caps);
  if (!mf) throw ResourceCapExceeded("faithfulness check of the module");
  if (!*mf) throw VerificationFailed("module fails the faithfulness re-check");

  // U = F (x) Q*: basis index i * dq + c <-> y_i z_c.
  SummandWitness w;
  for (std::size_t i = 0; i < df; ++i)
    for (std::size_t c = 0; c < dq; ++c) {
      Poly e = Poly::variable(m.p(), m.dim(), i) * Poly::variable(m.p(), m.dim(), df + c);
      w.embedding.push_back(e);
      w.projection.push_back(e);
    }
  auto gc = embed_in_coordinate_ring(pc.cocycle, ring, w);
  std::vector<Poly> anns;
  const std::size_t du = u.dim();
  for (std::size_t i = 0; i < k; ++i) anns.push_back(Poly::variable(m.p(), m.dim(), df + dq + i * (du + 1) + du));
  auto inst = instance("frobenius-module " + kstr(k), ring, std::move(gc), std::move(anns), Condition::a);
  inst.source_cocycle = pc.cocycle;
  return inst;
}

std::vector<std::string> example_names() { return {"ex51", "ex52a", "ex52b", "thm52"}; }

namespace {

// F^p(V) (+) V (+) k copies of `tail`, with the projection cocycle of
// F^p(V) in S^p(V) embedded in the (F^p, V) bidegree.
BuiltInstance frobenius_natural_example(const std::string& name, Coeff p, std::size_t k, const Representation& tail,
                                        const Caps& caps) {
  auto sl = builtin_group("SL2", p);
  auto v = natural_module(sl);
  Submodule f = frobenius_power(v);
  auto pc = cocycle_from_projection(f);
  std::vector<Representation> parts{f.module(), v};
  for (auto& r : repeated(tail, k)) parts.push_back(r);
  auto m = direct_sum(parts).with_provenance({"example", name + " " + kstr(k), {}});
  auto ring = make_ring(m);
  auto w = find_summand(pc.hom.module, *ring, unit_multidegree(*ring, {0, 2}), caps);
  if (!w) throw VerificationFailed(name + ": no summand realizing the cocycle module");
  auto gc = embed_in_coordinate_ring(pc.cocycle, ring, *w);
  auto inst = instance(name + " " + kstr(k), ring, std::move(gc), {}, Condition::a);
  inst.source_cocycle = pc.cocycle;
  inst.natural_summand = std::pair<std::size_t, std::size_t>{2, 3};
  return inst;
}

// Per copy of the tail: the first invariant of degree d supported on that copy
// that annihilates the cocycle.
void copy_annihilators(BuiltInstance& inst, std::size_t offset, std::size_t copy_dim, std::size_t k, unsigned d,
                       const Caps& caps) {
  const auto& ring = *inst.input.ring;
  for (std::size_t i = 0; i < k; ++i) {
    Multidegree md(ring.nblocks(), 0);
    md[ring.block_of(offset + i * copy_dim)] = d;
    auto cands = invariant_slice(ring, md, caps).basis;
    auto space = annihilator_space(inst.input.cocycle, cands, caps);
    if (space.basis.empty())
      throw VerificationFailed("no degree-" + std::to_string(d) + " annihilator on copy " + std::to_string(i + 1));
    inst.input.annihilators.push_back(space.basis.front());
  }
}

// Ga on F^p(V) (+) k V, through the SL2 module with one more natural copy:
// there the adjacent brackets of the natural copies annihilate the
// projection cocycle and the extra copy is the summand Roberts removes.
BuiltInstance thm52_example(Coeff p, std::size_t k, const Caps& caps) {
  auto sl = builtin_group("SL2", p);
  auto v = natural_module(sl);
  Submodule f = frobenius_power(v);
  auto pc = cocycle_from_projection(f);
  const std::size_t df = f.dim();
  std::vector<Representation> parts{f.module()};
  for (auto& r : repeated(v, k + 1)) parts.push_back(r);
  auto w = direct_sum(parts).with_provenance({"example", "thm52 " + kstr(k) + " with <X,Y>", {}});
  auto ring = make_ring(w);

  std::optional<SummandWitness> sw;
  for (std::size_t extra : {std::size_t(0), df + 2 * k}) {
    auto md = extra ? unit_multidegree(*ring, {0, extra}) : unit_multidegree(*ring, {0});
    if ((sw = find_summand(pc.hom.module, *ring, md, caps))) break;
  }
  if (!sw) throw VerificationFailed("thm52: no summand realizing the cocycle module");
  auto gc = embed_in_coordinate_ring(pc.cocycle, ring, *sw);
  auto sl2 = instance("thm52 " + kstr(k), ring, std::move(gc), {}, Condition::a);
  sl2.source_cocycle = pc.cocycle;
  sl2.natural_summand = std::pair<std::size_t, std::size_t>{df, df + 1};

  // Lowest bidegree (e, e) on copies i, i + 1 holding an annihilator; for p = 3
  // that is the bracket itself next to the cocycle's copy and its square elsewhere.
  for (std::size_t i = 0; i < k; ++i) {
    std::optional<Poly> found;
    for (unsigned e = 1; e <= p && !found; ++e) {
      Multidegree md(ring->nblocks(), 0);
      md[ring->block_of(df + 2 * i)] = e;
      md[ring->block_of(df + 2 * (i + 1))] = e;
      auto cands = invariant_slice(*ring, md, caps).basis;
      auto space = annihilator_space(sl2.input.cocycle, cands, caps);
      if (!space.basis.empty()) found = space.basis.front();
    }
    if (!found)
      throw VerificationFailed("thm52: annihilator search found nothing on copies " + std::to_string(i + 1) + ", " +
                               std::to_string(i + 2));
    sl2.input.annihilators.push_back(*found);
  }
  auto ga = transfer_input(sl2);
  if (!ga.input) throw VerificationFailed("thm52: " + ga.status);
  BuiltInstance out{*ga.input, std::nullopt, std::nullopt, {}};
  out.input.name = "thm52 " + kstr(k);
  out.notes.push_back("annihilators: adjacent brackets of the natural copies or their powers, found by annihilator search");
  out.notes.push_back("phsop in K[V]^Ga via the SL2 module with one more natural copy");
  return out;
}

}  // namespace

BuiltInstance build_example(const std::string& name, Coeff p, std::size_t k, const Caps& caps) {
  if (name == "ex51") {
    if (p != 2) throw InvalidArgument("ex51 needs p = 2");
    auto sl = builtin_group("SL2", 2);
    auto v = natural_module(sl);
    Submodule f = frobenius_power(v);
    auto pc = cocycle_from_projection(f);
    auto s2 = symmetric_power(v, 2);
    std::vector<Representation> parts{f.module()};
    for (auto& r : repeated(s2, k)) parts.push_back(r);
    auto m = direct_sum(parts).with_provenance({"example", "ex51 " + kstr(k), {}});
    auto ring = make_ring(m);
    auto w = find_summand(pc.hom.module, *ring, unit_multidegree(*ring, {0}), caps);
    if (!w) throw VerificationFailed("ex51: no summand realizing the cocycle module");
    auto gc = embed_in_coordinate_ring(pc.cocycle, ring, *w);
    std::vector<Poly> anns;
    for (std::size_t i = 0; i < k; ++i) anns.push_back(Poly::variable(2, m.dim(), 2 + 3 * i + 2));  // XY coordinate
    auto inst = instance("ex51 " + kstr(k), ring, std::move(gc), std::move(anns), Condition::a);
    inst.source_cocycle = pc.cocycle;
    return inst;
  }
  if (name == "ex52a" || name == "ex52b") {
    if (p != 3) throw InvalidArgument(name + " needs p = 3");
    auto v = natural_module(builtin_group("SL2", 3));
    const bool a = name == "ex52a";
    auto tail = symmetric_power(v, a ? 4 : 2);
    auto inst = frobenius_natural_example(name, 3, k, tail, caps);
    copy_annihilators(inst, 4, tail.dim(), k, a ? 1 : 2, caps);
    return inst;
  }
  if (name == "thm52") return thm52_example(p, k, caps);
  throw InvalidArgument("unknown example '" + name + "'");
}

TransferResult transfer_input(const BuiltInstance& sl2) {
  TransferResult out;
  const auto& in = sl2.input;
  const auto& w = in.ring->module();
  if (w.group().name() != "SL2") throw InvalidArgument("transfer needs an SL2 instance");
  if (!sl2.natural_summand) throw InvalidArgument("transfer needs a natural <X,Y> summand");
  const auto [xi, yi] = *sl2.natural_summand;
  const Coeff p = w.p();
  const std::size_t nw = w.dim();

  auto ga = builtin_group("Ga", p);
  auto h = homomorphism(ga, w.group_ptr(),
                        {Poly::constant(p, 1, 1), Poly::variable(p, 1, 0), Poly(p, 1), Poly::constant(p, 1, 1)});
  auto restricted = restrict(w, h);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < nw; ++i)
    if (i != xi && i != yi) rest.push_back(i);
  PolyMatrix a(rest.size(), rest.size(), p, 1);
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < rest.size(); ++r) {
    labels.push_back(restricted.labels()[rest[r]]);
    for (std::size_t s = 0; s < rest.size(); ++s) a(r, s) = restricted.action()(rest[r], rest[s]);
  }
  Representation v(ga, std::move(a), std::move(labels), {"roberts", "evaluate at X", {w.provenance()}});
  auto ring = make_ring(v);

  // sigma's SL2 coordinates -> h(t); x -> evaluation at X.
  const std::size_t total = ring->total();
  std::vector<Poly> images;
  const std::size_t tvar[] = {0};
  for (const auto& c : h.coord_map) images.push_back(c.remap(total, tvar));
  std::size_t next = 1;
  for (std::size_t i = 0; i < nw; ++i) {
    if (i == xi) images.push_back(Poly::constant(p, total, 1));
    else if (i == yi) images.push_back(Poly(p, total));
    else images.push_back(Poly::variable(p, total, next++));
  }
  Poly g = ring->reduce(in.cocycle.poly.substitute(images, total));
  if (g.is_zero()) {
    out.status = "transfer failed: restricted cocycle vanishes";
    return out;
  }
  int deg = -1;
  for (const auto& t : g.terms()) {
    int d = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) d += t.mono[1 + i];
    if (deg >= 0 && d != deg) {
      out.status = "transfer failed: restricted cocycle is not homogeneous";
      return out;
    }
    deg = d;
  }
  std::vector<Poly> anns;
  for (const auto& f : in.annihilators) {
    Poly e = evaluate_at_x(f, xi, yi);
    if (e.is_zero() || !e.is_homogeneous()) {
      out.status = "transfer failed: an annihilator does not evaluate to a homogeneous invariant";
      return out;
    }
    anns.push_back(std::move(e));
  }
  PhsopTransfer t{w, xi, yi, in.annihilators, 0};
  CertifyInput ci{in.name + " over Ga", ring, GradedCocycle{ring, static_cast<unsigned>(deg), g}, std::move(anns),
                  std::nullopt, std::nullopt, Condition::b, std::move(t)};
  out.input = std::move(ci);
  out.status = "prepared";
  return out;
}

TransferResult roberts_transfer(const BuiltInstance& sl2, const Caps& caps) {
  TransferResult out = transfer_input(sl2);
  if (!out.input) return out;
  try {
    out.certificate = certify_cmdef(*out.input, caps);
    out.status = "certified";
  } catch (const PremiseFailed& e) {
    out.status = std::string("transfer failed: ") + e.what();
  }
  return out;
}

}  // namespace cmdef
