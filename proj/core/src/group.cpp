#include "cmdef/group.hpp"

#include <numeric>

#include "cmdef/errors.hpp"

namespace cmdef {

GroupPresentation::GroupPresentation(Data data) : d_(std::move(data)) {
  const std::size_t n = d_.coord_names.size();
  PrimeField field(d_.p);  // rejects non-primes
  if (d_.unit.size() != n) throw InvalidArgument("group unit has wrong arity");
  if (d_.mult.size() != n || d_.inv.size() != n) throw InvalidArgument("group maps have wrong arity");
  for (auto& u : d_.unit) u = field.reduce(u);
  for (const auto& r : d_.relations)
    if (r.p() != d_.p || r.nvars() != n) throw RingMismatch("group relation outside coordinate ring");
  for (const auto& m : d_.mult)
    if (m.p() != d_.p || m.nvars() != 2 * n) throw RingMismatch("multiplication map ring");
  for (const auto& i : d_.inv)
    if (i.p() != d_.p || i.nvars() != n) throw RingMismatch("inversion map ring");
  if (d_.natural.rows() != d_.natural.cols() || d_.natural.p() != d_.p || d_.natural.nvars() != n)
    throw RingMismatch("natural matrix ring");
  basis_ = groebner(d_.p, n, d_.relations).groebner();
}

std::vector<Poly> GroupPresentation::point(std::size_t total, std::size_t offset) const {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < ncoords(); ++i) out.push_back(Poly::variable(p(), total, offset + i));
  return out;
}

Poly GroupPresentation::place(const Poly& f, std::size_t total, std::size_t offset) const {
  std::vector<std::size_t> idx(ncoords());
  std::iota(idx.begin(), idx.end(), offset);
  return f.remap(total, idx);
}

PolyMatrix GroupPresentation::place(const PolyMatrix& m, std::size_t total, std::size_t offset) const {
  std::vector<std::size_t> idx(ncoords());
  std::iota(idx.begin(), idx.end(), offset);
  return m.remap(total, idx);
}

std::vector<Poly> GroupPresentation::relations_at(std::size_t total, std::size_t offset) const {
  std::vector<Poly> out;
  for (const auto& r : basis_) out.push_back(place(r, total, offset));
  return out;
}

std::vector<Poly> GroupPresentation::inv_at(std::size_t total, std::size_t offset) const {
  std::vector<Poly> out;
  for (const auto& r : d_.inv) out.push_back(place(r, total, offset));
  return out;
}

std::vector<Poly> GroupPresentation::mult_at(std::size_t total, std::size_t sigma, std::size_t tau) const {
  std::vector<Poly> images = point(total, sigma);
  auto second = point(total, tau);
  images.insert(images.end(), second.begin(), second.end());
  std::vector<Poly> out;
  for (const auto& m : d_.mult) out.push_back(m.substitute(images, total));
  return out;
}

bool operator==(const GroupPresentation& a, const GroupPresentation& b) {
  if (&a == &b) return true;
  const auto& x = a.d_;
  const auto& y = b.d_;
  return x.name == y.name && x.p == y.p && x.coord_names == y.coord_names && x.relations == y.relations &&
         x.unit == y.unit && x.mult == y.mult && x.inv == y.inv && x.natural == y.natural &&
         x.reductive == y.reductive && x.torus == y.torus;
}

GroupPtr builtin_group(const std::string& name, Coeff p) {
  if (!PrimeField::is_prime(p) || p > PrimeField::kMaxPrime)
    throw InvalidArgument("characteristic must be a prime <= 65521, got " + std::to_string(p));
  GroupPresentation::Data d;
  d.name = name;
  d.p = p;
  auto P = [p](std::string_view text, std::size_t n) { return Poly::parse(text, p, n); };
  if (name == "SL2") {
    d.coord_names = {"a", "b", "c", "d"};
    d.relations = {P("x0*x3 - x1*x2 - 1", 4)};
    d.unit = {1, 0, 0, 1};
    // sigma = (x0..x3), tau = (x4..x7); product of [[a,b],[c,d]] matrices.
    d.mult = {P("x0*x4 + x1*x6", 8), P("x0*x5 + x1*x7", 8), P("x2*x4 + x3*x6", 8), P("x2*x5 + x3*x7", 8)};
    d.inv = {P("x3", 4), P("-x1", 4), P("-x2", 4), P("x0", 4)};
    d.natural = PolyMatrix(2, 2, p, 4);
    d.natural(0, 0) = P("x0", 4);
    d.natural(0, 1) = P("x1", 4);
    d.natural(1, 0) = P("x2", 4);
    d.natural(1, 1) = P("x3", 4);
    d.reductive = true;
  } else if (name == "Ga") {
    d.coord_names = {"t"};
    d.unit = {0};
    d.mult = {P("x0 + x1", 2)};
    d.inv = {P("-x0", 1)};
    d.natural = PolyMatrix(2, 2, p, 1);
    d.natural(0, 0) = P("1", 1);
    d.natural(0, 1) = P("x0", 1);
    d.natural(1, 1) = P("1", 1);
  } else if (name == "Gm") {
    d.coord_names = {"s", "u"};
    d.relations = {P("x0*x1 - 1", 2)};
    d.unit = {1, 1};
    d.mult = {P("x0*x2", 4), P("x1*x3", 4)};
    d.inv = {P("x1", 2), P("x0", 2)};
    d.natural = PolyMatrix(1, 1, p, 2);
    d.natural(0, 0) = P("x0", 2);
    d.reductive = true;
    d.torus = true;
  } else {
    throw InvalidArgument("unknown group '" + name + "' (expected SL2, Ga or Gm)");
  }
  return std::make_shared<const GroupPresentation>(std::move(d));
}

Coeff evaluate(const Poly& f, std::span<const Coeff> point) {
  if (point.size() != f.nvars()) throw InvalidArgument("evaluation point has wrong arity");
  PrimeField field(f.p());
  Coeff acc = 0;
  for (const auto& t : f.terms()) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < f.nvars() && v; ++i)
      if (t.mono[i]) v = field.mul(v, field.pow(point[i], t.mono[i]));
    acc = field.add(acc, v);
  }
  return acc;
}

std::vector<Poly> block_relations(const GroupPresentation& g, std::size_t total,
                                  std::span<const std::size_t> offsets) {
  std::vector<Poly> out;
  for (std::size_t off : offsets) {
    auto r = g.relations_at(total, off);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

namespace {

std::vector<Poly> constants(const GroupPresentation& g, std::size_t total) {
  std::vector<Poly> out;
  for (Coeff u : g.unit()) out.push_back(Poly::constant(g.p(), total, u));
  return out;
}

template <class F>
bool all_reduce_to_zero(std::size_t n, std::span<const Poly> rel, F&& diff) {
  for (std::size_t i = 0; i < n; ++i)
    if (!normal_form(diff(i), rel).is_zero()) return false;
  return true;
}

}  // namespace

std::vector<std::string> group_law_failures(const GroupPresentation& g) {
  std::vector<std::string> fails;
  const std::size_t n = g.ncoords();
  const Coeff p = g.p();

  for (const auto& r : g.relations())
    if (evaluate(r, g.unit()) != 0) fails.push_back("relation nonzero at unit");
  {
    std::vector<Poly> at_unit;
    for (Coeff u : g.unit()) at_unit.push_back(Poly::constant(p, 0, u));
    PolyMatrix e = g.natural().substitute(at_unit, 0);
    if (!(e == PolyMatrix::identity(g.natural().rows(), p, 0))) fails.push_back("natural matrix at unit");
  }

  // One generic point.
  const auto rel1 = g.relations_at(n, 0);
  const auto sigma = g.point(n, 0);
  const auto inv = g.inv_at(n, 0);
  const auto unit = constants(g, n);
  auto mult_of = [&](const std::vector<Poly>& x, const std::vector<Poly>& y, std::size_t total) {
    std::vector<Poly> images = x;
    images.insert(images.end(), y.begin(), y.end());
    std::vector<Poly> out;
    for (const auto& m : g.mult()) out.push_back(m.substitute(images, total));
    return out;
  };
  {
    auto left = mult_of(unit, sigma, n);
    auto right = mult_of(sigma, unit, n);
    if (!all_reduce_to_zero(n, rel1, [&](std::size_t i) { return left[i] - sigma[i]; }))
      fails.push_back("left unit law");
    if (!all_reduce_to_zero(n, rel1, [&](std::size_t i) { return right[i] - sigma[i]; }))
      fails.push_back("right unit law");
    auto s_inv = mult_of(sigma, inv, n);
    auto inv_s = mult_of(inv, sigma, n);
    if (!all_reduce_to_zero(n, rel1, [&](std::size_t i) { return s_inv[i] - unit[i]; }))
      fails.push_back("right inverse law");
    if (!all_reduce_to_zero(n, rel1, [&](std::size_t i) { return inv_s[i] - unit[i]; }))
      fails.push_back("left inverse law");
    for (const auto& r : g.relations())
      if (!normal_form(r.substitute(inv, n), rel1).is_zero()) {
        fails.push_back("relations not preserved by inversion");
        break;
      }
  }

  // Two generic points.
  {
    const std::size_t total = 2 * n;
    std::vector<std::size_t> offs{0, n};
    const auto rel2 = block_relations(g, total, offs);
    const auto prod = g.mult_at(total, 0, n);
    for (const auto& r : g.relations())
      if (!normal_form(r.substitute(prod, total), rel2).is_zero()) {
        fails.push_back("relations not preserved by multiplication");
        break;
      }
    PolyMatrix lhs = g.natural().substitute(prod, total);
    PolyMatrix rhs = g.place(g.natural(), total, 0) * g.place(g.natural(), total, n);
    PolyMatrix diff = lhs - rhs;
    bool ok = true;
    for (std::size_t i = 0; i < diff.rows() && ok; ++i)
      for (std::size_t j = 0; j < diff.cols() && ok; ++j) ok = normal_form(diff(i, j), rel2).is_zero();
    if (!ok) fails.push_back("natural matrix not multiplicative");
  }

  // Three generic points for associativity.
  {
    const std::size_t total = 3 * n;
    if (total <= kMaxVars) {
      std::vector<std::size_t> offs{0, n, 2 * n};
      const auto rel3 = block_relations(g, total, offs);
      auto x = g.point(total, 0), y = g.point(total, n), z = g.point(total, 2 * n);
      auto l = mult_of(mult_of(x, y, total), z, total);
      auto r = mult_of(x, mult_of(y, z, total), total);
      if (!all_reduce_to_zero(n, rel3, [&](std::size_t i) { return l[i] - r[i]; }))
        fails.push_back("associativity");
    }
  }
  return fails;
}

bool verify_group_laws(const GroupPresentation& g) { return group_law_failures(g).empty(); }

GroupHom homomorphism(GroupPtr source, GroupPtr target, std::vector<Poly> coord_map) {
  if (!source || !target) throw InvalidArgument("homomorphism needs both groups");
  const auto& H = *source;
  const auto& G = *target;
  if (H.p() != G.p()) throw RingMismatch("homomorphism between groups over different fields");
  const std::size_t nh = H.ncoords(), ng = G.ncoords();
  if (coord_map.size() != ng) throw InvalidArgument("coordinate map has wrong arity");
  for (const auto& f : coord_map)
    if (f.p() != H.p() || f.nvars() != nh) throw RingMismatch("coordinate map outside source ring");

  const auto rel1 = H.relations_at(nh, 0);
  for (const auto& r : G.relations())
    if (!normal_form(r.substitute(coord_map, nh), rel1).is_zero())
      throw VerificationFailed("homomorphism: relation " + r.to_string() + " does not pull back to zero");

  for (std::size_t i = 0; i < ng; ++i)
    if (evaluate(coord_map[i], H.unit()) != G.unit()[i])
      throw VerificationFailed("homomorphism: unit not preserved");

  {
    const std::size_t total = 2 * nh;
    std::vector<std::size_t> offs{0, nh};
    const auto rel2 = block_relations(H, total, offs);
    const auto prod_h = H.mult_at(total, 0, nh);
    std::vector<Poly> images;
    for (const auto& f : coord_map) images.push_back(H.place(f, total, 0));
    for (const auto& f : coord_map) images.push_back(H.place(f, total, nh));
    for (std::size_t i = 0; i < ng; ++i) {
      Poly lhs = coord_map[i].substitute(prod_h, total);
      Poly rhs = G.mult()[i].substitute(images, total);
      if (!normal_form(lhs - rhs, rel2).is_zero())
        throw VerificationFailed("homomorphism: multiplication not preserved");
    }
  }
  {
    const auto inv_h = H.inv_at(nh, 0);
    for (std::size_t i = 0; i < ng; ++i) {
      Poly lhs = coord_map[i].substitute(inv_h, nh);
      Poly rhs = G.inv()[i].substitute(coord_map, nh);
      if (!normal_form(lhs - rhs, rel1).is_zero())
        throw VerificationFailed("homomorphism: inversion not preserved");
    }
  }
  return GroupHom{std::move(source), std::move(target), std::move(coord_map)};
}

GroupHom compose(const GroupHom& first, const GroupHom& second) {
  if (!(*first.target == *second.source)) throw InvalidArgument("homomorphisms do not compose");
  const std::size_t nh = first.source->ncoords();
  std::vector<Poly> map;
  for (const auto& f : second.coord_map) map.push_back(f.substitute(first.coord_map, nh));
  return homomorphism(first.source, second.target, std::move(map));
}

GroupHom identity_hom(GroupPtr g) {
  auto pt = g->point(g->ncoords(), 0);
  return homomorphism(g, g, std::move(pt));
}

}  // namespace cmdef
