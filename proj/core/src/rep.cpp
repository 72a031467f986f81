#include "cmdef/rep.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>

#include "cmdef/errors.hpp"
#include "cmdef/polysystem.hpp"

namespace cmdef {

namespace {

std::string wrap(const std::string& label) {
  bool simple = !label.empty() && std::all_of(label.begin(), label.end(), [](unsigned char c) {
    return std::isalnum(c) != 0;
  });
  return simple ? label : "(" + label + ")";
}

void require_same_group(const Representation& v, const Representation& w) {
  if (!(v.group() == w.group())) throw InvalidArgument("modules over different groups");
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

}  // namespace

// ---------------------------------------------------------- Representation

Representation::Representation(GroupPtr group, PolyMatrix action, std::vector<std::string> labels,
                               Provenance prov)
    : group_(std::move(group)), action_(std::move(action)), labels_(std::move(labels)), prov_(std::move(prov)) {
  if (!group_) throw InvalidArgument("representation without a group");
  if (action_.rows() != action_.cols()) throw InvalidArgument("action matrix must be square");
  if (action_.p() != group_->p() || action_.nvars() != group_->ncoords())
    throw RingMismatch("action matrix outside the group's coordinate ring");
  if (labels_.empty()) labels_ = default_labels(action_.rows());
  if (labels_.size() != action_.rows()) throw InvalidArgument("one basis label per dimension required");
  action_ = reduce_entries(action_, group_->relation_basis());
}

PolyMatrix Representation::action_at(std::size_t total, std::size_t offset) const {
  return group_->place(action_, total, offset);
}

PolyMatrix Representation::inverse_action_at(std::size_t total, std::size_t offset) const {
  auto rel = group_->relations_at(total, offset);
  return reduce_entries(action_.substitute(group_->inv_at(total, offset), total), rel);
}

Representation Representation::relabeled(std::vector<std::string> labels) const {
  return Representation(group_, action_, std::move(labels), prov_);
}

Representation Representation::with_provenance(Provenance prov) const {
  return Representation(group_, action_, labels_, std::move(prov));
}

// ----------------------------------------------------------------- helpers

PolyMatrix reduce_entries(const PolyMatrix& m, std::span<const Poly> basis) {
  if (basis.empty()) return m;
  PolyMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r(i, j) = normal_form(m(i, j), basis);
  return r;
}

bool is_zero_mod(const PolyMatrix& m, std::span<const Poly> basis) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !normal_form(m(i, j), basis).is_zero()) return false;
  return true;
}

PolyMatrix operator*(const PolyMatrix& a, const GfMatrix& b) {
  if (a.cols() != b.rows() || a.p() != b.p()) throw InvalidArgument("matrix shape mismatch");
  PolyMatrix r(a.rows(), b.cols(), a.p(), a.nvars());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j)) r(i, j).add_scaled(a(i, k), b(k, j), Monomial());
    }
  return r;
}

PolyMatrix operator*(const GfMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows() || a.p() != b.p()) throw InvalidArgument("matrix shape mismatch");
  PolyMatrix r(a.rows(), b.cols(), b.p(), b.nvars());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(i, k)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) r(i, j).add_scaled(b(k, j), a(i, k), Monomial());
    }
  return r;
}

PolyMatrix to_poly_matrix(const GfMatrix& m, std::size_t nvars) {
  PolyMatrix r(m.rows(), m.cols(), m.p(), nvars);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) r(i, j) = Poly::constant(m.p(), nvars, m(i, j));
  return r;
}

std::vector<std::string> representation_law_failures(const Representation& v) {
  std::vector<std::string> fails;
  const auto& g = v.group();
  const std::size_t m = g.ncoords();
  std::vector<Poly> unit;
  for (Coeff u : g.unit()) unit.push_back(Poly::constant(g.p(), 0, u));
  if (!(v.action().substitute(unit, 0) == PolyMatrix::identity(v.dim(), g.p(), 0)))
    fails.push_back("action at unit is not the identity");

  const std::size_t total = 2 * m;
  std::vector<std::size_t> offs{0, m};
  auto rel = block_relations(g, total, offs);
  PolyMatrix lhs = v.action().substitute(g.mult_at(total, 0, m), total);
  PolyMatrix rhs = v.action_at(total, 0) * v.action_at(total, m);
  if (!is_zero_mod(lhs - rhs, rel)) fails.push_back("action is not multiplicative");
  return fails;
}

bool verify_representation(const Representation& v) { return representation_law_failures(v).empty(); }

// ---------------------------------------------------------------- functors

Representation natural_module(GroupPtr g) {
  const std::size_t n = g->natural().rows();
  std::vector<std::string> labels;
  if (n == 2) labels = {"X", "Y"};
  else if (n == 1) labels = {"X"};
  PolyMatrix a = g->natural();
  return Representation(g, std::move(a), std::move(labels), {"natural", g->name(), {}});
}

Representation trivial_module(GroupPtr g, std::size_t dim) {
  const std::size_t m = g->ncoords();
  PolyMatrix a = PolyMatrix::identity(dim, g->p(), m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(dim == 1 ? "1" : "1_" + std::to_string(i));
  return Representation(std::move(g), std::move(a), std::move(labels),
                        {"trivial", "dim=" + std::to_string(dim), {}});
}

Representation dual(const Representation& v) {
  const std::size_t m = v.group().ncoords();
  PolyMatrix a = v.inverse_action_at(m, 0).transpose();
  std::vector<std::string> labels;
  for (const auto& l : v.labels()) labels.push_back(wrap(l) + "*");
  return Representation(v.group_ptr(), std::move(a), std::move(labels), {"dual", "", {v.provenance()}});
}

Representation direct_sum(std::span<const Representation> parts) {
  if (parts.empty()) throw InvalidArgument("direct sum of no modules");
  std::size_t n = 0;
  for (const auto& v : parts) {
    require_same_group(parts[0], v);
    n += v.dim();
  }
  const auto& g = parts[0].group();
  PolyMatrix a(n, n, g.p(), g.ncoords());
  std::vector<std::string> labels;
  Provenance prov{"direct_sum", "", {}};
  std::size_t off = 0;
  for (const auto& v : parts) {
    for (std::size_t i = 0; i < v.dim(); ++i)
      for (std::size_t j = 0; j < v.dim(); ++j) a(off + i, off + j) = v.action()(i, j);
    labels.insert(labels.end(), v.labels().begin(), v.labels().end());
    prov.args.push_back(v.provenance());
    off += v.dim();
  }
  return Representation(parts[0].group_ptr(), std::move(a), std::move(labels), std::move(prov));
}

Representation direct_sum(const Representation& v, const Representation& w) {
  std::vector<Representation> parts{v, w};
  return direct_sum(parts);
}

Representation tensor(const Representation& v, const Representation& w) {
  require_same_group(v, w);
  const std::size_t n = v.dim(), q = w.dim();
  const auto& g = v.group();
  PolyMatrix a(n * q, n * q, g.p(), g.ncoords());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Poly& x = v.action()(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < q; ++j)
        for (std::size_t l = 0; l < q; ++l) {
          const Poly& y = w.action()(j, l);
          if (!y.is_zero()) a(i * q + j, k * q + l) = x * y;
        }
    }
  std::vector<std::string> labels;
  for (const auto& lv : v.labels())
    for (const auto& lw : w.labels()) labels.push_back(wrap(lv) + "⊗" + wrap(lw));
  return Representation(v.group_ptr(), std::move(a), std::move(labels),
                        {"tensor", "", {v.provenance(), w.provenance()}});
}

std::vector<std::vector<unsigned>> symmetric_basis(std::size_t n, unsigned d) {
  std::vector<std::vector<unsigned>> all;
  std::vector<unsigned> cur(n, 0);
  // Lexicographically decreasing enumeration of exponent vectors summing to d.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      cur[i] = left;
      all.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (n > 0) rec(rec, 0, d);
  std::vector<std::vector<unsigned>> out;
  for (const auto& e : all)
    if (std::count(e.begin(), e.end(), 0u) + 1 == static_cast<std::ptrdiff_t>(n)) out.push_back(e);
  for (const auto& e : all)
    if (std::count(e.begin(), e.end(), 0u) + 1 != static_cast<std::ptrdiff_t>(n)) out.push_back(e);
  return out;
}

Representation symmetric_power(const Representation& v, unsigned d) {
  if (d == 0) throw InvalidArgument("symmetric power needs degree >= 1");
  const auto& g = v.group();
  const std::size_t m = g.ncoords(), n = v.dim(), total = m + n;
  if (total > kMaxVars) throw ResourceCapExceeded("symmetric power of a module of dimension " + std::to_string(n));
  auto basis = symmetric_basis(n, d);
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  // Image of e_j as a linear form in placeholder variables y_i (index m + i).
  PolyMatrix a_placed = v.action_at(total, 0);
  std::vector<Poly> image;
  for (std::size_t j = 0; j < n; ++j) {
    Poly l(g.p(), total);
    for (std::size_t i = 0; i < n; ++i)
      if (!a_placed(i, j).is_zero()) l += a_placed(i, j) * Poly::variable(g.p(), total, m + i);
    image.push_back(std::move(l));
  }
  std::vector<std::vector<Poly>> powers(n);
  auto power = [&](std::size_t j, unsigned e) -> const Poly& {
    auto& pw = powers[j];
    if (pw.empty()) pw.push_back(Poly::constant(g.p(), total, 1));
    while (pw.size() <= e) pw.push_back(pw.back() * image[j]);
    return pw[e];
  };

  const std::size_t dim = basis.size();
  std::vector<std::vector<Term>> entries(dim * dim);
  for (std::size_t col = 0; col < dim; ++col) {
    Poly prod = Poly::constant(g.p(), total, 1);
    for (std::size_t j = 0; j < n; ++j)
      if (basis[col][j]) prod *= power(j, basis[col][j]);
    for (const auto& t : prod.terms()) {
      Monomial gm;
      std::vector<unsigned> ex(n);
      for (std::size_t i = 0; i < m; ++i) gm.set(i, t.mono[i]);
      for (std::size_t i = 0; i < n; ++i) ex[i] = t.mono[m + i];
      entries[index.at(ex) * dim + col].push_back({gm, t.coeff});
    }
  }
  PolyMatrix a(dim, dim, g.p(), m);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      a(r, c) = Poly::from_terms(g.p(), m, std::move(entries[r * dim + c]));

  std::vector<std::string> labels;
  for (const auto& e : basis) {
    std::string s;
    for (std::size_t j = 0; j < n; ++j) {
      if (!e[j]) continue;
      s += wrap(v.labels()[j]);
      if (e[j] > 1) s += "^" + std::to_string(e[j]);
    }
    labels.push_back(s);
  }
  return Representation(v.group_ptr(), std::move(a), std::move(labels),
                        {"symmetric_power", "d=" + std::to_string(d), {v.provenance()}});
}

// --------------------------------------------------------------- Submodule

namespace {

Representation restricted_module(const Representation& ambient, const GfMatrix& incl, const GfMatrix& ret,
                                 const std::string& name) {
  PolyMatrix b = ret * (ambient.action() * incl);
  PolyMatrix closure = ambient.action() * incl - incl * b;
  if (!is_zero_mod(closure, ambient.group().relation_basis()))
    throw VerificationFailed(name + ": subspace is not closed under the action");
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < incl.cols(); ++j) {
    std::size_t nonzero = 0, at = 0;
    for (std::size_t i = 0; i < incl.rows(); ++i)
      if (incl(i, j)) {
        ++nonzero;
        at = i;
      }
    labels.push_back(nonzero == 1 && incl(at, j) == 1 ? ambient.labels()[at] : "w" + std::to_string(j));
  }
  return Representation(ambient.group_ptr(), std::move(b), std::move(labels),
                        {name, "dim=" + std::to_string(incl.cols()), {ambient.provenance()}});
}

GfMatrix checked_inclusion(const Representation& ambient, GfMatrix incl) {
  if (incl.rows() != ambient.dim()) throw InvalidArgument("inclusion matrix has wrong row count");
  if (incl.p() != ambient.p()) throw RingMismatch("inclusion matrix over another field");
  return incl;
}

}  // namespace

Submodule::Submodule(Representation ambient, GfMatrix inclusion, std::string name)
    : ambient_(std::move(ambient)),
      inclusion_(checked_inclusion(ambient_, std::move(inclusion))),
      retraction_(left_inverse(inclusion_)),
      module_(restricted_module(ambient_, inclusion_, retraction_, name)) {}

Submodule frobenius_power(const Representation& v) {
  const Coeff p = v.p();
  Representation sp = symmetric_power(v, p);
  GfMatrix incl(sp.dim(), v.dim(), p);
  for (std::size_t i = 0; i < v.dim(); ++i) incl(i, i) = 1;  // pure powers come first
  return Submodule(std::move(sp), std::move(incl), "frobenius_power");
}

Quotient quotient_data(const Submodule& w) {
  const auto& amb = w.ambient();
  const std::size_t n = amb.dim(), k = w.dim();
  const Coeff p = amb.p();
  std::vector<GfVector> cols;
  for (std::size_t j = 0; j < k; ++j) cols.push_back(w.inclusion().column(j));
  auto ech = echelon_basis(cols, p, n);
  std::vector<bool> pivot(n, false);
  for (const auto& row : ech) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivot[c] = true;
  }
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) coords.push_back(i);
  const std::size_t q = coords.size();

  GfMatrix section(n, q, p);
  for (std::size_t c = 0; c < q; ++c) section(coords[c], c) = 1;
  GfMatrix full(n, n, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) full(i, j) = w.inclusion()(i, j);
    for (std::size_t c = 0; c < q; ++c) full(i, k + c) = section(i, c);
  }
  GfMatrix inv = left_inverse(full);
  GfMatrix proj(q, n, p);
  for (std::size_t c = 0; c < q; ++c)
    for (std::size_t j = 0; j < n; ++j) proj(c, j) = inv(k + c, j);

  PolyMatrix qa = proj * (amb.action() * section);
  PolyMatrix check = proj * amb.action() - qa * proj;
  if (!is_zero_mod(check, amb.group().relation_basis()))
    throw VerificationFailed("quotient: projection does not intertwine");
  std::vector<std::string> labels;
  for (auto c : coords) labels.push_back(amb.labels()[c]);
  Representation mod(amb.group_ptr(), std::move(qa), std::move(labels),
                     {"quotient", "", {amb.provenance(), w.module().provenance()}});
  return Quotient{std::move(mod), std::move(proj), std::move(section), std::move(coords)};
}

Representation quotient(const Submodule& w) { return quotient_data(w).module; }

Hom0 hom0(const Submodule& w) {
  const auto& v = w.ambient();
  const std::size_t n = v.dim(), k = w.dim();
  Quotient quo = quotient_data(w);
  const std::size_t q = quo.module.dim();
  Representation hom_space = tensor(w.module(), dual(v));
  GfMatrix incl(k * n, k * q, v.p());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < q; ++c)
      for (std::size_t j = 0; j < n; ++j) incl(i * n + j, i * q + c) = quo.projection(c, j);
  Submodule inside(hom_space, incl, "hom0");
  Representation model = tensor(w.module(), dual(quo.module));
  if (!(inside.module().action() == model.action()))
    throw VerificationFailed("hom0: restricted action differs from W (x) (V/W)*");
  Representation mod = model.with_provenance({"hom0", "", {v.provenance(), w.module().provenance()}});
  return Hom0{std::move(mod), std::move(hom_space), std::move(incl), std::move(quo)};
}

Representation extend_by_cocycle(const Cocycle& g) {
  const auto& u = g.target;
  const std::size_t n = u.dim(), m = u.group().ncoords();
  if (g.components.size() != n) throw InvalidArgument("cocycle has wrong number of components");
  PolyMatrix a(n + 1, n + 1, u.p(), m);
  for (std::size_t i = 0; i < n; ++i) {
    if (g.components[i].p() != u.p() || g.components[i].nvars() != m)
      throw RingMismatch("cocycle component outside the group's coordinate ring");
    for (std::size_t j = 0; j < n; ++j) a(i, j) = u.action()(i, j);
    a(i, n) = g.components[i];
  }
  a(n, n) = Poly::constant(u.p(), m, 1);
  auto labels = u.labels();
  labels.push_back("lambda");
  Representation ext(u.group_ptr(), std::move(a), std::move(labels), {"extend", "", {u.provenance()}});
  if (!verify_representation(ext)) throw VerificationFailed("extend_by_cocycle: cocycle identity fails");
  return ext;
}

Representation restrict(const Representation& v, const GroupHom& h) {
  if (!(*h.target == v.group())) throw InvalidArgument("restriction along a map into another group");
  const std::size_t nh = h.source->ncoords();
  PolyMatrix a = v.action().substitute(h.coord_map, nh);
  return Representation(h.source, std::move(a), v.labels(),
                        {"restrict", h.source->name() + "->" + h.target->name(), {v.provenance()}});
}

std::optional<bool> is_faithful(const Representation& v, const Caps& caps) {
  const auto& g = v.group();
  const std::size_t m = g.ncoords(), total = m + 1;
  const Coeff p = g.p();
  std::vector<Poly> kernel = g.relations_at(total, 0);
  PolyMatrix a = v.action_at(total, 0);
  for (std::size_t i = 0; i < v.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) {
      Poly e = a(i, j);
      if (i == j) e -= Poly::constant(p, total, 1);
      if (!e.is_zero()) kernel.push_back(std::move(e));
    }
  const Poly y = Poly::variable(p, total, m);
  const Poly one = Poly::constant(p, total, 1);
  try {
    for (std::size_t j = 0; j < m; ++j) {
      auto gens = kernel;
      Poly coord = Poly::variable(p, total, j) - Poly::constant(p, total, g.unit()[j]);
      gens.push_back(one - y * coord);
      auto gb = groebner(p, total, std::move(gens), caps).groebner();
      bool forced = gb.size() == 1 && gb[0].is_constant();
      if (!forced) return false;
    }
  } catch (const ResourceCapExceeded&) {
    return std::nullopt;
  }
  return true;
}

std::vector<GfMatrix> intertwiner_space(const Representation& v, const Representation& w) {
  require_same_group(v, w);
  const std::size_t dv = v.dim(), dw = w.dim();
  const Coeff p = v.p();
  PolySystem sys(p, dw * dv);
  for (std::size_t r = 0; r < dw; ++r)
    for (std::size_t c = 0; c < dv; ++c) {
      const std::uint64_t tag = r * dv + c;
      for (std::size_t j = 0; j < dv; ++j)
        if (!v.action()(j, c).is_zero()) sys.add(r * dv + j, v.action()(j, c), tag);
      for (std::size_t i = 0; i < dw; ++i)
        if (!w.action()(r, i).is_zero()) sys.add(i * dv + c, -w.action()(r, i), tag);
    }
  std::vector<GfMatrix> out;
  for (const auto& vec : sys.nullspace()) {
    GfMatrix phi(dw, dv, p);
    for (std::size_t r = 0; r < dw; ++r)
      for (std::size_t c = 0; c < dv; ++c) phi(r, c) = vec[r * dv + c];
    out.push_back(std::move(phi));
  }
  return out;
}

bool is_intertwiner(const GfMatrix& phi, const Representation& v, const Representation& w) {
  require_same_group(v, w);
  if (phi.rows() != w.dim() || phi.cols() != v.dim()) return false;
  return is_zero_mod(phi * v.action() - w.action() * phi, v.group().relation_basis());
}

std::optional<GfMatrix> find_isomorphism(const Representation& v, const Representation& w) {
  if (v.dim() != w.dim()) return std::nullopt;
  auto space = intertwiner_space(v, w);
  const std::size_t n = v.dim();
  for (const auto& phi : space)
    if (phi.rank() == n) return phi;
  if (space.empty()) return std::nullopt;
  const Coeff p = v.p();
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<Coeff> coeff(0, p - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    GfMatrix phi(n, n, p);
    PrimeField f(p);
    for (const auto& b : space) {
      Coeff c = coeff(rng);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) phi(i, j) = f.add(phi(i, j), f.mul(c, b(i, j)));
    }
    if (phi.rank() == n) return phi;
  }
  return std::nullopt;
}

}  // namespace cmdef
