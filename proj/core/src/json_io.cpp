#include "cmdef/json_io.hpp"

namespace cmdef {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("field '") + key + "': " + e.what());
  }
}

Poly poly_from(const Json& j, Coeff p, std::size_t nvars) {
  if (!j.is_string()) throw InvalidArgument("polynomial must be a string");
  return Poly::parse(j.get<std::string>(), p, nvars);
}

Json polys(const std::vector<Poly>& v) {
  Json out = Json::array();
  for (const auto& f : v) out.push_back(f.to_string());
  return out;
}

std::vector<Poly> polys_from(const Json& j, Coeff p, std::size_t nvars) {
  if (!j.is_array()) throw InvalidArgument("expected a list of polynomials");
  std::vector<Poly> out;
  for (const auto& e : j) out.push_back(poly_from(e, p, nvars));
  return out;
}

const char* condition_name(Condition c) { return c == Condition::a ? "a" : "b"; }

}  // namespace

Json to_json(const Provenance& p) {
  Json args = Json::array();
  for (const auto& a : p.args) args.push_back(to_json(a));
  return {{"op", p.op}, {"detail", p.detail}, {"args", args}};
}

namespace {

Provenance provenance_from_json(const Json& j) {
  Provenance p{get<std::string>(j, "op"), get<std::string>(j, "detail"), {}};
  for (const auto& a : field(j, "args")) p.args.push_back(provenance_from_json(a));
  return p;
}

}  // namespace

Json to_json(const Representation& v) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < v.dim(); ++j) row.push_back(v.action()(i, j).to_string());
    rows.push_back(row);
  }
  return {{"group", v.group().name()},
          {"p", v.p()},
          {"dim", v.dim()},
          {"labels", v.labels()},
          {"action", rows},
          {"provenance", to_json(v.provenance())}};
}

Representation representation_from_json(const Json& j) {
  auto g = builtin_group(get<std::string>(j, "group"), get<Coeff>(j, "p"));
  const auto n = get<std::size_t>(j, "dim");
  const auto& rows = field(j, "action");
  if (!rows.is_array() || rows.size() != n) throw InvalidArgument("action matrix has wrong shape");
  PolyMatrix a(n, n, g->p(), g->ncoords());
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw InvalidArgument("action matrix has wrong shape");
    for (std::size_t jj = 0; jj < n; ++jj) a(i, jj) = poly_from(rows[i][jj], g->p(), g->ncoords());
  }
  Provenance prov{"json", "", {}};
  if (j.contains("provenance")) prov = provenance_from_json(j.at("provenance"));
  auto labels = get<std::vector<std::string>>(j, "labels");
  if (labels.size() != n) throw InvalidArgument("labels have wrong length");
  Representation v(g, std::move(a), std::move(labels), std::move(prov));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj)
      if (!(v.action()(i, jj) == poly_from(rows[i][jj], g->p(), g->ncoords())))
        throw InvalidArgument("action entries must be reduced modulo the group relations");
  return v;
}

Json to_json(const RankEvidence& r) {
  return {{"multidegree", r.multidegree},
          {"unknowns", r.unknowns},
          {"equations", r.equations},
          {"rank", r.rank},
          {"augmented_rank", r.augmented_rank}};
}

RankEvidence rank_evidence_from_json(const Json& j) {
  return {get<Multidegree>(j, "multidegree"), get<std::size_t>(j, "unknowns"), get<std::size_t>(j, "equations"),
          get<std::size_t>(j, "rank"), get<std::size_t>(j, "augmented_rank")};
}

Json to_json(const Certificate& c) {
  Json ev = Json::object();
  Json nc = Json::array();
  for (const auto& r : c.noncoboundary) nc.push_back(to_json(r));
  ev["noncoboundary_rank"] = nc;
  ev["codim"] = c.codim ? Json(*c.codim) : Json(nullptr);
  ev["coprime"] = c.coprime ? Json(*c.coprime) : Json(nullptr);
  ev["nonmembership_rank"] = c.nonmembership ? to_json(*c.nonmembership) : Json(nullptr);
  if (c.transfer) {
    const auto& t = *c.transfer;
    ev["phsop_transfer"] = {{"module", to_json(t.module)},
                            {"x_index", t.x_index},
                            {"y_index", t.y_index},
                            {"lifts", polys(t.lifts)},
                            {"codim", t.codim}};
  } else {
    ev["phsop_transfer"] = nullptr;
  }
  return {{"schema", kSchema},
          {"name", c.name},
          {"module", to_json(c.module)},
          {"k", c.k},
          {"condition", condition_name(c.condition)},
          {"cocycle", {{"degree", c.cocycle_degree}, {"poly", c.cocycle.to_string()}, {"ring", "group coordinates, then x"}}},
          {"annihilators", polys(c.annihilators)},
          {"witnesses", polys(c.witnesses)},
          {"m", c.m ? Json(c.m->to_string()) : Json(nullptr)},
          {"evidence", ev},
          {"declared_facts", c.declared_facts},
          {"conclusion", c.conclusion}};
}

Certificate certificate_from_json(const Json& j) {
  if (get<std::string>(j, "schema") != kSchema) throw InvalidArgument("unsupported schema");
  Certificate c(representation_from_json(field(j, "module")));
  const Coeff p = c.module.p();
  const std::size_t n = c.module.dim(), m = c.module.group().ncoords();
  c.name = get<std::string>(j, "name");
  c.k = get<std::size_t>(j, "k");
  const auto cond = get<std::string>(j, "condition");
  if (cond != "a" && cond != "b") throw InvalidArgument("condition must be 'a' or 'b'");
  c.condition = cond == "a" ? Condition::a : Condition::b;
  const auto& co = field(j, "cocycle");
  c.cocycle_degree = get<unsigned>(co, "degree");
  c.cocycle = poly_from(field(co, "poly"), p, m + n);
  c.annihilators = polys_from(field(j, "annihilators"), p, n);
  c.witnesses = polys_from(field(j, "witnesses"), p, n);
  if (!field(j, "m").is_null()) c.m = poly_from(j.at("m"), p, n);
  const auto& ev = field(j, "evidence");
  for (const auto& r : field(ev, "noncoboundary_rank")) c.noncoboundary.push_back(rank_evidence_from_json(r));
  if (!field(ev, "codim").is_null()) c.codim = get<std::size_t>(ev, "codim");
  if (!field(ev, "coprime").is_null()) c.coprime = get<bool>(ev, "coprime");
  if (!field(ev, "nonmembership_rank").is_null()) c.nonmembership = rank_evidence_from_json(ev.at("nonmembership_rank"));
  if (!field(ev, "phsop_transfer").is_null()) {
    const auto& t = ev.at("phsop_transfer");
    PhsopTransfer tr{representation_from_json(field(t, "module")), get<std::size_t>(t, "x_index"),
                     get<std::size_t>(t, "y_index"), {}, get<std::size_t>(t, "codim")};
    tr.lifts = polys_from(field(t, "lifts"), p, tr.module.dim());
    c.transfer = std::move(tr);
  }
  c.declared_facts = get<std::vector<std::string>>(j, "declared_facts");
  c.conclusion = get<int>(j, "conclusion");
  return c;
}

Json to_json(const InvariantSlice& s) {
  return {{"degree", s.degree}, {"dimension", s.basis.size()}, {"basis", polys(s.basis)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cmdef
