#include "catkit/serialize.hpp"

#include <json.hpp>

namespace catkit {

namespace {

using nlohmann::json;

// ---- encoding helpers -----------------------------------------------------

Id pk(const IdPair& p) { return enc2(p.first, p.second); }
IdPair pk_dec(const Id& s) {
  auto v = dec(s, 2);
  return {v[0], v[1]};
}
Id tk(const IdTriple& t) {
  return enc({std::get<0>(t), std::get<1>(t), std::get<2>(t)});
}
IdTriple tk_dec(const Id& s) {
  auto v = dec(s, 3);
  return {v[0], v[1], v[2]};
}

json j_smap(const std::map<Id, Id>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[k] = v;
  return j;
}
std::map<Id, Id> p_smap(const json& j) {
  std::map<Id, Id> m;
  for (auto it = j.begin(); it != j.end(); ++it)
    m[it.key()] = it.value().get<Id>();
  return m;
}

json j_pmap(const std::map<IdPair, Id>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[pk(k)] = v;
  return j;
}
std::map<IdPair, Id> p_pmap(const json& j) {
  std::map<IdPair, Id> m;
  for (auto it = j.begin(); it != j.end(); ++it)
    m[pk_dec(it.key())] = it.value().get<Id>();
  return m;
}

const json& sect(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw ParseError(std::string("missing section '") + name + "'");
  return *it;
}

// ---- per-type section builders / parsers ------------------------------

json j_fincat(const FinCat& c) {
  json j = json::object();
  j["objects"] = json::array();
  for (const Id& o : c.objects) j["objects"].push_back(o);
  json ms = json::object();
  for (const auto& [m, dc] : c.morphisms)
    ms[m] = json{{"dom", dc.dom}, {"cod", dc.cod}};
  j["morphisms"] = std::move(ms);
  j["identity"] = j_smap(c.identity);
  j["compose"] = j_pmap(c.compose);
  return j;
}

FinCat p_fincat(const json& j) {
  FinCat c;
  for (const auto& o : sect(j, "objects")) c.objects.insert(o.get<Id>());
  const json& ms = sect(j, "morphisms");
  for (auto it = ms.begin(); it != ms.end(); ++it)
    c.morphisms[it.key()] = {sect(it.value(), "dom").get<Id>(),
                             sect(it.value(), "cod").get<Id>()};
  c.identity = p_smap(sect(j, "identity"));
  c.compose = p_pmap(sect(j, "compose"));
  return c;
}

json j_functor(const FinFunctor& f) {
  json j = json::object();
  j["source"] = j_fincat(f.source);
  j["target"] = j_fincat(f.target);
  j["obj_map"] = j_smap(f.obj_map);
  j["mor_map"] = j_smap(f.mor_map);
  return j;
}

FinFunctor p_functor(const json& j) {
  FinFunctor f;
  f.source = p_fincat(sect(j, "source"));
  f.target = p_fincat(sect(j, "target"));
  f.obj_map = p_smap(sect(j, "obj_map"));
  f.mor_map = p_smap(sect(j, "mor_map"));
  return f;
}

json j_nat(const NatTrans& n) {
  json j = json::object();
  j["source_fun"] = j_functor(n.source_fun);
  j["target_fun"] = j_functor(n.target_fun);
  j["components"] = j_smap(n.components);
  return j;
}

NatTrans p_nat(const json& j) {
  NatTrans n;
  n.source_fun = p_functor(sect(j, "source_fun"));
  n.target_fun = p_functor(sect(j, "target_fun"));
  n.components = p_smap(sect(j, "components"));
  return n;
}

json j_monoidal(const MonoidalData& m) {
  json j = json::object();
  j["base"] = j_fincat(m.base);
  j["unit"] = m.unit;
  j["tensor_obj"] = j_pmap(m.tensor_obj);
  j["tensor_mor"] = j_pmap(m.tensor_mor);
  json assoc = json::object();
  for (const auto& [k, v] : m.associator) assoc[tk(k)] = v;
  j["associator"] = std::move(assoc);
  j["left_unitor"] = j_smap(m.left_unitor);
  j["right_unitor"] = j_smap(m.right_unitor);
  if (m.braiding)
    j["braiding"] = j_pmap(*m.braiding);
  j["symmetric"] = m.symmetric;
  return j;
}

MonoidalData p_monoidal(const json& j) {
  MonoidalData m;
  m.base = p_fincat(sect(j, "base"));
  m.unit = sect(j, "unit").get<Id>();
  m.tensor_obj = p_pmap(sect(j, "tensor_obj"));
  m.tensor_mor = p_pmap(sect(j, "tensor_mor"));
  const json& assoc = sect(j, "associator");
  for (auto it = assoc.begin(); it != assoc.end(); ++it)
    m.associator[tk_dec(it.key())] = it.value().get<Id>();
  m.left_unitor = p_smap(sect(j, "left_unitor"));
  m.right_unitor = p_smap(sect(j, "right_unitor"));
  if (j.contains("braiding")) m.braiding = p_pmap(j["braiding"]);
  m.symmetric = sect(j, "symmetric").get<bool>();
  return m;
}

const char* strength_name(Strength s) {
  switch (s) {
    case Strength::lax: return "lax";
    case Strength::strong: return "strong";
    default: return "strict";
  }
}
Strength p_strength(const std::string& s) {
  if (s == "lax") return Strength::lax;
  if (s == "strong") return Strength::strong;
  if (s == "strict") return Strength::strict_;
  throw ParseError("unknown strength '" + s + "'");
}

json j_monfun(const MonoidalFunctorData& f) {
  json j = json::object();
  j["underlying"] = j_functor(f.underlying);
  j["laxator"] = j_pmap(f.laxator);
  j["unit_mor"] = f.unit_mor;
  j["strength"] = strength_name(f.strength);
  return j;
}

MonoidalFunctorData p_monfun(const json& j) {
  MonoidalFunctorData f;
  f.underlying = p_functor(sect(j, "underlying"));
  f.laxator = p_pmap(sect(j, "laxator"));
  f.unit_mor = sect(j, "unit_mor").get<Id>();
  f.strength = p_strength(sect(j, "strength").get<std::string>());
  return f;
}

json j_witness(const CocartesianWitness& w) {
  json j = json::object();
  j["monoidal"] = j_monoidal(w.monoidal);
  json cp = json::object();
  for (const auto& [k, v] : w.coprojections)
    cp[pk(k)] = json::array({v.first, v.second});
  j["coprojections"] = std::move(cp);
  j["codiagonal"] = j_smap(w.codiagonal);
  j["initial"] = w.initial;
  j["bang"] = j_smap(w.bang);
  return j;
}

CocartesianWitness p_witness(const json& j) {
  CocartesianWitness w;
  w.monoidal = p_monoidal(sect(j, "monoidal"));
  const json& cp = sect(j, "coprojections");
  for (auto it = cp.begin(); it != cp.end(); ++it)
    w.coprojections[pk_dec(it.key())] = {it.value().at(0).get<Id>(),
                                         it.value().at(1).get<Id>()};
  w.codiagonal = p_smap(sect(j, "codiagonal"));
  w.initial = sect(j, "initial").get<Id>();
  w.bang = p_smap(sect(j, "bang"));
  return w;
}

json j_indexed(const IndexedCat& m) {
  json j = json::object();
  j["base"] = j_fincat(m.base);
  j["variance"] =
      m.variance == Variance::covariant ? "covariant" : "contravariant";
  j["strict"] = m.strict;
  json fib = json::object();
  for (const auto& [x, f] : m.fibre) fib[x] = j_fincat(f);
  j["fibre"] = std::move(fib);
  json re = json::object();
  for (const auto& [f, F] : m.reindex)
    re[f] = json{{"obj_map", j_smap(F.obj_map)},
                 {"mor_map", j_smap(F.mor_map)}};
  j["reindex"] = std::move(re);
  json comp = json::object();
  for (const auto& [gf, d] : m.compositor)
    comp[pk(gf)] = j_smap(d.components);
  j["compositor"] = std::move(comp);
  json uni = json::object();
  for (const auto& [x, g] : m.unitor) uni[x] = j_smap(g.components);
  j["unitor"] = std::move(uni);
  return j;
}

IndexedCat p_indexed(const json& j) {
  IndexedCat m;
  m.base = p_fincat(sect(j, "base"));
  std::string var = sect(j, "variance").get<std::string>();
  if (var != "covariant" && var != "contravariant")
    throw ParseError("unknown variance '" + var + "'");
  m.variance =
      var == "covariant" ? Variance::covariant : Variance::contravariant;
  m.strict = sect(j, "strict").get<bool>();
  const json& fib = sect(j, "fibre");
  for (auto it = fib.begin(); it != fib.end(); ++it)
    m.fibre[it.key()] = p_fincat(it.value());
  const bool cov = m.variance == Variance::covariant;
  const json& re = sect(j, "reindex");
  for (auto it = re.begin(); it != re.end(); ++it) {
    const Id& f = it.key();
    FinFunctor F;
    const Id& s = cov ? m.base.dom(f) : m.base.cod(f);
    const Id& t = cov ? m.base.cod(f) : m.base.dom(f);
    F.source = m.fibre.at(s);
    F.target = m.fibre.at(t);
    F.obj_map = p_smap(sect(it.value(), "obj_map"));
    F.mor_map = p_smap(sect(it.value(), "mor_map"));
    m.reindex[f] = std::move(F);
  }
  const json& comp = sect(j, "compositor");
  for (auto it = comp.begin(); it != comp.end(); ++it) {
    IdPair gf = pk_dec(it.key());
    m.compositor[gf] =
        make_delta(m, gf.first, gf.second, p_smap(it.value()));
  }
  const json& uni = sect(j, "unitor");
  for (auto it = uni.begin(); it != uni.end(); ++it)
    m.unitor[it.key()] = make_gamma(m, it.key(), p_smap(it.value()));
  return m;
}

json j_fibration(const ClovenFibration& p) {
  json j = json::object();
  j["total"] = j_fincat(p.total);
  j["base"] = j_fincat(p.base);
  j["proj"] = json{{"obj_map", j_smap(p.proj.obj_map)},
                   {"mor_map", j_smap(p.proj.mor_map)}};
  j["cleavage"] = j_pmap(p.cleavage);
  j["direction"] =
      p.direction == FibDirection::fibration ? "fibration" : "opfibration";
  j["split"] = p.split;
  return j;
}

ClovenFibration p_fibration(const json& j) {
  ClovenFibration p;
  p.total = p_fincat(sect(j, "total"));
  p.base = p_fincat(sect(j, "base"));
  p.proj.source = p.total;
  p.proj.target = p.base;
  p.proj.obj_map = p_smap(sect(sect(j, "proj"), "obj_map"));
  p.proj.mor_map = p_smap(sect(sect(j, "proj"), "mor_map"));
  p.cleavage = p_pmap(sect(j, "cleavage"));
  std::string d = sect(j, "direction").get<std::string>();
  if (d != "fibration" && d != "opfibration")
    throw ParseError("unknown direction '" + d + "'");
  p.direction =
      d == "fibration" ? FibDirection::fibration : FibDirection::opfibration;
  p.split = sect(j, "split").get<bool>();
  return p;
}

json j_cells(const std::map<IdPair, std::map<IdPair, Id>>& cells) {
  json j = json::object();
  for (const auto& [k, comps] : cells) j[pk(k)] = j_pmap(comps);
  return j;
}
std::map<IdPair, std::map<IdPair, Id>> p_cells(const json& j) {
  std::map<IdPair, std::map<IdPair, Id>> cells;
  for (auto it = j.begin(); it != j.end(); ++it)
    cells[pk_dec(it.key())] = p_pmap(it.value());
  return cells;
}

json j_lax(const LaxMonoidalIndexed& l) {
  json j = json::object();
  j["carrier"] = j_indexed(l.carrier);
  j["base_monoidal"] = j_monoidal(l.base_monoidal);
  json lax = json::object();
  for (const auto& [xy, pm] : l.laxator)
    lax[pk(xy)] = json{{"obj", j_pmap(pm.obj)}, {"mor", j_pmap(pm.mor)}};
  j["laxator"] = std::move(lax);
  j["cells"] = j_cells(l.laxator_cells);
  j["unit_object"] = l.unit_object;
  json om = json::object();
  for (const auto& [xyz, comps] : l.omega) {
    json inner = json::object();
    for (const auto& [abc, v] : comps) inner[tk(abc)] = v;
    om[tk(xyz)] = std::move(inner);
  }
  j["omega"] = std::move(om);
  json ze = json::object(), xi = json::object();
  for (const auto& [x, comps] : l.zeta) ze[x] = j_smap(comps);
  for (const auto& [x, comps] : l.xi) xi[x] = j_smap(comps);
  j["zeta"] = std::move(ze);
  j["xi"] = std::move(xi);
  if (l.braid_cell) j["braid_cell"] = j_cells(*l.braid_cell);
  return j;
}

LaxMonoidalIndexed p_lax(const json& j) {
  LaxMonoidalIndexed l;
  l.carrier = p_indexed(sect(j, "carrier"));
  l.base_monoidal = p_monoidal(sect(j, "base_monoidal"));
  const json& lax = sect(j, "laxator");
  for (auto it = lax.begin(); it != lax.end(); ++it) {
    PairMap pm;
    pm.obj = p_pmap(sect(it.value(), "obj"));
    pm.mor = p_pmap(sect(it.value(), "mor"));
    l.laxator[pk_dec(it.key())] = std::move(pm);
  }
  l.laxator_cells = p_cells(sect(j, "cells"));
  l.unit_object = sect(j, "unit_object").get<Id>();
  const json& om = sect(j, "omega");
  for (auto it = om.begin(); it != om.end(); ++it) {
    auto& inner = l.omega[tk_dec(it.key())];
    for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
      inner[tk_dec(jt.key())] = jt.value().get<Id>();
  }
  const json& ze = sect(j, "zeta");
  for (auto it = ze.begin(); it != ze.end(); ++it)
    l.zeta[it.key()] = p_smap(it.value());
  const json& xi = sect(j, "xi");
  for (auto it = xi.begin(); it != xi.end(); ++it)
    l.xi[it.key()] = p_smap(it.value());
  if (j.contains("braid_cell")) l.braid_cell = p_cells(j["braid_cell"]);
  return l;
}

json j_fibrewise(const FibrewiseMonoidal& f) {
  json j = json::object();
  j["carrier"] = j_indexed(f.carrier);
  json pf = json::object();
  for (const auto& [x, m] : f.per_fibre) pf[x] = j_monoidal(m);
  j["per_fibre"] = std::move(pf);
  json rm = json::object();
  for (const auto& [g, m] : f.reindex_monoidal) rm[g] = j_monfun(m);
  j["reindex_monoidal"] = std::move(rm);
  return j;
}

FibrewiseMonoidal p_fibrewise(const json& j) {
  FibrewiseMonoidal f;
  f.carrier = p_indexed(sect(j, "carrier"));
  const json& pf = sect(j, "per_fibre");
  for (auto it = pf.begin(); it != pf.end(); ++it)
    f.per_fibre[it.key()] = p_monoidal(it.value());
  const json& rm = sect(j, "reindex_monoidal");
  for (auto it = rm.begin(); it != rm.end(); ++it)
    f.reindex_monoidal[it.key()] = p_monfun(it.value());
  return f;
}

json j_monoid(const Monoid& m) {
  json j = json::object();
  j["elements"] = json::array();
  for (const Id& e : m.elements) j["elements"].push_back(e);
  j["mult"] = j_pmap(m.mult);
  j["unit"] = m.unit;
  return j;
}

Monoid p_monoid(const json& j) {
  Monoid m;
  for (const auto& e : sect(j, "elements")) m.elements.push_back(e.get<Id>());
  m.mult = p_pmap(sect(j, "mult"));
  m.unit = sect(j, "unit").get<Id>();
  return m;
}

// ---- entry-point plumbing ----------------------------------------------

std::string wrap(const char* kind, json j) {
  j["kind"] = kind;
  return j.dump(1) + "\n";
}

json parse_kind(const std::string& text, const char* kind) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("interchange parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("interchange document has no 'kind'");
  if (j["kind"] != kind)
    throw ParseError("expected kind '" + std::string(kind) + "', found '" +
                     j["kind"].get<std::string>() + "'");
  return j;
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string entity_kind(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("interchange parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("interchange document has no 'kind'");
  return j["kind"].get<std::string>();
}

std::string dump(const FinCat& c) { return wrap("fincat", j_fincat(c)); }
std::string dump(const FinFunctor& f) { return wrap("functor", j_functor(f)); }
std::string dump(const NatTrans& n) { return wrap("nat_trans", j_nat(n)); }
std::string dump(const MonoidalData& m) {
  return wrap("monoidal", j_monoidal(m));
}
std::string dump(const MonoidalFunctorData& f) {
  return wrap("monoidal_functor", j_monfun(f));
}
std::string dump(const CocartesianWitness& w) {
  return wrap("cocartesian", j_witness(w));
}
std::string dump(const IndexedCat& m) { return wrap("indexed", j_indexed(m)); }
std::string dump(const ClovenFibration& p) {
  return wrap("fibration", j_fibration(p));
}
std::string dump(const LaxMonoidalIndexed& l) {
  return wrap("lax_monoidal_indexed", j_lax(l));
}
std::string dump(const FibrewiseMonoidal& f) {
  return wrap("fibrewise_monoidal", j_fibrewise(f));
}
std::string dump(const MonoidalFibrationData& m) {
  json j = json::object();
  j["carrier"] = j_fibration(m.carrier);
  j["total_monoidal"] = j_monoidal(m.total_monoidal);
  j["base_monoidal"] = j_monoidal(m.base_monoidal);
  return wrap("monoidal_fibration", std::move(j));
}
std::string dump(const Monoid& m) { return wrap("monoid", j_monoid(m)); }
std::string dump(const NetworkModel& n) {
  json j = json::object();
  json ms = json::object();
  for (const auto& [k, m] : n.monoids) ms[k] = j_monoid(m);
  j["monoids"] = std::move(ms);
  j["laxator"] = j_cells(n.laxator);
  return wrap("network_model", std::move(j));
}

FinCat load_fincat(const std::string& t) {
  return guarded("fincat", [&] { return p_fincat(parse_kind(t, "fincat")); });
}
FinFunctor load_functor(const std::string& t) {
  return guarded("functor",
                 [&] { return p_functor(parse_kind(t, "functor")); });
}
NatTrans load_nat_trans(const std::string& t) {
  return guarded("nat_trans",
                 [&] { return p_nat(parse_kind(t, "nat_trans")); });
}
MonoidalData load_monoidal(const std::string& t) {
  return guarded("monoidal",
                 [&] { return p_monoidal(parse_kind(t, "monoidal")); });
}
MonoidalFunctorData load_monoidal_functor(const std::string& t) {
  return guarded("monoidal_functor", [&] {
    return p_monfun(parse_kind(t, "monoidal_functor"));
  });
}
CocartesianWitness load_cocartesian(const std::string& t) {
  return guarded("cocartesian",
                 [&] { return p_witness(parse_kind(t, "cocartesian")); });
}
IndexedCat load_indexed(const std::string& t) {
  return guarded("indexed",
                 [&] { return p_indexed(parse_kind(t, "indexed")); });
}
ClovenFibration load_fibration(const std::string& t) {
  return guarded("fibration",
                 [&] { return p_fibration(parse_kind(t, "fibration")); });
}
LaxMonoidalIndexed load_lax_monoidal(const std::string& t) {
  return guarded("lax_monoidal_indexed", [&] {
    return p_lax(parse_kind(t, "lax_monoidal_indexed"));
  });
}
FibrewiseMonoidal load_fibrewise(const std::string& t) {
  return guarded("fibrewise_monoidal", [&] {
    return p_fibrewise(parse_kind(t, "fibrewise_monoidal"));
  });
}
MonoidalFibrationData load_monoidal_fibration(const std::string& t) {
  return guarded("monoidal_fibration", [&] {
    json j = parse_kind(t, "monoidal_fibration");
    MonoidalFibrationData m;
    m.carrier = p_fibration(sect(j, "carrier"));
    m.total_monoidal = p_monoidal(sect(j, "total_monoidal"));
    m.base_monoidal = p_monoidal(sect(j, "base_monoidal"));
    return m;
  });
}
Monoid load_monoid(const std::string& t) {
  return guarded("monoid", [&] { return p_monoid(parse_kind(t, "monoid")); });
}
NetworkModel load_network_model(const std::string& t) {
  return guarded("network_model", [&] {
    json j = parse_kind(t, "network_model");
    NetworkModel n;
    const json& ms = sect(j, "monoids");
    for (auto it = ms.begin(); it != ms.end(); ++it)
      n.monoids[it.key()] = p_monoid(it.value());
    n.laxator = p_cells(sect(j, "laxator"));
    return n;
  });
}

std::string report_text(const LawReport& r) {
  std::string out = r.summary() + "\n";
  for (const auto& v : r.violations) out += "  - " + v + "\n";
  return out;
}

std::string report_records(const LawReport& r) {
  std::string out;
  for (const auto& v : r.violations) out += "witness\t" + v + "\n";
  out += "checked\t" + std::to_string(r.checked) + "\n";
  out += "skipped\t" + std::to_string(r.skipped) + "\n";
  out += std::string("result\t") + (r.ok() ? "pass" : "fail") + "\n";
  return out;
}

}  // namespace catkit
