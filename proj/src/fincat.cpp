#include "catkit/fincat.hpp"

#include <algorithm>

namespace catkit {

const Id& FinCat::dom(const Id& m) const {
  auto it = morphisms.find(m);
  if (it == morphisms.end()) throw UnknownId("unknown morphism: " + m);
  return it->second.dom;
}

const Id& FinCat::cod(const Id& m) const {
  auto it = morphisms.find(m);
  if (it == morphisms.end()) throw UnknownId("unknown morphism: " + m);
  return it->second.cod;
}

const Id& FinCat::id(const Id& x) const {
  auto it = identity.find(x);
  if (it == identity.end()) throw UnknownId("no identity for object: " + x);
  return it->second;
}

const Id& FinCat::comp(const Id& g, const Id& f) const {
  auto it = compose.find({g, f});
  if (it == compose.end())
    throw MalformedTable("no composite for (" + g + ", " + f + ")");
  return it->second;
}

Id FinCat::comp_path(const std::vector<Id>& chain) const {
  if (chain.empty()) throw MalformedTable("empty composition chain");
  Id acc = chain.back();
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it)
    acc = comp(*it, acc);
  return acc;
}

void FinCat::add_object(const Id& x, const Id& id_mor) {
  objects.insert(x);
  morphisms[id_mor] = {x, x};
  identity[x] = id_mor;
  compose[{id_mor, id_mor}] = id_mor;
}

void FinCat::add_morphism(const Id& m, const Id& d, const Id& c) {
  morphisms[m] = {d, c};
}

std::vector<Id> FinCat::hom(const Id& x, const Id& y) const {
  std::vector<Id> out;
  for (const auto& [m, dc] : morphisms)
    if (dc.dom == x && dc.cod == y) out.push_back(m);
  return out;
}

std::vector<Id> FinCat::from(const Id& x) const {
  std::vector<Id> out;
  for (const auto& [m, dc] : morphisms)
    if (dc.dom == x) out.push_back(m);
  return out;
}

std::vector<Id> FinCat::to(const Id& y) const {
  std::vector<Id> out;
  for (const auto& [m, dc] : morphisms)
    if (dc.cod == y) out.push_back(m);
  return out;
}

bool FinCat::is_identity(const Id& f) const {
  auto it = identity.find(dom(f));
  return it != identity.end() && it->second == f;
}

std::optional<Id> FinCat::inverse(const Id& f) const {
  const Id& d = dom(f);
  const Id& c = cod(f);
  for (const Id& g : hom(c, d)) {
    auto gf = compose.find({g, f});
    auto fg = compose.find({f, g});
    if (gf != compose.end() && fg != compose.end() &&
        gf->second == id(d) && fg->second == id(c))
      return g;
  }
  return std::nullopt;
}

LawReport check_category(const FinCat& c) {
  LawReport r;
  // well-formed tables
  for (const auto& [m, dc] : c.morphisms) {
    r.instance(c.has_object(dc.dom) && c.has_object(dc.cod),
               "morphism " + m + " has unknown endpoint");
  }
  for (const Id& x : c.objects) {
    auto it = c.identity.find(x);
    if (it == c.identity.end()) {
      r.fail("object " + x + " lacks an identity entry");
      continue;
    }
    const auto mit = c.morphisms.find(it->second);
    r.instance(mit != c.morphisms.end() && mit->second.dom == x &&
                   mit->second.cod == x,
               "identity of " + x + " is not an endomorphism of " + x);
  }
  if (!r.ok()) return r;  // endpoint data broken; composite laws meaningless

  // compose defined exactly on composable pairs, with correct endpoints.
  // Totality is checked by counting: the table is a map, so matching the
  // composable-pair count with all keys composable means no pair is missing.
  std::map<Id, std::size_t> in_deg, out_deg;
  for (const auto& [m, dc] : c.morphisms) {
    ++out_deg[dc.dom];
    ++in_deg[dc.cod];
  }
  std::size_t expected = 0;
  for (const Id& x : c.objects) expected += in_deg[x] * out_deg[x];
  for (const auto& [gf, h] : c.compose) {
    const auto git = c.morphisms.find(gf.first);
    const auto fit = c.morphisms.find(gf.second);
    if (git == c.morphisms.end() || fit == c.morphisms.end() ||
        fit->second.cod != git->second.dom) {
      r.fail("compose keyed on non-composable (" + gf.first + ", " +
             gf.second + ")");
      continue;
    }
    const auto hit = c.morphisms.find(h);
    r.instance(hit != c.morphisms.end() &&
                   hit->second.dom == fit->second.dom &&
                   hit->second.cod == git->second.cod,
               "composite (" + gf.first + ", " + gf.second +
                   ") has wrong endpoints");
  }
  if (c.compose.size() != expected) {
    // locate one missing pair for the witness
    for (const auto& [g, gdc] : c.morphisms) {
      bool found = false;
      for (const Id& f : c.to(gdc.dom))
        if (!c.compose.count({g, f})) {
          r.fail("missing composite (" + g + ", " + f + ")");
          found = true;
          break;
        }
      if (found) break;
    }
    r.fail("compose table has " + std::to_string(c.compose.size()) +
           " entries, expected " + std::to_string(expected));
  }
  if (!r.ok()) return r;

  // unit laws
  for (const auto& [f, dc] : c.morphisms) {
    r.instance(c.comp(f, c.id(dc.dom)) == f, "right unit fails at " + f);
    r.instance(c.comp(c.id(dc.cod), f) == f, "left unit fails at " + f);
  }
  // associativity over all composable triples
  std::map<Id, std::vector<Id>> by_cod;
  for (const auto& [m, dc] : c.morphisms) by_cod[dc.cod].push_back(m);
  for (const auto& [h, hdc] : c.morphisms) {
    for (const Id& g : by_cod[hdc.dom]) {
      for (const Id& f : by_cod[c.dom(g)]) {
        r.instance(c.comp(h, c.comp(g, f)) == c.comp(c.comp(h, g), f),
                   "associativity fails at (" + h + ", " + g + ", " + f + ")");
      }
    }
  }
  return r;
}

FinCat opposite(const FinCat& c) {
  FinCat o;
  o.objects = c.objects;
  o.identity = c.identity;
  for (const auto& [m, dc] : c.morphisms) o.morphisms[m] = {dc.cod, dc.dom};
  for (const auto& [gf, h] : c.compose) o.compose[{gf.second, gf.first}] = h;
  return o;
}

FinCat product(const FinCat& c, const FinCat& d) {
  FinCat p;
  for (const Id& x : c.objects)
    for (const Id& y : d.objects) p.objects.insert(enc2(x, y));
  for (const auto& [m, mdc] : c.morphisms)
    for (const auto& [n, ndc] : d.morphisms)
      p.morphisms[enc2(m, n)] = {enc2(mdc.dom, ndc.dom),
                                 enc2(mdc.cod, ndc.cod)};
  for (const Id& x : c.objects)
    for (const Id& y : d.objects)
      p.identity[enc2(x, y)] = enc2(c.id(x), d.id(y));
  for (const auto& [gf, h] : c.compose)
    for (const auto& [sr, t] : d.compose)
      p.compose[{enc2(gf.first, sr.first), enc2(gf.second, sr.second)}] =
          enc2(h, t);
  return p;
}

const Id& FinFunctor::ob(const Id& x) const {
  auto it = obj_map.find(x);
  if (it == obj_map.end()) throw UnknownId("functor undefined on object " + x);
  return it->second;
}

const Id& FinFunctor::mor(const Id& m) const {
  auto it = mor_map.find(m);
  if (it == mor_map.end())
    throw UnknownId("functor undefined on morphism " + m);
  return it->second;
}

LawReport check_functor(const FinFunctor& f) {
  LawReport r;
  for (const Id& x : f.source.objects) {
    auto it = f.obj_map.find(x);
    if (it == f.obj_map.end() || !f.target.has_object(it->second)) {
      r.fail("object map broken at " + x);
      return r;
    }
  }
  for (const auto& [m, dc] : f.source.morphisms) {
    auto it = f.mor_map.find(m);
    if (it == f.mor_map.end() || !f.target.has_morphism(it->second)) {
      r.fail("morphism map broken at " + m);
      return r;
    }
    r.instance(f.target.dom(it->second) == f.ob(dc.dom) &&
                   f.target.cod(it->second) == f.ob(dc.cod),
               "endpoint preservation fails at " + m);
  }
  if (!r.ok()) return r;
  for (const Id& x : f.source.objects)
    r.instance(f.mor(f.source.id(x)) == f.target.id(f.ob(x)),
               "identity preservation fails at " + x);
  for (const auto& [gf, h] : f.source.compose)
    r.instance(f.target.comp(f.mor(gf.first), f.mor(gf.second)) == f.mor(h),
               "composite preservation fails at (" + gf.first + ", " +
                   gf.second + ")");
  return r;
}

FinFunctor identity_functor(const FinCat& c) {
  FinFunctor f;
  f.source = c;
  f.target = c;
  for (const Id& x : c.objects) f.obj_map[x] = x;
  for (const auto& [m, dc] : c.morphisms) f.mor_map[m] = m;
  return f;
}

FinFunctor constant_functor(const FinCat& src, const FinCat& tgt, const Id& x) {
  if (!tgt.has_object(x)) throw UnknownId("constant target object " + x);
  FinFunctor f;
  f.source = src;
  f.target = tgt;
  for (const Id& o : src.objects) f.obj_map[o] = x;
  for (const auto& [m, dc] : src.morphisms) f.mor_map[m] = tgt.id(x);
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (!(f.target == g.source))
    throw ShapeMismatch("functor composition: middle categories differ");
  FinFunctor h;
  h.source = f.source;
  h.target = g.target;
  for (const auto& [x, fx] : f.obj_map) h.obj_map[x] = g.ob(fx);
  for (const auto& [m, fm] : f.mor_map) h.mor_map[m] = g.mor(fm);
  return h;
}

const Id& NatTrans::at(const Id& x) const {
  auto it = components.find(x);
  if (it == components.end())
    throw UnknownId("transformation lacks component at " + x);
  return it->second;
}

LawReport check_nat_trans(const NatTrans& t) {
  LawReport r;
  if (!(t.source_fun.source == t.target_fun.source) ||
      !(t.source_fun.target == t.target_fun.target)) {
    r.fail("parallel functors required");
    return r;
  }
  const FinCat& c = t.source_fun.source;
  const FinCat& d = t.source_fun.target;
  for (const Id& x : c.objects) {
    auto it = t.components.find(x);
    if (it == t.components.end() || !d.has_morphism(it->second)) {
      r.fail("missing component at " + x);
      return r;
    }
    r.instance(d.dom(it->second) == t.source_fun.ob(x) &&
                   d.cod(it->second) == t.target_fun.ob(x),
               "component at " + x + " has wrong endpoints");
  }
  if (!r.ok()) return r;
  for (const auto& [m, dc] : c.morphisms)
    r.instance(d.comp(t.at(dc.cod), t.source_fun.mor(m)) ==
                   d.comp(t.target_fun.mor(m), t.at(dc.dom)),
               "naturality fails at " + m);
  return r;
}

NatTrans identity_nat(const FinFunctor& f) {
  NatTrans t;
  t.source_fun = f;
  t.target_fun = f;
  for (const Id& x : f.source.objects) t.components[x] = f.target.id(f.ob(x));
  return t;
}

NatTrans vertical_compose(const NatTrans& b, const NatTrans& a) {
  if (!(a.target_fun == b.source_fun))
    throw ShapeMismatch("vertical composition: middle functor differs");
  NatTrans t;
  t.source_fun = a.source_fun;
  t.target_fun = b.target_fun;
  const FinCat& d = a.source_fun.target;
  for (const auto& [x, m] : a.components)
    t.components[x] = d.comp(b.at(x), m);
  return t;
}

NatTrans whisker_left(const FinFunctor& h, const NatTrans& a) {
  if (!(a.source_fun.target == h.source))
    throw ShapeMismatch("whisker_left: shapes differ");
  NatTrans t;
  t.source_fun = compose_functors(h, a.source_fun);
  t.target_fun = compose_functors(h, a.target_fun);
  for (const auto& [x, m] : a.components) t.components[x] = h.mor(m);
  return t;
}

NatTrans whisker_right(const NatTrans& a, const FinFunctor& h) {
  if (!(h.target == a.source_fun.source))
    throw ShapeMismatch("whisker_right: shapes differ");
  NatTrans t;
  t.source_fun = compose_functors(a.source_fun, h);
  t.target_fun = compose_functors(a.target_fun, h);
  for (const Id& x : h.source.objects) t.components[x] = a.at(h.ob(x));
  return t;
}

bool nat_invertible(const NatTrans& t) {
  const FinCat& d = t.source_fun.target;
  for (const auto& [x, m] : t.components)
    if (!d.is_iso(m)) return false;
  return true;
}

NatTrans nat_inverse(const NatTrans& t) {
  NatTrans u;
  u.source_fun = t.target_fun;
  u.target_fun = t.source_fun;
  const FinCat& d = t.source_fun.target;
  for (const auto& [x, m] : t.components) {
    auto inv = d.inverse(m);
    if (!inv) throw ShapeMismatch("component at " + x + " not invertible");
    u.components[x] = *inv;
  }
  return u;
}

namespace {

// Extend a fixed object bijection to a morphism bijection making a functor.
// Backtracking over morphisms in a fixed order; prunes on endpoints,
// identities and every composite whose factors are already assigned.
struct MorSearch {
  const FinCat& c;
  const FinCat& d;
  const std::map<Id, Id>& ob;
  std::vector<Id> ms;              // morphisms of c in assignment order
  std::map<Id, Id> assign;         // c-morphism -> d-morphism
  std::set<Id> used;               // injectivity on morphisms

  bool consistent(const Id& m) {
    // check all composites both of whose factors are assigned
    for (const auto& [pr, h] : c.compose) {
      auto g = assign.find(pr.first);
      auto f = assign.find(pr.second);
      if (g == assign.end() || f == assign.end()) continue;
      auto hh = assign.find(h);
      if (hh == assign.end()) continue;
      if (d.comp(g->second, f->second) != hh->second) return false;
    }
    (void)m;
    return true;
  }

  bool run(std::size_t i) {
    if (i == ms.size()) return true;
    const Id& m = ms[i];
    if (assign.count(m)) return run(i + 1);
    const Id dm = ob.at(c.dom(m));
    const Id cm = ob.at(c.cod(m));
    for (const Id& cand : d.hom(dm, cm)) {
      if (used.count(cand)) continue;
      if (c.is_identity(m) != d.is_identity(cand)) continue;
      assign[m] = cand;
      used.insert(cand);
      if (consistent(m) && run(i + 1)) return true;
      assign.erase(m);
      used.erase(cand);
    }
    return false;
  }
};

}  // namespace

std::optional<std::pair<FinFunctor, FinFunctor>> find_isomorphism(
    const FinCat& c, const FinCat& d, std::size_t max_objects) {
  if (c.objects.size() > max_objects || d.objects.size() > max_objects)
    throw SizeLimitExceeded("find_isomorphism: too many objects");
  if (c.objects.size() != d.objects.size() ||
      c.morphisms.size() != d.morphisms.size())
    return std::nullopt;

  std::vector<Id> cobs(c.objects.begin(), c.objects.end());
  std::vector<Id> dobs(d.objects.begin(), d.objects.end());
  std::sort(dobs.begin(), dobs.end());
  do {
    std::map<Id, Id> ob;
    bool shape_ok = true;
    for (std::size_t i = 0; i < cobs.size(); ++i) ob[cobs[i]] = dobs[i];
    for (std::size_t i = 0; i < cobs.size() && shape_ok; ++i)
      for (std::size_t j = 0; j < cobs.size() && shape_ok; ++j)
        if (c.hom(cobs[i], cobs[j]).size() !=
            d.hom(dobs[i], dobs[j]).size())
          shape_ok = false;
    if (!shape_ok) continue;

    MorSearch s{c, d, ob, {}, {}, {}};
    for (const Id& x : cobs) s.assign[c.id(x)] = d.id(ob[x]);
    for (const auto& [x, im] : s.assign) s.used.insert(im);
    for (const auto& [m, dc] : c.morphisms)
      if (!c.is_identity(m)) s.ms.push_back(m);
    if (!s.run(0)) continue;

    FinFunctor fwd;
    fwd.source = c;
    fwd.target = d;
    fwd.obj_map = ob;
    fwd.mor_map = s.assign;
    if (!check_functor(fwd).ok()) continue;
    FinFunctor bwd;
    bwd.source = d;
    bwd.target = c;
    for (const auto& [x, y] : ob) bwd.obj_map[y] = x;
    for (const auto& [m, n] : s.assign) bwd.mor_map[n] = m;
    if (!check_functor(bwd).ok()) continue;
    return std::make_pair(fwd, bwd);
  } while (std::next_permutation(dobs.begin(), dobs.end()));
  return std::nullopt;
}

}  // namespace catkit
