#include "catkit/moncat.hpp"

#include <algorithm>

namespace catkit {

const Id* MonoidalData::tob(const Id& x, const Id& y) const {
  auto it = tensor_obj.find({x, y});
  return it == tensor_obj.end() ? nullptr : &it->second;
}

const Id* MonoidalData::tmor(const Id& f, const Id& g) const {
  auto it = tensor_mor.find({f, g});
  return it == tensor_mor.end() ? nullptr : &it->second;
}

const Id& MonoidalData::tensor_of(const Id& x, const Id& y) const {
  const Id* p = tob(x, y);
  if (!p) throw UnknownId("tensor undefined on (" + x + ", " + y + ")");
  return *p;
}

const Id& MonoidalData::tensor_of_mor(const Id& f, const Id& g) const {
  const Id* p = tmor(f, g);
  if (!p)
    throw UnknownId("tensor undefined on morphisms (" + f + ", " + g + ")");
  return *p;
}

const Id* MonoidalData::alpha(const Id& x, const Id& y, const Id& z) const {
  auto it = associator.find({x, y, z});
  return it == associator.end() ? nullptr : &it->second;
}

const Id* MonoidalData::braid(const Id& x, const Id& y) const {
  if (!braiding) return nullptr;
  auto it = braiding->find({x, y});
  return it == braiding->end() ? nullptr : &it->second;
}

bool MonoidalData::total() const {
  return tensor_obj.size() == base.objects.size() * base.objects.size();
}

Id tensor_of(const MonoidalData& m, const Id& x, const Id& y) {
  return m.tensor_of(x, y);
}

Id tensor_mor(const MonoidalData& m, const Id& f, const Id& g) {
  return m.tensor_of_mor(f, g);
}

MonoidalData product_monoidal(const MonoidalData& a, const MonoidalData& b) {
  MonoidalData m;
  m.base = product(a.base, b.base);
  m.unit = enc2(a.unit, b.unit);
  for (const auto& [xy, z] : a.tensor_obj)
    for (const auto& [uv, w] : b.tensor_obj)
      m.tensor_obj[{enc2(xy.first, uv.first), enc2(xy.second, uv.second)}] =
          enc2(z, w);
  for (const auto& [fg, h] : a.tensor_mor)
    for (const auto& [kl, n] : b.tensor_mor)
      m.tensor_mor[{enc2(fg.first, kl.first), enc2(fg.second, kl.second)}] =
          enc2(h, n);
  for (const auto& [xyz, al] : a.associator)
    for (const auto& [uvw, bl] : b.associator)
      m.associator[{enc2(std::get<0>(xyz), std::get<0>(uvw)),
                    enc2(std::get<1>(xyz), std::get<1>(uvw)),
                    enc2(std::get<2>(xyz), std::get<2>(uvw))}] = enc2(al, bl);
  for (const auto& [x, u] : a.left_unitor)
    for (const auto& [y, v] : b.left_unitor)
      m.left_unitor[enc2(x, y)] = enc2(u, v);
  for (const auto& [x, u] : a.right_unitor)
    for (const auto& [y, v] : b.right_unitor)
      m.right_unitor[enc2(x, y)] = enc2(u, v);
  if (a.braiding && b.braiding) {
    m.braiding.emplace();
    for (const auto& [xy, u] : *a.braiding)
      for (const auto& [uv, v] : *b.braiding)
        (*m.braiding)[{enc2(xy.first, uv.first),
                       enc2(xy.second, uv.second)}] = enc2(u, v);
    m.symmetric = a.symmetric && b.symmetric;
  }
  return m;
}

FinFunctor tensor_functor(const MonoidalData& m) {
  if (!m.total()) throw UnknownId("tensor_functor requires a total tensor");
  FinFunctor t;
  t.source = product(m.base, m.base);
  t.target = m.base;
  for (const auto& [xy, o] : m.tensor_obj)
    t.obj_map[enc2(xy.first, xy.second)] = o;
  for (const auto& [fg, h] : m.tensor_mor)
    t.mor_map[enc2(fg.first, fg.second)] = h;
  return t;
}

namespace {

// Guarded expression evaluator over possibly-partial monoidal tables.
// A missing table entry marks the law instance out-of-universe (skip);
// an ill-typed intermediate marks it broken (violation).
struct Ev {
  const MonoidalData& m;
  bool missing = false;
  bool broken = false;

  bool live() const { return !missing && !broken; }

  Id ob(const Id& x, const Id& y) {
    if (!live()) return {};
    const Id* p = m.tob(x, y);
    if (!p) { missing = true; return {}; }
    return *p;
  }
  Id mr(const Id& f, const Id& g) {
    if (!live()) return {};
    const Id* p = m.tmor(f, g);
    if (!p) { missing = true; return {}; }
    return *p;
  }
  Id al(const Id& x, const Id& y, const Id& z) {
    if (!live()) return {};
    const Id* p = m.alpha(x, y, z);
    if (!p) { missing = true; return {}; }
    return *p;
  }
  Id lu(const Id& x) {
    if (!live()) return {};
    auto it = m.left_unitor.find(x);
    if (it == m.left_unitor.end()) { missing = true; return {}; }
    return it->second;
  }
  Id ru(const Id& x) {
    if (!live()) return {};
    auto it = m.right_unitor.find(x);
    if (it == m.right_unitor.end()) { missing = true; return {}; }
    return it->second;
  }
  Id br(const Id& x, const Id& y) {
    if (!live()) return {};
    const Id* p = m.braid(x, y);
    if (!p) { missing = true; return {}; }
    return *p;
  }
  Id cp(const Id& g, const Id& f) {
    if (!live()) return {};
    if (!m.base.has_morphism(g) || !m.base.has_morphism(f) ||
        m.base.cod(f) != m.base.dom(g)) {
      broken = true;
      return {};
    }
    auto it = m.base.compose.find({g, f});
    if (it == m.base.compose.end()) { broken = true; return {}; }
    return it->second;
  }
  Id inv(const Id& f) {
    if (!live()) return {};
    if (!m.base.has_morphism(f)) { broken = true; return {}; }
    auto i = m.base.inverse(f);
    if (!i) { broken = true; return {}; }
    return *i;
  }
  Id idm(const Id& x) {
    if (!live()) return {};
    auto it = m.base.identity.find(x);
    if (it == m.base.identity.end()) { broken = true; return {}; }
    return it->second;
  }
};

void settle(LawReport& r, Ev& e, bool eq, const std::string& witness) {
  if (e.missing) { ++r.skipped; return; }
  if (e.broken) { r.fail("ill-typed: " + witness); return; }
  r.instance(eq, witness);
}

}  // namespace

LawReport check_monoidal(const MonoidalData& m) {
  LawReport r;
  r.absorb(check_category(m.base), "base: ");
  if (!r.ok()) return r;
  const FinCat& B = m.base;
  if (!B.has_object(m.unit)) {
    r.fail("unit object missing: " + m.unit);
    return r;
  }

  // --- tensor object table well-typed
  for (const auto& [xy, o] : m.tensor_obj)
    r.instance(B.has_object(xy.first) && B.has_object(xy.second) &&
                   B.has_object(o),
               "tensor_obj ill-typed at (" + xy.first + ", " + xy.second + ")");
  if (!r.ok()) return r;

  // --- tensor morphism table: well-typed entries + totality-by-count over
  // pairs whose endpoint tensors are defined
  std::map<IdPair, std::vector<Id>> homs;
  for (const auto& [f, dc] : B.morphisms) homs[{dc.dom, dc.cod}].push_back(f);
  std::size_t expected = 0;
  for (const auto& [dc1, h1] : homs)
    for (const auto& [dc2, h2] : homs)
      if (m.tob(dc1.first, dc2.first) && m.tob(dc1.second, dc2.second))
        expected += h1.size() * h2.size();
  for (const auto& [fg, h] : m.tensor_mor) {
    Ev e{m};
    Id d = e.ob(B.dom(fg.first), B.dom(fg.second));
    Id c = e.ob(B.cod(fg.first), B.cod(fg.second));
    if (e.missing) {
      r.fail("tensor_mor defined outside universe at (" + fg.first + ", " +
             fg.second + ")");
      continue;
    }
    r.instance(B.has_morphism(h) && B.dom(h) == d && B.cod(h) == c,
               "tensor_mor ill-typed at (" + fg.first + ", " + fg.second +
                   ")");
  }
  if (m.tensor_mor.size() != expected)
    r.fail("tensor_mor has " + std::to_string(m.tensor_mor.size()) +
           " entries, expected " + std::to_string(expected));
  if (!r.ok()) return r;

  // --- functoriality: identities, one-sided composites, interchange
  for (const auto& [xy, o] : m.tensor_obj) {
    Ev e{m};
    bool eq = e.mr(B.id(xy.first), B.id(xy.second)) == B.id(o);
    settle(r, e, eq, "1⊗1 = 1 fails at (" + xy.first + ", " + xy.second + ")");
  }
  std::map<Id, std::vector<Id>> right_partners, left_partners;
  for (const auto& [xy, o] : m.tensor_obj) {
    right_partners[xy.first].push_back(xy.second);
    left_partners[xy.second].push_back(xy.first);
  }
  for (const auto& [gf, gfc] : B.compose) {
    const Id& g = gf.first;
    const Id& f = gf.second;
    const Id a = B.dom(f), b = B.cod(f), c = B.cod(g);
    for (const Id& y : right_partners[a]) {
      Ev e{m};
      bool eq = e.mr(gfc, B.id(y)) ==
                e.cp(e.mr(g, B.id(y)), e.mr(f, B.id(y)));
      settle(r, e, eq,
             "(g∘f)⊗1 fails at (" + g + ", " + f + "; " + y + ")");
    }
    for (const Id& y : left_partners[a]) {
      Ev e{m};
      bool eq = e.mr(B.id(y), gfc) ==
                e.cp(e.mr(B.id(y), g), e.mr(B.id(y), f));
      settle(r, e, eq,
             "1⊗(g∘f) fails at (" + y + "; " + g + ", " + f + ")");
    }
    (void)b;
    (void)c;
  }
  for (const auto& [fg, h] : m.tensor_mor) {
    const Id& u = fg.first;
    const Id& v = fg.second;
    Ev e{m};
    bool eq1 = h == e.cp(e.mr(B.id(B.cod(u)), v), e.mr(u, B.id(B.dom(v))));
    bool eq2 = h == e.cp(e.mr(u, B.id(B.cod(v))), e.mr(B.id(B.dom(u)), v));
    settle(r, e, eq1 && eq2,
           "interchange fails at (" + u + ", " + v + ")");
  }

  // --- associator: totality over in-universe triples, typing, iso
  for (const Id& x : B.objects)
    for (const Id& y : right_partners[x])
      for (const auto& [yz, yzo] : m.tensor_obj) {
        if (yz.first != y) continue;
        const Id& z = yz.second;
        const Id* xy = m.tob(x, y);
        const Id* lhs = xy ? m.tob(*xy, z) : nullptr;
        const Id* rhs = m.tob(x, yzo);
        if (!lhs || !rhs) continue;
        const Id* a = m.alpha(x, y, z);
        if (!a) {
          r.fail("associator missing at (" + x + ", " + y + ", " + z + ")");
          continue;
        }
        r.instance(B.has_morphism(*a) && B.dom(*a) == *lhs &&
                       B.cod(*a) == *rhs && B.is_iso(*a),
                   "associator not an iso with correct endpoints at (" + x +
                       ", " + y + ", " + z + ")");
      }
  if (!r.ok()) return r;

  // --- associator naturality, one axis at a time (sufficient jointly with
  // tensor functoriality, since (f,g,h) = (f,1,1)∘(1,g,1)∘(1,1,h))
  std::map<Id, std::vector<IdPair>> triples_by_first, triples_by_second,
      triples_by_third;
  for (const auto& [t, a] : m.associator) {
    triples_by_first[std::get<0>(t)].push_back(
        {std::get<1>(t), std::get<2>(t)});
    triples_by_second[std::get<1>(t)].push_back(
        {std::get<0>(t), std::get<2>(t)});
    triples_by_third[std::get<2>(t)].push_back(
        {std::get<0>(t), std::get<1>(t)});
  }
  for (const auto& [f, dc] : B.morphisms) {
    for (const auto& [y, z] : triples_by_first[dc.dom]) {
      Ev e{m};
      bool eq = e.cp(e.al(dc.cod, y, z), e.mr(e.mr(f, B.id(y)), B.id(z))) ==
                e.cp(e.mr(f, e.idm(e.ob(y, z))), e.al(dc.dom, y, z));
      settle(r, e, eq, "associator naturality (axis 1) fails at " + f);
    }
    for (const auto& [x, z] : triples_by_second[dc.dom]) {
      Ev e{m};
      bool eq = e.cp(e.al(x, dc.cod, z), e.mr(e.mr(B.id(x), f), B.id(z))) ==
                e.cp(e.mr(B.id(x), e.mr(f, B.id(z))), e.al(x, dc.dom, z));
      settle(r, e, eq, "associator naturality (axis 2) fails at " + f);
    }
    for (const auto& [x, y] : triples_by_third[dc.dom]) {
      Ev e{m};
      bool eq = e.cp(e.al(x, y, dc.cod), e.mr(e.idm(e.ob(x, y)), f)) ==
                e.cp(e.mr(B.id(x), e.mr(B.id(y), f)), e.al(x, y, dc.dom));
      settle(r, e, eq, "associator naturality (axis 3) fails at " + f);
    }
  }

  // --- unitors: typing/iso/naturality
  for (const Id& x : B.objects) {
    if (const Id* ix = m.tob(m.unit, x)) {
      auto it = m.left_unitor.find(x);
      if (it == m.left_unitor.end()) {
        r.fail("left unitor missing at " + x);
      } else {
        r.instance(B.has_morphism(it->second) && B.dom(it->second) == *ix &&
                       B.cod(it->second) == x && B.is_iso(it->second),
                   "left unitor ill-typed at " + x);
      }
    }
    if (const Id* xi = m.tob(x, m.unit)) {
      auto it = m.right_unitor.find(x);
      if (it == m.right_unitor.end()) {
        r.fail("right unitor missing at " + x);
      } else {
        r.instance(B.has_morphism(it->second) && B.dom(it->second) == *xi &&
                       B.cod(it->second) == x && B.is_iso(it->second),
                   "right unitor ill-typed at " + x);
      }
    }
  }
  if (!r.ok()) return r;
  for (const auto& [f, dc] : B.morphisms) {
    {
      Ev e{m};
      bool eq = e.cp(e.lu(dc.cod), e.mr(B.id(m.unit), f)) ==
                e.cp(f, e.lu(dc.dom));
      settle(r, e, eq, "left unitor naturality fails at " + f);
    }
    {
      Ev e{m};
      bool eq = e.cp(e.ru(dc.cod), e.mr(f, B.id(m.unit))) ==
                e.cp(f, e.ru(dc.dom));
      settle(r, e, eq, "right unitor naturality fails at " + f);
    }
  }

  // --- pentagon and triangle
  for (const auto& [wx, wxo] : m.tensor_obj)
    for (const auto& [yz, yzo] : m.tensor_obj) {
      const Id &w = wx.first, &x = wx.second, &y = yz.first, &z = yz.second;
      Ev e{m};
      Id lhs = e.cp(e.al(w, x, yzo), e.al(wxo, y, z));
      Id rhs = e.cp(e.mr(B.id(w), e.al(x, y, z)),
                    e.cp(e.al(w, e.ob(x, y), z), e.mr(e.al(w, x, y), B.id(z))));
      settle(r, e, lhs == rhs,
             "pentagon fails at (" + w + ", " + x + ", " + y + ", " + z + ")");
    }
  for (const auto& [xy, o] : m.tensor_obj) {
    const Id &x = xy.first, &y = xy.second;
    Ev e{m};
    bool eq = e.cp(e.mr(B.id(x), e.lu(y)), e.al(x, m.unit, y)) ==
              e.mr(e.ru(x), B.id(y));
    settle(r, e, eq, "triangle fails at (" + x + ", " + y + ")");
  }

  // --- braiding
  if (m.braiding) {
    for (const auto& [xy, o] : m.tensor_obj) {
      const Id &x = xy.first, &y = xy.second;
      const Id* yx = m.tob(y, x);
      if (!yx) { ++r.skipped; continue; }
      const Id* b = m.braid(x, y);
      if (!b) {
        r.fail("braiding missing at (" + x + ", " + y + ")");
        continue;
      }
      r.instance(B.has_morphism(*b) && B.dom(*b) == o && B.cod(*b) == *yx &&
                     B.is_iso(*b),
                 "braiding ill-typed at (" + x + ", " + y + ")");
    }
    if (!r.ok()) return r;
    for (const auto& [f, dc] : B.morphisms) {
      for (const Id& y : right_partners[dc.dom]) {
        Ev e{m};
        bool eq = e.cp(e.br(dc.cod, y), e.mr(f, B.id(y))) ==
                  e.cp(e.mr(B.id(y), f), e.br(dc.dom, y));
        settle(r, e, eq, "braiding naturality (left) fails at " + f);
      }
      for (const Id& x : left_partners[dc.dom]) {
        Ev e{m};
        bool eq = e.cp(e.br(x, dc.cod), e.mr(B.id(x), f)) ==
                  e.cp(e.mr(f, B.id(x)), e.br(x, dc.dom));
        settle(r, e, eq, "braiding naturality (right) fails at " + f);
      }
    }
    for (const auto& [t, a] : m.associator) {
      const Id &x = std::get<0>(t), &y = std::get<1>(t), &z = std::get<2>(t);
      {
        Ev e{m};
        Id lhs = e.cp(e.al(y, z, x), e.cp(e.br(x, e.ob(y, z)), e.al(x, y, z)));
        Id rhs = e.cp(e.mr(B.id(y), e.br(x, z)),
                      e.cp(e.al(y, x, z), e.mr(e.br(x, y), B.id(z))));
        settle(r, e, lhs == rhs,
               "hexagon 1 fails at (" + x + ", " + y + ", " + z + ")");
      }
      {
        Ev e{m};
        Id lhs = e.cp(e.inv(e.al(z, x, y)),
                      e.cp(e.br(e.ob(x, y), z), e.inv(e.al(x, y, z))));
        Id rhs = e.cp(e.mr(e.br(x, z), B.id(y)),
                      e.cp(e.inv(e.al(x, z, y)), e.mr(B.id(x), e.br(y, z))));
        settle(r, e, lhs == rhs,
               "hexagon 2 fails at (" + x + ", " + y + ", " + z + ")");
      }
    }
    if (m.symmetric)
      for (const auto& [xy, o] : m.tensor_obj) {
        Ev e{m};
        bool eq = e.cp(e.br(xy.second, xy.first), e.br(xy.first, xy.second)) ==
                  B.id(o);
        settle(r, e, eq,
               "symmetry fails at (" + xy.first + ", " + xy.second + ")");
      }
  } else if (m.symmetric) {
    r.fail("symmetric flag without braiding table");
  }
  return r;
}

LawReport check_monoidal_functor(const MonoidalFunctorData& f,
                                 const MonoidalData& src,
                                 const MonoidalData& tgt) {
  LawReport r;
  r.absorb(check_functor(f.underlying), "underlying: ");
  if (!r.ok()) return r;
  if (!(f.underlying.source == src.base) || !(f.underlying.target == tgt.base)) {
    r.fail("monoidal functor endpoints do not match the given structures");
    return r;
  }
  const FinCat& B = tgt.base;
  const FinFunctor& F = f.underlying;

  // unit morphism
  {
    bool ok = B.has_morphism(f.unit_mor) && B.dom(f.unit_mor) == tgt.unit &&
              B.cod(f.unit_mor) == F.ob(src.unit);
    r.instance(ok, "unit morphism ill-typed");
    if (ok && f.strength != Strength::lax)
      r.instance(B.is_iso(f.unit_mor), "unit morphism not invertible");
    if (ok && f.strength == Strength::strict_)
      r.instance(f.unit_mor == B.id(tgt.unit), "unit morphism not identity");
  }

  // laxator entries over the common universe
  for (const auto& [ab, o] : src.tensor_obj) {
    const Id &a = ab.first, &b = ab.second;
    const Id* timg = tgt.tob(F.ob(a), F.ob(b));
    if (!timg) { ++r.skipped; continue; }
    auto it = f.laxator.find(ab);
    if (it == f.laxator.end()) {
      r.fail("laxator missing at (" + a + ", " + b + ")");
      continue;
    }
    const Id& phi = it->second;
    bool ok = B.has_morphism(phi) && B.dom(phi) == *timg &&
              B.cod(phi) == F.ob(o);
    r.instance(ok, "laxator ill-typed at (" + a + ", " + b + ")");
    if (ok && f.strength != Strength::lax)
      r.instance(B.is_iso(phi), "laxator not invertible at (" + a + ", " + b + ")");
    if (ok && f.strength == Strength::strict_)
      r.instance(B.is_identity(phi),
                 "laxator not identity at (" + a + ", " + b + ")");
  }
  if (!r.ok()) return r;

  auto phi = [&](const Id& a, const Id& b) -> const Id* {
    auto it = f.laxator.find({a, b});
    return it == f.laxator.end() ? nullptr : &it->second;
  };
  auto guarded = [&](auto&& fn, const std::string& witness) {
    Ev es{src};   // guard against src-universe misses
    Ev et{tgt};
    bool missing = false, eq = false;
    eq = fn(es, et, missing);
    if (missing || es.missing || et.missing) { ++r.skipped; return; }
    if (es.broken || et.broken) { r.fail("ill-typed: " + witness); return; }
    r.instance(eq, witness);
  };

  // naturality in each argument
  for (const auto& [u, udc] : src.base.morphisms)
    for (const Id& b : src.base.objects) {
      guarded(
          [&](Ev& es, Ev& et, bool& miss) {
            es.ob(udc.dom, b);
            es.ob(udc.cod, b);
            const Id* p0 = phi(udc.dom, b);
            const Id* p1 = phi(udc.cod, b);
            if (es.missing) return false;
            if (!p0 || !p1) { miss = true; return false; }
            Id ub = es.mr(u, src.base.id(b));
            if (es.missing) return false;
            Id lhs = et.cp(*p1, et.mr(F.mor(u), B.id(F.ob(b))));
            Id rhs = et.cp(F.mor(ub), *p0);
            return lhs == rhs;
          },
          "laxator naturality (axis 1) fails at (" + u + ", " + b + ")");
      guarded(
          [&](Ev& es, Ev& et, bool& miss) {
            es.ob(b, udc.dom);
            es.ob(b, udc.cod);
            const Id* p0 = phi(b, udc.dom);
            const Id* p1 = phi(b, udc.cod);
            if (es.missing) return false;
            if (!p0 || !p1) { miss = true; return false; }
            Id bu = es.mr(src.base.id(b), u);
            if (es.missing) return false;
            Id lhs = et.cp(*p1, et.mr(B.id(F.ob(b)), F.mor(u)));
            Id rhs = et.cp(F.mor(bu), *p0);
            return lhs == rhs;
          },
          "laxator naturality (axis 2) fails at (" + u + ", " + b + ")");
    }

  // associativity coherence over in-universe triples
  for (const auto& [t, a] : src.associator) {
    const Id &x = std::get<0>(t), &y = std::get<1>(t), &z = std::get<2>(t);
    guarded(
        [&](Ev& es, Ev& et, bool& miss) {
          Id xy = es.ob(x, y);
          Id yz = es.ob(y, z);
          if (es.missing) return false;
          const Id* pxy = phi(x, y);
          const Id* pyz = phi(y, z);
          const Id* pl = phi(xy, z);
          const Id* pr = phi(x, yz);
          if (!pxy || !pyz || !pl || !pr) { miss = true; return false; }
          Id lhs = et.cp(F.mor(a),
                         et.cp(*pl, et.mr(*pxy, B.id(F.ob(z)))));
          Id rhs = et.cp(*pr, et.cp(et.mr(B.id(F.ob(x)), *pyz),
                                    et.al(F.ob(x), F.ob(y), F.ob(z))));
          return lhs == rhs;
        },
        "laxator associativity fails at (" + x + ", " + y + ", " + z + ")");
  }

  // unit coherence
  for (const Id& a : src.base.objects) {
    guarded(
        [&](Ev& es, Ev& et, bool& miss) {
          es.ob(src.unit, a);
          Id l = es.lu(a);
          if (es.missing) return false;
          const Id* p = phi(src.unit, a);
          if (!p) { miss = true; return false; }
          Id lhs = et.cp(F.mor(l),
                         et.cp(*p, et.mr(f.unit_mor, B.id(F.ob(a)))));
          return lhs == et.lu(F.ob(a));
        },
        "laxator left unit coherence fails at " + a);
    guarded(
        [&](Ev& es, Ev& et, bool& miss) {
          es.ob(a, src.unit);
          Id ru = es.ru(a);
          if (es.missing) return false;
          const Id* p = phi(a, src.unit);
          if (!p) { miss = true; return false; }
          Id lhs = et.cp(F.mor(ru),
                         et.cp(*p, et.mr(B.id(F.ob(a)), f.unit_mor)));
          return lhs == et.ru(F.ob(a));
        },
        "laxator right unit coherence fails at " + a);
  }
  return r;
}

LawReport check_monoidal_nat_trans(const NatTrans& t,
                                   const MonoidalFunctorData& f,
                                   const MonoidalFunctorData& g,
                                   const MonoidalData& src,
                                   const MonoidalData& tgt) {
  LawReport r;
  if (!(t.source_fun == f.underlying) || !(t.target_fun == g.underlying)) {
    r.fail("transformation endpoints do not match the monoidal functors");
    return r;
  }
  r.absorb(check_nat_trans(t), "underlying: ");
  if (!r.ok()) return r;
  const FinCat& B = tgt.base;
  for (const auto& [ab, o] : src.tensor_obj) {
    auto pf = f.laxator.find(ab);
    auto pg = g.laxator.find(ab);
    if (pf == f.laxator.end() || pg == g.laxator.end()) { ++r.skipped; continue; }
    Ev e{tgt};
    Id lhs = e.cp(t.at(o), pf->second);
    Id rhs = e.cp(pg->second, e.mr(t.at(ab.first), t.at(ab.second)));
    settle(r, e, lhs == rhs,
           "monoidality square fails at (" + ab.first + ", " + ab.second + ")");
  }
  {
    Ev e{tgt};
    bool eq = e.cp(t.at(src.unit), f.unit_mor) == g.unit_mor;
    settle(r, e, eq, "unit monoidality square fails");
  }
  return r;
}

const IdPair& CocartesianWitness::inj(const Id& x, const Id& y) const {
  auto it = coprojections.find({x, y});
  if (it == coprojections.end())
    throw UnknownId("no coprojections for (" + x + ", " + y + ")");
  return it->second;
}

const Id& CocartesianWitness::nabla(const Id& x) const {
  auto it = codiagonal.find(x);
  if (it == codiagonal.end()) throw UnknownId("no codiagonal for " + x);
  return it->second;
}

const Id& CocartesianWitness::bang_to(const Id& x) const {
  auto it = bang.find(x);
  if (it == bang.end()) throw UnknownId("no bang for " + x);
  return it->second;
}

Id copair(const CocartesianWitness& w, const Id& x, const Id& y, const Id& p,
          const Id& q) {
  const FinCat& B = w.monoidal.base;
  const IdPair& i = w.inj(x, y);
  const Id& o = w.monoidal.tensor_of(x, y);
  const Id& t = B.cod(p);
  if (B.cod(q) != t)
    throw ShapeMismatch("copair: cocone legs have different codomains");
  std::optional<Id> found;
  for (const Id& h : B.hom(o, t)) {
    if (B.comp(h, i.first) == p && B.comp(h, i.second) == q) {
      if (found)
        throw MalformedTable("copair not universal: two mediators for (" + p +
                             ", " + q + ")");
      found = h;
    }
  }
  if (!found)
    throw MalformedTable("copair: no mediator for (" + p + ", " + q + ")");
  return *found;
}

LawReport check_cocartesian_witness(const CocartesianWitness& w) {
  LawReport r;
  const FinCat& B = w.monoidal.base;
  const MonoidalData& m = w.monoidal;
  r.absorb(check_category(B), "base: ");
  if (!r.ok()) return r;

  // initial object
  if (!B.has_object(w.initial) || w.initial != m.unit) {
    r.fail("initial object missing or different from the unit");
    return r;
  }
  for (const Id& t : B.objects) {
    auto h = B.hom(w.initial, t);
    auto it = w.bang.find(t);
    r.instance(h.size() == 1 && it != w.bang.end() && it->second == h[0],
               "initiality fails at " + t);
  }

  // coproduct universal property for every defined pair
  for (const auto& [xy, o] : m.tensor_obj) {
    const Id &x = xy.first, &y = xy.second;
    auto cit = w.coprojections.find(xy);
    if (cit == w.coprojections.end()) {
      r.fail("coprojections missing at (" + x + ", " + y + ")");
      continue;
    }
    const auto& [i1, i2] = cit->second;
    if (!B.has_morphism(i1) || !B.has_morphism(i2) || B.dom(i1) != x ||
        B.dom(i2) != y || B.cod(i1) != o || B.cod(i2) != o) {
      r.fail("coprojections ill-typed at (" + x + ", " + y + ")");
      continue;
    }
    bool universal = true;
    for (const Id& t : B.objects) {
      auto ho = B.hom(o, t);
      for (const Id& p : B.hom(x, t)) {
        for (const Id& q : B.hom(y, t)) {
          std::size_t n = 0;
          for (const Id& h : ho)
            if (B.comp(h, i1) == p && B.comp(h, i2) == q) ++n;
          if (n != 1) { universal = false; break; }
        }
        if (!universal) break;
      }
      if (!universal) break;
    }
    r.instance(universal,
               "coproduct universal property fails at (" + x + ", " + y + ")");
  }
  if (!r.ok()) return r;

  // codiagonal = [1, 1]; tensor_mor = [ι∘u, ι∘v]
  for (const auto& [x, n] : w.codiagonal)
    r.instance(n == copair(w, x, x, B.id(x), B.id(x)),
               "codiagonal is not the fold at " + x);
  for (const auto& [xx, o] : m.tensor_obj)
    if (xx.first == xx.second)
      r.instance(w.codiagonal.count(xx.first) != 0,
                 "codiagonal missing at " + xx.first);
  for (const auto& [fg, h] : m.tensor_mor) {
    const Id &u = fg.first, &v = fg.second;
    const IdPair& j = w.inj(B.cod(u), B.cod(v));
    r.instance(h == copair(w, B.dom(u), B.dom(v), B.comp(j.first, u),
                           B.comp(j.second, v)),
               "tensor_mor is not the mediated morphism at (" + u + ", " + v +
                   ")");
  }
  return r;
}

namespace {

bool is_coproduct(const FinCat& B,
                  const std::map<IdPair, std::vector<Id>>& homs,
                  const Id& x, const Id& y, const Id& o, const Id& i1,
                  const Id& i2) {
  auto get = [&](const Id& a, const Id& b) -> const std::vector<Id>& {
    static const std::vector<Id> empty;
    auto it = homs.find({a, b});
    return it == homs.end() ? empty : it->second;
  };
  for (const Id& t : B.objects) {
    const auto& ho = get(o, t);
    for (const Id& p : get(x, t))
      for (const Id& q : get(y, t)) {
        std::size_t n = 0;
        for (const Id& h : ho)
          if (B.comp(h, i1) == p && B.comp(h, i2) == q) ++n;
        if (n != 1) return false;
      }
  }
  return true;
}

}  // namespace

std::optional<CocartesianWitness> find_cocartesian(const FinCat& c,
                                                   bool allow_partial,
                                                   std::size_t max_objects) {
  if (c.objects.size() > max_objects)
    throw SizeLimitExceeded("find_cocartesian: too many objects");
  std::map<IdPair, std::vector<Id>> homs;
  for (const auto& [f, dc] : c.morphisms) homs[{dc.dom, dc.cod}].push_back(f);
  for (auto& [k, v] : homs) std::sort(v.begin(), v.end());
  auto hom = [&](const Id& a, const Id& b) -> const std::vector<Id>& {
    static const std::vector<Id> empty;
    auto it = homs.find({a, b});
    return it == homs.end() ? empty : it->second;
  };

  // initial object: unique morphism to every object
  std::optional<Id> initial;
  for (const Id& x : c.objects) {
    bool ok = true;
    for (const Id& t : c.objects)
      if (hom(x, t).size() != 1) { ok = false; break; }
    if (ok) { initial = x; break; }  // objects iterate sorted: lex least
  }
  if (!initial) return std::nullopt;

  CocartesianWitness w;
  w.initial = *initial;
  w.monoidal.base = c;
  w.monoidal.unit = *initial;
  for (const Id& t : c.objects) w.bang[t] = hom(*initial, t)[0];

  auto choose = [&](const Id& x, const Id& y) -> bool {
    // canonical unit choices first, then lexicographically least
    if (x == *initial &&
        is_coproduct(c, homs, x, y, y, w.bang[y], c.id(y))) {
      w.monoidal.tensor_obj[{x, y}] = y;
      w.coprojections[{x, y}] = {w.bang[y], c.id(y)};
      return true;
    }
    if (y == *initial &&
        is_coproduct(c, homs, x, y, x, c.id(x), w.bang[x])) {
      w.monoidal.tensor_obj[{x, y}] = x;
      w.coprojections[{x, y}] = {c.id(x), w.bang[x]};
      return true;
    }
    for (const Id& o : c.objects)
      for (const Id& i1 : hom(x, o))
        for (const Id& i2 : hom(y, o))
          if (is_coproduct(c, homs, x, y, o, i1, i2)) {
            w.monoidal.tensor_obj[{x, y}] = o;
            w.coprojections[{x, y}] = {i1, i2};
            return true;
          }
    return false;
  };

  for (const Id& x : c.objects)
    for (const Id& y : c.objects)
      if (!choose(x, y) && !allow_partial) return std::nullopt;

  MonoidalData& m = w.monoidal;
  auto cp = [&](const Id& x, const Id& y, const Id& p, const Id& q) {
    return copair(w, x, y, p, q);
  };

  for (const auto& [xy, o] : m.tensor_obj) {
    const auto& [i1, i2] = w.coprojections.at(xy);
    for (const Id& u : c.from(xy.first))
      for (const Id& v : c.from(xy.second)) {
        const Id* t2 = m.tob(c.cod(u), c.cod(v));
        if (!t2) continue;
        const auto& j = w.coprojections.at({c.cod(u), c.cod(v)});
        m.tensor_mor[{u, v}] =
            cp(xy.first, xy.second, c.comp(j.first, u), c.comp(j.second, v));
      }
    (void)i1;
    (void)i2;
    if (xy.first == xy.second)
      w.codiagonal[xy.first] =
          cp(xy.first, xy.first, c.id(xy.first), c.id(xy.first));
  }

  for (const Id& x : c.objects) {
    if (m.tob(m.unit, x))
      m.left_unitor[x] = cp(m.unit, x, w.bang[x], c.id(x));
    if (m.tob(x, m.unit))
      m.right_unitor[x] = cp(x, m.unit, c.id(x), w.bang[x]);
  }

  for (const auto& [xy, o] : m.tensor_obj) {
    const Id &x = xy.first, &y = xy.second;
    // associator (x,y,z) whenever all four tensors exist
    for (const Id& z : c.objects) {
      const Id* yz = m.tob(y, z);
      const Id* l = m.tob(o, z);
      const Id* rr = yz ? m.tob(x, *yz) : nullptr;
      if (!yz || !l || !rr) continue;
      const auto& kin = w.coprojections.at({y, z});   // y, z -> y+z
      const auto& kout = w.coprojections.at({x, *yz}); // x, y+z -> x+(y+z)
      Id leg_x = kout.first;
      Id leg_y = c.comp(kout.second, kin.first);
      Id leg_z = c.comp(kout.second, kin.second);
      m.associator[{x, y, z}] =
          cp(o, z, cp(x, y, leg_x, leg_y), leg_z);
    }
    // braiding whenever the swapped pair also exists
    if (const Id* yx = m.tob(y, x)) {
      const auto& j = w.coprojections.at({y, x});
      if (!m.braiding) m.braiding.emplace();
      (*m.braiding)[{x, y}] = cp(x, y, j.second, j.first);
      (void)yx;
    }
  }
  m.symmetric = m.braiding.has_value();
  return w;
}

}  // namespace catkit
