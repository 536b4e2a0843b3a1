#include "catkit/indexed.hpp"

namespace catkit {

namespace {

// thrown when a lookup leaves the truncated universe; instance is skipped
struct Skip {};

}  // namespace

const FinCat& IndexedCat::fib(const Id& x) const {
  auto it = fibre.find(x);
  if (it == fibre.end()) throw UnknownId("no fibre at " + x);
  return it->second;
}

const FinFunctor& IndexedCat::re(const Id& f) const {
  auto it = reindex.find(f);
  if (it == reindex.end()) throw UnknownId("no reindex along " + f);
  return it->second;
}

const Id& IndexedCat::delta_at(const Id& g, const Id& f, const Id& a) const {
  auto it = compositor.find({g, f});
  if (it == compositor.end())
    throw UnknownId("no compositor at (" + g + ", " + f + ")");
  return it->second.at(a);
}

const Id& IndexedCat::gamma_at(const Id& x, const Id& a) const {
  auto it = unitor.find(x);
  if (it == unitor.end()) throw UnknownId("no unitor at " + x);
  return it->second.at(a);
}

const Id& IndexedCat::re_src(const Id& f) const {
  return variance == Variance::covariant ? base.dom(f) : base.cod(f);
}

const Id& IndexedCat::re_tgt(const Id& f) const {
  return variance == Variance::covariant ? base.cod(f) : base.dom(f);
}

NatTrans make_delta(const IndexedCat& m, const Id& g, const Id& f,
                    std::map<Id, Id> components) {
  NatTrans d;
  if (m.variance == Variance::covariant)
    d.source_fun = compose_functors(m.re(g), m.re(f));
  else
    d.source_fun = compose_functors(m.re(f), m.re(g));
  d.target_fun = m.re(m.base.comp(g, f));
  d.components = std::move(components);
  return d;
}

NatTrans make_gamma(const IndexedCat& m, const Id& x,
                    std::map<Id, Id> components) {
  NatTrans g;
  g.source_fun = identity_functor(m.fib(x));
  g.target_fun = m.re(m.base.id(x));
  g.components = std::move(components);
  return g;
}

void finish_strict(IndexedCat& m) {
  m.compositor.clear();
  m.unitor.clear();
  for (const auto& [gf, c] : m.base.compose) {
    (void)c;
    std::map<Id, Id> comps;
    const FinFunctor& tgt = m.re(m.base.comp(gf.first, gf.second));
    for (const Id& a : tgt.source.objects)
      comps[a] = tgt.target.id(tgt.ob(a));
    m.compositor[gf] = make_delta(m, gf.first, gf.second, std::move(comps));
  }
  for (const Id& x : m.base.objects) {
    std::map<Id, Id> comps;
    for (const Id& a : m.fib(x).objects) comps[a] = m.fib(x).id(a);
    m.unitor[x] = make_gamma(m, x, std::move(comps));
  }
  m.strict = true;
}

LawReport check_pseudofunctor(const IndexedCat& m) {
  LawReport r;
  r.absorb(check_category(m.base), "base: ");
  if (!r.ok()) return r;

  for (const Id& x : m.base.objects) {
    if (!m.fibre.count(x)) {
      r.fail("missing fibre at " + x);
      continue;
    }
    r.absorb(check_category(m.fibre.at(x)), "fibre " + x + ": ");
  }
  if (!r.ok()) return r;

  const bool cov = m.variance == Variance::covariant;
  for (const auto& [f, dc] : m.base.morphisms) {
    if (!m.reindex.count(f)) {
      r.fail("missing reindex along " + f);
      continue;
    }
    const FinFunctor& F = m.reindex.at(f);
    const Id& s = cov ? dc.dom : dc.cod;
    const Id& t = cov ? dc.cod : dc.dom;
    r.instance(F.source == m.fibre.at(s) && F.target == m.fibre.at(t),
               "reindex endpoints along " + f);
    r.absorb(check_functor(F), "reindex " + f + ": ");
  }
  if (!r.ok()) return r;

  for (const auto& [gf, c] : m.base.compose) {
    const auto& [g, f] = gf;
    auto it = m.compositor.find(gf);
    if (it == m.compositor.end()) {
      r.fail("missing compositor at (" + g + ", " + f + ")");
      continue;
    }
    const NatTrans& d = it->second;
    FinFunctor src = cov ? compose_functors(m.re(g), m.re(f))
                         : compose_functors(m.re(f), m.re(g));
    r.instance(d.source_fun == src && d.target_fun == m.re(c),
               "compositor endpoints at (" + g + ", " + f + ")");
    r.absorb(check_nat_trans(d), "compositor (" + g + ", " + f + "): ");
    r.instance(nat_invertible(d),
               "compositor not invertible at (" + g + ", " + f + ")");
    if (m.strict)
      for (const auto& [a, k] : d.components)
        r.instance(d.target_fun.target.is_identity(k),
                   "strict compositor has nonidentity component at (" + g +
                       ", " + f + ") @ " + a);
  }
  for (const Id& x : m.base.objects) {
    auto it = m.unitor.find(x);
    if (it == m.unitor.end()) {
      r.fail("missing unitor at " + x);
      continue;
    }
    const NatTrans& gm = it->second;
    r.instance(gm.source_fun == identity_functor(m.fib(x)) &&
                   gm.target_fun == m.re(m.base.id(x)),
               "unitor endpoints at " + x);
    r.absorb(check_nat_trans(gm), "unitor " + x + ": ");
    r.instance(nat_invertible(gm), "unitor not invertible at " + x);
    if (m.strict)
      for (const auto& [a, k] : gm.components)
        r.instance(m.fib(x).is_identity(k),
                   "strict unitor has nonidentity component at " + x + " @ " +
                       a);
  }
  if (!r.ok()) return r;

  // associativity coherence over composable triples
  std::map<Id, std::vector<Id>> by_dom;
  for (const auto& [h, dc] : m.base.morphisms) by_dom[dc.dom].push_back(h);
  for (const auto& [gf, c] : m.base.compose) {
    const auto& [g, f] = gf;
    auto ext = by_dom.find(m.base.cod(g));
    if (ext == by_dom.end()) continue;
    for (const Id& h : ext->second) {
      Id hg = m.base.comp(h, g);
      Id gfc = c;  // g∘f
      const FinCat& outer = cov ? m.fib(m.base.cod(h)) : m.fib(m.base.dom(f));
      const std::set<Id>& dom_objs =
          cov ? m.fib(m.base.dom(f)).objects : m.fib(m.base.cod(h)).objects;
      for (const Id& a : dom_objs) {
        Id lhs, rhs;
        if (cov) {
          lhs = outer.comp(m.delta_at(h, gfc, a),
                           m.re(h).mor(m.delta_at(g, f, a)));
          rhs = outer.comp(m.delta_at(hg, f, a),
                           m.delta_at(h, g, m.re(f).ob(a)));
        } else {
          lhs = outer.comp(m.delta_at(hg, f, a),
                           m.re(f).mor(m.delta_at(h, g, a)));
          rhs = outer.comp(m.delta_at(h, gfc, a),
                           m.delta_at(g, f, m.re(h).ob(a)));
        }
        r.instance(lhs == rhs, "compositor associativity at (" + h + ", " + g +
                                   ", " + f + ") @ " + a);
      }
    }
  }

  // unit coherence per base morphism
  for (const auto& [f, dc] : m.base.morphisms) {
    const Id& x = dc.dom;
    const Id& y = dc.cod;
    const Id& ix = m.base.id(x);
    const Id& iy = m.base.id(y);
    const FinCat& tgt = m.fib(cov ? y : x);
    const std::set<Id>& dom_objs = m.fib(cov ? x : y).objects;
    for (const Id& a : dom_objs) {
      Id ida = tgt.id(m.re(f).ob(a));
      Id left, right;
      if (cov) {
        left = tgt.comp(m.delta_at(f, ix, a), m.re(f).mor(m.gamma_at(x, a)));
        right = tgt.comp(m.delta_at(iy, f, a), m.gamma_at(y, m.re(f).ob(a)));
      } else {
        left = tgt.comp(m.delta_at(f, ix, a), m.gamma_at(x, m.re(f).ob(a)));
        right = tgt.comp(m.delta_at(iy, f, a), m.re(f).mor(m.gamma_at(y, a)));
      }
      r.instance(left == ida, "left unit coherence at " + f + " @ " + a);
      r.instance(right == ida, "right unit coherence at " + f + " @ " + a);
    }
  }
  return r;
}

IndexedCat opposite_indexed(const IndexedCat& m) {
  IndexedCat o = m;
  o.base = opposite(m.base);
  o.variance = m.variance == Variance::covariant ? Variance::contravariant
                                                 : Variance::covariant;
  o.compositor.clear();
  for (const auto& [gf, d] : m.compositor)
    o.compositor[{gf.second, gf.first}] = d;
  return o;
}

// ---- pair functors ---------------------------------------------------------

const Id& PairMap::ob(const Id& a, const Id& b) const {
  auto it = obj.find({a, b});
  if (it == obj.end())
    throw UnknownId("pair functor undefined on objects (" + a + ", " + b +
                    ")");
  return it->second;
}

const Id& PairMap::mr(const Id& k, const Id& l) const {
  auto it = mor.find({k, l});
  if (it == mor.end())
    throw UnknownId("pair functor undefined on morphisms (" + k + ", " + l +
                    ")");
  return it->second;
}

LawReport check_pair_functor(const PairMap& p, const FinCat& a,
                             const FinCat& b, const FinCat& c) {
  LawReport r;
  for (const Id& x : a.objects)
    for (const Id& y : b.objects) {
      auto it = p.obj.find({x, y});
      if (it == p.obj.end()) {
        r.fail("missing object image at (" + x + ", " + y + ")");
        continue;
      }
      r.instance(c.has_object(it->second),
                 "object image outside target at (" + x + ", " + y + ")");
    }
  if (!r.ok()) return r;
  for (const auto& [k, kdc] : a.morphisms)
    for (const auto& [l, ldc] : b.morphisms) {
      auto it = p.mor.find({k, l});
      if (it == p.mor.end()) {
        r.fail("missing morphism image at (" + k + ", " + l + ")");
        continue;
      }
      const Id& img = it->second;
      r.instance(c.has_morphism(img) &&
                     c.dom(img) == p.ob(kdc.dom, ldc.dom) &&
                     c.cod(img) == p.ob(kdc.cod, ldc.cod),
                 "morphism image endpoints at (" + k + ", " + l + ")");
    }
  if (!r.ok()) return r;
  for (const Id& x : a.objects)
    for (const Id& y : b.objects)
      r.instance(p.mr(a.id(x), b.id(y)) == c.id(p.ob(x, y)),
                 "identity preservation at (" + x + ", " + y + ")");
  // interchange against one-sided composites gives full functoriality
  for (const auto& [gf, gfa] : a.compose)
    for (const auto& [l, ldc] : b.morphisms) {
      (void)ldc;
      Id lid = b.id(ldc.dom);
      r.instance(p.mr(gfa, lid) ==
                     c.comp(p.mr(gf.first, lid), p.mr(gf.second, lid)),
                 "left composite at ((" + gf.first + "∘" + gf.second + "), " +
                     l + ")");
    }
  for (const auto& [k, kdc] : a.morphisms)
    for (const auto& [ml, mla] : b.compose) {
      Id kid = a.id(kdc.dom);
      r.instance(p.mr(kid, mla) ==
                     c.comp(p.mr(kid, ml.first), p.mr(kid, ml.second)),
                 "right composite at (" + k + ", (" + ml.first + "∘" +
                     ml.second + "))");
    }
  for (const auto& [k, kdc] : a.morphisms)
    for (const auto& [l, ldc] : b.morphisms)
      r.instance(p.mr(k, l) == c.comp(p.mr(k, b.id(ldc.cod)),
                                      p.mr(a.id(kdc.dom), l)),
                 "interchange at (" + k + ", " + l + ")");
  return r;
}

// ---- lax monoidal structure -------------------------------------------

const PairMap& LaxMonoidalIndexed::mu(const Id& x, const Id& y) const {
  auto it = laxator.find({x, y});
  if (it == laxator.end())
    throw UnknownId("no laxator at (" + x + ", " + y + ")");
  return it->second;
}

const Id& LaxMonoidalIndexed::mu_cell(const Id& f, const Id& g, const Id& a,
                                      const Id& b) const {
  auto it = laxator_cells.find({f, g});
  if (it == laxator_cells.end())
    throw UnknownId("no laxator cell table at (" + f + ", " + g + ")");
  auto jt = it->second.find({a, b});
  if (jt == it->second.end())
    throw UnknownId("no laxator cell at (" + f + ", " + g + ") @ (" + a +
                    ", " + b + ")");
  return jt->second;
}

namespace {

// guarded lookups into possibly-partial tensor tables
const Id& need_tob(const MonoidalData& m, const Id& x, const Id& y) {
  const Id* t = m.tob(x, y);
  if (!t) throw Skip{};
  return *t;
}

const PairMap* mu_or_null(const LaxMonoidalIndexed& l, const Id& x,
                          const Id& y) {
  auto it = l.laxator.find({x, y});
  return it == l.laxator.end() ? nullptr : &it->second;
}

}  // namespace

LawReport check_lax_monoidal_components(const LaxMonoidalIndexed& l) {
  LawReport r;
  r.absorb(check_pseudofunctor(l.carrier), "carrier: ");
  r.absorb(check_monoidal(l.base_monoidal), "base monoidal: ");
  if (!r.ok()) return r;
  const IndexedCat& M = l.carrier;
  const MonoidalData& B = l.base_monoidal;
  const bool cov = M.variance == Variance::covariant;
  r.instance(M.base == B.base, "carrier and monoidal structure share a base");
  if (!r.ok()) return r;

  r.instance(M.fib(B.unit).has_object(l.unit_object),
             "unit object lies in the unit fibre");

  // laxator pair functors, one per defined tensor pair
  for (const auto& [xy, z] : B.tensor_obj) {
    const PairMap* p = mu_or_null(l, xy.first, xy.second);
    if (!p) {
      r.fail("missing laxator at (" + xy.first + ", " + xy.second + ")");
      continue;
    }
    r.absorb(check_pair_functor(*p, M.fib(xy.first), M.fib(xy.second),
                                M.fib(z)),
             "laxator (" + xy.first + ", " + xy.second + "): ");
  }
  if (!r.ok()) return r;

  // laxator cells, one per defined tensor of morphisms
  for (const auto& [fg, tfg] : B.tensor_mor) {
    const auto& [f, g] = fg;
    Id x1 = B.base.dom(f), y1 = B.base.cod(f);
    Id x2 = B.base.dom(g), y2 = B.base.cod(g);
    if (!l.laxator_cells.count(fg)) {
      r.fail("missing laxator cells at (" + f + ", " + g + ")");
      continue;
    }
    const Id& sx = cov ? x1 : y1;  // fibre of the first cell argument
    const Id& sy = cov ? x2 : y2;
    const Id* homeobj = cov ? B.tob(y1, y2) : B.tob(x1, x2);
    if (!homeobj) {  // out-of-universe endpoints
      ++r.skipped;
      continue;
    }
    const FinCat& home = M.fib(*homeobj);
    for (const Id& a : M.fib(sx).objects)
      for (const Id& b : M.fib(sy).objects) {
        std::string w = "laxator cell at (" + f + ", " + g + ") @ (" + a +
                        ", " + b + ")";
        try {
          const Id& cell = l.mu_cell(f, g, a, b);
          Id want_dom, want_cod;
          if (cov) {
            want_dom = M.re(tfg).ob(l.mu(x1, x2).ob(a, b));
            want_cod = l.mu(y1, y2).ob(M.re(f).ob(a), M.re(g).ob(b));
          } else {
            want_dom = l.mu(x1, x2).ob(M.re(f).ob(a), M.re(g).ob(b));
            want_cod = M.re(tfg).ob(l.mu(y1, y2).ob(a, b));
          }
          r.instance(home.has_morphism(cell) && home.dom(cell) == want_dom &&
                         home.cod(cell) == want_cod,
                     w + ": endpoints");
          r.instance(home.is_iso(cell), w + ": not invertible");
        } catch (const Skip&) {
          ++r.skipped;
        } catch (const UnknownId& e) {
          r.fail(w + ": " + e.what());
        }
      }
    // naturality in each argument
    for (const auto& [k, kdc] : M.fib(sx).morphisms)
      for (const Id& b : M.fib(sy).objects) {
        std::string w = "laxator cell naturality (first axis) at (" + f +
                        ", " + g + ") @ (" + k + ", " + b + ")";
        try {
          Id idb = M.fib(sy).id(b);
          Id lhs, rhs;
          if (cov) {
            lhs = home.comp(l.mu(y1, y2).mr(M.re(f).mor(k),
                                            M.fib(y2).id(M.re(g).ob(b))),
                            l.mu_cell(f, g, kdc.dom, b));
            rhs = home.comp(l.mu_cell(f, g, kdc.cod, b),
                            M.re(tfg).mor(l.mu(x1, x2).mr(k, idb)));
          } else {
            lhs = home.comp(M.re(tfg).mor(l.mu(y1, y2).mr(k, idb)),
                            l.mu_cell(f, g, kdc.dom, b));
            rhs = home.comp(l.mu_cell(f, g, kdc.cod, b),
                            l.mu(x1, x2).mr(M.re(f).mor(k),
                                            M.fib(x2).id(M.re(g).ob(b))));
          }
          r.instance(lhs == rhs, w);
        } catch (const Skip&) {
          ++r.skipped;
        } catch (const UnknownId& e) {
          r.fail(w + ": " + e.what());
        }
      }
    for (const Id& a : M.fib(sx).objects)
      for (const auto& [k, kdc] : M.fib(sy).morphisms) {
        std::string w = "laxator cell naturality (second axis) at (" + f +
                        ", " + g + ") @ (" + a + ", " + k + ")";
        try {
          Id ida = M.fib(sx).id(a);
          Id lhs, rhs;
          if (cov) {
            lhs = home.comp(l.mu(y1, y2).mr(M.fib(y1).id(M.re(f).ob(a)),
                                            M.re(g).mor(k)),
                            l.mu_cell(f, g, a, kdc.dom));
            rhs = home.comp(l.mu_cell(f, g, a, kdc.cod),
                            M.re(tfg).mor(l.mu(x1, x2).mr(ida, k)));
          } else {
            lhs = home.comp(M.re(tfg).mor(l.mu(y1, y2).mr(ida, k)),
                            l.mu_cell(f, g, a, kdc.dom));
            rhs = home.comp(l.mu_cell(f, g, a, kdc.cod),
                            l.mu(x1, x2).mr(M.fib(x1).id(M.re(f).ob(a)),
                                            M.re(g).mor(k)));
          }
          r.instance(lhs == rhs, w);
        } catch (const Skip&) {
          ++r.skipped;
        } catch (const UnknownId& e) {
          r.fail(w + ": " + e.what());
        }
      }
  }
  if (!r.ok()) return r;

  // omega shapes; residual coherence is delegated to the total category
  for (const auto& [xyz, al] : B.associator) {
    const auto& [x, y, z] = xyz;
    auto it = l.omega.find(xyz);
    if (it == l.omega.end()) {
      r.fail("missing omega at (" + x + ", " + y + ", " + z + ")");
      continue;
    }
    for (const Id& a : M.fib(x).objects)
      for (const Id& b : M.fib(y).objects)
        for (const Id& c : M.fib(z).objects) {
          std::string w = "omega at (" + x + ", " + y + ", " + z + ") @ (" +
                          a + ", " + b + ", " + c + ")";
          try {
            Id xy = need_tob(B, x, y), yz = need_tob(B, y, z);
            Id xy_z = need_tob(B, xy, z), x_yz = need_tob(B, x, yz);
            const FinCat& home = M.fib(cov ? x_yz : xy_z);
            auto jt = it->second.find({a, b, c});
            if (jt == it->second.end()) {
              r.fail(w + ": missing component");
              continue;
            }
            const Id& o = jt->second;
            Id nested_l = l.mu(xy, z).ob(l.mu(x, y).ob(a, b), c);
            Id nested_r = l.mu(x, yz).ob(a, l.mu(y, z).ob(b, c));
            Id want_dom = cov ? M.re(al).ob(nested_l) : nested_l;
            Id want_cod = cov ? nested_r : M.re(al).ob(nested_r);
            r.instance(home.has_morphism(o) && home.dom(o) == want_dom &&
                           home.cod(o) == want_cod,
                       w + ": endpoints");
            r.instance(home.is_iso(o), w + ": not invertible");
          } catch (const Skip&) {
            ++r.skipped;
          } catch (const UnknownId& e) {
            r.fail(w + ": " + e.what());
          }
        }
  }

  // unitor fillers
  for (const auto& [x, ru] : B.right_unitor) {
    auto it = l.zeta.find(x);
    if (it == l.zeta.end()) {
      r.fail("missing zeta at " + x);
      continue;
    }
    for (const Id& a : M.fib(x).objects) {
      std::string w = "zeta at " + x + " @ " + a;
      try {
        Id xI = need_tob(B, x, B.unit);
        const FinCat& home = M.fib(cov ? x : xI);
        auto jt = it->second.find(a);
        if (jt == it->second.end()) {
          r.fail(w + ": missing component");
          continue;
        }
        const Id& zc = jt->second;
        Id packed = l.mu(x, B.unit).ob(a, l.unit_object);
        Id want_dom = cov ? M.re(ru).ob(packed) : packed;
        Id want_cod = cov ? a : M.re(ru).ob(a);
        r.instance(home.has_morphism(zc) && home.dom(zc) == want_dom &&
                       home.cod(zc) == want_cod,
                   w + ": endpoints");
        r.instance(home.is_iso(zc), w + ": not invertible");
      } catch (const Skip&) {
        ++r.skipped;
      } catch (const UnknownId& e) {
        r.fail(w + ": " + e.what());
      }
    }
  }
  for (const auto& [x, lu] : B.left_unitor) {
    auto it = l.xi.find(x);
    if (it == l.xi.end()) {
      r.fail("missing xi at " + x);
      continue;
    }
    for (const Id& a : M.fib(x).objects) {
      std::string w = "xi at " + x + " @ " + a;
      try {
        Id Ix = need_tob(B, B.unit, x);
        const FinCat& home = M.fib(cov ? x : Ix);
        auto jt = it->second.find(a);
        if (jt == it->second.end()) {
          r.fail(w + ": missing component");
          continue;
        }
        const Id& xc = jt->second;
        Id packed = l.mu(B.unit, x).ob(l.unit_object, a);
        Id want_dom = cov ? M.re(lu).ob(packed) : packed;
        Id want_cod = cov ? a : M.re(lu).ob(a);
        r.instance(home.has_morphism(xc) && home.dom(xc) == want_dom &&
                       home.cod(xc) == want_cod,
                   w + ": endpoints");
        r.instance(home.is_iso(xc), w + ": not invertible");
      } catch (const Skip&) {
        ++r.skipped;
      } catch (const UnknownId& e) {
        r.fail(w + ": " + e.what());
      }
    }
  }

  // braiding cells, when present
  if (l.braid_cell) {
    if (!B.braiding) {
      r.fail("braid cells given but the base has no braiding");
      return r;
    }
    for (const auto& [xy, bxy] : *B.braiding) {
      const auto& [x, y] = xy;
      auto it = l.braid_cell->find(xy);
      if (it == l.braid_cell->end()) {
        r.fail("missing braid cell table at (" + x + ", " + y + ")");
        continue;
      }
      for (const Id& a : M.fib(x).objects)
        for (const Id& b : M.fib(y).objects) {
          std::string w = "braid cell at (" + x + ", " + y + ") @ (" + a +
                          ", " + b + ")";
          try {
            Id txy = need_tob(B, x, y);
            Id tyx = need_tob(B, y, x);
            const FinCat& home = M.fib(cov ? tyx : txy);
            auto jt = it->second.find({a, b});
            if (jt == it->second.end()) {
              r.fail(w + ": missing component");
              continue;
            }
            const Id& v = jt->second;
            Id fwd = l.mu(x, y).ob(a, b);
            Id rev = l.mu(y, x).ob(b, a);
            Id want_dom = cov ? M.re(bxy).ob(fwd) : fwd;
            Id want_cod = cov ? rev : M.re(bxy).ob(rev);
            r.instance(home.has_morphism(v) && home.dom(v) == want_dom &&
                           home.cod(v) == want_cod,
                       w + ": endpoints");
            r.instance(home.is_iso(v), w + ": not invertible");
          } catch (const Skip&) {
            ++r.skipped;
          } catch (const UnknownId& e) {
            r.fail(w + ": " + e.what());
          }
        }
    }
  }
  return r;
}

// ---- indexed 1-cells --------------------------------------------------

const FinFunctor& Indexed1Cell::tau(const Id& x) const {
  auto it = components.find(x);
  if (it == components.end()) throw UnknownId("no component at " + x);
  return it->second;
}

const Id& Indexed1Cell::square_at(const Id& f, const Id& a) const {
  auto it = squares.find(f);
  if (it == squares.end()) throw UnknownId("no square at " + f);
  return it->second.at(a);
}

NatTrans make_square(const Indexed1Cell& c, const Id& f,
                     std::map<Id, Id> components) {
  const bool cov = c.source.variance == Variance::covariant;
  const Id& x = c.source.base.dom(f);
  const Id& y = c.source.base.cod(f);
  NatTrans s;
  s.source_fun = compose_functors(c.target.re(c.base_fun.mor(f)),
                                  c.tau(cov ? x : y));
  s.target_fun = compose_functors(c.tau(cov ? y : x), c.source.re(f));
  s.components = std::move(components);
  return s;
}

Indexed1Cell identity_1cell(const IndexedCat& m) {
  Indexed1Cell c;
  c.source = m;
  c.target = m;
  c.base_fun = identity_functor(m.base);
  for (const Id& x : m.base.objects)
    c.components[x] = identity_functor(m.fib(x));
  for (const auto& [f, dc] : m.base.morphisms) {
    (void)dc;
    std::map<Id, Id> comps;
    const FinFunctor& F = m.re(f);
    for (const Id& a : F.source.objects) comps[a] = F.target.id(F.ob(a));
    c.squares[f] = make_square(c, f, std::move(comps));
  }
  return c;
}

LawReport check_indexed_1cell(const Indexed1Cell& c) {
  LawReport r;
  const IndexedCat& M = c.source;
  const IndexedCat& N = c.target;
  r.instance(M.variance == N.variance, "matching variance");
  if (!r.ok()) return r;
  const bool cov = M.variance == Variance::covariant;

  r.instance(c.base_fun.source == M.base && c.base_fun.target == N.base,
             "base functor endpoints");
  r.absorb(check_functor(c.base_fun), "base functor: ");
  if (!r.ok()) return r;

  for (const Id& x : M.base.objects) {
    if (!c.components.count(x)) {
      r.fail("missing component at " + x);
      continue;
    }
    const FinFunctor& t = c.components.at(x);
    r.instance(t.source == M.fib(x) && t.target == N.fib(c.base_fun.ob(x)),
               "component endpoints at " + x);
    r.absorb(check_functor(t), "component " + x + ": ");
  }
  if (!r.ok()) return r;

  for (const auto& [f, dc] : M.base.morphisms) {
    auto it = c.squares.find(f);
    if (it == c.squares.end()) {
      r.fail("missing square at " + f);
      continue;
    }
    const NatTrans& s = it->second;
    const Id& sx = cov ? dc.dom : dc.cod;
    const Id& tx = cov ? dc.cod : dc.dom;
    FinFunctor src =
        compose_functors(N.re(c.base_fun.mor(f)), c.tau(sx));
    FinFunctor tgt = compose_functors(c.tau(tx), M.re(f));
    r.instance(s.source_fun == src && s.target_fun == tgt,
               "square endpoints at " + f);
    r.absorb(check_nat_trans(s), "square " + f + ": ");
    r.instance(nat_invertible(s), "square not invertible at " + f);
  }
  if (!r.ok()) return r;

  // pasting coherence over composites
  for (const auto& [gf, gfc] : M.base.compose) {
    const auto& [g, f] = gf;
    Id Ff = c.base_fun.mor(f), Fg = c.base_fun.mor(g);
    const Id& x = M.base.dom(f);
    const Id& z = M.base.cod(g);
    const FinCat& home = N.fib(c.base_fun.ob(cov ? z : x));
    const std::set<Id>& dom_objs = M.fib(cov ? x : z).objects;
    for (const Id& a : dom_objs) {
      Id path1, path2;
      if (cov) {
        path1 = home.comp(c.square_at(gfc, a),
                          N.delta_at(Fg, Ff, c.tau(x).ob(a)));
        path2 = home.comp(
            c.tau(z).mor(M.delta_at(g, f, a)),
            home.comp(c.square_at(g, M.re(f).ob(a)),
                      N.re(Fg).mor(c.square_at(f, a))));
      } else {
        path1 = home.comp(c.square_at(gfc, a),
                          N.delta_at(Fg, Ff, c.tau(z).ob(a)));
        path2 = home.comp(
            c.tau(x).mor(M.delta_at(g, f, a)),
            home.comp(c.square_at(f, M.re(g).ob(a)),
                      N.re(Ff).mor(c.square_at(g, a))));
      }
      r.instance(path1 == path2,
                 "square pasting at (" + g + ", " + f + ") @ " + a);
    }
  }

  // unit coherence
  for (const Id& x : M.base.objects) {
    const FinCat& home = N.fib(c.base_fun.ob(x));
    for (const Id& a : M.fib(x).objects) {
      Id lhs = home.comp(c.square_at(M.base.id(x), a),
                         N.gamma_at(c.base_fun.ob(x), c.tau(x).ob(a)));
      Id rhs = c.tau(x).mor(M.gamma_at(x, a));
      r.instance(lhs == rhs, "square unit coherence at " + x + " @ " + a);
    }
  }
  return r;
}

// ---- indexed 2-cells --------------------------------------------------

const Id& Indexed2Cell::mod_at(const Id& x, const Id& a) const {
  auto it = modification.find(x);
  if (it == modification.end()) throw UnknownId("no modification at " + x);
  return it->second.at(a);
}

NatTrans make_modification(const Indexed2Cell& c, const Id& x,
                           std::map<Id, Id> components) {
  const IndexedCat& N = c.source.target;
  const bool cov = N.variance == Variance::covariant;
  NatTrans m;
  if (cov) {
    m.source_fun = compose_functors(N.re(c.base_nat.at(x)), c.source.tau(x));
    m.target_fun = c.target.tau(x);
  } else {
    m.source_fun = c.source.tau(x);
    m.target_fun = compose_functors(N.re(c.base_nat.at(x)), c.target.tau(x));
  }
  m.components = std::move(components);
  return m;
}

Indexed2Cell identity_2cell(const Indexed1Cell& c) {
  Indexed2Cell t;
  t.source = c;
  t.target = c;
  t.base_nat = identity_nat(c.base_fun);
  const IndexedCat& N = c.target;
  const bool cov = N.variance == Variance::covariant;
  for (const Id& x : c.source.base.objects) {
    Id fx = c.base_fun.ob(x);
    const FinCat& home = N.fib(fx);
    std::map<Id, Id> comps;
    for (const Id& a : c.source.fib(x).objects) {
      Id g = N.gamma_at(fx, c.tau(x).ob(a));
      comps[a] = cov ? *home.inverse(g) : g;
    }
    t.modification[x] = make_modification(t, x, std::move(comps));
  }
  return t;
}

LawReport check_indexed_2cell(const Indexed2Cell& c) {
  LawReport r;
  const Indexed1Cell& T = c.source;  // τ
  const Indexed1Cell& S = c.target;  // σ
  r.instance(T.source == S.source && T.target == S.target,
             "parallel 1-cells");
  if (!r.ok()) return r;
  const IndexedCat& M = T.source;
  const IndexedCat& N = T.target;
  const bool cov = N.variance == Variance::covariant;

  r.instance(c.base_nat.source_fun == T.base_fun &&
                 c.base_nat.target_fun == S.base_fun,
             "base transformation endpoints");
  r.absorb(check_nat_trans(c.base_nat), "base transformation: ");
  if (!r.ok()) return r;

  for (const Id& x : M.base.objects) {
    auto it = c.modification.find(x);
    if (it == c.modification.end()) {
      r.fail("missing modification component at " + x);
      continue;
    }
    const NatTrans& m = it->second;
    FinFunctor want_src, want_tgt;
    if (cov) {
      want_src = compose_functors(N.re(c.base_nat.at(x)), T.tau(x));
      want_tgt = S.tau(x);
    } else {
      want_src = T.tau(x);
      want_tgt = compose_functors(N.re(c.base_nat.at(x)), S.tau(x));
    }
    r.instance(m.source_fun == want_src && m.target_fun == want_tgt,
               "modification endpoints at " + x);
    r.absorb(check_nat_trans(m), "modification " + x + ": ");
  }
  if (!r.ok()) return r;

  // modification axiom over base morphisms
  for (const auto& [f, dc] : M.base.morphisms) {
    const Id& x = dc.dom;
    const Id& y = dc.cod;
    Id Ff = T.base_fun.mor(f), Gf = S.base_fun.mor(f);
    Id ax = c.base_nat.at(x), ay = c.base_nat.at(y);
    if (cov) {
      const FinCat& home = N.fib(S.base_fun.ob(y));
      for (const Id& a : M.fib(x).objects) {
        Id ta = T.tau(x).ob(a);
        Id route1 = home.comp(c.mod_at(y, M.re(f).ob(a)),
                              N.re(ay).mor(T.square_at(f, a)));
        Id step = home.comp(*home.inverse(N.delta_at(Gf, ax, ta)),
                            N.delta_at(ay, Ff, ta));
        Id route2 = home.comp(S.square_at(f, a),
                              home.comp(N.re(Gf).mor(c.mod_at(x, a)), step));
        r.instance(route1 == route2,
                   "modification axiom at " + f + " @ " + a);
      }
    } else {
      const FinCat& home = N.fib(T.base_fun.ob(x));
      for (const Id& a : M.fib(y).objects) {
        Id sa = S.tau(y).ob(a);
        Id route1 = home.comp(c.mod_at(x, M.re(f).ob(a)), T.square_at(f, a));
        Id step = home.comp(*home.inverse(N.delta_at(Gf, ax, sa)),
                            N.delta_at(ay, Ff, sa));
        Id route2 = home.comp(
            N.re(ax).mor(S.square_at(f, a)),
            home.comp(step, N.re(Ff).mor(c.mod_at(y, a))));
        r.instance(route1 == route2,
                   "modification axiom at " + f + " @ " + a);
      }
    }
  }
  return r;
}

}  // namespace catkit
