#pragma once

// Indexed-category fixtures shared across suites.

#include <map>

#include "catkit/indexed.hpp"
#include "cats.hpp"

namespace testcats {

using catkit::FinFunctor;
using catkit::IndexedCat;
using catkit::Variance;

// every fibre the same category, every reindexer the identity
inline IndexedCat constant_indexed(const FinCat& base, const FinCat& fib,
                                   Variance v) {
  IndexedCat m;
  m.base = base;
  m.variance = v;
  for (const Id& x : base.objects) m.fibre[x] = fib;
  for (const auto& [f, dc] : base.morphisms) {
    (void)dc;
    m.reindex[f] = catkit::identity_functor(fib);
  }
  catkit::finish_strict(m);
  return m;
}

// contravariant over a poset: fibre at x is the discrete category on the
// up-set of x, reindexing along x <= y is the inclusion of up-sets
inline IndexedCat upset_indexed(const FinCat& base) {
  IndexedCat m;
  m.base = base;
  m.variance = Variance::contravariant;
  auto upset = [&](const Id& x) {
    std::vector<Id> up;
    for (const Id& z : base.objects)
      if (!base.hom(x, z).empty()) up.push_back(z);
    return discrete_cat(up);
  };
  for (const Id& x : base.objects) m.fibre[x] = upset(x);
  for (const auto& [f, dc] : base.morphisms) {
    FinFunctor F;
    F.source = m.fibre.at(dc.cod);
    F.target = m.fibre.at(dc.dom);
    for (const Id& z : F.source.objects) {
      F.obj_map[z] = z;
      F.mor_map[F.source.id(z)] = F.target.id(z);
    }
    m.reindex[f] = F;
  }
  catkit::finish_strict(m);
  return m;
}

// covariant: fibre at x is the discrete category on hom(c0, x), reindexing
// along f is post-composition
inline IndexedCat homdisc_indexed(const FinCat& base, const Id& c0) {
  IndexedCat m;
  m.base = base;
  m.variance = Variance::covariant;
  for (const Id& x : base.objects) m.fibre[x] = discrete_cat(base.hom(c0, x));
  for (const auto& [f, dc] : base.morphisms) {
    FinFunctor F;
    F.source = m.fibre.at(dc.dom);
    F.target = m.fibre.at(dc.cod);
    for (const Id& h : F.source.objects) {
      Id fh = base.comp(f, h);
      F.obj_map[h] = fh;
      F.mor_map[F.source.id(h)] = F.target.id(fh);
    }
    m.reindex[f] = F;
  }
  catkit::finish_strict(m);
  return m;
}

// genuinely pseudo: constant Z/2 fibres with the compositor twisted by a
// sign function on base morphisms (a coboundary, so coherence still holds)
inline IndexedCat z2_twisted(const FinCat& base,
                             const std::map<Id, Id>& signs) {
  IndexedCat m = constant_indexed(base, z2_cat(), Variance::covariant);
  m.strict = false;
  auto sign = [&](const Id& f) {
    auto it = signs.find(f);
    return it == signs.end() ? Id("e") : it->second;
  };
  const FinCat z = z2_cat();
  m.compositor.clear();
  for (const auto& [gf, c] : m.base.compose) {
    Id comp = z.comp(sign(gf.first),
                     z.comp(sign(gf.second), *z.inverse(sign(c))));
    m.compositor[gf] =
        catkit::make_delta(m, gf.first, gf.second, {{"*", comp}});
  }
  m.unitor.clear();
  for (const Id& x : m.base.objects)
    m.unitor[x] = catkit::make_gamma(m, x, {{"*", *z.inverse(sign(m.base.id(x)))}});
  return m;
}

inline IndexedCat z2_twisted_chain() {
  return z2_twisted(chain3(), {{"le:0<1", "s"}});
}

// join-semilattice monoidal structure on the walking arrow
inline catkit::MonoidalData join_monoidal() {
  return catkit::find_cocartesian(walking_arrow()).value().monoidal;
}

// constant one-object fibres over a monoidal base, laxator = composition in
// the fibre, every structure cell the fibre identity.  Requires the single
// fibre object to be named "*".
inline catkit::LaxMonoidalIndexed one_object_lax(
    const catkit::MonoidalData& bm, const FinCat& g) {
  catkit::LaxMonoidalIndexed l;
  l.base_monoidal = bm;
  l.carrier = constant_indexed(bm.base, g, Variance::covariant);
  catkit::PairMap mult;
  mult.obj[{"*", "*"}] = "*";
  for (const auto& [k, kd] : g.morphisms)
    for (const auto& [h, hd] : g.morphisms) {
      (void)kd;
      (void)hd;
      mult.mor[{k, h}] = g.comp(k, h);
    }
  const Id e = g.id("*");
  for (const auto& [xy, z] : bm.tensor_obj) {
    (void)z;
    l.laxator[xy] = mult;
  }
  for (const auto& [fg, t] : bm.tensor_mor) {
    (void)t;
    l.laxator_cells[fg] = {{{"*", "*"}, e}};
  }
  l.unit_object = "*";
  for (const auto& [xyz, a] : bm.associator) {
    (void)a;
    l.omega[xyz] = {{{"*", "*", "*"}, e}};
  }
  for (const auto& [x, u] : bm.right_unitor) {
    (void)u;
    l.zeta[x] = {{"*", e}};
  }
  for (const auto& [x, u] : bm.left_unitor) {
    (void)u;
    l.xi[x] = {{"*", e}};
  }
  if (bm.braiding) {
    l.braid_cell.emplace();
    for (const auto& [xy, b] : *bm.braiding) {
      (void)b;
      (*l.braid_cell)[xy] = {{{"*", "*"}, e}};
    }
  }
  return l;
}

inline catkit::LaxMonoidalIndexed z2_over_join() {
  return one_object_lax(join_monoidal(), z2_cat());
}

}  // namespace testcats
