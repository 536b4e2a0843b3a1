#include "catkit/fib.hpp"

#include <algorithm>

namespace catkit {

const Id& ClovenFibration::lift(const Id& f, const Id& b) const {
  auto it = cleavage.find({f, b});
  if (it == cleavage.end())
    throw UnknownId("no chosen lift at (" + f + ", " + b + ")");
  return it->second;
}

bool is_cartesian(const ClovenFibration& p, const Id& phi) {
  const FinCat& T = p.total;
  const FinCat& B = p.base;
  const FinFunctor& P = p.proj;
  Id f = P.mor(phi);
  Id x = B.dom(f);
  Id ep = T.dom(phi);
  Id e = T.cod(phi);
  for (const auto& [theta, dc] : T.morphisms) {
    if (dc.cod != e) continue;
    Id ptheta = P.mor(theta);
    for (const Id& g : B.hom(P.ob(dc.dom), x)) {
      if (B.comp(f, g) != ptheta) continue;
      int count = 0;
      for (const Id& psi : T.hom(dc.dom, ep))
        if (P.mor(psi) == g && T.comp(phi, psi) == theta) ++count;
      if (count != 1) return false;
    }
  }
  return true;
}

bool is_cocartesian(const ClovenFibration& p, const Id& phi) {
  const FinCat& T = p.total;
  const FinCat& B = p.base;
  const FinFunctor& P = p.proj;
  Id f = P.mor(phi);
  Id y = B.cod(f);
  Id e = T.dom(phi);
  Id ep = T.cod(phi);
  for (const auto& [theta, dc] : T.morphisms) {
    if (dc.dom != e) continue;
    Id ptheta = P.mor(theta);
    for (const Id& g : B.hom(y, P.ob(dc.cod))) {
      if (B.comp(g, f) != ptheta) continue;
      int count = 0;
      for (const Id& psi : T.hom(ep, dc.cod))
        if (P.mor(psi) == g && T.comp(psi, phi) == theta) ++count;
      if (count != 1) return false;
    }
  }
  return true;
}

LawReport check_fibration(const ClovenFibration& p) {
  LawReport r;
  r.instance(p.proj.source == p.total && p.proj.target == p.base,
             "projection endpoints");
  r.absorb(check_functor(p.proj), "projection: ");
  if (!r.ok()) return r;

  const bool op = p.direction == FibDirection::opfibration;
  std::map<Id, std::vector<Id>> over;
  for (const Id& a : p.total.objects) over[p.proj.ob(a)].push_back(a);

  for (const auto& [f, dc] : p.base.morphisms) {
    const Id& anchor = op ? dc.dom : dc.cod;
    for (const Id& b : over[anchor]) {
      auto it = p.cleavage.find({f, b});
      if (it == p.cleavage.end()) {
        r.fail("missing lift at (" + f + ", " + b + ")");
        continue;
      }
      const Id& c = it->second;
      std::string w = "lift at (" + f + ", " + b + ")";
      if (!p.total.has_morphism(c)) {
        r.fail(w + ": not a total morphism");
        continue;
      }
      r.instance(p.proj.mor(c) == f, w + ": lies over its base morphism");
      r.instance(op ? p.total.dom(c) == b : p.total.cod(c) == b,
                 w + ": anchored at its fibre object");
      r.instance(op ? is_cocartesian(p, c) : is_cartesian(p, c),
                 w + ": not " + (op ? "cocartesian" : "cartesian"));
    }
  }
  if (!r.ok()) return r;

  if (p.split) {
    for (const Id& x : p.base.objects)
      for (const Id& b : over[x])
        r.instance(p.lift(p.base.id(x), b) == p.total.id(b),
                   "split identity lift at (" + x + ", " + b + ")");
    for (const auto& [gf, c] : p.base.compose) {
      const auto& [g, f] = gf;
      if (p.base.is_identity(g) || p.base.is_identity(f)) continue;
      const Id& anchor = op ? p.base.dom(f) : p.base.cod(g);
      for (const Id& b : over[anchor]) {
        Id composite;
        if (op) {
          Id first = p.lift(f, b);
          composite = p.total.comp(p.lift(g, p.total.cod(first)), first);
        } else {
          Id outer = p.lift(g, b);
          composite = p.total.comp(outer, p.lift(f, p.total.dom(outer)));
        }
        r.instance(composite == p.lift(c, b),
                   "split composition at (" + g + ", " + f + ") @ " + b);
      }
    }
  }
  return r;
}

FinCat fibre(const ClovenFibration& p, const Id& x) {
  if (!p.base.has_object(x)) throw UnknownId("no base object " + x);
  FinCat c;
  Id ix = p.base.id(x);
  for (const Id& a : p.total.objects)
    if (p.proj.ob(a) == x) {
      c.objects.insert(a);
      c.identity[a] = p.total.id(a);
    }
  for (const auto& [m, dc] : p.total.morphisms)
    if (p.proj.mor(m) == ix && c.has_object(dc.dom))
      c.morphisms[m] = dc;
  for (const auto& [gf, h] : p.total.compose)
    if (c.has_morphism(gf.first) && c.has_morphism(gf.second))
      c.compose[gf] = h;
  return c;
}

std::optional<Id> vertical_factor(const ClovenFibration& p, const Id& lift,
                                  const Id& theta) {
  const FinCat& T = p.total;
  const bool op = p.direction == FibDirection::opfibration;
  Id from = op ? T.cod(lift) : T.dom(theta);
  Id to = op ? T.cod(theta) : T.dom(lift);
  Id over = p.base.id(p.proj.ob(from));
  std::optional<Id> found;
  for (const Id& psi : T.hom(from, to)) {
    if (p.proj.mor(psi) != over) continue;
    Id composite = op ? T.comp(psi, lift) : T.comp(lift, psi);
    if (composite != theta) continue;
    if (found) return std::nullopt;  // not unique
    found = psi;
  }
  return found;
}

FinFunctor reindex(const ClovenFibration& p, const Id& f) {
  const bool op = p.direction == FibDirection::opfibration;
  const Id& x = p.base.dom(f);
  const Id& y = p.base.cod(f);
  FinFunctor F;
  F.source = fibre(p, op ? x : y);
  F.target = fibre(p, op ? y : x);
  for (const Id& b : F.source.objects) {
    const Id& c = p.lift(f, b);
    F.obj_map[b] = op ? p.total.cod(c) : p.total.dom(c);
  }
  for (const auto& [k, dc] : F.source.morphisms) {
    Id theta = op ? p.total.comp(p.lift(f, dc.cod), k)
                  : p.total.comp(k, p.lift(f, dc.dom));
    auto psi = vertical_factor(p, op ? p.lift(f, dc.dom) : p.lift(f, dc.cod),
                               theta);
    if (!psi)
      throw MalformedTable("no unique factorization reindexing " + k +
                           " along " + f);
    F.mor_map[k] = *psi;
  }
  return F;
}

ClovenFibration make_cloven(const FinFunctor& proj, FibDirection direction) {
  ClovenFibration p;
  p.total = proj.source;
  p.base = proj.target;
  p.proj = proj;
  p.direction = direction;
  const bool op = direction == FibDirection::opfibration;
  std::map<Id, std::vector<Id>> over;
  for (const Id& a : p.total.objects) over[proj.ob(a)].push_back(a);
  for (const auto& [f, dc] : p.base.morphisms) {
    const Id& anchor = op ? dc.dom : dc.cod;
    for (const Id& b : over[anchor]) {
      std::optional<Id> best;
      for (const auto& [m, mdc] : p.total.morphisms) {
        if ((op ? mdc.dom : mdc.cod) != b || proj.mor(m) != f) continue;
        if (best && *best <= m) continue;
        if (op ? is_cocartesian(p, m) : is_cartesian(p, m)) best = m;
      }
      if (best) p.cleavage[{f, b}] = *best;
    }
  }
  return p;
}

LawReport check_fibred_1cell(const Fibred1Cell& c) {
  LawReport r;
  r.instance(c.source.direction == c.target.direction, "matching direction");
  r.instance(c.top.source == c.source.total && c.top.target == c.target.total,
             "top endpoints");
  r.instance(c.bottom.source == c.source.base &&
                 c.bottom.target == c.target.base,
             "bottom endpoints");
  if (!r.ok()) return r;
  r.absorb(check_functor(c.top), "top: ");
  r.absorb(check_functor(c.bottom), "bottom: ");
  if (!r.ok()) return r;

  r.instance(compose_functors(c.target.proj, c.top) ==
                 compose_functors(c.bottom, c.source.proj),
             "projection square commutes");

  const bool op = c.source.direction == FibDirection::opfibration;
  for (const auto& [phi, dc] : c.source.total.morphisms) {
    (void)dc;
    bool src_cart =
        op ? is_cocartesian(c.source, phi) : is_cartesian(c.source, phi);
    if (!src_cart) continue;
    r.instance(op ? is_cocartesian(c.target, c.top.mor(phi))
                  : is_cartesian(c.target, c.top.mor(phi)),
               "lift preservation at " + phi);
  }
  return r;
}

LawReport check_fibred_2cell(const NatTrans& beta, const NatTrans& alpha,
                             const ClovenFibration& src,
                             const ClovenFibration& tgt) {
  LawReport r;
  r.instance(beta.source_fun.source == src.total &&
                 beta.source_fun.target == tgt.total,
             "top transformation endpoints");
  r.instance(alpha.source_fun.source == src.base &&
                 alpha.source_fun.target == tgt.base,
             "bottom transformation endpoints");
  if (!r.ok()) return r;
  r.absorb(check_nat_trans(beta), "top: ");
  r.absorb(check_nat_trans(alpha), "bottom: ");
  if (!r.ok()) return r;
  for (const Id& a : src.total.objects)
    r.instance(tgt.proj.mor(beta.at(a)) == alpha.at(src.proj.ob(a)),
               "component over wrong base morphism at " + a);
  return r;
}

LawReport check_monoidal_fibration(const MonoidalFibrationData& m) {
  LawReport r;
  r.absorb(check_fibration(m.carrier), "carrier: ");
  r.absorb(check_monoidal(m.total_monoidal), "total monoidal: ");
  r.absorb(check_monoidal(m.base_monoidal), "base monoidal: ");
  if (!r.ok()) return r;
  const ClovenFibration& p = m.carrier;
  const MonoidalData& T = m.total_monoidal;
  const MonoidalData& B = m.base_monoidal;
  r.instance(T.base == p.total && B.base == p.base,
             "monoidal structures sit on the carrier");
  if (!r.ok()) return r;

  std::map<Id, std::vector<Id>> over;
  for (const Id& a : p.total.objects) over[p.proj.ob(a)].push_back(a);

  // the projection is strict monoidal: totality over base entries plus
  // table equality through P
  r.instance(p.proj.ob(T.unit) == B.unit, "unit projects to unit");
  for (const auto& [xy, z] : B.tensor_obj)
    for (const Id& a : over[xy.first])
      for (const Id& b : over[xy.second]) {
        const Id* t = T.tob(a, b);
        if (!t) {
          r.fail("total tensor undefined over (" + xy.first + ", " +
                 xy.second + ") at (" + a + ", " + b + ")");
          continue;
        }
        r.instance(p.proj.ob(*t) == z,
                   "strictness on objects at (" + a + ", " + b + ")");
      }
  for (const auto& [ab, t] : T.tensor_obj) {
    const Id* z = B.tob(p.proj.ob(ab.first), p.proj.ob(ab.second));
    r.instance(z && p.proj.ob(t) == *z,
               "total tensor projects into the base tensor at (" + ab.first +
                   ", " + ab.second + ")");
  }
  std::map<Id, std::vector<Id>> mor_over;
  for (const auto& [k, dc] : p.total.morphisms) {
    (void)dc;
    mor_over[p.proj.mor(k)].push_back(k);
  }
  for (const auto& [fg, h] : B.tensor_mor)
    for (const Id& k : mor_over[fg.first])
      for (const Id& l : mor_over[fg.second]) {
        const Id* t = T.tmor(k, l);
        if (!t) {
          r.fail("total tensor undefined over (" + fg.first + ", " +
                 fg.second + ") at (" + k + ", " + l + ")");
          continue;
        }
        r.instance(p.proj.mor(*t) == h,
                   "strictness on morphisms at (" + k + ", " + l + ")");
      }
  for (const auto& [abc, al] : T.associator) {
    const auto& [a, b, c] = abc;
    const Id* bal = B.alpha(p.proj.ob(a), p.proj.ob(b), p.proj.ob(c));
    r.instance(bal && p.proj.mor(al) == *bal,
               "associator strictness at (" + a + ", " + b + ", " + c + ")");
  }
  for (const auto& [a, u] : T.left_unitor)
    r.instance(B.left_unitor.count(p.proj.ob(a)) &&
                   p.proj.mor(u) == B.left_unitor.at(p.proj.ob(a)),
               "left unitor strictness at " + a);
  for (const auto& [a, u] : T.right_unitor)
    r.instance(B.right_unitor.count(p.proj.ob(a)) &&
                   p.proj.mor(u) == B.right_unitor.at(p.proj.ob(a)),
               "right unitor strictness at " + a);
  if (T.braiding && B.braiding)
    for (const auto& [ab, v] : *T.braiding) {
      const Id* bb = B.braid(p.proj.ob(ab.first), p.proj.ob(ab.second));
      r.instance(bb && p.proj.mor(v) == *bb,
                 "braiding strictness at (" + ab.first + ", " + ab.second +
                     ")");
    }
  if (!r.ok()) return r;

  // tensors of chosen lifts stay (co)cartesian, and the induced comparison
  // f*x ⊗ g*y -> (f⊗g)*(x⊗y) is invertible
  const bool op = p.direction == FibDirection::opfibration;
  for (const auto& [fg, h] : B.tensor_mor) {
    const auto& [f, g] = fg;
    if (p.base.is_identity(f) && p.base.is_identity(g)) continue;
    const Id& fa = op ? p.base.dom(f) : p.base.cod(f);
    const Id& ga = op ? p.base.dom(g) : p.base.cod(g);
    for (const Id& a : over[fa])
      for (const Id& b : over[ga]) {
        const Id* t = T.tmor(p.lift(f, a), p.lift(g, b));
        if (!t) {
          ++r.skipped;
          continue;
        }
        std::string w = "tensor of lifts at ((" + f + ", " + a + "), (" + g +
                        ", " + b + "))";
        bool cart = op ? is_cocartesian(p, *t) : is_cartesian(p, *t);
        r.instance(cart, w + ": not a lift");
        if (!cart) continue;
        const Id* tob = T.tob(a, b);
        if (!tob) {
          ++r.skipped;
          continue;
        }
        auto psi = vertical_factor(p, p.lift(h, *tob), *t);
        r.instance(psi.has_value() && p.total.is_iso(*psi),
                   w + ": comparison with the chosen lift not invertible");
      }
  }
  return r;
}

}  // namespace catkit
