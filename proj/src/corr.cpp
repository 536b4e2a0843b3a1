#include "catkit/corr.hpp"

#include <set>

namespace catkit {

const MonoidalData& FibrewiseMonoidal::at_fibre(const Id& x) const {
  auto it = per_fibre.find(x);
  if (it == per_fibre.end()) throw UnknownId("no fibre structure at " + x);
  return it->second;
}

const MonoidalFunctorData& FibrewiseMonoidal::re_monoidal(const Id& f) const {
  auto it = reindex_monoidal.find(f);
  if (it == reindex_monoidal.end())
    throw UnknownId("no monoidal structure on the reindexer along " + f);
  return it->second;
}

namespace {

Id inv_in(const FinCat& c, const Id& m) {
  auto i = c.inverse(m);
  if (!i) throw MalformedTable("component not invertible: " + m);
  return *i;
}

void base_law(const Id& got, const Id& want, const std::string& what) {
  if (got != want)
    throw MalformedTable("cocartesian base law failed (" + what + "): " +
                         got + " != " + want);
}

}  // namespace

LawReport check_fibrewise_monoidal(const FibrewiseMonoidal& f) {
  LawReport r;
  r.absorb(check_pseudofunctor(f.carrier), "carrier: ");
  if (!r.ok()) return r;
  // per_fibre may be partial over a truncated universe (no x+x in bound)
  for (const Id& x : f.carrier.base.objects)
    if (!f.per_fibre.count(x)) ++r.skipped;
  for (const auto& [x, m] : f.per_fibre) {
    r.instance(m.base == f.carrier.fib(x),
               "fibre structure at " + x + " lives on the fibre");
    r.absorb(check_monoidal(m), "fibre " + x + ": ");
  }
  for (const auto& [g, dc] : f.carrier.base.morphisms) {
    if (!f.per_fibre.count(dc.dom) || !f.per_fibre.count(dc.cod)) {
      ++r.skipped;
      continue;
    }
    r.instance(f.reindex_monoidal.count(g) != 0,
               "monoidal structure present for the reindexer along " + g);
  }
  for (const auto& [g, mf] : f.reindex_monoidal) {
    r.instance(mf.underlying == f.carrier.re(g),
               "monoidal structure at " + g + " carried by the reindexer");
    r.instance(mf.strength != Strength::lax, "strong reindexer along " + g);
    auto sx = f.per_fibre.find(f.carrier.base.dom(g));
    auto sy = f.per_fibre.find(f.carrier.base.cod(g));
    if (sx == f.per_fibre.end() || sy == f.per_fibre.end()) {
      ++r.skipped;
      continue;
    }
    r.absorb(check_monoidal_functor(mf, sx->second, sy->second),
             "reindexer " + g + ": ");
  }
  return r;
}

FibrewiseMonoidal global_to_fibrewise(const LaxMonoidalIndexed& l,
                                      const CocartesianWitness& w) {
  if (l.carrier.variance != Variance::covariant)
    throw ShapeMismatch("fibrewise transfer needs a covariant carrier");
  const MonoidalData& B = l.base_monoidal;
  if (w.monoidal.tensor_obj != B.tensor_obj ||
      w.monoidal.tensor_mor != B.tensor_mor || w.monoidal.unit != B.unit)
    throw BaseNotCocartesian(
        "witness tensor disagrees with the base monoidal data");
  const IndexedCat& M = l.carrier;
  FibrewiseMonoidal out;
  out.carrier = M;

  for (const Id& x : M.base.objects) {
    const Id* x2p = B.tob(x, x);
    if (!x2p || !l.laxator.count({x, x})) continue;
    const Id& x2 = *x2p;
    const Id one_x = M.base.id(x);
    const FinCat& Fx = M.fib(x);
    const FinCat& Fx2 = M.fib(x2);
    const Id& nab = w.nabla(x);
    const Id& ux = w.bang_to(x);
    const PairMap& mxx = l.mu(x, x);
    const FinFunctor& Mn = M.re(nab);
    auto ginv = [&](const Id& a) { return inv_in(Fx, M.gamma_at(x, a)); };

    MonoidalData t;
    t.base = Fx;
    for (const Id& a : Fx.objects)
      for (const Id& b : Fx.objects)
        t.tensor_obj[{a, b}] = Mn.ob(mxx.ob(a, b));
    for (const auto& [k, kd] : Fx.morphisms)
      for (const auto& [h, hd] : Fx.morphisms) {
        (void)kd;
        (void)hd;
        t.tensor_mor[{k, h}] = Mn.mor(mxx.mr(k, h));
      }
    t.unit = M.re(ux).ob(l.unit_object);

    const Id* nl1 = B.tmor(nab, one_x);  // ∇+1 : (x+x)+x -> x+x
    const Id* n1r = B.tmor(one_x, nab);  // 1+∇ : x+(x+x) -> x+x
    const Id* alf = B.alpha(x, x, x);
    if (nl1 && n1r && alf && B.tob(x2, x) && B.tob(x, x2) &&
        l.omega.count({x, x, x})) {
      const Id nabL = M.base.comp(nab, *nl1);
      const Id nabR = M.base.comp(nab, *n1r);
      base_law(M.base.comp(nabR, *alf), nabL, "coassociative fold at " + x);
      const PairMap& mLx = l.mu(x2, x);
      const PairMap& mxR = l.mu(x, x2);
      const auto& om = l.omega.at({x, x, x});
      const FinFunctor& MnR = M.re(nabR);
      for (const Id& a : Fx.objects)
        for (const Id& b : Fx.objects)
          for (const Id& c : Fx.objects) {
            Id p = mxx.ob(a, b), q = mLx.ob(p, c);
            Id pp = mxx.ob(b, c), qq = mxR.ob(a, pp);
            Id c1 = l.mu_cell(nab, one_x, p, c);
            Id t1 = mxx.mr(Fx.id(Mn.ob(p)), ginv(c));
            Id lhs = Fx.comp(Mn.mor(Fx2.comp(t1, c1)),
                             inv_in(Fx, M.delta_at(nab, *nl1, q)));
            Id c2 = l.mu_cell(one_x, nab, a, pp);
            Id t2 = mxx.mr(ginv(a), Fx.id(Mn.ob(pp)));
            Id rhs = Fx.comp(Mn.mor(Fx2.comp(t2, c2)),
                             inv_in(Fx, M.delta_at(nab, *n1r, qq)));
            Id bridge = Fx.comp(MnR.mor(om.at({a, b, c})),
                                inv_in(Fx, M.delta_at(nabR, *alf, q)));
            t.associator[{a, b, c}] =
                Fx.comp(rhs, Fx.comp(bridge, inv_in(Fx, lhs)));
          }
    }
    // when x+x+x falls outside a truncated universe the ω route above is
    // unavailable; a singleton hom-set still forces the component
    for (const Id& a : Fx.objects)
      for (const Id& b : Fx.objects)
        for (const Id& c : Fx.objects) {
          if (t.associator.count({a, b, c})) continue;
          const Id& L = t.tensor_obj.at({t.tensor_obj.at({a, b}), c});
          const Id& R = t.tensor_obj.at({a, t.tensor_obj.at({b, c})});
          std::vector<Id> hs = Fx.hom(L, R);
          if (hs.size() == 1 && Fx.is_iso(hs[0]))
            t.associator[{a, b, c}] = hs[0];
        }

    const Id* iu = B.tmor(one_x, ux);  // 1+! : x+0 -> x+x
    if (iu && B.right_unitor.count(x) && l.zeta.count(x) &&
        B.tob(x, B.unit)) {
      base_law(M.base.comp(nab, *iu), B.right_unitor.at(x),
               "fold right unit at " + x);
      const PairMap& mx0 = l.mu(x, B.unit);
      for (const Id& a : Fx.objects) {
        Id q0 = mx0.ob(a, l.unit_object);
        Id c3 = l.mu_cell(one_x, ux, a, l.unit_object);
        Id t3 = mxx.mr(ginv(a), Fx.id(t.unit));
        Id u3 = Mn.mor(Fx2.comp(t3, c3));
        t.right_unitor[a] =
            Fx.comp(l.zeta.at(x).at(a),
                    Fx.comp(M.delta_at(nab, *iu, q0), inv_in(Fx, u3)));
      }
    }
    const Id* ui = B.tmor(ux, one_x);  // !+1 : 0+x -> x+x
    if (ui && B.left_unitor.count(x) && l.xi.count(x) && B.tob(B.unit, x)) {
      base_law(M.base.comp(nab, *ui), B.left_unitor.at(x),
               "fold left unit at " + x);
      const PairMap& m0x = l.mu(B.unit, x);
      for (const Id& a : Fx.objects) {
        Id q0 = m0x.ob(l.unit_object, a);
        Id c4 = l.mu_cell(ux, one_x, l.unit_object, a);
        Id t4 = mxx.mr(Fx.id(t.unit), ginv(a));
        Id u4 = Mn.mor(Fx2.comp(t4, c4));
        t.left_unitor[a] =
            Fx.comp(l.xi.at(x).at(a),
                    Fx.comp(M.delta_at(nab, *ui, q0), inv_in(Fx, u4)));
      }
    }

    if (l.braid_cell && B.braid(x, x) && l.braid_cell->count({x, x})) {
      const Id& bb = *B.braid(x, x);
      base_law(M.base.comp(nab, bb), nab, "cocommutative fold at " + x);
      const auto& vx = l.braid_cell->at({x, x});
      t.braiding.emplace();
      for (const Id& a : Fx.objects)
        for (const Id& b : Fx.objects)
          (*t.braiding)[{a, b}] =
              Fx.comp(Mn.mor(vx.at({a, b})),
                      inv_in(Fx, M.delta_at(nab, bb, mxx.ob(a, b))));
      t.symmetric = B.symmetric;
    }
    out.per_fibre[x] = std::move(t);
  }

  for (const auto& [f, dc] : M.base.morphisms) {
    const Id& x = dc.dom;
    const Id& y = dc.cod;
    MonoidalFunctorData mf;
    mf.underlying = M.re(f);
    const FinCat& Fy = M.fib(y);
    const Id* ff = B.tmor(f, f);
    if (ff && B.tob(x, x) && B.tob(y, y) && l.laxator.count({x, x}) &&
        l.laxator_cells.count({f, f})) {
      const Id& nx = w.nabla(x);
      const Id& ny = w.nabla(y);
      base_law(M.base.comp(ny, *ff), M.base.comp(f, nx),
               "fold natural along " + f);
      for (const Id& a : M.fib(x).objects)
        for (const Id& b : M.fib(x).objects) {
          Id m_ = l.mu(x, x).ob(a, b);
          Id s1 = M.re(ny).mor(l.mu_cell(f, f, a, b));
          Id s2 = M.delta_at(ny, *ff, m_);
          Id s3 = M.delta_at(f, nx, m_);
          mf.laxator[{a, b}] = Fy.comp(
              inv_in(Fy, s3), Fy.comp(s2, inv_in(Fy, s1)));
        }
    }
    base_law(M.base.comp(f, w.bang_to(x)), w.bang_to(y),
             "bang natural along " + f);
    mf.unit_mor = inv_in(Fy, M.delta_at(f, w.bang_to(x), l.unit_object));
    bool ident = Fy.is_identity(mf.unit_mor);
    for (const auto& [ab, s] : mf.laxator) {
      (void)ab;
      if (!Fy.is_identity(s)) ident = false;
    }
    mf.strength = ident ? Strength::strict_ : Strength::strong;
    out.reindex_monoidal[f] = std::move(mf);
  }
  return out;
}

LaxMonoidalIndexed fibrewise_to_global(const FibrewiseMonoidal& fw,
                                       const CocartesianWitness& w) {
  if (fw.carrier.variance != Variance::covariant)
    throw ShapeMismatch("fibrewise transfer needs a covariant carrier");
  const IndexedCat& M = fw.carrier;
  LaxMonoidalIndexed l;
  l.carrier = M;
  l.base_monoidal = w.monoidal;
  l.unit_object = fw.at_fibre(w.initial).unit;

  for (const auto& [xy, s] : w.monoidal.tensor_obj) {
    const auto& [x, y] = xy;
    if (!fw.per_fibre.count(s)) continue;  // out-of-universe fibre tensor
    const auto& [i1, i2] = w.inj(x, y);
    const MonoidalData& Ts = fw.at_fibre(s);
    const FinFunctor& F1 = M.re(i1);
    const FinFunctor& F2 = M.re(i2);
    PairMap mu;
    for (const Id& a : M.fib(x).objects)
      for (const Id& b : M.fib(y).objects)
        mu.obj[{a, b}] = Ts.tensor_of(F1.ob(a), F2.ob(b));
    for (const auto& [k, kd] : M.fib(x).morphisms)
      for (const auto& [h, hd] : M.fib(y).morphisms) {
        (void)kd;
        (void)hd;
        mu.mor[{k, h}] = Ts.tensor_of_mor(F1.mor(k), F2.mor(h));
      }
    l.laxator[xy] = std::move(mu);
  }

  for (const auto& [fg, tfg] : w.monoidal.tensor_mor) {
    const auto& [f, g] = fg;
    const Id& x = M.base.dom(f);
    const Id& y = M.base.dom(g);
    const Id& z = M.base.cod(f);
    const Id& v = M.base.cod(g);
    if (!w.monoidal.tob(x, y) || !w.monoidal.tob(z, v)) continue;
    const Id& sp = *w.monoidal.tob(z, v);
    if (!fw.per_fibre.count(*w.monoidal.tob(x, y)) ||
        !fw.per_fibre.count(sp))
      continue;
    const auto& [i1, i2] = w.inj(x, y);
    const auto& [j1, j2] = w.inj(z, v);
    base_law(M.base.comp(tfg, i1), M.base.comp(j1, f),
             "injection natural along " + f);
    base_law(M.base.comp(tfg, i2), M.base.comp(j2, g),
             "injection natural along " + g);
    const MonoidalData& Tp = fw.at_fibre(sp);
    const FinCat& Fp = M.fib(sp);
    const MonoidalFunctorData& phi = fw.re_monoidal(tfg);
    std::map<IdPair, Id> cells;
    for (const Id& a : M.fib(x).objects)
      for (const Id& b : M.fib(y).objects) {
        Id A = M.re(i1).ob(a), B2 = M.re(i2).ob(b);
        Id e1 = Fp.comp(inv_in(Fp, M.delta_at(j1, f, a)),
                        M.delta_at(tfg, i1, a));
        Id e2 = Fp.comp(inv_in(Fp, M.delta_at(j2, g, b)),
                        M.delta_at(tfg, i2, b));
        cells[{a, b}] = Fp.comp(Tp.tensor_of_mor(e1, e2),
                                inv_in(Fp, phi.laxator.at({A, B2})));
      }
    l.laxator_cells[fg] = std::move(cells);
  }

  for (const auto& [xyz, alf] : w.monoidal.associator) {
    const auto& [x, y, z] = xyz;
    const Id* sxy = w.monoidal.tob(x, y);
    const Id* syz = w.monoidal.tob(y, z);
    if (!sxy || !syz) continue;
    const Id* Lp = w.monoidal.tob(*sxy, z);
    const Id* Rp = w.monoidal.tob(x, *syz);
    if (!Lp || !Rp) continue;
    if (!fw.per_fibre.count(*sxy) || !fw.per_fibre.count(*syz) ||
        !fw.per_fibre.count(*Lp) || !fw.per_fibre.count(*Rp))
      continue;
    const auto& [ixy, iz] = w.inj(*sxy, z);
    const auto& [ix, iy] = w.inj(x, y);
    const auto& [ixr, iyz] = w.inj(x, *syz);
    const auto& [iyr, izr] = w.inj(y, z);
    Id i1L = M.base.comp(ixy, ix), i2L = M.base.comp(ixy, iy);
    Id i2R = M.base.comp(iyz, iyr), i3R = M.base.comp(iyz, izr);
    base_law(M.base.comp(alf, i1L), ixr, "associated injection 1");
    base_law(M.base.comp(alf, i2L), i2R, "associated injection 2");
    base_law(M.base.comp(alf, iz), i3R, "associated injection 3");
    const MonoidalData& TL = fw.at_fibre(*Lp);
    const MonoidalData& TR = fw.at_fibre(*Rp);
    const FinCat& FL = M.fib(*Lp);
    const FinCat& FR = M.fib(*Rp);
    const MonoidalFunctorData& pxy = fw.re_monoidal(ixy);
    const MonoidalFunctorData& pal = fw.re_monoidal(alf);
    const MonoidalFunctorData& pyz = fw.re_monoidal(iyz);
    const FinFunctor& Mal = M.re(alf);
    std::map<IdTriple, Id> omega;
    for (const Id& a : M.fib(x).objects)
      for (const Id& b : M.fib(y).objects)
        for (const Id& c : M.fib(z).objects) {
          Id A = M.re(ix).ob(a), B2 = M.re(iy).ob(b);
          Id Pxy = fw.at_fibre(*sxy).tensor_of(A, B2);  // μ_{x,y}(a,b)
          Id Cz = M.re(iz).ob(c);
          // unfold inside M(L): M(ixy)(Pxy) ⊗ M(iz)c -> (ι1L a ⊗ ι2L b) ⊗ ι3L c
          Id legA = FL.comp(
              TL.tensor_of_mor(M.delta_at(ixy, ix, a),
                               M.delta_at(ixy, iy, b)),
              inv_in(FL, pxy.laxator.at({A, B2})));
          Id SQ = TL.tensor_of_mor(legA, FL.id(Cz));
          // transport along α into M(R)
          Id a1L = M.re(i1L).ob(a), b2L = M.re(i2L).ob(b);
          Id step1 = inv_in(
              FR, pal.laxator.at({TL.tensor_of(a1L, b2L), Cz}));
          Id step2 = TR.tensor_of_mor(
              inv_in(FR, pal.laxator.at({a1L, b2L})),
              FR.id(Mal.ob(Cz)));
          Id step3 = TR.tensor_of_mor(
              TR.tensor_of_mor(M.delta_at(alf, i1L, a),
                               M.delta_at(alf, i2L, b)),
              M.delta_at(alf, iz, c));
          Id aR = M.re(ixr).ob(a);
          Id bR = M.re(i2R).ob(b);
          Id cR = M.re(i3R).ob(c);
          Id assoc = TR.associator.at({aR, bR, cR});
          // fold into μ_{x,y+z}(a, μ_{y,z}(b,c))
          Id bY = M.re(iyr).ob(b), cY = M.re(izr).ob(c);
          Id fold = TR.tensor_of_mor(
              FR.id(aR),
              FR.comp(pyz.laxator.at({bY, cY}),
                      TR.tensor_of_mor(inv_in(FR, M.delta_at(iyz, iyr, b)),
                                       inv_in(FR, M.delta_at(iyz, izr, c)))));
          omega[{a, b, c}] = FR.comp(
              fold,
              FR.comp(assoc,
                      FR.comp(step3,
                              FR.comp(step2,
                                      FR.comp(step1, Mal.mor(SQ))))));
        }
    l.omega[xyz] = std::move(omega);
  }

  for (const auto& [x, ru] : w.monoidal.right_unitor) {
    if (!w.monoidal.tob(x, w.initial) || !fw.per_fibre.count(x)) continue;
    const auto& [i1, i2] = w.inj(x, w.initial);
    base_law(M.base.comp(ru, i1), M.base.id(x), "right unitor retracts");
    base_law(M.base.comp(ru, i2), w.bang_to(x), "right unitor over bang");
    const MonoidalData& Tx = fw.at_fibre(x);
    const FinCat& Fx = M.fib(x);
    const MonoidalFunctorData& pr = fw.re_monoidal(ru);
    std::map<Id, Id> zx;
    for (const Id& a : Fx.objects) {
      Id leg1 = Fx.comp(inv_in(Fx, M.gamma_at(x, a)), M.delta_at(ru, i1, a));
      Id leg2 = Fx.comp(inv_in(Fx, fw.re_monoidal(w.bang_to(x)).unit_mor),
                        M.delta_at(ru, i2, l.unit_object));
      Id Ai = M.re(i1).ob(a), Ui = M.re(i2).ob(l.unit_object);
      zx[a] = Fx.comp(Tx.right_unitor.at(a),
                      Fx.comp(Tx.tensor_of_mor(leg1, leg2),
                              inv_in(Fx, pr.laxator.at({Ai, Ui}))));
    }
    l.zeta[x] = std::move(zx);
  }
  for (const auto& [x, lu] : w.monoidal.left_unitor) {
    if (!w.monoidal.tob(w.initial, x) || !fw.per_fibre.count(x)) continue;
    const auto& [i1, i2] = w.inj(w.initial, x);
    base_law(M.base.comp(lu, i2), M.base.id(x), "left unitor retracts");
    base_law(M.base.comp(lu, i1), w.bang_to(x), "left unitor over bang");
    const MonoidalData& Tx = fw.at_fibre(x);
    const FinCat& Fx = M.fib(x);
    const MonoidalFunctorData& pl = fw.re_monoidal(lu);
    std::map<Id, Id> xx;
    for (const Id& a : Fx.objects) {
      Id legU = Fx.comp(inv_in(Fx, fw.re_monoidal(w.bang_to(x)).unit_mor),
                        M.delta_at(lu, i1, l.unit_object));
      Id legA = Fx.comp(inv_in(Fx, M.gamma_at(x, a)), M.delta_at(lu, i2, a));
      Id Ui = M.re(i1).ob(l.unit_object), Ai = M.re(i2).ob(a);
      xx[a] = Fx.comp(Tx.left_unitor.at(a),
                      Fx.comp(Tx.tensor_of_mor(legU, legA),
                              inv_in(Fx, pl.laxator.at({Ui, Ai}))));
    }
    l.xi[x] = std::move(xx);
  }

  bool fibres_braided = true;
  for (const auto& [x, m] : fw.per_fibre)
    if (!m.braiding) fibres_braided = false;
  if (w.monoidal.braiding && fibres_braided) {
    l.braid_cell.emplace();
    for (const auto& [xy, bb] : *w.monoidal.braiding) {
      const auto& [x, y] = xy;
      if (!w.monoidal.tob(x, y) || !w.monoidal.tob(y, x)) continue;
      const Id& sp = *w.monoidal.tob(y, x);
      if (!fw.per_fibre.count(sp)) continue;
      const auto& [i1, i2] = w.inj(x, y);
      const auto& [j1, j2] = w.inj(y, x);
      base_law(M.base.comp(bb, i1), j2, "braid swaps first injection");
      base_law(M.base.comp(bb, i2), j1, "braid swaps second injection");
      const MonoidalData& Tp = fw.at_fibre(sp);
      const FinCat& Fp = M.fib(sp);
      const MonoidalFunctorData& pb = fw.re_monoidal(bb);
      std::map<IdPair, Id> vc;
      for (const Id& a : M.fib(x).objects)
        for (const Id& b : M.fib(y).objects) {
          Id A = M.re(i1).ob(a), B2 = M.re(i2).ob(b);
          Id swap = Tp.braiding->at({M.re(j2).ob(a), M.re(j1).ob(b)});
          vc[{a, b}] = Fp.comp(
              swap, Fp.comp(Tp.tensor_of_mor(M.delta_at(bb, i1, a),
                                             M.delta_at(bb, i2, b)),
                            inv_in(Fp, pb.laxator.at({A, B2}))));
        }
      (*l.braid_cell)[xy] = std::move(vc);
    }
  }
  return l;
}

LawReport roundtrip_transfer(const LaxMonoidalIndexed& l,
                             const CocartesianWitness& w) {
  LawReport r;
  FibrewiseMonoidal fw = global_to_fibrewise(l, w);
  r.absorb(check_fibrewise_monoidal(fw), "fibrewise data: ");
  if (!r.ok()) return r;
  LaxMonoidalIndexed l2 = fibrewise_to_global(fw, w);
  const IndexedCat& M = l.carrier;

  // comparison 2-cell c_{x,y}(a,b) : μ'_{x,y}(a,b) -> μ_{x,y}(a,b)
  std::map<IdPair, std::map<IdPair, Id>> comp2;
  for (const auto& [xy, s] : w.monoidal.tensor_obj) {
    const auto& [x, y] = xy;
    if (!l2.laxator.count(xy)) {  // pair dropped by the truncated transfer
      ++r.skipped;
      continue;
    }
    const auto& [i1, i2] = w.inj(x, y);
    const Id* ti = w.monoidal.tmor(i1, i2);
    if (!ti || !w.monoidal.tob(s, s) || !w.codiagonal.count(s)) {
      ++r.skipped;
      continue;
    }
    const FinCat& Fss = M.fib(*w.monoidal.tob(s, s));
    base_law(M.base.comp(w.nabla(s), *ti), M.base.id(s),
             "fold retracts the injections at (" + x + ", " + y + ")");
    const FinCat& Fs = M.fib(s);
    const FinFunctor& Mn = M.re(w.nabla(s));
    auto& cs = comp2[xy];
    for (const Id& a : M.fib(x).objects)
      for (const Id& b : M.fib(y).objects) {
        Id m_ = l.mu(x, y).ob(a, b);
        Id cell = l.mu_cell(i1, i2, a, b);
        // the cell lives in the fibre over s+s; invert it there before
        // folding down along ∇_s
        cs[{a, b}] = Fs.comp(
            inv_in(Fs, M.gamma_at(s, m_)),
            Fs.comp(M.delta_at(w.nabla(s), *ti, m_),
                    Mn.mor(inv_in(Fss, cell))));
        r.instance(Fs.dom(cs[{a, b}]) == l2.mu(x, y).ob(a, b) &&
                       Fs.cod(cs[{a, b}]) == m_ && Fs.is_iso(cs[{a, b}]),
                   "invertible comparison at (" + x + ", " + y + ") @ (" + a +
                       ", " + b + ")");
        // naturality over fibre morphism pairs
      }
    for (const auto& [k, kd] : M.fib(x).morphisms)
      for (const auto& [h, hd] : M.fib(y).morphisms) {
        IdPair dp{kd.dom, hd.dom}, cp{kd.cod, hd.cod};
        r.instance(Fs.comp(cs.at(cp), l2.mu(x, y).mr(k, h)) ==
                       Fs.comp(l.mu(x, y).mr(k, h), cs.at(dp)),
                   "comparison natural at (" + x + ", " + y + ") @ (" + k +
                       ", " + h + ")");
      }
  }
  // modification axiom against the pseudonaturality cells
  for (const auto& [fg, cells] : l.laxator_cells) {
    const auto& [f, g] = fg;
    const Id* tfg = w.monoidal.tmor(f, g);
    if (!tfg) {
      ++r.skipped;
      continue;
    }
    IdPair src{M.base.dom(f), M.base.dom(g)};
    IdPair tgt{M.base.cod(f), M.base.cod(g)};
    if (!comp2.count(src) || !comp2.count(tgt)) {
      ++r.skipped;
      continue;
    }
    const Id* sp = w.monoidal.tob(tgt.first, tgt.second);
    if (!sp || !l2.laxator_cells.count(fg)) {
      ++r.skipped;
      continue;
    }
    const FinCat& Fp = M.fib(*sp);
    for (const auto& [ab, cell] : cells) {
      Id lhs = Fp.comp(cell, M.re(*tfg).mor(comp2.at(src).at(ab)));
      Id rhs = Fp.comp(
          comp2.at(tgt).at({M.re(f).ob(ab.first), M.re(g).ob(ab.second)}),
          l2.mu_cell(f, g, ab.first, ab.second));
      r.instance(lhs == rhs, "comparison compatible with the cell at (" + f +
                                 ", " + g + ") @ (" + ab.first + ", " +
                                 ab.second + ")");
    }
  }
  // unit comparison
  {
    const FinCat& F0 = M.fib(w.initial);
    base_law(w.bang_to(w.initial), M.base.id(w.initial), "bang at the origin");
    Id c0 = inv_in(F0, M.gamma_at(w.initial, l.unit_object));
    r.instance(F0.dom(c0) == l2.unit_object && F0.cod(c0) == l.unit_object,
               "unit comparison endpoints");
  }
  // strict setting: literal table equality
  bool ordinary = M.strict;
  for (const auto& [fg, cells] : l.laxator_cells)
    for (const auto& [ab, cell] : cells) {
      (void)ab;
      const Id* s = w.monoidal.tob(M.base.cod(fg.first), M.base.cod(fg.second));
      if (!s || !M.fib(*s).is_identity(cell)) ordinary = false;
    }
  if (ordinary) {
    // pairs dropped by the truncated transfer are skipped; everything that
    // was reconstructed must match literally
    bool eq = true;
    std::size_t dropped = 0;
    for (const auto& [xy, pm] : l.laxator) {
      auto it = l2.laxator.find(xy);
      if (it == l2.laxator.end()) {
        ++dropped;
        continue;
      }
      if (!(it->second == pm)) eq = false;
    }
    r.skipped += dropped;
    r.instance(eq && l2.laxator.size() + dropped == l.laxator.size(),
               "strict case: laxator table equality");
    r.instance(l2.unit_object == l.unit_object,
               "strict case: unit object equality");
  }
  return r;
}

LawReport roundtrip_transfer(const FibrewiseMonoidal& fw,
                             const CocartesianWitness& w) {
  LawReport r;
  LaxMonoidalIndexed l = fibrewise_to_global(fw, w);
  FibrewiseMonoidal fw2 = global_to_fibrewise(l, w);
  const IndexedCat& M = fw.carrier;

  bool all_strict = M.strict;
  for (const Id& x : M.base.objects) {
    if (!fw.per_fibre.count(x) || !fw2.per_fibre.count(x)) {
      ++r.skipped;
      continue;
    }
    const MonoidalData& T = fw.at_fibre(x);
    const MonoidalData& T2 = fw2.at_fibre(x);
    const FinCat& Fx = M.fib(x);
    const auto& [i1, i2] = w.inj(x, x);
    const MonoidalFunctorData& pn = fw.re_monoidal(w.nabla(x));
    base_law(M.base.comp(w.nabla(x), i1), M.base.id(x), "fold retraction 1");
    base_law(M.base.comp(w.nabla(x), i2), M.base.id(x), "fold retraction 2");
    // comparison e_x(a,b) : a ⊗'_x b -> a ⊗_x b
    std::map<IdPair, Id> e;
    for (const Id& a : Fx.objects)
      for (const Id& b : Fx.objects) {
        Id leg1 = Fx.comp(inv_in(Fx, M.gamma_at(x, a)),
                          M.delta_at(w.nabla(x), i1, a));
        Id leg2 = Fx.comp(inv_in(Fx, M.gamma_at(x, b)),
                          M.delta_at(w.nabla(x), i2, b));
        Id A = M.re(i1).ob(a), B2 = M.re(i2).ob(b);
        e[{a, b}] = Fx.comp(T.tensor_of_mor(leg1, leg2),
                            inv_in(Fx, pn.laxator.at({A, B2})));
        r.instance(Fx.dom(e[{a, b}]) == T2.tensor_of(a, b) &&
                       Fx.cod(e[{a, b}]) == T.tensor_of(a, b) &&
                       Fx.is_iso(e[{a, b}]),
                   "invertible fibre comparison at " + x + " @ (" + a + ", " +
                       b + ")");
      }
    for (const auto& [k, kd] : Fx.morphisms)
      for (const auto& [h, hd] : Fx.morphisms)
        r.instance(Fx.comp(e.at({kd.cod, hd.cod}), T2.tensor_of_mor(k, h)) ==
                       Fx.comp(T.tensor_of_mor(k, h), e.at({kd.dom, hd.dom})),
                   "fibre comparison natural at " + x + " @ (" + k + ", " + h +
                       ")");
    // unit comparison I'_x -> I_x
    Id e0 = inv_in(Fx, fw.re_monoidal(w.bang_to(x)).unit_mor);
    r.instance(Fx.dom(e0) == T2.unit && Fx.cod(e0) == T.unit,
               "unit comparison endpoints at " + x);
    // associator and unitors transported through the comparison
    for (const auto& [abc, al2] : T2.associator) {
      const auto& [a, b, c] = abc;
      auto al = T.associator.find(abc);
      if (al == T.associator.end()) {
        ++r.skipped;
        continue;
      }
      Id left = Fx.comp(al->second,
                        Fx.comp(T.tensor_of_mor(e.at({a, b}), Fx.id(c)),
                                e.at({T2.tensor_of(a, b), c})));
      Id right = Fx.comp(e.at({a, T.tensor_of(b, c)}),
                         Fx.comp(T2.tensor_of_mor(Fx.id(a), e.at({b, c})),
                                 al2));
      r.instance(left == right, "associator comparison at " + x + " @ (" + a +
                                    ", " + b + ", " + c + ")");
    }
    for (const auto& [a, ru2] : T2.right_unitor) {
      auto ru = T.right_unitor.find(a);
      if (ru == T.right_unitor.end()) {
        ++r.skipped;
        continue;
      }
      Id path2 = Fx.comp(ru->second,
                         Fx.comp(T.tensor_of_mor(Fx.id(a), e0),
                                 e.at({a, T2.unit})));
      r.instance(path2 == ru2, "right unitor comparison at " + x + " @ " + a);
    }
    for (const auto& [a, lu2] : T2.left_unitor) {
      auto lu = T.left_unitor.find(a);
      if (lu == T.left_unitor.end()) {
        ++r.skipped;
        continue;
      }
      Id path2 = Fx.comp(lu->second,
                         Fx.comp(T.tensor_of_mor(e0, Fx.id(a)),
                                 e.at({T2.unit, a})));
      r.instance(path2 == lu2, "left unitor comparison at " + x + " @ " + a);
    }
    for (const auto& [ab, s] : pn.laxator) {
      (void)ab;
      if (!Fx.is_identity(s)) all_strict = false;
    }
  }
  for (const auto& [f, mf] : fw.reindex_monoidal)
    if (mf.strength != Strength::strict_) all_strict = false;
  if (all_strict) {
    for (const auto& [x, T] : fw.per_fibre) {
      if (!fw2.per_fibre.count(x)) {  // fibre dropped by the truncated trip
        ++r.skipped;
        continue;
      }
      const MonoidalData& T2 = fw2.at_fibre(x);
      r.instance(T2.tensor_obj == T.tensor_obj &&
                     T2.tensor_mor == T.tensor_mor && T2.unit == T.unit,
                 "strict case: fibre tensor table equality at " + x);
    }
  }
  return r;
}

StrictnessReport strictness_analysis(const LaxMonoidalIndexed& l,
                                     const CocartesianWitness& w) {
  StrictnessReport rep;
  const IndexedCat& M = l.carrier;
  rep.ordinary_lax = true;
  auto obstruct = [&](const std::string& why) {
    if (rep.ordinary_lax) rep.pseudo_witness = why;
    rep.ordinary_lax = false;
  };
  if (!M.strict) obstruct("carrier pseudofunctor is not strict");
  for (const auto& [fg, cells] : l.laxator_cells) {
    const Id* s =
        l.base_monoidal.tob(M.base.cod(fg.first), M.base.cod(fg.second));
    if (!s) continue;
    for (const auto& [ab, cell] : cells)
      if (!M.fib(*s).is_identity(cell))
        obstruct("laxator cell at (" + fg.first + ", " + fg.second + ") @ (" +
                 ab.first + ", " + ab.second + ") is not an identity");
  }
  for (const auto& [xyz, om] : l.omega) {
    const Id* syz = l.base_monoidal.tob(std::get<1>(xyz), std::get<2>(xyz));
    const Id* home = syz ? l.base_monoidal.tob(std::get<0>(xyz), *syz) : nullptr;
    if (!home) continue;
    for (const auto& [abc, comp] : om) {
      (void)abc;
      if (!M.fib(*home).is_identity(comp))
        obstruct("omega component at " + std::get<0>(xyz) + " is not an identity");
    }
  }
  for (const auto& [x, zx] : l.zeta)
    for (const auto& [a, comp] : zx)
      if (!M.fib(x).is_identity(comp))
        obstruct("zeta component at " + x + " @ " + a + " is not an identity");
  for (const auto& [x, xx] : l.xi)
    for (const auto& [a, comp] : xx)
      if (!M.fib(x).is_identity(comp))
        obstruct("xi component at " + x + " @ " + a + " is not an identity");

  FibrewiseMonoidal fw = global_to_fibrewise(l, w);
  for (const auto& [x, T] : fw.per_fibre) {
    const FinCat& Fx = M.fib(x);
    bool strict = true;
    for (const auto& [abc, comp] : T.associator) {
      (void)abc;
      if (!Fx.is_identity(comp)) strict = false;
    }
    for (const auto& [a, comp] : T.left_unitor) {
      (void)a;
      if (!Fx.is_identity(comp)) strict = false;
    }
    for (const auto& [a, comp] : T.right_unitor) {
      (void)a;
      if (!Fx.is_identity(comp)) strict = false;
    }
    rep.fibre_strict[x] = strict;
    if (rep.ordinary_lax)
      rep.law.instance(strict, "induced fibre structure at " + x +
                                   " is strict monoidal");
  }
  for (const auto& [f, mf] : fw.reindex_monoidal) {
    rep.reindex_strict[f] = mf.strength == Strength::strict_;
    if (rep.ordinary_lax)
      rep.law.instance(rep.reindex_strict[f],
                       "reindexer along " + f + " strictly monoidal");
  }
  return rep;
}

NatTrans make_kappa(const LaxMonoidalIndexed& l, const CocartesianWitness& w,
                    const Id& x, std::map<Id, Id> components) {
  const IndexedCat& M = l.carrier;
  const FinCat& Fx = M.fib(x);
  const FinFunctor& Mn = M.re(w.nabla(x));
  NatTrans t;
  t.source_fun.source = Fx;
  t.source_fun.target = Fx;
  for (const Id& a : Fx.objects)
    t.source_fun.obj_map[a] = Mn.ob(l.mu(x, x).ob(a, a));
  for (const auto& [k, dc] : Fx.morphisms) {
    (void)dc;
    t.source_fun.mor_map[k] = Mn.mor(l.mu(x, x).mr(k, k));
  }
  t.target_fun = identity_functor(Fx);
  t.components = std::move(components);
  return t;
}

NatTrans make_lambda(const LaxMonoidalIndexed& l, const CocartesianWitness& w,
                     const Id& x, std::map<Id, Id> components) {
  const IndexedCat& M = l.carrier;
  const FinCat& Fx = M.fib(x);
  NatTrans t;
  t.source_fun = constant_functor(
      Fx, Fx, M.re(w.bang_to(x)).ob(l.unit_object));
  t.target_fun = identity_functor(Fx);
  t.components = std::move(components);
  return t;
}

LawReport check_cocartesian_total(const LaxMonoidalIndexed& l,
                                  const CocartesianWitness& w,
                                  const CocartTotalCriterion& crit) {
  LawReport r;
  const IndexedCat& M = l.carrier;
  for (const Id& x : M.base.objects) {
    // truncated universe: no codiagonal/bang/laxator at x means the
    // criterion has nothing to say there
    if (!w.codiagonal.count(x) || !w.bang.count(x) ||
        !l.laxator.count({x, x})) {
      ++r.skipped;
      continue;
    }
    auto ik = crit.kappa.find(x);
    auto il = crit.lambda_aug.find(x);
    r.instance(ik != crit.kappa.end(), "kappa present at " + x);
    r.instance(il != crit.lambda_aug.end(), "lambda present at " + x);
    if (ik == crit.kappa.end() || il == crit.lambda_aug.end()) continue;
    r.instance(ik->second.source_fun ==
                   make_kappa(l, w, x, ik->second.components).source_fun,
               "kappa shape at " + x);
    r.instance(il->second.source_fun ==
                   make_lambda(l, w, x, il->second.components).source_fun,
               "lambda shape at " + x);
    r.absorb(check_nat_trans(ik->second), "kappa at " + x + ": ");
    r.absorb(check_nat_trans(il->second), "lambda at " + x + ": ");
    const FinCat& Fx = M.fib(x);
    const FinFunctor& Mn = M.re(w.nabla(x));
    for (const Id& a : Fx.objects) {
      Id kap = ik->second.at(a);
      Id lam = il->second.at(a);
      Id left = Mn.mor(l.mu(x, x).mr(lam, Fx.id(a)));
      if (Fx.dom(left) != a)
        ++r.skipped;  // pseudo case: simplified equation does not apply
      else
        r.instance(Fx.comp(kap, left) == Fx.id(a),
                   "left augmentation equation at " + x + " @ " + a);
      Id right = Mn.mor(l.mu(x, x).mr(Fx.id(a), lam));
      if (Fx.dom(right) != a)
        ++r.skipped;
      else
        r.instance(Fx.comp(kap, right) == Fx.id(a),
                   "right augmentation equation at " + x + " @ " + a);
    }
  }
  if (!r.ok()) return r;

  // extensional certification on the total category
  MonoidalFibrationData mg = monoidal_grothendieck(l);
  const FinCat& T = mg.carrier.total;
  Id zero = groth_obj(w.initial, l.unit_object);
  for (const Id& t : T.objects)
    r.instance(T.hom(zero, t).size() == 1, "initial object into " + t);
  for (const auto& [ab, s] : mg.total_monoidal.tensor_obj) {
    const auto& [A, B] = ab;
    bool found = false;
    for (const Id& i : T.hom(A, s)) {
      for (const Id& j : T.hom(B, s)) {
        bool universal = true;
        for (const Id& t : T.objects) {
          std::set<IdPair> seen;
          for (const Id& h : T.hom(s, t)) seen.insert({T.comp(h, i), T.comp(h, j)});
          if (seen.size() != T.hom(s, t).size() ||
              seen.size() != T.hom(A, t).size() * T.hom(B, t).size()) {
            universal = false;
            break;
          }
        }
        if (universal) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    r.instance(found, "total tensor a coproduct at (" + A + ", " + B + ")");
  }
  return r;
}

}  // namespace catkit
