#include "catkit/zoo.hpp"

#include <algorithm>
#include <string>

namespace catkit {

Id fs_fun(int m, int n, const std::vector<int>& vals) {
  Id s = "f" + std::to_string(m) + ">" + std::to_string(n) + ":";
  for (int v : vals) s += static_cast<char>('0' + v);
  return s;
}

FsFun fs_dec(const Id& f) {
  if (f.empty() || f[0] != 'f') throw ParseError("not a skeleton map: " + f);
  auto gt = f.find('>');
  auto co = f.find(':');
  if (gt == Id::npos || co == Id::npos)
    throw ParseError("not a skeleton map: " + f);
  FsFun out;
  out.m = std::stoi(f.substr(1, gt - 1));
  out.n = std::stoi(f.substr(gt + 1, co - gt - 1));
  for (std::size_t i = co + 1; i < f.size(); ++i)
    out.vals.push_back(f[i] - '0');
  if (static_cast<int>(out.vals.size()) != out.m)
    throw ParseError("skeleton map arity mismatch: " + f);
  return out;
}

int fs_card(const Id& object) { return std::stoi(object); }

FinCat finset_skeleton(int bound) {
  if (bound < 0 || bound > 9)
    throw SizeLimitExceeded("finset_skeleton: bound out of range");
  FinCat c;
  for (int n = 0; n <= bound; ++n) c.objects.insert(std::to_string(n));

  // enumerate all functions m -> n
  std::vector<std::vector<int>> stack;
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n) {
      if (m > 0 && n == 0) continue;
      std::vector<int> vals(m, 0);
      while (true) {
        c.add_morphism(fs_fun(m, n, vals), std::to_string(m),
                       std::to_string(n));
        int i = m - 1;
        while (i >= 0 && vals[i] == n - 1) vals[i--] = 0;
        if (i < 0) break;
        ++vals[i];
      }
    }
  for (int n = 0; n <= bound; ++n) {
    std::vector<int> idv(n);
    for (int i = 0; i < n; ++i) idv[i] = i;
    c.identity[std::to_string(n)] = fs_fun(n, n, idv);
  }
  for (const auto& [g, gdc] : c.morphisms)
    for (const auto& [f, fdc] : c.morphisms) {
      if (fdc.cod != gdc.dom) continue;
      FsFun gf = fs_dec(g), ff = fs_dec(f);
      std::vector<int> vals(ff.m);
      for (int i = 0; i < ff.m; ++i) vals[i] = gf.vals[ff.vals[i]];
      c.compose[{g, f}] = fs_fun(ff.m, gf.n, vals);
    }
  return c;
}

CocartesianWitness finset_cocartesian(int bound) {
  auto w = find_cocartesian(finset_skeleton(bound), /*allow_partial=*/true);
  if (!w) throw MalformedTable("skeleton witness search failed");
  return *w;
}

CocartesianWitness opfinset_cartesian(int bound) {
  if (bound < 1 || bound > 9)
    throw SizeLimitExceeded("opfinset_cartesian: bound out of range");
  FinCat sk = finset_skeleton(bound);
  CocartesianWitness w;
  MonoidalData& m = w.monoidal;
  m.base = opposite(sk);
  m.unit = "1";
  w.initial = "1";
  for (int x = 0; x <= bound; ++x) {
    std::vector<int> zeros(x, 0);
    w.bang[std::to_string(x)] = fs_fun(x, 1, zeros);  // op of the constant
  }
  for (int x = 0; x <= bound; ++x)
    for (int y = 0; y <= bound; ++y) {
      if (x * y > bound) continue;
      Id xs = std::to_string(x), ys = std::to_string(y);
      m.tensor_obj[{xs, ys}] = std::to_string(x * y);
      // coprojections = opposite projections
      std::vector<int> p1(x * y), p2(x * y);
      for (int i = 0; i < x; ++i)
        for (int j = 0; j < y; ++j) {
          p1[i * y + j] = i;
          p2[i * y + j] = j;
        }
      w.coprojections[{xs, ys}] = {fs_fun(x * y, x, p1), fs_fun(x * y, y, p2)};
    }
  for (int x = 0; x <= bound; ++x) {
    if (x * x > bound) continue;
    std::vector<int> d(x);
    for (int i = 0; i < x; ++i) d[i] = i * x + i;
    w.codiagonal[std::to_string(x)] = fs_fun(x, x * x, d);  // op diagonal
  }
  // tensor on (opposite) morphisms: f: a -> b, g: c -> d in the opposite
  // correspond to maps b -> a and d -> c; their product is b*d -> a*c.
  for (const auto& [f, fdc] : m.base.morphisms)
    for (const auto& [g, gdc] : m.base.morphisms) {
      int a = std::stoi(fdc.dom), b = std::stoi(fdc.cod);
      int c = std::stoi(gdc.dom), d = std::stoi(gdc.cod);
      if (a * c > bound || b * d > bound) continue;
      FsFun fo = fs_dec(f), go = fs_dec(g);  // encoded maps b -> a, d -> c
      std::vector<int> vals(b * d);
      for (int i = 0; i < b; ++i)
        for (int j = 0; j < d; ++j)
          vals[i * d + j] = fo.vals[i] * c + go.vals[j];
      m.tensor_mor[{f, g}] = fs_fun(b * d, a * c, vals);
    }
  for (int x = 0; x <= bound; ++x)
    for (int y = 0; y <= bound; ++y)
      for (int z = 0; z <= bound; ++z) {
        if (x * y > bound || y * z > bound || x * y * z > bound) continue;
        m.associator[{std::to_string(x), std::to_string(y),
                      std::to_string(z)}] = m.base.id(std::to_string(x * y * z));
      }
  for (int x = 0; x <= bound; ++x) {
    m.left_unitor[std::to_string(x)] = m.base.id(std::to_string(x));
    m.right_unitor[std::to_string(x)] = m.base.id(std::to_string(x));
  }
  m.braiding.emplace();
  for (int x = 0; x <= bound; ++x)
    for (int y = 0; y <= bound; ++y) {
      if (x * y > bound) continue;
      std::vector<int> vals(x * y);  // orig map y*x -> x*y
      for (int i = 0; i < x; ++i)
        for (int j = 0; j < y; ++j) vals[j * x + i] = i * y + j;
      (*m.braiding)[{std::to_string(x), std::to_string(y)}] =
          fs_fun(y * x, x * y, vals);
    }
  m.symmetric = true;
  return w;
}

// ---- graphs -------------------------------------------------------------

namespace {

Id graph_from_mask(int n, unsigned mask) {
  Id s = "g" + std::to_string(n) + ":";
  for (int k = 0; k < n * n; ++k)
    s += (mask >> k) & 1u ? '1' : '0';
  return s;
}

Id incl(const Id& g, const Id& h) { return "i:" + g + ">" + h; }

}  // namespace

Id graph_id(const GraphObj& g) {
  std::string bits(static_cast<std::size_t>(g.n) * g.n, '0');
  for (const auto& [i, j] : g.edges) {
    if (i < 0 || j < 0 || i >= g.n || j >= g.n)
      throw MalformedTable("edge out of range in graph on " +
                           std::to_string(g.n));
    bits[i * g.n + j] = '1';
  }
  return "g" + std::to_string(g.n) + ":" + bits;
}

GraphObj graph_dec(const Id& s) {
  if (s.empty() || s[0] != 'g') throw ParseError("not a graph: " + s);
  auto co = s.find(':');
  if (co == Id::npos) throw ParseError("not a graph: " + s);
  GraphObj g;
  g.n = std::stoi(s.substr(1, co - 1));
  if (static_cast<int>(s.size() - co - 1) != g.n * g.n)
    throw ParseError("adjacency length mismatch: " + s);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (s[co + 1 + i * g.n + j] == '1') g.edges.insert({i, j});
  return g;
}

std::vector<Id> all_graphs(int n) {
  if (n < 0 || n > 3) throw SizeLimitExceeded("all_graphs: vertex bound");
  std::vector<Id> out;
  for (unsigned mask = 0; mask < (1u << (n * n)); ++mask)
    out.push_back(graph_from_mask(n, mask));
  return out;
}

FinCat graph_fibre(int n) {
  FinCat c;
  auto gs = all_graphs(n);
  for (const Id& g : gs) c.add_object(g, incl(g, g));
  int bits = n * n;
  for (unsigned a = 0; a < (1u << bits); ++a)
    for (unsigned b = a; b < (1u << bits); ++b) {
      if ((a & b) != a) continue;  // a not a subset of b
      if (a != b)
        c.add_morphism(incl(graph_from_mask(n, a), graph_from_mask(n, b)),
                       graph_from_mask(n, a), graph_from_mask(n, b));
    }
  for (unsigned a = 0; a < (1u << bits); ++a) {
    // supersets of a: iterate over subsets of the complement
    unsigned compl_a = ((1u << bits) - 1) & ~a;
    for (unsigned s = compl_a;; s = (s - 1) & compl_a) {
      unsigned b = a | s;
      unsigned compl_b = ((1u << bits) - 1) & ~b;
      for (unsigned t = compl_b;; t = (t - 1) & compl_b) {
        unsigned cc = b | t;
        c.compose[{incl(graph_from_mask(n, b), graph_from_mask(n, cc)),
                   incl(graph_from_mask(n, a), graph_from_mask(n, b))}] =
            incl(graph_from_mask(n, a), graph_from_mask(n, cc));
        if (t == 0) break;
      }
      if (s == 0) break;
    }
  }
  return c;
}

Id graph_push(const FsFun& f, const Id& g) {
  GraphObj src = graph_dec(g);
  if (src.n != f.m) throw ShapeMismatch("pushforward arity: " + g);
  GraphObj out;
  out.n = f.n;
  for (const auto& [i, j] : src.edges) out.edges.insert({f.vals[i], f.vals[j]});
  return graph_id(out);
}

namespace {

Id graph_union(const Id& a, const Id& b) {
  GraphObj ga = graph_dec(a), gb = graph_dec(b);
  GraphObj out;
  out.n = ga.n + gb.n;
  out.edges = ga.edges;
  for (const auto& [i, j] : gb.edges) out.edges.insert({ga.n + i, ga.n + j});
  return graph_id(out);
}

void require_offset_injections(const CocartesianWitness& w, const Id& x,
                               const Id& y) {
  const auto& [i1, i2] = w.inj(x, y);
  FsFun f1 = fs_dec(i1), f2 = fs_dec(i2);
  for (int i = 0; i < f1.m; ++i)
    if (f1.vals[i] != i)
      throw MalformedTable("non-offset injection " + i1);
  for (int i = 0; i < f2.m; ++i)
    if (f2.vals[i] != f1.m + i)
      throw MalformedTable("non-offset injection " + i2);
}

}  // namespace

LaxMonoidalIndexed graph_opindexed(int vertex_bound) {
  // bound 3 would copy the 19683-arrow fibre into every reindexer
  if (vertex_bound < 0 || vertex_bound > 2)
    throw SizeLimitExceeded("graph_opindexed: vertex bound out of range");
  CocartesianWitness w = finset_cocartesian(vertex_bound);
  LaxMonoidalIndexed l;
  l.base_monoidal = w.monoidal;

  // A truncated universe can certify a degenerate coproduct (at bound 1 the
  // pair (1,1) has in-universe coproduct 1): the union laxator only exists
  // at genuine sums, so drop cardinality-collapsed pairs from the tables.
  MonoidalData& bm = l.base_monoidal;
  std::erase_if(bm.tensor_obj, [](const auto& e) {
    return fs_card(e.first.first) + fs_card(e.first.second) !=
           fs_card(e.second);
  });
  std::erase_if(bm.tensor_mor, [&](const auto& e) {
    const auto& [f, g] = e.first;
    return !bm.tob(bm.base.dom(f), bm.base.dom(g)) ||
           !bm.tob(bm.base.cod(f), bm.base.cod(g));
  });
  std::erase_if(bm.associator, [&](const auto& e) {
    const auto& [x, y, z] = e.first;
    const Id* xy = bm.tob(x, y);
    const Id* yz = bm.tob(y, z);
    return !xy || !yz || !bm.tob(*xy, z) || !bm.tob(x, *yz);
  });
  if (bm.braiding)
    std::erase_if(*bm.braiding, [&](const auto& e) {
      return !bm.tob(e.first.first, e.first.second) ||
             !bm.tob(e.first.second, e.first.first);
    });
  IndexedCat M;
  M.base = w.monoidal.base;
  M.variance = Variance::covariant;
  for (int n = 0; n <= vertex_bound; ++n)
    M.fibre[std::to_string(n)] = graph_fibre(n);
  for (const auto& [f, dc] : M.base.morphisms) {
    FsFun ff = fs_dec(f);
    FinFunctor F;
    F.source = M.fibre.at(dc.dom);
    F.target = M.fibre.at(dc.cod);
    for (const Id& g : F.source.objects) F.obj_map[g] = graph_push(ff, g);
    for (const auto& [k, kd] : F.source.morphisms)
      F.mor_map[k] = incl(graph_push(ff, kd.dom), graph_push(ff, kd.cod));
    M.reindex[f] = F;
  }
  finish_strict(M);
  l.carrier = M;
  l.unit_object = graph_from_mask(0, 0);

  for (const auto& [xy, s] : bm.tensor_obj) {
    require_offset_injections(w, xy.first, xy.second);
    const FinCat& fx = M.fib(xy.first);
    const FinCat& fy = M.fib(xy.second);
    PairMap pm;
    for (const Id& a : fx.objects)
      for (const Id& b : fy.objects) pm.obj[{a, b}] = graph_union(a, b);
    for (const auto& [k, kd] : fx.morphisms)
      for (const auto& [h, hd] : fy.morphisms)
        pm.mor[{k, h}] =
            incl(graph_union(kd.dom, hd.dom), graph_union(kd.cod, hd.cod));
    l.laxator[xy] = pm;
    (void)s;
  }
  for (const auto& [fg, t] : bm.tensor_mor) {
    const FinCat& home = M.fib(M.base.cod(t));
    auto& cells = l.laxator_cells[fg];
    const FinFunctor& F = M.re(fg.first);
    const FinFunctor& G = M.re(fg.second);
    for (const Id& a : M.fib(M.base.dom(fg.first)).objects)
      for (const Id& b : M.fib(M.base.dom(fg.second)).objects)
        cells[{a, b}] = home.id(graph_union(F.ob(a), G.ob(b)));
  }
  for (const auto& [xyz, alf] : bm.associator) {
    const FinCat& home = M.fib(M.base.cod(alf));
    auto& om = l.omega[xyz];
    for (const Id& a : M.fib(std::get<0>(xyz)).objects)
      for (const Id& b : M.fib(std::get<1>(xyz)).objects)
        for (const Id& c : M.fib(std::get<2>(xyz)).objects)
          om[{a, b, c}] = home.id(graph_union(graph_union(a, b), c));
  }
  for (const Id& x : M.base.objects) {
    const FinCat& fx = M.fib(x);
    for (const Id& a : fx.objects) {
      l.zeta[x][a] = fx.id(a);
      l.xi[x][a] = fx.id(a);
    }
  }
  l.braid_cell.emplace();
  for (const auto& [xy, bb] : *bm.braiding) {
    const FinCat& home = M.fib(M.base.cod(bb));
    auto& cells = (*l.braid_cell)[xy];
    const FinFunctor& B = M.re(bb);
    for (const Id& a : M.fib(xy.first).objects)
      for (const Id& b : M.fib(xy.second).objects)
        cells[{a, b}] = home.id(B.ob(graph_union(a, b)));
  }
  return l;
}

MonoidalFibrationData vertex_opfibration(int vertex_bound) {
  return monoidal_grothendieck(graph_opindexed(vertex_bound));
}

// ---- slices -------------------------------------------------------------

namespace {

Id slice_mor(const Id& u, const Id& a, const Id& b) { return enc({u, a, b}); }

FinCat slice_cat(const FinCat& base, const Id& x) {
  FinCat c;
  std::vector<Id> obs = base.to(x);
  for (const Id& a : obs)
    c.add_object(a, slice_mor(base.id(base.dom(a)), a, a));
  for (const Id& a : obs)
    for (const Id& b : obs)
      for (const Id& u : base.hom(base.dom(a), base.dom(b)))
        if (base.comp(b, u) == a && !(a == b && base.is_identity(u)))
          c.add_morphism(slice_mor(u, a, b), a, b);
  for (const auto& [m, md] : c.morphisms)
    for (const auto& [k, kd] : c.morphisms) {
      if (kd.cod != md.dom) continue;
      Id u = dec(k, 3)[0], v = dec(m, 3)[0];
      c.compose[{m, k}] = slice_mor(base.comp(v, u), kd.dom, md.cod);
    }
  return c;
}

}  // namespace

LaxMonoidalIndexed slice_opindexed(const FinCat& base,
                                   const CocartesianWitness& w) {
  if (w.monoidal.base != base)
    throw ShapeMismatch("witness is not over the given base");
  if (base.objects.size() > 8 || base.morphisms.size() > 24)
    throw SizeLimitExceeded("slice_opindexed: base too large");
  LaxMonoidalIndexed l;
  l.base_monoidal = w.monoidal;
  IndexedCat M;
  M.base = base;
  M.variance = Variance::covariant;
  for (const Id& x : base.objects) M.fibre[x] = slice_cat(base, x);
  for (const auto& [f, dc] : base.morphisms) {
    FinFunctor F;
    F.source = M.fibre.at(dc.dom);
    F.target = M.fibre.at(dc.cod);
    for (const Id& a : F.source.objects) F.obj_map[a] = base.comp(f, a);
    for (const auto& [k, kd] : F.source.morphisms)
      F.mor_map[k] = slice_mor(dec(k, 3)[0], base.comp(f, kd.dom),
                               base.comp(f, kd.cod));
    M.reindex[f] = F;
  }
  finish_strict(M);
  l.carrier = M;
  l.unit_object = base.id(w.initial);

  const MonoidalData& bm = w.monoidal;
  auto tens = [&](const Id& p, const Id& q) -> const Id* {
    return bm.tmor(p, q);
  };
  for (const auto& [xy, s] : bm.tensor_obj) {
    (void)s;
    const FinCat& fx = M.fib(xy.first);
    const FinCat& fy = M.fib(xy.second);
    PairMap pm;
    for (const Id& a : fx.objects)
      for (const Id& b : fy.objects)
        if (const Id* t = tens(a, b)) pm.obj[{a, b}] = *t;
    for (const auto& [k, kd] : fx.morphisms)
      for (const auto& [h, hd] : fy.morphisms) {
        const Id* u = tens(dec(k, 3)[0], dec(h, 3)[0]);
        const Id* sd = tens(kd.dom, hd.dom);
        const Id* sc = tens(kd.cod, hd.cod);
        if (u && sd && sc) pm.mor[{k, h}] = slice_mor(*u, *sd, *sc);
      }
    l.laxator[xy] = pm;
  }
  for (const auto& [fg, t] : bm.tensor_mor) {
    auto& cells = l.laxator_cells[fg];
    const FinCat& home = M.fib(base.cod(t));
    for (const Id& a : M.fib(base.dom(fg.first)).objects)
      for (const Id& b : M.fib(base.dom(fg.second)).objects)
        if (const Id* ab = tens(base.comp(fg.first, a),
                                base.comp(fg.second, b)))
          cells[{a, b}] = home.id(*ab);
  }
  for (const auto& [xyz, alf] : bm.associator) {
    auto& om = l.omega[xyz];
    for (const Id& a : M.fib(std::get<0>(xyz)).objects)
      for (const Id& b : M.fib(std::get<1>(xyz)).objects)
        for (const Id& c : M.fib(std::get<2>(xyz)).objects) {
          const Id* ab = tens(a, b);
          const Id* bc = tens(b, c);
          if (!ab || !bc) continue;
          const Id* lhs = tens(*ab, c);
          const Id* rhs = tens(a, *bc);
          const Id* au = bm.alpha(base.dom(a), base.dom(b), base.dom(c));
          if (!lhs || !rhs || !au) continue;
          om[{a, b, c}] = slice_mor(*au, base.comp(alf, *lhs), *rhs);
        }
  }
  for (const auto& [x, r] : bm.right_unitor) {
    const Id u0 = base.id(w.initial);
    for (const Id& a : M.fib(x).objects) {
      const Id* t = tens(a, u0);
      auto ru = bm.right_unitor.find(base.dom(a));
      if (!t || ru == bm.right_unitor.end()) continue;
      l.zeta[x][a] = slice_mor(ru->second, base.comp(r, *t), a);
    }
  }
  for (const auto& [x, lu] : bm.left_unitor) {
    const Id u0 = base.id(w.initial);
    for (const Id& a : M.fib(x).objects) {
      const Id* t = tens(u0, a);
      auto lf = bm.left_unitor.find(base.dom(a));
      if (!t || lf == bm.left_unitor.end()) continue;
      l.xi[x][a] = slice_mor(lf->second, base.comp(lu, *t), a);
    }
  }
  if (bm.braiding) {
    l.braid_cell.emplace();
    for (const auto& [xy, bb] : *bm.braiding) {
      auto& cells = (*l.braid_cell)[xy];
      for (const Id& a : M.fib(xy.first).objects)
        for (const Id& b : M.fib(xy.second).objects) {
          const Id* ab = tens(a, b);
          const Id* ba = tens(b, a);
          const Id* bu = bm.braid(base.dom(a), base.dom(b));
          if (ab && ba && bu)
            cells[{a, b}] = slice_mor(*bu, base.comp(bb, *ab), *ba);
        }
    }
  }
  return l;
}

// ---- families -----------------------------------------------------------

namespace {

std::vector<std::vector<Id>> tuples_of(const std::vector<Id>& pool, int k) {
  std::vector<std::vector<Id>> out{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<Id>> next;
    for (const auto& t : out)
      for (const Id& e : pool) {
        auto t2 = t;
        t2.push_back(e);
        next.push_back(std::move(t2));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Id> tup_dec(const Id& s, int k) {
  if (k == 0) return {};
  return dec(s, static_cast<std::size_t>(k));
}

}  // namespace

LaxMonoidalIndexed family_fibration(const MonoidalData& c, int set_bound) {
  if (!c.total())
    throw MalformedTable("family fibration needs a total tensor");
  if (set_bound < 1 || set_bound > 3)
    throw SizeLimitExceeded("family_fibration: set bound out of range");
  if (c.base.objects.size() > 3 || c.base.morphisms.size() > 6)
    throw SizeLimitExceeded("family_fibration: value category too large");
  CocartesianWitness w = opfinset_cartesian(set_bound);
  LaxMonoidalIndexed l;
  l.base_monoidal = w.monoidal;
  IndexedCat M;
  M.base = w.monoidal.base;
  M.variance = Variance::covariant;

  std::vector<Id> cobs(c.base.objects.begin(), c.base.objects.end());
  std::vector<Id> cmor;
  for (const auto& [m, dc] : c.base.morphisms) {
    (void)dc;
    cmor.push_back(m);
  }
  for (int k = 0; k <= set_bound; ++k) {
    FinCat f;
    for (const auto& t : tuples_of(cobs, k)) {
      std::vector<Id> ids(k);
      for (int i = 0; i < k; ++i) ids[i] = c.base.id(t[i]);
      f.add_object(enc(t), enc(ids));
    }
    for (const auto& t : tuples_of(cmor, k)) {
      std::vector<Id> dm(k), cm(k);
      bool ident = true;
      for (int i = 0; i < k; ++i) {
        dm[i] = c.base.dom(t[i]);
        cm[i] = c.base.cod(t[i]);
        if (!c.base.is_identity(t[i])) ident = false;
      }
      if (!ident)  // identity tuples were added with their objects
        f.add_morphism(enc(t), enc(dm), enc(cm));
    }
    for (const auto& [m, md] : f.morphisms)
      for (const auto& [n, nd] : f.morphisms) {
        if (nd.cod != md.dom) continue;
        auto mv = tup_dec(m, k), nv = tup_dec(n, k);
        std::vector<Id> comp(k);
        for (int i = 0; i < k; ++i) comp[i] = c.base.comp(mv[i], nv[i]);
        f.compose[{m, n}] = enc(comp);
      }
    M.fibre[std::to_string(k)] = f;
  }
  for (const auto& [fId, dc] : M.base.morphisms) {
    FsFun f = fs_dec(fId);  // original map cod(op) <- ... : f.m -> f.n
    int kd = std::stoi(dc.dom), kc = std::stoi(dc.cod);
    (void)kd;
    FinFunctor F;
    F.source = M.fibre.at(dc.dom);
    F.target = M.fibre.at(dc.cod);
    auto pre = [&](const Id& t, int klen) {
      auto v = tup_dec(t, klen);
      std::vector<Id> out(kc);
      for (int i = 0; i < kc; ++i) out[i] = v[f.vals[i]];
      return enc(out);
    };
    for (const Id& t : F.source.objects) F.obj_map[t] = pre(t, kd);
    for (const auto& [m, md] : F.source.morphisms) {
      (void)md;
      F.mor_map[m] = pre(m, kd);
    }
    M.reindex[fId] = F;
  }
  finish_strict(M);
  l.carrier = M;
  l.unit_object = enc({c.unit});

  auto pointwise = [&](const Id& ta, int ka, const Id& tb, int kb,
                       bool objects) {
    auto va = tup_dec(ta, ka), vb = tup_dec(tb, kb);
    std::vector<Id> out(ka * kb);
    for (int i = 0; i < ka; ++i)
      for (int j = 0; j < kb; ++j)
        out[i * kb + j] = objects ? c.tensor_of(va[i], vb[j])
                                  : c.tensor_of_mor(va[i], vb[j]);
    return enc(out);
  };
  for (const auto& [xy, s] : w.monoidal.tensor_obj) {
    (void)s;
    int kx = std::stoi(xy.first), ky = std::stoi(xy.second);
    const FinCat& fx = M.fib(xy.first);
    const FinCat& fy = M.fib(xy.second);
    PairMap pm;
    for (const Id& a : fx.objects)
      for (const Id& b : fy.objects)
        pm.obj[{a, b}] = pointwise(a, kx, b, ky, true);
    for (const auto& [k, kd] : fx.morphisms)
      for (const auto& [h, hd] : fy.morphisms) {
        (void)kd;
        (void)hd;
        pm.mor[{k, h}] = pointwise(k, kx, h, ky, false);
      }
    l.laxator[xy] = pm;
  }
  for (const auto& [fg, t] : w.monoidal.tensor_mor) {
    auto& cells = l.laxator_cells[fg];
    const Id& hx = M.base.cod(t);
    const FinCat& home = M.fib(hx);
    const FinFunctor& F = M.re(fg.first);
    const FinFunctor& G = M.re(fg.second);
    int kf = std::stoi(M.base.cod(fg.first));
    int kg = std::stoi(M.base.cod(fg.second));
    for (const Id& a : M.fib(M.base.dom(fg.first)).objects)
      for (const Id& b : M.fib(M.base.dom(fg.second)).objects)
        cells[{a, b}] = home.id(pointwise(F.ob(a), kf, G.ob(b), kg, true));
  }
  for (const auto& [xyz, alf] : w.monoidal.associator) {
    (void)alf;
    int kx = std::stoi(std::get<0>(xyz));
    int ky = std::stoi(std::get<1>(xyz));
    int kz = std::stoi(std::get<2>(xyz));
    auto& om = l.omega[xyz];
    for (const Id& a : M.fib(std::get<0>(xyz)).objects)
      for (const Id& b : M.fib(std::get<1>(xyz)).objects)
        for (const Id& cc : M.fib(std::get<2>(xyz)).objects) {
          auto va = tup_dec(a, kx), vb = tup_dec(b, ky), vc = tup_dec(cc, kz);
          std::vector<Id> comp(kx * ky * kz);
          for (int i = 0; i < kx; ++i)
            for (int j = 0; j < ky; ++j)
              for (int k = 0; k < kz; ++k)
                comp[(i * ky + j) * kz + k] =
                    c.associator.at({va[i], vb[j], vc[k]});
          om[{a, b, cc}] = enc(comp);
        }
  }
  for (const Id& x : M.base.objects) {
    int kx = std::stoi(x);
    for (const Id& a : M.fib(x).objects) {
      auto va = tup_dec(a, kx);
      std::vector<Id> zr(kx), xl(kx);
      for (int i = 0; i < kx; ++i) {
        zr[i] = c.right_unitor.at(va[i]);
        xl[i] = c.left_unitor.at(va[i]);
      }
      l.zeta[x][a] = enc(zr);
      l.xi[x][a] = enc(xl);
    }
  }
  if (c.braiding) {
    l.braid_cell.emplace();
    for (const auto& [xy, bb] : *w.monoidal.braiding) {
      (void)bb;
      int kx = std::stoi(xy.first), ky = std::stoi(xy.second);
      auto& cells = (*l.braid_cell)[xy];
      for (const Id& a : M.fib(xy.first).objects)
        for (const Id& b : M.fib(xy.second).objects) {
          auto va = tup_dec(a, kx), vb = tup_dec(b, ky);
          std::vector<Id> comp(ky * kx);
          for (int i = 0; i < kx; ++i)
            for (int j = 0; j < ky; ++j)
              comp[j * kx + i] = c.braiding->at({va[i], vb[j]});
          cells[{a, b}] = enc(comp);
        }
    }
  }
  return l;
}

// ---- decorators and network models --------------------------------------

LawReport check_decorator(const Decorator& d, int n_bound) {
  LawReport r;
  FinCat sk = finset_skeleton(n_bound);
  std::map<Id, std::vector<Id>> el;
  std::map<Id, std::set<Id>> elset;
  for (const Id& o : sk.objects) {
    el[o] = d.elements(std::stoi(o));
    elset[o] = {el[o].begin(), el[o].end()};
  }
  for (const auto& [f, dc] : sk.morphisms) {
    FsFun ff = fs_dec(f);
    for (const Id& a : el[dc.dom]) {
      Id fa = d.act(ff, a);
      r.instance(elset[dc.cod].count(fa) != 0,
                 "decorator action lands in the target set: " + f + " @ " + a);
      if (sk.is_identity(f))
        r.instance(fa == a, "decorator preserves identities @ " + a);
    }
  }
  for (const auto& [gf, h] : sk.compose) {
    FsFun g = fs_dec(gf.first), f = fs_dec(gf.second), c = fs_dec(h);
    for (const Id& a : el[std::to_string(f.m)])
      r.instance(d.act(c, a) == d.act(g, d.act(f, a)),
                 "decorator functorial on (" + gf.first + ", " + gf.second +
                     ") @ " + a);
  }
  // naturality of the laxator on sums within the bound
  for (const auto& [f, fdc] : sk.morphisms)
    for (const auto& [g, gdc] : sk.morphisms) {
      FsFun ff = fs_dec(f), gg = fs_dec(g);
      if (ff.m + gg.m > n_bound || ff.n + gg.n > n_bound) {
        ++r.skipped;
        continue;
      }
      std::vector<int> sum(ff.m + gg.m);
      for (int i = 0; i < ff.m; ++i) sum[i] = ff.vals[i];
      for (int i = 0; i < gg.m; ++i) sum[ff.m + i] = ff.n + gg.vals[i];
      FsFun fg{ff.m + gg.m, ff.n + gg.n, sum};
      for (const Id& a : el[fdc.dom])
        for (const Id& b : el[gdc.dom])
          r.instance(d.act(fg, d.lax(ff.m, gg.m, a, b)) ==
                         d.lax(ff.n, gg.n, d.act(ff, a), d.act(gg, b)),
                     "laxator natural on (" + f + ", " + g + ") @ (" + a +
                         ", " + b + ")");
    }
  return r;
}

Decorator simple_graph_decorator() {
  Decorator d;
  d.name = "simple-graphs";
  d.elements = [](int n) { return all_graphs(n); };
  d.act = [](const FsFun& f, const Id& a) { return graph_push(f, a); };
  d.lax = [](int, int, const Id& a, const Id& b) { return graph_union(a, b); };
  d.unit = graph_from_mask(0, 0);
  return d;
}

namespace {

Id subset_from_mask(int n, unsigned mask) {
  Id s = "s" + std::to_string(n) + ":";
  for (int k = 0; k < n; ++k) s += (mask >> k) & 1u ? '1' : '0';
  return s;
}

std::pair<int, unsigned> subset_dec(const Id& s) {
  auto co = s.find(':');
  if (s.empty() || s[0] != 's' || co == Id::npos)
    throw ParseError("not a subset: " + s);
  int n = std::stoi(s.substr(1, co - 1));
  unsigned mask = 0;
  for (int k = 0; k < n; ++k)
    if (s[co + 1 + k] == '1') mask |= 1u << k;
  return {n, mask};
}

}  // namespace

Decorator subset_decorator() {
  Decorator d;
  d.name = "subsets";
  d.elements = [](int n) {
    std::vector<Id> out;
    for (unsigned m = 0; m < (1u << n); ++m)
      out.push_back(subset_from_mask(n, m));
    return out;
  };
  d.act = [](const FsFun& f, const Id& a) {
    auto [n, mask] = subset_dec(a);
    if (n != f.m) throw ShapeMismatch("subset arity: " + a);
    unsigned out = 0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) out |= 1u << f.vals[i];
    return subset_from_mask(f.n, out);
  };
  d.lax = [](int m, int n, const Id& a, const Id& b) {
    auto [_, ma] = subset_dec(a);
    auto [__, mb] = subset_dec(b);
    (void)_;
    (void)__;
    return subset_from_mask(m + n, ma | (mb << m));
  };
  d.unit = subset_from_mask(0, 0);
  return d;
}

LawReport check_monoid(const Monoid& m, bool require_commutative) {
  LawReport r;
  std::map<Id, int> idx;
  int E = static_cast<int>(m.elements.size());
  for (int i = 0; i < E; ++i) idx[m.elements[i]] = i;
  std::vector<int> mt(static_cast<std::size_t>(E) * E, -1);
  for (const auto& [ab, c] : m.mult) {
    auto ia = idx.find(ab.first), ib = idx.find(ab.second), ic = idx.find(c);
    if (ia == idx.end() || ib == idx.end() || ic == idx.end()) {
      r.fail("multiplication entry off the carrier: (" + ab.first + ", " +
             ab.second + ")");
      continue;
    }
    mt[static_cast<std::size_t>(ia->second) * E + ib->second] = ic->second;
  }
  for (int i = 0; i < E; ++i)
    for (int j = 0; j < E; ++j)
      r.instance(mt[static_cast<std::size_t>(i) * E + j] >= 0,
                 "product defined at (" + m.elements[i] + ", " +
                     m.elements[j] + ")");
  if (!r.ok()) return r;
  auto ui = idx.find(m.unit);
  r.instance(ui != idx.end(), "unit on the carrier: " + m.unit);
  if (ui == idx.end()) return r;
  int u = ui->second;
  for (int i = 0; i < E; ++i) {
    r.instance(mt[static_cast<std::size_t>(u) * E + i] == i,
               "left unit law at " + m.elements[i]);
    r.instance(mt[static_cast<std::size_t>(i) * E + u] == i,
               "right unit law at " + m.elements[i]);
  }
  std::size_t bad = 0;
  std::string witness;
  for (int i = 0; i < E && bad == 0; ++i)
    for (int j = 0; j < E && bad == 0; ++j)
      for (int k = 0; k < E; ++k) {
        int lhs = mt[static_cast<std::size_t>(
                         mt[static_cast<std::size_t>(i) * E + j]) *
                         E +
                     k];
        int rhs = mt[static_cast<std::size_t>(i) * E +
                     mt[static_cast<std::size_t>(j) * E + k]];
        if (lhs != rhs) {
          ++bad;
          witness = "associativity fails at (" + m.elements[i] + ", " +
                    m.elements[j] + ", " + m.elements[k] + ")";
          break;
        }
      }
  r.checked += static_cast<std::size_t>(E) * E * E;
  if (bad) r.fail(witness);
  if (require_commutative)
    for (int i = 0; i < E; ++i)
      for (int j = i + 1; j < E; ++j)
        r.instance(mt[static_cast<std::size_t>(i) * E + j] ==
                       mt[static_cast<std::size_t>(j) * E + i],
                   "commutativity at (" + m.elements[i] + ", " +
                       m.elements[j] + ")");
  return r;
}

LawReport check_network_model(const NetworkModel& m) {
  LawReport r;
  for (const auto& [n, mon] : m.monoids)
    r.absorb(check_monoid(mon), "monoid at " + n + ": ");
  for (const auto& [mn, comp] : m.laxator) {
    auto im = m.monoids.find(mn.first);
    auto in = m.monoids.find(mn.second);
    int msz = std::stoi(mn.first), nsz = std::stoi(mn.second);
    auto it = m.monoids.find(std::to_string(msz + nsz));
    if (im == m.monoids.end() || in == m.monoids.end() ||
        it == m.monoids.end()) {
      ++r.skipped;
      continue;
    }
    const Monoid& A = im->second;
    const Monoid& B = in->second;
    const Monoid& C = it->second;
    r.instance(comp.count({A.unit, B.unit}) != 0 &&
                   comp.at({A.unit, B.unit}) == C.unit,
               "laxator preserves units at (" + mn.first + ", " + mn.second +
                   ")");
    for (const Id& a : A.elements)
      for (const Id& a2 : A.elements)
        for (const Id& b : B.elements)
          for (const Id& b2 : B.elements)
            r.instance(
                comp.at({A.mult.at({a, a2}), B.mult.at({b, b2})}) ==
                    C.mult.at({comp.at({a, b}), comp.at({a2, b2})}),
                "laxator multiplicative at (" + mn.first + ", " + mn.second +
                    ") @ (" + a + ", " + a2 + ", " + b + ", " + b2 + ")");
  }
  return r;
}

NetworkModel decorator_to_network_model(const Decorator& d, int n_bound) {
  if (n_bound < 0 || n_bound > 3)
    throw SizeLimitExceeded("decorator_to_network_model: bound out of range");
  NetworkModel out;
  for (int n = 0; n <= n_bound; ++n) {
    Monoid mon;
    mon.elements = d.elements(n);
    std::vector<int> fold(2 * n);
    for (int i = 0; i < n; ++i) {
      fold[i] = i;
      fold[n + i] = i;
    }
    FsFun nab{2 * n, n, fold};
    FsFun bang{0, n, {}};
    for (const Id& a : mon.elements)
      for (const Id& b : mon.elements)
        mon.mult[{a, b}] = d.act(nab, d.lax(n, n, a, b));
    mon.unit = d.act(bang, d.unit);
    out.monoids[std::to_string(n)] = std::move(mon);
  }
  for (int m = 0; m <= n_bound; ++m)
    for (int n = 0; n <= n_bound; ++n) {
      if (m + n > n_bound) continue;
      auto& comp = out.laxator[{std::to_string(m), std::to_string(n)}];
      for (const Id& a : out.monoids.at(std::to_string(m)).elements)
        for (const Id& b : out.monoids.at(std::to_string(n)).elements)
          comp[{a, b}] = d.lax(m, n, a, b);
    }
  return out;
}

}  // namespace catkit
