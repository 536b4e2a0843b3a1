#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catkit/groth.hpp"
#include "catkit/zoo.hpp"
#include "support/cats.hpp"
#include "support/indexed_fixtures.hpp"

using namespace catkit;
using namespace testcats;

TEST_CASE("opposite skeleton carries products as coproducts") {
  CocartesianWitness w = opfinset_cartesian(3);
  CHECK(w.monoidal.tensor_of("2", "1") == "2");
  CHECK(w.monoidal.tensor_of("3", "1") == "3");
  CHECK(w.monoidal.tensor_obj.count({"2", "2"}) == 0);  // 4 > bound

  auto r = check_monoidal(w.monoidal);
  INFO(r.summary());
  CHECK(r.ok());

  // fold after either coprojection is the identity
  for (const Id& x : {Id("1"), Id("2"), Id("3")}) {
    if (!w.monoidal.tob(x, x)) continue;
    auto [i1, i2] = w.inj(x, x);
    CHECK(w.monoidal.base.comp(w.nabla(x), i1) == w.monoidal.base.id(x));
    CHECK(w.monoidal.base.comp(w.nabla(x), i2) == w.monoidal.base.id(x));
  }
}

TEST_CASE("graph fibres and pushforwards") {
  CHECK(graph_fibre(0).objects.size() == 1);
  CHECK(graph_fibre(1).objects.size() == 2);  // loop or no loop
  CHECK(graph_fibre(2).objects.size() == 16);

  auto r = check_category(graph_fibre(2));
  INFO(r.summary());
  CHECK(r.ok());

  // collapsing both vertices sends the edge to a loop
  Id edge = graph_id({2, {{0, 1}}});
  Id loop = graph_id({1, {{0, 0}}});
  CHECK(graph_push(fs_dec(fs_fun(2, 1, {0, 0})), edge) == loop);
}

TEST_CASE("graph-indexed structure passes the lax monoidal laws") {
  LaxMonoidalIndexed l = graph_opindexed(2);
  auto r = check_lax_monoidal(l);
  INFO(r.summary());
  CHECK(r.ok());

  // disjoint union with left offset: loop on 1 + loop on 1 -> two loops on 2
  Id loop = graph_id({1, {{0, 0}}});
  CHECK(l.mu("1", "1").ob(loop, loop) == graph_id({2, {{0, 0}, {1, 1}}}));
  Id edge = graph_id({2, {{0, 1}}});
  CHECK(l.mu("2", "0").ob(edge, graph_id({0, {}})) == edge);
  CHECK(l.unit_object == graph_id({0, {}}));
  CHECK_THROWS_AS(graph_opindexed(3), SizeLimitExceeded);
}

TEST_CASE("vertex opfibration: totals, lifts, and the monoidal laws") {
  MonoidalFibrationData v = vertex_opfibration(2);
  CHECK(v.carrier.total.objects.size() == 19);  // 1 + 2 + 16

  auto r = check_monoidal_fibration(v);
  INFO(r.summary());
  CHECK(r.ok());

  // cocartesian lift along the vertex collapse pushes the edge to a loop
  Id edge = graph_id({2, {{0, 1}}});
  Id loop = graph_id({1, {{0, 0}}});
  Id f = fs_fun(2, 1, {0, 0});
  Id m = v.carrier.lift(f, groth_obj("2", edge));
  CHECK(v.carrier.total.cod(m) == groth_obj("1", loop));
}

TEST_CASE("slice fibres over the walking arrow and the square poset") {
  FinCat wa = walking_arrow();
  CocartesianWitness w = find_cocartesian(wa).value();
  LaxMonoidalIndexed sl = slice_opindexed(wa, w);
  CHECK(sl.carrier.fib("0").objects.size() == 1);
  CHECK(sl.carrier.fib("1").objects.size() == 2);
  auto r = check_lax_monoidal(sl);
  INFO(r.summary());
  CHECK(r.ok());

  FinCat sq = square_poset();
  CocartesianWitness ws = find_cocartesian(sq).value();
  LaxMonoidalIndexed sls = slice_opindexed(sq, ws);
  CHECK(sls.carrier.fib("11").objects.size() == 4);
  auto rs = check_lax_monoidal(sls);
  INFO(rs.summary());
  CHECK(rs.ok());
}

TEST_CASE("family fibration: powers of the value category, pointwise tensor") {
  MonoidalData c = join_monoidal();
  LaxMonoidalIndexed fam = family_fibration(c, 2);
  CHECK(fam.carrier.fib("1").objects.size() == c.base.objects.size());
  CHECK(fam.carrier.fib("2").objects.size() ==
        c.base.objects.size() * c.base.objects.size());
  CHECK(fam.carrier.fib("1").morphisms.size() == c.base.morphisms.size());

  auto r = check_lax_monoidal(fam);
  INFO(r.summary());
  CHECK(r.ok());

  // pointwise tensor on singleton families agrees with the value tensor
  CHECK(fam.mu("1", "1").ob(enc({"0"}), enc({"1"})) ==
        enc({c.tensor_of("0", "1")}));

  LaxMonoidalIndexed fz = family_fibration(z2_monoidal(), 2);
  CHECK(fz.carrier.fib("2").morphisms.size() == 4);  // |C|^2 arrows
  CHECK(fz.mu("1", "1").mr(enc({"s"}), enc({"s"})) == enc({"e"}));
  auto rz = check_lax_monoidal(fz);
  INFO(rz.summary());
  CHECK(rz.ok());
}

TEST_CASE("decorators are functorial with natural laxators") {
  for (const Decorator& d : {simple_graph_decorator(), subset_decorator()}) {
    INFO(d.name);
    auto r = check_decorator(d, 3);
    INFO(r.summary());
    CHECK(r.ok());
  }
  Decorator g = simple_graph_decorator();
  CHECK(g.elements(1).size() == 2);
  // broken action: drops edges under every non-identity map
  Decorator bad = g;
  bad.act = [](const FsFun& f, const Id& a) {
    GraphObj src = graph_dec(a);
    bool ident = true;
    for (int i = 0; i < f.m; ++i)
      if (f.vals[i] != i) ident = false;
    if (ident && f.m == f.n) return a;
    return graph_id({f.n, {}});
  };
  CHECK(!check_decorator(bad, 2).ok());
}

TEST_CASE("network models from decorators") {
  NetworkModel nm = decorator_to_network_model(simple_graph_decorator(), 3);
  auto r = check_network_model(nm);
  INFO(r.summary());
  CHECK(r.ok());

  for (const auto& [n, mon] : nm.monoids) {
    INFO("monoid at " << n);
    CHECK(check_monoid(mon, /*require_commutative=*/true).ok());
    for (const Id& a : mon.elements) CHECK(mon.mult.at({a, a}) == a);
  }
  CHECK(nm.monoids.at("1").elements.size() == 2);
  CHECK(nm.monoids.at("2").unit == graph_id({2, {}}));
  // overlaying two single edges gives the union
  Id e01 = graph_id({2, {{0, 1}}});
  Id e10 = graph_id({2, {{1, 0}}});
  CHECK(nm.monoids.at("2").mult.at({e01, e10}) ==
        graph_id({2, {{0, 1}, {1, 0}}}));

  NetworkModel sm = decorator_to_network_model(subset_decorator(), 3);
  CHECK(check_network_model(sm).ok());
  CHECK(!(sm == nm));  // distinct decorators give distinct models
}
