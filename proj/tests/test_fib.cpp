#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catkit/fib.hpp"
#include "support/cats.hpp"
#include "support/fib_fixtures.hpp"

using namespace catkit;
using namespace testcats;

TEST_CASE("projection fibrations pass, both directions") {
  for (FibDirection d : {FibDirection::fibration, FibDirection::opfibration}) {
    ClovenFibration p = projection_fib(chain3(), z2_cat(), d);
    auto r = check_fibration(p);
    INFO(r.summary());
    CHECK(r.ok());
  }
  ClovenFibration q =
      projection_fib(walking_arrow(), walking_arrow(), FibDirection::fibration);
  CHECK(check_fibration(q).ok());
}

TEST_CASE("cartesianness by enumeration") {
  ClovenFibration p =
      projection_fib(walking_arrow(), walking_arrow(), FibDirection::fibration);
  // identities are always cartesian
  for (const Id& o : p.total.objects) CHECK(is_cartesian(p, p.total.id(o)));
  // identity fibre component over any base morphism is cartesian
  CHECK(is_cartesian(p, enc2("le:0<1", "10")));
  // a non-iso fibre component is not
  CHECK(!is_cartesian(p, enc2("le:0<1", "le:0<1")));
  // vertical non-iso is not
  CHECK(!is_cartesian(p, enc2("10", "le:0<1")));

  ClovenFibration q =
      projection_fib(walking_arrow(), walking_arrow(), FibDirection::opfibration);
  CHECK(is_cocartesian(q, enc2("le:0<1", "11")));
  CHECK(!is_cocartesian(q, enc2("le:0<1", "le:0<1")));
}

TEST_CASE("fibres and reindexing of the projection") {
  ClovenFibration p = projection_fib(chain3(), z2_cat(), FibDirection::fibration);
  FinCat f1 = fibre(p, "1");
  CHECK(check_category(f1).ok());
  CHECK(find_isomorphism(f1, z2_cat()).has_value());

  FinFunctor idre = reindex(p, chain3().id("1"));
  CHECK(idre == identity_functor(f1));

  FinFunctor re = reindex(p, "le:0<1");
  CHECK(check_functor(re).ok());
  CHECK(re.ob(enc2("1", "*")) == enc2("0", "*"));
  CHECK(re.mor(enc2("11", "s")) == enc2("10", "s"));
}

TEST_CASE("make_cloven recovers the canonical cleavage") {
  ClovenFibration p = projection_fib(chain3(), z2_cat(), FibDirection::fibration);
  ClovenFibration q = make_cloven(p.proj, FibDirection::fibration);
  CHECK(q.cleavage == p.cleavage);  // lex-least picks the identity component
  q.split = true;
  CHECK(check_fibration(q).ok());
}

TEST_CASE("re-cloven fibration passes but loses splitness") {
  ClovenFibration p = projection_fib(chain3(), z2_cat(), FibDirection::fibration);
  p.cleavage[{"le:0<1", enc2("1", "*")}] = enc2("le:0<1", "s");
  p.split = false;
  auto r = check_fibration(p);
  INFO(r.summary());
  CHECK(r.ok());
  p.split = true;
  CHECK(!check_fibration(p).ok());
}

TEST_CASE("missing and broken lifts are reported") {
  ClovenFibration p = projection_fib(chain3(), z2_cat(), FibDirection::fibration);
  SUBCASE("missing") {
    p.cleavage.erase({"le:0<1", enc2("1", "*")});
    auto r = check_fibration(p);
    CHECK(!r.ok());
    CHECK(r.violations.front().find("missing lift") != std::string::npos);
  }
  SUBCASE("wrong base morphism") {
    p.cleavage[{"le:0<2", enc2("2", "*")}] = enc2("le:0<1", "e");
    CHECK(!check_fibration(p).ok());
  }
}

TEST_CASE("fibred 1-cells") {
  ClovenFibration p =
      projection_fib(chain3(), walking_arrow(), FibDirection::fibration);

  Fibred1Cell idc;
  idc.source = p;
  idc.target = p;
  idc.top = identity_functor(p.total);
  idc.bottom = identity_functor(p.base);
  CHECK(check_fibred_1cell(idc).ok());

  // collapse the fibre coordinate onto 0: still fibred
  Fibred1Cell col = idc;
  for (auto& [o, img] : col.top.obj_map) img = enc2(dec(o, 2)[0], "0");
  for (auto& [m, img] : col.top.mor_map)
    img = enc2(dec(m, 2)[0], "10");
  auto r = check_fibred_1cell(col);
  INFO(r.summary());
  CHECK(r.ok());

  // into the trivial fibration over the point: projection square commutes
  // but cartesian lifts are not preserved
  ClovenFibration triv;
  triv.total = p.total;
  triv.base = terminal_cat();
  triv.proj = constant_functor(p.total, triv.base, "*");
  for (const Id& o : triv.total.objects) triv.cleavage[{"1*", o}] = triv.total.id(o);
  REQUIRE(check_fibration(triv).ok());

  Fibred1Cell bad;
  bad.source = p;
  bad.target = triv;
  bad.top = identity_functor(p.total);
  bad.bottom = constant_functor(p.base, triv.base, "*");
  auto rb = check_fibred_1cell(bad);
  CHECK(!rb.ok());
  CHECK(rb.violations.front().find("lift preservation") != std::string::npos);
}

TEST_CASE("fibred 2-cells project correctly") {
  ClovenFibration p = projection_fib(z2_cat(), z2_cat(), FibDirection::fibration);
  FinFunctor idt = identity_functor(p.total);
  FinFunctor idb = identity_functor(p.base);

  NatTrans alpha;  // conjugation-free s-translation downstairs
  alpha.source_fun = idb;
  alpha.target_fun = idb;
  alpha.components = {{"*", "s"}};
  REQUIRE(check_nat_trans(alpha).ok());

  NatTrans beta;
  beta.source_fun = idt;
  beta.target_fun = idt;
  beta.components = {{enc2("*", "*"), enc2("s", "e")}};
  REQUIRE(check_nat_trans(beta).ok());
  CHECK(check_fibred_2cell(beta, alpha, p, p).ok());

  NatTrans mismatched = beta;
  mismatched.components[enc2("*", "*")] = enc2("e", "s");  // over e, not s
  CHECK(!check_fibred_2cell(mismatched, alpha, p, p).ok());
}

TEST_CASE("monoidal fibration: product of monoidal categories") {
  auto w = find_cocartesian(walking_arrow());
  REQUIRE(w.has_value());
  MonoidalFibrationData m;
  m.carrier = projection_fib(walking_arrow(), z2_cat(), FibDirection::fibration);
  m.base_monoidal = w->monoidal;
  m.total_monoidal = product_monoidal(w->monoidal, z2_monoidal());
  auto r = check_monoidal_fibration(m);
  INFO(r.summary());
  CHECK(r.ok());

  SUBCASE("total tensor mutated on one morphism pair") {
    Id k = enc2("le:0<1", "e"), l = enc2("10", "e");
    REQUIRE(m.total_monoidal.tmor(k, l) != nullptr);
    m.total_monoidal.tensor_mor[{k, l}] = enc2("le:0<1", "s");
    CHECK(!check_monoidal_fibration(m).ok());
  }
  SUBCASE("unit displaced") {
    m.total_monoidal.unit = enc2("1", "*");
    CHECK(!check_monoidal_fibration(m).ok());
  }
}
