#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catkit/indexed.hpp"
#include "support/cats.hpp"
#include "support/indexed_fixtures.hpp"

using namespace catkit;
using namespace testcats;

TEST_CASE("strict fixtures satisfy the pseudofunctor laws") {
  for (Variance v : {Variance::covariant, Variance::contravariant}) {
    auto r = check_pseudofunctor(constant_indexed(square_poset(),
                                                  walking_arrow(), v));
    INFO(r.summary());
    CHECK(r.ok());
  }
  CHECK(check_pseudofunctor(constant_indexed(z2_cat(), chain3(),
                                             Variance::covariant))
            .ok());
  CHECK(check_pseudofunctor(upset_indexed(square_poset())).ok());
  CHECK(check_pseudofunctor(homdisc_indexed(chain3(), "0")).ok());
}

TEST_CASE("coboundary twist is coherent but not strict") {
  IndexedCat m = z2_twisted_chain();
  auto r = check_pseudofunctor(m);
  INFO(r.summary());
  CHECK(r.ok());
  CHECK(m.delta_at("le:1<2", "le:0<1", "*") == "s");

  IndexedCat claimed = m;
  claimed.strict = true;  // nonidentity compositor components get flagged
  CHECK(!check_pseudofunctor(claimed).ok());
}

TEST_CASE("pseudofunctor mutations are detected") {
  IndexedCat m = z2_twisted_chain();

  SUBCASE("single compositor component flipped") {
    // needs a composable triple of nonidentity arrows to bite, hence chain4
    IndexedCat m4 = z2_twisted(chain4(), {{"le:0<1", "s"}, {"le:2<3", "s"}});
    REQUIRE(check_pseudofunctor(m4).ok());
    Id& comp = m4.compositor.at({"le:1<2", "le:0<1"}).components.at("*");
    comp = comp == "e" ? "s" : "e";
    CHECK(!check_pseudofunctor(m4).ok());
  }
  SUBCASE("unitor flipped") {
    m.unitor.at("1").components["*"] = "s";
    CHECK(!check_pseudofunctor(m).ok());
  }
  SUBCASE("missing reindex") {
    m.reindex.erase("le:0<2");
    CHECK(!check_pseudofunctor(m).ok());
  }
  SUBCASE("reindex with wrong endpoints") {
    IndexedCat u = upset_indexed(square_poset());
    u.reindex["le:00<11"] = identity_functor(u.fib("00"));
    CHECK(!check_pseudofunctor(u).ok());
  }
  SUBCASE("missing compositor entry") {
    m.compositor.erase({"le:1<2", "le:0<1"});
    CHECK(!check_pseudofunctor(m).ok());
  }
}

TEST_CASE("opposite swaps variance and is an involution") {
  IndexedCat u = upset_indexed(square_poset());
  IndexedCat o = opposite_indexed(u);
  CHECK(o.variance == Variance::covariant);
  auto r = check_pseudofunctor(o);
  INFO(r.summary());
  CHECK(r.ok());
  CHECK(opposite_indexed(o) == u);

  IndexedCat t = opposite_indexed(z2_twisted_chain());
  CHECK(check_pseudofunctor(t).ok());
}

TEST_CASE("identity 1-cells and 2-cells") {
  for (const IndexedCat& m :
       {upset_indexed(square_poset()), homdisc_indexed(chain3(), "0"),
        z2_twisted_chain()}) {
    Indexed1Cell c = identity_1cell(m);
    auto r = check_indexed_1cell(c);
    INFO(r.summary());
    CHECK(r.ok());
    auto r2 = check_indexed_2cell(identity_2cell(c));
    INFO(r2.summary());
    CHECK(r2.ok());
  }
}

namespace {

// endo-1-cell of the twisted fixture whose squares carry a sign that is
// multiplicative along the base
Indexed1Cell sign_cell(const IndexedCat& m, std::map<Id, Id> sign) {
  Indexed1Cell c = identity_1cell(m);
  for (auto& [f, s] : c.squares)
    if (sign.count(f)) s.components["*"] = sign.at(f);
  return c;
}

}  // namespace

TEST_CASE("nonidentity squares: multiplicative signs pass, others fail") {
  IndexedCat m = z2_twisted_chain();
  Indexed1Cell good =
      sign_cell(m, {{"le:0<1", "s"}, {"le:1<2", "e"}, {"le:0<2", "s"}});
  auto r = check_indexed_1cell(good);
  INFO(r.summary());
  CHECK(r.ok());

  Indexed1Cell bad =
      sign_cell(m, {{"le:0<1", "s"}, {"le:1<2", "e"}, {"le:0<2", "e"}});
  CHECK(!check_indexed_1cell(bad).ok());
}

TEST_CASE("2-cell between the identity and a sign cell") {
  IndexedCat m = z2_twisted_chain();
  Indexed1Cell id1 = identity_1cell(m);
  Indexed1Cell sgn =
      sign_cell(m, {{"le:0<1", "s"}, {"le:1<2", "e"}, {"le:0<2", "s"}});

  Indexed2Cell t;
  t.source = id1;
  t.target = sgn;
  t.base_nat = identity_nat(id1.base_fun);
  t.modification["0"] = make_modification(t, "0", {{"*", "e"}});
  t.modification["1"] = make_modification(t, "1", {{"*", "s"}});
  t.modification["2"] = make_modification(t, "2", {{"*", "s"}});
  auto r = check_indexed_2cell(t);
  INFO(r.summary());
  CHECK(r.ok());

  Indexed2Cell bad = t;
  bad.modification.at("1").components["*"] = "e";
  CHECK(!check_indexed_2cell(bad).ok());
}

TEST_CASE("lax monoidal component shapes over a join base") {
  LaxMonoidalIndexed l = z2_over_join();
  auto r = check_lax_monoidal_components(l);
  INFO(r.summary());
  CHECK(r.ok());

  SUBCASE("laxator loses functoriality") {
    l.laxator.begin()->second.mor[{"s", "s"}] = "s";
    CHECK(!check_lax_monoidal_components(l).ok());
  }
  SUBCASE("missing laxator cell component") {
    l.laxator_cells.begin()->second.clear();
    CHECK(!check_lax_monoidal_components(l).ok());
  }
  SUBCASE("missing omega table") {
    l.omega.clear();
    CHECK(!check_lax_monoidal_components(l).ok());
  }
  SUBCASE("unit object outside the unit fibre") {
    l.unit_object = "nope";
    CHECK(!check_lax_monoidal_components(l).ok());
  }
}
