#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catkit/moncat.hpp"
#include "catkit/zoo.hpp"
#include "support/cats.hpp"

using namespace catkit;
using namespace testcats;

TEST_CASE("trivial monoidal structure on the terminal category") {
  FinCat one = terminal_cat();
  MonoidalData m;
  m.base = one;
  m.unit = "*";
  m.tensor_obj[{"*", "*"}] = "*";
  m.tensor_mor[{"1*", "1*"}] = "1*";
  m.associator[{"*", "*", "*"}] = "1*";
  m.left_unitor["*"] = "1*";
  m.right_unitor["*"] = "1*";
  CHECK(check_monoidal(m).ok());
}

TEST_CASE("cocartesian witnesses on posets with joins") {
  for (const FinCat& c : {walking_arrow(), square_poset(), chain3()}) {
    auto w = find_cocartesian(c);
    REQUIRE(w.has_value());
    CHECK(check_cocartesian_witness(*w).ok());
    auto r = check_monoidal(w->monoidal);
    INFO(r.summary());
    CHECK(r.ok());
    CHECK(w->monoidal.symmetric);
    CHECK(w->monoidal.total());
  }
  auto w = find_cocartesian(square_poset());
  CHECK(w->monoidal.tensor_of("01", "10") == "11");
  CHECK(w->monoidal.tensor_of("00", "10") == "10");  // unit strict
  CHECK(w->initial == "00");
}

TEST_CASE("categories without coproducts or initial object") {
  CHECK(!find_cocartesian(discrete2()).has_value());
  CHECK(!find_cocartesian(z2_cat()).has_value());
}

TEST_CASE("FinSet skeleton: category laws and counts") {
  FinCat s2 = finset_skeleton(2);
  CHECK(check_category(s2).ok());
  CHECK(s2.objects.size() == 3);
  CHECK(s2.morphisms.size() == 11);  // sum of n^m over m,n <= 2
  FinCat s3 = finset_skeleton(3);
  CHECK(check_category(s3).ok());
  CHECK(s3.morphisms.size() == 60);
}

TEST_CASE("skeleton witness: truncated coproducts, strict within bound") {
  CHECK(!find_cocartesian(finset_skeleton(2)).has_value());  // 2+2 exits
  auto w = finset_cocartesian(2);
  CHECK(check_cocartesian_witness(w).ok());
  auto r = check_monoidal(w.monoidal);
  INFO(r.summary());
  CHECK(r.ok());
  CHECK(r.skipped > 0);  // truncation leaves out-of-universe instances
  CHECK(w.monoidal.tensor_of("1", "1") == "2");
  CHECK(w.monoidal.tob("2", "1") == nullptr);
  // canonical unit choice keeps unitors identities
  CHECK(w.monoidal.left_unitor.at("2") == finset_skeleton(2).id("2"));
  // associativity strict with left-offset injections
  CHECK(*w.monoidal.alpha("1", "1", "0") ==
        finset_skeleton(2).id("2"));
  // braiding on (1,1) is the swap
  CHECK(*w.monoidal.braid("1", "1") == "f2>2:10");
  // codiagonal of 1 is the fold 2 -> 1
  CHECK(w.nabla("1") == "f2>1:00");
}

TEST_CASE("copair mediators are unique and correct") {
  auto w = finset_cocartesian(3);
  const FinCat& B = w.monoidal.base;
  Id h = copair(w, "1", "2", "f1>2:1", "f2>2:01");
  CHECK(B.dom(h) == "3");
  CHECK(B.cod(h) == "2");
  CHECK(h == "f3>2:101");
}

TEST_CASE("mutations in monoidal data are detected") {
  auto w = finset_cocartesian(3);
  const FinCat& B = w.monoidal.base;

  SUBCASE("pentagon broken by a nonidentity automorphism on the associator") {
    MonoidalData m = w.monoidal;
    m.associator[{"1", "1", "1"}] = "f3>3:102";  // swap of 3
    CHECK(!check_monoidal(m).ok());
  }
  SUBCASE("tensor_mor redirected") {
    MonoidalData m = w.monoidal;
    m.tensor_mor[{"f1>1:0", "f1>2:0"}] = B.id("3");
    CHECK(!check_monoidal(m).ok());
  }
  SUBCASE("braiding mutated to identity") {
    MonoidalData m = w.monoidal;
    (*m.braiding)[{"1", "1"}] = B.id("2");
    CHECK(!check_monoidal(m).ok());
  }
  SUBCASE("unitor mutated") {
    MonoidalData m = w.monoidal;
    m.left_unitor["2"] = "f2>2:10";
    CHECK(!check_monoidal(m).ok());
  }
}

TEST_CASE("tensor_functor materializes on total structures") {
  auto w = find_cocartesian(walking_arrow());
  FinFunctor t = tensor_functor(w->monoidal);
  CHECK(check_functor(t).ok());
  CHECK(t.obj_map.at(enc2("0", "1")) == "1");
}

TEST_CASE("monoidal functors: identity, strict inclusion, mutation") {
  auto wa = find_cocartesian(walking_arrow());
  auto sq = find_cocartesian(square_poset());
  REQUIRE(wa);
  REQUIRE(sq);

  MonoidalFunctorData idf;
  idf.underlying = identity_functor(walking_arrow());
  for (const auto& [xy, o] : wa->monoidal.tensor_obj)
    idf.laxator[xy] = walking_arrow().id(o);
  idf.unit_mor = walking_arrow().id("0");
  idf.strength = Strength::strict_;
  CHECK(check_monoidal_functor(idf, wa->monoidal, wa->monoidal).ok());

  // inclusion of the walking arrow into the square poset along 0 -> 00, 1 -> 11
  MonoidalFunctorData inc;
  inc.underlying.source = walking_arrow();
  inc.underlying.target = square_poset();
  inc.underlying.obj_map = {{"0", "00"}, {"1", "11"}};
  inc.underlying.mor_map = {
      {"10", "100"}, {"11", "111"}, {"le:0<1", "le:00<11"}};
  REQUIRE(check_functor(inc.underlying).ok());
  for (const auto& [xy, o] : wa->monoidal.tensor_obj)
    inc.laxator[xy] = square_poset().id(inc.underlying.ob(o));
  inc.unit_mor = square_poset().id("00");
  inc.strength = Strength::strict_;
  CHECK(check_monoidal_functor(inc, wa->monoidal, sq->monoidal).ok());

  MonoidalFunctorData bad = inc;
  bad.laxator[{"1", "1"}] = "le:00<11";  // wrong domain
  CHECK(!check_monoidal_functor(bad, wa->monoidal, sq->monoidal).ok());

  NatTrans t = identity_nat(idf.underlying);
  CHECK(check_monoidal_nat_trans(t, idf, idf, wa->monoidal, wa->monoidal)
            .ok());
}
