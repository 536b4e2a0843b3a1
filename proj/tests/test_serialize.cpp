#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catkit/groth.hpp"
#include "catkit/serialize.hpp"
#include "support/cats.hpp"
#include "support/indexed_fixtures.hpp"

using namespace catkit;
using namespace testcats;

namespace {

// dump -> load -> compare, and dump again for the bit-exact check
template <typename T, typename L>
void roundtrip(const T& x, L&& loader, const char* kind) {
  std::string text = dump(x);
  CAPTURE(kind);
  CHECK(entity_kind(text) == kind);
  T back = loader(text);
  CHECK(back == x);
  CHECK(dump(back) == text);
}

}  // namespace

TEST_CASE("categories, functors, and transformations round trip") {
  for (const FinCat& c : {walking_arrow(), z2_cat(), square_poset(),
                          terminal_cat(), graph_fibre(2)})
    roundtrip(c, load_fincat, "fincat");

  roundtrip(identity_functor(z2_cat()), load_functor, "functor");
  FinFunctor k = constant_functor(walking_arrow(), z2_cat(), "*");
  roundtrip(k, load_functor, "functor");
  roundtrip(identity_nat(k), load_nat_trans, "nat_trans");
}

TEST_CASE("monoidal structures and witnesses round trip") {
  roundtrip(z2_monoidal(), load_monoidal, "monoidal");
  roundtrip(join_monoidal(), load_monoidal, "monoidal");
  roundtrip(wiring_category({2}, 1), load_monoidal, "monoidal");

  roundtrip(finset_cocartesian(2), load_cocartesian, "cocartesian");
  roundtrip(opfinset_cartesian(2), load_cocartesian, "cocartesian");
  CocartesianWitness w = find_cocartesian(square_poset()).value();
  roundtrip(w, load_cocartesian, "cocartesian");
}

TEST_CASE("indexed categories keep their structure cells") {
  std::map<Id, Id> signs = {{"le:0<1", "s"}};
  for (const IndexedCat& m :
       {z2_twisted(walking_arrow(), signs), graph_opindexed(2).carrier})
    roundtrip(m, load_indexed, "indexed");
}

TEST_CASE("fibrations and monoidal fibrations round trip") {
  GrothResult g = grothendieck(graph_opindexed(2).carrier);
  roundtrip(g.fibration, load_fibration, "fibration");
  roundtrip(vertex_opfibration(2), load_monoidal_fibration,
            "monoidal_fibration");
}

TEST_CASE("lax monoidal indexed structures round trip") {
  roundtrip(z2_over_join(), load_lax_monoidal, "lax_monoidal_indexed");
  roundtrip(graph_opindexed(2), load_lax_monoidal, "lax_monoidal_indexed");
  FinCat wa = walking_arrow();
  roundtrip(slice_opindexed(wa, find_cocartesian(wa).value()),
            load_lax_monoidal, "lax_monoidal_indexed");
  roundtrip(family_fibration(z2_monoidal(), 2), load_lax_monoidal,
            "lax_monoidal_indexed");
  roundtrip(dds_total_category({2}, 1, 1).indexed, load_lax_monoidal,
            "lax_monoidal_indexed");

  CocartesianWitness w = find_cocartesian(wa).value();
  roundtrip(global_to_fibrewise(z2_over_join(), w), load_fibrewise,
            "fibrewise_monoidal");
}

TEST_CASE("monoids and network models round trip") {
  NetworkModel nm = decorator_to_network_model(subset_decorator(), 2);
  roundtrip(nm, load_network_model, "network_model");
  roundtrip(nm.monoids.at("2"), load_monoid, "monoid");
}

TEST_CASE("malformed input is rejected with a parse error") {
  CHECK_THROWS_AS(load_fincat("not json"), ParseError);
  CHECK_THROWS_AS(entity_kind("{}"), ParseError);
  CHECK_THROWS_AS(load_fincat(dump(z2_monoidal())), ParseError);  // wrong kind
  CHECK_THROWS_AS(load_fincat("{\"kind\":\"fincat\",\"objects\":[]}"),
                  ParseError);  // missing sections
  // structurally broken tables surface as parse errors, not crashes
  CHECK_THROWS_AS(
      load_monoidal(
          "{\"kind\":\"monoidal\",\"base\":{\"objects\":[],\"morphisms\":{},"
          "\"identity\":{},\"compose\":{}},\"unit\":\"x\",\"tensor_obj\":"
          "{\"bad\":\"x\"},\"tensor_mor\":{},\"associator\":{},"
          "\"left_unitor\":{},\"right_unitor\":{},\"symmetric\":false}"),
      ParseError);
}

TEST_CASE("reports render as text and as one-witness-per-line records") {
  LawReport r;
  r.checked = 3;
  r.fail("broken thing");
  std::string rec = report_records(r);
  CHECK(rec.find("witness\tbroken thing\n") != std::string::npos);
  CHECK(rec.find("result\tfail\n") != std::string::npos);
  CHECK(report_text(r).find("broken thing") != std::string::npos);

  LawReport ok;
  ok.checked = 5;
  CHECK(report_records(ok).find("result\tpass\n") != std::string::npos);
}
