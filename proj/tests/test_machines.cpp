#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catkit/groth.hpp"
#include "catkit/zoo.hpp"

using namespace catkit;

namespace {

const Box kBit{{2}, {2}};  // one binary input port, one binary output port

MooreMachine toggle() {
  MooreMachine m;
  m.box = kBit;
  m.states = 2;
  m.update = {{1, 0}, {1, 0}};  // next state = 1 - input
  m.readout = {0, 1};
  return m;
}

// close the box by feeding its own output back into its input
WiringDiagram feedback_loop() {
  WiringDiagram w;
  w.dom = kBit;
  w.cod = {{}, {2}};
  w.in_route = {{false, 0}};
  w.out_route = {0};
  return w;
}

}  // namespace

TEST_CASE("wiring diagrams: ids, composition, parallel placement") {
  WiringDiagram idw = wiring_identity(kBit);
  CHECK(wiring_dec(wiring_id(idw)) == idw);
  CHECK(wiring_compose(idw, idw) == idw);

  WiringDiagram fb = feedback_loop();
  CHECK(wiring_dec(wiring_id(fb)) == fb);
  CHECK(wiring_compose(fb, idw) == fb);
  CHECK(wiring_compose(wiring_identity(fb.cod), fb) == fb);

  // braids compose to the identity
  Box closed{{}, {2}};
  WiringDiagram b = wiring_braid(kBit, closed);
  CHECK(wiring_compose(wiring_braid(closed, kBit), b) ==
        wiring_identity(wiring_parallel(wiring_identity(kBit),
                                        wiring_identity(closed))
                            .dom));

  CHECK_THROWS_AS(wiring_compose(fb, fb), ShapeMismatch);
}

TEST_CASE("the wiring category is symmetric monoidal") {
  MonoidalData wc = wiring_category({2}, 2);
  CHECK(wc.base.objects.size() == 9);
  CHECK(wc.base.morphisms.size() == 367);  // counted by the routing formula

  auto r = check_monoidal(wc);
  INFO(r.summary());
  CHECK(r.ok());
  CHECK(wc.symmetric);
}

TEST_CASE("machines run and compose under wiring application") {
  MooreMachine m = toggle();
  CHECK(machine_dec(machine_id(m), kBit) == m);

  // identity wiring leaves the machine unchanged
  CHECK(dds_apply(wiring_identity(kBit), m) == m);

  // application respects wiring composition on the nose
  WiringDiagram fb = feedback_loop();
  WiringDiagram idc = wiring_identity(fb.cod);
  CHECK(dds_apply(wiring_compose(idc, fb), m) ==
        dds_apply(idc, dds_apply(fb, m)));

  // parallel machines behave blockwise
  MooreMachine p = dds_parallel(m, m);
  CHECK(p.states == 4);
  CHECK(p.box.in_types == std::vector<int>{2, 2});
  CHECK(run_machine(p, 0, {3, 0}) ==
        std::vector<int>{0, 0, 3});  // both toggle together
}

TEST_CASE("feedback turns the toggle into a period-two oscillator") {
  MooreMachine closed = dds_apply(feedback_loop(), toggle());
  CHECK(closed.box.in_types.empty());
  CHECK(run_machine(closed, 0, {0, 0, 0, 0}) ==
        std::vector<int>{0, 1, 0, 1, 0});
  CHECK(run_machine(closed, 1, {0, 0, 0}) == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("behavioral equivalence ignores state labels, sees readouts") {
  Box closed{{}, {2}};
  MooreMachine a{closed, 2, {{1}, {0}}, {0, 0}};  // flips silently
  MooreMachine b{closed, 2, {{0}, {1}}, {0, 0}};  // sits still silently
  CHECK(a != b);
  CHECK(behaviorally_equal(a, b));

  MooreMachine flip{closed, 2, {{1}, {0}}, {0, 1}};
  MooreMachine stay{closed, 2, {{0}, {1}}, {0, 1}};
  CHECK(!behaviorally_equal(flip, stay));
  CHECK(behaviorally_equal(flip, stay, 0));  // equal readouts at time zero
  CHECK(!behaviorally_equal(a, flip));       // readouts differ at a state
}

TEST_CASE("machine fibres: objects and commuting state maps") {
  FinCat one = dds_fibre(kBit, 1);
  CHECK(one.objects.size() == 2);  // one state, readout 0 or 1
  for (const auto& [m, dc] : one.morphisms) {
    INFO(m);
    CHECK(dc.dom == dc.cod);  // distinct readouts admit no map
  }

  Box closed{{}, {2}};
  FinCat two = dds_fibre(closed, 2);
  CHECK(two.objects.size() == 2 + 16);
  auto r = check_category(two);
  INFO(r.summary());
  CHECK(r.ok());

  // a state map must commute with update and preserve readout
  MooreMachine flip{closed, 2, {{1}, {0}}, {0, 1}};
  MooreMachine stay{closed, 2, {{0}, {1}}, {0, 1}};
  CHECK(two.hom(machine_id(flip), machine_id(stay)).empty());
  CHECK(two.hom(machine_id(flip), machine_id(flip)).size() == 1);
}

TEST_CASE("the machine-indexed structure over wirings passes the laws") {
  DdsTotal t = dds_total_category({2}, 1, 1);
  auto r = check_lax_monoidal(t.indexed);
  INFO(r.summary());
  CHECK(r.ok());

  REQUIRE(t.monoidal.has_value());
  auto rf = check_monoidal_fibration(*t.monoidal);
  INFO(rf.summary());
  CHECK(rf.ok());

  // object count of the total = sum of the fibre sizes
  std::size_t total = 0;
  for (const auto& [x, f] : t.indexed.carrier.fibre) {
    (void)x;
    total += f.objects.size();
  }
  CHECK(t.groth.total.objects.size() == total);
  CHECK(t.monoidal->carrier.total.objects.size() == total);
}

TEST_CASE("state universe: larger fibres stay lawful, overflow is flagged") {
  DdsTotal t = dds_total_category({2}, 1, 2);
  // the laxator is partial above one state, so only the carrier laws apply
  CHECK(!t.monoidal.has_value());
  auto r = check_pseudofunctor(t.indexed.carrier);
  INFO(r.summary());
  CHECK(r.ok());

  // two-state machines exist, but their parallel product leaves the bound
  Box sink{{2}, {}};
  Box closed{{}, {2}};
  const PairMap& mu = t.indexed.mu(box_id(sink), box_id(closed));
  MooreMachine ones{sink, 1, {{0, 0}}, {0}};
  MooreMachine flips{sink, 2, {{1, 1}, {0, 0}}, {0, 0}};
  MooreMachine one{closed, 1, {{0}}, {0}};
  MooreMachine flip{closed, 2, {{1}, {0}}, {0, 1}};
  CHECK(mu.obj.count({machine_id(ones), machine_id(one)}) == 1);
  CHECK(mu.obj.count({machine_id(flips), machine_id(one)}) == 1);
  CHECK(mu.obj.count({machine_id(flips), machine_id(flip)}) == 0);

  MooreMachine big = flip;
  big.states = 12;  // unencodable
  CHECK_THROWS_AS(machine_id(big), UniverseOverflow);
}
