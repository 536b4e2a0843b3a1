// Acceptance gate: one pass/fail line per criterion; exits nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "catkit/corr.hpp"
#include "catkit/gen.hpp"
#include "catkit/serialize.hpp"
#include "support/cats.hpp"
#include "support/gen.hpp"
#include "support/indexed_fixtures.hpp"

using namespace catkit;
using namespace testcats;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void run(int n, const char* label,
         const std::function<std::pair<bool, std::string>()>& body) {
  auto t0 = Clock::now();
  bool ok = false;
  std::string note;
  try {
    auto [o, s] = body();
    ok = o;
    note = s;
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  std::printf("%s  criterion %2d: %s (%.1fs%s%s)\n", ok ? "PASS" : "FAIL", n,
              label, elapsed(t0), note.empty() ? "" : "; ", note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// ---- shared generated instances -------------------------------------------

std::vector<IndexedCat> strict_instances() {
  std::vector<IndexedCat> out;
  Rng rng(1);
  for (int i = 0; i < 70; ++i)
    out.push_back(random_inclusion_indexed(rng, random_poset(rng, 4), 3));
  for (int i = 0; i < 20; ++i) {
    FinCat base = random_poset(rng, 4);
    out.push_back(homdisc_indexed(base, *base.objects.begin()));
  }
  for (int i = 0; i < 15; ++i)
    out.push_back(upset_indexed(random_poset(rng, 4)));
  out.push_back(constant_indexed(chain3(), z2_cat(), Variance::covariant));
  out.push_back(constant_indexed(square_poset(), walking_arrow(),
                                 Variance::contravariant));
  return out;
}

struct LaxFixture {
  std::string name;
  LaxMonoidalIndexed l;
};

std::vector<LaxFixture> zoo_lax_fixtures() {
  std::vector<LaxFixture> out;
  out.push_back({"graphs(1)", graph_opindexed(1)});
  out.push_back({"graphs(2)", graph_opindexed(2)});
  FinCat wa = walking_arrow(), sq = square_poset();
  out.push_back({"slices(arrow)",
                 slice_opindexed(wa, find_cocartesian(wa).value())});
  out.push_back({"slices(square)",
                 slice_opindexed(sq, find_cocartesian(sq).value())});
  out.push_back({"families(z2,2)", family_fibration(z2_monoidal(), 2)});
  out.push_back({"families(join,2)", family_fibration(join_monoidal(), 2)});
  out.push_back({"z2/join", z2_over_join()});
  out.push_back({"dds({2},1,1)", dds_total_category({2}, 1, 1).indexed});
  return out;
}

// κ/λ components via the unique hom in thin fibres, in-universe objects only
CocartTotalCriterion thin_criterion(const LaxMonoidalIndexed& l,
                                    const CocartesianWitness& w) {
  CocartTotalCriterion crit;
  for (const Id& x : l.carrier.base.objects) {
    if (!w.codiagonal.count(x) || !w.bang.count(x) ||
        !l.laxator.count({x, x}))
      continue;
    const FinCat& fx = l.carrier.fib(x);
    Id ix = l.carrier.re(w.bang_to(x)).ob(l.unit_object);
    std::map<Id, Id> kc, lc;
    for (const Id& a : fx.objects) {
      Id d = l.carrier.re(w.nabla(x)).ob(l.mu(x, x).ob(a, a));
      kc[a] = fx.hom(d, a).at(0);
      lc[a] = fx.hom(ix, a).at(0);
    }
    crit.kappa[x] = make_kappa(l, w, x, std::move(kc));
    crit.lambda_aug[x] = make_lambda(l, w, x, std::move(lc));
  }
  return crit;
}

bool detect_lax(const LaxMonoidalIndexed& l) {
  try {
    if (!check_lax_monoidal(l).ok()) return true;
    MonoidalFibrationData mg = monoidal_grothendieck(l);
    return !check_monoidal(mg.total_monoidal).ok() ||
           !check_monoidal_fibration(mg).ok();
  } catch (const CatError&) {
    return true;
  }
}

bool detect_fib(const MonoidalFibrationData& m) {
  try {
    return !check_category(m.carrier.total).ok() ||
           !check_functor(m.carrier.proj).ok() ||
           !check_fibration(m.carrier).ok() ||
           !check_monoidal(m.total_monoidal).ok() ||
           !check_monoidal(m.base_monoidal).ok() ||
           !check_monoidal_fibration(m).ok();
  } catch (const CatError&) {
    return true;
  }
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

}  // namespace

int main() {
  run(1, "split Grothendieck round trip (>=200, <60s)", [] {
    auto t0 = Clock::now();
    int trips = 0;
    bool all = true;
    for (const IndexedCat& m : strict_instances()) {
      all = all && roundtrip_check(m).ok();
      all = all && roundtrip_check(grothendieck(m).fibration).ok();
      trips += 2;
    }
    double dt = elapsed(t0);
    return std::pair{all && trips >= 200 && dt < 60.0,
                     std::to_string(trips) + " round trips"};
  });

  run(2, "pseudo Grothendieck round trip (>=100, <120s)", [] {
    auto t0 = Clock::now();
    int n = 0;
    bool all = true;
    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
      IndexedCat m = random_twisted(rng, random_poset(rng, 4));
      all = all && !m.strict && roundtrip_check(m).ok();
      ++n;
    }
    double dt = elapsed(t0);
    return std::pair{all && n >= 100 && dt < 120.0,
                     std::to_string(n) + " round trips"};
  });

  run(3, "monoidal Grothendieck soundness + mutation suite", [] {
    bool all = true;
    int made = 0;
    for (int i = 0; i < 100; ++i) {
      Rng rng(1000 + i);
      CocartesianWitness w = random_semilattice(rng, 2);
      LaxMonoidalIndexed l = one_object_lax(w.monoidal, commutative_fibre(i));
      if (!check_lax_monoidal_components(l).ok()) {
        all = false;
        continue;
      }
      MonoidalFibrationData mg = monoidal_grothendieck(l);
      all = all && check_monoidal(mg.total_monoidal).ok() &&
            check_monoidal_fibration(mg).ok() &&
            mg.total_monoidal.braiding.has_value() &&
            mg.total_monoidal.symmetric;
      ++made;
    }
    for (const LaxFixture& f : zoo_lax_fixtures()) {
      MonoidalFibrationData mg = monoidal_grothendieck(f.l);
      bool ok = check_monoidal(mg.total_monoidal).ok() &&
                check_monoidal_fibration(mg).ok();
      if (f.l.braid_cell)
        ok = ok && mg.total_monoidal.braiding.has_value();
      if (!ok) return std::pair{false, "zoo fixture " + f.name + " failed"};
    }

    // single-component mutations, each of which some checker must flag
    const LaxMonoidalIndexed hostA =
        one_object_lax(z2_monoidal(), z2_cat());
    std::vector<std::function<bool()>> muts;
    auto lax_mut = [&](std::function<void(LaxMonoidalIndexed&)> tweak) {
      muts.push_back([&hostA, tweak] {
        LaxMonoidalIndexed l = hostA;
        tweak(l);
        return detect_lax(l);
      });
    };
    lax_mut([](auto& l) { l.laxator[{"*", "*"}].mor[{"s", "e"}] = "e"; });
    lax_mut([](auto& l) { l.laxator_cells[{"e", "e"}][{"*", "*"}] = "s"; });
    lax_mut([](auto& l) { l.omega[{"*", "*", "*"}][{"*", "*", "*"}] = "s"; });
    lax_mut([](auto& l) { l.zeta["*"]["*"] = "s"; });
    lax_mut([](auto& l) { l.xi["*"]["*"] = "s"; });
    lax_mut([](auto& l) { (*l.braid_cell)[{"*", "*"}][{"*", "*"}] = "s"; });
    lax_mut([](auto& l) { l.base_monoidal.tensor_mor[{"e", "s"}] = "e"; });
    lax_mut([](auto& l) { l.base_monoidal.associator[{"*", "*", "*"}] = "s"; });
    lax_mut([](auto& l) { l.base_monoidal.left_unitor["*"] = "s"; });
    lax_mut([](auto& l) { l.base_monoidal.right_unitor["*"] = "s"; });
    lax_mut([](auto& l) { (*l.base_monoidal.braiding)[{"*", "*"}] = "s"; });
    lax_mut([](auto& l) {
      l.carrier.compositor.at({"s", "s"}).components["*"] = "s";
    });
    lax_mut([](auto& l) { l.carrier.unitor.at("*").components["*"] = "s"; });
    lax_mut([](auto& l) { l.carrier.reindex.at("s").mor_map["e"] = "s"; });

    const LaxMonoidalIndexed hostB = graph_opindexed(2);
    const Id g1l = graph_id({1, {{0, 0}}});
    const Id e2 = graph_id({2, {}});
    auto graph_mut = [&](std::function<void(LaxMonoidalIndexed&)> tweak) {
      muts.push_back([&hostB, tweak] {
        LaxMonoidalIndexed l = hostB;
        tweak(l);
        return detect_lax(l);
      });
    };
    graph_mut([&](auto& l) { l.laxator[{"1", "1"}].obj[{g1l, g1l}] = e2; });
    graph_mut([&](auto& l) {
      const Id up = "i:" + graph_id({1, {}}) + ">" + g1l;
      l.laxator[{"1", "1"}].mor.at({up, up}) = "i:" + e2 + ">" + e2;
    });
    graph_mut([&](auto& l) {
      l.laxator_cells.begin()->second.begin()->second = "i:" + e2 + ">" + e2;
    });

    const MonoidalFibrationData hostC = vertex_opfibration(2);
    auto fib_mut = [&](std::function<void(MonoidalFibrationData&)> tweak) {
      muts.push_back([&hostC, tweak] {
        MonoidalFibrationData m = hostC;
        tweak(m);
        return detect_fib(m);
      });
    };
    fib_mut([](auto& m) {
      m.carrier.cleavage.begin()->second =
          m.carrier.total.id(*m.carrier.total.objects.rbegin());
    });
    fib_mut([](auto& m) { m.carrier.proj.obj_map.begin()->second = "2"; });
    fib_mut([](auto& m) {
      for (const auto& [f, dc] : m.carrier.total.morphisms)
        if (dc.dom != dc.cod) {
          m.carrier.total.compose[{f, m.carrier.total.id(dc.dom)}] =
              m.carrier.total.id(dc.dom);
          break;
        }
    });
    fib_mut([](auto& m) {
      auto& slot = m.total_monoidal.tensor_obj.begin()->second;
      for (const Id& t : m.carrier.total.objects)
        if (t != slot) {
          slot = t;
          break;
        }
    });
    fib_mut([](auto& m) { m.base_monoidal.tensor_obj[{"1", "1"}] = "1"; });

    int detected = 0;
    for (std::size_t i = 0; i < muts.size(); ++i) {
      if (muts[i]())
        ++detected;
      else
        return std::pair{false, "mutation " + std::to_string(i) +
                                    " went undetected"};
    }
    return std::pair{all && made >= 100 && detected >= 20,
                     std::to_string(made) + " generated instances, " +
                         std::to_string(detected) + " mutations detected"};
  });

  run(4, "fibrewise<->global transfer round trips (<120s)", [] {
    auto t0 = Clock::now();
    bool all = true;
    int trips = 0;
    auto both = [&](const LaxMonoidalIndexed& l,
                    const CocartesianWitness& w) {
      all = all && roundtrip_transfer(l, w).ok();
      all = all && roundtrip_transfer(global_to_fibrewise(l, w), w).ok();
      trips += 2;
    };
    both(graph_opindexed(2), finset_cocartesian(2));
    FinCat wa = walking_arrow(), sq = square_poset();
    CocartesianWitness wwa = find_cocartesian(wa).value();
    CocartesianWitness wsq = find_cocartesian(sq).value();
    both(slice_opindexed(wa, wwa), wwa);
    both(slice_opindexed(sq, wsq), wsq);
    for (int i = 0; i < 28; ++i) {
      Rng rng(2000 + i);
      CocartesianWitness w = random_semilattice(rng, 2);
      both(one_object_lax(w.monoidal, commutative_fibre(i)), w);
    }
    double dt = elapsed(t0);
    return std::pair{all && trips >= 56 && dt < 120.0,
                     std::to_string(trips) + " directed round trips"};
  });

  run(5, "ordinary lax functors induce strict fibre structures (>=30)", [] {
    bool all = true;
    int n = 0;
    for (int i = 0; i < 32; ++i) {
      Rng rng(3000 + i);
      CocartesianWitness w = random_semilattice(rng, 2);
      LaxMonoidalIndexed l = one_object_lax(w.monoidal, commutative_fibre(i));
      StrictnessReport sr = strictness_analysis(l, w);
      all = all && sr.ordinary_lax && sr.law.ok();
      for (const auto& [x, s] : sr.fibre_strict) {
        (void)x;
        all = all && s;
      }
      ++n;
    }
    return std::pair{all && n >= 30, std::to_string(n) + " instances"};
  });

  run(6, "kappa/lambda cocartesian-total criterion", [] {
    LaxMonoidalIndexed lg = graph_opindexed(2);
    CocartesianWitness wg = finset_cocartesian(2);
    CocartTotalCriterion cg = thin_criterion(lg, wg);
    if (!check_cocartesian_total(lg, wg, cg).ok())
      return std::pair{false, std::string("graph fixture failed")};

    FinCat wa = walking_arrow(), sq = square_poset();
    for (FinCat* b : {&wa, &sq}) {
      CocartesianWitness w = find_cocartesian(*b).value();
      LaxMonoidalIndexed l = slice_opindexed(*b, w);
      if (!check_cocartesian_total(l, w, thin_criterion(l, w)).ok())
        return std::pair{false, std::string("slice fixture failed")};
    }

    CocartTotalCriterion broken = cg;
    broken.kappa.erase("1");
    bool caught = !check_cocartesian_total(lg, wg, broken).ok();
    return std::pair{caught, std::string(
                                 caught ? "removed kappa detected" : "removed kappa NOT detected")};
  });

  run(7, "decorators map to lawful commutative network models", [] {
    NetworkModel nm = decorator_to_network_model(simple_graph_decorator(), 3);
    bool ok = check_network_model(nm).ok();
    for (const auto& [n, m] : nm.monoids) {
      (void)n;
      ok = ok && check_monoid(m, /*require_commutative=*/true).ok();
    }
    ok = ok && nm.monoids.at("1").elements.size() == 2;
    NetworkModel other = decorator_to_network_model(subset_decorator(), 3);
    ok = ok && !(nm == other);
    return std::pair{ok, std::string("graph and subset models compared")};
  });

  run(8, "DDS algebra laws under behavioral equivalence (<120s)", [] {
    auto t0 = Clock::now();
    bool all = true;
    int instances = 0;
    Rng rng(8);
    while (instances < 210) {
      Box a = random_box(rng, 2), b = random_box(rng, 2),
          c = random_box(rng, 2);
      auto phi = random_wiring(rng, a, b);
      auto psi = random_wiring(rng, b, c);
      if (!phi || !psi) continue;
      MooreMachine m = random_machine(rng, a, 3);

      all = all && dds_apply(wiring_identity(a), m) == m;
      ++instances;

      MooreMachine lhs = dds_apply(wiring_compose(*psi, *phi), m);
      MooreMachine rhs = dds_apply(*psi, dds_apply(*phi, m));
      all = all && behaviorally_equal(lhs, rhs, 2 * m.states * m.states);
      instances += 2;

      Box a2 = random_box(rng, 2), b2 = random_box(rng, 2);
      auto phi2 = random_wiring(rng, a2, b2);
      if (!phi2) continue;
      MooreMachine m2 = random_machine(rng, a2, 3);
      MooreMachine p1 =
          dds_apply(wiring_parallel(*phi, *phi2), dds_parallel(m, m2));
      MooreMachine p2 =
          dds_parallel(dds_apply(*phi, m), dds_apply(*phi2, m2));
      int s = p1.states;
      all = all && behaviorally_equal(p1, p2, 2 * s * s);
      instances += 2;
    }

    // feedback toggle oscillates with period 2
    MooreMachine tog{{{2}, {2}}, 2, {{1, 0}, {1, 0}}, {0, 1}};
    WiringDiagram fb;
    fb.dom = tog.box;
    fb.cod = {{}, {2}};
    fb.in_route = {{false, 0}};
    fb.out_route = {0};
    MooreMachine closed = dds_apply(fb, tog);
    all = all && run_machine(closed, 0, {0, 0, 0, 0}) ==
                     std::vector<int>{0, 1, 0, 1, 0};

    DdsTotal t = dds_total_category({2}, 1, 1);
    all = all && t.monoidal.has_value() &&
          check_monoidal_fibration(*t.monoidal).ok();
    double dt = elapsed(t0);
    return std::pair{all && dt < 120.0,
                     std::to_string(instances) + " (machine, wiring) instances"};
  });

  run(9, "object count of the total = sum of fibre sizes", [] {
    bool all = true;
    auto counts = [&](const IndexedCat& m) {
      std::size_t sum = 0;
      for (const auto& [x, f] : m.fibre) {
        (void)x;
        sum += f.objects.size();
      }
      all = all && grothendieck(m).total.objects.size() == sum;
      return sum;
    };
    for (const LaxFixture& f : zoo_lax_fixtures()) counts(f.l.carrier);
    Rng rng(9);
    for (int i = 0; i < 20; ++i)
      counts(random_inclusion_indexed(rng, random_poset(rng, 4), 3));
    for (int i = 0; i < 10; ++i)
      counts(random_twisted(rng, random_poset(rng, 4)));
    std::size_t graph_total = counts(graph_opindexed(2).carrier);
    all = all && graph_total == 19;  // 1 + 2 + 16
    return std::pair{all, std::string("graph total has ") +
                              std::to_string(graph_total) + " objects"};
  });

  run(10, "interchange dump-then-load is bit-exact on the corpus", [] {
    bool all = true;
    int n = 0;
    auto rt = [&](const auto& x, auto loader) {
      std::string text = dump(x);
      auto back = loader(text);
      all = all && back == x && dump(back) == text;
      ++n;
    };
    for (const FinCat& c : {terminal_cat(), walking_arrow(), square_poset(),
                            chain4(), z2_cat(), z3_cat(), idem_cat(),
                            graph_fibre(2), dds_fibre({{}, {2}}, 2)})
      rt(c, load_fincat);
    rt(identity_functor(z2_cat()), load_functor);
    FinFunctor k = constant_functor(walking_arrow(), z2_cat(), "*");
    rt(k, load_functor);
    rt(identity_nat(k), load_nat_trans);
    for (const MonoidalData& m :
         {z2_monoidal(), join_monoidal(), wiring_category({2}, 2),
          opfinset_cartesian(2).monoidal})
      rt(m, load_monoidal);
    Rng rng(10);
    for (const CocartesianWitness& w :
         {finset_cocartesian(2), find_cocartesian(square_poset()).value(),
          random_semilattice(rng, 2)})
      rt(w, load_cocartesian);
    rt(z2_twisted_chain(), load_indexed);
    rt(random_inclusion_indexed(rng, random_poset(rng, 4), 3), load_indexed);
    rt(graph_opindexed(2).carrier, load_indexed);
    rt(grothendieck(graph_opindexed(2).carrier).fibration, load_fibration);
    for (const LaxFixture& f : zoo_lax_fixtures()) rt(f.l, load_lax_monoidal);
    CocartesianWitness wwa = find_cocartesian(walking_arrow()).value();
    rt(global_to_fibrewise(z2_over_join(), wwa), load_fibrewise);
    rt(vertex_opfibration(2), load_monoidal_fibration);
    rt(*dds_total_category({2}, 1, 1).monoidal, load_monoidal_fibration);
    NetworkModel nm = decorator_to_network_model(subset_decorator(), 2);
    rt(nm, load_network_model);
    rt(nm.monoids.at("2"), load_monoid);
    return std::pair{all, std::to_string(n) + " corpus entities"};
  });

  if (failures) std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
