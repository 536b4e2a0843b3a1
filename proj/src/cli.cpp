#include "catkit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "catkit/gen.hpp"
#include "catkit/serialize.hpp"

namespace catkit {

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw ParseError("cannot write " + out_path);
  f << text;
}

LawReport check_any(const std::string& text) {
  std::string kind = entity_kind(text);
  if (kind == "fincat") return check_category(load_fincat(text));
  if (kind == "functor") return check_functor(load_functor(text));
  if (kind == "nat_trans") return check_nat_trans(load_nat_trans(text));
  if (kind == "monoidal") return check_monoidal(load_monoidal(text));
  if (kind == "cocartesian")
    return check_cocartesian_witness(load_cocartesian(text));
  if (kind == "indexed") return check_pseudofunctor(load_indexed(text));
  if (kind == "fibration") return check_fibration(load_fibration(text));
  if (kind == "lax_monoidal_indexed")
    return check_lax_monoidal(load_lax_monoidal(text));
  if (kind == "fibrewise_monoidal")
    return check_fibrewise_monoidal(load_fibrewise(text));
  if (kind == "monoidal_fibration")
    return check_monoidal_fibration(load_monoidal_fibration(text));
  if (kind == "monoid") return check_monoid(load_monoid(text));
  if (kind == "network_model")
    return check_network_model(load_network_model(text));
  throw ParseError("no standalone check for kind " + kind);
}

// load + dump by kind: the canonical (lexicographically sorted) text
std::string canonical(const std::string& text) {
  std::string kind = entity_kind(text);
  if (kind == "fincat") return dump(load_fincat(text));
  if (kind == "functor") return dump(load_functor(text));
  if (kind == "nat_trans") return dump(load_nat_trans(text));
  if (kind == "monoidal") return dump(load_monoidal(text));
  if (kind == "monoidal_functor") return dump(load_monoidal_functor(text));
  if (kind == "cocartesian") return dump(load_cocartesian(text));
  if (kind == "indexed") return dump(load_indexed(text));
  if (kind == "fibration") return dump(load_fibration(text));
  if (kind == "lax_monoidal_indexed") return dump(load_lax_monoidal(text));
  if (kind == "fibrewise_monoidal") return dump(load_fibrewise(text));
  if (kind == "monoidal_fibration")
    return dump(load_monoidal_fibration(text));
  if (kind == "monoid") return dump(load_monoid(text));
  if (kind == "network_model") return dump(load_network_model(text));
  throw ParseError("unknown kind " + kind);
}

// the canonical cocartesian structure of the base, which must agree with
// the declared base monoidal data when one is present
CocartesianWitness witness_for(const FinCat& base, const MonoidalData* bm,
                               std::size_t max_objects) {
  auto w = find_cocartesian(base, /*allow_partial=*/true, max_objects);
  if (!w) throw BaseNotCocartesian("base has no initial object");
  if (bm && !(w->monoidal == *bm))
    throw BaseNotCocartesian(
        "base monoidal data is not the canonical cocartesian structure");
  return *w;
}

LawReport roundtrip_any(const std::string& text, std::size_t max_objects,
                        const std::string& witness_path) {
  LawReport r;
  std::string c1 = canonical(text);
  r.instance(canonical(c1) == c1, "dump-then-load is not bit-exact");

  std::string kind = entity_kind(text);
  if (kind == "indexed") {
    r.absorb(roundtrip_check(load_indexed(text)), "indexed: ");
  } else if (kind == "fibration") {
    r.absorb(roundtrip_check(load_fibration(text)), "fibration: ");
  } else if (kind == "lax_monoidal_indexed") {
    LaxMonoidalIndexed l = load_lax_monoidal(text);
    CocartesianWitness w =
        witness_path.empty()
            ? witness_for(l.carrier.base, &l.base_monoidal, max_objects)
            : load_cocartesian(slurp(witness_path));
    r.absorb(roundtrip_transfer(l, w), "transfer: ");
  } else if (kind == "fibrewise_monoidal") {
    FibrewiseMonoidal f = load_fibrewise(text);
    CocartesianWitness w =
        witness_path.empty()
            ? witness_for(f.carrier.base, nullptr, max_objects)
            : load_cocartesian(slurp(witness_path));
    r.absorb(roundtrip_transfer(f, w), "transfer: ");
  }
  return r;
}

// small poset bases for the slice fixtures
FinCat chain2_base() {
  FinCat c;
  c.add_object("0", "10");
  c.add_object("1", "11");
  c.add_morphism("le:0<1", "0", "1");
  c.compose[{"le:0<1", "10"}] = "le:0<1";
  c.compose[{"11", "le:0<1"}] = "le:0<1";
  return c;
}

FinCat square_base() {
  FinCat c;
  for (const Id x : {"00", "01", "10", "11"}) c.add_object(x, "1" + x);
  auto le = [](const Id& a, const Id& b) {
    return a[0] <= b[0] && a[1] <= b[1];
  };
  auto arrow = [&](const Id& a, const Id& b) {
    return a == b ? "1" + a : "le:" + a + "<" + b;
  };
  for (const Id& a : c.objects)
    for (const Id& b : c.objects)
      if (a != b && le(a, b)) c.add_morphism(arrow(a, b), a, b);
  for (const auto& [f, fd] : c.morphisms)
    for (const auto& [g, gd] : c.morphisms)
      if (fd.cod == gd.dom) c.compose[{g, f}] = arrow(fd.dom, gd.cod);
  return c;
}

std::string build_fixture(const std::string& fixture, const std::string& base,
                          int vertex_bound, int set_bound, int state_bound,
                          int port_bound, std::uint64_t seed,
                          std::size_t max_objects) {
  if (fixture == "graphs") return dump(graph_opindexed(vertex_bound));
  if (fixture == "network")
    return dump(
        decorator_to_network_model(simple_graph_decorator(), vertex_bound));
  if (fixture == "skeleton") return dump(finset_cocartesian(set_bound));
  if (fixture == "opskeleton") return dump(opfinset_cartesian(set_bound));
  if (fixture == "slices") {
    FinCat b = base == "square" ? square_base() : chain2_base();
    return dump(slice_opindexed(b, find_cocartesian(b).value()));
  }
  if (fixture == "families") {
    FinCat b = chain2_base();
    return dump(
        family_fibration(find_cocartesian(b).value().monoidal, set_bound));
  }
  if (fixture == "dds")
    return dump(dds_total_category({2}, port_bound, state_bound).indexed);
  if (fixture == "random-indexed") {
    Rng rng(seed);
    int cap = static_cast<int>(std::min<std::size_t>(max_objects, 4));
    FinCat b = random_poset(rng, cap);
    return dump(random_inclusion_indexed(rng, b, set_bound));
  }
  throw ParseError("unknown fixture " + fixture);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite category toolkit"};
  app.require_subcommand(1);

  std::string path, out_path, witness_path, format = "text";
  std::string direction, fixture, base = "arrow";
  int vertex_bound = 2, set_bound = 2, state_bound = 1, port_bound = 1;
  std::size_t max_objects = 24;
  std::uint64_t seed = 0;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", format, "report style")
        ->check(CLI::IsMember({"text", "records"}));
  };
  auto add_out = [&](CLI::App* s) {
    s->add_option("-o,--out", out_path, "write result here (default stdout)");
  };
  auto add_max = [&](CLI::App* s) {
    s->add_option("--max-objects", max_objects, "search cap for witnesses")
        ->envname("CATKIT_MAX_OBJECTS");
  };

  CLI::App* check = app.add_subcommand("check", "run the laws of an entity");
  check->add_option("path", path)->required();
  add_format(check);

  CLI::App* groth =
      app.add_subcommand("groth", "total category of an indexed category");
  groth->add_option("path", path)->required();
  add_out(groth);

  CLI::App* mongroth = app.add_subcommand(
      "mongroth", "monoidal fibration of a lax monoidal indexed category");
  mongroth->add_option("path", path)->required();
  add_out(mongroth);

  CLI::App* transfer = app.add_subcommand(
      "transfer", "move monoidal structure between global and fibrewise form");
  transfer->add_option("direction", direction)
      ->required()
      ->check(CLI::IsMember({"global-to-fibrewise", "fibrewise-to-global"}));
  transfer->add_option("path", path)->required();
  transfer->add_option("--witness", witness_path,
                       "cocartesian witness file (default: derived)");
  add_out(transfer);
  add_max(transfer);

  CLI::App* zoo = app.add_subcommand("zoo", "emit a named example");
  zoo->add_option("fixture", fixture)
      ->required()
      ->check(CLI::IsMember({"graphs", "slices", "families", "skeleton",
                             "opskeleton", "dds", "network",
                             "random-indexed"}));
  zoo->add_option("--vertex-bound", vertex_bound)
      ->envname("CATKIT_VERTEX_BOUND");
  zoo->add_option("--set-bound", set_bound)->envname("CATKIT_SET_BOUND");
  zoo->add_option("--state-bound", state_bound)
      ->envname("CATKIT_STATE_BOUND");
  zoo->add_option("--port-bound", port_bound);
  zoo->add_option("--base", base)->check(CLI::IsMember({"arrow", "square"}));
  zoo->add_option("--seed", seed);
  add_out(zoo);
  add_max(zoo);

  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "serialization + construction round trips of an entity");
  roundtrip->add_option("path", path)->required();
  roundtrip->add_option("--witness", witness_path);
  add_format(roundtrip);
  add_max(roundtrip);

  std::vector<std::string> full = {"catkit"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(full.size());
  for (auto& s : full) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (check->parsed() || roundtrip->parsed()) {
      LawReport r = check->parsed()
                        ? check_any(slurp(path))
                        : roundtrip_any(slurp(path), max_objects,
                                        witness_path);
      out << (format == "records" ? report_records(r) : report_text(r));
      return r.ok() ? 0 : 1;
    }
    if (groth->parsed()) {
      emit(dump(grothendieck(load_indexed(slurp(path))).fibration), out_path,
           out);
      return 0;
    }
    if (mongroth->parsed()) {
      emit(dump(monoidal_grothendieck(load_lax_monoidal(slurp(path)))),
           out_path, out);
      return 0;
    }
    if (transfer->parsed()) {
      if (direction == "global-to-fibrewise") {
        LaxMonoidalIndexed l = load_lax_monoidal(slurp(path));
        CocartesianWitness w =
            witness_path.empty()
                ? witness_for(l.carrier.base, &l.base_monoidal, max_objects)
                : load_cocartesian(slurp(witness_path));
        emit(dump(global_to_fibrewise(l, w)), out_path, out);
      } else {
        FibrewiseMonoidal f = load_fibrewise(slurp(path));
        CocartesianWitness w =
            witness_path.empty()
                ? witness_for(f.carrier.base, nullptr, max_objects)
                : load_cocartesian(slurp(witness_path));
        emit(dump(fibrewise_to_global(f, w)), out_path, out);
      }
      return 0;
    }
    if (zoo->parsed()) {
      emit(build_fixture(fixture, base, vertex_bound, set_bound, state_bound,
                         port_bound, seed, max_objects),
           out_path, out);
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const SizeLimitExceeded& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UniverseOverflow& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CatError& e) {
    err << "witness\t" << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace catkit
