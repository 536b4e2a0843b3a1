// Python façade over the JSON interchange format: every entity crosses the
// boundary as its canonical serialized text, so the Python side never holds
// partially-constructed C++ state.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "catkit/cli.hpp"
#include "catkit/serialize.hpp"

namespace py = pybind11;
using namespace catkit;

namespace {

py::dict to_dict(const LawReport& r) {
  py::dict d;
  d["ok"] = r.ok();
  d["checked"] = r.checked;
  d["skipped"] = r.skipped;
  d["violations"] = r.violations;
  return d;
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
  if (kind == "monoidal_fibration") return dump(load_monoidal_fibration(text));
  if (kind == "monoid") return dump(load_monoid(text));
  if (kind == "network_model") return dump(load_network_model(text));
  throw ParseError("unknown kind " + kind);
}

CocartesianWitness witness_for(const FinCat& base, const MonoidalData* bm,
                               const std::string& witness_text,
                               std::size_t max_objects) {
  if (!witness_text.empty()) return load_cocartesian(witness_text);
  auto w = find_cocartesian(base, /*allow_partial=*/true, max_objects);
  if (!w) throw BaseNotCocartesian("base has no initial object");
  if (bm && !(w->monoidal == *bm))
    throw BaseNotCocartesian(
        "base monoidal data is not the canonical cocartesian structure");
  return *w;
}

}  // namespace

PYBIND11_MODULE(_catkit, m) {
  m.doc() = "finite categories, Grothendieck constructions and the "
            "fibrewise/global monoidal transfer (JSON-text API)";

  // translators run newest-first: register the base before the subclass
  auto cat_error =
      py::register_exception<CatError>(m, "CatError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", cat_error.ptr());

  m.def("kind", &entity_kind, py::arg("text"),
        "the \"kind\" tag of a serialized entity");
  m.def("canonical", &canonical, py::arg("text"),
        "load and re-dump: the canonical key-sorted text");
  m.def(
      "check", [](const std::string& t) { return to_dict(check_any(t)); },
      py::arg("text"), "run the law checker matching the entity's kind");

  m.def(
      "grothendieck",
      [](const std::string& t) {
        GrothResult g = grothendieck(load_indexed(t));
        return dump(g.fibration);
      },
      py::arg("indexed"),
      "total category + projection of an indexed category, as a fibration");
  m.def(
      "indexed_of",
      [](const std::string& t) { return dump(fibration_to_indexed(load_fibration(t))); },
      py::arg("fibration"), "the indexed category of a cloven (op)fibration");
  m.def(
      "monoidal_grothendieck",
      [](const std::string& t) {
        return dump(monoidal_grothendieck(load_lax_monoidal(t)));
      },
      py::arg("lax_monoidal_indexed"),
      "monoidal total category of a lax monoidal indexed category");

  m.def(
      "global_to_fibrewise",
      [](const std::string& t, const std::string& witness,
         std::size_t max_objects) {
        LaxMonoidalIndexed l = load_lax_monoidal(t);
        CocartesianWitness w =
            witness_for(l.carrier.base, &l.base_monoidal, witness, max_objects);
        return dump(global_to_fibrewise(l, w));
      },
      py::arg("lax_monoidal_indexed"), py::arg("witness") = std::string(),
      py::arg("max_objects") = std::size_t{24},
      "per-fibre monoidal structures induced by the global laxator");
  m.def(
      "fibrewise_to_global",
      [](const std::string& t, const std::string& witness,
         std::size_t max_objects) {
        FibrewiseMonoidal f = load_fibrewise(t);
        CocartesianWitness w =
            witness_for(f.carrier.base, nullptr, witness, max_objects);
        return dump(fibrewise_to_global(f, w));
      },
      py::arg("fibrewise_monoidal"), py::arg("witness") = std::string(),
      py::arg("max_objects") = std::size_t{24},
      "global laxator assembled from per-fibre monoidal structures");
  m.def(
      "roundtrip",
      [](const std::string& t, const std::string& witness,
         std::size_t max_objects) {
        std::string kind = entity_kind(t);
        LawReport r;
        std::string c1 = canonical(t);
        r.instance(canonical(c1) == c1, "dump-then-load is not bit-exact");
        if (kind == "indexed") {
          r.absorb(roundtrip_check(load_indexed(t)), "indexed: ");
        } else if (kind == "fibration") {
          r.absorb(roundtrip_check(load_fibration(t)), "fibration: ");
        } else if (kind == "lax_monoidal_indexed") {
          LaxMonoidalIndexed l = load_lax_monoidal(t);
          r.absorb(roundtrip_transfer(
                       l, witness_for(l.carrier.base, &l.base_monoidal,
                                      witness, max_objects)),
                   "transfer: ");
        } else if (kind == "fibrewise_monoidal") {
          FibrewiseMonoidal f = load_fibrewise(t);
          r.absorb(roundtrip_transfer(
                       f, witness_for(f.carrier.base, nullptr, witness,
                                      max_objects)),
                   "transfer: ");
        }
        return to_dict(r);
      },
      py::arg("text"), py::arg("witness") = std::string(),
      py::arg("max_objects") = std::size_t{24},
      "serialization + construction round trips for the entity's kind");

  m.def(
      "cocartesian_witness",
      [](const std::string& t, bool allow_partial,
         std::size_t max_objects) -> py::object {
        auto w = find_cocartesian(load_fincat(t), allow_partial, max_objects);
        if (!w) return py::none();
        return py::str(dump(*w));
      },
      py::arg("fincat"), py::arg("allow_partial") = true,
      py::arg("max_objects") = std::size_t{24},
      "canonical cocartesian structure of a finite category, or None");

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"),
      "run a command-line verb; returns (exit_code, stdout, stderr)");
}
