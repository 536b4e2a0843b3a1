#pragma once

// Interchange format: one JSON document per entity with a "kind" tag and
// named sections (objects, morphisms, compose, identity, tensor, cells, ...).
// Objects are key-sorted, so dumps are canonical (lexicographic) and the
// dump-then-load round trip is bit-exact.  Malformed input -> ParseError.

#include <string>

#include "catkit/corr.hpp"
#include "catkit/zoo.hpp"

namespace catkit {

// "kind" tag of a serialized entity, e.g. "fincat", "indexed", "fibration"
std::string entity_kind(const std::string& text);

std::string dump(const FinCat& c);
std::string dump(const FinFunctor& f);
std::string dump(const NatTrans& n);
std::string dump(const MonoidalData& m);
std::string dump(const MonoidalFunctorData& f);
std::string dump(const CocartesianWitness& w);
std::string dump(const IndexedCat& m);
std::string dump(const ClovenFibration& p);
std::string dump(const LaxMonoidalIndexed& l);
std::string dump(const FibrewiseMonoidal& f);
std::string dump(const MonoidalFibrationData& m);
std::string dump(const Monoid& m);
std::string dump(const NetworkModel& n);

FinCat load_fincat(const std::string& text);
FinFunctor load_functor(const std::string& text);
NatTrans load_nat_trans(const std::string& text);
MonoidalData load_monoidal(const std::string& text);
MonoidalFunctorData load_monoidal_functor(const std::string& text);
CocartesianWitness load_cocartesian(const std::string& text);
IndexedCat load_indexed(const std::string& text);
ClovenFibration load_fibration(const std::string& text);
LaxMonoidalIndexed load_lax_monoidal(const std::string& text);
FibrewiseMonoidal load_fibrewise(const std::string& text);
MonoidalFibrationData load_monoidal_fibration(const std::string& text);
Monoid load_monoid(const std::string& text);
NetworkModel load_network_model(const std::string& text);

// Law reports: a human-readable block, and a record stream with one
// tab-separated witness per line followed by a result line.
std::string report_text(const LawReport& r);
std::string report_records(const LawReport& r);

}  // namespace catkit
