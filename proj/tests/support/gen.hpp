#pragma once

// Test-side generator helpers layered over the library generators.

#include "catkit/gen.hpp"
#include "indexed_fixtures.hpp"

namespace testcats {

using catkit::Rng;

// random sign function on the base morphisms; genuinely pseudo whenever at
// least one sign is nontrivial (forced on the first morphism)
inline catkit::IndexedCat random_twisted(Rng& r, const FinCat& base) {
  std::map<Id, Id> signs;
  bool first = true;
  for (const auto& [f, dc] : base.morphisms) {
    (void)dc;
    if (first || r.coin()) signs[f] = "s";
    first = false;
  }
  return z2_twisted(base, signs);
}

// one-object Z/3: a∘a = b, a∘b = b∘a = e
inline FinCat z3_cat() {
  FinCat c;
  c.add_object("*", "e");
  c.add_morphism("a", "*", "*");
  c.add_morphism("b", "*", "*");
  for (const Id f : {"a", "b"}) {
    c.compose[{"e", f}] = f;
    c.compose[{f, "e"}] = f;
  }
  c.compose[{"a", "a"}] = "b";
  c.compose[{"a", "b"}] = "e";
  c.compose[{"b", "a"}] = "e";
  c.compose[{"b", "b"}] = "a";
  return c;
}

// one-object idempotent commutative monoid {e, a} with a∘a = a
inline FinCat idem_cat() {
  FinCat c;
  c.add_object("*", "e");
  c.add_morphism("a", "*", "*");
  c.compose[{"e", "a"}] = "a";
  c.compose[{"a", "e"}] = "a";
  c.compose[{"a", "a"}] = "a";
  return c;
}

// commutative one-object fibre for one_object_lax, varied by index
inline FinCat commutative_fibre(int i) {
  switch (i % 4) {
    case 0: return z2_cat();
    case 1: return terminal_cat();
    case 2: return z3_cat();
    default: return idem_cat();
  }
}

}  // namespace testcats
