#pragma once

// Small hand-built categories shared across test suites.

#include <string>
#include <vector>

#include "catkit/fincat.hpp"
#include "catkit/moncat.hpp"

namespace testcats {

using catkit::FinCat;
using catkit::Id;

inline FinCat terminal_cat() {
  FinCat c;
  c.add_object("*", "1*");
  return c;
}

// poset category from a reflexive-transitive relation given as pairs
inline FinCat poset_cat(const std::vector<Id>& elems,
                        const std::vector<std::pair<Id, Id>>& le) {
  FinCat c;
  for (const Id& x : elems) c.add_object(x, "1" + x);
  auto leq = [&](const Id& a, const Id& b) {
    if (a == b) return true;
    for (const auto& [p, q] : le)
      if (p == a && q == b) return true;
    return false;
  };
  for (const Id& x : elems)
    for (const Id& y : elems)
      if (x != y && leq(x, y)) c.add_morphism("le:" + x + "<" + y, x, y);
  for (const auto& [g, gdc] : c.morphisms)
    for (const auto& [f, fdc] : c.morphisms)
      if (fdc.cod == gdc.dom) {
        // in a poset the only endomorphisms are identities
        Id h = (fdc.dom == fdc.cod)
                   ? g
                   : (gdc.dom == gdc.cod ? f
                                         : "le:" + fdc.dom + "<" + gdc.cod);
        c.compose[{g, f}] = h;
      }
  return c;
}

inline FinCat walking_arrow() { return poset_cat({"0", "1"}, {{"0", "1"}}); }

inline FinCat square_poset() {
  return poset_cat({"00", "01", "10", "11"},
                   {{"00", "01"}, {"00", "10"}, {"00", "11"},
                    {"01", "11"}, {"10", "11"}});
}

inline FinCat chain3() {
  return poset_cat({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}});
}

inline FinCat discrete2() {
  FinCat c;
  c.add_object("a", "1a");
  c.add_object("b", "1b");
  return c;
}

inline FinCat chain4() {
  return poset_cat({"0", "1", "2", "3"},
                   {{"0", "1"}, {"0", "2"}, {"0", "3"},
                    {"1", "2"}, {"1", "3"}, {"2", "3"}});
}

inline FinCat discrete_cat(const std::vector<Id>& elems) {
  FinCat c;
  for (const Id& x : elems) c.add_object(x, "1" + x);
  return c;
}

// one object, morphisms {e, s} with s∘s = e (the group Z/2)
inline FinCat z2_cat() {
  FinCat c;
  c.add_object("*", "e");
  c.add_morphism("s", "*", "*");
  c.compose[{"e", "s"}] = "s";
  c.compose[{"s", "e"}] = "s";
  c.compose[{"s", "s"}] = "e";
  return c;
}

// Z/2 as a strict symmetric monoidal category (group multiplication tensor)
inline catkit::MonoidalData z2_monoidal() {
  catkit::MonoidalData m;
  m.base = z2_cat();
  m.unit = "*";
  m.tensor_obj[{"*", "*"}] = "*";
  for (const Id& k : {Id("e"), Id("s")})
    for (const Id& h : {Id("e"), Id("s")})
      m.tensor_mor[{k, h}] = m.base.comp(k, h);
  m.associator[{"*", "*", "*"}] = "e";
  m.left_unitor["*"] = "e";
  m.right_unitor["*"] = "e";
  m.braiding = {{{"*", "*"}, "e"}};
  m.symmetric = true;
  return m;
}

}  // namespace testcats
