#pragma once

// Fibration fixtures shared across suites.

#include "catkit/fib.hpp"
#include "cats.hpp"

namespace testcats {

using catkit::ClovenFibration;
using catkit::FibDirection;

// the projection X × F -> X with its obvious split cleavage
inline ClovenFibration projection_fib(const FinCat& X, const FinCat& F,
                                      FibDirection dir) {
  ClovenFibration p;
  p.total = catkit::product(X, F);
  p.base = X;
  p.direction = dir;
  p.split = true;
  p.proj.source = p.total;
  p.proj.target = X;
  for (const Id& o : p.total.objects)
    p.proj.obj_map[o] = catkit::dec(o, 2)[0];
  for (const auto& [m, dc] : p.total.morphisms) {
    (void)dc;
    p.proj.mor_map[m] = catkit::dec(m, 2)[0];
  }
  for (const auto& [f, dc] : X.morphisms) {
    const Id& anchor = dir == FibDirection::opfibration ? dc.dom : dc.cod;
    for (const Id& c : F.objects)
      p.cleavage[{f, catkit::enc2(anchor, c)}] = catkit::enc2(f, F.id(c));
  }
  return p;
}

}  // namespace testcats
