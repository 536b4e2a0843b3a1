#pragma once

#include "catkit/fib.hpp"
#include "catkit/indexed.hpp"

namespace catkit {

// Total-category naming: objects "(x|a)", morphisms "((x|a)|(y|b)|f|k)"
// carrying both endpoints so distinct arrows never collide.
Id groth_obj(const Id& x, const Id& a);
Id groth_mor(const Id& x, const Id& a, const Id& y, const Id& b, const Id& f,
             const Id& k);

struct GrothMor {
  Id x, a, y, b, f, k;
};
GrothMor groth_dec(const Id& m);

struct GrothResult {
  FinCat total;
  ClovenFibration fibration;  // canonical cleavage (f, identity component)
  IndexedCat source;          // the input it was built from

  bool operator==(const GrothResult&) const = default;
};

// covariant input -> opfibration, contravariant input -> fibration;
// split exactly when the input is strict
GrothResult grothendieck(const IndexedCat& m);

IndexedCat fibration_to_indexed(const ClovenFibration& p);

// Round trips of the two constructions.  The indexed round trip compares
// through the canonical fibre comparison (object (x|a) -> a, morphism
// composed with the unitor), which is an equality of tables; the fibration
// round trip checks the canonical total comparison is an isomorphism of
// categories over the base preserving the chosen lifts.
LawReport roundtrip_check(const IndexedCat& m);
LawReport roundtrip_check(const ClovenFibration& p);

Fibred1Cell groth_1cell(const Indexed1Cell& c);

struct Fibred2Cell {
  NatTrans top;     // between the transported total functors
  NatTrans bottom;  // the base transformation

  bool operator==(const Fibred2Cell&) const = default;
};

Fibred2Cell groth_2cell(const Indexed2Cell& c);

MonoidalFibrationData monoidal_grothendieck(const LaxMonoidalIndexed& l);

struct BraidedExtension {
  std::map<IdPair, Id> braiding;
  bool symmetric = false;
};

// Braiding on the total category from the base braiding and the braid
// cells; the symmetric flag records the double-braid identity (verified
// exhaustively).  Hexagons are validated by check_monoidal on the total.
BraidedExtension braided_symmetric_extension(const LaxMonoidalIndexed& l);

struct MonoidalFibred1Cell {
  Fibred1Cell cell;
  MonoidalFunctorData top_monoidal;     // between the total structures
  MonoidalFunctorData bottom_monoidal;  // between the base structures

  bool operator==(const MonoidalFibred1Cell&) const = default;
};

MonoidalFibred1Cell monoidal_groth_1cell(const Indexed1Cell& c,
                                         const LaxMonoidalIndexed& src,
                                         const LaxMonoidalIndexed& tgt);

// fibred 1-cell laws + monoidal functor laws on both levels + projection
// compatibility of the structure morphisms
LawReport check_monoidal_fibred_1cell(const MonoidalFibred1Cell& c,
                                      const MonoidalFibrationData& src,
                                      const MonoidalFibrationData& tgt);

}  // namespace catkit
