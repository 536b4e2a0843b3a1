#pragma once

#include <optional>
#include <tuple>

#include "catkit/fincat.hpp"

namespace catkit {

using IdTriple = std::tuple<Id, Id, Id>;

enum class Strength { lax, strong, strict_ };

// Monoidal structure on a FinCat.  The tensor is stored as object/morphism
// component tables of the functor base x base -> base rather than as a
// materialized FinFunctor on the product category (which is quadratic in
// size); tensor_functor() materializes it on demand.
//
// Tables may be partial: fixtures built over a truncated universe (e.g. the
// FinSet skeleton below a cardinality bound) omit out-of-universe entries.
// Checkers verify every law instance whose lookups all resolve and count the
// rest as skipped.
struct MonoidalData {
  FinCat base;
  std::map<IdPair, Id> tensor_obj;
  std::map<IdPair, Id> tensor_mor;
  Id unit;
  std::map<IdTriple, Id> associator;       // (x,y,z) -> (x⊗y)⊗z -> x⊗(y⊗z)
  std::map<Id, Id> left_unitor;            // x -> I⊗x -> x
  std::map<Id, Id> right_unitor;           // x -> x⊗I -> x
  std::optional<std::map<IdPair, Id>> braiding;  // (x,y) -> x⊗y -> y⊗x
  bool symmetric = false;

  bool operator==(const MonoidalData&) const = default;

  const Id* tob(const Id& x, const Id& y) const;
  const Id* tmor(const Id& f, const Id& g) const;
  // throwing lookups for contexts that require definedness
  const Id& tensor_of(const Id& x, const Id& y) const;
  const Id& tensor_of_mor(const Id& f, const Id& g) const;
  const Id* alpha(const Id& x, const Id& y, const Id& z) const;
  const Id* braid(const Id& x, const Id& y) const;

  bool total() const;  // tensor defined on every pair
};

LawReport check_monoidal(const MonoidalData& m);

// Materialize the tensor as a FinFunctor product(base,base) -> base.
// Requires a total tensor.
FinFunctor tensor_functor(const MonoidalData& m);

Id tensor_of(const MonoidalData& m, const Id& x, const Id& y);
Id tensor_mor(const MonoidalData& m, const Id& f, const Id& g);

// Componentwise monoidal structure on product(a.base, b.base); braided /
// symmetric when both factors are.
MonoidalData product_monoidal(const MonoidalData& a, const MonoidalData& b);

struct MonoidalFunctorData {
  FinFunctor underlying;
  std::map<IdPair, Id> laxator;  // (a,b) -> F a ⊗ F b -> F(a⊗b)
  Id unit_mor;                   // I -> F(I)
  Strength strength = Strength::lax;

  bool operator==(const MonoidalFunctorData&) const = default;
};

LawReport check_monoidal_functor(const MonoidalFunctorData& f,
                                 const MonoidalData& src,
                                 const MonoidalData& tgt);

LawReport check_monoidal_nat_trans(const NatTrans& t,
                                   const MonoidalFunctorData& f,
                                   const MonoidalFunctorData& g,
                                   const MonoidalData& src,
                                   const MonoidalData& tgt);

struct CocartesianWitness {
  MonoidalData monoidal;
  std::map<IdPair, IdPair> coprojections;  // (x,y) -> (ι_x, ι_y)
  std::map<Id, Id> codiagonal;             // x -> ∇_x : x+x -> x
  Id initial;
  std::map<Id, Id> bang;  // x -> ! : 0 -> x

  bool operator==(const CocartesianWitness&) const = default;

  const IdPair& inj(const Id& x, const Id& y) const;
  const Id& nabla(const Id& x) const;
  const Id& bang_to(const Id& x) const;
};

LawReport check_cocartesian_witness(const CocartesianWitness& w);

// Unique mediating morphism [p, q] : x+y -> t of a cocone (p: x->t, q: y->t).
// Throws MalformedTable when no unique mediator exists.
Id copair(const CocartesianWitness& w, const Id& x, const Id& y, const Id& p,
          const Id& q);

// Search for an initial object and binary coproducts of all pairs, packaged
// as a monoidal structure with the canonical choice 0+x = x = x+0.  In
// strict mode any pair lacking a coproduct yields nullopt; in partial mode
// such pairs are simply left out of the tables.
std::optional<CocartesianWitness> find_cocartesian(
    const FinCat& c, bool allow_partial = false, std::size_t max_objects = 24);

}  // namespace catkit
