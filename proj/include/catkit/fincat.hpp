#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catkit/ids.hpp"
#include "catkit/report.hpp"

namespace catkit {

using IdPair = std::pair<Id, Id>;

struct MorphData {
  Id dom, cod;
  bool operator==(const MorphData&) const = default;
};

// A finite category as explicit tables.  Identifiers are opaque strings and
// equality is structural equality of the tables.
struct FinCat {
  std::set<Id> objects;
  std::map<Id, MorphData> morphisms;
  std::map<Id, Id> identity;    // object -> its identity morphism
  std::map<IdPair, Id> compose; // (g, f) -> g after f, keyed (g, f)

  bool operator==(const FinCat&) const = default;

  bool has_object(const Id& x) const { return objects.count(x) != 0; }
  bool has_morphism(const Id& m) const { return morphisms.count(m) != 0; }

  const Id& dom(const Id& m) const;
  const Id& cod(const Id& m) const;
  const Id& id(const Id& x) const;
  const Id& comp(const Id& g, const Id& f) const;

  // comp over a chain listed codomain-first: comp_path({h,g,f}) = h∘g∘f.
  Id comp_path(const std::vector<Id>& chain) const;

  void add_object(const Id& x, const Id& id_mor);
  void add_morphism(const Id& m, const Id& dom, const Id& cod);

  std::vector<Id> hom(const Id& x, const Id& y) const;
  std::vector<Id> from(const Id& x) const;
  std::vector<Id> to(const Id& y) const;

  std::optional<Id> inverse(const Id& f) const;
  bool is_iso(const Id& f) const { return inverse(f).has_value(); }
  bool is_identity(const Id& f) const;
};

LawReport check_category(const FinCat& c);
FinCat opposite(const FinCat& c);

// Product category; objects/morphisms are pair-encoded "(a|b)".
FinCat product(const FinCat& c, const FinCat& d);

struct FinFunctor {
  FinCat source, target;
  std::map<Id, Id> obj_map, mor_map;

  bool operator==(const FinFunctor&) const = default;

  const Id& ob(const Id& x) const;
  const Id& mor(const Id& m) const;
};

LawReport check_functor(const FinFunctor& f);
FinFunctor identity_functor(const FinCat& c);
FinFunctor constant_functor(const FinCat& src, const FinCat& tgt, const Id& x);
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);

struct NatTrans {
  FinFunctor source_fun, target_fun;
  std::map<Id, Id> components; // source object -> morphism in target

  bool operator==(const NatTrans&) const = default;
  const Id& at(const Id& x) const;
};

LawReport check_nat_trans(const NatTrans& t);
NatTrans identity_nat(const FinFunctor& f);
NatTrans vertical_compose(const NatTrans& b, const NatTrans& a);
// H ∘ alpha (post-whisker by H) and alpha ∘ H (pre-whisker).
NatTrans whisker_left(const FinFunctor& h, const NatTrans& a);
NatTrans whisker_right(const NatTrans& a, const FinFunctor& h);
bool nat_invertible(const NatTrans& t);
NatTrans nat_inverse(const NatTrans& t);

// Brute-force isomorphism search; returns (F: c -> d, G: d -> c) with both
// composites the identity, or nullopt.  Throws SizeLimitExceeded past the cap.
std::optional<std::pair<FinFunctor, FinFunctor>> find_isomorphism(
    const FinCat& c, const FinCat& d, std::size_t max_objects = 8);

}  // namespace catkit
