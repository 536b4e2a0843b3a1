#pragma once

#include "catkit/groth.hpp"

namespace catkit {

// Monoidal structure carried fibrewise: each fibre is monoidal and every
// reindexing functor is strong monoidal.  Over a cocartesian base this is
// equivalent data to a lax monoidal structure on the pseudofunctor itself;
// the two transfer operations below realize the equivalence.
struct FibrewiseMonoidal {
  IndexedCat carrier;  // covariant
  std::map<Id, MonoidalData> per_fibre;
  std::map<Id, MonoidalFunctorData> reindex_monoidal;

  bool operator==(const FibrewiseMonoidal&) const = default;

  const MonoidalData& at_fibre(const Id& x) const;
  const MonoidalFunctorData& re_monoidal(const Id& f) const;
};

// carrier laws + per-fibre monoidal laws + strong monoidal reindexers whose
// underlying functors are the carrier's reindex tables
LawReport check_fibrewise_monoidal(const FibrewiseMonoidal& f);

// a ⊗_x b := M(∇_x)(μ_{x,x}(a,b)), I_x := M(!_x)(μ_0); associator/unitors
// assembled from ω/ζ/ξ, the compositor and the laxator cells; reindexers
// get their strong structure from μ_{f,f} and the compositor.
// Throws BaseNotCocartesian when the witness tensor disagrees with the
// base monoidal data of l.
FibrewiseMonoidal global_to_fibrewise(const LaxMonoidalIndexed& l,
                                      const CocartesianWitness& w);

// μ_{x,y}(a,b) := M(ι_x)(a) ⊗_{x+y} M(ι_y)(b), μ_0 := I_0; pseudonaturality
// cells and coherence modifications assembled from the strong reindexers.
LaxMonoidalIndexed fibrewise_to_global(const FibrewiseMonoidal& f,
                                       const CocartesianWitness& w);

// Round trips of the transfer.  Each comparison 2-cell is constructed
// explicitly (no search) and checked invertible, natural, and compatible
// with the pseudonaturality cells; in the strict settings the tables are
// additionally asserted equal.
LawReport roundtrip_transfer(const LaxMonoidalIndexed& l,
                             const CocartesianWitness& w);
LawReport roundtrip_transfer(const FibrewiseMonoidal& f,
                             const CocartesianWitness& w);

// Analysis of the special case where l is an ordinary lax monoidal functor
// (strict carrier, identity laxator cells and coherence modifications): the
// induced fibre structures are then strict monoidal, which is asserted.
// For genuinely pseudo input the findings are reported without assertion.
struct StrictnessReport {
  bool ordinary_lax = false;
  std::string pseudo_witness;        // first obstruction when not ordinary
  std::map<Id, bool> fibre_strict;   // identity associator/unitor tables
  std::map<Id, bool> reindex_strict; // reindexer structure cells identities
  LawReport law;                     // assertions in the ordinary case
};

StrictnessReport strictness_analysis(const LaxMonoidalIndexed& l,
                                     const CocartesianWitness& w);

// κ^x : (− ⊗_x −)∘Δ ⇒ 1 and λ^x : const_{I_x} ⇒ 1 certifying that the
// global tensor on the total category is a coproduct.
struct CocartTotalCriterion {
  std::map<Id, NatTrans> kappa;
  std::map<Id, NatTrans> lambda_aug;

  bool operator==(const CocartTotalCriterion&) const = default;
};

NatTrans make_kappa(const LaxMonoidalIndexed& l, const CocartesianWitness& w,
                    const Id& x, std::map<Id, Id> components);
NatTrans make_lambda(const LaxMonoidalIndexed& l, const CocartesianWitness& w,
                     const Id& x, std::map<Id, Id> components);

// Verifies naturality of κ/λ and the two compatibility equations
// 1_a = κ^x_a ∘ M(∇_x)(μ_{x,x}(λ^x_a, 1_a)) and its mirror (the simplified
// strict forms; instances whose domain object differs from a in the pseudo
// case are counted skipped, as are base objects whose ∇/!/μ fall outside a
// truncated universe).  On pass, certifies extensionally that the total
// tensor is a coproduct and (0, μ_0) initial.
LawReport check_cocartesian_total(const LaxMonoidalIndexed& l,
                                  const CocartesianWitness& w,
                                  const CocartTotalCriterion& crit);

}  // namespace catkit
