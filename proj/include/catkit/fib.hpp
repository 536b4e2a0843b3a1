#pragma once

#include "catkit/moncat.hpp"

namespace catkit {

enum class FibDirection { fibration, opfibration };

// Cloven (op)fibration: a functor with a chosen (co)cartesian lift for every
// (base morphism, fibre object) pair.  For fibrations the cleavage is keyed
// (f, b) with b over cod f and the lift ends at b; for opfibrations b lies
// over dom f and the lift starts at b.
struct ClovenFibration {
  FinCat total, base;
  FinFunctor proj;
  std::map<IdPair, Id> cleavage;
  FibDirection direction = FibDirection::fibration;
  bool split = false;

  bool operator==(const ClovenFibration&) const = default;

  const Id& lift(const Id& f, const Id& b) const;
};

// Cartesian in the strong sense: every θ into cod φ whose projection factors
// through P(φ) factors uniquely through φ over each base factorization.
// Decided by full enumeration; only p.total/base/proj are consulted.
bool is_cartesian(const ClovenFibration& p, const Id& phi);
bool is_cocartesian(const ClovenFibration& p, const Id& phi);

// Reports every missing/ill-typed/non-(co)cartesian lift; with the split
// flag set, also identity and composition equalities of the cleavage.
LawReport check_fibration(const ClovenFibration& p);

FinCat fibre(const ClovenFibration& p, const Id& x);

// f* : fibre(cod f) -> fibre(dom f) (dual f_! for opfibrations), computed
// from the cleavage by unique vertical factorization.
FinFunctor reindex(const ClovenFibration& p, const Id& f);

// Unique vertical ψ with lift∘ψ = theta (fibration) or ψ∘lift = theta
// (opfibration); nullopt when none or several exist.
std::optional<Id> vertical_factor(const ClovenFibration& p, const Id& lift,
                                  const Id& theta);

// Build a cloven fibration from a projection functor by choosing the
// lexicographically least (co)cartesian lift for every pair; pairs without
// any lift are left out (check_fibration reports them).
ClovenFibration make_cloven(const FinFunctor& proj, FibDirection direction);

struct Fibred1Cell {
  ClovenFibration source, target;
  FinFunctor top;     // H between totals
  FinFunctor bottom;  // F between bases

  bool operator==(const Fibred1Cell&) const = default;
};

LawReport check_fibred_1cell(const Fibred1Cell& c);

// β between tops above α between bottoms: Q(β_a) = α_{P a} for all a.
LawReport check_fibred_2cell(const NatTrans& beta, const NatTrans& alpha,
                             const ClovenFibration& src,
                             const ClovenFibration& tgt);

struct MonoidalFibrationData {
  ClovenFibration carrier;
  MonoidalData total_monoidal, base_monoidal;

  bool operator==(const MonoidalFibrationData&) const = default;
};

LawReport check_monoidal_fibration(const MonoidalFibrationData& m);

}  // namespace catkit
