#pragma once

#include <optional>

#include "catkit/moncat.hpp"

namespace catkit {

enum class Variance { contravariant, covariant };

// Pseudofunctor into Cat as finite tables.
//
// Orientation conventions, fixed once and used everywhere:
//   contravariant, f: x -> y:  reindex[f] : M y -> M x
//     compositor keyed (g, f) for composable g∘f:
//       δ_{g,f} : (M f)∘(M g) ⇒ M(g∘f), component at a ∈ M(cod g)
//   covariant, f: x -> y:      reindex[f] : M x -> M y
//       δ_{g,f} : (M g)∘(M f) ⇒ M(g∘f), component at a ∈ M(dom f)
//   both: unitor γ_x : id_{M x} ⇒ M(1_x)
struct IndexedCat {
  FinCat base;
  Variance variance = Variance::contravariant;
  std::map<Id, FinCat> fibre;
  std::map<Id, FinFunctor> reindex;
  std::map<IdPair, NatTrans> compositor;
  std::map<Id, NatTrans> unitor;
  bool strict = false;

  bool operator==(const IndexedCat&) const = default;

  const FinCat& fib(const Id& x) const;
  const FinFunctor& re(const Id& f) const;
  const Id& delta_at(const Id& g, const Id& f, const Id& a) const;
  const Id& gamma_at(const Id& x, const Id& a) const;

  // source/target fibre objects of the reindexer along f
  const Id& re_src(const Id& f) const;
  const Id& re_tgt(const Id& f) const;
};

// Build the compositor/unitor NatTrans with the conventional endpoints.
NatTrans make_delta(const IndexedCat& m, const Id& g, const Id& f,
                    std::map<Id, Id> components);
NatTrans make_gamma(const IndexedCat& m, const Id& x,
                    std::map<Id, Id> components);

// Fill identity compositor/unitor tables and set the strict flag; requires
// the reindex tables to compose on the nose (checked by check_pseudofunctor).
void finish_strict(IndexedCat& m);

LawReport check_pseudofunctor(const IndexedCat& m);

// Same tables over the opposite base with the variance flipped.
IndexedCat opposite_indexed(const IndexedCat& m);

// Component tables of a two-argument functor M x × M y -> M z.
struct PairMap {
  std::map<IdPair, Id> obj;
  std::map<IdPair, Id> mor;

  bool operator==(const PairMap&) const = default;
  const Id& ob(const Id& a, const Id& b) const;
  const Id& mr(const Id& k, const Id& l) const;
};

LawReport check_pair_functor(const PairMap& p, const FinCat& a,
                             const FinCat& b, const FinCat& c);

// Lax monoidal structure on an IndexedCat.  Component orientations:
//   covariant, f: x->z, g: y->w, laxator cell μ_{f,g} at (a ∈ Mx, b ∈ My):
//     M(f⊗g)(μ_{x,y}(a,b)) -> μ_{z,w}((Mf)a, (Mg)b)
//   contravariant, at (c ∈ Mz, d ∈ Mw):
//     μ_{x,y}((Mf)c, (Mg)d) -> M(f⊗g)(μ_{z,w}(c,d))
//   omega at (a,b,c), covariant:
//     M(α_{x,y,z})(μ_{x⊗y,z}(μ_{x,y}(a,b),c)) -> μ_{x,y⊗z}(a, μ_{y,z}(b,c))
//   contravariant:
//     μ_{x⊗y,z}(μ_{x,y}(a,b),c) -> M(α_{x,y,z})(μ_{x,y⊗z}(a, μ_{y,z}(b,c)))
//   zeta_x at a (right unitor filler), covariant:
//     M(r_x)(μ_{x,I}(a, μ0)) -> a        contravariant: μ_{x,I}(a,μ0) -> M(r_x)(a)
//   xi_x at a (left unitor filler), covariant:
//     M(l_x)(μ_{I,x}(μ0, a)) -> a        contravariant: μ_{I,x}(μ0,a) -> M(l_x)(a)
//   braid cell v_{x,y} at (a,b), covariant:
//     M(b_{x,y})(μ_{x,y}(a,b)) -> μ_{y,x}(b,a)
//   contravariant: μ_{x,y}(a,b) -> M(b_{x,y})(μ_{y,x}(b,a))
struct LaxMonoidalIndexed {
  IndexedCat carrier;
  MonoidalData base_monoidal;
  std::map<IdPair, PairMap> laxator;                    // per (x,y) with x⊗y
  std::map<IdPair, std::map<IdPair, Id>> laxator_cells; // per (f,g) with f⊗g
  Id unit_object;                                       // μ0 ∈ M(I)
  std::map<IdTriple, std::map<IdTriple, Id>> omega;
  std::map<Id, std::map<Id, Id>> zeta, xi;
  std::optional<std::map<IdPair, std::map<IdPair, Id>>> braid_cell;

  bool operator==(const LaxMonoidalIndexed&) const = default;

  const PairMap& mu(const Id& x, const Id& y) const;
  const Id& mu_cell(const Id& f, const Id& g, const Id& a, const Id& b) const;
};

// Checks pseudofunctor + base + all component shapes and invertibility
// directly, then delegates the residual coherence to check_monoidal on the
// constructed total category (see groth module).
LawReport check_lax_monoidal(const LaxMonoidalIndexed& l);

// Shape/invertibility part only (no total-category delegation); used by
// constructions that need validity before building the total.
LawReport check_lax_monoidal_components(const LaxMonoidalIndexed& l);

struct IndexedMonoidalPart {
  MonoidalFunctorData base_monfun;                // ψ on the base functor
  std::map<IdPair, std::map<IdPair, Id>> m_cells; // (x,y) -> (a,b) -> mor
  Id m_unit;                                      // morphism in N(F(I))
  bool operator==(const IndexedMonoidalPart&) const = default;
};

struct Indexed1Cell {
  IndexedCat source, target;
  FinFunctor base_fun;                 // F
  std::map<Id, FinFunctor> components; // τ_x : M x -> N(F x)
  std::map<Id, NatTrans> squares;      // τ_f, see check for orientation
  std::optional<IndexedMonoidalPart> monoidal_part;

  bool operator==(const Indexed1Cell&) const = default;
  const FinFunctor& tau(const Id& x) const;
  const Id& square_at(const Id& f, const Id& a) const;
};

NatTrans make_square(const Indexed1Cell& c, const Id& f,
                     std::map<Id, Id> components);
Indexed1Cell identity_1cell(const IndexedCat& m);
LawReport check_indexed_1cell(const Indexed1Cell& c);

struct Indexed2Cell {
  Indexed1Cell source, target;  // τ, σ
  NatTrans base_nat;            // α : F ⇒ G
  std::map<Id, NatTrans> modification;  // m_x

  bool operator==(const Indexed2Cell&) const = default;
  const Id& mod_at(const Id& x, const Id& a) const;
};

NatTrans make_modification(const Indexed2Cell& c, const Id& x,
                           std::map<Id, Id> components);
Indexed2Cell identity_2cell(const Indexed1Cell& c);
LawReport check_indexed_2cell(const Indexed2Cell& c);

}  // namespace catkit
