#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "catkit/corr.hpp"

namespace catkit {

// ---- FinSet skeleton: objects "0".."bound", all functions as morphisms.
// A function f: m -> n is encoded "fm>n:v0v1..." with one digit per value.
FinCat finset_skeleton(int bound);

Id fs_fun(int m, int n, const std::vector<int>& vals);
// decode: returns (m, n, values)
struct FsFun {
  int m, n;
  std::vector<int> vals;
};
FsFun fs_dec(const Id& f);
int fs_card(const Id& object);

// Cocartesian witness for the skeleton with the canonical left-offset
// injections; partial above the bound.
CocartesianWitness finset_cocartesian(int bound);

// Opposite skeleton with the cartesian product as its coproduct (products
// become coproducts in the opposite); pairs m*n above the bound are left
// out of the tensor tables.  Index convention: (i, j) of m x n is i*n + j.
CocartesianWitness opfinset_cartesian(int bound);

// ---- Simple directed graphs with loops on vertex set {0..n-1}, encoded
// "g<n>:<bits>" with n*n adjacency bits row-major.  Fibre morphisms are
// edge-set inclusions (vertex-fixing homomorphisms), encoded "i:g>h".
struct GraphObj {
  int n;
  std::set<std::pair<int, int>> edges;
};
Id graph_id(const GraphObj& g);
GraphObj graph_dec(const Id& g);
std::vector<Id> all_graphs(int n);
FinCat graph_fibre(int n);                    // inclusion poset
Id graph_push(const FsFun& f, const Id& g);   // edge pushforward

// Grph_(-) over the skeleton: strict covariant carrier, laxator = disjoint
// union with left-offset renaming, every structure cell an identity.
// Capped at vertex bound 2 (the bound-3 fibre has ~20k arrows, and functor
// values store their endpoint categories).
LaxMonoidalIndexed graph_opindexed(int vertex_bound);

// grothendieck + monoidal_grothendieck of graph_opindexed
MonoidalFibrationData vertex_opfibration(int vertex_bound);

// ---- Slices: x |-> base/x with post-composition reindexing.  Fibre
// objects are the base morphisms into x; fibre morphisms are "(u|a|b)"
// for u: dom a -> dom b with b.u = a.  Laxator (a, b) |-> a ⊗ b.
LaxMonoidalIndexed slice_opindexed(const FinCat& base,
                                   const CocartesianWitness& w);

// ---- Families: m |-> [m, C] = C^m over the opposite skeleton, reindexing
// by precomposition, laxator pointwise tensor on m*n.  Tuples are encoded
// "(a0|a1|...)" ("()" for the empty tuple); requires a total tensor on c.
LaxMonoidalIndexed family_fibration(const MonoidalData& c, int set_bound);

// ---- Decorators and network models.  A decorator is a lax monoidal
// assignment n |-> finite decoration set, given by callables so that large
// intermediate sets (e.g. graphs on 2n vertices) are never materialized.
struct Decorator {
  std::string name;
  std::function<std::vector<Id>(int)> elements;             // F(n)
  std::function<Id(const FsFun&, const Id&)> act;           // F(f)(a)
  std::function<Id(int, int, const Id&, const Id&)> lax;    // φ_{m,n}(a,b)
  Id unit;                                                  // φ_0 ∈ F(0)
};

// functoriality of act + naturality of lax, on all maps within the bound
LawReport check_decorator(const Decorator& d, int n_bound);

Decorator simple_graph_decorator();
Decorator subset_decorator();  // n |-> subsets of {0..n-1}, direct image

struct Monoid {
  std::vector<Id> elements;
  std::map<IdPair, Id> mult;
  Id unit;
  bool operator==(const Monoid&) const = default;
};
LawReport check_monoid(const Monoid& m, bool require_commutative = false);

struct NetworkModel {
  std::map<Id, Monoid> monoids;  // object "n" -> monoid on F(n)
  // (m, n) -> (a, b) -> element of F(m+n); present when m+n is in bound
  std::map<IdPair, std::map<IdPair, Id>> laxator;
  bool operator==(const NetworkModel&) const = default;
};

// monoid laws per constituent + laxator components are monoid morphisms
LawReport check_network_model(const NetworkModel& m);

NetworkModel decorator_to_network_model(const Decorator& d, int n_bound);

// ---- Wiring diagrams and Moore machines.  Types are cardinalities; a box
// has ordered input/output ports, each carrying a type.
struct Box {
  std::vector<int> in_types, out_types;
  bool operator==(const Box&) const = default;
};
Id box_id(const Box& b);
Box box_dec(const Id& b);

struct WiringDiagram {
  Box dom, cod;
  struct Feed {
    bool outer;  // true: outer input port of cod; false: output port of dom
    int index;
    bool operator==(const Feed&) const = default;
  };
  std::vector<Feed> in_route;  // per dom input port
  std::vector<int> out_route;  // per cod output port -> dom output port
  bool operator==(const WiringDiagram&) const = default;
};
Id wiring_id(const WiringDiagram& w);
WiringDiagram wiring_dec(const Id& w);

WiringDiagram wiring_identity(const Box& b);
WiringDiagram wiring_compose(const WiringDiagram& psi,
                             const WiringDiagram& phi);
WiringDiagram wiring_parallel(const WiringDiagram& a, const WiringDiagram& b);
WiringDiagram wiring_braid(const Box& x, const Box& y);

// all boxes with at most port_bound ports per side over the given types,
// tensor = parallel placement (partial above the bound)
MonoidalData wiring_category(const std::vector<int>& types, int port_bound);

// Moore machine over a box: update indexed by flat input tuple (mixed radix
// over input ports in order), readout a flat output tuple index per state.
struct MooreMachine {
  Box box;
  int states = 1;
  std::vector<std::vector<int>> update;  // [state][input index] -> state
  std::vector<int> readout;              // [state] -> output index
  bool operator==(const MooreMachine&) const = default;
};
Id machine_id(const MooreMachine& m);
MooreMachine machine_dec(const Id& m, const Box& box);

int tuple_count(const std::vector<int>& types);

MooreMachine dds_apply(const WiringDiagram& w, const MooreMachine& m);
MooreMachine dds_parallel(const MooreMachine& a, const MooreMachine& b);

// output sequence from a start state under a word of flat input indices
std::vector<int> run_machine(const MooreMachine& m, int start,
                             const std::vector<int>& word);

// equal outputs from every shared start state on all words up to max_len
// (pair-exploration; saturates at |S1|*|S2| so the default is exhaustive)
bool behaviorally_equal(const MooreMachine& a, const MooreMachine& b,
                        int max_len = -1);

// category of machines over one box: objects in-universe machines, arrows
// state maps commuting with update and readout, encoded "h:m1>m2:digits"
FinCat dds_fibre(const Box& b, int state_bound);

struct DdsTotal {
  LaxMonoidalIndexed indexed;
  GrothResult groth;
  // present only when the parallel product stays inside the state bound for
  // every fibre pair (i.e. state_bound 1); otherwise the laxator is partial
  std::optional<MonoidalFibrationData> monoidal;
};

// monoidal Grothendieck of the DDS data on the bounded universe
DdsTotal dds_total_category(const std::vector<int>& types, int port_bound,
                            int state_bound);

}  // namespace catkit
