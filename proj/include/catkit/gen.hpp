#pragma once

// Seeded generators for property tests and the CLI: the same seed always
// yields the same entity.

#include <cstdint>
#include <optional>
#include <random>

#include "catkit/zoo.hpp"

namespace catkit {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int below(int n);  // uniform in [0, n)
  bool coin() { return below(2) == 1; }
};

// random poset category on 2..max_objects elements "p0", "p1", ...
FinCat random_poset(Rng& r, int max_objects);

// down-set lattice of a random poset on `ground` (1..2) elements together
// with its canonical cocartesian witness (join = union, bottom = empty)
CocartesianWitness random_semilattice(Rng& r, int ground);

// strict covariant indexed category over any base: discrete fibres whose
// sizes grow monotonically along base arrows, reindexing by inclusion
IndexedCat random_inclusion_indexed(Rng& r, const FinCat& base,
                                    int max_fibre);

Box random_box(Rng& r, int port_bound);
MooreMachine random_machine(Rng& r, const Box& b, int max_states);

// a uniformly chosen type-correct routing dom -> cod, if any exists
std::optional<WiringDiagram> random_wiring(Rng& r, const Box& dom,
                                           const Box& cod);

}  // namespace catkit
