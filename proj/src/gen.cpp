#include "catkit/gen.hpp"

#include <algorithm>
#include <string>

namespace catkit {

int Rng::below(int n) {
  if (n <= 1) return 0;
  return static_cast<int>(eng() % static_cast<std::uint64_t>(n));
}

namespace {

// thin category on named elements: one arrow a -> b whenever leq(a, b)
template <typename Leq>
FinCat thin_cat(const std::vector<Id>& elems, Leq&& leq) {
  FinCat c;
  auto arrow = [&](const Id& a, const Id& b) {
    return a == b ? "1" + a : "le:" + a + "<" + b;
  };
  for (const Id& a : elems) c.add_object(a, arrow(a, a));
  for (const Id& a : elems)
    for (const Id& b : elems)
      if (a != b && leq(a, b)) c.add_morphism(arrow(a, b), a, b);
  for (const auto& [f, fd] : c.morphisms)
    for (const auto& [g, gd] : c.morphisms)
      if (fd.cod == gd.dom) c.compose[{g, f}] = arrow(fd.dom, gd.cod);
  return c;
}

}  // namespace

FinCat random_poset(Rng& r, int max_objects) {
  int n = 2 + r.below(std::max(1, max_objects - 1));
  // random relation compatible with the index order, then transitive closure
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) le[i][i] = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) le[i][j] = r.coin();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;

  std::vector<Id> elems;
  for (int i = 0; i < n; ++i) elems.push_back("p" + std::to_string(i));
  return thin_cat(elems, [&](const Id& a, const Id& b) {
    return le[std::stoi(a.substr(1))][std::stoi(b.substr(1))];
  });
}

CocartesianWitness random_semilattice(Rng& r, int ground) {
  int g = std::clamp(ground, 1, 2);
  // a random order on the ground set; down-sets are closed under it
  bool r01 = g == 2 && r.coin();
  bool r10 = g == 2 && !r01 && r.coin();

  std::vector<int> masks;
  for (int m = 0; m < (1 << g); ++m) {
    if (r01 && (m & 2) && !(m & 1)) continue;
    if (r10 && (m & 1) && !(m & 2)) continue;
    masks.push_back(m);
  }
  auto name = [&](int m) {
    Id s = "d";
    for (int i = 0; i < g; ++i) s += (m >> i) & 1 ? '1' : '0';
    return s;
  };
  std::vector<Id> elems;
  for (int m : masks) elems.push_back(name(m));
  FinCat c = thin_cat(elems, [&](const Id& a, const Id& b) {
    for (int i = 0; i < g; ++i)
      if (a[1 + i] == '1' && b[1 + i] != '1') return false;
    return true;
  });
  // union is the join and the empty set is initial, so this cannot fail
  return find_cocartesian(c).value();
}

IndexedCat random_inclusion_indexed(Rng& r, const FinCat& base,
                                    int max_fibre) {
  int cap = std::clamp(max_fibre, 1, 3);
  std::map<Id, int> size;
  for (const Id& x : base.objects) size[x] = 1 + r.below(cap);
  // inclusions need the size to grow along every arrow
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [f, dc] : base.morphisms)
      if (size[dc.cod] < size[dc.dom]) {
        size[dc.cod] = size[dc.dom];
        changed = true;
      }
  }

  auto discrete = [](int n) {
    FinCat c;
    for (int i = 0; i < n; ++i) {
      Id e = "e" + std::to_string(i);
      c.add_object(e, "1" + e);
    }
    return c;
  };

  IndexedCat m;
  m.base = base;
  m.variance = Variance::covariant;
  for (const Id& x : base.objects) m.fibre[x] = discrete(size[x]);
  for (const auto& [f, dc] : base.morphisms) {
    FinFunctor u;
    u.source = m.fibre.at(dc.dom);
    u.target = m.fibre.at(dc.cod);
    for (const Id& a : u.source.objects) {
      u.obj_map[a] = a;
      u.mor_map["1" + a] = "1" + a;
    }
    m.reindex[f] = std::move(u);
  }
  finish_strict(m);
  return m;
}

Box random_box(Rng& r, int port_bound) {
  Box b;
  b.in_types.assign(r.below(port_bound + 1), 2);
  b.out_types.assign(r.below(port_bound + 1), 2);
  return b;
}

MooreMachine random_machine(Rng& r, const Box& b, int max_states) {
  MooreMachine m;
  m.box = b;
  m.states = 1 + r.below(std::max(1, max_states));
  int tin = tuple_count(b.in_types), tout = tuple_count(b.out_types);
  for (int s = 0; s < m.states; ++s) {
    std::vector<int> row;
    for (int i = 0; i < tin; ++i) row.push_back(r.below(m.states));
    m.update.push_back(std::move(row));
    m.readout.push_back(r.below(tout));
  }
  return m;
}

std::optional<WiringDiagram> random_wiring(Rng& r, const Box& dom,
                                           const Box& cod) {
  WiringDiagram w;
  w.dom = dom;
  w.cod = cod;
  for (std::size_t i = 0; i < dom.in_types.size(); ++i) {
    std::vector<WiringDiagram::Feed> options;
    for (std::size_t j = 0; j < cod.in_types.size(); ++j)
      if (cod.in_types[j] == dom.in_types[i])
        options.push_back({true, static_cast<int>(j)});
    for (std::size_t k = 0; k < dom.out_types.size(); ++k)
      if (dom.out_types[k] == dom.in_types[i])
        options.push_back({false, static_cast<int>(k)});
    if (options.empty()) return std::nullopt;
    w.in_route.push_back(options[r.below(static_cast<int>(options.size()))]);
  }
  for (std::size_t z = 0; z < cod.out_types.size(); ++z) {
    std::vector<int> options;
    for (std::size_t k = 0; k < dom.out_types.size(); ++k)
      if (dom.out_types[k] == cod.out_types[z])
        options.push_back(static_cast<int>(k));
    if (options.empty()) return std::nullopt;
    w.out_route.push_back(options[r.below(static_cast<int>(options.size()))]);
  }
  return w;
}

}  // namespace catkit
