#include <algorithm>
#include <string>

#include "catkit/groth.hpp"
#include "catkit/zoo.hpp"

namespace catkit {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  std::size_t p = 0;
  while (p < s.size()) {
    auto q = s.find(',', p);
    if (q == std::string::npos) q = s.size();
    out.push_back(std::stoi(s.substr(p, q - p)));
    p = q + 1;
  }
  return out;
}

std::vector<int> tuple_vals(int flat, const std::vector<int>& types) {
  std::vector<int> v(types.size());
  for (int i = static_cast<int>(types.size()) - 1; i >= 0; --i) {
    v[i] = flat % types[i];
    flat /= types[i];
  }
  return v;
}

int tuple_flat(const std::vector<int>& v, const std::vector<int>& types) {
  int f = 0;
  for (std::size_t i = 0; i < types.size(); ++i) f = f * types[i] + v[i];
  return f;
}

void validate_wiring(const WiringDiagram& w) {
  if (w.in_route.size() != w.dom.in_types.size() ||
      w.out_route.size() != w.cod.out_types.size())
    throw ShapeMismatch("wiring routing arity mismatch");
  for (std::size_t p = 0; p < w.in_route.size(); ++p) {
    const auto& f = w.in_route[p];
    int t = w.dom.in_types[p];
    if (f.outer) {
      if (f.index < 0 || f.index >= static_cast<int>(w.cod.in_types.size()) ||
          w.cod.in_types[f.index] != t)
        throw ShapeMismatch("wiring feed type mismatch on input " +
                            std::to_string(p));
    } else {
      if (f.index < 0 || f.index >= static_cast<int>(w.dom.out_types.size()) ||
          w.dom.out_types[f.index] != t)
        throw ShapeMismatch("wiring feedback type mismatch on input " +
                            std::to_string(p));
    }
  }
  for (std::size_t p = 0; p < w.out_route.size(); ++p) {
    int q = w.out_route[p];
    if (q < 0 || q >= static_cast<int>(w.dom.out_types.size()) ||
        w.dom.out_types[q] != w.cod.out_types[p])
      throw ShapeMismatch("wiring output type mismatch on output " +
                          std::to_string(p));
  }
}

}  // namespace

Id box_id(const Box& b) {
  return "b(" + join_ints(b.in_types) + ";" + join_ints(b.out_types) + ")";
}

Box box_dec(const Id& b) {
  if (b.size() < 4 || b.substr(0, 2) != "b(" || b.back() != ')')
    throw ParseError("not a box: " + b);
  auto sc = b.find(';');
  if (sc == Id::npos) throw ParseError("not a box: " + b);
  Box out;
  out.in_types = split_ints(b.substr(2, sc - 2));
  out.out_types = split_ints(b.substr(sc + 1, b.size() - sc - 2));
  return out;
}

Id wiring_id(const WiringDiagram& w) {
  // note: no '|' anywhere, so wiring ids survive tuple encoding
  Id s = "w[" + box_id(w.dom) + ">" + box_id(w.cod) + "/in:";
  for (std::size_t p = 0; p < w.in_route.size(); ++p) {
    if (p) s += ',';
    s += (w.in_route[p].outer ? "o" : "f") + std::to_string(w.in_route[p].index);
  }
  s += "/out:" + join_ints(w.out_route) + "]";
  return s;
}

WiringDiagram wiring_dec(const Id& s) {
  if (s.size() < 4 || s.substr(0, 2) != "w[" || s.back() != ']')
    throw ParseError("not a wiring diagram: " + s);
  auto gt = s.find(">b(");
  auto in = s.find("/in:");
  auto ou = s.find("/out:");
  if (gt == Id::npos || in == Id::npos || ou == Id::npos)
    throw ParseError("not a wiring diagram: " + s);
  WiringDiagram w;
  w.dom = box_dec(s.substr(2, gt - 2));
  w.cod = box_dec(s.substr(gt + 1, in - gt - 1));
  std::string feeds = s.substr(in + 4, ou - in - 4);
  std::size_t p = 0;
  while (p < feeds.size()) {
    auto q = feeds.find(',', p);
    if (q == std::string::npos) q = feeds.size();
    std::string tok = feeds.substr(p, q - p);
    if (tok.empty() || (tok[0] != 'o' && tok[0] != 'f'))
      throw ParseError("bad feed token in " + s);
    w.in_route.push_back({tok[0] == 'o', std::stoi(tok.substr(1))});
    p = q + 1;
  }
  w.out_route = split_ints(s.substr(ou + 5, s.size() - ou - 6));
  validate_wiring(w);
  return w;
}

WiringDiagram wiring_identity(const Box& b) {
  WiringDiagram w;
  w.dom = b;
  w.cod = b;
  for (std::size_t p = 0; p < b.in_types.size(); ++p)
    w.in_route.push_back({true, static_cast<int>(p)});
  for (std::size_t p = 0; p < b.out_types.size(); ++p)
    w.out_route.push_back(static_cast<int>(p));
  return w;
}

WiringDiagram wiring_compose(const WiringDiagram& psi,
                             const WiringDiagram& phi) {
  if (phi.cod != psi.dom)
    throw ShapeMismatch("wiring diagrams do not compose");
  WiringDiagram w;
  w.dom = phi.dom;
  w.cod = psi.cod;
  for (std::size_t z = 0; z < psi.out_route.size(); ++z)
    w.out_route.push_back(phi.out_route[psi.out_route[z]]);
  for (std::size_t x = 0; x < phi.in_route.size(); ++x) {
    auto f = phi.in_route[x];
    if (!f.outer) {
      w.in_route.push_back(f);
      continue;
    }
    auto g = psi.in_route[f.index];
    if (g.outer)
      w.in_route.push_back(g);
    else
      w.in_route.push_back({false, phi.out_route[g.index]});
  }
  return w;
}

WiringDiagram wiring_parallel(const WiringDiagram& a, const WiringDiagram& b) {
  WiringDiagram w;
  auto cat = [](std::vector<int> u, const std::vector<int>& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  };
  w.dom = {cat(a.dom.in_types, b.dom.in_types),
           cat(a.dom.out_types, b.dom.out_types)};
  w.cod = {cat(a.cod.in_types, b.cod.in_types),
           cat(a.cod.out_types, b.cod.out_types)};
  int oi = static_cast<int>(a.cod.in_types.size());
  int oo = static_cast<int>(a.dom.out_types.size());
  w.in_route = a.in_route;
  for (auto f : b.in_route) {
    f.index += f.outer ? oi : oo;
    w.in_route.push_back(f);
  }
  w.out_route = a.out_route;
  for (int q : b.out_route) w.out_route.push_back(q + oo);
  return w;
}

WiringDiagram wiring_braid(const Box& x, const Box& y) {
  WiringDiagram w;
  auto cat = [](std::vector<int> u, const std::vector<int>& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  };
  w.dom = {cat(x.in_types, y.in_types), cat(x.out_types, y.out_types)};
  w.cod = {cat(y.in_types, x.in_types), cat(y.out_types, x.out_types)};
  int yi = static_cast<int>(y.in_types.size());
  int xo = static_cast<int>(x.out_types.size());
  for (std::size_t i = 0; i < x.in_types.size(); ++i)
    w.in_route.push_back({true, yi + static_cast<int>(i)});
  for (std::size_t j = 0; j < y.in_types.size(); ++j)
    w.in_route.push_back({true, static_cast<int>(j)});
  for (std::size_t j = 0; j < y.out_types.size(); ++j)
    w.out_route.push_back(xo + static_cast<int>(j));
  for (std::size_t i = 0; i < x.out_types.size(); ++i)
    w.out_route.push_back(static_cast<int>(i));
  return w;
}

MonoidalData wiring_category(const std::vector<int>& types, int port_bound) {
  if (types.empty() || port_bound < 0 || port_bound > 2)
    throw SizeLimitExceeded("wiring_category: port bound out of range");
  for (int t : types)
    if (t < 1 || t > 3)
      throw SizeLimitExceeded("wiring_category: type cardinality out of range");
  std::set<std::vector<int>> sides{{}};
  {
    std::vector<std::vector<int>> layer{{}};
    for (int len = 1; len <= port_bound; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& s : layer)
        for (int t : types) {
          auto s2 = s;
          s2.push_back(t);
          next.push_back(s2);
          sides.insert(s2);
        }
      layer = std::move(next);
    }
  }
  std::vector<Box> boxes;
  for (const auto& in : sides)
    for (const auto& out : sides) boxes.push_back({in, out});
  if (boxes.size() > 36)
    throw SizeLimitExceeded("wiring_category: too many boxes");

  MonoidalData md;
  FinCat& c = md.base;
  for (const Box& b : boxes) c.add_object(box_id(b), wiring_id(wiring_identity(b)));

  std::map<Id, WiringDiagram> table;
  for (const Box& b : boxes)
    table[wiring_id(wiring_identity(b))] = wiring_identity(b);
  for (const Box& X : boxes)
    for (const Box& Y : boxes) {
      // candidate feeds per input port of X, candidate sources per output of Y
      std::vector<std::vector<WiringDiagram::Feed>> feed_opts;
      bool dead = false;
      for (int t : X.in_types) {
        std::vector<WiringDiagram::Feed> opts;
        for (std::size_t j = 0; j < Y.in_types.size(); ++j)
          if (Y.in_types[j] == t) opts.push_back({true, static_cast<int>(j)});
        for (std::size_t q = 0; q < X.out_types.size(); ++q)
          if (X.out_types[q] == t) opts.push_back({false, static_cast<int>(q)});
        if (opts.empty()) dead = true;
        feed_opts.push_back(std::move(opts));
      }
      std::vector<std::vector<int>> out_opts;
      for (int t : Y.out_types) {
        std::vector<int> opts;
        for (std::size_t q = 0; q < X.out_types.size(); ++q)
          if (X.out_types[q] == t) opts.push_back(static_cast<int>(q));
        if (opts.empty()) dead = true;
        out_opts.push_back(std::move(opts));
      }
      if (dead) continue;
      std::vector<std::size_t> fi(feed_opts.size(), 0), oi(out_opts.size(), 0);
      while (true) {
        WiringDiagram w;
        w.dom = X;
        w.cod = Y;
        for (std::size_t p = 0; p < fi.size(); ++p)
          w.in_route.push_back(feed_opts[p][fi[p]]);
        for (std::size_t p = 0; p < oi.size(); ++p)
          w.out_route.push_back(out_opts[p][oi[p]]);
        Id wid = wiring_id(w);
        if (!table.count(wid)) {
          c.add_morphism(wid, box_id(X), box_id(Y));
          table[wid] = w;
        }
        // odometer over both index vectors
        int i = static_cast<int>(fi.size()) - 1;
        while (i >= 0 && fi[i] + 1 == feed_opts[i].size()) fi[i--] = 0;
        if (i >= 0) {
          ++fi[i];
          continue;
        }
        int j = static_cast<int>(oi.size()) - 1;
        while (j >= 0 && oi[j] + 1 == out_opts[j].size()) oi[j--] = 0;
        if (j < 0) break;
        ++oi[j];
      }
    }
  for (const auto& [p, pd] : c.morphisms)
    for (const auto& [q, qd] : c.morphisms) {
      if (qd.cod != pd.dom) continue;
      c.compose[{p, q}] = wiring_id(wiring_compose(table.at(p), table.at(q)));
    }

  md.unit = box_id({{}, {}});
  auto fits = [&](const Box& b) {
    return static_cast<int>(b.in_types.size()) <= port_bound &&
           static_cast<int>(b.out_types.size()) <= port_bound;
  };
  auto cat_box = [](const Box& a, const Box& b) {
    Box out = a;
    out.in_types.insert(out.in_types.end(), b.in_types.begin(),
                        b.in_types.end());
    out.out_types.insert(out.out_types.end(), b.out_types.begin(),
                         b.out_types.end());
    return out;
  };
  for (const Box& a : boxes)
    for (const Box& b : boxes) {
      Box ab = cat_box(a, b);
      if (!fits(ab)) continue;
      md.tensor_obj[{box_id(a), box_id(b)}] = box_id(ab);
    }
  for (const auto& [p, w1] : table)
    for (const auto& [q, w2] : table) {
      if (!fits(cat_box(w1.dom, w2.dom)) || !fits(cat_box(w1.cod, w2.cod)))
        continue;
      md.tensor_mor[{p, q}] = wiring_id(wiring_parallel(w1, w2));
    }
  for (const Box& a : boxes)
    for (const Box& b : boxes)
      for (const Box& cc : boxes) {
        Box ab = cat_box(a, b), bc = cat_box(b, cc);
        if (!fits(ab) || !fits(bc) || !fits(cat_box(ab, cc))) continue;
        md.associator[{box_id(a), box_id(b), box_id(cc)}] =
            c.id(box_id(cat_box(ab, cc)));
      }
  for (const Box& b : boxes) {
    md.left_unitor[box_id(b)] = c.id(box_id(b));
    md.right_unitor[box_id(b)] = c.id(box_id(b));
  }
  md.braiding.emplace();
  for (const Box& a : boxes)
    for (const Box& b : boxes) {
      if (!fits(cat_box(a, b))) continue;
      (*md.braiding)[{box_id(a), box_id(b)}] = wiring_id(wiring_braid(a, b));
    }
  md.symmetric = true;
  return md;
}

// ---- Moore machines -------------------------------------------------------

int tuple_count(const std::vector<int>& types) {
  int n = 1;
  for (int t : types) n *= t;
  return n;
}

Id machine_id(const MooreMachine& m) {
  if (m.states > 9 || tuple_count(m.box.out_types) > 10)
    throw UniverseOverflow("machine too large to encode");
  Id s = "m" + std::to_string(m.states) + ":u";
  for (const auto& row : m.update)
    for (int v : row) s += static_cast<char>('0' + v);
  s += ":r";
  for (int v : m.readout) s += static_cast<char>('0' + v);
  return s;
}

MooreMachine machine_dec(const Id& s, const Box& box) {
  if (s.empty() || s[0] != 'm') throw ParseError("not a machine: " + s);
  auto u = s.find(":u");
  auto r = s.find(":r");
  if (u == Id::npos || r == Id::npos || r < u)
    throw ParseError("not a machine: " + s);
  MooreMachine m;
  m.box = box;
  m.states = std::stoi(s.substr(1, u - 1));
  int tin = tuple_count(box.in_types);
  std::string ud = s.substr(u + 2, r - u - 2);
  std::string rd = s.substr(r + 2);
  if (static_cast<int>(ud.size()) != m.states * tin ||
      static_cast<int>(rd.size()) != m.states)
    throw ParseError("machine table size mismatch: " + s);
  m.update.assign(m.states, std::vector<int>(tin));
  for (int st = 0; st < m.states; ++st)
    for (int i = 0; i < tin; ++i) m.update[st][i] = ud[st * tin + i] - '0';
  for (int st = 0; st < m.states; ++st) m.readout.push_back(rd[st] - '0');
  return m;
}

MooreMachine dds_apply(const WiringDiagram& w, const MooreMachine& m) {
  validate_wiring(w);
  if (m.box != w.dom) throw ShapeMismatch("machine does not fill the wiring");
  MooreMachine out;
  out.box = w.cod;
  out.states = m.states;
  int tin = tuple_count(w.cod.in_types);
  out.update.assign(m.states, std::vector<int>(tin));
  out.readout.resize(m.states);
  for (int s = 0; s < m.states; ++s) {
    auto ov = tuple_vals(m.readout[s], m.box.out_types);
    std::vector<int> rv(w.cod.out_types.size());
    for (std::size_t p = 0; p < rv.size(); ++p) rv[p] = ov[w.out_route[p]];
    out.readout[s] = tuple_flat(rv, w.cod.out_types);
    for (int flat = 0; flat < tin; ++flat) {
      auto yv = tuple_vals(flat, w.cod.in_types);
      std::vector<int> xv(w.dom.in_types.size());
      for (std::size_t p = 0; p < xv.size(); ++p) {
        const auto& f = w.in_route[p];
        xv[p] = f.outer ? yv[f.index] : ov[f.index];
      }
      out.update[s][flat] = m.update[s][tuple_flat(xv, w.dom.in_types)];
    }
  }
  return out;
}

MooreMachine dds_parallel(const MooreMachine& a, const MooreMachine& b) {
  MooreMachine out;
  out.box.in_types = a.box.in_types;
  out.box.in_types.insert(out.box.in_types.end(), b.box.in_types.begin(),
                          b.box.in_types.end());
  out.box.out_types = a.box.out_types;
  out.box.out_types.insert(out.box.out_types.end(), b.box.out_types.begin(),
                           b.box.out_types.end());
  out.states = a.states * b.states;
  int ta = tuple_count(a.box.in_types), tb = tuple_count(b.box.in_types);
  int tob = tuple_count(b.box.out_types);
  out.update.assign(out.states, std::vector<int>(ta * tb));
  out.readout.resize(out.states);
  for (int sa = 0; sa < a.states; ++sa)
    for (int sb = 0; sb < b.states; ++sb) {
      int s = sa * b.states + sb;
      out.readout[s] = a.readout[sa] * tob + b.readout[sb];
      for (int ia = 0; ia < ta; ++ia)
        for (int ib = 0; ib < tb; ++ib)
          out.update[s][ia * tb + ib] =
              a.update[sa][ia] * b.states + b.update[sb][ib];
    }
  return out;
}

std::vector<int> run_machine(const MooreMachine& m, int start,
                             const std::vector<int>& word) {
  if (start < 0 || start >= m.states)
    throw ShapeMismatch("start state out of range");
  std::vector<int> out{m.readout[start]};
  int s = start;
  for (int i : word) {
    s = m.update[s][i];
    out.push_back(m.readout[s]);
  }
  return out;
}

bool behaviorally_equal(const MooreMachine& a, const MooreMachine& b,
                        int max_len) {
  if (a.box != b.box || a.states != b.states) return false;
  int tin = tuple_count(a.box.in_types);
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> frontier;
  for (int s = 0; s < a.states; ++s) {
    seen.insert({s, s});
    frontier.push_back({s, s});
  }
  int depth = 0;
  while (!frontier.empty() && (max_len < 0 || depth <= max_len)) {
    std::vector<std::pair<int, int>> next;
    for (auto [s1, s2] : frontier) {
      if (a.readout[s1] != b.readout[s2]) return false;
      if (max_len >= 0 && depth == max_len) continue;
      for (int i = 0; i < tin; ++i) {
        std::pair<int, int> succ{a.update[s1][i], b.update[s2][i]};
        if (seen.insert(succ).second) next.push_back(succ);
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  return true;
}

namespace {

Id state_map_id(const Id& m1, const Id& m2, const std::vector<int>& h) {
  Id s = "h:" + m1 + ">" + m2 + ":";
  for (int v : h) s += static_cast<char>('0' + v);
  return s;
}

std::vector<int> state_map_vals(const Id& h) {
  auto c = h.rfind(':');
  std::vector<int> out;
  for (std::size_t i = c + 1; i < h.size(); ++i) out.push_back(h[i] - '0');
  return out;
}

std::vector<MooreMachine> all_machines(const Box& b, int state_bound) {
  int tin = tuple_count(b.in_types), tout = tuple_count(b.out_types);
  long total = 0;
  for (int s = 1; s <= state_bound; ++s) {
    long n = 1;
    for (int k = 0; k < s * tin; ++k) {
      n *= s;
      if (n > 4096) throw SizeLimitExceeded("machine universe too large");
    }
    for (int k = 0; k < s; ++k) {
      n *= tout;
      if (n > 4096) throw SizeLimitExceeded("machine universe too large");
    }
    total += n;
    if (total > 4096) throw SizeLimitExceeded("machine universe too large");
  }
  std::vector<MooreMachine> out;
  for (int s = 1; s <= state_bound; ++s) {
    // mixed-radix odometer over s*tin update digits (base s) and s readout
    // digits (base tout)
    std::vector<int> dig(s * tin + s, 0);
    while (true) {
      MooreMachine m;
      m.box = b;
      m.states = s;
      m.update.assign(s, std::vector<int>(tin));
      for (int st = 0; st < s; ++st)
        for (int i = 0; i < tin; ++i) m.update[st][i] = dig[st * tin + i];
      for (int st = 0; st < s; ++st) m.readout.push_back(dig[s * tin + st]);
      out.push_back(std::move(m));
      int i = static_cast<int>(dig.size()) - 1;
      while (i >= 0 && dig[i] + 1 == (i < s * tin ? s : tout)) dig[i--] = 0;
      if (i < 0) break;
      ++dig[i];
    }
  }
  return out;
}

}  // namespace

FinCat dds_fibre(const Box& b, int state_bound) {
  if (state_bound < 1 || state_bound > 4)
    throw SizeLimitExceeded("dds_fibre: state bound out of range");
  auto ms = all_machines(b, state_bound);
  FinCat c;
  std::vector<Id> ids;
  for (const auto& m : ms) {
    std::vector<int> idv(m.states);
    for (int s = 0; s < m.states; ++s) idv[s] = s;
    Id mid = machine_id(m);
    ids.push_back(mid);
    c.add_object(mid, state_map_id(mid, mid, idv));
  }
  struct Arrow {
    Id id, dom, cod;
    std::vector<int> vals;
  };
  std::vector<Arrow> arrows;
  int tin = tuple_count(b.in_types);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) {
      const auto& m1 = ms[i];
      const auto& m2 = ms[j];
      std::vector<int> h(m1.states, 0);
      while (true) {
        bool ok = true;
        for (int s = 0; s < m1.states && ok; ++s) {
          if (m2.readout[h[s]] != m1.readout[s]) ok = false;
          for (int in = 0; in < tin && ok; ++in)
            if (h[m1.update[s][in]] != m2.update[h[s]][in]) ok = false;
        }
        if (ok) {
          Id hid = state_map_id(ids[i], ids[j], h);
          if (!c.morphisms.count(hid)) {
            c.add_morphism(hid, ids[i], ids[j]);
            arrows.push_back({hid, ids[i], ids[j], h});
          } else {
            arrows.push_back({hid, ids[i], ids[j], h});
          }
        }
        int k = m1.states - 1;
        while (k >= 0 && h[k] + 1 == m2.states) h[k--] = 0;
        if (k < 0) break;
        ++h[k];
      }
    }
  for (const auto& g : arrows)
    for (const auto& f : arrows) {
      if (f.cod != g.dom) continue;
      std::vector<int> comp(f.vals.size());
      for (std::size_t s = 0; s < f.vals.size(); ++s)
        comp[s] = g.vals[f.vals[s]];
      c.compose[{g.id, f.id}] = state_map_id(f.dom, g.cod, comp);
    }
  return c;
}

DdsTotal dds_total_category(const std::vector<int>& types, int port_bound,
                            int state_bound) {
  MonoidalData wm = wiring_category(types, port_bound);
  LaxMonoidalIndexed l;
  l.base_monoidal = wm;
  IndexedCat M;
  M.base = wm.base;
  M.variance = Variance::covariant;
  std::map<Id, Box> boxes;
  for (const Id& x : M.base.objects) boxes[x] = box_dec(x);
  for (const auto& [x, b] : boxes) M.fibre[x] = dds_fibre(b, state_bound);
  for (const auto& [f, dc] : M.base.morphisms) {
    WiringDiagram w = wiring_dec(f);
    FinFunctor F;
    F.source = M.fibre.at(dc.dom);
    F.target = M.fibre.at(dc.cod);
    for (const Id& a : F.source.objects)
      F.obj_map[a] = machine_id(dds_apply(w, machine_dec(a, w.dom)));
    for (const auto& [h, hd] : F.source.morphisms) {
      auto vals = state_map_vals(h);
      F.mor_map[h] = state_map_id(F.obj_map.at(hd.dom), F.obj_map.at(hd.cod),
                                  vals);
    }
    M.reindex[f] = F;
  }
  finish_strict(M);
  l.carrier = M;
  MooreMachine unitm;
  unitm.box = {{}, {}};
  unitm.states = 1;
  unitm.update = {{0}};
  unitm.readout = {0};
  l.unit_object = machine_id(unitm);

  // parallel placement; pairs whose product leaves the state universe are
  // left out of the laxator tables (the checkers skip them)
  std::map<Id, std::map<Id, MooreMachine>> dec_cache;
  auto mach = [&](const Id& x, const Id& a) -> const MooreMachine& {
    auto& slot = dec_cache[x];
    auto it = slot.find(a);
    if (it == slot.end())
      it = slot.emplace(a, machine_dec(a, boxes.at(x))).first;
    return it->second;
  };
  bool laxator_total = true;
  for (const auto& [xy, s] : wm.tensor_obj) {
    (void)s;
    PairMap pm;
    const FinCat& fx = M.fib(xy.first);
    const FinCat& fy = M.fib(xy.second);
    for (const Id& a : fx.objects)
      for (const Id& b : fy.objects) {
        MooreMachine p = dds_parallel(mach(xy.first, a), mach(xy.second, b));
        if (p.states > state_bound) {
          laxator_total = false;
          continue;
        }
        pm.obj[{a, b}] = machine_id(p);
      }
    for (const auto& [h, hd] : fx.morphisms)
      for (const auto& [k, kd] : fy.morphisms) {
        auto ds = pm.obj.find({hd.dom, kd.dom});
        auto cs = pm.obj.find({hd.cod, kd.cod});
        if (ds == pm.obj.end() || cs == pm.obj.end()) continue;
        auto hv = state_map_vals(h), kv = state_map_vals(k);
        int s2 = static_cast<int>(kv.size());
        int s2c = mach(xy.second, kd.cod).states;
        std::vector<int> prod(hv.size() * kv.size());
        for (std::size_t s1 = 0; s1 < hv.size(); ++s1)
          for (int t = 0; t < s2; ++t)
            prod[s1 * s2 + t] = hv[s1] * s2c + kv[t];
        pm.mor[{h, k}] = state_map_id(ds->second, cs->second, prod);
      }
    l.laxator[xy] = pm;
  }
  auto mu_obj = [&](const IdPair& xy, const Id& a, const Id& b) -> const Id* {
    auto it = l.laxator.find(xy);
    if (it == l.laxator.end()) return nullptr;
    auto jt = it->second.obj.find({a, b});
    return jt == it->second.obj.end() ? nullptr : &jt->second;
  };
  for (const auto& [fg, t] : wm.tensor_mor) {
    auto& cells = l.laxator_cells[fg];
    const Id cx = M.base.cod(fg.first), cy = M.base.cod(fg.second);
    const FinCat& home = M.fib(M.base.cod(t));
    const FinFunctor& F = M.re(fg.first);
    const FinFunctor& G = M.re(fg.second);
    for (const Id& a : M.fib(M.base.dom(fg.first)).objects)
      for (const Id& b : M.fib(M.base.dom(fg.second)).objects)
        if (const Id* o = mu_obj({cx, cy}, F.ob(a), G.ob(b)))
          cells[{a, b}] = home.id(*o);
  }
  for (const auto& [xyz, alf] : wm.associator) {
    (void)alf;
    auto& om = l.omega[xyz];
    const Id& x = std::get<0>(xyz);
    const Id& y = std::get<1>(xyz);
    const Id& z = std::get<2>(xyz);
    const Id xy = wm.tensor_of(x, y);
    for (const Id& a : M.fib(x).objects)
      for (const Id& b : M.fib(y).objects)
        for (const Id& c : M.fib(z).objects) {
          const Id* ab = mu_obj({x, y}, a, b);
          if (!ab) continue;
          if (const Id* abc = mu_obj({xy, z}, *ab, c))
            om[{a, b, c}] = M.fib(wm.tensor_of(xy, z)).id(*abc);
        }
  }
  for (const Id& x : M.base.objects) {
    const FinCat& fx = M.fib(x);
    for (const Id& a : fx.objects) {
      l.zeta[x][a] = fx.id(a);
      l.xi[x][a] = fx.id(a);
    }
  }
  l.braid_cell.emplace();
  for (const auto& [xy, bb] : *wm.braiding) {
    auto& cells = (*l.braid_cell)[xy];
    const FinFunctor& B = M.re(bb);
    for (const Id& a : M.fib(xy.first).objects)
      for (const Id& b : M.fib(xy.second).objects) {
        const Id* ab = mu_obj(xy, a, b);
        const Id* ba = mu_obj({xy.second, xy.first}, b, a);
        if (!ab || !ba) continue;
        int s1 = mach(xy.first, a).states;
        int s2 = mach(xy.second, b).states;
        std::vector<int> h(s1 * s2);
        for (int i = 0; i < s1; ++i)
          for (int j = 0; j < s2; ++j) h[i * s2 + j] = j * s1 + i;
        cells[{a, b}] = state_map_id(B.ob(*ab), *ba, h);
      }
  }
  DdsTotal out;
  out.indexed = l;
  out.groth = grothendieck(l.carrier);
  if (laxator_total) out.monoidal = monoidal_grothendieck(l);
  return out;
}

}  // namespace catkit
