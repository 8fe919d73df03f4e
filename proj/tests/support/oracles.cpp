#include "support/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using dubrovnik::Crossing;

namespace testsupport {

namespace {

struct Union {
  std::map<Arc, Arc> parent;
  Arc find(Arc a) {
    auto it = parent.find(a);
    if (it == parent.end()) {
      parent[a] = a;
      return a;
    }
    if (it->second == a) return a;
    return parent[a] = find(it->second);
  }
  void unite(Arc a, Arc b) { parent[find(a)] = find(b); }
};

Laurent2Poly a_pow(int n) { return Laurent2Poly::x(n); }

// Slot containing the other end of the arc at (i, p).
Dart other_end(const Diagram& d, Dart at) {
  const Arc a = d.crossings()[at.crossing].arcs[static_cast<std::size_t>(at.slot)];
  for (std::size_t j = 0; j < d.crossing_count(); ++j)
    for (int q = 0; q < 4; ++q)
      if (d.crossings()[j].arcs[static_cast<std::size_t>(q)] == a && !(j == at.crossing && q == at.slot)) return {j, q};
  throw std::logic_error("arc with a single end");
}

bool is_out_slot(const Crossing& x, int slot) {
  if (slot == 2) return true;
  if (slot == 0) return false;
  return x.over_forward ? slot == 1 : slot == 3;
}

// Builds an oriented crossing from labels listed counterclockwise.
Crossing make_crossing(const std::array<Arc, 4>& ccw, int under_in, int over_in) {
  Crossing x;
  for (int k = 0; k < 4; ++k) x.arcs[static_cast<std::size_t>(k)] = ccw[static_cast<std::size_t>((under_in + k) % 4)];
  x.over_forward = (over_in - under_in + 4) % 4 == 3;
  return x;
}

}  // namespace

Laurent2Poly bracket(const Diagram& d) {
  const std::size_t n = d.crossing_count();
  const Laurent2Poly loop = -(a_pow(2) + a_pow(-2));
  Laurent2Poly total;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    Union u;
    int a_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& c = d.crossings()[i].arcs;
      for (Arc arc : c) u.find(arc);
      if ((state >> i) & 1U) {
        ++a_count;
        u.unite(c[0], c[1]);
        u.unite(c[2], c[3]);
      } else {
        u.unite(c[0], c[3]);
        u.unite(c[1], c[2]);
      }
    }
    std::set<Arc> roots;
    for (const auto& [arc, parent] : u.parent) roots.insert(u.find(arc));
    const int loops = static_cast<int>(roots.size()) + d.free_loops();
    total += loop.pow(static_cast<unsigned>(loops)).shifted(2 * a_count - static_cast<int>(n), 0);
  }
  return total;
}

Laurent2Poly bracket_specialization(const Laurent2Poly& p, int shift) {
  const Laurent2Poly y = a_pow(1) - a_pow(-1);
  Laurent2Poly total;
  for (const auto& term : p.terms()) {
    const int ey = term.exp.y + shift;
    if (ey < 0) throw std::invalid_argument("shift too small");
    Laurent2Poly value = Laurent2Poly::constant(term.coeff).shifted(3 * term.exp.x, 0) * y.pow(static_cast<unsigned>(ey));
    if (term.exp.x % 2 != 0) value = -value;
    total += value;
  }
  return total;
}

bool agrees_with_bracket(const Laurent2Poly& lambda, const Diagram& d) {
  const int shift = lambda.is_zero() ? 0 : std::max(0, -lambda.min_deg_y());
  const Laurent2Poly y = a_pow(1) - a_pow(-1);
  return bracket_specialization(lambda, shift) == bracket(d) * y.pow(static_cast<unsigned>(shift));
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
  std::vector<Arc> cur(static_cast<std::size_t>(strands));
  Arc next = 1;
  for (auto& a : cur) a = next++;
  std::vector<std::array<Arc, 4>> raw;
  for (int g : word) {
    const auto i = static_cast<std::size_t>(std::abs(g) - 1);
    const Arc sw = cur[i];
    const Arc se = cur[i + 1];
    const Arc nw = next++;
    const Arc ne = next++;
    if (g > 0)
      raw.push_back({se, ne, nw, sw});
    else
      raw.push_back({sw, se, ne, nw});
    cur[i] = nw;
    cur[i + 1] = ne;
  }
  std::map<Arc, Arc> close;
  for (std::size_t i = 0; i < cur.size(); ++i) close[cur[i]] = static_cast<Arc>(i + 1);
  for (auto& t : raw)
    for (Arc& a : t)
      if (close.count(a) != 0) a = close[a];
  const int loops = static_cast<int>(std::count_if(cur.begin(), cur.end(), [&](Arc a) {
    return std::none_of(raw.begin(), raw.end(), [&](const auto& t) { return std::find(t.begin(), t.end(), close[a]) != t.end(); });
  }));
  return Diagram::from_pd(raw, loops);
}

std::vector<std::vector<Dart>> faces(const Diagram& d) {
  std::vector<std::array<bool, 4>> used(d.crossing_count(), {false, false, false, false});
  std::vector<std::vector<Dart>> out;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    for (int p = 0; p < 4; ++p) {
      if (used[i][static_cast<std::size_t>(p)]) continue;
      std::vector<Dart> face;
      Dart dart{i, p};
      while (!used[dart.crossing][static_cast<std::size_t>(dart.slot)]) {
        used[dart.crossing][static_cast<std::size_t>(dart.slot)] = true;
        face.push_back(dart);
        const Dart end = other_end(d, dart);
        dart = Dart{end.crossing, (end.slot + 1) % 4};
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

bool is_planar(const Diagram& d) {
  for (const Diagram& piece : dubrovnik::connected_pieces(d)) {
    const auto n = static_cast<long>(piece.crossing_count());
    if (n == 0) continue;
    if (static_cast<long>(faces(piece).size()) != n + 2) return false;
  }
  return true;
}

Diagram r1_kink(const Diagram& d, Arc arc, bool positive) {
  std::vector<Crossing> xs = d.crossings();
  const Arc out = dubrovnik::max_arc(d) + 1;
  const Arc loop = out + 1;
  bool moved = false;
  for (auto& x : xs) {
    if (x.under_in() == arc) {
      x.arcs[0] = out;
      moved = true;
      break;
    }
    if (x.over_in() == arc) {
      x.arcs[static_cast<std::size_t>(x.over_in_slot())] = out;
      moved = true;
      break;
    }
  }
  if (!moved) throw std::invalid_argument("arc not in diagram");
  Crossing kink;
  if (positive) {
    kink.arcs = {arc, out, loop, loop};
    kink.over_forward = true;
  } else {
    kink.arcs = {arc, loop, loop, out};
    kink.over_forward = false;
  }
  xs.push_back(kink);
  return Diagram(std::move(xs), d.free_loops());
}

std::optional<Diagram> r2_finger(const Diagram& d, Dart e, Dart f, bool e_over) {
  const auto& xs0 = d.crossings();
  const Arc ea = xs0[e.crossing].arcs[static_cast<std::size_t>(e.slot)];
  const Arc fa = xs0[f.crossing].arcs[static_cast<std::size_t>(f.slot)];
  if (ea == fa) return std::nullopt;
  const Dart e_end = other_end(d, e);
  const Dart f_end = other_end(d, f);
  const bool e_along = is_out_slot(xs0[e.crossing], e.slot);
  const bool f_along = is_out_slot(xs0[f.crossing], f.slot);

  Arc next = dubrovnik::max_arc(d) + 1;
  const Arc e_before = ea;
  const Arc e_mid = next++;
  const Arc e_after = next++;
  const Arc f_before = fa;
  const Arc f_mid = next++;
  const Arc f_after = next++;

  std::vector<Crossing> xs = xs0;
  xs[e_end.crossing].arcs[static_cast<std::size_t>(e_end.slot)] = e_after;
  xs[f_end.crossing].arcs[static_cast<std::size_t>(f_end.slot)] = f_after;

  // Counterclockwise slots E, N, W, S; e runs vertically, f horizontally.
  enum { E = 0, N = 1, W = 2, S = 3 };
  const std::array<Arc, 4> p_ccw{f_mid, e_before, f_after, e_mid};
  const std::array<Arc, 4> q_ccw{f_before, e_after, f_mid, e_mid};
  const int e_in_p = e_along ? N : S;
  const int e_in_q = e_along ? S : N;
  const int f_in_p = f_along ? E : W;
  const int f_in_q = f_along ? E : W;
  if (e_over) {
    xs.push_back(make_crossing(p_ccw, f_in_p, e_in_p));
    xs.push_back(make_crossing(q_ccw, f_in_q, e_in_q));
  } else {
    xs.push_back(make_crossing(p_ccw, e_in_p, f_in_p));
    xs.push_back(make_crossing(q_ccw, e_in_q, f_in_q));
  }
  return Diagram(std::move(xs), d.free_loops());
}

std::optional<Diagram> random_r2(const Diagram& d, std::mt19937_64& rng) {
  if (d.crossing_count() == 0) return std::nullopt;
  const auto fs = faces(d);
  for (int attempt = 0; attempt < 20; ++attempt) {
    const auto& face = fs[std::uniform_int_distribution<std::size_t>(0, fs.size() - 1)(rng)];
    if (face.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> pick(0, face.size() - 1);
    const Dart e = face[pick(rng)];
    const Dart f = face[pick(rng)];
    auto moved = r2_finger(d, e, f, std::uniform_int_distribution<int>(0, 1)(rng) == 1);
    if (moved) return moved;
  }
  return std::nullopt;
}

std::vector<Diagram> r3_moves(const Diagram& d) {
  std::vector<Diagram> out;
  const auto& xs0 = d.crossings();
  for (const auto& face : faces(d)) {
    if (face.size() != 3) continue;
    std::set<std::size_t> distinct;
    for (const Dart& dart : face) distinct.insert(dart.crossing);
    if (distinct.size() != 3) continue;

    // Each triangle edge: its two slots; the strand's external slots are opposite.
    struct Edge {
      Dart a, b;
    };
    std::vector<Edge> edges;
    for (const Dart& dart : face) edges.push_back({dart, other_end(d, dart)});

    bool top = false;
    for (const Edge& e : edges) {
      const bool over_a = e.a.slot % 2 == 1;
      const bool over_b = e.b.slot % 2 == 1;
      if (over_a && over_b) top = true;
    }
    if (!top) continue;

    std::vector<Crossing> xs = xs0;
    auto label = [&](Dart s) { return xs0[s.crossing].arcs[static_cast<std::size_t>(s.slot)]; };
    auto set = [&](Dart s, Arc a) { xs[s.crossing].arcs[static_cast<std::size_t>(s.slot)] = a; };
    for (const Edge& e : edges) {
      const Arc internal = label(e.a);
      const Dart ext_a{e.a.crossing, (e.a.slot + 2) % 4};
      const Dart ext_b{e.b.crossing, (e.b.slot + 2) % 4};
      set(e.a, label(ext_b));
      set(ext_a, internal);
      set(e.b, label(ext_a));
      set(ext_b, internal);
    }
    out.emplace_back(std::move(xs), d.free_loops());
  }
  return out;
}

Laurent2Poly random_poly(std::mt19937_64& rng, int terms, int span, int coeff) {
  std::uniform_int_distribution<int> e(-span, span);
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::uniform_int_distribution<int> count(0, terms);
  Laurent2Poly p;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) p += Laurent2Poly::mono(c(rng), e(rng), e(rng));
  return p;
}

Diagram random_relabel(const Diagram& d, std::mt19937_64& rng) {
  std::vector<Arc> arcs;
  for (const auto& x : d.crossings())
    for (Arc a : x.arcs) arcs.push_back(a);
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  std::vector<Arc> targets(arcs.size());
  std::iota(targets.begin(), targets.end(), 1);
  for (Arc& t : targets) t = t * 3 + 100;
  std::shuffle(targets.begin(), targets.end(), rng);
  std::vector<std::pair<Arc, Arc>> map;
  for (std::size_t i = 0; i < arcs.size(); ++i) map.emplace_back(arcs[i], targets[i]);
  std::vector<std::size_t> order(d.crossing_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return dubrovnik::relabel(d, map, order);
}

}  // namespace testsupport
