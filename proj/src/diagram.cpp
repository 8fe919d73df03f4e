#include "dubrovnik/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "dubrovnik/errors.hpp"

namespace dubrovnik {

namespace {

struct Slot {
  std::size_t crossing = 0;
  int pos = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

Slot opposite(Slot s) { return Slot{s.crossing, (s.pos + 2) % 4}; }

using RawTuples = std::vector<std::array<Arc, 4>>;

std::unordered_map<Arc, std::vector<Slot>> collect_slots(const RawTuples& raw) {
  std::unordered_map<Arc, std::vector<Slot>> slots;
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (int p = 0; p < 4; ++p) slots[raw[i][p]].push_back(Slot{i, p});
  for (const auto& [arc, list] : slots)
    if (list.size() != 2)
      throw ValidationError("arc " + std::to_string(arc) + " appears " + std::to_string(list.size()) +
                            " times (expected 2)");
  return slots;
}

// Rotates a counterclockwise tuple so the under-strand enters at slot 0 and
// records the over-strand direction.
Crossing normalize(const std::array<Arc, 4>& arcs, int under_in_pos, int over_in_pos) {
  Crossing x;
  for (int k = 0; k < 4; ++k) x.arcs[k] = arcs[(under_in_pos + k) % 4];
  x.over_forward = ((over_in_pos - under_in_pos + 4) % 4) == 3;
  return x;
}

// Orients an unoriented crossing list (slots 0/2 carry the under-strand).
// With `hint`, each component keeps the direction the hint assigns to its
// smallest slot; without it, under-passages fix the direction and must agree.
Diagram orient_raw(const RawTuples& raw, int free_loops, const std::vector<Crossing>* hint) {
  const auto slots = collect_slots(raw);
  auto partner = [&](Slot s) {
    const auto& list = slots.at(raw[s.crossing][s.pos]);
    return list[0] == s ? list[1] : list[0];
  };

  const std::size_t n = raw.size();
  std::vector<std::array<bool, 4>> used(n, {false, false, false, false});
  std::vector<int> under_in(n, -1);
  std::vector<int> over_in(n, -1);

  for (std::size_t i = 0; i < n; ++i) {
    for (int p = 0; p < 4; ++p) {
      if (used[i][p]) continue;
      const Slot start{i, p};
      std::vector<Slot> enters;
      Slot s = start;
      do {
        enters.push_back(s);
        used[s.crossing][s.pos] = true;
        const Slot out = opposite(s);
        used[out.crossing][out.pos] = true;
        s = partner(out);
      } while (s != start);

      bool forward = true;
      if (hint != nullptr) {
        const Crossing& h = (*hint)[start.crossing];
        forward = start.pos == 0 || start.pos == h.over_in_slot();
      } else {
        bool has_forward_under = false;
        bool has_reverse_under = false;
        for (const Slot& e : enters) {
          if (e.pos == 0) has_forward_under = true;
          if (e.pos == 2) has_reverse_under = true;
        }
        if (has_forward_under && has_reverse_under)
          throw ValidationError("inconsistent orientation: a component traverses under-strands in both directions");
        if (has_forward_under || has_reverse_under) {
          forward = has_forward_under;
        } else {
          // No under-passage: orient so labels increase along the component.
          const std::size_t len = enters.size();
          std::size_t k = 0;
          for (std::size_t j = 1; j < len; ++j)
            if (raw[enters[j].crossing][enters[j].pos] < raw[enters[k].crossing][enters[k].pos]) k = j;
          const Arc m = raw[enters[k].crossing][enters[k].pos];
          const Slot& next_slot = enters[(k + 1) % len];
          const Slot& prev_slot = enters[(k + len - 1) % len];
          const bool fwd_ok = raw[next_slot.crossing][next_slot.pos] == m + 1;
          const bool bwd_ok = raw[prev_slot.crossing][prev_slot.pos] == m + 1;
          if (fwd_ok != bwd_ok) {
            forward = fwd_ok;
          } else {
            // Ambiguous labels: the smallest arc enters the first-listed crossing.
            forward = enters[k] < opposite(prev_slot);
          }
        }
      }

      for (const Slot& e : enters) {
        const Slot t = forward ? e : opposite(e);
        if (t.pos % 2 == 0)
          under_in[t.crossing] = t.pos;
        else
          over_in[t.crossing] = t.pos;
      }
    }
  }

  std::vector<Crossing> crossings;
  crossings.reserve(n);
  for (std::size_t i = 0; i < n; ++i) crossings.push_back(normalize(raw[i], under_in[i], over_in[i]));
  return Diagram(std::move(crossings), free_loops);
}

RawTuples raw_of(const Diagram& d) {
  RawTuples raw;
  raw.reserve(d.crossing_count());
  for (const auto& x : d.crossings()) raw.push_back(x.arcs);
  return raw;
}

// Small union-find over arc labels, representative = minimal label.
class ArcUnion {
 public:
  Arc find(Arc a) {
    auto it = parent_.find(a);
    if (it == parent_.end()) {
      parent_[a] = a;
      return a;
    }
    if (it->second == a) return a;
    const Arc root = find(it->second);
    parent_[a] = root;
    return root;
  }
  void unite(Arc a, Arc b) {
    const Arc ra = find(a);
    const Arc rb = find(b);
    if (ra == rb) return;
    if (ra < rb)
      parent_[rb] = ra;
    else
      parent_[ra] = rb;
  }

 private:
  std::map<Arc, Arc> parent_;
};

Diagram smooth(const Diagram& d, std::size_t i, bool oriented) {
  if (i >= d.crossing_count()) throw std::out_of_range("crossing index out of range");
  const Crossing& x = d.crossings()[i];
  ArcUnion uf;
  if (oriented) {
    uf.unite(x.under_in(), x.over_out());
    uf.unite(x.under_out(), x.over_in());
  } else {
    uf.unite(x.under_in(), x.over_in());
    uf.unite(x.under_out(), x.over_out());
  }

  RawTuples raw;
  std::vector<Crossing> hint;
  for (std::size_t j = 0; j < d.crossing_count(); ++j) {
    if (j == i) continue;
    std::array<Arc, 4> arcs = d.crossings()[j].arcs;
    for (Arc& a : arcs)
      if (a == x.arcs[0] || a == x.arcs[1] || a == x.arcs[2] || a == x.arcs[3]) a = uf.find(a);
    raw.push_back(arcs);
    hint.push_back(d.crossings()[j]);
  }

  int loops = d.free_loops();
  std::vector<Arc> reps;
  for (Arc a : x.arcs) reps.push_back(uf.find(a));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  for (Arc r : reps) {
    bool present = false;
    for (const auto& t : raw)
      if (std::find(t.begin(), t.end(), r) != t.end()) present = true;
    if (!present) ++loops;
  }
  return orient_raw(raw, loops, &hint);
}

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw ValidationError("negative free loop count");
}

Diagram Diagram::from_pd(const std::vector<std::array<Arc, 4>>& tuples, int free_loops) {
  if (free_loops < 0) throw ValidationError("negative free loop count");
  Diagram d = orient_raw(tuples, free_loops, nullptr);
  validate(d);
  return d;
}

int ComponentMap::component_of(Arc arc) const {
  auto it = std::lower_bound(arc_component.begin(), arc_component.end(), std::pair<Arc, int>{arc, -1});
  if (it == arc_component.end() || it->first != arc)
    throw std::out_of_range("unknown arc " + std::to_string(arc));
  return it->second;
}

ComponentMap validate(const Diagram& d) {
  const auto& xs = d.crossings();
  const RawTuples raw = raw_of(d);
  const auto slots = collect_slots(raw);

  // Each arc must run from exactly one tail slot to exactly one head slot.
  std::unordered_map<Arc, Slot> head;
  std::unordered_map<Arc, int> tails;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Crossing& x = xs[i];
    for (int p = 0; p < 4; ++p) {
      const bool is_head = p == 0 || p == x.over_in_slot();
      const Arc a = x.arcs[p];
      if (is_head) {
        if (head.count(a) != 0)
          throw ValidationError("inconsistent orientation: arc " + std::to_string(a) + " enters two crossings");
        head[a] = Slot{i, p};
      } else {
        if (++tails[a] > 1)
          throw ValidationError("inconsistent orientation: arc " + std::to_string(a) + " leaves two crossings");
      }
    }
  }

  ComponentMap map;
  std::unordered_map<Arc, int> comp;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (int p = 0; p < 4; ++p) {
      const Arc start = xs[i].arcs[p];
      if (comp.count(start) != 0) continue;
      const int index = map.traced_count++;
      map.component_arcs.emplace_back();
      Arc a = start;
      std::size_t guard = 0;
      do {
        comp[a] = index;
        map.component_arcs.back().push_back(a);
        const Slot h = head.at(a);
        a = xs[h.crossing].arcs[(h.pos + 2) % 4];
        if (++guard > slots.size()) throw ValidationError("component traversal does not close");
      } while (a != start);
    }
  }
  map.component_count = map.traced_count + d.free_loops();
  map.arc_component.assign(comp.begin(), comp.end());
  std::sort(map.arc_component.begin(), map.arc_component.end());

  map.self_crossings.assign(static_cast<std::size_t>(map.component_count), {});
  map.inter_crossings.assign(static_cast<std::size_t>(map.component_count), {});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const int u = comp.at(xs[i].under_in());
    const int o = comp.at(xs[i].over_in());
    map.under_component.push_back(u);
    map.over_component.push_back(o);
    if (u == o) {
      map.self_crossings[u].push_back(i);
    } else {
      map.inter_crossings[u].push_back(i);
      map.inter_crossings[o].push_back(i);
    }
  }
  return map;
}

int crossing_sign(const Diagram& d, std::size_t i) {
  if (i >= d.crossing_count()) throw std::out_of_range("crossing index out of range");
  return d.crossings()[i].sign();
}

int writhe(const Diagram& d) {
  int w = 0;
  for (const auto& x : d.crossings()) w += x.sign();
  return w;
}

int self_writhe(const Diagram& d, const ComponentMap& map, int component) {
  int w = 0;
  for (std::size_t i : map.self_crossings.at(static_cast<std::size_t>(component))) w += d.crossings()[i].sign();
  return w;
}

std::vector<std::vector<int>> linking_matrix(const Diagram& d) {
  const ComponentMap map = validate(d);
  const auto n = static_cast<std::size_t>(map.component_count);
  std::vector<std::vector<int>> twice(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto u = static_cast<std::size_t>(map.under_component[i]);
    const auto o = static_cast<std::size_t>(map.over_component[i]);
    if (u == o) continue;
    twice[u][o] += d.crossings()[i].sign();
    twice[o][u] += d.crossings()[i].sign();
  }
  for (auto& row : twice)
    for (int& v : row) {
      if (v % 2 != 0) throw ValidationError("odd inter-component crossing sum; PD code is not planar");
      v /= 2;
    }
  return twice;
}

Diagram switch_crossing(const Diagram& d, std::size_t i) {
  if (i >= d.crossing_count()) throw std::out_of_range("crossing index out of range");
  std::vector<Crossing> xs = d.crossings();
  const Crossing old = xs[i];
  xs[i] = normalize(old.arcs, old.over_in_slot(), 0);
  return Diagram(std::move(xs), d.free_loops());
}

Diagram mirror(const Diagram& d) {
  std::vector<Crossing> xs;
  xs.reserve(d.crossing_count());
  for (const auto& x : d.crossings()) xs.push_back(normalize(x.arcs, x.over_in_slot(), 0));
  return Diagram(std::move(xs), d.free_loops());
}

Diagram smooth_0(const Diagram& d, std::size_t i) { return smooth(d, i, true); }
Diagram smooth_inf(const Diagram& d, std::size_t i) { return smooth(d, i, false); }

Arc max_arc(const Diagram& d) {
  Arc m = 0;
  for (const auto& x : d.crossings())
    for (Arc a : x.arcs) m = std::max(m, a);
  return m;
}

Diagram relabel_arcs(const Diagram& d, int offset) {
  std::vector<Crossing> xs = d.crossings();
  for (auto& x : xs)
    for (Arc& a : x.arcs) a += offset;
  return Diagram(std::move(xs), d.free_loops());
}

Diagram relabel(const Diagram& d, const std::vector<std::pair<Arc, Arc>>& arc_map,
                const std::vector<std::size_t>& crossing_order) {
  std::map<Arc, Arc> m(arc_map.begin(), arc_map.end());
  if (crossing_order.size() != d.crossing_count()) throw std::invalid_argument("crossing order size mismatch");
  std::vector<Crossing> xs;
  xs.reserve(d.crossing_count());
  for (std::size_t i : crossing_order) {
    Crossing x = d.crossings().at(i);
    for (Arc& a : x.arcs) a = m.count(a) != 0 ? m.at(a) : a;
    xs.push_back(x);
  }
  return Diagram(std::move(xs), d.free_loops());
}

Diagram split_union(const Diagram& a, const Diagram& b) {
  const Diagram shifted = relabel_arcs(b, max_arc(a));
  std::vector<Crossing> xs = a.crossings();
  xs.insert(xs.end(), shifted.crossings().begin(), shifted.crossings().end());
  return Diagram(std::move(xs), a.free_loops() + b.free_loops());
}

Diagram reverse_component(const Diagram& d, int component) {
  const ComponentMap map = validate(d);
  if (component < 0 || component >= map.component_count) throw std::out_of_range("component index out of range");
  std::vector<Crossing> xs;
  xs.reserve(d.crossing_count());
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const Crossing& x = d.crossings()[i];
    const bool flip_under = map.under_component[i] == component;
    const bool flip_over = map.over_component[i] == component;
    const int over_in = flip_over ? (x.over_in_slot() + 2) % 4 : x.over_in_slot();
    xs.push_back(normalize(x.arcs, flip_under ? 2 : 0, over_in));
  }
  return Diagram(std::move(xs), d.free_loops());
}

// --- canonical key -----------------------------------------------------------

namespace {

struct TraversalTables {
  // Per arc: crossing at its head and whether the passage there is under.
  std::unordered_map<Arc, std::pair<std::size_t, bool>> head;
  std::unordered_map<Arc, Arc> next;
  // Per crossing: outgoing under arc and outgoing over arc.
  std::vector<std::pair<Arc, Arc>> outgoing;
};

TraversalTables tables_of(const Diagram& d) {
  TraversalTables t;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const Crossing& x = d.crossings()[i];
    t.head[x.under_in()] = {i, true};
    t.head[x.over_in()] = {i, false};
    t.next[x.under_in()] = x.under_out();
    t.next[x.over_in()] = x.over_out();
    t.outgoing.emplace_back(x.under_out(), x.over_out());
  }
  return t;
}

// Encodes the piece containing `start`, visiting components in an order fixed
// by the labels assigned during traversal.
std::vector<int> encode_from(const Diagram& d, const TraversalTables& t, const ComponentMap& map, Arc start) {
  std::vector<int> code;
  std::unordered_map<std::size_t, int> label;
  std::vector<std::size_t> by_label;
  std::vector<bool> done(static_cast<std::size_t>(map.traced_count), false);
  Arc begin = start;
  while (true) {
    const int comp = map.component_of(begin);
    done[static_cast<std::size_t>(comp)] = true;
    Arc a = begin;
    do {
      const auto [xi, under] = t.head.at(a);
      auto it = label.find(xi);
      int lab = 0;
      if (it == label.end()) {
        lab = static_cast<int>(by_label.size());
        label.emplace(xi, lab);
        by_label.push_back(xi);
      } else {
        lab = it->second;
      }
      code.push_back(lab * 4 + (under ? 0 : 2) + (d.crossings()[xi].over_forward ? 1 : 0));
      a = t.next.at(a);
    } while (a != begin);
    code.push_back(-1);

    // Next component: the unvisited strand at the lowest-labeled crossing.
    bool found = false;
    for (std::size_t xi : by_label) {
      const int u = map.under_component[xi];
      const int o = map.over_component[xi];
      if (!done[static_cast<std::size_t>(u)]) {
        begin = t.outgoing[xi].first;
        found = true;
        break;
      }
      if (!done[static_cast<std::size_t>(o)]) {
        begin = t.outgoing[xi].second;
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return code;
}

std::vector<std::vector<int>> piece_components(const ComponentMap& map, std::size_t crossing_count) {
  std::vector<int> parent(static_cast<std::size_t>(map.traced_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int c) {
    while (parent[static_cast<std::size_t>(c)] != c) c = parent[static_cast<std::size_t>(c)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(c)])];
    return c;
  };
  for (std::size_t i = 0; i < crossing_count; ++i) {
    const int a = find(map.under_component[i]);
    const int b = find(map.over_component[i]);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int c = 0; c < map.traced_count; ++c) groups[find(c)].push_back(c);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace

std::string canonical_key(const Diagram& d) {
  const ComponentMap map = validate(d);
  const TraversalTables t = tables_of(d);
  std::vector<std::vector<int>> codes;
  for (const auto& members : piece_components(map, d.crossing_count())) {
    std::optional<std::vector<int>> best;
    for (int c : members)
      for (Arc a : map.component_arcs[static_cast<std::size_t>(c)]) {
        std::vector<int> code = encode_from(d, t, map, a);
        if (!best || code < *best) best = std::move(code);
      }
    codes.push_back(std::move(*best));
  }
  std::sort(codes.begin(), codes.end());
  std::string key = "L" + std::to_string(d.free_loops());
  for (const auto& code : codes) {
    key += '|';
    for (int v : code) {
      key += std::to_string(v);
      key += ',';
    }
  }
  return key;
}

std::vector<Diagram> connected_pieces(const Diagram& d) {
  const ComponentMap map = validate(d);
  std::vector<Diagram> pieces;
  for (const auto& members : piece_components(map, d.crossing_count())) {
    std::vector<Crossing> xs;
    for (std::size_t i = 0; i < d.crossing_count(); ++i)
      if (std::find(members.begin(), members.end(), map.under_component[i]) != members.end())
        xs.push_back(d.crossings()[i]);
    pieces.emplace_back(std::move(xs), 0);
  }
  return pieces;
}

// --- PD text -----------------------------------------------------------------

namespace {

class PdParser {
 public:
  explicit PdParser(std::string_view text) : text_(text) {}

  Diagram parse() {
    RawTuples tuples;
    int loops = 0;
    bool wrapped = false;
    bool any = false;
    skip();
    if (match_word("PD")) {
      skip();
      expect('[');
      wrapped = true;
    }
    while (true) {
      skip();
      if (at_end()) break;
      if (wrapped && peek() == ']') {
        advance();
        wrapped = false;
        skip();
        if (!at_end()) fail("unexpected text after PD[...]");
        break;
      }
      const char c = peek();
      if (c == 'X') {
        advance();
        skip();
        expect('[');
        std::array<Arc, 4> t{};
        for (int k = 0; k < 4; ++k) {
          skip_space();
          t[k] = parse_positive();
          skip_space();
          if (k < 3) expect(',');
        }
        expect(']');
        tuples.push_back(t);
        any = true;
      } else if (c == 'O') {
        advance();
        skip();
        expect('[');
        skip_space();
        loops += parse_nonnegative();
        skip_space();
        expect(']');
        any = true;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    if (wrapped) fail("missing closing ']' for PD[");
    if (!any) fail("no crossings or free loops");
    return Diagram::from_pd(tuples, loops);
  }

 private:
  int parse_positive() {
    const int v = parse_nonnegative();
    if (v <= 0) fail("arc ids must be positive integers");
    return v;
  }

  int parse_nonnegative() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000000L) fail("integer out of range");
      advance();
    }
    return static_cast<int>(v);
  }

  bool match_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  // Whitespace, commas between entries, and # comments.
  void skip() {
    while (!at_end()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Diagram parse_pd(std::string_view text) { return PdParser(text).parse(); }

std::string format_pd(const Diagram& d) {
  const ComponentMap map = validate(d);
  std::unordered_map<Arc, Arc> label;
  Arc next = 1;
  for (const auto& arcs : map.component_arcs)
    for (Arc a : arcs) label[a] = next++;

  std::vector<std::size_t> order(d.crossing_count());
  std::iota(order.begin(), order.end(), 0);
  // A two-arc component with no under-passage is only recoverable if its
  // smaller arc enters the earlier-listed crossing.
  for (int c = 0; c < map.traced_count; ++c) {
    const auto& arcs = map.component_arcs[static_cast<std::size_t>(c)];
    if (arcs.size() != 2) continue;
    const bool all_over = std::none_of(map.under_component.begin(), map.under_component.end(),
                                       [c](int u) { return u == c; });
    if (!all_over) continue;
    std::size_t head = 0;
    std::size_t tail = 0;
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
      if (d.crossings()[i].over_in() == arcs[0]) head = i;
      if (d.crossings()[i].over_out() == arcs[0]) tail = i;
    }
    auto hp = std::find(order.begin(), order.end(), head);
    auto tp = std::find(order.begin(), order.end(), tail);
    if (tp < hp) std::iter_swap(hp, tp);
  }

  std::ostringstream out;
  bool first = true;
  for (std::size_t i : order) {
    const Crossing& x = d.crossings()[i];
    if (!first) out << ", ";
    first = false;
    out << "X[" << label.at(x.arcs[0]) << ',' << label.at(x.arcs[1]) << ',' << label.at(x.arcs[2]) << ','
        << label.at(x.arcs[3]) << ']';
  }
  if (d.free_loops() > 0) {
    if (!first) out << ", ";
    out << "O[" << d.free_loops() << ']';
  }
  return out.str();
}

}  // namespace dubrovnik
