#include "dubrovnik/front.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "dubrovnik/errors.hpp"

namespace dubrovnik {

namespace {

// Segment (t, q): the strand at position q between event t-1 and event t
// (slice t; slice 0 precedes every event).
struct Segment {
  std::size_t slice;
  int pos;
};

struct Heading {
  Segment seg;
  int dir;  // +1 right, -1 left
};

struct Trace {
  std::vector<int> counts;
  std::vector<std::size_t> offset;
  std::vector<int> seg_component;
  std::vector<int> seg_dir;
  FrontStructure structure;

  std::size_t id(Segment s) const { return offset[s.slice] + static_cast<std::size_t>(s.pos - 1); }
};

const char* kind_name(EventKind k) {
  switch (k) {
    case EventKind::LeftCusp:
      return "left cusp";
    case EventKind::Crossing:
      return "crossing";
    case EventKind::RightCusp:
      return "right cusp";
  }
  return "event";
}

std::vector<int> strand_counts(const FrontWord& f) {
  std::vector<int> counts{0};
  int count = 0;
  for (std::size_t e = 0; e < f.events.size(); ++e) {
    const auto [kind, p] = f.events[e];
    const int hi = kind == EventKind::LeftCusp ? count + 1 : count - 1;
    if (p < 1 || p > hi)
      throw ValidationError(std::string(kind_name(kind)) + " at event " + std::to_string(e + 1) + " has position " +
                            std::to_string(p) + " outside 1.." + std::to_string(hi));
    if (kind == EventKind::LeftCusp) count += 2;
    if (kind == EventKind::RightCusp) count -= 2;
    counts.push_back(count);
  }
  if (count != 0) throw ValidationError(std::to_string(count) + " strands left open at the end of the front");
  return counts;
}

// One step of traversal. `cusp` receives +1/-1 when a cusp is passed
// (moving down/up), 0 otherwise.
Heading step(const FrontWord& f, Heading h, int& cusp) {
  cusp = 0;
  const int q = h.seg.pos;
  const std::size_t t = h.seg.slice;
  if (h.dir > 0) {
    const auto [kind, p] = f.events[t];
    switch (kind) {
      case EventKind::Crossing:
        if (q == p) return {{t + 1, p + 1}, 1};
        if (q == p + 1) return {{t + 1, p}, 1};
        return {{t + 1, q}, 1};
      case EventKind::LeftCusp:
        return {{t + 1, q < p ? q : q + 2}, 1};
      case EventKind::RightCusp:
        if (q == p) {
          cusp = 1;
          return {{t, p + 1}, -1};
        }
        if (q == p + 1) {
          cusp = -1;
          return {{t, p}, -1};
        }
        return {{t + 1, q < p ? q : q - 2}, 1};
    }
  } else {
    const auto [kind, p] = f.events[t - 1];
    switch (kind) {
      case EventKind::Crossing:
        if (q == p) return {{t - 1, p + 1}, -1};
        if (q == p + 1) return {{t - 1, p}, -1};
        return {{t - 1, q}, -1};
      case EventKind::LeftCusp:
        if (q == p) {
          cusp = 1;
          return {{t, p + 1}, 1};
        }
        if (q == p + 1) {
          cusp = -1;
          return {{t, p}, 1};
        }
        return {{t - 1, q < p ? q : q - 2}, -1};
      case EventKind::RightCusp:
        return {{t - 1, q < p ? q : q + 2}, -1};
    }
  }
  return h;
}

// Event crossed when leaving `h` in its direction.
std::size_t next_event(Heading h) { return h.dir > 0 ? h.seg.slice : h.seg.slice - 1; }

Trace trace(const FrontWord& f) {
  Trace tr;
  tr.counts = strand_counts(f);
  tr.offset.assign(tr.counts.size() + 1, 0);
  for (std::size_t t = 0; t < tr.counts.size(); ++t)
    tr.offset[t + 1] = tr.offset[t] + static_cast<std::size_t>(tr.counts[t]);
  const std::size_t total = tr.offset.back();
  tr.seg_component.assign(total, -1);
  tr.seg_dir.assign(total, 0);

  const std::size_t n = f.events.size();
  FrontStructure& st = tr.structure;
  st.event_components.assign(n, {-1, -1});
  st.event_directions.assign(n, {0, 0});
  st.cusp_direction.assign(n, 0);

  for (std::size_t e = 0; e < n; ++e) {
    if (f.events[e].kind != EventKind::LeftCusp) continue;
    const Segment upper{e + 1, f.events[e].pos};
    if (tr.seg_component[tr.id(upper)] >= 0) continue;
    const int c = st.component_count++;
    Heading h{upper, 1};
    do {
      tr.seg_component[tr.id(h.seg)] = c;
      tr.seg_dir[tr.id(h.seg)] = h.dir;
      const std::size_t ev = next_event(h);
      int cusp = 0;
      h = step(f, h, cusp);
      if (cusp != 0) {
        st.cusp_direction[ev] = cusp;
        st.event_components[ev] = {c, c};
      }
    } while (!(h.seg.slice == upper.slice && h.seg.pos == upper.pos && h.dir == 1));
  }

  for (const auto& [comp, sign] : f.orientation) {
    if (comp < 1 || comp > st.component_count)
      throw ValidationError("orientation directive names component " + std::to_string(comp) + " but the front has " +
                            std::to_string(st.component_count));
    if (sign != 1 && sign != -1) throw ValidationError("orientation must be + or -");
    if (sign > 0) continue;
    for (std::size_t s = 0; s < total; ++s)
      if (tr.seg_component[s] == comp - 1) tr.seg_dir[s] = -tr.seg_dir[s];
    for (std::size_t e = 0; e < n; ++e)
      if (f.events[e].kind != EventKind::Crossing && st.event_components[e][0] == comp - 1)
        st.cusp_direction[e] = -st.cusp_direction[e];
  }

  for (std::size_t e = 0; e < n; ++e) {
    if (f.events[e].kind != EventKind::Crossing) continue;
    const int p = f.events[e].pos;
    const std::size_t a = tr.id({e, p});
    const std::size_t b = tr.id({e, p + 1});
    st.event_components[e] = {tr.seg_component[a], tr.seg_component[b]};
    st.event_directions[e] = {tr.seg_dir[a], tr.seg_dir[b]};
  }
  return tr;
}

struct ArcUnion {
  std::vector<std::size_t> parent;
  explicit ArcUnion(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

FrontStructure validate_front(const FrontWord& f) { return trace(f).structure; }

int classify_crossing(const FrontWord& f, std::size_t event_index) {
  if (event_index >= f.events.size()) throw std::out_of_range("event index " + std::to_string(event_index));
  if (f.events[event_index].kind != EventKind::Crossing)
    throw std::invalid_argument("event " + std::to_string(event_index + 1) + " is not a crossing");
  const auto dirs = validate_front(f).event_directions[event_index];
  return dirs[0] == dirs[1] ? 1 : -1;
}

LegendrianInvariants legendrian_invariants(const FrontWord& f) {
  const FrontStructure st = validate_front(f);
  LegendrianInvariants inv;
  const auto n = static_cast<std::size_t>(st.component_count);
  std::vector<int> crossing_sum(n, 0);
  std::vector<int> cusps(n, 0);
  std::vector<int> cusp_balance(n, 0);
  int total_crossing = 0;
  for (std::size_t e = 0; e < f.events.size(); ++e) {
    const auto comps = st.event_components[e];
    if (f.events[e].kind == EventKind::Crossing) {
      const int s = st.event_directions[e][0] == st.event_directions[e][1] ? 1 : -1;
      (s > 0 ? inv.positive_crossings : inv.negative_crossings)++;
      total_crossing += s;
      if (comps[0] == comps[1]) crossing_sum[static_cast<std::size_t>(comps[0])] += s;
    } else {
      const auto c = static_cast<std::size_t>(comps[0]);
      ++cusps[c];
      cusp_balance[c] += st.cusp_direction[e];
      (st.cusp_direction[e] > 0 ? inv.down_cusps : inv.up_cusps)++;
    }
  }
  inv.tb = total_crossing - (inv.up_cusps + inv.down_cusps) / 2;
  inv.rotation = (inv.down_cusps - inv.up_cusps) / 2;
  for (std::size_t c = 0; c < n; ++c) {
    inv.component_tb.push_back(crossing_sum[c] - cusps[c] / 2);
    inv.component_rotation.push_back(cusp_balance[c] / 2);
  }
  return inv;
}

int thurston_bennequin(const FrontWord& f) { return legendrian_invariants(f).tb; }
int rotation(const FrontWord& f) { return legendrian_invariants(f).rotation; }

Diagram resolve_to_diagram(const FrontWord& f) {
  const Trace tr = trace(f);
  const std::size_t n = f.events.size();
  ArcUnion arcs(tr.offset.back());

  for (std::size_t e = 0; e < n; ++e) {
    const auto [kind, p] = f.events[e];
    const int before = tr.counts[e];
    for (int q = 1; q <= before; ++q) {
      if (kind == EventKind::Crossing && (q == p || q == p + 1)) continue;
      if (kind == EventKind::RightCusp && (q == p || q == p + 1)) continue;
      const int after = kind == EventKind::LeftCusp ? (q < p ? q : q + 2) : kind == EventKind::RightCusp ? (q < p ? q : q - 2) : q;
      arcs.unite(tr.id({e, q}), tr.id({e + 1, after}));
    }
    if (kind == EventKind::LeftCusp) arcs.unite(tr.id({e + 1, p}), tr.id({e + 1, p + 1}));
    if (kind == EventKind::RightCusp) arcs.unite(tr.id({e, p}), tr.id({e, p + 1}));
  }

  std::vector<bool> touches(tr.offset.back(), false);
  for (std::size_t e = 0; e < n; ++e) {
    if (f.events[e].kind != EventKind::Crossing) continue;
    const int p = f.events[e].pos;
    for (const Segment s : {Segment{e, p}, Segment{e, p + 1}, Segment{e + 1, p}, Segment{e + 1, p + 1}})
      touches[arcs.find(tr.id(s))] = true;
  }

  // Label arcs in traversal order so the PD reads naturally.
  std::vector<Arc> label(tr.offset.back(), 0);
  Arc next = 1;
  int free_loops = 0;
  std::vector<bool> started(static_cast<std::size_t>(tr.structure.component_count), false);
  for (std::size_t e = 0; e < n; ++e) {
    if (f.events[e].kind != EventKind::LeftCusp) continue;
    const Segment upper{e + 1, f.events[e].pos};
    const int c = tr.seg_component[tr.id(upper)];
    if (started[static_cast<std::size_t>(c)]) continue;
    started[static_cast<std::size_t>(c)] = true;
    if (!touches[arcs.find(tr.id(upper))]) {
      ++free_loops;
      continue;
    }
    const int dir = tr.seg_dir[tr.id(upper)];
    Heading h{upper, dir};
    do {
      const std::size_t root = arcs.find(tr.id(h.seg));
      if (label[root] == 0) label[root] = next++;
      int cusp = 0;
      h = step(f, h, cusp);
    } while (!(h.seg.slice == upper.slice && h.seg.pos == upper.pos && h.dir == dir));
  }

  std::vector<Crossing> crossings;
  for (std::size_t e = 0; e < n; ++e) {
    if (f.events[e].kind != EventKind::Crossing) continue;
    const int p = f.events[e].pos;
    auto lab = [&](Segment s) { return label[arcs.find(tr.id(s))]; };
    const Arc nw = lab({e, p});
    const Arc sw = lab({e, p + 1});
    const Arc ne = lab({e + 1, p});
    const Arc se = lab({e + 1, p + 1});
    const auto dirs = tr.structure.event_directions[e];
    Crossing x;
    if (dirs[1] > 0) {
      x.arcs = {sw, se, ne, nw};
      x.over_forward = dirs[0] > 0;
    } else {
      x.arcs = {ne, nw, sw, se};
      x.over_forward = dirs[0] < 0;
    }
    crossings.push_back(x);
  }
  Diagram d(std::move(crossings), free_loops);
  validate(d);
  return d;
}

FrontWord split_union_front(const FrontWord& a, const FrontWord& b) {
  // Both fronts close every strand, so b starts from an empty slice.
  FrontWord out = a;
  out.events.insert(out.events.end(), b.events.begin(), b.events.end());
  const int shift = validate_front(a).component_count;
  for (const auto& [comp, sign] : b.orientation) out.orientation[comp + shift] = sign;
  return out;
}

FrontWord reverse_front_component(const FrontWord& f, int component) {
  FrontWord out = f;
  const auto it = out.orientation.find(component);
  const int current = it == out.orientation.end() ? 1 : it->second;
  out.orientation[component] = -current;
  return out;
}

FrontWord stabilize(const FrontWord& f, std::size_t after, int pos, bool down) {
  FrontWord out = f;
  const auto at = out.events.begin() + static_cast<std::ptrdiff_t>(after);
  if (down)
    out.events.insert(at, {{EventKind::LeftCusp, pos + 1}, {EventKind::RightCusp, pos}});
  else
    out.events.insert(at, {{EventKind::LeftCusp, pos}, {EventKind::RightCusp, pos + 1}});
  validate_front(out);
  return out;
}

FrontWord random_front(std::mt19937_64& rng, std::size_t max_events) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  FrontWord f;
  const auto target = static_cast<std::size_t>(pick(2, static_cast<int>(std::max<std::size_t>(max_events, 2))));
  int count = 0;
  while (true) {
    const std::size_t closing = static_cast<std::size_t>(count / 2);
    const std::size_t used = f.events.size();
    if (used + closing >= target) break;
    const bool room_to_open = used + closing + 2 <= target;
    const int r = pick(0, 9);
    if (count == 0 || (room_to_open && r < 3)) {
      if (!room_to_open) break;
      f.events.push_back({EventKind::LeftCusp, pick(1, count + 1)});
      count += 2;
    } else if (r < 8) {
      f.events.push_back({EventKind::Crossing, pick(1, count - 1)});
    } else {
      f.events.push_back({EventKind::RightCusp, pick(1, count - 1)});
      count -= 2;
    }
  }
  while (count > 0) {
    f.events.push_back({EventKind::RightCusp, pick(1, count - 1)});
    count -= 2;
  }
  return f;
}

namespace {

class FrontParser {
 public:
  explicit FrontParser(std::string_view text) : text_(text) {}

  FrontWord parse() {
    FrontWord f;
    while (true) {
      skip();
      if (at_end()) break;
      const std::size_t line = line_;
      const std::size_t column = column_;
      const std::string token = word();
      if (token == "orient") {
        skip();
        const std::string comp = word();
        if (comp.size() < 2 || comp[0] != 'c' || !digits(comp.substr(1)))
          fail("expected component reference c<i> after 'orient'", line_, column_);
        skip();
        const std::string sign = word();
        if (sign != "+" && sign != "-") fail("expected + or - after component reference", line_, column_);
        f.orientation[std::stoi(comp.substr(1))] = sign == "+" ? 1 : -1;
        continue;
      }
      if (token.size() < 2 || (token[0] != 'u' && token[0] != 'x' && token[0] != 'd') || !digits(token.substr(1)))
        fail("unknown token '" + token + "'", line, column);
      const EventKind kind = token[0] == 'u' ? EventKind::LeftCusp : token[0] == 'x' ? EventKind::Crossing : EventKind::RightCusp;
      f.events.push_back({kind, std::stoi(token.substr(1))});
    }
    if (f.events.empty()) fail("front has no events", line_, column_);
    return f;
  }

 private:
  [[noreturn]] static void fail(const std::string& what, std::size_t line, std::size_t column) {
    throw ParseError(what, line, column);
  }

  static bool digits(const std::string& s) {
    return !s.empty() && s.size() <= 6 && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip() {
    while (!at_end()) {
      if (text_[pos_] == '#') {
        while (!at_end() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string word() {
    std::string out;
    while (!at_end() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '#') {
      out.push_back(text_[pos_]);
      advance();
    }
    if (out.empty()) fail("unexpected end of input", line_, column_);
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

FrontWord parse_front(std::string_view text) {
  FrontWord f = FrontParser(text).parse();
  validate_front(f);
  return f;
}

std::string format_front(const FrontWord& f) {
  std::ostringstream out;
  for (std::size_t e = 0; e < f.events.size(); ++e) {
    if (e > 0) out << ' ';
    const auto [kind, p] = f.events[e];
    out << (kind == EventKind::LeftCusp ? 'u' : kind == EventKind::Crossing ? 'x' : 'd') << p;
  }
  out << '\n';
  for (const auto& [comp, sign] : f.orientation) out << "orient c" << comp << ' ' << (sign > 0 ? '+' : '-') << '\n';
  return out.str();
}

std::string render_svg(const FrontWord& f) {
  const Trace tr = trace(f);
  const std::size_t n = f.events.size();
  constexpr int kColumn = 40;
  constexpr int kHalf = 12;
  constexpr int kRow = 20;
  static const char* const kPalette[] = {"#1f5fa8", "#b8321a", "#2a8a3e", "#8a4fb0", "#c07a12", "#107a80"};

  const int max_count = *std::max_element(tr.counts.begin(), tr.counts.end());
  const int width = kColumn * static_cast<int>(n + 1);
  const int height = kRow * (max_count + 1);
  auto cx = [&](std::size_t e) { return kColumn * static_cast<int>(e + 1); };
  auto cy = [&](int q) { return kRow * q; };
  auto color = [&](Segment s) {
    const int c = tr.seg_component[tr.id(s)];
    return kPalette[static_cast<std::size_t>(c) % std::size(kPalette)];
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
      << width << ' ' << height << "\">\n";
  svg << "<g fill=\"none\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
  auto line = [&](int x1, int y1, int x2, int y2, const char* stroke) {
    svg << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\"" << stroke
        << "\"/>\n";
  };

  for (std::size_t t = 1; t < n; ++t)
    for (int q = 1; q <= tr.counts[t]; ++q) line(cx(t - 1) + kHalf, cy(q), cx(t) - kHalf, cy(q), color({t, q}));

  for (std::size_t e = 0; e < n; ++e) {
    const auto [kind, p] = f.events[e];
    const int x = cx(e);
    for (int q = 1; q <= tr.counts[e]; ++q) {
      if ((kind != EventKind::LeftCusp) && (q == p || q == p + 1)) continue;
      const int after = kind == EventKind::LeftCusp ? (q < p ? q : q + 2) : kind == EventKind::RightCusp ? (q < p ? q : q - 2) : q;
      line(x - kHalf, cy(q), x + kHalf, cy(after), color({e, q}));
    }
    if (kind == EventKind::Crossing) {
      line(x - kHalf, cy(p), x + kHalf, cy(p + 1), color({e, p}));
      const char* under = color({e, p + 1});
      const int y0 = cy(p + 1);
      const int y1 = cy(p);
      svg << "<g class=\"crossing-gap\">\n";
      line(x - kHalf, y0, x - kHalf / 3, y0 + (y1 - y0) / 3, under);
      line(x + kHalf / 3, y0 + 2 * (y1 - y0) / 3, x + kHalf, y1, under);
      svg << "</g>\n";
    } else {
      const bool left = kind == EventKind::LeftCusp;
      const std::size_t slice = left ? e + 1 : e;
      const int tip = left ? x - kHalf : x + kHalf;
      const int back = left ? x + kHalf : x - kHalf;
      const int mid = (cy(p) + cy(p + 1)) / 2;
      svg << "<path class=\"cusp\" stroke=\"" << color({slice, p}) << "\" d=\"M " << back << ' ' << cy(p) << " Q " << x
          << ' ' << cy(p) << ' ' << tip << ' ' << mid << " Q " << x << ' ' << cy(p + 1) << ' ' << back << ' '
          << cy(p + 1) << "\"/>\n";
    }
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace dubrovnik
