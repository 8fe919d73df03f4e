#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dubrovnik {

using Arc = int;

// One crossing of an oriented PD code.
//
// `arcs` lists the four incident arcs counterclockwise starting from the
// incoming under-strand, so the under-strand runs arcs[0] -> arcs[2]. The
// over-strand occupies arcs[1] and arcs[3]; `over_forward` records that it
// runs arcs[3] -> arcs[1], which is exactly the positive (right-handed) case.
struct Crossing {
  std::array<Arc, 4> arcs{};
  bool over_forward = true;

  int sign() const { return over_forward ? 1 : -1; }
  Arc under_in() const { return arcs[0]; }
  Arc under_out() const { return arcs[2]; }
  Arc over_in() const { return over_forward ? arcs[3] : arcs[1]; }
  Arc over_out() const { return over_forward ? arcs[1] : arcs[3]; }
  int over_in_slot() const { return over_forward ? 3 : 1; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Oriented link diagram: crossings plus crossingless circles.
class Diagram {
 public:
  Diagram() = default;
  // Takes an already oriented crossing list; see validate().
  Diagram(std::vector<Crossing> crossings, int free_loops);

  // Builds from bare PD tuples, deriving over-strand directions by tracing
  // components. Components with no under-passage are oriented so arc labels
  // increase along them. Throws ValidationError.
  static Diagram from_pd(const std::vector<std::array<Arc, 4>>& tuples, int free_loops);
  static Diagram unlink(int components) { return Diagram({}, components); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  int free_loops() const { return free_loops_; }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
};

struct ComponentMap {
  // Traced components come first (ordered by first appearance in the
  // crossing list), then one entry per free loop.
  int component_count = 0;
  int traced_count = 0;
  // Arc id -> traced component index.
  std::vector<std::pair<Arc, int>> arc_component;
  // Per traced component: arcs in traversal order.
  std::vector<std::vector<Arc>> component_arcs;
  // Per component (including free loops, which have none).
  std::vector<std::vector<std::size_t>> self_crossings;
  std::vector<std::vector<std::size_t>> inter_crossings;
  // Per crossing.
  std::vector<int> under_component;
  std::vector<int> over_component;

  int component_of(Arc arc) const;
};

// Checks every Diagram invariant and returns the component structure.
// Throws ValidationError naming the first violated invariant.
ComponentMap validate(const Diagram& d);

int crossing_sign(const Diagram& d, std::size_t i);
int writhe(const Diagram& d);
// Sum of signs of crossings whose strands both belong to `component`.
int self_writhe(const Diagram& d, const ComponentMap& map, int component);
std::vector<std::vector<int>> linking_matrix(const Diagram& d);

Diagram mirror(const Diagram& d);
Diagram switch_crossing(const Diagram& d, std::size_t i);
// Orientation-respecting smoothing.
Diagram smooth_0(const Diagram& d, std::size_t i);
// The other smoothing; orientations are re-derived by traversal.
Diagram smooth_inf(const Diagram& d, std::size_t i);
Diagram split_union(const Diagram& a, const Diagram& b);
Diagram reverse_component(const Diagram& d, int component);

// Adds `offset` to every arc id.
Diagram relabel_arcs(const Diagram& d, int offset);
// Applies an arbitrary injective relabeling and crossing permutation.
Diagram relabel(const Diagram& d, const std::vector<std::pair<Arc, Arc>>& arc_map,
                const std::vector<std::size_t>& crossing_order);
Arc max_arc(const Diagram& d);

// Isomorphism key: equal for diagrams that differ only by arc relabeling and
// crossing order. Orientation and over/under data are part of the key.
std::string canonical_key(const Diagram& d);

// Splits a diagram into maximal crossing-connected pieces (free loops dropped).
std::vector<Diagram> connected_pieces(const Diagram& d);

// PD text: `X[a,b,c,d]` entries separated by commas or whitespace, optional
// `O[n]` for n free loops, optional `PD[...]` wrapper, `#` comments.
// Throws ParseError (line/column) or ValidationError.
Diagram parse_pd(std::string_view text);
// Emits arcs numbered consecutively along each component so that parse_pd
// recovers the same oriented diagram.
std::string format_pd(const Diagram& d);

}  // namespace dubrovnik
