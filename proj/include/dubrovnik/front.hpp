#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dubrovnik/diagram.hpp"

namespace dubrovnik {

enum class EventKind { LeftCusp, Crossing, RightCusp };

// pos is 1-based from the top. A LeftCusp opens strands pos, pos+1; a
// RightCusp closes them; a Crossing transposes them.
struct FrontEvent {
  EventKind kind;
  int pos;

  friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

struct FrontWord {
  std::vector<FrontEvent> events;
  // 1-based component index -> +1 (default traversal) or -1 (reversed).
  std::map<int, int> orientation;

  friend bool operator==(const FrontWord&, const FrontWord&) = default;
};

struct FrontStructure {
  int component_count = 0;
  // Per event: cusps carry their component twice; a crossing carries the
  // component of the strand moving down (left to right), then the other one.
  std::vector<std::array<int, 2>> event_components;
  // Per event: horizontal direction (+1 right, -1 left) of the two strands
  // listed above, after orientations are applied.
  std::vector<std::array<int, 2>> event_directions;
  // Per event: for cusps, +1 if traversed downward, -1 if upward.
  std::vector<int> cusp_direction;
};

struct LegendrianInvariants {
  int tb = 0;
  int rotation = 0;
  std::vector<int> component_tb;
  std::vector<int> component_rotation;
  int up_cusps = 0;
  int down_cusps = 0;
  int positive_crossings = 0;
  int negative_crossings = 0;
};

FrontStructure validate_front(const FrontWord& f);
int classify_crossing(const FrontWord& f, std::size_t event_index);
LegendrianInvariants legendrian_invariants(const FrontWord& f);
int thurston_bennequin(const FrontWord& f);
int rotation(const FrontWord& f);

// Front resolution: the strand moving down is in front.
Diagram resolve_to_diagram(const FrontWord& f);

FrontWord split_union_front(const FrontWord& a, const FrontWord& b);
// Reverses one component (1-based) relative to its current orientation.
FrontWord reverse_front_component(const FrontWord& f, int component);
// Inserts a zigzag on the strand at `pos` just after event `after` (0 means
// before the first event). `down` picks which way the zigzag turns.
FrontWord stabilize(const FrontWord& f, std::size_t after, int pos, bool down);

// At most max_events events; open strands are closed with right cusps.
FrontWord random_front(std::mt19937_64& rng, std::size_t max_events = 14);

FrontWord parse_front(std::string_view text);
std::string format_front(const FrontWord& f);

std::string render_svg(const FrontWord& f);

}  // namespace dubrovnik
