#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dubrovnik/front.hpp"
#include "dubrovnik/kauffman.hpp"
#include "dubrovnik/laurent.hpp"

namespace dubrovnik {

struct BoundReport {
  std::string id;
  int tb = 0;
  int rotation = 0;
  int components = 0;
  std::vector<int> component_tb;
  std::vector<int> component_rotation;
  Laurent2Poly polynomial;
  int max_deg_x = 0;
  int bound = 0;
  // bound - tb; negative means the inequality is violated.
  int slack = 0;
  bool satisfied = false;
  // bound < -components: not every component can be a tb = -1 unknot.
  bool unknot_obstruction = false;
};

// -max_deg_x(p); throws DegreeError on zero.
int rudolph_bound(const Laurent2Poly& p);

BoundReport check_front(const FrontWord& f, const std::string& id = "");
BoundReport check_front(const FrontWord& f, const std::string& id, KauffmanEvaluator& evaluator);

bool unknot_components_obstruction(const FrontWord& f);

std::string report_text(const BoundReport& r, bool per_component = false);
nlohmann::json report_json(const BoundReport& r);

struct FuzzResult {
  std::size_t fronts = 0;
  std::size_t violations = 0;
  // Fronts whose bound failed, in generation order.
  std::vector<std::string> violating_fronts;
  int min_slack = 0;
};

// Seeded campaign over random_front(rng, max_events).
FuzzResult fuzz_bound(std::size_t count, std::uint64_t seed, std::size_t max_events = 14);

}  // namespace dubrovnik
