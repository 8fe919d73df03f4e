#include "dubrovnik/bounds.hpp"

#include <limits>
#include <random>
#include <sstream>

namespace dubrovnik {

int rudolph_bound(const Laurent2Poly& p) { return -p.max_deg_x(); }

BoundReport check_front(const FrontWord& f, const std::string& id, KauffmanEvaluator& evaluator) {
  const LegendrianInvariants inv = legendrian_invariants(f);
  BoundReport r;
  r.id = id;
  r.tb = inv.tb;
  r.rotation = inv.rotation;
  r.components = static_cast<int>(inv.component_tb.size());
  r.component_tb = inv.component_tb;
  r.component_rotation = inv.component_rotation;
  r.polynomial = evaluator.unreduced(resolve_to_diagram(f));
  r.max_deg_x = r.polynomial.max_deg_x();
  r.bound = rudolph_bound(r.polynomial);
  r.slack = r.bound - r.tb;
  r.satisfied = r.tb <= r.bound;
  r.unknot_obstruction = r.bound < -r.components;
  return r;
}

BoundReport check_front(const FrontWord& f, const std::string& id) {
  KauffmanEvaluator evaluator;
  return check_front(f, id, evaluator);
}

bool unknot_components_obstruction(const FrontWord& f) { return check_front(f).unknot_obstruction; }

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

}  // namespace

std::string report_text(const BoundReport& r, bool per_component) {
  std::ostringstream out;
  if (!r.id.empty()) out << "front: " << r.id << '\n';
  out << "components: " << r.components << '\n';
  out << "tb: " << r.tb << '\n';
  out << "rotation: " << r.rotation << '\n';
  if (per_component) {
    out << "component_tb: " << join(r.component_tb) << '\n';
    out << "component_rotation: " << join(r.component_rotation) << '\n';
  }
  out << "polynomial: " << format_poly(r.polynomial) << '\n';
  out << "max_deg_x: " << r.max_deg_x << '\n';
  out << "bound: " << r.bound << '\n';
  out << "slack: " << r.slack << '\n';
  out << "satisfied: " << (r.satisfied ? "true" : "false") << '\n';
  out << "unknot_obstruction: " << (r.unknot_obstruction ? "true" : "false") << '\n';
  return out.str();
}

nlohmann::json report_json(const BoundReport& r) {
  return nlohmann::json{{"front", r.id},
                        {"components", r.components},
                        {"tb", r.tb},
                        {"rotation", r.rotation},
                        {"component_tb", r.component_tb},
                        {"component_rotation", r.component_rotation},
                        {"polynomial", format_poly(r.polynomial)},
                        {"max_deg_x", r.max_deg_x},
                        {"bound", r.bound},
                        {"slack", r.slack},
                        {"satisfied", r.satisfied},
                        {"unknot_obstruction", r.unknot_obstruction}};
}

FuzzResult fuzz_bound(std::size_t count, std::uint64_t seed, std::size_t max_events) {
  std::mt19937_64 rng(seed);
  KauffmanEvaluator evaluator;
  FuzzResult result;
  result.min_slack = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < count; ++i) {
    const FrontWord f = random_front(rng, max_events);
    const BoundReport r = check_front(f, "", evaluator);
    ++result.fronts;
    result.min_slack = std::min(result.min_slack, r.slack);
    if (!r.satisfied) {
      ++result.violations;
      result.violating_fronts.push_back(format_front(f));
    }
  }
  if (count == 0) result.min_slack = 0;
  return result;
}

}  // namespace dubrovnik
