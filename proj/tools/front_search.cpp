// Randomized search for fronts of a given link type and tb.
//
//   front_search --target whitehead.pd --tb -5 --components 2 --cusps 3 \
//                --crossings 9 --trials 200000 --seed 1 [--component-tb -4,-1] [--mirror]
//
// Candidates are plat-like words: left cusps, then crossings, then right
// cusps. Matches print as front text on standard output.

#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "dubrovnik/diagram.hpp"
#include "dubrovnik/fixtures.hpp"
#include "dubrovnik/front.hpp"
#include "dubrovnik/kauffman.hpp"

using namespace dubrovnik;

namespace {

FrontWord candidate(std::mt19937_64& rng, int cusp_pairs, int crossings) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  FrontWord f;
  int count = 0;
  for (int i = 0; i < cusp_pairs; ++i) {
    f.events.push_back({EventKind::LeftCusp, pick(1, count + 1)});
    count += 2;
  }
  for (int i = 0; i < crossings; ++i) f.events.push_back({EventKind::Crossing, pick(1, count - 1)});
  while (count > 0) {
    f.events.push_back({EventKind::RightCusp, pick(1, count - 1)});
    count -= 2;
  }
  return f;
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random search for fronts realizing a link type"};
  std::string target;
  int tb = 0;
  int components = 1;
  int cusps = 1;
  int crossings = 0;
  long trials = 100000;
  std::uint64_t seed = 1;
  std::string component_tb;
  bool mirror_target = false;
  int limit = 1;
  app.add_option("--target", target, "PD file of the link type")->required();
  app.add_option("--tb", tb)->required();
  app.add_option("--components", components);
  app.add_option("--cusps", cusps, "left cusp count");
  app.add_option("--crossings", crossings);
  app.add_option("--trials", trials);
  app.add_option("--seed", seed);
  app.add_option("--component-tb", component_tb, "comma-separated multiset");
  app.add_option("--limit", limit, "stop after this many matches");
  app.add_flag("--mirror", mirror_target, "search for the mirror of the target");
  CLI11_PARSE(app, argc, argv);

  KauffmanEvaluator evaluator;
  Diagram goal = parse_pd(read_file(target));
  if (mirror_target) goal = mirror(goal);
  const Laurent2Poly want = evaluator.unreduced(goal);
  const auto want_lk = linking_matrix(goal);
  const std::vector<int> want_split = component_tb.empty() ? std::vector<int>{} : parse_list(component_tb);

  std::mt19937_64 rng(seed);
  std::set<std::string> seen;
  int found = 0;
  for (long i = 0; i < trials && found < limit; ++i) {
    const FrontWord f = candidate(rng, cusps, crossings);
    const LegendrianInvariants inv = legendrian_invariants(f);
    if (inv.tb != tb || static_cast<int>(inv.component_tb.size()) != components) continue;
    if (!want_split.empty()) {
      auto split = inv.component_tb;
      std::sort(split.begin(), split.end());
      if (split != want_split) continue;
    }
    const Diagram d = resolve_to_diagram(f);
    if (d.free_loops() > 0) continue;
    if (linking_matrix(d) != want_lk) continue;
    if (evaluator.unreduced(d) != want) continue;
    const std::string text = format_front(f);
    if (!seen.insert(text).second) continue;
    ++found;
    std::cout << text << std::flush;
  }
  std::cerr << found << " match(es)\n";
  return found > 0 ? 0 : 1;
}
