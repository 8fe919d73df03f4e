#include "dubrovnik/kauffman.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace dubrovnik {

Laurent2Poly delta() {
  static const Laurent2Poly d = Laurent2Poly::mono(1, 1, -1) - Laurent2Poly::mono(1, -1, -1) + Laurent2Poly::constant(1);
  return d;
}

Laurent2Poly KauffmanEvaluator::lambda(const Diagram& d) {
  validate(d);
  Laurent2Poly value = delta().pow(static_cast<unsigned>(d.free_loops()));
  if (d.crossing_count() == 0) return value;
  for (const Diagram& piece : connected_pieces(d)) value *= lambda_connected(piece);
  return value;
}

Laurent2Poly KauffmanEvaluator::unreduced(const Diagram& d) { return lambda(d).shifted(-writhe(d), 0); }

Laurent2Poly KauffmanEvaluator::reduced(const Diagram& d) { return div_exact(unreduced(d), delta()); }

std::size_t KauffmanEvaluator::cache_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.size();
}

Laurent2Poly KauffmanEvaluator::lambda_connected(const Diagram& d) {
  if (!options_.memoize) return lambda_uncached(d);
  const std::string key = canonical_key(d);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Laurent2Poly value = lambda_uncached(d);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(key, value);
  return value;
}

Laurent2Poly KauffmanEvaluator::lambda_uncached(const Diagram& d) {
  ++evaluations_;
  const ComponentMap map = validate(d);

  std::vector<int> order(static_cast<std::size_t>(map.traced_count));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> base(order.size(), 0);
  if (options_.pivot_seed) {
    if (!rng_seeded_) {
      rng_state_ = *options_.pivot_seed;
      rng_seeded_ = true;
    }
    std::mt19937_64 rng(rng_state_++);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t c = 0; c < base.size(); ++c)
      base[c] = std::uniform_int_distribution<std::size_t>(0, map.component_arcs[c].size() - 1)(rng);
  }

  // Passages in traversal order: (crossing, met on the under-strand).
  std::vector<std::pair<std::size_t, bool>> passages;
  {
    std::unordered_map<Arc, std::pair<std::size_t, bool>> head;
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
      head[d.crossings()[i].under_in()] = {i, true};
      head[d.crossings()[i].over_in()] = {i, false};
    }
    for (int c : order) {
      const auto& arcs = map.component_arcs[static_cast<std::size_t>(c)];
      const std::size_t start = base[static_cast<std::size_t>(c)];
      for (std::size_t k = 0; k < arcs.size(); ++k) passages.push_back(head.at(arcs[(start + k) % arcs.size()]));
    }
  }

  const Laurent2Poly y = Laurent2Poly::y();
  Laurent2Poly acc;
  Diagram work = d;
  std::vector<bool> seen(d.crossing_count(), false);
  for (const auto& [xi, under] : passages) {
    if (seen[xi]) continue;
    seen[xi] = true;
    if (!under) continue;
    const int s = work.crossings()[xi].sign();
    Laurent2Poly branch = lambda(smooth_0(work, xi)) - lambda(smooth_inf(work, xi));
    branch *= y;
    if (s > 0)
      acc += branch;
    else
      acc -= branch;
    work = switch_crossing(work, xi);
  }

  // `work` is now descending: an unlink whose framing is its self-writhe.
  int framing = 0;
  for (int c = 0; c < map.traced_count; ++c) framing += self_writhe(work, map, c);
  acc += delta().pow(static_cast<unsigned>(map.traced_count)).shifted(framing, 0);
  return acc;
}

namespace {

KauffmanEvaluator& shared_evaluator() {
  static KauffmanEvaluator evaluator;
  return evaluator;
}

}  // namespace

Laurent2Poly lambda_regular(const Diagram& d) { return shared_evaluator().lambda(d); }
Laurent2Poly kauffman_unreduced(const Diagram& d) { return shared_evaluator().unreduced(d); }
Laurent2Poly kauffman_reduced(const Diagram& d) { return shared_evaluator().reduced(d); }

}  // namespace dubrovnik
