#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "dubrovnik/diagram.hpp"
#include "dubrovnik/laurent.hpp"

namespace dubrovnik {

// δ = (x - x^-1)/y + 1, the value of one split unknotted component.
Laurent2Poly delta();

// Evaluates the regular-isotopy Dubrovnik polynomial Λ by skein recursion:
//
//   Λ(L+) - Λ(L-) = y (Λ(L0) - Λ(L∞)),   Λ(positive kink) = x Λ,
//
// with L0 the orientation-respecting smoothing. Each diagram is traversed from
// chosen basepoints; crossings first met on their under-strand are switched
// (recording the smoothing terms) until the diagram is descending, where
// Λ = δ^components · x^(self-writhe).
//
// Λ values are cached by canonical_key; the cache is safe for concurrent use.
class KauffmanEvaluator {
 public:
  struct Options {
    // When set, component order and basepoints are drawn from this seed
    // instead of the deterministic rule. The value of Λ must not change.
    std::optional<std::uint64_t> pivot_seed;
    bool memoize = true;
  };

  KauffmanEvaluator() = default;
  explicit KauffmanEvaluator(Options options) : options_(options) {}

  Laurent2Poly lambda(const Diagram& d);
  // x^(-writhe) · Λ; K(unknot) = δ.
  Laurent2Poly unreduced(const Diagram& d);
  // unreduced / δ; the division must be exact.
  Laurent2Poly reduced(const Diagram& d);

  std::size_t cache_size() const;
  std::size_t evaluations() const { return evaluations_; }

 private:
  Laurent2Poly lambda_connected(const Diagram& d);
  Laurent2Poly lambda_uncached(const Diagram& d);

  Options options_;
  std::uint64_t rng_state_ = 0;
  bool rng_seeded_ = false;
  std::atomic<std::size_t> evaluations_{0};
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Laurent2Poly> cache_;
};

Laurent2Poly lambda_regular(const Diagram& d);
Laurent2Poly kauffman_unreduced(const Diagram& d);
Laurent2Poly kauffman_reduced(const Diagram& d);

}  // namespace dubrovnik
