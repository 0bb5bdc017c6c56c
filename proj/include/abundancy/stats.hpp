#pragma once

#include <utility>
#include <vector>

#include "abundancy/arith.hpp"

namespace abundancy {

// count{n <= N : sigma(n) > 2n} / N, exact.
ReducedFraction abundant_fraction(u64 N, const SigmaTable& table);

// count{n <= N : sigma(n) >= 2n} / N: abundant or perfect. At N = 100000 this
// is the published 0.24799 figure, which folds the four perfect numbers in.
ReducedFraction non_deficient_fraction(u64 N, const SigmaTable& table);

struct HistogramBins {
  ReducedFraction bin_width;
  // (lower_edge, count); bins are half-open [lower, lower + width) over
  // [1, max lambda]. Counts sum to N.
  std::vector<std::pair<ReducedFraction, u64>> bins;

  bool operator==(const HistogramBins&) const = default;
};

HistogramBins abundancy_histogram(u64 N, const SigmaTable& table,
                                  const ReducedFraction& bin_width);

struct Band {
  u64 lo;
  u64 hi;
};

struct BandReport {
  Band band;
  u64 pair_count;
  u64 div10_count;
  ReducedFraction div10_fraction;  // 0 when pair_count = 0
};

// Counts feebly amicable pairs (amicable and perfect-perfect pairs excluded)
// whose LARGER member lies in the band, and among them those whose sum is
// divisible by 10. Band membership by larger member so each pair is counted
// exactly once across increasing bands.
std::vector<BandReport> band_report(const std::vector<Band>& bands,
                                    const SigmaTable& table);

}  // namespace abundancy
