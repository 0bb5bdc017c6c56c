#include "abundancy/stats.hpp"

#include <algorithm>

#include "abundancy/pairs.hpp"

namespace abundancy {

ReducedFraction abundant_fraction(u64 N, const SigmaTable& table) {
  if (table.bound() < N) throw std::domain_error("abundant_fraction: sieve does not cover N");
  u64 count = 0;
  for (u64 n = 1; n <= N; ++n) {
    if (u128(table.sigma(n)) > u128(n) * 2) ++count;
  }
  return ReducedFraction(count, N);
}

ReducedFraction non_deficient_fraction(u64 N, const SigmaTable& table) {
  if (table.bound() < N) throw std::domain_error("non_deficient_fraction: sieve does not cover N");
  u64 count = 0;
  for (u64 n = 1; n <= N; ++n) {
    if (u128(table.sigma(n)) >= u128(n) * 2) ++count;
  }
  return ReducedFraction(count, N);
}

HistogramBins abundancy_histogram(u64 N, const SigmaTable& table,
                                  const ReducedFraction& bin_width) {
  if (table.bound() < N) throw std::domain_error("abundancy_histogram: sieve does not cover N");
  if (bin_width.num() == 0) throw std::domain_error("abundancy_histogram: bin width must be positive");

  // Bin i covers [1 + i*w, 1 + (i+1)*w); index of lambda = s/n is
  // floor(q(s - n) / (n p)) for w = p/q, exact in 128-bit intermediates.
  const u64 p = bin_width.num(), q = bin_width.den();
  std::vector<u64> counts;
  for (u64 n = 1; n <= N; ++n) {
    u64 s = table.sigma(n);
    u128 idx = u128(q) * (s - n) / (u128(n) * p);
    if (idx >= counts.size()) counts.resize(static_cast<std::size_t>(idx) + 1, 0);
    ++counts[static_cast<std::size_t>(idx)];
  }

  HistogramBins h;
  h.bin_width = bin_width;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    ReducedFraction lower = ReducedFraction(1, 1) + ReducedFraction(i * p, q);
    h.bins.emplace_back(lower, counts[i]);
  }
  return h;
}

std::vector<BandReport> band_report(const std::vector<Band>& bands, const SigmaTable& table) {
  u64 max_hi = 0;
  for (const Band& b : bands) {
    if (b.lo > b.hi) throw std::domain_error("band_report: band lo exceeds hi");
    max_hi = std::max(max_hi, b.hi);
  }
  if (table.bound() < max_hi) throw std::domain_error("band_report: sieve does not cover bands");

  PairFilters filters;
  filters.exclude_amicable = true;
  filters.exclude_both_perfect = true;
  std::vector<PairRecord> pairs = feebly_pairs(max_hi, table, filters);

  std::vector<BandReport> out;
  for (const Band& b : bands) {
    BandReport rep{b, 0, 0, ReducedFraction(0, 1)};
    for (const PairRecord& rec : pairs) {
      if (rec.large < b.lo || rec.large > b.hi) continue;
      ++rep.pair_count;
      if ((rec.small + rec.large) % 10 == 0) ++rep.div10_count;
    }
    if (rep.pair_count > 0) rep.div10_fraction = ReducedFraction(rep.div10_count, rep.pair_count);
    out.push_back(rep);
  }
  return out;
}

}  // namespace abundancy
