#pragma once

#include <cstddef>
#include <vector>

#include "abundancy/arith.hpp"

namespace abundancy {

struct PairRecord {
  u64 small;
  u64 large;
  ReducedFraction r_small;  // small/sigma(small)
  ReducedFraction r_large;  // large/sigma(large)
  bool is_amicable;
  bool is_coprime;
  bool both_perfect;

  bool operator==(const PairRecord&) const = default;
};

struct PairFilters {
  bool exclude_amicable = false;
  bool exclude_both_perfect = false;
  bool only_coprime = false;
  bool include_self_pairs = false;  // perfect (n, n) pairs, off by default
};

// True iff m/sigma(m) + n/sigma(n) = 1 exactly. m = n is allowed and holds
// iff both are perfect.
bool is_feebly_pair(u64 m, u64 n);

// All feebly amicable pairs with larger member <= N, ordered by larger then
// smaller ascending. Complement lookup on reduced n/sigma(n), one pass.
std::vector<PairRecord> feebly_pairs(u64 N, const SigmaTable& table,
                                     const PairFilters& filters = {});

// Amicable pairs (m + n = sigma(m) = sigma(n)) with larger member <= N.
std::vector<PairRecord> amicable_pairs(u64 N, const SigmaTable& table);

// Feebly amicable pairs with coprime members.
std::vector<PairRecord> coprime_feebly_pairs(u64 N, const SigmaTable& table);

struct KTupleRecord {
  std::vector<u64> members;                  // strictly ascending
  std::vector<ReducedFraction> reciprocals;  // n/sigma(n), sums to 1 exactly

  bool operator==(const KTupleRecord&) const = default;
};

// Up to `limit` strictly increasing k-tuples (2 <= k <= 6) in lexicographic
// order whose reciprocals of abundancy indices sum to 1 exactly.
std::vector<KTupleRecord> feebly_ktuples(u64 N, unsigned k, const SigmaTable& table,
                                         std::size_t limit);

}  // namespace abundancy
