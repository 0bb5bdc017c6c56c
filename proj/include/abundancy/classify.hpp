#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abundancy/arith.hpp"

namespace abundancy {

enum class Classification { Perfect, Abundant, Deficient };

std::string to_string(Classification c);

// Compares sigma(n) with 2n exactly. n = 1 is Deficient.
Classification classify(u64 n, const SigmaTable* table = nullptr);

// k such that sigma(n) = k*n, if any. k = 2 exactly for perfect numbers.
std::optional<u64> multiply_perfect_order(u64 n, const SigmaTable* table = nullptr);

// Lucas-Lehmer test of 2^p - 1 for prime p (direct check for p = 2).
bool mersenne_is_prime(std::uint32_t p);

// 2^(p-1)*(2^p - 1) when 2^p - 1 is a Mersenne prime, nullopt when composite.
// Throws std::out_of_range when the result would not fit in 64 bits.
std::optional<u64> euclid_euler(std::uint32_t p);

struct FriendlyClub {
  ReducedFraction index;
  std::vector<u64> members;  // strictly ascending, size >= 2
};

// All clubs of size >= 2 among n <= N, sorted by smallest member.
std::vector<FriendlyClub> friendly_clubs(u64 N, const SigmaTable& table);

}  // namespace abundancy
