#include "abundancy/classify.hpp"

#include <algorithm>
#include <unordered_map>

namespace abundancy {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Perfect:
      return "Perfect";
    case Classification::Abundant:
      return "Abundant";
    case Classification::Deficient:
      return "Deficient";
  }
  return "?";
}

namespace {

u64 sigma_of(u64 n, const SigmaTable* table) {
  return (table && n <= table->bound()) ? table->sigma(n) : sigma(n);
}

}  // namespace

Classification classify(u64 n, const SigmaTable* table) {
  if (n == 0) throw std::domain_error("classify: n must be >= 1");
  u64 s = sigma_of(n, table);
  u128 twice = u128(n) * 2;
  if (u128(s) == twice) return Classification::Perfect;
  if (u128(s) > twice) return Classification::Abundant;
  return Classification::Deficient;
}

std::optional<u64> multiply_perfect_order(u64 n, const SigmaTable* table) {
  if (n == 0) throw std::domain_error("multiply_perfect_order: n must be >= 1");
  u64 s = sigma_of(n, table);
  if (s % n != 0) return std::nullopt;
  return s / n;
}

bool mersenne_is_prime(std::uint32_t p) {
  if (p == 2) return true;
  if (!is_prime(p)) return false;
  if (p > 63) throw std::out_of_range("mersenne_is_prime: exponent too large for 64 bits");
  u64 m = (u64(1) << p) - 1;
  // Lucas-Lehmer: s_0 = 4, s_{i+1} = s_i^2 - 2 mod M, prime iff s_{p-2} = 0.
  u64 s = 4 % m;
  for (std::uint32_t i = 0; i < p - 2; ++i) {
    u128 sq = u128(s) * s;
    s = static_cast<u64>(sq % m);
    s = (s + m - 2) % m;
  }
  return s == 0;
}

std::optional<u64> euclid_euler(std::uint32_t p) {
  if (p < 2) throw std::out_of_range("euclid_euler: exponent must be >= 2");
  // 2^(p-1)*(2^p - 1) fits in 64 bits only up to p = 32.
  if (p > 32) throw std::out_of_range("euclid_euler: result exceeds 64 bits");
  if (!mersenne_is_prime(p)) return std::nullopt;
  u64 mersenne = (u64(1) << p) - 1;
  return (u64(1) << (p - 1)) * mersenne;
}

std::vector<FriendlyClub> friendly_clubs(u64 N, const SigmaTable& table) {
  if (table.bound() < N) throw std::domain_error("friendly_clubs: sieve does not cover N");
  struct KeyHash {
    std::size_t operator()(const std::pair<u64, u64>& k) const {
      return std::hash<u64>()(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
  };
  std::unordered_map<std::pair<u64, u64>, std::vector<u64>, KeyHash> by_index;
  for (u64 n = 1; n <= N; ++n) {
    ReducedFraction lam(table.sigma(n), n);
    by_index[{lam.num(), lam.den()}].push_back(n);
  }
  std::vector<FriendlyClub> clubs;
  for (auto& [key, members] : by_index) {
    if (members.size() < 2) continue;
    clubs.push_back({ReducedFraction(key.first, key.second), std::move(members)});
  }
  std::sort(clubs.begin(), clubs.end(),
            [](const FriendlyClub& a, const FriendlyClub& b) { return a.members.front() < b.members.front(); });
  return clubs;
}

}  // namespace abundancy
