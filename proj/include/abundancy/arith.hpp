#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace abundancy {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Thrown when an exact result does not fit in 64 bits.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

struct PrimePower {
  u64 prime;
  std::uint32_t exponent;

  bool operator==(const PrimePower&) const = default;
};

// Canonical prime-power representation. Empty factor list means n = 1.
struct Factorization {
  std::vector<PrimePower> factors;

  u64 value() const;  // product of prime^exponent, throws OverflowError

  bool operator==(const Factorization&) const = default;
};

// Exact nonnegative rational kept in lowest terms. No floating point anywhere.
class ReducedFraction {
 public:
  ReducedFraction() : num_(0), den_(1) {}
  ReducedFraction(u64 num, u64 den);  // reduces; throws std::domain_error on den = 0

  u64 num() const { return num_; }
  u64 den() const { return den_; }

  ReducedFraction operator+(const ReducedFraction& o) const;
  ReducedFraction operator-(const ReducedFraction& o) const;  // throws if result negative

  bool operator==(const ReducedFraction& o) const = default;
  bool operator<(const ReducedFraction& o) const;
  bool operator<=(const ReducedFraction& o) const;
  bool operator>(const ReducedFraction& o) const { return o < *this; }
  bool operator>=(const ReducedFraction& o) const { return o <= *this; }

  ReducedFraction reciprocal() const;  // throws on zero

  bool is_integer() const { return den_ == 1; }

  // "7/3", or just "2" when the denominator is 1.
  std::string str() const;
  // Exact decimal rendering, truncated to `places` digits after the point.
  std::string decimal(int places) const;

 private:
  u64 num_;
  u64 den_;
};

// sigma(1..N) by linear smallest-prime-factor sieve, immutable after build.
// Steady-state memory is ~8 bytes per entry (one u64 per n).
class SigmaTable {
 public:
  explicit SigmaTable(u64 bound);

  u64 bound() const { return bound_; }
  u64 sigma(u64 n) const { return values_[n - 1]; }  // 1 <= n <= bound

  const std::vector<u64>& values() const { return values_; }

  // Cache file: "SIGMA1\0" + version 0x01 + N (LE u64) + N sigma values (LE u64).
  void save(const std::string& path) const;
  static SigmaTable load(const std::string& path);

 private:
  SigmaTable() : bound_(0) {}

  u64 bound_;
  std::vector<u64> values_;
};

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);

Factorization factorize(u64 n);  // n >= 1

u64 sigma(const Factorization& f);  // throws OverflowError
u64 sigma(u64 n);

// lambda(n) = sigma(n)/n in lowest terms. Uses the table when it covers n.
ReducedFraction abundancy_index(u64 n, const SigmaTable* table = nullptr);
// n/sigma(n) in lowest terms.
ReducedFraction reciprocal_abundancy(u64 n, const SigmaTable* table = nullptr);

}  // namespace abundancy
