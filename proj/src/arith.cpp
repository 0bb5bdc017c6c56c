#include "abundancy/arith.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>

namespace abundancy {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Primes up to 10^6 for trial division; built once.
const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    constexpr u64 kBound = 1'000'000;
    std::vector<bool> composite(kBound + 1, false);
    std::vector<u64> ps;
    for (u64 i = 2; i <= kBound; ++i) {
      if (composite[i]) continue;
      ps.push_back(i);
      for (u64 j = i * i; j <= kBound; j += i) composite[j] = true;
    }
    return ps;
  }();
  return primes;
}

u64 pollard_rho(u64 n) {
  // Brent's variant; n is odd, composite, not a prime power obstacle.
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    int steps = 0;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      u64 diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      q = mulmod(q, diff, n);
      if (++steps % 64 == 0) {
        d = std::gcd(q, n);
        q = 1;
      }
    }
    if (d == 1 && x != y) d = std::gcd(x > y ? x - y : y - x, n);
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

u64 checked_mul(u64 a, u64 b, const char* what) {
  u128 p = u128(a) * b;
  if (p > ~u64(0)) throw OverflowError(what);
  return static_cast<u64>(p);
}

// sigma(p^a) = (p^(a+1) - 1)/(p - 1), exact, overflow-checked.
u64 sigma_prime_power(u64 p, std::uint32_t a) {
  u128 sum = 1;
  u128 pw = 1;
  for (std::uint32_t i = 0; i < a; ++i) {
    pw *= p;
    sum += pw;
    if (sum > ~u64(0)) throw OverflowError("sigma: prime-power sum exceeds 64 bits");
  }
  return static_cast<u64>(sum);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Deterministic base set for all 64-bit inputs.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

u64 Factorization::value() const {
  u64 v = 1;
  for (const auto& [p, a] : factors) {
    for (std::uint32_t i = 0; i < a; ++i) v = checked_mul(v, p, "factorization value exceeds 64 bits");
  }
  return v;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::domain_error("factorize: n must be >= 1");
  Factorization f;
  for (u64 p : small_primes()) {
    if (p * p > n) break;
    if (n % p) continue;
    std::uint32_t a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    f.factors.push_back({p, a});
  }
  if (n > 1) {
    std::vector<u64> rest;
    factor_rec(n, rest);
    std::sort(rest.begin(), rest.end());
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j < rest.size() && rest[j] == rest[i]) ++j;
      f.factors.push_back({rest[i], static_cast<std::uint32_t>(j - i)});
      i = j;
    }
  }
  return f;
}

u64 sigma(const Factorization& f) {
  u64 s = 1;
  for (const auto& [p, a] : f.factors) s = checked_mul(s, sigma_prime_power(p, a), "sigma exceeds 64 bits");
  return s;
}

u64 sigma(u64 n) { return sigma(factorize(n)); }

ReducedFraction::ReducedFraction(u64 num, u64 den) {
  if (den == 0) throw std::domain_error("fraction with zero denominator");
  u64 g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

ReducedFraction ReducedFraction::operator+(const ReducedFraction& o) const {
  u128 n = u128(num_) * o.den_ + u128(o.num_) * den_;
  u128 d = u128(den_) * o.den_;
  u128 g = gcd128(n, d);
  if (g == 0) g = 1;
  n /= g;
  d /= g;
  if (n > ~u64(0) || d > ~u64(0)) throw OverflowError("fraction sum exceeds 64 bits");
  return ReducedFraction(static_cast<u64>(n), static_cast<u64>(d));
}

ReducedFraction ReducedFraction::operator-(const ReducedFraction& o) const {
  u128 lhs = u128(num_) * o.den_;
  u128 rhs = u128(o.num_) * den_;
  if (rhs > lhs) throw std::domain_error("fraction difference is negative");
  u128 n = lhs - rhs;
  u128 d = u128(den_) * o.den_;
  u128 g = gcd128(n, d);
  if (g == 0) g = 1;
  n /= g;
  d /= g;
  if (n > ~u64(0) || d > ~u64(0)) throw OverflowError("fraction difference exceeds 64 bits");
  return ReducedFraction(static_cast<u64>(n), static_cast<u64>(d));
}

bool ReducedFraction::operator<(const ReducedFraction& o) const {
  return u128(num_) * o.den_ < u128(o.num_) * den_;
}

bool ReducedFraction::operator<=(const ReducedFraction& o) const {
  return u128(num_) * o.den_ <= u128(o.num_) * den_;
}

ReducedFraction ReducedFraction::reciprocal() const {
  if (num_ == 0) throw std::domain_error("reciprocal of zero");
  return ReducedFraction(den_, num_);
}

std::string ReducedFraction::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string ReducedFraction::decimal(int places) const {
  std::string out = std::to_string(num_ / den_);
  if (places <= 0) return out;
  out.push_back('.');
  u64 rem = num_ % den_;
  for (int i = 0; i < places; ++i) {
    rem *= 10;
    out.push_back(static_cast<char>('0' + rem / den_));
    rem %= den_;
  }
  return out;
}

SigmaTable::SigmaTable(u64 bound) : bound_(bound) {
  if (bound == 0) throw std::domain_error("sigma sieve bound must be >= 1");
  values_.assign(bound, 0);
  values_[0] = 1;
  if (bound == 1) return;

  // Linear sieve: g[n] holds 1 + p + ... + p^e for the smallest-prime-power
  // part p^e of n; sigma comes multiplicatively from the cofactor.
  std::vector<u64> g(bound + 1, 0);
  std::vector<u64> primes;
  std::vector<bool> composite(bound + 1, false);
  auto sig = [&](u64 n) -> u64& { return values_[n - 1]; };
  for (u64 i = 2; i <= bound; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      sig(i) = i + 1;
      g[i] = i + 1;
    }
    for (u64 p : primes) {
      u128 next = u128(p) * i;
      if (next > bound) break;
      u64 m = static_cast<u64>(next);
      composite[m] = true;
      if (i % p == 0) {
        g[m] = g[i] * p + 1;
        sig(m) = sig(i) / g[i] * g[m];
        break;
      }
      g[m] = p + 1;
      sig(m) = sig(i) * (p + 1);
    }
  }
}

namespace {

constexpr char kMagic[7] = {'S', 'I', 'G', 'M', 'A', '1', '\0'};
constexpr unsigned char kVersion = 0x01;

void put_u64(std::ostream& os, u64 v) {
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(buf), 8);
}

u64 get_u64(std::istream& is) {
  unsigned char buf[8];
  is.read(reinterpret_cast<char*>(buf), 8);
  u64 v = 0;
  for (int i = 0; i < 8; ++i) v |= u64(buf[i]) << (8 * i);
  return v;
}

}  // namespace

void SigmaTable::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write sieve cache: " + path);
  os.write(kMagic, sizeof(kMagic));
  os.put(static_cast<char>(kVersion));
  put_u64(os, bound_);
  for (u64 v : values_) put_u64(os, v);
  if (!os) throw std::runtime_error("failed writing sieve cache: " + path);
}

SigmaTable SigmaTable::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open sieve cache: " + path);
  char magic[sizeof(kMagic)];
  is.read(magic, sizeof(magic));
  if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("bad sieve cache magic: " + path);
  if (is.get() != kVersion) throw std::runtime_error("unsupported sieve cache version: " + path);
  SigmaTable t;
  t.bound_ = get_u64(is);
  if (t.bound_ == 0) throw std::runtime_error("corrupt sieve cache: zero bound");
  t.values_.resize(t.bound_);
  for (u64 i = 0; i < t.bound_; ++i) t.values_[i] = get_u64(is);
  if (!is) throw std::runtime_error("truncated sieve cache: " + path);
  // Spot checks.
  if (t.sigma(1) != 1 || (t.bound_ >= 2 && t.sigma(2) != 3) || t.sigma(t.bound_) != abundancy::sigma(t.bound_))
    throw std::runtime_error("sieve cache failed verification: " + path);
  return t;
}

ReducedFraction abundancy_index(u64 n, const SigmaTable* table) {
  if (n == 0) throw std::domain_error("abundancy: n must be >= 1");
  u64 s = (table && n <= table->bound()) ? table->sigma(n) : sigma(n);
  return ReducedFraction(s, n);
}

ReducedFraction reciprocal_abundancy(u64 n, const SigmaTable* table) {
  if (n == 0) throw std::domain_error("reciprocal_abundancy: n must be >= 1");
  u64 s = (table && n <= table->bound()) ? table->sigma(n) : sigma(n);
  return ReducedFraction(n, s);
}

}  // namespace abundancy
