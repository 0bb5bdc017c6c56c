#pragma once

#include <optional>
#include <utility>

#include "abundancy/arith.hpp"

namespace abundancy {

inline constexpr u64 kDefaultSearchBound = 1'000'000;

struct OutlawVerdict {
  enum class Tag { ProvenOutlaw, Index, Unknown };

  Tag tag;
  u64 witness = 0;       // set for Index
  u64 search_bound = 0;  // set for Unknown
};

// Certifies q = k/m (lowest terms) an outlaw when m < k < sigma(m); otherwise
// searches for the smallest witness w <= search_bound with lambda(w) = q.
// The sufficient criterion is checked first, so certified queries never touch
// a sieve. Throws std::domain_error for q <= 1.
OutlawVerdict is_outlaw(const ReducedFraction& q,
                        u64 search_bound = kDefaultSearchBound,
                        const SigmaTable* table = nullptr);

// Thrown for n = 1: 1/lambda(1) = 1 forces the partner reciprocal to 0.
class NoPartnerError : public std::domain_error {
 public:
  NoPartnerError() : std::domain_error("n = 1 cannot have a feebly amicable partner") {}
};

// The abundancy index any feebly amicable partner of n must have:
// lambda(n) = a/b gives a/(a-b). Throws NoPartnerError for n = 1.
ReducedFraction required_partner_index(u64 n);

struct LonelyVerdict {
  enum class Tag { ProvenLonely, PartnerExists, Unknown, UnitNoPartner };

  Tag tag;
  ReducedFraction partner_index;   // required index, unset for UnitNoPartner
  u64 witness = 0;                 // set for PartnerExists
  u64 search_bound = 0;            // set for Unknown
  bool no_amicable_partner = false;  // implied by ProvenLonely
};

LonelyVerdict lonely_verdict(u64 n, u64 search_bound = kDefaultSearchBound,
                             const SigmaTable* table = nullptr);

// Smallest n <= bound with lambda(n) in the open interval (x-eps, x+eps).
// Throws std::domain_error unless x - eps > 1.
std::optional<std::pair<u64, ReducedFraction>> find_index_near(
    const ReducedFraction& x, const ReducedFraction& eps, u64 bound);

// Constructs a certified outlaw in (x-eps, x+eps): smallest m with lambda(m)
// in (x-eps/2, x+eps/2), smallest prime p > max{2m, (2x+eps)/eps, 4/eps},
// smallest k in [1,2m] with gcd(sigma(pm)-k, pm) = 1; returns (sigma(pm)-k)/pm.
ReducedFraction find_outlaw_near(const ReducedFraction& x, const ReducedFraction& eps);

}  // namespace abundancy
