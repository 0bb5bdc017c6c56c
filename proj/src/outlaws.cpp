#include "abundancy/outlaws.hpp"

#include <numeric>

namespace abundancy {

namespace {

const ReducedFraction kOne(1, 1);

// Smallest w <= bound, w != exclude, with lambda(w) = q. 0 when none.
u64 smallest_with_index(const ReducedFraction& q, u64 bound, u64 exclude,
                        const SigmaTable* table) {
  std::optional<SigmaTable> local;
  const SigmaTable* t = table;
  if (!t || t->bound() < bound) {
    local.emplace(bound);
    t = &*local;
  }
  for (u64 n = 1; n <= bound; ++n) {
    if (n == exclude) continue;
    if (u128(t->sigma(n)) * q.den() == u128(n) * q.num()) return n;
  }
  return 0;
}

bool outlaw_criterion(const ReducedFraction& q) {
  // q = k/m in lowest terms with m < k < sigma(m).
  u64 k = q.num(), m = q.den();
  return m < k && k < sigma(m);
}

}  // namespace

OutlawVerdict is_outlaw(const ReducedFraction& q, u64 search_bound, const SigmaTable* table) {
  if (q <= kOne) throw std::domain_error("is_outlaw: abundancy indices lie in (1, infinity)");
  if (outlaw_criterion(q)) return {OutlawVerdict::Tag::ProvenOutlaw};
  if (u64 w = smallest_with_index(q, search_bound, 0, table))
    return {OutlawVerdict::Tag::Index, w};
  return {OutlawVerdict::Tag::Unknown, 0, search_bound};
}

ReducedFraction required_partner_index(u64 n) {
  if (n == 0) throw std::domain_error("required_partner_index: n must be >= 1");
  if (n == 1) throw NoPartnerError();
  ReducedFraction lam = abundancy_index(n);
  return ReducedFraction(lam.num(), lam.num() - lam.den());
}

LonelyVerdict lonely_verdict(u64 n, u64 search_bound, const SigmaTable* table) {
  if (n == 0) throw std::domain_error("lonely_verdict: n must be >= 1");
  LonelyVerdict v;
  if (n == 1) {
    v.tag = LonelyVerdict::Tag::UnitNoPartner;
    return v;
  }
  v.partner_index = required_partner_index(n);
  if (outlaw_criterion(v.partner_index)) {
    v.tag = LonelyVerdict::Tag::ProvenLonely;
    v.no_amicable_partner = true;  // amicable pairs are feebly amicable
    return v;
  }
  if (u64 w = smallest_with_index(v.partner_index, search_bound, n, table)) {
    v.tag = LonelyVerdict::Tag::PartnerExists;
    v.witness = w;
    return v;
  }
  v.tag = LonelyVerdict::Tag::Unknown;
  v.search_bound = search_bound;
  return v;
}

std::optional<std::pair<u64, ReducedFraction>> find_index_near(const ReducedFraction& x,
                                                              const ReducedFraction& eps,
                                                              u64 bound) {
  if (eps.num() == 0) throw std::domain_error("find_index_near: eps must be positive");
  if (x <= kOne + eps) throw std::domain_error("find_index_near: interval must lie inside (1, infinity)");
  ReducedFraction lo = x - eps;
  ReducedFraction hi = x + eps;
  SigmaTable table(bound);
  for (u64 n = 2; n <= bound; ++n) {
    ReducedFraction lam(table.sigma(n), n);
    if (lo < lam && lam < hi) return std::make_pair(n, lam);
  }
  return std::nullopt;
}

ReducedFraction find_outlaw_near(const ReducedFraction& x, const ReducedFraction& eps) {
  if (eps.num() == 0) throw std::domain_error("find_outlaw_near: eps must be positive");
  if (x <= kOne + eps) throw std::domain_error("find_outlaw_near: interval must lie inside (1, infinity)");

  // Smallest m with lambda(m) in the half-width interval.
  ReducedFraction half(eps.num(), 2 * eps.den());
  constexpr u64 kInternalBound = 1'000'000;
  auto hit = find_index_near(x, half, kInternalBound);
  if (!hit) throw std::runtime_error("find_outlaw_near: no index found within internal bound");
  u64 m = hit->first;

  // Smallest prime p > max{2m, (2x+eps)/eps, 4/eps}.
  ReducedFraction threshold(2 * m, 1);
  ReducedFraction two_x_plus_eps = x + x + eps;
  ReducedFraction bound2(two_x_plus_eps.num() * eps.den(), two_x_plus_eps.den() * eps.num());
  ReducedFraction bound3(4 * eps.den(), eps.num());
  if (threshold < bound2) threshold = bound2;
  if (threshold < bound3) threshold = bound3;
  u64 p = threshold.num() / threshold.den() + 1;
  while (ReducedFraction(p, 1) <= threshold || !is_prime(p)) ++p;

  // p > 2m >= m, so p does not divide m and sigma(pm) = (p+1) sigma(m).
  u64 pm = p * m;
  u64 sigma_pm = (p + 1) * sigma(m);
  for (u64 k = 1; k <= 2 * m; ++k) {
    if (std::gcd(sigma_pm - k, pm) == 1) return ReducedFraction(sigma_pm - k, pm);
  }
  throw std::logic_error("find_outlaw_near: no coprime offset in [1, 2m]");
}

}  // namespace abundancy
