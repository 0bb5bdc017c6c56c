#include "abundancy/pairs.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace abundancy {

namespace {

struct KeyHash {
  std::size_t operator()(const std::pair<u64, u64>& k) const {
    return std::hash<u64>()(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
  }
};

using ComplementMap = std::unordered_map<std::pair<u64, u64>, std::vector<u64>, KeyHash>;

PairRecord make_record(u64 small, u64 large, const SigmaTable& table) {
  u64 ss = table.sigma(small);
  u64 sl = table.sigma(large);
  PairRecord rec;
  rec.small = small;
  rec.large = large;
  rec.r_small = ReducedFraction(small, ss);
  rec.r_large = ReducedFraction(large, sl);
  rec.is_amicable = (ss == sl) && (u128(small) + large == u128(ss));
  rec.is_coprime = std::gcd(small, large) == 1;
  rec.both_perfect = (ss == 2 * small) && (sl == 2 * large);
  return rec;
}

bool passes(const PairRecord& rec, const PairFilters& f) {
  if (f.exclude_amicable && rec.is_amicable) return false;
  if (f.exclude_both_perfect && rec.both_perfect) return false;
  if (f.only_coprime && !rec.is_coprime) return false;
  return true;
}

}  // namespace

bool is_feebly_pair(u64 m, u64 n) {
  if (m == 0 || n == 0) throw std::domain_error("is_feebly_pair: members must be >= 1");
  ReducedFraction rm = reciprocal_abundancy(m);
  ReducedFraction rn = reciprocal_abundancy(n);
  return rm + rn == ReducedFraction(1, 1);
}

std::vector<PairRecord> feebly_pairs(u64 N, const SigmaTable& table, const PairFilters& filters) {
  if (table.bound() < N) throw std::domain_error("feebly_pairs: sieve does not cover N");
  std::vector<PairRecord> out;
  ComplementMap seen;
  // One ascending pass: probe the complement of r(n) among already-seen
  // smaller values, then record r(n). Emission order is larger then smaller
  // ascending by construction. n = 1 has r = 1, complement 0, never matches.
  for (u64 n = 2; n <= N; ++n) {
    u64 s = table.sigma(n);
    ReducedFraction r(n, s);
    ReducedFraction comp(s - n, s);
    if (auto it = seen.find({comp.num(), comp.den()}); it != seen.end()) {
      for (u64 small : it->second) {
        PairRecord rec = make_record(small, n, table);
        if (passes(rec, filters)) out.push_back(rec);
      }
    }
    if (filters.include_self_pairs && r == comp) {
      // sigma(n) = 2n: the perfect self-pair (n, n).
      PairRecord rec = make_record(n, n, table);
      if (passes(rec, filters)) out.push_back(rec);
    }
    seen[{r.num(), r.den()}].push_back(n);
  }
  return out;
}

std::vector<PairRecord> amicable_pairs(u64 N, const SigmaTable& table) {
  if (table.bound() < N) throw std::domain_error("amicable_pairs: sieve does not cover N");
  std::vector<PairRecord> out;
  for (u64 m = 2; m <= N; ++m) {
    u64 s = table.sigma(m);
    if (s <= 2 * m) continue;  // partner sigma(m) - m must exceed m
    u64 partner = s - m;
    if (partner > N) continue;
    if (table.sigma(partner) == s) out.push_back(make_record(m, partner, table));
  }
  std::sort(out.begin(), out.end(), [](const PairRecord& a, const PairRecord& b) {
    return a.large != b.large ? a.large < b.large : a.small < b.small;
  });
  return out;
}

std::vector<PairRecord> coprime_feebly_pairs(u64 N, const SigmaTable& table) {
  PairFilters f;
  f.only_coprime = true;
  return feebly_pairs(N, table, f);
}

namespace {

// Exact fraction on 128-bit limbs for partial k-tuple sums; reduced after
// every operation so denominators stay far below the limb width.
struct Frac128 {
  u128 num;
  u128 den;

  static Frac128 of(u64 n, u64 d) {
    Frac128 f{n, d};
    f.reduce();
    return f;
  }

  void reduce() {
    u128 a = num, b = den;
    while (b) {
      u128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  }

  Frac128 minus(u64 n, u64 d) const {
    Frac128 r{num * d - u128(n) * den, den * d};
    r.reduce();
    return r;
  }

  bool fits_u64() const { return num <= ~u64(0) && den <= ~u64(0); }
};

}  // namespace

std::vector<KTupleRecord> feebly_ktuples(u64 N, unsigned k, const SigmaTable& table,
                                         std::size_t limit) {
  if (k < 2 || k > 6) throw std::domain_error("feebly_ktuples: k must be in [2, 6]");
  if (table.bound() < N) throw std::domain_error("feebly_ktuples: sieve does not cover N");
  std::vector<KTupleRecord> out;
  if (limit == 0 || N < 2) return out;

  // Reduced r(n) for every n, plus a lookup from r value to ascending members
  // so the last slot is a probe instead of a scan.
  std::vector<std::pair<u64, u64>> r(N + 1);
  ComplementMap members;
  ReducedFraction max_r(0, 1);
  for (u64 n = 2; n <= N; ++n) {
    ReducedFraction f(n, table.sigma(n));
    r[n] = {f.num(), f.den()};
    members[r[n]].push_back(n);
    if (max_r < f) max_r = f;
  }

  std::vector<u64> chosen;
  chosen.reserve(k);

  auto emit = [&](u64 last) {
    KTupleRecord rec;
    rec.members = chosen;
    rec.members.push_back(last);
    for (u64 n : rec.members) rec.reciprocals.emplace_back(r[n].first, r[n].second);
    out.push_back(std::move(rec));
  };

  // DFS over strictly increasing members; `remaining` is the exact residual
  // target for the slots still open.
  auto dfs = [&](auto&& self, u64 min_next, Frac128 remaining, unsigned slots) -> void {
    if (out.size() >= limit) return;
    if (slots == 1) {
      if (!remaining.fits_u64()) return;
      auto it = members.find({static_cast<u64>(remaining.num), static_cast<u64>(remaining.den)});
      if (it == members.end()) return;
      for (u64 n : it->second) {
        if (n < min_next) continue;
        if (out.size() >= limit) return;
        emit(n);
      }
      return;
    }
    for (u64 n = min_next; n <= N; ++n) {
      if (out.size() >= limit) return;
      // Partial sum must stay below 1, and the residual must still be
      // reachable with `slots` values of at most max_r each.
      u128 lhs = u128(r[n].first) * remaining.den;
      u128 rhs = remaining.num * r[n].second;
      if (lhs >= rhs) continue;
      Frac128 rest = remaining.minus(r[n].first, r[n].second);
      if (rest.num * max_r.den() > u128(max_r.num()) * rest.den * (slots - 1)) continue;
      chosen.push_back(n);
      self(self, n + 1, rest, slots - 1);
      chosen.pop_back();
    }
  };

  dfs(dfs, 2, Frac128::of(1, 1), k);
  return out;
}

}  // namespace abundancy
