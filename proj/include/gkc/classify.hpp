#pragma once

// Fullness and (stable) isomorphism decisions for the family.
//
// For 1 < m < inf with q = m-1, C*(G[m,(n_i)]) is determined by m and the
// class of N under the relation 2^l N = 2^l' N' (mod q); stably, by
// 2^l N = u 2^l' N' (mod q) for a unit u, equivalently gcd(N, M) with M the
// odd part of q.

#include "gkc/errors.hpp"
#include "gkc/family.hpp"
#include "gkc/ktheory.hpp"
#include "gkc/ordered_groups.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gkc {

enum class Unstabilized { Full, Unknown };

struct FullnessVerdict {
  bool stenotic = true;
  bool k_lexicographic = false;
  bool stabilized_full = false;
  Unstabilized unstabilized = Unstabilized::Unknown;

  friend bool operator==(const FullnessVerdict&, const FullnessVerdict&) = default;
};

struct IsoWitness {
  std::uint64_t ell = 0;
  std::uint64_t ell_prime = 0;
  std::uint64_t unit = 1;  // 1 for exact isomorphism

  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

struct IsoVerdict {
  bool isomorphic = false;
  std::optional<IsoWitness> witness;
  std::string reason;

  friend bool operator==(const IsoVerdict&, const IsoVerdict&) = default;
};

/// Comparison requested in a regime (m = 0 or m = inf) the congruence
/// criteria do not cover; carries the computed invariants instead.
class OutOfScope : public RegimeError {
 public:
  OutOfScope(const std::string& what, FamilyInvariant a, FamilyInvariant b)
      : RegimeError(what), a_(std::move(a)), b_(std::move(b)) {}
  const FamilyInvariant& first() const noexcept { return a_; }
  const FamilyInvariant& second() const noexcept { return b_; }

 private:
  FamilyInvariant a_;
  FamilyInvariant b_;
};

/// One-ideal lattices are linear, hence stenotic.
inline bool stenotic_check(const FamilySpec&) { return true; }

inline FullnessVerdict decide_fullness(const FamilySpec& spec) {
  const auto fi = invariant_of(spec);
  FullnessVerdict v;
  v.stenotic = stenotic_check(spec);
  v.k_lexicographic = is_k_lexicographic(fi.invariant);
  v.stabilized_full = v.k_lexicographic;
  // Non-AF algebras in the family give full extensions outright; for m = 0
  // only alpha = inf is decided by K-theory.
  const bool decided = !spec.m.is_zero() || fi.scalars.alpha.is_infinite();
  v.unstabilized = decided ? Unstabilized::Full : Unstabilized::Unknown;
  return v;
}

// ---------------------------------------------------------------------------
// Residue arithmetic modulo q = m - 1

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

inline std::uint64_t reduce(const Integer& n, std::uint64_t q) { return mpz_fdiv_ui(n.get_mpz_t(), q); }

inline unsigned v2_u64(std::uint64_t q) { return q == 0 ? 0 : static_cast<unsigned>(__builtin_ctzll(q)); }

/// Multiplicative order of 2 modulo an odd modulus (1 for modulus 1).
inline std::uint64_t order_of_two(std::uint64_t odd) {
  if (odd == 1) return 1;
  std::uint64_t r = 2 % odd, k = 1;
  while (r != 1) {
    r = mulmod(r, 2, odd);
    ++k;
  }
  return k;
}

/// Modular inverse of a unit a modulo q (q >= 1).
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q) {
  std::int64_t t = 0, new_t = 1;
  auto r = static_cast<std::int64_t>(q), new_r = static_cast<std::int64_t>(a % q);
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(q);
  return static_cast<std::uint64_t>(t) % q;
}

}  // namespace detail

/// Exponents l in [0, bound) reach every value of 2^l N mod q: the sequence
/// has pre-period <= v2(q) and period ord_2(odd part of q).
inline std::uint64_t residue_cycle_bound(std::uint64_t q) {
  return detail::v2_u64(q) + detail::order_of_two(q >> detail::v2_u64(q));
}

/// 2^l N mod q for l = 0, 1, ..., bound-1.
inline std::vector<std::uint64_t> two_power_sequence(std::uint64_t q, const Integer& N) {
  const std::uint64_t bound = residue_cycle_bound(q);
  std::vector<std::uint64_t> seq;
  seq.reserve(bound);
  std::uint64_t r = detail::reduce(N, q);
  for (std::uint64_t l = 0; l < bound; ++l) {
    seq.push_back(r);
    r = detail::mulmod(r, 2, q);
  }
  return seq;
}

/// { 2^l N mod q : l >= 0 }, ascending, found by iterating until a repeat.
inline std::vector<std::uint64_t> two_power_residues(std::uint64_t q, const Integer& N) {
  if (q == 0) throw std::invalid_argument("modulus must be at least 1");
  std::vector<bool> seen(q, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = detail::reduce(N, q); !seen[r]; r = detail::mulmod(r, 2, q)) {
    seen[r] = true;
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// First exponent at which each residue occurs in the sequence, or npos.
inline std::vector<std::uint64_t> first_exponents(std::uint64_t q, const std::vector<std::uint64_t>& seq) {
  std::vector<std::uint64_t> pos(q, UINT64_MAX);
  for (std::uint64_t l = 0; l < seq.size(); ++l)
    if (pos[seq[l]] == UINT64_MAX) pos[seq[l]] = l;
  return pos;
}

}  // namespace detail

/// 2^l N = 2^l' N' (mod q) for some l, l' >= 0. The witness minimizes
/// l + l', ties broken by smaller l'.
inline IsoVerdict exact_iso_residues(std::uint64_t q, const Integer& N, const Integer& Nprime) {
  const auto a = two_power_sequence(q, N);
  const auto b = two_power_sequence(q, Nprime);
  const auto pos_a = detail::first_exponents(q, a);
  const auto pos_b = detail::first_exponents(q, b);
  std::optional<IsoWitness> best;
  for (std::uint64_t r = 0; r < q; ++r) {
    if (pos_a[r] == UINT64_MAX || pos_b[r] == UINT64_MAX) continue;
    const IsoWitness w{pos_a[r], pos_b[r], 1};
    if (!best || w.ell + w.ell_prime < best->ell + best->ell_prime ||
        (w.ell + w.ell_prime == best->ell + best->ell_prime && w.ell_prime < best->ell_prime))
      best = w;
  }
  if (!best) return {false, std::nullopt, "2-power orbits of N and N' are disjoint mod " + std::to_string(q)};
  return {true, best, "2^l N = 2^l' N' mod " + std::to_string(q)};
}

/// Unit-orbit search: for each (l, l') in order of l + l' then l', enumerate
/// the units u of Z/q with u 2^l' N' = 2^l N. The candidates for u form the
/// coset u0 + (q/g)Z, g = gcd(2^l' N', q), walked in increasing order.
/// Pairs with both l, l' > v2(q) are skipped: doubling is injective on
/// multiples of 2^v2(q), so such a solution shifts down to (l-1, l'-1) and
/// was already reached at a smaller sum.
inline IsoVerdict stable_iso_enumeration(std::uint64_t q, const Integer& N, const Integer& Nprime) {
  const auto a = two_power_sequence(q, N);
  const auto b = two_power_sequence(q, Nprime);
  const std::uint64_t bound = a.size();
  const std::uint64_t pre = detail::v2_u64(q);
  std::vector<std::uint64_t> gb(bound);
  for (std::uint64_t lp = 0; lp < bound; ++lp) gb[lp] = std::gcd(b[lp], q);
  for (std::uint64_t s = 0; s + 1 < 2 * bound; ++s) {
    for (std::uint64_t lp = s < bound ? 0 : s - bound + 1; lp <= s && lp < bound; ++lp) {
      const std::uint64_t l = s - lp;
      if (l > pre && lp > pre) continue;
      const std::uint64_t g = gb[lp];
      if (a[l] % g != 0) continue;
      const std::uint64_t step = q / g;
      const std::uint64_t u0 =
          step == 1 ? 0 : detail::mulmod((a[l] / g) % step, detail::inverse_mod((b[lp] / g) % step, step), step);
      if (std::gcd(u0, step) != 1 && step != 1) continue;
      for (std::uint64_t u = u0; u < std::max<std::uint64_t>(q, 2); u += step) {
        if (u == 0 || std::gcd(u, q) != 1) continue;
        if (detail::mulmod(u % q, b[lp], q) != a[l]) throw OracleDisagreement("unit search produced a non-solution");
        return {true, IsoWitness{l, lp, u}, "2^l N = u 2^l' N' mod " + std::to_string(q)};
      }
    }
  }
  return {false, std::nullopt, "no unit u and l, l' with 2^l N = u 2^l' N' mod " + std::to_string(q)};
}

/// gcd(N, M) = gcd(N', M) for M the odd part of q.
inline bool stable_iso_gcd(std::uint64_t q, const Integer& N, const Integer& Nprime) {
  const Integer M = from_u64(q >> detail::v2_u64(q));
  return gcd_of(N, M) == gcd_of(Nprime, M);
}

/// Both routes, cross-checked; the enumeration supplies the witness.
inline IsoVerdict stable_iso_residues(std::uint64_t q, const Integer& N, const Integer& Nprime) {
  IsoVerdict v = stable_iso_enumeration(q, N, Nprime);
  if (v.isomorphic != stable_iso_gcd(q, N, Nprime))
    throw OracleDisagreement("unit-orbit enumeration and gcd criterion disagree for q = " + std::to_string(q) +
                             ", N = " + to_string(N) + ", N' = " + to_string(Nprime));
  return v;
}

namespace detail {

// Returns the common modulus m-1, or a verdict when m differs.
inline std::variant<std::uint64_t, IsoVerdict> comparable_modulus(const FamilySpec& a, const FamilySpec& b) {
  if (!(a.m == b.m)) return IsoVerdict{false, std::nullopt, "m mismatch"};
  if (!a.m.is_proper_finite())
    throw OutOfScope("isomorphism for m = " + a.m.str() + " needs scale data and is out of scope",
                     invariant_of(a), invariant_of(b));
  const Integer q = a.m.value() - 1;
  if (!fits_u64(q) || q > UINT32_MAX) throw RegimeError("m - 1 is too large for residue enumeration");
  return to_u64(q);
}

}  // namespace detail

inline IsoVerdict exact_iso(const FamilySpec& a, const FamilySpec& b) {
  auto q = detail::comparable_modulus(a, b);
  if (auto* v = std::get_if<IsoVerdict>(&q)) return *v;
  return exact_iso_residues(std::get<std::uint64_t>(q), big_n(a).N, big_n(b).N);
}

inline IsoVerdict stable_iso(const FamilySpec& a, const FamilySpec& b) {
  auto q = detail::comparable_modulus(a, b);
  if (auto* v = std::get_if<IsoVerdict>(&q)) return *v;
  return stable_iso_residues(std::get<std::uint64_t>(q), big_n(a).N, big_n(b).N);
}

/// Whether some N, N' in [0, m-2] are stably but not exactly isomorphic.
inline bool notions_differ(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  const std::uint64_t q = m - 1;
  for (std::uint64_t n = 0; n < q; ++n)
    for (std::uint64_t np = n + 1; np < q; ++np)
      if (stable_iso_residues(q, from_u64(n), from_u64(np)).isomorphic &&
          !exact_iso_residues(q, from_u64(n), from_u64(np)).isomorphic)
        return true;
  return false;
}

/// Smallest m in [2, limit] where stable and exact isomorphism differ. The
/// values of m are checked concurrently; the result is the minimum.
inline std::optional<std::uint64_t> smallest_divergence(std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("limit must be at least 2");
  std::vector<std::future<bool>> jobs;
  for (std::uint64_t m = 2; m <= limit; ++m) jobs.push_back(std::async(std::launch::async, notions_differ, m));
  std::optional<std::uint64_t> found;
  for (std::uint64_t m = 2; m <= limit; ++m)
    if (jobs[m - 2].get() && !found) found = m;
  return found;
}

struct ClassCounts {
  std::uint64_t exact = 0;
  std::uint64_t stable = 0;
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

/// Number of exact and stable isomorphism classes among N in [0, m-2].
inline ClassCounts class_counts(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  const std::uint64_t q = m - 1;
  auto count = [q](auto&& related) {
    std::vector<std::uint64_t> reps;
    for (std::uint64_t n = 0; n < q; ++n) {
      const bool known =
          std::any_of(reps.begin(), reps.end(), [&](std::uint64_t r) { return related(r, n); });
      if (!known) reps.push_back(n);
    }
    return static_cast<std::uint64_t>(reps.size());
  };
  ClassCounts c;
  c.exact = count([q](std::uint64_t r, std::uint64_t n) {
    return exact_iso_residues(q, from_u64(r), from_u64(n)).isomorphic;
  });
  c.stable = count([q](std::uint64_t r, std::uint64_t n) {
    return stable_iso_residues(q, from_u64(r), from_u64(n)).isomorphic;
  });
  return c;
}

/// Necessary conditions for a six-term sequence to arise from a graph
/// algebra with one ideal: vanishing index map, and an all-positive quotient
/// forcing an all-positive middle group.
inline bool permanence_check(const SixTermInvariant& candidate) {
  if (!candidate.index_map_zero) return false;
  if (candidate.quotient.cone().is_all_positive() && !candidate.middle.cone().is_all_positive()) return false;
  return true;
}

}  // namespace gkc
