#pragma once

// Closed-form six-term invariant of C*(G[m,(n_i)]) and the truncation oracle
// that pins down the torsion order x when 1 < m < inf.

#include "gkc/errors.hpp"
#include "gkc/family.hpp"
#include "gkc/groups.hpp"
#include "gkc/smith.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gkc {

struct DerivedScalars {
  RationalOrInfinity alpha;
  std::optional<std::size_t> k;  // zero tail only
  std::optional<Integer> N;      // zero tail only
  std::optional<Integer> x;      // 1 < m < inf only
  std::optional<Integer> M;      // odd part of m-1, 1 < m < inf only

  friend bool operator==(const DerivedScalars&, const DerivedScalars&) = default;
};

/// Cokernel of the depth-truncated presentation. The free rank is 1 for every
/// depth >= k; the torsion grows with depth until the 2-part of m-1 is absorbed.
inline CokernelInvariants truncated_k0_oracle(const FamilySpec& spec, std::size_t depth) {
  return cokernel_invariants(truncated_presentation(spec, depth));
}

/// Smallest extra depth past k at which the truncated torsion has stabilized:
/// the residual relation is (2^(d-k) N, m-1), so d-k >= v2(m-1) suffices.
inline std::size_t stable_depth(const FamilySpec& spec) {
  if (!spec.m.is_proper_finite()) throw RegimeError("stable depth needs 1 < m < inf");
  return spec.k() + std::max<std::size_t>(2, v2(spec.m.value() - 1) + 1);
}

/// Default oracle depth: at least k+3, deeper when m-1 carries a large power of 2.
inline std::size_t default_oracle_depth(const FamilySpec& spec) {
  if (!spec.m.is_proper_finite()) throw RegimeError("oracle depth needs 1 < m < inf");
  return spec.k() + std::max<std::size_t>(3, v2(spec.m.value() - 1) + 1);
}

inline CokernelInvariants truncated_k0_oracle(const FamilySpec& spec) {
  return truncated_k0_oracle(spec, default_oracle_depth(spec));
}

/// x with K0(C*(G)) = Z[1/2] + Z/x, read off the truncation oracle at
/// `depth` (default: stable_depth) and required to agree one level deeper.
inline Integer torsion_order_x(const FamilySpec& spec, std::optional<std::size_t> depth = std::nullopt) {
  if (spec.tail.kind != TailKind::Zero) throw RegimeError("torsion order needs a zero tail");
  const std::size_t d = depth.value_or(stable_depth(spec));
  const auto here = truncated_k0_oracle(spec, d);
  const auto deeper = truncated_k0_oracle(spec, d + 1);
  if (here != deeper)
    throw RegimeError("truncated torsion not yet stable at depth " + std::to_string(d));
  if (here.free_rank != 1)
    throw OracleDisagreement("truncated K0 has free rank " + std::to_string(here.free_rank) + ", expected 1");
  return here.torsion_order();
}

/// 2^v2(m-1) * gcd(M, N). Only trusted where the oracle has confirmed it.
inline Integer torsion_order_closed_form(const FamilySpec& spec) {
  if (!spec.m.is_proper_finite()) throw RegimeError("closed form needs 1 < m < inf");
  const Integer q = spec.m.value() - 1;
  return pow2(v2(q)) * gcd_of(odd_part(q), big_n(spec).N);
}

/// { 2^l d : d | M } for m-1 = 2^l M with M odd, ascending.
inline std::vector<Integer> x_range(const Integer& m) {
  if (m <= 1) throw RegimeError("x range needs 1 < m < inf");
  const Integer q = m - 1;
  const Integer two_part = pow2(v2(q));
  std::vector<Integer> out;
  for (const auto& d : divisors(odd_part(q))) out.push_back(two_part * d);
  return out;
}

struct FamilyInvariant {
  SixTermInvariant invariant;
  DerivedScalars scalars;
};

inline FamilyInvariant invariant_of(const FamilySpec& spec, std::optional<std::size_t> depth = std::nullopt) {
  FamilyInvariant out;
  DerivedScalars& sc = out.scalars;
  sc.alpha = alpha_of(spec);
  if (spec.tail.kind == TailKind::Zero) {
    const auto bn = big_n(spec);
    sc.k = bn.k;
    sc.N = bn.N;
  }

  SixTermInvariant& inv = out.invariant;
  inv.ideal = PreorderedGroup(GroupDescriptor::dyadic_line(), ConeDescriptor::standard_dyadic());
  inv.index_map_zero = true;

  if (spec.m.is_zero()) {
    inv.middle = PreorderedGroup(GroupDescriptor::dyadic_plus_free(), ConeDescriptor::alpha_cone(sc.alpha));
    inv.quotient = PreorderedGroup(GroupDescriptor::free_z(), ConeDescriptor::standard_integer());
    inv.case_tag = CaseTag::AF_AF;
  } else if (spec.m.is_infinite()) {
    inv.middle = PreorderedGroup(GroupDescriptor::dyadic_plus_free(), ConeDescriptor::all_positive(true));
    inv.quotient = PreorderedGroup(GroupDescriptor::free_z(), ConeDescriptor::all_positive(true));
    inv.case_tag = CaseTag::AF_PI;
  } else if (spec.m.is_proper_finite()) {
    sc.x = torsion_order_x(spec, depth);
    sc.M = odd_part(spec.m.value() - 1);
    inv.middle = PreorderedGroup(GroupDescriptor::dyadic_plus_torsion(*sc.x), ConeDescriptor::all_positive(true));
    inv.quotient =
        PreorderedGroup(GroupDescriptor::cyclic(spec.m.value() - 1), ConeDescriptor::all_positive(true));
    inv.case_tag = CaseTag::AF_PI;
  } else {
    throw ValidationError(ValidationCode::ConditionK, "m = 1 violates condition (K)");
  }
  return out;
}

}  // namespace gkc
