#pragma once

// Decisions on symbolic positive cones: membership, lexicographic and
// K-lexicographic sequences, and order isomorphism of alpha-cones.

#include "gkc/errors.hpp"
#include "gkc/groups.hpp"

#include <stdexcept>

namespace gkc {

namespace detail {

inline void check_shape(const GroupDescriptor& g, const ConeElement& e) {
  const bool dyadic_ok = e.dyadic_part == Dyadic(0) || g.tag == GroupTag::DyadicLine ||
                         g.tag == GroupTag::DyadicPlusFree || g.tag == GroupTag::DyadicPlusTorsion;
  const bool int_ok = e.int_part == 0 || g.tag == GroupTag::DyadicPlusFree ||
                      g.tag == GroupTag::DyadicPlusTorsion || g.tag == GroupTag::FreeZ ||
                      g.tag == GroupTag::CyclicMod;
  if (!dyadic_ok || !int_ok) throw std::invalid_argument("element shape does not match group " + g.str());
}

}  // namespace detail

inline bool cone_contains(const PreorderedGroup& pg, const ConeElement& e) {
  detail::check_shape(pg.group(), e);
  const ConeDescriptor& cone = pg.cone();
  const Dyadic& x = e.dyadic_part;
  const Integer& n = e.int_part;
  switch (cone.tag) {
    case ConeTag::AllPositive: return true;
    case ConeTag::StandardDyadicCone: return x >= Dyadic(0);
    case ConeTag::StandardIntegerCone: return n >= 0;
    case ConeTag::Lexicographic:
      if (n != 0) return n > 0;
      return cone.ideal_all_positive || x >= Dyadic(0);
    case ConeTag::AlphaCone:
      if (n < 0) return false;
      if (n == 0) return x >= Dyadic(0);
      if (cone.alpha.is_infinite()) return true;
      return x.to_rational() > -Rational(n) * cone.alpha.value();
  }
  return false;
}

/// Whether middle_+ = pi^-1(quotient_+ \ {0}) disjoint-union iota(ideal_+)
/// for the split/non-split shapes of the family. Cone combinations outside
/// those shapes raise Unsupported.
inline bool is_lexicographic_sequence(const PreorderedGroup& ideal, const PreorderedGroup& middle,
                                      const PreorderedGroup& quotient) {
  const ConeDescriptor& ic = ideal.cone();
  const ConeDescriptor& mc = middle.cone();
  const ConeDescriptor& qc = quotient.cone();
  if (ic.tag != ConeTag::StandardDyadicCone && ic.tag != ConeTag::AllPositive)
    throw Unsupported("ideal cone " + ic.str() + " is not supported");
  if (qc.tag != ConeTag::StandardIntegerCone && qc.tag != ConeTag::AllPositive)
    throw Unsupported("quotient cone " + qc.str() + " is not supported");
  const bool ideal_all = ic.is_all_positive();
  const bool quotient_all = qc.is_all_positive();

  // Compare the kernel fiber with iota(ideal_+), then the fibers over
  // nonzero quotient elements with "full iff strictly positive".
  switch (mc.tag) {
    case ConeTag::AllPositive:
      return ideal_all && quotient_all;
    case ConeTag::AlphaCone:
      // kernel fiber {x >= 0}; fibers n > 0 full iff alpha = inf; n < 0 empty
      return !ideal_all && !quotient_all && mc.alpha.is_infinite();
    case ConeTag::Lexicographic:
      return mc.ideal_all_positive == ideal_all && !quotient_all;
    case ConeTag::StandardDyadicCone:
    case ConeTag::StandardIntegerCone:
      break;
  }
  throw Unsupported("middle cone " + mc.str() + " is not supported");
}

/// Clause (1) when the quotient is not all-positive, clause (2) when it is
/// all-positive with a full class; otherwise neither clause binds.
inline bool is_k_lexicographic(const SixTermInvariant& inv) {
  const ConeDescriptor& qc = inv.quotient.cone();
  if (!qc.is_all_positive()) return is_lexicographic_sequence(inv.ideal, inv.middle, inv.quotient);
  if (qc.with_full_class) return inv.middle.cone().is_all_positive() && inv.middle.cone().with_full_class;
  return true;
}

/// Order isomorphism of (Z[1/2] + Z, AlphaCone(a)) and (Z[1/2] + Z, AlphaCone(b)).
///
/// Automorphisms of Z[1/2] + Z are triangular, (x, n) -> (+-2^k x + c n, +-n),
/// since Hom(Z[1/2], Z) = 0. Preserving the n = 0 slice {x >= 0} and the
/// emptiness of n < 0 forces both signs positive, and such a map carries
/// AlphaCone(a) onto AlphaCone(2^k a - c). Hence the criterion
/// b in 2^Z a + Z[1/2]: equal odd parts M0 of the reduced denominators and
/// numerators related by a power of 2 modulo M0.
inline bool alpha_cone_isomorphic(const RationalOrInfinity& a, const RationalOrInfinity& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  const Integer m0 = odd_part(a.value().get_den());
  if (m0 != odd_part(b.value().get_den())) return false;
  if (m0 == 1) return true;
  const Integer target = mod_floor(a.value().get_num(), m0);
  Integer r = mod_floor(b.value().get_num(), m0);
  const Integer start = r;
  do {
    if (r == target) return true;
    r = mod_floor(2 * r, m0);
  } while (r != start);
  return false;
}

/// The middle cone forced by fullness in the three non-AF-AF cases.
inline ConeDescriptor middle_cone_from_fullness(CaseTag tag, const PreorderedGroup& ideal,
                                                const PreorderedGroup& quotient) {
  switch (tag) {
    case CaseTag::AF_PI:
    case CaseTag::PI_PI:
      return ConeDescriptor::all_positive(true);
    case CaseTag::PI_AF:
      if (quotient.cone().tag != ConeTag::StandardIntegerCone)
        throw Unsupported("PI-AF expects a standard integer quotient cone, got " + quotient.cone().str());
      return ConeDescriptor::lexicographic(ideal.cone().is_all_positive());
    case CaseTag::AF_AF:
      break;
  }
  throw NotDetermined("in the AF-AF case the middle order is not determined by the ideal and quotient");
}

}  // namespace gkc
