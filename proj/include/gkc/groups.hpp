#pragma once

// Symbolic descriptions of the (pre-)ordered K_0-groups that occur in the
// family, and the six-term invariant record built from them.

#include "gkc/dyadic.hpp"
#include "gkc/integer.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace gkc {

enum class GroupTag {
  DyadicLine,         // Z[1/2]
  DyadicPlusFree,     // Z[1/2] + Z
  DyadicPlusTorsion,  // Z[1/2] + Z/x, x > 1
  FreeZ,              // Z
  CyclicMod,          // Z/(m-1)
  Trivial
};

struct GroupDescriptor {
  GroupTag tag = GroupTag::Trivial;
  Integer order = 0;  // x for DyadicPlusTorsion, modulus for CyclicMod, else 0

  static GroupDescriptor dyadic_line() { return {GroupTag::DyadicLine, 0}; }
  static GroupDescriptor dyadic_plus_free() { return {GroupTag::DyadicPlusFree, 0}; }
  static GroupDescriptor free_z() { return {GroupTag::FreeZ, 0}; }
  static GroupDescriptor trivial() { return {GroupTag::Trivial, 0}; }

  /// Z[1/2] + Z/x; x = 1 collapses to Z[1/2].
  static GroupDescriptor dyadic_plus_torsion(Integer x) {
    if (x < 1) throw std::invalid_argument("torsion order must be at least 1");
    if (x == 1) return dyadic_line();
    return {GroupTag::DyadicPlusTorsion, std::move(x)};
  }
  static GroupDescriptor cyclic(Integer modulus) {
    if (modulus < 1) throw std::invalid_argument("cyclic modulus must be at least 1");
    return {GroupTag::CyclicMod, std::move(modulus)};
  }

  std::string str() const {
    switch (tag) {
      case GroupTag::DyadicLine: return "Z[1/2]";
      case GroupTag::DyadicPlusFree: return "Z[1/2]+Z";
      case GroupTag::DyadicPlusTorsion: return "Z[1/2]+Z/" + to_string(order);
      case GroupTag::FreeZ: return "Z";
      case GroupTag::CyclicMod: return "Z/" + to_string(order);
      case GroupTag::Trivial: return "0";
    }
    return "?";
  }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

enum class ConeTag {
  AllPositive,          // G_+ = G; with_full_class additionally records G = G_+ = G_++
  AlphaCone,            // U_n ((-n alpha, inf) cap Z[1/2]) x {n}
  StandardDyadicCone,   // x >= 0 in Z[1/2]
  StandardIntegerCone,  // n >= 0 in Z
  Lexicographic         // iota(ideal_+) disjoint-union {g : pi(g) > 0}, on Z[1/2] + Z
};

struct ConeDescriptor {
  ConeTag tag = ConeTag::AllPositive;
  bool with_full_class = false;         // AllPositive only
  RationalOrInfinity alpha;             // AlphaCone only
  bool ideal_all_positive = false;      // Lexicographic only

  static ConeDescriptor all_positive(bool with_full_class) {
    ConeDescriptor c;
    c.with_full_class = with_full_class;
    return c;
  }
  static ConeDescriptor alpha_cone(RationalOrInfinity alpha) {
    ConeDescriptor c;
    c.tag = ConeTag::AlphaCone;
    c.alpha = std::move(alpha);
    return c;
  }
  static ConeDescriptor standard_dyadic() { return tagged(ConeTag::StandardDyadicCone); }
  static ConeDescriptor standard_integer() { return tagged(ConeTag::StandardIntegerCone); }
  static ConeDescriptor lexicographic(bool ideal_all_positive) {
    ConeDescriptor c = tagged(ConeTag::Lexicographic);
    c.ideal_all_positive = ideal_all_positive;
    return c;
  }

  bool is_all_positive() const noexcept { return tag == ConeTag::AllPositive; }

  std::string str() const {
    switch (tag) {
      case ConeTag::AllPositive: return with_full_class ? "AllPositive(withFullClass)" : "AllPositive";
      case ConeTag::AlphaCone: return "AlphaCone(" + alpha.str() + ")";
      case ConeTag::StandardDyadicCone: return "StandardDyadicCone";
      case ConeTag::StandardIntegerCone: return "StandardIntegerCone";
      case ConeTag::Lexicographic:
        return ideal_all_positive ? "Lexicographic(idealAllPositive)" : "Lexicographic";
    }
    return "?";
  }

  friend bool operator==(const ConeDescriptor&, const ConeDescriptor&) = default;

 private:
  static ConeDescriptor tagged(ConeTag t) {
    ConeDescriptor c;
    c.tag = t;
    return c;
  }
};

/// (G, G_+) with the cone checked against the group shape at construction.
class PreorderedGroup {
 public:
  PreorderedGroup() = default;
  PreorderedGroup(GroupDescriptor group, ConeDescriptor cone) : group_(std::move(group)), cone_(std::move(cone)) {
    const bool two_part = group_.tag == GroupTag::DyadicPlusFree;
    bool ok = true;
    switch (cone_.tag) {
      case ConeTag::AllPositive: break;
      case ConeTag::AlphaCone:
      case ConeTag::Lexicographic: ok = two_part; break;
      case ConeTag::StandardDyadicCone: ok = group_.tag == GroupTag::DyadicLine; break;
      case ConeTag::StandardIntegerCone: ok = group_.tag == GroupTag::FreeZ; break;
    }
    if (!ok) throw std::invalid_argument("cone " + cone_.str() + " cannot order " + group_.str());
  }

  const GroupDescriptor& group() const noexcept { return group_; }
  const ConeDescriptor& cone() const noexcept { return cone_; }

  friend bool operator==(const PreorderedGroup&, const PreorderedGroup&) = default;

 private:
  GroupDescriptor group_ = GroupDescriptor::trivial();
  ConeDescriptor cone_ = ConeDescriptor::all_positive(false);
};

/// Element (x, n) of one of the groups above; unused parts are zero. For
/// Z/r-valued parts, n is read modulo r.
struct ConeElement {
  Dyadic dyadic_part;
  Integer int_part = 0;
};

enum class CaseTag { AF_AF, AF_PI, PI_AF, PI_PI };

inline const char* case_name(CaseTag c) {
  switch (c) {
    case CaseTag::AF_AF: return "AF-AF";
    case CaseTag::AF_PI: return "AF-PI";
    case CaseTag::PI_AF: return "PI-AF";
    case CaseTag::PI_PI: return "PI-PI";
  }
  return "?";
}

inline CaseTag parse_case(const std::string& s) {
  for (CaseTag c : {CaseTag::AF_AF, CaseTag::AF_PI, CaseTag::PI_AF, CaseTag::PI_PI})
    if (s == case_name(c)) return c;
  throw std::invalid_argument("unknown case tag: " + s);
}

/// 0 -> K0(I) -> K0(A) -> K0(A/I) -> 0 with all K1-groups zero.
struct SixTermInvariant {
  PreorderedGroup ideal;
  PreorderedGroup middle;
  PreorderedGroup quotient;
  GroupDescriptor k1_ideal = GroupDescriptor::trivial();
  GroupDescriptor k1_middle = GroupDescriptor::trivial();
  GroupDescriptor k1_quotient = GroupDescriptor::trivial();
  bool index_map_zero = true;  // the boundary map K0(A/I) -> K1(I)
  CaseTag case_tag = CaseTag::AF_AF;

  friend bool operator==(const SixTermInvariant&, const SixTermInvariant&) = default;
};

}  // namespace gkc
