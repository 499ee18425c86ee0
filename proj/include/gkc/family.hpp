#pragma once

// The graph family G[m,(n_i)]: one vertex carrying m loops and n_i edges to
// the i-th vertex of an infinite chain whose vertices each emit two edges to
// the next. Sequences (n_i) are given as a finite prefix plus a tail rule.

#include "gkc/dyadic.hpp"
#include "gkc/errors.hpp"
#include "gkc/int_matrix.hpp"
#include "gkc/integer.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gkc {

/// Number of loops at the distinguished vertex: a non-negative integer or infinity.
class LoopCount {
 public:
  LoopCount(long m) : value_(m) {}                          // NOLINT(google-explicit-constructor)
  explicit LoopCount(Integer m) : value_(std::move(m)) {}
  static LoopCount infinity() { return LoopCount(std::nullopt); }

  bool is_infinite() const noexcept { return !value_; }
  const Integer& value() const {
    if (!value_) throw std::logic_error("value() of an infinite loop count");
    return *value_;
  }
  bool is_zero() const { return value_ && *value_ == 0; }
  /// 1 < m < infinity
  bool is_proper_finite() const { return value_ && *value_ > 1; }

  std::string str() const { return value_ ? to_string(*value_) : "inf"; }
  friend bool operator==(const LoopCount&, const LoopCount&) = default;

 private:
  explicit LoopCount(std::optional<Integer> v) : value_(std::move(v)) {}
  std::optional<Integer> value_;
};

enum class TailKind { Zero, Constant, Doubling };

/// For i > k (k = prefix length): n_i = 0, c, or c * 2^(i-k).
struct TailSpec {
  TailKind kind = TailKind::Zero;
  Integer c = 0;

  static TailSpec zero() { return {}; }
  static TailSpec constant(Integer c) { return {TailKind::Constant, std::move(c)}; }
  static TailSpec doubling(Integer c) { return {TailKind::Doubling, std::move(c)}; }

  friend bool operator==(const TailSpec&, const TailSpec&) = default;
};

struct FamilySpec {
  LoopCount m = 0;
  std::vector<Integer> prefix;
  TailSpec tail;

  std::size_t k() const noexcept { return prefix.size(); }
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

enum class ValidationCode { ConditionK, NoIdealEdge, InfiniteSum, Malformed };

inline const char* code_name(ValidationCode c) {
  switch (c) {
    case ValidationCode::ConditionK: return "ConditionK";
    case ValidationCode::NoIdealEdge: return "NoIdealEdge";
    case ValidationCode::InfiniteSum: return "InfiniteSum";
    case ValidationCode::Malformed: return "Malformed";
  }
  return "?";
}

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationCode code, const std::string& detail)
      : std::invalid_argument(std::string(code_name(code)) + ": " + detail), code_(code) {}
  ValidationCode code() const noexcept { return code_; }

 private:
  ValidationCode code_;
};

/// Checks the one-ideal hypotheses; reports the first violation in the
/// order ConditionK, NoIdealEdge, InfiniteSum.
inline FamilySpec validate_family(LoopCount m, std::vector<Integer> prefix, TailSpec tail) {
  if (!m.is_infinite() && m.value() < 0)
    throw ValidationError(ValidationCode::Malformed, "m must be a non-negative integer or inf");
  for (const auto& n : prefix)
    if (n < 0) throw ValidationError(ValidationCode::Malformed, "edge counts n_i must be non-negative");
  if (tail.kind != TailKind::Zero && tail.c < 1)
    throw ValidationError(ValidationCode::Malformed, "tail constant c must be at least 1");

  if (!m.is_infinite() && m.value() == 1)
    throw ValidationError(ValidationCode::ConditionK, "m = 1 violates condition (K); m must differ from 1");
  bool any_edge = tail.kind != TailKind::Zero;
  for (const auto& n : prefix) any_edge = any_edge || n != 0;
  if (!any_edge)
    throw ValidationError(ValidationCode::NoIdealEdge, "at least one n_i must be nonzero");
  if (m.is_proper_finite() && tail.kind != TailKind::Zero)
    throw ValidationError(ValidationCode::InfiniteSum, "for 1 < m < inf the sum of the n_i must be finite");
  return FamilySpec{std::move(m), std::move(prefix), std::move(tail)};
}

/// Same spec with trailing zeros of the prefix removed (tail Zero only).
inline FamilySpec trimmed(FamilySpec spec) {
  if (spec.tail.kind == TailKind::Zero)
    while (!spec.prefix.empty() && spec.prefix.back() == 0) spec.prefix.pop_back();
  return spec;
}

/// Same spec with one more explicit zero in the prefix (tail Zero only).
inline FamilySpec padded(FamilySpec spec) {
  if (spec.tail.kind != TailKind::Zero) throw RegimeError("padding requires a zero tail");
  spec.prefix.emplace_back(0);
  return spec;
}

/// alpha = sum_i n_i 2^-i, exactly; infinite for a doubling tail.
inline RationalOrInfinity alpha_of(const FamilySpec& spec) {
  if (spec.tail.kind == TailKind::Doubling) return RationalOrInfinity::infinity();
  const std::size_t k = spec.k();
  Dyadic sum;
  for (std::size_t i = 0; i < k; ++i) sum = sum + Dyadic::canonical(spec.prefix[i], i + 1);
  // sum_{i>k} c 2^-i = c 2^-k
  if (spec.tail.kind == TailKind::Constant) sum = sum + Dyadic::canonical(spec.tail.c, k);
  return RationalOrInfinity(sum.to_rational());
}

struct BigN {
  std::size_t k = 0;
  Integer N = 0;
  friend bool operator==(const BigN&, const BigN&) = default;
};

/// N = sum_{i<=k} 2^(k-i) n_i with k the literal prefix length.
inline BigN big_n(const FamilySpec& spec) {
  if (spec.tail.kind != TailKind::Zero) throw RegimeError("N is defined only for a zero tail");
  BigN out{spec.k(), 0};
  for (const auto& n : spec.prefix) out.N = 2 * out.N + n;
  return out;
}

/// Relations of the K_0 presentation truncated to the first `depth` chain
/// vertices. Rows are generators in the fixed order (w_1, ..., w_depth, v_0);
/// column i < depth-1 is w_{i+1} - 2 w_{i+2}, the last column is
/// sum_i n_i w_i + (m-1) v_0.
inline IntMatrix truncated_presentation(const FamilySpec& spec, std::size_t depth) {
  if (!spec.m.is_proper_finite())
    throw RegimeError("truncated presentation needs 1 < m < inf, got m = " + spec.m.str());
  if (depth == 0 || depth < spec.k())
    throw RegimeError("depth " + std::to_string(depth) + " is below the prefix length " +
                      std::to_string(spec.k()));
  IntMatrix rel(depth + 1, depth);
  for (std::size_t i = 0; i + 1 < depth; ++i) {
    rel(i, i) = 1;
    rel(i + 1, i) = -2;
  }
  const std::size_t last = depth - 1;
  for (std::size_t i = 0; i < spec.k(); ++i) rel(i, last) = spec.prefix[i];
  rel(depth, last) = spec.m.value() - 1;
  return rel;
}

}  // namespace gkc
