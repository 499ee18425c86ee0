#include "gkc/family.hpp"
#include "gkc/smith.hpp"

#include <gtest/gtest.h>

#include <random>

namespace gkc {
namespace {

ValidationCode code_of(LoopCount m, std::vector<Integer> prefix, TailSpec tail = TailSpec::zero()) {
  try {
    validate_family(std::move(m), std::move(prefix), std::move(tail));
  } catch (const ValidationError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a validation error";
  return ValidationCode::Malformed;
}

TEST(Validate, ConditionK) {
  EXPECT_EQ(code_of(1, {1}), ValidationCode::ConditionK);
  // ConditionK is reported before the other violations.
  EXPECT_EQ(code_of(1, {0}), ValidationCode::ConditionK);
}

TEST(Validate, NoIdealEdge) {
  EXPECT_EQ(code_of(5, {0, 0}), ValidationCode::NoIdealEdge);
  EXPECT_EQ(code_of(0, {}), ValidationCode::NoIdealEdge);
}

TEST(Validate, InfiniteSum) {
  EXPECT_EQ(code_of(5, {1}, TailSpec::constant(1)), ValidationCode::InfiniteSum);
  EXPECT_EQ(code_of(3, {}, TailSpec::doubling(2)), ValidationCode::InfiniteSum);
}

TEST(Validate, Malformed) {
  EXPECT_EQ(code_of(-1, {1}), ValidationCode::Malformed);
  EXPECT_EQ(code_of(4, {1, -2}), ValidationCode::Malformed);
  EXPECT_EQ(code_of(0, {}, TailSpec::constant(0)), ValidationCode::Malformed);
}

TEST(Validate, AcceptsEachRegime) {
  EXPECT_NO_THROW(validate_family(0, {2}, TailSpec::zero()));
  EXPECT_NO_THROW(validate_family(0, {}, TailSpec::constant(1)));
  EXPECT_NO_THROW(validate_family(LoopCount::infinity(), {}, TailSpec::doubling(1)));
  EXPECT_NO_THROW(validate_family(8, {1, 0, 3}, TailSpec::zero()));
}

TEST(Presentation, SingleVertex) {
  const auto spec = validate_family(3, {1}, TailSpec::zero());
  const auto rel = truncated_presentation(spec, 1);
  EXPECT_EQ(rel, (IntMatrix{{1}, {2}}));
}

TEST(Presentation, ChainAndLastColumn) {
  const auto spec = validate_family(4, {1, 0, 3}, TailSpec::zero());
  const auto rel = truncated_presentation(spec, 4);
  // rows w1..w4, v0; columns w1-2w2, w2-2w3, w3-2w4, last relation
  const IntMatrix expected{{1, 0, 0, 1}, {-2, 1, 0, 0}, {0, -2, 1, 3}, {0, 0, -2, 0}, {0, 0, 0, 3}};
  EXPECT_EQ(rel, expected);
}

TEST(Presentation, RegimeErrors) {
  const auto af = validate_family(0, {1}, TailSpec::zero());
  EXPECT_THROW(truncated_presentation(af, 3), RegimeError);
  const auto pi = validate_family(5, {1, 2}, TailSpec::zero());
  EXPECT_THROW(truncated_presentation(pi, 1), RegimeError);
  EXPECT_THROW(truncated_presentation(pi, 0), RegimeError);
}

// Eliminating w_1..w_{d-1} by w_i = 2 w_{i+1} by hand leaves the single
// relation (2^(d-k) N) w_d + (m-1) v0 on Z^2.
CokernelInvariants hand_eliminated(const Integer& m, const Integer& N, std::size_t extra) {
  const Integer g = gcd_of(pow2(extra) * N, m - 1);
  CokernelInvariants c;
  c.free_rank = 1;
  if (g != 1) c.torsion.push_back(g);
  return c;
}

TEST(Presentation, ResidualRelationAnchors) {
  const auto a = validate_family(3, {1}, TailSpec::zero());
  EXPECT_EQ(cokernel_invariants(truncated_presentation(a, 3)), cokernel_invariants(IntMatrix{{4}, {2}}));
  const auto b = validate_family(4, {3}, TailSpec::zero());
  EXPECT_EQ(cokernel_invariants(truncated_presentation(b, 3)), cokernel_invariants(IntMatrix{{12}, {3}}));
  // m = 9, n = (1): residual (2^j, 8) gives torsion 2, 4, 8, 8
  const auto spec = validate_family(9, {1}, TailSpec::zero());
  const std::vector<Integer> want{2, 4, 8, 8};
  for (std::size_t j = 1; j <= 4; ++j)
    EXPECT_EQ(cokernel_invariants(truncated_presentation(spec, 1 + j)).torsion_order(), want[j - 1]);
  // m = 13, n = (1, 1): N = 3, residual (12, 12) at depth 4 -> Z + Z/12
  const auto s2 = validate_family(13, {1, 1}, TailSpec::zero());
  EXPECT_EQ(cokernel_invariants(truncated_presentation(s2, 4)), hand_eliminated(13, 3, 2));
  EXPECT_EQ(hand_eliminated(13, 3, 2).torsion, std::vector<Integer>{12});
}

TEST(Presentation, AgreesWithHandEliminationAtEveryDepth) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> mdist(2, 120), len(1, 5), entry(0, 30);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Integer> prefix(len(rng));
    for (auto& n : prefix) n = entry(rng);
    prefix.back() += 1;
    const auto spec = validate_family(mdist(rng), prefix, TailSpec::zero());
    for (std::size_t extra = 0; extra <= 7; ++extra)
      EXPECT_EQ(cokernel_invariants(truncated_presentation(spec, spec.k() + extra)),
                hand_eliminated(spec.m.value(), big_n(spec).N, extra))
          << "m=" << spec.m.str() << " depth k+" << extra;
  }
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha_of(validate_family(0, {2}, TailSpec::zero())).value(), Rational(1));
  EXPECT_EQ(alpha_of(validate_family(0, {1, 1}, TailSpec::zero())).value(), Rational(3, 4));
  EXPECT_TRUE(alpha_of(validate_family(0, {}, TailSpec::doubling(1))).is_infinite());
  // constant tail: 1/2 + sum_{i>1} 2^-i = 1
  EXPECT_EQ(alpha_of(validate_family(0, {1}, TailSpec::constant(1))).value(), Rational(1));
  EXPECT_EQ(alpha_of(validate_family(0, {}, TailSpec::constant(3))).value(), Rational(3));
}

TEST(Alpha, PaddingInvariant) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> len(1, 6), entry(0, 50);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> prefix(len(rng));
    for (auto& n : prefix) n = entry(rng);
    prefix.front() += 1;
    const auto spec = validate_family(0, prefix, TailSpec::zero());
    EXPECT_EQ(alpha_of(padded(spec)), alpha_of(spec));
    EXPECT_EQ(big_n(padded(spec)).N, 2 * big_n(spec).N);
    EXPECT_EQ(big_n(padded(spec)).k, spec.k() + 1);
    EXPECT_EQ(alpha_of(spec).value(), Rational(big_n(spec).N) / Rational(pow2(spec.k())));
  }
}

TEST(BigN, Examples) {
  EXPECT_EQ(big_n(validate_family(8, {1, 0, 3}, TailSpec::zero())), (BigN{3, 7}));
  EXPECT_EQ(big_n(validate_family(8, {1}, TailSpec::zero())), (BigN{1, 1}));
  EXPECT_EQ(big_n(validate_family(8, {1, 0}, TailSpec::zero())), (BigN{2, 2}));
  EXPECT_THROW(big_n(validate_family(0, {1}, TailSpec::constant(1))), RegimeError);
}

TEST(Trim, DropsTrailingZeros) {
  const auto spec = validate_family(8, {1, 0, 3, 0, 0}, TailSpec::zero());
  EXPECT_EQ(trimmed(spec).prefix, (std::vector<Integer>{1, 0, 3}));
  EXPECT_THROW(padded(validate_family(0, {1}, TailSpec::constant(1))), RegimeError);
}

TEST(LoopCount, Basics) {
  EXPECT_TRUE(LoopCount::infinity().is_infinite());
  EXPECT_FALSE(LoopCount::infinity().is_proper_finite());
  EXPECT_TRUE(LoopCount(2).is_proper_finite());
  EXPECT_TRUE(LoopCount(0).is_zero());
  EXPECT_EQ(LoopCount::infinity().str(), "inf");
  EXPECT_NE(LoopCount(3), LoopCount::infinity());
}

}  // namespace
}  // namespace gkc
