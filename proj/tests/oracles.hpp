#pragma once

// Independent, deliberately naive reference computations used only by tests.
// None of these call into the routines they are used to check.

#include "gkc/dyadic.hpp"
#include "gkc/int_matrix.hpp"
#include "gkc/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace gkc::oracle {

/// Leibniz expansion over all permutations.
inline Integer leibniz_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

/// Invariant factors from determinantal divisors: D_k = gcd of k x k minors,
/// d_k = D_k / D_{k-1}. Returns the nonzero ones.
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& a) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(a.rows(), k, rs);
    subsets(a.cols(), k, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(r[i], c[j]);
        g = gcd_of(g, leibniz_det(minor));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

/// {2^l N mod q : 0 <= l < 2q + 2}, generously past any cycle.
inline std::set<std::uint64_t> naive_orbit(std::uint64_t q, std::uint64_t N) {
  std::set<std::uint64_t> out;
  std::uint64_t r = N % q;
  for (std::uint64_t l = 0; l < 2 * q + 2; ++l) {
    out.insert(r);
    r = (2 * r) % q;
  }
  return out;
}

inline bool naive_exact(std::uint64_t q, std::uint64_t a, std::uint64_t b) {
  const auto oa = naive_orbit(q, a), ob = naive_orbit(q, b);
  return std::any_of(oa.begin(), oa.end(), [&](std::uint64_t r) { return ob.count(r) > 0; });
}

/// Every unit u of Z/q against every pair of orbit elements.
inline bool naive_stable(std::uint64_t q, std::uint64_t a, std::uint64_t b) {
  const auto oa = naive_orbit(q, a), ob = naive_orbit(q, b);
  for (std::uint64_t u = 1; u <= std::max<std::uint64_t>(q, 1); ++u) {
    if (std::gcd(u, q) != 1) continue;
    for (auto r : ob)
      if (oa.count((u * r) % q)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Bounded search for order isomorphisms between alpha-cones.

/// (x, n) -> (2^k x + b n, n)
struct ConeMap {
  long k;
  Dyadic b;
};

/// Direct inequality: n > 0 and x > -n alpha, or n = 0 and x >= 0.
inline bool in_alpha_cone(const Rational& alpha, const Dyadic& x, long n) {
  if (n < 0) return false;
  if (n == 0) return x >= Dyadic(0);
  return x.to_rational() > -Rational(n) * alpha;
}

/// Dyadic points around the boundary -n alpha of each slice n in [0, 3], at
/// every resolution 2^-s for s <= 24, plus coarse integers. Any interval of
/// length >= 2^-20 starting at a boundary contains one of these points.
inline std::vector<std::pair<Dyadic, long>> witness_grid(const Rational& alpha) {
  std::vector<std::pair<Dyadic, long>> grid;
  for (unsigned s = 0; s <= 24; ++s)
    for (long n = 0; n <= 3; ++n) {
      Rational c = -Rational(n) * alpha * Rational(pow2(s));
      Integer base;
      mpz_fdiv_q(base.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
      for (long j = -16; j <= 16; ++j) grid.emplace_back(Dyadic::canonical(base + j, s), n);
    }
  for (long j = -2048; j <= 2048; ++j) grid.emplace_back(Dyadic(j), 1);
  return grid;
}

/// Whether the candidate agrees on membership at every grid point.
inline bool map_matches(const Rational& from, const Rational& to, const ConeMap& f,
                        const std::vector<std::pair<Dyadic, long>>& grid) {
  for (const auto& [x, n] : grid) {
    const Dyadic image = x.times_pow2(f.k) + f.b * Dyadic(n);
    if (in_alpha_cone(from, x, n) != in_alpha_cone(to, image, n)) return false;
  }
  return true;
}

/// All maps with |k| <= 8 and b = p / 2^8, |b| <= 4, that survive the grid.
inline std::vector<ConeMap> surviving_cone_maps(const Rational& from, const Rational& to) {
  const auto grid = witness_grid(from);
  std::vector<ConeMap> out;
  for (long k = -8; k <= 8; ++k)
    for (long p = -1024; p <= 1024; ++p) {
      const ConeMap f{k, Dyadic::canonical(Integer(p), 8)};
      if (map_matches(from, to, f, grid)) out.push_back(f);
    }
  return out;
}

}  // namespace gkc::oracle
