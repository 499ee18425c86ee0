#pragma once

// Smith normal form over Z and the cokernel invariants derived from it.

#include "gkc/int_matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace gkc {

/// U * M * V = S with U, V unimodular and S diagonal, d1 | d2 | ... with
/// zeros trailing. Signs of det U and det V are not normalized.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
  }
};

namespace detail {

// Position of the nonzero entry of least absolute value in the trailing block.
inline std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix& s, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      if (!best || mpz_cmpabs(s(i, j).get_mpz_t(), s(best->first, best->second).get_mpz_t()) < 0) best = {i, j};
    }
  return best;
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& s = f.S;
  const std::size_t r = std::min(s.rows(), s.cols());

  for (std::size_t t = 0; t < r; ++t) {
    for (;;) {
      auto pivot = detail::smallest_pivot(s, t);
      if (!pivot) return f;  // trailing block is zero
      s.swap_rows(t, pivot->first);
      f.U.swap_rows(t, pivot->first);
      s.swap_cols(t, pivot->second);
      f.V.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Integer q = floor_div(s(i, t), s(t, t));
        s.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Integer q = floor_div(s(t, j), s(t, t));
        s.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder now exists; re-pivot

      // Pivot must divide the rest of the block; otherwise fold in an offending row.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < s.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
      if (!offender) break;
      s.add_row_multiple(t, *offender, 1);
      f.U.add_row_multiple(t, *offender, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

/// coker(M) = Z^free_rank (+) Z/t1 (+) ... (+) Z/tr, t1 | t2 | ..., factors of 1 omitted.
struct CokernelInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  Integer torsion_order() const {
    Integer x = 1;
    for (const auto& t : torsion) x *= t;
    return x;
  }

  friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

/// Columns of M are relations on the generators indexing its rows.
inline CokernelInvariants cokernel_invariants(const IntMatrix& m) {
  const SmithForm f = smith_normal_form(m);
  CokernelInvariants out;
  std::size_t rank = 0;
  for (const auto& d : f.diagonal()) {
    if (d == 0) continue;
    ++rank;
    if (d != 1) out.torsion.push_back(d);
  }
  out.free_rank = m.rows() - rank;
  return out;
}

}  // namespace gkc
