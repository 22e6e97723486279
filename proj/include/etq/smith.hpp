#pragma once

#include <utility>
#include <vector>

#include "etq/integer.hpp"

namespace etq {

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

// Quotient rounded toward negative infinity.
template <typename Scalar>
Scalar floor_quotient(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  Scalar r = a - q * b;
  if (r != Scalar(0) && ((r < Scalar(0)) != (b < Scalar(0)))) q = q - Scalar(1);
  return q;
}

}  // namespace detail

/// Result of a Smith decomposition U * m * V = D.
///
/// U and V are unimodular; `U_inverse` is carried along because cokernel
/// generators are read off its columns. The first `rank` diagonal entries of
/// D are positive and each divides the next; everything else in D is zero.
template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U;
  Matrix<Scalar> U_inverse;
  Matrix<Scalar> V;
  Matrix<Scalar> D;
  Eigen::Index rank = 0;

  /// Diagonal of D, length min(rows, cols), zeros included.
  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> out;
    const Eigen::Index k = std::min(D.rows(), D.cols());
    out.reserve(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) out.push_back(D(i, i));
    return out;
  }
};

/// Smith normal form over the integers by pivoted Euclidean elimination.
///
/// Works for any exact integral scalar (built-in integers or etq::Integer).
/// Built-in scalars can overflow on adversarial input; use Integer for
/// anything that is not known to be small.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using detail::abs_value;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();

  SmithDecomposition<Scalar> out;
  out.D = m;
  out.U = Matrix<Scalar>::Identity(rows, rows);
  out.U_inverse = Matrix<Scalar>::Identity(rows, rows);
  out.V = Matrix<Scalar>::Identity(cols, cols);
  Matrix<Scalar>& D = out.D;

  auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    D.row(a).swap(D.row(b));
    out.U.row(a).swap(out.U.row(b));
    out.U_inverse.col(a).swap(out.U_inverse.col(b));
  };
  auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    D.col(a).swap(D.col(b));
    out.V.col(a).swap(out.V.col(b));
  };
  // row[target] += factor * row[source]
  auto add_row = [&](Eigen::Index target, Eigen::Index source, const Scalar& factor) {
    D.row(target) += factor * D.row(source);
    out.U.row(target) += factor * out.U.row(source);
    out.U_inverse.col(source) -= factor * out.U_inverse.col(target);
  };
  // col[target] += factor * col[source]
  auto add_col = [&](Eigen::Index target, Eigen::Index source, const Scalar& factor) {
    D.col(target) += factor * D.col(source);
    out.V.col(target) += factor * out.V.col(source);
  };

  const Eigen::Index steps = std::min(rows, cols);
  Eigen::Index t = 0;
  for (; t < steps; ++t) {
    bool have_pivot = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pi = -1, pj = -1;
      Scalar best(0);
      for (Eigen::Index j = t; j < cols; ++j) {
        for (Eigen::Index i = t; i < rows; ++i) {
          if (D(i, j) == Scalar(0)) continue;
          Scalar a = abs_value(D(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) break;
      have_pivot = true;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (D(i, t) == Scalar(0)) continue;
        add_row(i, t, Scalar(-detail::floor_quotient(D(i, t), D(t, t))));
        if (D(i, t) != Scalar(0)) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (D(t, j) == Scalar(0)) continue;
        add_col(j, t, Scalar(-detail::floor_quotient(D(t, j), D(t, t))));
        if (D(t, j) != Scalar(0)) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      Eigen::Index bad_row = -1;
      for (Eigen::Index j = t + 1; j < cols && bad_row < 0; ++j) {
        for (Eigen::Index i = t + 1; i < rows; ++i) {
          const Scalar q = D(i, j) / D(t, t);
          if (q * D(t, t) != D(i, j)) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      add_row(t, bad_row, Scalar(1));
    }
    if (!have_pivot) break;
    if (D(t, t) < Scalar(0)) {
      D.row(t) = -D.row(t);
      out.U.row(t) = -out.U.row(t);
      out.U_inverse.col(t) = -out.U_inverse.col(t);
    }
  }
  out.rank = t;
  return out;
}

/// Nonzero invariant factors, in divisibility order.
template <typename Derived>
std::vector<typename Derived::Scalar> invariant_factors(const Eigen::MatrixBase<Derived>& m) {
  auto snf = smith_normal_form(m);
  auto diag = snf.diagonal();
  diag.resize(static_cast<std::size_t>(snf.rank));
  return diag;
}

}  // namespace etq
