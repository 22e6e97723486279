#pragma once

// Test-side reference computations. None of these call into the library's
// algorithms; they use brute force or textbook formulas instead.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using IntGrid = std::vector<std::vector<long long>>;

// Determinant by Laplace expansion; only for tiny square matrices.
inline long long determinant(const IntGrid& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntGrid minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const long long term = m[0][c] * determinant(minor);
    det += (c % 2 ? -term : term);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors d_k / d_{k-1}, where d_k is the gcd of all k x k minors.
// Stops at the first k whose minors all vanish.
inline std::vector<long long> invariant_factors(const IntGrid& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<long long> out;
  long long prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    long long g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntGrid sub(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        g = std::gcd(g, std::llabs(determinant(sub)));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Finite abelian group Z/o_1 + ... + Z/o_k as explicit tuples.
struct FiniteGroup {
  std::vector<long long> orders;

  long long size() const {
    long long s = 1;
    for (auto o : orders) s *= o;
    return s;
  }
  std::vector<std::vector<long long>> elements() const {
    std::vector<std::vector<long long>> out{{}};
    for (auto o : orders) {
      std::vector<std::vector<long long>> next;
      for (const auto& e : out)
        for (long long v = 0; v < o; ++v) {
          auto f = e;
          f.push_back(v);
          next.push_back(f);
        }
      out = next;
    }
    return out;
  }
};

// Applies a matrix (column j = image of generator j) and reduces mod target orders.
inline std::vector<long long> apply(const IntGrid& matrix, const std::vector<long long>& x,
                                    const std::vector<long long>& target_orders) {
  std::vector<long long> y(target_orders.size(), 0);
  for (std::size_t i = 0; i < target_orders.size(); ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += matrix[i][j] * x[j];
    y[i] = ((acc % target_orders[i]) + target_orders[i]) % target_orders[i];
  }
  return y;
}

// For a finite abelian 2-group, the counts #{x : 2^k x = 0}, k = 0..K,
// determine the isomorphism type. Computed from a list of elements.
inline std::vector<long long> two_torsion_profile(const std::vector<std::vector<long long>>& elems,
                                                  const std::vector<long long>& orders, int K) {
  std::vector<long long> out;
  for (int k = 0; k <= K; ++k) {
    long long count = 0;
    for (const auto& e : elems) {
      bool zero = true;
      for (std::size_t i = 0; i < e.size(); ++i) zero = zero && (((e[i] << k) % orders[i]) == 0);
      count += zero;
    }
    out.push_back(count);
  }
  return out;
}

// Same profile computed from cyclic orders: #{x : 2^k x = 0} = prod min(o, 2^k).
inline std::vector<long long> profile_of_orders(const std::vector<long long>& orders, int K) {
  std::vector<long long> out;
  for (int k = 0; k <= K; ++k) {
    long long c = 1;
    for (auto o : orders) c *= std::min<long long>(o, 1LL << k);
    out.push_back(c);
  }
  return out;
}

// Rank over F_2 of rows given as bit vectors.
inline int rank_f2(std::vector<std::vector<bool>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && rows[r][c])
        for (std::size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] != rows[rank][k];
    ++rank;
  }
  return rank;
}

// Rank over Q by fraction-free (Bareiss) elimination.
inline int rank_q(std::vector<std::vector<Big>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  Big prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return static_cast<int>(rank);
}

// Exponent vectors of total weighted degree `degree`.
inline std::vector<std::vector<int>> monomials(const std::vector<int>& weights, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(weights.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == weights.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int e = 0; e * weights[i] <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e * weights[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

// Sparse integer polynomial used by the presentation oracle.
using Poly = std::map<std::vector<int>, long long>;

// Degree-k piece of Z[x]/I (or F_2[x]/I): (free rank, number of cyclic torsion
// summands), from rank over Q and dimension over F_2 of the degree-k relation span.
struct GradedPiece {
  int free_rank = 0;
  int torsion_count = 0;
};

inline GradedPiece graded_piece(const std::vector<int>& weights, const std::vector<Poly>& relations, int degree,
                                bool mod2) {
  const auto basis = monomials(weights, degree);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<std::vector<Big>> rows;
  for (const auto& rel : relations) {
    const int rdeg = [&] {
      const auto& e = rel.begin()->first;
      int d = 0;
      for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
      return d;
    }();
    if (rdeg > degree) continue;
    for (const auto& mono : monomials(weights, degree - rdeg)) {
      std::vector<Big> row(basis.size(), 0);
      for (const auto& [e, c] : rel) {
        auto f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += mono[i];
        row[index.at(f)] += c;
      }
      rows.push_back(row);
    }
  }
  std::vector<std::vector<bool>> bits;
  for (const auto& r : rows) {
    std::vector<bool> b;
    for (const auto& v : r) b.push_back(static_cast<bool>(v & 1));
    bits.push_back(b);
  }
  const int n = static_cast<int>(basis.size());
  const int dim_f2 = n - rank_f2(bits);
  if (mod2) return {0, dim_f2};
  const int free = n - rank_q(rows);
  return {free, dim_f2 - free};
}

// Poincare polynomial of a smooth complex quadric of dimension d: degrees
// 0, 2, ..., 2d, with the middle degree doubled when d is even.
inline std::multiset<int> quadric_betti_degrees(int d) {
  std::multiset<int> out;
  for (int i = 0; i <= d; ++i) out.insert(2 * i);
  if (d % 2 == 0) out.insert(d);
  return out;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed);
  return gen;
}

}  // namespace oracle
