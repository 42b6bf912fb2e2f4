#include "arrtop/linalg.hpp"

#include <algorithm>
#include <utility>

namespace arrtop {

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod(a, p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod(t, p);
}

}  // namespace

std::size_t rank_mod_p(ModMatrix m, std::int64_t p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  for (auto& row : m)
    for (auto& v : row) v = mod(v, p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const std::int64_t inv = inverse_mod(m[rank][c], p);
    for (std::size_t j = c; j < cols; ++j) m[rank][j] = m[rank][j] * inv % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::int64_t f = m[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_integer(IntMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : diagonal)
    if (d > 1) out.push_back(d);
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols_hint) {
  SmithForm snf;
  snf.rows = a.size();
  snf.cols = a.empty() ? cols_hint : a[0].size();
  const std::size_t rows = snf.rows;
  const std::size_t cols = snf.cols;
  IntMatrix m = a;
  IntMatrix v(cols, std::vector<Integer>(cols, 0));
  IntMatrix vinv(cols, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = vinv[i][i] = 1;

  // Column operation col_j -= q * col_k, mirrored on V (right) and V^{-1} (left).
  auto col_sub = [&](std::size_t j, std::size_t k, const Integer& q) {
    for (std::size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][k];
    for (std::size_t i = 0; i < cols; ++i) v[i][j] -= q * v[i][k];
    for (std::size_t i = 0; i < cols; ++i) vinv[k][i] += q * vinv[j][i];
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][j], m[i][k]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][j], v[i][k]);
    std::swap(vinv[j], vinv[k]);
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(m[i][j]) != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(m[t], m[pi]);
    col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(m[i][t]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        if (sgn(q) != 0)
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (sgn(m[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m[t][j]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        if (sgn(q) != 0) col_sub(j, t, q);
        if (sgn(m[t][j]) != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder sits in row t or column t; move it to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (sgn(m[i][t]) != 0 && abs(m[i][t]) < abs(m[bi][bj])) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (sgn(m[t][j]) != 0 && abs(m[t][j]) < abs(m[bi][bj])) {
            bi = t;
            bj = j;
          }
        std::swap(m[t], m[bi]);
        col_swap(t, bj);
        continue;
      }
      // Divisibility: fold a row holding a non-multiple into row t.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    snf.diagonal.push_back(abs(m[t][t]));
    ++t;
  }
  snf.V = std::move(v);
  snf.V_inverse = std::move(vinv);
  return snf;
}

}  // namespace arrtop
