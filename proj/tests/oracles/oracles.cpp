#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

/// Projective point with first nonzero coordinate scaled to 1.
std::array<Rational, 3> normalized(const std::array<Integer, 3>& v) {
  std::size_t lead = 0;
  while (lead < 3 && sgn(v[lead]) == 0) ++lead;
  if (lead == 3) throw std::logic_error("zero vector");
  std::array<Rational, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = Rational(v[i], v[lead]);
    out[i].canonicalize();
  }
  return out;
}

Integer dot(const Line& l, const std::array<Integer, 3>& p) {
  return Integer(static_cast<long>(l[0])) * p[0] + Integer(static_cast<long>(l[1])) * p[1] +
         Integer(static_cast<long>(l[2])) * p[2];
}

Rational reduce_mod(const Rational& x, std::int64_t p) {
  if (p == 0) return x;
  Integer num = x.get_num() % p, den = x.get_den() % p;
  if (num < 0) num += p;
  if (den < 0) den += p;
  if (den == 0) throw std::logic_error("denominator divisible by p");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Integer(static_cast<long>(p)).get_mpz_t());
  return Rational((num * inv) % p);
}

}  // namespace

std::vector<std::set<int>> brute_points(const std::vector<Line>& lines) {
  std::map<std::array<Rational, 3>, std::set<int>> pts;
  const int n = static_cast<int>(lines.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Line& a = lines[static_cast<std::size_t>(i)];
      const Line& b = lines[static_cast<std::size_t>(j)];
      std::array<Integer, 3> p{Integer(static_cast<long>(a[1] * b[2] - a[2] * b[1])),
                               Integer(static_cast<long>(a[2] * b[0] - a[0] * b[2])),
                               Integer(static_cast<long>(a[0] * b[1] - a[1] * b[0]))};
      auto& on = pts[normalized(p)];
      for (int h = 0; h < n; ++h)
        if (sgn(dot(lines[static_cast<std::size_t>(h)], p)) == 0) on.insert(h);
    }
  std::vector<std::set<int>> out;
  for (auto& [k, v] : pts) out.push_back(v);
  return out;
}

std::map<int, int> census(const std::vector<std::set<int>>& points) {
  std::map<int, int> c;
  for (const auto& p : points) ++c[static_cast<int>(p.size())];
  return c;
}

std::size_t rank(std::vector<std::vector<Rational>> m, std::int64_t p) {
  if (m.empty()) return 0;
  for (auto& row : m)
    for (auto& x : row) x = reduce_mod(x, p);
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const Rational inv = p == 0 ? Rational(1) / m[r][c] : reduce_mod(Rational(1) / m[r][c], p);
    for (auto& x : m[r]) x = reduce_mod(x * inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = reduce_mod(m[i][j] - f * m[r][j], p);
    }
    ++r;
  }
  return r;
}

namespace {

int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::vector<Rational>> os_relations(int n, const std::vector<std::set<int>>& flats) {
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<Rational>> rel;
  for (const auto& f : flats) {
    std::vector<int> l(f.begin(), f.end());
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = a + 1; b < l.size(); ++b)
        for (std::size_t c = b + 1; c < l.size(); ++c) {
          std::vector<Rational> row(static_cast<std::size_t>(pairs), 0);
          row[static_cast<std::size_t>(pair_index(n, l[b], l[c]))] += 1;
          row[static_cast<std::size_t>(pair_index(n, l[a], l[c]))] -= 1;
          row[static_cast<std::size_t>(pair_index(n, l[a], l[b]))] += 1;
          rel.push_back(row);
        }
  }
  return rel;
}

}  // namespace

int os_dim2(int n, const std::vector<std::set<int>>& flats) {
  const auto rel = os_relations(n, flats);
  return n * (n - 1) / 2 - static_cast<int>(rank(rel, 0));
}

int os_h1(int n, const std::vector<std::set<int>>& flats, const std::vector<std::int64_t>& a, std::int64_t p) {
  bool zero = true;
  for (auto x : a)
    if ((p == 0 ? x : ((x % p) + p) % p) != 0) zero = false;
  if (zero) return n;
  const int pairs = n * (n - 1) / 2;
  auto rel = os_relations(n, flats);
  const std::size_t base = rank(rel, p);
  auto all = rel;
  for (int j = 0; j < n; ++j) {
    // a * e_j = sum_i a_i e_i e_j
    std::vector<Rational> row(static_cast<std::size_t>(pairs), 0);
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      const Rational coef(static_cast<long>(a[static_cast<std::size_t>(i)]));
      row[static_cast<std::size_t>(pair_index(n, i, j))] += i < j ? coef : Rational(-coef);
    }
    all.push_back(row);
  }
  const std::size_t mult_rank = rank(all, p) - base;
  return n - static_cast<int>(mult_rank) - 1;
}

std::size_t cyclotomic_rank(const std::vector<std::vector<arrtop::CycloPoly>>& m, int r) {
  if (m.empty()) return 0;
  const auto phi = arrtop::cyclotomic_polynomial(r);
  const std::size_t d = phi.size() - 1;
  // Multiplication by x^k on the basis 1, x, ..., x^{d-1}.
  auto times_x = [&](std::vector<Rational> v) {
    std::vector<Rational> out(d, 0);
    for (std::size_t i = 0; i + 1 < d; ++i) out[i + 1] = v[i];
    const Rational top = v[d - 1];
    for (std::size_t i = 0; i < d; ++i) out[i] -= top * Rational(static_cast<long>(phi[i]));
    return out;
  };
  std::vector<std::vector<Rational>> big;
  for (const auto& row : m) {
    std::vector<std::vector<Rational>> block(d, std::vector<Rational>(row.size() * d, 0));
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::vector<Rational> v(d, 0);
      for (std::size_t i = 0; i < d; ++i) v[i] = Rational(static_cast<long>(row[c].coeffs[i]));
      // Row t of the block: x^t * entry.
      for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t i = 0; i < d; ++i) block[t][c * d + i] = v[i];
        v = times_x(v);
      }
    }
    for (auto& b : block) big.push_back(std::move(b));
  }
  const std::size_t total = rank(big, 0);
  if (total % d != 0) throw std::logic_error("regular representation rank not divisible by phi(r)");
  return total / d;
}

namespace {

Integer det(std::vector<std::vector<Integer>> m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  Integer result = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    const Integer term = m[0][c] * det(minor);
    result += c % 2 ? Integer(-term) : term;
  }
  return result;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (cur.size() == k) {
    f(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, f);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Integer> invariant_factors(const std::vector<std::vector<Integer>>& m) {
  if (m.empty()) return {};
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<Integer> dk{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Integer g = 0;
    std::vector<std::size_t> rs, cs;
    subsets(rows, k, 0, rs, [&](const std::vector<std::size_t>& ri) {
      subsets(cols, k, 0, cs, [&](const std::vector<std::size_t>& ci) {
        std::vector<std::vector<Integer>> sub;
        for (auto i : ri) {
          std::vector<Integer> row;
          for (auto j : ci) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        Integer d = det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    dk.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < dk.size(); ++k) out.push_back(dk[k] / dk[k - 1]);
  return out;
}

int graph_b1(int n, const std::vector<std::set<int>>& points) {
  const int v = n + static_cast<int>(points.size());
  std::vector<std::vector<Rational>> inc;
  int e = 0;
  for (std::size_t p = 0; p < points.size(); ++p)
    for (int h : points[p]) {
      std::vector<Rational> row(static_cast<std::size_t>(v), 0);
      row[static_cast<std::size_t>(h)] = 1;
      row[static_cast<std::size_t>(n) + p] = 1;
      inc.push_back(row);
      ++e;
    }
  return e - static_cast<int>(rank(inc, 2));
}

std::vector<Integer> boundary_polynomial(int n, const std::vector<std::set<int>>& points) {
  std::vector<Integer> acc{1};
  auto times = [&](const std::vector<Integer>& f) {
    std::vector<Integer> out(acc.size() + f.size() - 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += acc[i] * f[j];
    acc = out;
  };
  for (const auto& p : points) {
    const int m = static_cast<int>(p.size());
    times({-1, 1});
    const int g = std::gcd(m, n);
    std::vector<Integer> tg(static_cast<std::size_t>(g) + 1, 0);
    tg[0] = -1;
    tg[static_cast<std::size_t>(g)] = 1;
    for (int i = 0; i < m - 2; ++i) times(tg);
  }
  return acc;
}

std::set<MultinetKey> brute_multinets(int n, const std::vector<std::set<int>>& points, int k, int max_weight) {
  std::set<MultinetKey> out;
  // point containing each pair
  std::vector<std::vector<int>> meet(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (std::size_t p = 0; p < points.size(); ++p)
    for (int a : points[p])
      for (int b : points[p])
        if (a != b) meet[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(p);

  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> partitions = [&](int h, int used) {
    if (h == n) {
      if (used != k) return;
      // base locus: points whose lines are not all one color
      std::vector<char> base(points.size(), 0);
      for (std::size_t p = 0; p < points.size(); ++p) {
        std::set<int> cs;
        for (int l : points[p]) cs.insert(color[static_cast<std::size_t>(l)]);
        base[p] = cs.size() > 1;
        if (cs.size() > 1 && static_cast<int>(cs.size()) != k) return;  // meets every class
      }
      // connectivity of each class off the base locus
      for (int c = 0; c < k; ++c) {
        std::vector<int> ls;
        for (int l = 0; l < n; ++l)
          if (color[static_cast<std::size_t>(l)] == c) ls.push_back(l);
        std::set<int> reach{ls[0]};
        std::vector<int> stack{ls[0]};
        while (!stack.empty()) {
          const int x = stack.back();
          stack.pop_back();
          for (int y : ls)
            if (!reach.count(y) && !base[static_cast<std::size_t>(meet[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])]) {
              reach.insert(y);
              stack.push_back(y);
            }
        }
        if (reach.size() != ls.size()) return;
      }
      std::vector<int> mult(static_cast<std::size_t>(n), 1);
      std::function<void(int)> weights = [&](int l) {
        if (l == n) {
          int g = 0;
          for (int x : mult) g = std::gcd(g, x);
          if (g != 1) return;
          std::vector<int> sums(static_cast<std::size_t>(k), 0);
          for (int x = 0; x < n; ++x) sums[static_cast<std::size_t>(color[static_cast<std::size_t>(x)])] += mult[static_cast<std::size_t>(x)];
          for (int s : sums)
            if (s != sums[0]) return;
          for (std::size_t p = 0; p < points.size(); ++p) {
            if (!base[p]) continue;
            std::vector<int> nx(static_cast<std::size_t>(k), 0);
            for (int x : points[p]) nx[static_cast<std::size_t>(color[static_cast<std::size_t>(x)])] += mult[static_cast<std::size_t>(x)];
            for (int v : nx)
              if (v != nx[0]) return;
          }
          std::vector<std::vector<int>> classes(static_cast<std::size_t>(k));
          for (int x = 0; x < n; ++x) classes[static_cast<std::size_t>(color[static_cast<std::size_t>(x)])].push_back(x);
          std::sort(classes.begin(), classes.end());
          out.insert({classes, mult});
          return;
        }
        for (int m = 1; m <= max_weight; ++m) {
          mult[static_cast<std::size_t>(l)] = m;
          weights(l + 1);
        }
        mult[static_cast<std::size_t>(l)] = 1;
      };
      weights(0);
      return;
    }
    for (int c = 0; c <= std::min(used, k - 1); ++c) {
      color[static_cast<std::size_t>(h)] = c;
      partitions(h + 1, std::max(used, c + 1));
    }
  };
  partitions(0, 0);
  return out;
}

namespace {

/// dim H_1(G; C_rho) for rho: generator g -> zeta_R^{a_g}, by Fox calculus and
/// the regular-representation rank; the trivial character gives b_1.
int twisted_dim(const arrtop::GroupPresentation& pres, const std::vector<std::int64_t>& a, int R) {
  const int g = pres.num_generators();
  bool trivial = true;
  for (auto x : a)
    if (x % R != 0) trivial = false;
  if (trivial) {
    std::vector<std::vector<Rational>> m;
    for (const auto& rel : pres.relators) {
      std::vector<Rational> row(static_cast<std::size_t>(g), 0);
      for (int l : rel) row[static_cast<std::size_t>(arrtop::generator_of(l))] += l > 0 ? 1 : -1;
      m.push_back(row);
    }
    return g - static_cast<int>(rank(m, 0));
  }
  std::vector<std::vector<arrtop::CycloPoly>> jac;
  for (const auto& rel : pres.relators) {
    std::vector<std::vector<std::int64_t>> counts(static_cast<std::size_t>(g), std::vector<std::int64_t>(static_cast<std::size_t>(R), 0));
    std::int64_t pre = 0;
    for (int l : rel) {
      const int j = arrtop::generator_of(l);
      if (l > 0) {
        counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(((pre % R) + R) % R)] += 1;
        pre += a[static_cast<std::size_t>(j)];
      } else {
        pre -= a[static_cast<std::size_t>(j)];
        counts[static_cast<std::size_t>(j)][static_cast<std::size_t>(((pre % R) + R) % R)] -= 1;
      }
    }
    std::vector<arrtop::CycloPoly> row;
    for (const auto& c : counts) row.push_back(arrtop::CycloPoly::from_group_ring(R, c));
    jac.push_back(row);
  }
  return g - 1 - static_cast<int>(cyclotomic_rank(jac, R));
}

}  // namespace

std::vector<int> shapiro_order3_dims(const arrtop::GroupPresentation& pi1_u) {
  const int n = pi1_u.num_generators();
  const int R = 3 * n;
  std::set<std::vector<std::int64_t>> classes;
  std::vector<std::int64_t> b(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    std::function<void(int)> rec = [&](int h) {
      if (h == n) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(n));
        std::int64_t sum = 0;
        for (int x = 0; x < n; ++x) sum += a[static_cast<std::size_t>(x)] = (j + n * b[static_cast<std::size_t>(x)]) % R;
        if (sum % R != 0) return;
        std::vector<std::int64_t> best = a;
        for (int t = 1; t < n; ++t) {
          std::vector<std::int64_t> shifted = a;
          for (auto& v : shifted) v = (v + 3 * t) % R;
          best = std::min(best, shifted);
        }
        classes.insert(best);
        return;
      }
      for (int v = 0; v < 3; ++v) {
        b[static_cast<std::size_t>(h)] = v;
        rec(h + 1);
      }
    };
    rec(0);
  }
  std::vector<int> dims;
  for (const auto& a : classes) {
    int total = 0;
    for (int t = 0; t < n; ++t) {
      std::vector<std::int64_t> shifted = a;
      for (auto& v : shifted) v = (v + 3 * t) % R;
      total += twisted_dim(pi1_u, shifted, R);
    }
    dims.push_back(total);
  }
  return dims;
}

std::int64_t count_at_least(const std::vector<int>& dims, int s) {
  return std::count_if(dims.begin(), dims.end(), [s](int d) { return d >= s; });
}

}  // namespace oracle
