#include "arrtop/cyclotomic.hpp"

#include <sstream>

#include "arrtop/errors.hpp"

namespace arrtop {

std::vector<std::int64_t> cyclotomic_polynomial(int r) {
  if (r < 1) throw ArgumentError("cyclotomic_polynomial: order must be positive");
  // Phi_r = (x^r - 1) / prod_{d | r, d < r} Phi_d, by exact long division.
  std::vector<std::int64_t> num(static_cast<std::size_t>(r) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(r)] = 1;
  for (int d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    const auto den = cyclotomic_polynomial(d);
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dn, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dn; --i) {
      const std::int64_t q = num[i];  // den is monic
      quot[i - dn] = q;
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= q * den[j];
      if (i == dn) break;
    }
    num = std::move(quot);
  }
  return num;
}

bool CycloPoly::is_zero() const {
  for (auto c : coeffs)
    if (c != 0) return false;
  return true;
}

std::string CycloPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!first) os << (coeffs[k] > 0 ? " + " : " - ");
    else if (coeffs[k] < 0) os << '-';
    const auto mag = coeffs[k] < 0 ? -coeffs[k] : coeffs[k];
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << "z";
    if (k >= 2) os << '^' << k;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

CycloPoly CycloPoly::from_group_ring(int r, std::span<const std::int64_t> counts) {
  const auto phi = cyclotomic_polynomial(r);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> work(counts.begin(), counts.end());
  for (std::size_t i = work.size(); i-- > deg;) {
    const std::int64_t q = work[i];
    if (q == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) work[i - deg + j] -= q * phi[j];
  }
  work.resize(deg, 0);
  return CycloPoly{r, std::move(work)};
}

CycloPoly CycloPoly::zeta_power(int r, std::int64_t k) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(r), 0);
  counts[static_cast<std::size_t>(mod(k, r))] = 1;
  return from_group_ring(r, counts);
}

CyclotomicField::CyclotomicField(int r) : order_(r) {
  for (auto c : cyclotomic_polynomial(r)) modulus_.emplace_back(c);
}

CyclotomicField::Element CyclotomicField::one() const {
  Element e = zero();
  e[0] = 1;
  return e;
}

CyclotomicField::Element CyclotomicField::embed(const CycloPoly& p) const {
  if (p.order != order_ || static_cast<int>(p.coeffs.size()) != degree())
    throw ArgumentError("element of Z[x]/Phi_" + std::to_string(p.order) + " used in Q(zeta_" + std::to_string(order_) + ")");
  Element e;
  e.reserve(p.coeffs.size());
  for (auto c : p.coeffs) e.emplace_back(c);
  return e;
}

bool CyclotomicField::is_zero(const Element& a) {
  for (const auto& c : a)
    if (sgn(c) != 0) return false;
  return true;
}

CyclotomicField::Element CyclotomicField::add(const Element& a, const Element& b) const {
  Element c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

CyclotomicField::Element CyclotomicField::sub(const Element& a, const Element& b) const {
  Element c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

CyclotomicField::Element CyclotomicField::reduce(std::vector<Rational> poly) const {
  const std::size_t deg = static_cast<std::size_t>(degree());
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0) continue;
    const Rational q = poly[i];
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= q * modulus_[j];
  }
  poly.resize(deg, 0);
  return poly;
}

CyclotomicField::Element CyclotomicField::mul(const Element& a, const Element& b) const {
  std::vector<Rational> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) prod[i + j] += a[i] * b[j];
  }
  return reduce(std::move(prod));
}

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

/// Division with remainder in Q[x]; b must be nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const Rational c = a[i] / b.back();
    q[i - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= c * b[j];
    if (i == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly poly_sub_mul(const Poly& a, const Poly& q, const Poly& b) {
  Poly out = a;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (out.size() <= i + j) out.resize(i + j + 1, 0);
      out[i + j] -= q[i] * b[j];
    }
  trim(out);
  return out;
}

}  // namespace

CyclotomicField::Element CyclotomicField::inverse(const Element& a) const {
  // Invariant: s_i * a == r_i (mod Phi_r).
  Poly r0 = modulus_, r1 = a;
  Poly s0{}, s1{Rational(1)};
  trim(r1);
  if (r1.empty()) throw ConsistencyError("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
  while (r1.size() > 1) {
    auto [q, rem] = divmod(r0, r1);
    Poly s2 = poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw ConsistencyError("zero divisor modulo Phi_" + std::to_string(order_));
  }
  const Rational c = r1[0];
  for (auto& v : s1) v /= c;
  return reduce(std::move(s1));
}

std::size_t rank_over_cyclotomic(const std::vector<std::vector<CycloPoly>>& m, int r) {
  if (m.empty()) return 0;
  const CyclotomicField field(r);
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::vector<std::vector<CyclotomicField::Element>> a(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    a[i].reserve(cols);
    for (const auto& e : m[i]) a[i].push_back(field.embed(e));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && CyclotomicField::is_zero(a[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const auto inv = field.inverse(a[rank][c]);
    for (std::size_t j = c; j < cols; ++j)
      if (!CyclotomicField::is_zero(a[rank][j])) a[rank][j] = field.mul(a[rank][j], inv);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (CyclotomicField::is_zero(a[i][c])) continue;
      const auto f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!CyclotomicField::is_zero(a[rank][j])) a[i][j] = field.sub(a[i][j], field.mul(f, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace arrtop

namespace arrtop {

namespace {

std::string poly_to_string(const std::vector<std::int64_t>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const auto mag = c[k] < 0 ? -c[k] : c[k];
    if (first) {
      if (c[k] < 0) os << '-';
    } else {
      os << (c[k] < 0 ? '-' : '+');
    }
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

}  // namespace

void CharPolyFactorization::multiply_cyclotomic(int r, int e) {
  if (r < 1 || e < 0) throw ArgumentError("cyclotomic factor needs r >= 1 and a non-negative exponent");
  if (e > 0) exponents[r] += e;
}

void CharPolyFactorization::multiply_t_power_minus_one(int g, int e) {
  for (auto d : divisors(g)) multiply_cyclotomic(static_cast<int>(d), e);
}

int CharPolyFactorization::exponent(int r) const {
  const auto it = exponents.find(r);
  return it == exponents.end() ? 0 : it->second;
}

int CharPolyFactorization::degree() const {
  int total = 0;
  for (auto [r, e] : exponents) total += static_cast<int>(euler_phi(r)) * e;
  return total;
}

std::vector<Integer> CharPolyFactorization::expand() const {
  std::vector<Integer> acc{1};
  for (auto [r, e] : exponents) {
    const auto phi = cyclotomic_polynomial(r);
    for (int i = 0; i < e; ++i) {
      std::vector<Integer> next(acc.size() + phi.size() - 1, 0);
      for (std::size_t a = 0; a < acc.size(); ++a)
        for (std::size_t b = 0; b < phi.size(); ++b) next[a + b] += acc[a] * phi[b];
      acc = std::move(next);
    }
  }
  return acc;
}

std::string CharPolyFactorization::to_string() const {
  if (exponents.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto [r, e] : exponents) {
    if (!first) os << ' ';
    first = false;
    os << '(' << poly_to_string(cyclotomic_polynomial(r)) << ')';
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace arrtop
