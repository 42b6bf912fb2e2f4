#include "arrtop/osalgebra.hpp"

#include <algorithm>

#include "arrtop/errors.hpp"
#include "arrtop/linalg.hpp"

namespace arrtop {

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (!is_prime(p)) throw ArgumentError("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

std::string FieldSpec::to_string() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

bool AomotoClass::is_zero() const {
  for (const auto& c : coords) {
    if (field.is_rational()) {
      if (sgn(c) != 0) return false;
    } else {
      Integer num = c.get_num() % Integer(field.characteristic());
      if (sgn(num) != 0) return false;
    }
  }
  return true;
}

AomotoClass AomotoClass::diagonal(FieldSpec field, int n) {
  return AomotoClass{field, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))};
}

AomotoClass AomotoClass::from_integers(FieldSpec field, const std::vector<std::int64_t>& v) {
  AomotoClass a{field, {}};
  for (auto x : v) a.coords.emplace_back(field.is_rational() ? x : mod(x, field.characteristic()));
  return a;
}

OSTruncation::OSTruncation(const IntersectionLattice& lat, FieldSpec field) : field_(field), n_(lat.n) {
  pair_flat_ = lat.pair_table;
  for (const auto& f : lat.flats) {
    flat_offset_.push_back(dim2_);
    dim2_ += f.multiplicity() - 1;
    flat_lines_.push_back(f.lines);
  }
}

std::vector<std::pair<int, int>> OSTruncation::cup(int h, int k) const {
  if (h == k) return {};  // alternating, also in characteristic 2
  int sign = 1;
  if (h > k) {
    std::swap(h, k);
    sign = -1;
  }
  const int f = pair_flat_[static_cast<std::size_t>(h * n_ + k)];
  const auto& lines = flat_lines_[static_cast<std::size_t>(f)];
  const int i = static_cast<int>(std::lower_bound(lines.begin(), lines.end(), h) - lines.begin());
  const int j = static_cast<int>(std::lower_bound(lines.begin(), lines.end(), k) - lines.begin());
  const int base = flat_offset_[static_cast<std::size_t>(f)] - 1;  // b_i sits at base + i for i >= 1
  std::vector<std::pair<int, int>> out{{base + j, sign}};
  if (i > 0) out.emplace_back(base + i, -sign);
  return out;
}

RationalMatrix OSTruncation::multiplication_matrix(const AomotoClass& a) const {
  RationalMatrix m(static_cast<std::size_t>(dim2_), std::vector<Rational>(static_cast<std::size_t>(n_), 0));
  for (int k = 0; k < n_; ++k)
    for (int h = 0; h < n_; ++h) {
      const Rational& ah = a.coords[static_cast<std::size_t>(h)];
      if (h == k || sgn(ah) == 0) continue;
      for (auto [row, s] : cup(h, k)) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] += s * ah;
    }
  return m;
}

std::size_t OSTruncation::rank_of_multiplication(const AomotoClass& a) const {
  if (!(a.field == field_))
    throw ArgumentError("class over " + a.field.to_string() + " used with an algebra over " + field_.to_string());
  if (static_cast<int>(a.coords.size()) != n_)
    throw ArgumentError("class has " + std::to_string(a.coords.size()) + " coordinates, expected " + std::to_string(n_));
  auto m = multiplication_matrix(a);
  if (field_.is_rational()) return rank_rational(std::move(m));
  const std::int64_t p = field_.characteristic();
  ModMatrix mm(m.size(), std::vector<std::int64_t>(static_cast<std::size_t>(n_), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (m[i][j].get_den() != 1) throw ArgumentError("non-integral coordinate in a class over " + field_.to_string());
      mm[i][j] = mod(to_int64(m[i][j].get_num() % Integer(p)), p);
    }
  return rank_mod_p(std::move(mm), p);
}

AomotoH1 aomoto_h1_dim(const OSTruncation& os, const AomotoClass& a) {
  const std::size_t rank = os.rank_of_multiplication(a);
  if (a.is_zero()) return AomotoH1{os.dim1(), true};
  return AomotoH1{os.dim1() - static_cast<int>(rank) - 1, false};
}

bool resonance_membership(const OSTruncation& os, const AomotoClass& a, int s) {
  if (s < 1) throw ArgumentError("resonance depth s must be at least 1");
  return aomoto_h1_dim(os, a).dim >= s;
}

int beta_p(const IntersectionLattice& lat, std::int64_t p) {
  const OSTruncation os(lat, FieldSpec::prime(p));
  return aomoto_h1_dim(os, AomotoClass::diagonal(os.field(), lat.n)).dim;
}

}  // namespace arrtop
