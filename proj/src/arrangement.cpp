#include "arrtop/arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "arrtop/errors.hpp"
#include "arrtop/numeric.hpp"

namespace arrtop {

ProjPoint normalize_triple(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a == 0 && b == 0 && c == 0) throw ValidationError("zero triple has no projective meaning");
  std::int64_t g = std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c));
  a /= g;
  b /= g;
  c /= g;
  const std::int64_t lead = a != 0 ? a : (b != 0 ? b : c);
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}

ProjLine ProjLine::make(std::int64_t a, std::int64_t b, std::int64_t c) {
  for (auto v : {a, b, c})
    if (std::llabs(v) > kMaxCoefficient)
      throw ValidationError("line coefficient " + std::to_string(v) + " exceeds the supported range");
  return ProjLine{normalize_triple(a, b, c)};
}

bool ProjLine::contains(const ProjPoint& p) const {
  const __int128 s = static_cast<__int128>(coeffs[0]) * p[0] + static_cast<__int128>(coeffs[1]) * p[1] +
                     static_cast<__int128>(coeffs[2]) * p[2];
  return s == 0;
}

std::string ProjLine::to_string() const {
  std::ostringstream os;
  os << '[' << coeffs[0] << ',' << coeffs[1] << ',' << coeffs[2] << ']';
  return os.str();
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  const auto& u = l.coeffs;
  const auto& v = m.coeffs;
  // |coefficients| < 2^30, so each cross term is below 2^61.
  return normalize_triple(u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]);
}

Arrangement::Arrangement(std::string label, std::vector<ProjLine> lines)
    : label_(std::move(label)), lines_(std::move(lines)) {
  if (lines_.empty()) throw ValidationError("arrangement must contain at least one line");
  for (auto& l : lines_) l = ProjLine::make(l.coeffs[0], l.coeffs[1], l.coeffs[2]);
  std::map<ProjLine, int> seen;
  for (int i = 0; i < size(); ++i) {
    auto [it, fresh] = seen.emplace(lines_[static_cast<std::size_t>(i)], i);
    if (!fresh)
      throw ValidationError("duplicate line: indices " + std::to_string(it->second) + " and " + std::to_string(i) +
                            " both normalize to " + it->first.to_string());
  }
  // Essential iff the coefficient matrix has rank 3.
  essential_ = false;
  if (size() >= 3) {
    const ProjPoint p = meet(lines_[0], lines_[1]);
    for (int i = 2; i < size() && !essential_; ++i)
      if (!lines_[static_cast<std::size_t>(i)].contains(p)) essential_ = true;
  }
}

bool Flat2::contains_line(int h) const { return std::binary_search(lines.begin(), lines.end(), h); }

int IntersectionLattice::flat_of(int h, int k) const {
  if (h < 0 || k < 0 || h >= n || k >= n || h == k)
    throw ArgumentError("flat_of: invalid line pair (" + std::to_string(h) + "," + std::to_string(k) + ")");
  return pair_table[static_cast<std::size_t>(h * n + k)];
}

std::vector<int> IntersectionLattice::flats_on_line(int h) const {
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(flats.size()); ++f)
    if (flats[static_cast<std::size_t>(f)].contains_line(h)) out.push_back(f);
  return out;
}

void IntersectionLattice::check_invariants() const {
  std::vector<int> cover(static_cast<std::size_t>(n * n), 0);
  long long pairs = 0;
  std::map<int, int> recount;
  for (const auto& f : flats) {
    if (f.multiplicity() < 2) throw ConsistencyError("flat with fewer than two lines");
    const long long q = f.multiplicity();
    pairs += q * (q - 1) / 2;
    ++recount[f.multiplicity()];
    for (std::size_t a = 0; a < f.lines.size(); ++a)
      for (std::size_t b = a + 1; b < f.lines.size(); ++b) ++cover[static_cast<std::size_t>(f.lines[a] * n + f.lines[b])];
  }
  for (int h = 0; h < n; ++h)
    for (int k = h + 1; k < n; ++k)
      if (cover[static_cast<std::size_t>(h * n + k)] != 1)
        throw ConsistencyError("line pair (" + std::to_string(h) + "," + std::to_string(k) + ") lies in " +
                               std::to_string(cover[static_cast<std::size_t>(h * n + k)]) + " flats");
  if (pairs != static_cast<long long>(n) * (n - 1) / 2) throw ConsistencyError("sum of C(|A_X|,2) differs from C(n,2)");
  if (recount != census) throw ConsistencyError("census does not match flats");
}

bool IntersectionLattice::all_double() const {
  return std::all_of(flats.begin(), flats.end(), [](const Flat2& f) { return f.multiplicity() == 2; });
}

bool IntersectionLattice::is_pencil() const { return n >= 2 && flats.size() == 1; }

namespace {

void finish_lattice(IntersectionLattice& lat) {
  lat.pair_table.assign(static_cast<std::size_t>(lat.n * lat.n), -1);
  lat.census.clear();
  for (int f = 0; f < static_cast<int>(lat.flats.size()); ++f) {
    const auto& lines = lat.flats[static_cast<std::size_t>(f)].lines;
    ++lat.census[static_cast<int>(lines.size())];
    for (int h : lines)
      for (int k : lines)
        if (h != k) lat.pair_table[static_cast<std::size_t>(h * lat.n + k)] = f;
  }
}

}  // namespace

IntersectionLattice build_lattice(const Arrangement& arr) {
  IntersectionLattice lat;
  lat.n = arr.size();
  std::map<ProjPoint, std::vector<int>> points;
  for (int h = 0; h < lat.n; ++h)
    for (int k = h + 1; k < lat.n; ++k) points.try_emplace(meet(arr.line(h), arr.line(k)));
  for (auto& [p, lines] : points) {
    for (int h = 0; h < lat.n; ++h)
      if (arr.line(h).contains(p)) lines.push_back(h);
    lat.flats.push_back(Flat2{p, lines});
  }
  finish_lattice(lat);
  return lat;
}

IntersectionLattice lattice_from_incidence(int n, std::vector<std::vector<int>> flats) {
  if (n < 1) throw ValidationError("incidence data needs n >= 1");
  std::vector<int> used(static_cast<std::size_t>(n * n), -1);
  for (std::size_t f = 0; f < flats.size(); ++f) {
    auto& lines = flats[f];
    std::sort(lines.begin(), lines.end());
    if (std::adjacent_find(lines.begin(), lines.end()) != lines.end())
      throw ValidationError("flat " + std::to_string(f) + " repeats a line");
    if (lines.size() < 2) throw ValidationError("flat " + std::to_string(f) + " has fewer than two lines");
    for (int h : lines)
      if (h < 0 || h >= n) throw ValidationError("flat " + std::to_string(f) + " references line " + std::to_string(h));
    for (std::size_t a = 0; a < lines.size(); ++a)
      for (std::size_t b = a + 1; b < lines.size(); ++b) {
        auto& slot = used[static_cast<std::size_t>(lines[a] * n + lines[b])];
        if (slot >= 0)
          throw ValidationError("lines " + std::to_string(lines[a]) + " and " + std::to_string(lines[b]) +
                                " appear together in flats " + std::to_string(slot) + " and " + std::to_string(f));
        slot = static_cast<int>(f);
      }
  }
  for (int h = 0; h < n; ++h)
    for (int k = h + 1; k < n; ++k)
      if (used[static_cast<std::size_t>(h * n + k)] < 0) flats.push_back({h, k});
  std::sort(flats.begin(), flats.end());
  IntersectionLattice lat;
  lat.n = n;
  for (auto& lines : flats) lat.flats.push_back(Flat2{std::nullopt, std::move(lines)});
  finish_lattice(lat);
  return lat;
}

MultiplicityReport multiplicity_predicates(const IntersectionLattice& lat, int r) {
  if (r < 2) throw ArgumentError("multiplicity_predicates: r must be at least 2, got " + std::to_string(r));
  MultiplicityReport rep;
  rep.r = r;
  rep.no_flats_of_multiplicity_3r = true;
  rep.only_double_and_triple = true;
  for (int f = 0; f < static_cast<int>(lat.flats.size()); ++f) {
    const int q = lat.flats[static_cast<std::size_t>(f)].multiplicity();
    if (q >= 3 && q % r == 0) rep.divisible_flats.push_back(f);
    if (q % 3 == 0 && q > 3) rep.no_flats_of_multiplicity_3r = false;
    if (q != 2 && q != 3) rep.only_double_and_triple = false;
  }
  rep.divisible_flat_exists = !rep.divisible_flats.empty();
  return rep;
}

CollinearReport collinear_triples_report(const IntersectionLattice& lat) {
  CollinearReport rep;
  rep.high_flats_on_line.resize(static_cast<std::size_t>(lat.n));
  int high = 0;
  for (int f = 0; f < static_cast<int>(lat.flats.size()); ++f) {
    const auto& flat = lat.flats[static_cast<std::size_t>(f)];
    if (flat.multiplicity() < 3) continue;
    ++high;
    for (int h : flat.lines) rep.high_flats_on_line[static_cast<std::size_t>(h)].push_back(f);
  }
  for (int h = 0; h < lat.n; ++h)
    if (static_cast<int>(rep.high_flats_on_line[static_cast<std::size_t>(h)].size()) == high && high > 0)
      rep.common_lines.push_back(h);
  rep.common_line_exists = !rep.common_lines.empty();
  return rep;
}

}  // namespace arrtop
