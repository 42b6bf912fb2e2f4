#include "arrtop/pi1.hpp"

#include <algorithm>
#include <set>

#include "arrtop/errors.hpp"

namespace arrtop {

namespace {

using Mat3 = std::array<Integer, 9>;

Mat3 to_mat(const Chart& c) {
  Mat3 m;
  for (std::size_t i = 0; i < 9; ++i) m[i] = Integer(static_cast<long>(c.matrix[i]));
  return m;
}

Integer det(const Mat3& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6]);
}

/// Transpose of the adjugate: maps line coefficients to the new chart.
Mat3 cofactor(const Mat3& m) {
  return {m[4] * m[8] - m[5] * m[7], m[5] * m[6] - m[3] * m[8], m[3] * m[7] - m[4] * m[6],
          m[2] * m[7] - m[1] * m[8], m[0] * m[8] - m[2] * m[6], m[1] * m[6] - m[0] * m[7],
          m[1] * m[5] - m[2] * m[4], m[2] * m[3] - m[0] * m[5], m[0] * m[4] - m[1] * m[3]};
}

std::array<Integer, 3> apply(const Mat3& m, const std::array<std::int64_t, 3>& v) {
  std::array<Integer, 3> out;
  for (std::size_t i = 0; i < 3; ++i)
    out[i] = m[3 * i] * Integer(static_cast<long>(v[0])) + m[3 * i + 1] * Integer(static_cast<long>(v[1])) +
             m[3 * i + 2] * Integer(static_cast<long>(v[2]));
  return out;
}

/// Reason the chart is unusable, or empty when it works.
std::string chart_problem(const Arrangement& arr, const IntersectionLattice& lat, const Chart& chart) {
  const Mat3 m = to_mat(chart);
  if (sgn(det(m)) == 0) return "chart matrix is singular";
  const Mat3 cof = cofactor(m);
  for (int h = 0; h < arr.size(); ++h) {
    const auto l = apply(cof, arr.line(h).coeffs);
    if (sgn(l[1]) == 0) return "line " + std::to_string(h) + " is vertical or at infinity in this chart";
  }
  std::set<Rational> xs;
  for (int f = 0; f < static_cast<int>(lat.flats.size()); ++f) {
    const auto p = apply(m, *lat.flats[static_cast<std::size_t>(f)].point);
    if (sgn(p[2]) == 0) return "flat " + std::to_string(f) + " lies on the line at infinity";
    Rational x(p[0], p[2]);
    x.canonicalize();
    if (!xs.insert(x).second) return "two flats share the x-coordinate " + x.get_str();
  }
  return {};
}

/// 0, 1, -1, 2, -2, ...
std::int64_t zigzag(int i) { return i % 2 ? (i + 1) / 2 : -(i / 2); }

}  // namespace

WiringDiagram choose_chart_and_wire(const Arrangement& arr, const IntersectionLattice& lat, std::optional<Chart> chart,
                                    int search_bound) {
  if (lat.n != arr.size()) throw ArgumentError("lattice does not belong to the arrangement");
  for (const auto& f : lat.flats)
    if (!f.point) throw ValidationError("wiring diagrams need a realized arrangement");
  if (chart) {
    if (auto why = chart_problem(arr, lat, *chart); !why.empty()) throw ValidationError("supplied chart unusable: " + why);
  } else {
    // Charts x' = x + a y, y' = y, z' = b x + c y + z, by growing max(|a|,|b|,|c|).
    for (int bound = 0; bound <= search_bound && !chart; ++bound)
      for (int i = 0; i <= 2 * bound && !chart; ++i)
        for (int j = 0; j <= 2 * bound && !chart; ++j)
          for (int k = 0; k <= 2 * bound && !chart; ++k) {
            const std::int64_t a = zigzag(i), b = zigzag(j), c = zigzag(k);
            if (std::max({std::llabs(a), std::llabs(b), std::llabs(c)}) != bound) continue;
            Chart cand{{1, a, 0, 0, 1, 0, b, c, 1}};
            if (chart_problem(arr, lat, cand).empty()) chart = cand;
          }
    if (!chart)
      throw BudgetError("no usable chart found with coefficients up to " + std::to_string(search_bound) +
                        "; supply one with --chart");
  }

  WiringDiagram w;
  w.chart = *chart;
  const Mat3 m = to_mat(w.chart);
  const Mat3 cof = cofactor(m);
  for (int h = 0; h < arr.size(); ++h) {
    const auto l = apply(cof, arr.line(h).coeffs);
    Rational s(-l[0], l[1]), t(-l[2], l[1]);
    s.canonicalize();
    t.canonicalize();
    w.slopes.push_back(s);
    w.intercepts.push_back(t);
  }
  for (int f = 0; f < static_cast<int>(lat.flats.size()); ++f) {
    const auto p = apply(m, *lat.flats[static_cast<std::size_t>(f)].point);
    WiringEvent ev;
    ev.x = Rational(p[0], p[2]);
    ev.y = Rational(p[1], p[2]);
    ev.x.canonicalize();
    ev.y.canonicalize();
    ev.flat = f;
    w.events.push_back(std::move(ev));
  }
  std::sort(w.events.begin(), w.events.end(), [](const WiringEvent& a, const WiringEvent& b) { return a.x < b.x; });

  auto order_at = [&](const Rational& x) {
    std::vector<int> order(static_cast<std::size_t>(arr.size()));
    for (int h = 0; h < arr.size(); ++h) order[static_cast<std::size_t>(h)] = h;
    std::vector<Rational> y(order.size());
    for (int h = 0; h < arr.size(); ++h)
      y[static_cast<std::size_t>(h)] = w.slopes[static_cast<std::size_t>(h)] * x + w.intercepts[static_cast<std::size_t>(h)];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return y[static_cast<std::size_t>(a)] < y[static_cast<std::size_t>(b)];
    });
    return order;
  };
  const Rational left = w.events.empty() ? Rational(0) : Rational(w.events.front().x - 1);
  const Rational right = w.events.empty() ? Rational(0) : Rational(w.events.back().x + 1);
  w.initial_order = order_at(left);
  std::vector<int> order = w.initial_order;
  for (auto& ev : w.events) {
    const auto& lines = lat.flats[static_cast<std::size_t>(ev.flat)].lines;
    std::size_t lo = order.size(), hi = 0;
    for (std::size_t p = 0; p < order.size(); ++p)
      if (std::binary_search(lines.begin(), lines.end(), order[p])) {
        lo = std::min(lo, p);
        hi = std::max(hi, p);
      }
    if (hi - lo + 1 != lines.size())
      throw ConsistencyError("wires of flat " + std::to_string(ev.flat) + " are not adjacent before their crossing");
    ev.first_position = lo;
    ev.wires.assign(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    std::reverse(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  }
  if (order != order_at(right)) throw ConsistencyError("wiring diagram does not reproduce the final wire order");
  return w;
}

int event_relator_count(const WiringDiagram& w) {
  int total = 0;
  for (const auto& ev : w.events) total += static_cast<int>(ev.wires.size()) - 1;
  return total;
}

GroupPresentation braid_presentation(const WiringDiagram& w) {
  const int n = w.num_wires();
  GroupPresentation pres;
  for (int h = 0; h < n; ++h) {
    pres.generator_tags.push_back("x" + std::to_string(h));
    pres.meridian_of.push_back(h);
  }
  // words[p]: meridian of the wire currently at position p (bottom = 0), as a
  // word in the base-fiber generators.
  std::vector<Word> words;
  for (int h : w.initial_order) words.push_back(Word{letter(h)});

  for (const auto& ev : w.events) {
    const std::size_t lo = ev.first_position;
    const std::size_t hi = lo + ev.wires.size() - 1;
    Word loop;  // w_hi ... w_lo, the loop around the whole cluster
    for (std::size_t p = hi + 1; p-- > lo;) loop = concat(loop, words[p]);
    const Word loop_inv = inverse(loop);
    for (std::size_t p = lo; p < hi; ++p)
      pres.relators.push_back(concat(concat(words[p], loop), concat(inverse(words[p]), loop_inv)));
    // Half twist: bubble the bottom wire to the top, repeatedly.
    for (std::size_t pass = 0; pass + lo < hi; ++pass)
      for (std::size_t q = lo; q + pass < hi; ++q) {
        Word lower = concat(concat(inverse(words[q]), words[q + 1]), words[q]);
        Word upper = words[q];
        words[q] = std::move(lower);
        words[q + 1] = std::move(upper);
      }
  }
  Word total;
  for (std::size_t p = w.initial_order.size(); p-- > 0;) total.push_back(letter(w.initial_order[p]));
  pres.relators.push_back(total);

  const auto ab = abelianize(pres);
  if (ab.free_rank != static_cast<std::size_t>(n - 1) || !ab.torsion_free())
    throw ConsistencyError("braid presentation has abelianization of rank " + std::to_string(ab.free_rank) +
                           " with " + std::to_string(ab.torsion.size()) + " torsion factors; expected Z^" +
                           std::to_string(n - 1));
  return pres;
}

std::vector<std::int64_t> diagonal_hom(const GroupPresentation& pres) {
  std::vector<std::int64_t> hom;
  for (const auto& m : pres.meridian_of) {
    if (!m) throw ArgumentError("diagonal homomorphism needs a presentation on meridians");
    hom.push_back(1);
  }
  return hom;
}

}  // namespace arrtop
