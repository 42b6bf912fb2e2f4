#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/group.hpp"
#include "arrtop/numeric.hpp"

namespace arrtop {

/// A projective change of coordinates p' = M p (row-major 3x3, integer).
/// The new line at infinity is z' = 0 and the vertical direction is (0:1:0).
struct Chart {
  std::array<std::int64_t, 9> matrix{1, 0, 0, 0, 1, 0, 0, 0, 1};
};

struct WiringEvent {
  Rational x;
  Rational y;
  int flat = -1;              ///< index into the lattice
  std::size_t first_position = 0;  ///< lowest wire position taking part
  std::vector<int> wires;     ///< line indices, bottom to top just before x
};

/// Real picture of the arrangement in the chart: line i is the graph of
/// y = slope[i] * x + intercept[i]. Events are sorted by x.
struct WiringDiagram {
  Chart chart;
  std::vector<Rational> slopes;
  std::vector<Rational> intercepts;
  std::vector<int> initial_order;  ///< line indices bottom to top left of all events
  std::vector<WiringEvent> events;

  int num_wires() const { return static_cast<int>(slopes.size()); }
};

/// Searches a deterministic sequence of integer charts for one in which the
/// line at infinity misses every flat and every line of A, no line is
/// vertical, and all flats have distinct x-coordinates. A supplied chart is
/// validated instead. Throws BudgetError when the search is exhausted and
/// ValidationError for an unusable supplied chart.
WiringDiagram choose_chart_and_wire(const Arrangement& arr, const IntersectionLattice& lat,
                                    std::optional<Chart> chart = std::nullopt, int search_bound = 6);

/// Presentation of pi_1(U) for U the projective complement. Generator i is
/// the meridian of line i. Each event of multiplicity m contributes m - 1
/// relators [w_t, w_top ... w_bottom] on the current meridian words; the last
/// relator is the product of all meridians (the loop around the line at
/// infinity). Throws ConsistencyError if H_1 is not Z^{n-1}.
GroupPresentation braid_presentation(const WiringDiagram& w);

/// Number of relators coming from events, sum (m - 1); the projective
/// relator is the one extra relator after these.
int event_relator_count(const WiringDiagram& w);

/// The homomorphism sending every meridian to 1 (mod n).
std::vector<std::int64_t> diagonal_hom(const GroupPresentation& pres);

}  // namespace arrtop
