#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arrtop/arrangement.hpp"

namespace arrtop {

/// `Realized` input carries rational coordinates and supports the full
/// pipeline; `Incidence` input carries only the L_2 incidence data.
enum class InputTier { Realized, Incidence };

struct ArrangementInput {
  std::string label;
  InputTier tier = InputTier::Realized;
  std::optional<Arrangement> arrangement;  ///< set iff tier == Realized
  IntersectionLattice lattice;

  int size() const { return lattice.n; }
  bool realized() const { return tier == InputTier::Realized; }

  static ArrangementInput from_arrangement(Arrangement arr);
  static ArrangementInput from_incidence(std::string label, int n, std::vector<std::vector<int>> flats);
};

/// Parses either accepted form:
///  - JSON: {"label": str, "lines": [[a,b,c], ...]} or, for the incidence
///    tier, {"label": str, "tier": "incidence", "n": int, "flats": [[i,j,...], ...]}
///    (flats of multiplicity >= 3; remaining pairs are double points);
///  - text: one whitespace-separated integer triple per line, '#' comments,
///    an optional "# label: name" comment.
/// Errors are ValidationError with "source:line:column: message" prefixes.
ArrangementInput parse_arrangement(std::string_view text, const std::string& source = "<input>");

ArrangementInput load_arrangement(const std::string& path);

/// Canonical JSON text of a realized arrangement (the JSON input form).
std::string arrangement_to_json(const Arrangement& arr);

}  // namespace arrtop
