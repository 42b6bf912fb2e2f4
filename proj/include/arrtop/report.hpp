#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrtop/group.hpp"
#include "arrtop/io.hpp"
#include "arrtop/multinet.hpp"
#include "arrtop/pi1.hpp"

namespace arrtop {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class CharacterSpace { U, F };

struct ReportOptions {
  std::optional<Chart> chart;
  std::vector<std::int64_t> primes{2, 3};  ///< beta_p table
  MultinetSearchOptions multinets;
  int character_order = 3;
  std::vector<int> character_depths{1, 2};
  std::int64_t character_budget = 1000;  ///< characters examined per count
};

/// Lazily computed, cached results for one arrangement.
class Pipeline {
 public:
  explicit Pipeline(ArrangementInput input, ReportOptions options = {});

  const ArrangementInput& input() const { return input_; }
  const ReportOptions& options() const { return options_; }
  const IntersectionLattice& lattice() const { return input_.lattice; }
  int n() const { return input_.size(); }

  /// Throws ValidationError for incidence-only input.
  const WiringDiagram& wiring();
  const GroupPresentation& pi1_u();
  const CosetSchreierData& milnor_fiber();
  /// Tietze-simplified presentation of pi_1(F).
  const GroupPresentation& pi1_f();
  const std::map<int, int>& e_values();
  int beta(std::int64_t p);
  const std::vector<Multinet>& multinets();

 private:
  void require_realized(const std::string& what) const;

  ArrangementInput input_;
  ReportOptions options_;
  std::optional<WiringDiagram> wiring_;
  std::optional<GroupPresentation> pi1_u_;
  std::optional<CosetSchreierData> fiber_;
  std::optional<GroupPresentation> pi1_f_;
  std::optional<std::map<int, int>> e_;
  std::map<std::int64_t, int> beta_;
  std::optional<std::vector<Multinet>> multinets_;
};

Json lattice_section(Pipeline& p);
Json resonance_section(Pipeline& p);
Json multinet_section(Pipeline& p);
Json pi1_section(Pipeline& p);
Json milnor_section(Pipeline& p);
Json boundary_section(Pipeline& p);
Json character_count_section(Pipeline& p, CharacterSpace space, int order, int depth, std::int64_t budget);

/// A document with the mandatory schema_version and label fields.
Json document(const std::string& kind, const std::string& label);

struct Report {
  Json data;

  /// Deterministic, byte-stable JSON text (two-space indent, final newline).
  std::string json_text() const;
  /// Indented "key: value" rendering of the same data.
  std::string text() const;
};

/// Every section. Parts that need a realization are replaced by
/// "skipped: <reason>" strings for incidence-only input; budget refusals in
/// optional parts are recorded the same way.
Report run_full_report(const ArrangementInput& input, const ReportOptions& options = {});
Report run_full_report(const std::string& path, const ReportOptions& options = {});

/// Side-by-side comparison of the two Falk arrangements: invariants that agree
/// and the character counts that separate the Milnor fibers.
Report falk_pair_demo(const ReportOptions& options = {});

}  // namespace arrtop
