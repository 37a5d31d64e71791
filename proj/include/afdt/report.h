#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "afdt/analysis.h"
#include "afdt/model.h"
#include "afdt/quant.h"
#include "afdt/validate.h"

namespace afdt::report {

// JSON encodings shared by the CLI and the HTTP service. Ids, not display
// labels, are emitted; sets are in canonical order.
nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const std::vector<Violation>& vs);
nlohmann::json to_json(const LeafPartition& p);
nlohmann::json to_json(const McsFamily& f);
nlohmann::json to_json(const ImpactEntry& e);
nlohmann::json to_json(const std::vector<ImpactEntry>& es);
nlohmann::json to_json(const ProbResult& r);

struct TextStyle {
  bool ascii = false;  // '-' for ✗ and "none" for ∅
};

/// "{A1, C1}" using display labels.
std::string format_set(const Model& model, const IdSet& s);

/// One cut per line.
std::string mcs_rows(const Model& model, const McsFamily& family);
std::string mcs_csv(const Model& model, const McsFamily& family);

/// Defense-subset comparison table: one column per family, one row per cut
/// of the first family. A cell lists the cuts of that column's family that
/// contain the row's cut, or ✗ when the cut was eliminated.
std::string mcs_comparison(const Model& model, const std::vector<McsFamily>& families, TextStyle style = {});

/// Two-column "MCS | Effective defense(s)" table built from eradicating sets.
std::string impact_table(const Model& model, const std::vector<ImpactEntry>& entries, TextStyle style = {});

/// Shortest decimal that round-trips.
std::string format_double(double v);

/// "0.5625 exact" or "<v> monte-carlo samples=N seed=S std_error=E".
std::string prob_line(const ProbResult& r);

}  // namespace afdt::report
