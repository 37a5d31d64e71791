#include "afdt/report.h"

#include <algorithm>
#include <charconv>

namespace afdt::report {

using nlohmann::json;

json to_json(const Violation& v) {
  return {{"code", std::string(violation_code_name(v.code))}, {"node", v.node}, {"message", v.message}};
}

json to_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

json to_json(const LeafPartition& p) { return {{"bas", p.bas}, {"bcf", p.bcf}, {"bds", p.bds}}; }

json to_json(const McsFamily& f) { return {{"defense", f.defense}, {"cuts", f.cuts}}; }

json to_json(const ImpactEntry& e) {
  json hardened = json::array();
  for (const auto& [defense, cuts] : e.hardened_by) hardened.push_back({{"defense", defense}, {"cuts", cuts}});
  return {{"mcs", e.mcs},
          {"neutralizing", e.neutralizing},
          {"eradicating", e.eradicating},
          {"hardened_by", std::move(hardened)}};
}

json to_json(const std::vector<ImpactEntry>& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back(to_json(e));
  return out;
}

json to_json(const ProbResult& r) {
  json out = {{"value", r.value}, {"method", r.method == ProbMethod::kExact ? "EXACT" : "MONTE_CARLO"}};
  if (r.samples) out["samples"] = *r.samples;
  if (r.std_error) out["std_error"] = *r.std_error;
  if (r.seed) out["seed"] = *r.seed;
  return out;
}

std::string format_set(const Model& model, const IdSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += model.display(s[i]);
  }
  return out + "}";
}

std::string mcs_rows(const Model& model, const McsFamily& family) {
  std::string out;
  for (const auto& c : family.cuts) out += format_set(model, c) + "\n";
  return out;
}

std::string mcs_csv(const Model& model, const McsFamily& family) {
  std::string out = "index,size,members\n";
  for (std::size_t i = 0; i < family.cuts.size(); ++i) {
    std::string members;
    for (const auto& id : family.cuts[i]) members += (members.empty() ? "" : " ") + model.display(id);
    out += std::to_string(i + 1) + "," + std::to_string(family.cuts[i].size()) + "," + members + "\n";
  }
  return out;
}

namespace {

std::size_t display_width(const std::string& s) {
  return std::size_t(std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
  }
  auto line = [&](const std::vector<std::string>& r) {
    std::string out = "|";
    for (std::size_t i = 0; i < width.size(); ++i) {
      const std::string cell = i < r.size() ? r[i] : "";
      out += " " + cell + std::string(width[i] - display_width(cell), ' ') + " |";
    }
    return out + "\n";
  };
  std::string out = line(rows.front());
  out += "|";
  for (auto w : width) out += std::string(w + 2, '-') + "|";
  out += "\n";
  for (std::size_t i = 1; i < rows.size(); ++i) out += line(rows[i]);
  return out;
}

bool includes(const IdSet& big, const IdSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

std::string mcs_comparison(const Model& model, const std::vector<McsFamily>& families, TextStyle style) {
  if (families.empty()) return "";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  for (const auto& f : families) header.push_back(f.defense.empty() ? "No defense" : format_set(model, f.defense));
  rows.push_back(std::move(header));

  for (const auto& base : families.front().cuts) {
    std::vector<std::string> row;
    for (const auto& f : families) {
      std::string cell;
      for (const auto& c : f.cuts)
        if (includes(c, base)) cell += (cell.empty() ? "" : "; ") + format_set(model, c);
      row.push_back(cell.empty() ? (style.ascii ? "-" : "✗") : cell);
    }
    rows.push_back(std::move(row));
  }
  return render_grid(rows);
}

std::string impact_table(const Model& model, const std::vector<ImpactEntry>& entries, TextStyle style) {
  std::vector<std::vector<std::string>> rows{{"MCS", "Effective defense(s)"}};
  for (const auto& e : entries) {
    std::string cell;
    for (const auto& d : e.eradicating) cell += (cell.empty() ? "" : ", ") + format_set(model, d);
    rows.push_back({format_set(model, e.mcs), cell.empty() ? (style.ascii ? "none" : "∅") : cell});
  }
  return render_grid(rows);
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string prob_line(const ProbResult& r) {
  std::string out = format_double(r.value) + " " + std::string(method_name(r.method));
  if (r.method == ProbMethod::kMonteCarlo)
    out += " samples=" + std::to_string(*r.samples) + " seed=" + std::to_string(*r.seed) +
           " std_error=" + format_double(*r.std_error);
  return out;
}

}  // namespace afdt::report
