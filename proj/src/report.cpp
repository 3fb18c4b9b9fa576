#include "cpd/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace cpd {

namespace {

using nlohmann::ordered_json;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// The sorted expansion of a normal form's multiset, one entry per occurrence.
ordered_json expansion_array(const EHNormalForm& cell) {
  ordered_json a = ordered_json::array();
  for (const auto& [name, count] : cell.content) {
    for (std::size_t i = 0; i < count; ++i) a.push_back(name);
  }
  return a;
}

ordered_json to_json(const PullbackReport& report) {
  ordered_json j;
  j["is_pullback"] = report.is_pullback;
  if (report.collision) {
    j["collision"] = {report.collision->first, report.collision->second};
  }
  if (report.missing) {
    j["missing"] = *report.missing;
  }
  return j;
}

ordered_json to_json(const CounterexampleReport& report) {
  ordered_json j;
  j["degree_bound"] = report.degree_bound;
  j["is_pullback"] = report.star3.is_pullback;
  if (report.witness) {
    j["witness"] = {{"first", expansion_array(report.witness->first)},
                    {"second", expansion_array(report.witness->second)}};
  }
  j["projections_agree"] = report.projections_agree;
  j["mono_check"] = report.mono_check;
  j["reduction_check"] = report.reduction_check;
  j["inner_outer_pullbacks"] = report.inner_outer_pullbacks;
  ordered_json table = ordered_json::array();
  for (const auto& row : report.table) {
    table.push_back({{"degree", row.degree},
                     {"product_cells", row.product_cells},
                     {"pullback_elements", row.pullback_elements},
                     {"surjective", row.surjective},
                     {"max_fiber", row.max_fiber},
                     {"max_fiber_over", row.max_fiber_over}});
  }
  j["cardinality_table"] = table;
  return j;
}

std::string render_text(const PullbackReport& report) {
  std::ostringstream out;
  out << "is_pullback: " << yes_no(report.is_pullback) << '\n';
  if (report.collision) {
    out << "collision: " << report.collision->first << "  vs  "
        << report.collision->second << '\n';
  }
  if (report.missing) {
    out << "missing: " << *report.missing << '\n';
  }
  return out.str();
}

std::string render_text(const CounterexampleReport& report) {
  std::ostringstream out;
  out << "verification report (degree bound " << report.degree_bound << ")\n";
  out << "is_pullback: " << yes_no(report.star3.is_pullback) << '\n';
  if (report.witness) {
    out << "witness: " << format_witness(*report.witness) << '\n';
  } else {
    out << "witness: (none)\n";
  }
  out << "projections_agree: " << yes_no(report.projections_agree) << '\n';
  out << "mono_check: " << yes_no(report.mono_check) << '\n';
  out << "reduction_check: " << yes_no(report.reduction_check) << '\n';
  out << "inner_outer_pullbacks: " << yes_no(report.inner_outer_pullbacks) << '\n';
  out << "degree | product cells | pullback elements | surjective | max fiber\n";
  for (const auto& row : report.table) {
    out << std::setw(6) << row.degree << " | " << std::setw(13)
        << row.product_cells << " | " << std::setw(17) << row.pullback_elements
        << " | " << std::setw(10) << yes_no(row.surjective) << " | "
        << std::setw(9) << row.max_fiber << '\n';
  }
  return out.str();
}

}  // namespace

std::string format_witness(const std::pair<EHNormalForm, EHNormalForm>& w) {
  return w.first.label() + "  vs  " + w.second.label();
}

std::string emit_report(const CounterexampleReport& report, const std::string& format) {
  if (format == "text") return render_text(report);
  if (format == "json") return to_json(report).dump(2) + "\n";
  throw ValidationError("unknown report format '" + format + "'");
}

std::string emit_report(const PullbackReport& report, const std::string& format) {
  if (format == "text") return render_text(report);
  if (format == "json") return to_json(report).dump(2) + "\n";
  throw ValidationError("unknown report format '" + format + "'");
}

}  // namespace cpd
