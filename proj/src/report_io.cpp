#include "ktile/report_io.hpp"

#include <json.hpp>

#include <ostream>

namespace ktile {

namespace {

nlohmann::json record_to_json(const EvaluationRecord& rec) {
  return nlohmann::json{
      {"identity_id", rec.identity_id},
      {"variant", variant_name(rec.variant)},
      {"k", rec.k},
      {"n", rec.n},
      {"lhs", rec.lhs_value.get_str()},
      {"rhs", rec.rhs_value.get_str()},
      {"matched", rec.matched},
      {"asserted", rec.asserted},
  };
}

std::string point_str(const EvaluationRecord& rec) {
  return "k=" + std::to_string(rec.k) + " n=" + std::to_string(rec.n) +
         " lhs=" + rec.lhs_value.get_str() + " rhs=" + rec.rhs_value.get_str();
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["grid"] = {
      {"k_min", report.grid.k_min},
      {"k_max", report.grid.k_max},
      {"n_max", report.grid.n_max},
      {"explore", report.grid.explore},
      {"ids", report.grid.ids},
  };
  j["records"] = nlohmann::json::array();
  for (const auto& rec : report.records)
    j["records"].push_back(record_to_json(rec));
  j["summary"] = nlohmann::json::array();
  for (const auto& s : report.summary) {
    nlohmann::json js{
        {"id", s.id},
        {"variant", variant_name(s.variant)},
        {"points", s.points},
        {"matched", s.matched},
        {"mismatched", s.mismatched},
        {"first_counterexample",
         s.first_counterexample ? record_to_json(*s.first_counterexample)
                                : nlohmann::json()},
    };
    if (report.grid.explore) {
      js["explored"] = s.explored;
      js["explored_matched"] = s.explored_matched;
      js["explored_mismatched"] = s.explored_mismatched;
      js["first_exploration_mismatch"] =
          s.first_exploration_mismatch
              ? record_to_json(*s.first_exploration_mismatch)
              : nlohmann::json();
    }
    j["summary"].push_back(std::move(js));
  }
  j["all_matched"] = report.all_matched();
  return j.dump(2) + "\n";
}

void write_report_csv(std::ostream& out, const VerificationReport& report) {
  out << "identity_id,variant,k,n,lhs,rhs,matched\n";
  for (const auto& rec : report.records) {
    if (!rec.asserted) continue;
    out << rec.identity_id << ',' << variant_name(rec.variant) << ',' << rec.k
        << ',' << rec.n << ',' << rec.lhs_value.get_str() << ','
        << rec.rhs_value.get_str() << ',' << (rec.matched ? "true" : "false")
        << '\n';
  }
}

void write_report_text(std::ostream& out, const VerificationReport& report) {
  out << "grid: k in [" << report.grid.k_min << ", " << report.grid.k_max
      << "], n <= " << report.grid.n_max
      << (report.grid.explore ? ", exploration on" : "") << "\n\n";
  for (const auto& s : report.summary) {
    out << s.id << " (" << variant_name(s.variant) << "): " << s.matched
        << '/' << s.points << " matched";
    if (s.mismatched > 0 && s.first_counterexample)
      out << "; first counterexample " << point_str(*s.first_counterexample);
    out << '\n';
    if (report.grid.explore && s.explored > 0) {
      out << "  explored (not gating): " << s.explored_matched << '/'
          << s.explored << " matched";
      if (s.first_exploration_mismatch)
        out << "; first mismatch "
            << point_str(*s.first_exploration_mismatch);
      out << '\n';
    }
  }
  out << "\nall matched: " << (report.all_matched() ? "yes" : "no") << '\n';
}

}  // namespace ktile
