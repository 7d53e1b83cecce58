#pragma once

#include "qhankel/closedform.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace qhankel {

enum class ReportFormat { json, csv, text };

inline const char* target_name(Target t) {
  switch (t) {
    case Target::bell: return "bell";
    case Target::phi: return "phi";
    case Target::c_product: return "c_product";
    case Target::cigler: return "cigler";
    case Target::dowling_first: return "dowling_first";
    case Target::dowling_second: return "dowling_second";
    case Target::dowling_third: return "dowling_third";
    case Target::phi_shifted: return "phi_shifted";
  }
  return "?";
}

inline const char* seq_name(SeqKind k) {
  switch (k) {
    case SeqKind::phi_at_a: return "phi_at_a";
    case SeqKind::moment_weighted: return "moment_weighted";
    case SeqKind::dowling_first: return "dowling_first";
    case SeqKind::dowling_second: return "dowling_second";
    case SeqKind::dowling_third: return "dowling_third";
    case SeqKind::bell_classical: return "bell_classical";
  }
  return "?";
}

/// The stable document schema. No timestamps, no environment data: identical
/// configuration gives byte-identical output.
inline std::string emit_report(const VerifyReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      nlohmann::ordered_json doc;
      doc["tool"] = "qhankel";
      doc["schema"] = 1;
      doc["params"] = {{"m", report.params.m},
                       {"r", report.params.r},
                       {"target", target_name(report.target)},
                       {"seq", seq_name(report.seq)}};
      auto rows = nlohmann::ordered_json::array();
      for (const auto& row : report.rows) {
        rows.push_back({{"n", row.n},
                        {"order", row.order},
                        {"lhs", row.lhs.str()},
                        {"rhs", row.rhs.str()},
                        {"diff", row.diff.str()},
                        {"match", row.match}});
      }
      doc["rows"] = std::move(rows);
      if (report.first_mismatch)
        doc["first_mismatch"] = *report.first_mismatch;
      else
        doc["first_mismatch"] = nullptr;
      return doc.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "n,order,lhs,rhs,diff,match\n";
      for (const auto& row : report.rows)
        out << row.n << ',' << row.order << ',' << row.lhs.str() << ',' << row.rhs.str() << ','
            << row.diff.str() << ',' << (row.match ? "true" : "false") << '\n';
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << "target=" << target_name(report.target) << " m=" << report.params.m
          << " r=" << report.params.r << " seq=" << seq_name(report.seq) << '\n';
      for (const auto& row : report.rows)
        out << "n=" << row.n << " order=" << row.order << " match="
            << (row.match ? "true" : "false") << " lhs=" << row.lhs.str()
            << " rhs=" << row.rhs.str() << " diff=" << row.diff.str() << '\n';
      if (report.first_mismatch)
        out << "first_mismatch=" << *report.first_mismatch << '\n';
      else
        out << "first_mismatch=none\n";
      return out.str();
    }
  }
  throw std::logic_error("emit_report: bad format");
}

}  // namespace qhankel
