// Report rendering: human-readable tables, the JSON report schema, and the
// TSV scan format (columns omega, alpha1, rho1, tau1, torsionL, hasZ4).
#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "arrcover/analysis.hpp"

namespace arrcover {

namespace detail {

inline std::string compact(std::string s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out += c;
  return out;
}

}  // namespace detail

inline nlohmann::json report_to_json(const std::string& source, const ArrangementContext& ctx,
                                     const InvariantReport& rep) {
  nlohmann::json j;
  j["arrangement"] = {{"source", source},
                      {"lines", ctx.lines()},
                      {"points", ctx.poset.intersections().points.size()},
                      {"chambers", ctx.poset.chambers().size()}};
  nlohmann::json om = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.omega.size(); ++i)
    if (rep.omega.bits[i]) om.push_back(i + 1);
  j["omega"] = om;
  nlohmann::json degs = nlohmann::json::array();
  for (int k = 0; k < 3; ++k) {
    const DegreeReport& d = rep.degree[k];
    degs.push_back({{"k", k},
                    {"alpha", d.alpha},
                    {"rho", d.rho},
                    {"tau", d.tau},
                    {"b_X", d.b_x},
                    {"b_cover", d.b_cover},
                    {"H_cover", detail::compact(d.h_cover.str())},
                    {"H_local", detail::compact(d.h_local.str())}});
  }
  j["degrees"] = degs;
  j["identities"] = {{"main", rep.identities.main},
                     {"leray", rep.identities.leray},
                     {"mod2", rep.identities.mod2},
                     {"uct", rep.identities.uct},
                     {"ps", rep.identities.ps}};
  return j;
}

inline std::string report_to_text(const std::string& source, const ArrangementContext& ctx,
                                  const InvariantReport& rep) {
  std::ostringstream os;
  os << "arrangement " << source << ": " << ctx.lines() << " lines, "
     << ctx.poset.intersections().points.size() << " points, " << ctx.poset.chambers().size()
     << " chambers\n";
  os << "omega = " << rep.omega.index_list() << "  (bits " << rep.omega.bitstring() << ")\n\n";
  os << "  k  alpha  rho  tau  b_X  b_cover  H_k(cover)            H_k(local system)\n";
  for (int k = 0; k < 3; ++k) {
    const DegreeReport& d = rep.degree[k];
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %d  %5ld  %3ld  %3ld  %3ld  %7ld  %-21s %s\n", k, d.alpha,
                  d.rho, d.tau, d.b_x, d.b_cover, d.h_cover.str().c_str(),
                  d.h_local.str().c_str());
    os << buf;
  }
  auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
  os << "\nidentities: main " << mark(rep.identities.main) << ", leray "
     << mark(rep.identities.leray) << ", mod2 " << mark(rep.identities.mod2) << ", uct "
     << mark(rep.identities.uct) << ", ps " << mark(rep.identities.ps) << "\n";
  if (!rep.first_failure.empty()) os << "first failure: " << rep.first_failure << "\n";
  // primary-decomposition rendering, when it differs from the invariant-factor form
  for (int k = 0; k < 3; ++k) {
    const DegreeReport& d = rep.degree[k];
    if (d.h_local.str_primary() != d.h_local.str())
      os << "H_" << k << "(local) primary form: " << d.h_local.str_primary() << "\n";
    if (d.h_cover.str_primary() != d.h_cover.str())
      os << "H_" << k << "(cover) primary form: " << d.h_cover.str_primary() << "\n";
  }
  return os.str();
}

inline std::string torsion_label(const AbelianGroup& torsion_only) {
  if (torsion_only.torsion.empty()) return "-";
  return detail::compact(torsion_only.str());
}

inline std::string scan_to_tsv(const ScanResult& sc) {
  std::ostringstream os;
  os << "# omega\talpha1\trho1\ttau1\ttorsionL\thasZ4\n";
  for (const ScanRow& r : sc.rows)
    os << r.omega.bitstring() << "\t" << r.alpha1 << "\t" << r.rho1 << "\t" << r.tau1 << "\t"
       << torsion_label(r.torsion_local) << "\t" << (r.has_z4 ? 1 : 0) << "\n";
  os << "# scanned " << sc.rows.size() << " classes: " << sc.torsion_hits
     << " with tau_1 > 0, " << sc.z4_hits << " with Z_4 in the local torsion\n";
  return os.str();
}

inline nlohmann::json scan_to_json(const std::string& source, const ScanResult& sc) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ScanRow& r : sc.rows)
    rows.push_back({{"omega", r.omega.bitstring()},
                    {"alpha1", r.alpha1},
                    {"rho1", r.rho1},
                    {"tau1", r.tau1},
                    {"torsionL", torsion_label(r.torsion_local)},
                    {"hasZ4", r.has_z4}});
  return nlohmann::json{{"arrangement", source},
                        {"rows", rows},
                        {"summary",
                         {{"classes", sc.rows.size()},
                          {"tau1_positive", sc.torsion_hits},
                          {"z4_hits", sc.z4_hits}}}};
}

}  // namespace arrcover
