#ifndef QMOM_REPORT_IO_HPP
#define QMOM_REPORT_IO_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "qmom/properness.hpp"
#include "qmom/verify.hpp"

namespace qmom {

struct ProbeRun {
  std::vector<ProbeRow> rows;
  int samples_per_radius = 0;
  std::uint64_t seed = 0;
};

std::string render_report_text(const PropernessReport& r, const ProbeRun* probe);
nlohmann::json report_to_json(const PropernessReport& r, const ProbeRun* probe);

std::string render_verify_text(const VerifyResult& v, int trials,
                               std::uint64_t seed);

std::string render_moment_text(const RepSpace& sp, const MomentValue& mv,
                               double norm_sq);
nlohmann::json moment_to_json(const RepSpace& sp, const MomentValue& mv,
                              double norm_sq);

nlohmann::json rep_to_json(const RepSpace& sp, const RepPoint& rho);

} // namespace qmom

#endif
