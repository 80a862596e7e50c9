#ifndef BSAKS_REPORT_HPP
#define BSAKS_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bsaks/crosspolytope.hpp"
#include "bsaks/distortion.hpp"
#include "bsaks/estimators.hpp"
#include "bsaks/ramsey.hpp"

namespace bsaks {

struct CheckRecord {
  std::string id;
  std::string citation;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::string> bound_kinds;
  std::string relation;
  std::string tolerance;
  bool pass = false;
  double runtime = 0;
  std::string detail;     // failure detail, instance serialization
  std::string reproduce;  // standalone command
};

struct VerificationReport {
  std::vector<CheckRecord> checks;
  bool timings = false;

  bool pass() const;
  void sort_by_id();
};

nlohmann::json number_json(const Number& x);
nlohmann::json estimate_json(const QuantityEstimate& e);
nlohmann::json minimization_json(const MinimizationResult& r);
nlohmann::json sm_json(const SmResult& r);
nlohmann::json sm_check_json(const SmCheck& c);
nlohmann::json dichotomy_json(const DichotomyResult& r, const VerifyOutcome& verified);
nlohmann::json ramsey_json(const RamseyResult& r, std::uint64_t t);
nlohmann::json set_report_json(const SetReport& r);
nlohmann::json distortion_json(const DistortionResult& r);
nlohmann::json report_json(const VerificationReport& r);

/// One row per profile entry: m,value,exact.
std::string profile_csv(const WindowProfile& p);
/// One row per evidence item.
std::string set_report_csv(const SetReport& r);
/// One row per check.
std::string report_csv(const VerificationReport& r);

}  // namespace bsaks

#endif  // BSAKS_REPORT_HPP
