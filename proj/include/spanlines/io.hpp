#pragma once

// JSON and CSV encodings for configurations, spectra, reports and search
// records.
//
// Configuration file:
//   {"field": {"kind": "rational" | "quadratic" | "cyclotomic", "d": .., "N": ..},
//    "label": "...",
//    "points": [[e, e, e], ...]}
// with elements encoded as "p/q" (rational), [a, b] meaning a + b sqrt(d)
// (quadratic), or an array of phi(N) rational strings (cyclotomic, powers of
// zeta from 0 up).

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spanlines/inequalities.hpp"
#include "spanlines/projective.hpp"
#include "spanlines/search.hpp"

namespace spanlines {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text);

nlohmann::json field_to_json(const FieldDescriptor& field);
FieldDescriptor field_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const FieldElement& e);
FieldElement element_from_json(const Field& field, const nlohmann::json& j);

nlohmann::json configuration_to_json(const Configuration& config);
/// Throws FormatError on malformed input; DuplicatePointError propagates.
Configuration configuration_from_json(const nlohmann::json& j);

Configuration read_configuration(const std::string& path);
void write_configuration(const Configuration& config, const std::string& path);

nlohmann::json spectrum_to_json(const LineSpectrum& s, bool real);
std::string spectrum_to_csv(const LineSpectrum& s, bool real);

nlohmann::json report_to_json(const InequalityReport& r);
nlohmann::json reports_to_json(const std::vector<InequalityReport>& reports);
std::string reports_to_csv(const std::vector<InequalityReport>& reports);

nlohmann::json search_record_to_json(const SearchRecord& record);

/// Decimal rendering for display columns only.
std::string approx_decimal(const Rational& value);

}  // namespace spanlines
