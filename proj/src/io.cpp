#include "spanlines/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace spanlines {

using nlohmann::json;

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ') t.push_back(c);
  }
  if (t.empty()) throw FormatError("empty rational");
  if (t[0] == '+') t.erase(0, 1);
  Rational value;
  if (value.set_str(t, 10) != 0) throw FormatError("malformed rational: \"" + text + "\"");
  if (value.get_den() == 0) throw FormatError("zero denominator: \"" + text + "\"");
  value.canonicalize();
  return value;
}

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw FormatError("expected a rational string or integer, got " + j.dump());
}

}  // namespace

json field_to_json(const FieldDescriptor& field) {
  switch (field.kind) {
    case FieldKind::rational:
      return {{"kind", "rational"}};
    case FieldKind::quadratic:
      return {{"kind", "quadratic"}, {"d", field.d}};
    case FieldKind::cyclotomic:
      return {{"kind", "cyclotomic"}, {"N", field.N}};
  }
  return {};
}

FieldDescriptor field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw FormatError("field must be an object with a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "rational") return FieldDescriptor::rational();
    if (kind == "quadratic") return FieldDescriptor::quadratic(j.at("d").get<std::int64_t>());
    if (kind == "cyclotomic") return FieldDescriptor::cyclotomic(j.at("N").get<std::int64_t>());
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad field descriptor: ") + e.what());
  } catch (const FieldError& e) {
    throw FormatError(e.what());
  }
  throw FormatError("unknown field kind: " + kind);
}

json element_to_json(const FieldElement& e) {
  const auto coeffs = e.coeffs();
  if (e.field().kind() == FieldKind::rational) return coeffs[0].get_str();
  json out = json::array();
  for (const auto& c : coeffs) out.push_back(c.get_str());
  return out;
}

FieldElement element_from_json(const Field& field, const json& j) {
  if (field.kind() == FieldKind::rational) return FieldElement(field, rational_from_json(j));
  if (!j.is_array()) throw FormatError("expected a coefficient array, got " + j.dump());
  if (j.size() != field.degree()) {
    throw FormatError("element of " + field.descriptor().to_string() + " needs " +
                      std::to_string(field.degree()) + " coefficients, got " + std::to_string(j.size()));
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return FieldElement(field, std::move(coeffs));
}

json configuration_to_json(const Configuration& config) {
  json points = json::array();
  for (const auto& p : config.points()) {
    points.push_back(json::array({element_to_json(p[0]), element_to_json(p[1]), element_to_json(p[2])}));
  }
  return {{"field", field_to_json(config.field())}, {"label", config.label()}, {"points", points}};
}

Configuration configuration_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("configuration must be a JSON object");
  if (!j.contains("field")) throw FormatError("configuration is missing \"field\"");
  if (!j.contains("points") || !j.at("points").is_array()) {
    throw FormatError("configuration is missing the \"points\" array");
  }
  const FieldDescriptor descriptor = field_from_json(j.at("field"));
  const Field& field = Field::get(descriptor);
  std::vector<ProjectivePoint> points;
  std::size_t index = 0;
  for (const auto& p : j.at("points")) {
    if (!p.is_array() || p.size() != 3) {
      throw FormatError("point " + std::to_string(index) + " must have 3 homogeneous coordinates");
    }
    try {
      points.emplace_back(element_from_json(field, p[0]), element_from_json(field, p[1]),
                          element_from_json(field, p[2]));
    } catch (const GeometryError& e) {
      throw FormatError("point " + std::to_string(index) + ": " + e.what());
    }
    ++index;
  }
  if (points.empty()) throw FormatError("configuration has no points");
  std::string label = j.value("label", std::string());
  return Configuration(descriptor, std::move(points), std::move(label));
}

Configuration read_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
  return configuration_from_json(j);
}

void write_configuration(const Configuration& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << configuration_to_json(config).dump(2) << '\n';
}

// ---------------------------------------------------------------------------

std::string approx_decimal(const Rational& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value.get_d());
  return buffer;
}

json spectrum_to_json(const LineSpectrum& s, bool real) {
  json ell = json::object();
  for (const auto& [i, count] : s.ell) ell[std::to_string(i)] = count;
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (auto d : s.degrees) ++histogram[d];
  json degree_histogram = json::object();
  for (const auto& [d, count] : histogram) degree_histogram[std::to_string(d)] = count;
  return {{"n", s.n},
          {"ell", ell},
          {"total_lines", s.total_lines},
          {"incidences", s.incidences},
          {"max_collinear", s.max_collinear},
          {"max_degree", s.max_degree()},
          {"degree_histogram", degree_histogram},
          {"degrees", s.degrees},
          {"real", real}};
}

std::string spectrum_to_csv(const LineSpectrum& s, bool real) {
  std::ostringstream out;
  out << "quantity,value\n";
  out << "n," << s.n << '\n';
  for (const auto& [i, count] : s.ell) out << "ell_" << i << ',' << count << '\n';
  out << "total_lines," << s.total_lines << '\n';
  out << "incidences," << s.incidences << '\n';
  out << "max_collinear," << s.max_collinear << '\n';
  out << "max_degree," << s.max_degree() << '\n';
  out << "real," << (real ? "true" : "false") << '\n';
  return out.str();
}

json report_to_json(const InequalityReport& r) {
  json extras = json::object();
  for (const auto& [key, value] : r.extras) extras[key] = value.get_str();
  return {{"name", r.name},
          {"kind", to_string(r.kind)},
          {"relation", to_string(r.relation)},
          {"applicable", r.applicable},
          {"applicability_reason", r.applicability_reason},
          {"lhs", r.lhs.get_str()},
          {"rhs", r.rhs.get_str()},
          {"slack", r.slack.get_str()},
          {"satisfied", r.satisfied},
          {"tight", r.tight},
          {"failure", r.is_failure()},
          {"extras", extras}};
}

json reports_to_json(const std::vector<InequalityReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r));
  return out;
}

std::string reports_to_csv(const std::vector<InequalityReport>& reports) {
  std::ostringstream out;
  out << "name,kind,applicable,satisfied,tight,slack_approx\n";
  for (const auto& r : reports) {
    out << r.name << ',' << to_string(r.kind) << ',' << (r.applicable ? "true" : "false") << ','
        << (r.satisfied ? "true" : "false") << ',' << (r.tight ? "true" : "false") << ','
        << approx_decimal(r.slack) << '\n';
  }
  return out.str();
}

json search_record_to_json(const SearchRecord& record) {
  json history = json::array();
  for (const auto& [it, value] : record.history) history.push_back({it, value.get_str()});
  json points = json::array();
  for (const auto& p : record.best_points) points.push_back({p.x, p.y});
  const Configuration best = record.best_config();
  const LineSpectrum s = spectrum(best);
  return {{"method", record.method},
          {"objective_kind", to_string(record.objective_kind)},
          {"objective", record.objective.get_str()},
          {"objective_approx", approx_decimal(record.objective)},
          {"best_value", record.best_value},
          {"n", record.n},
          {"cap", record.cap},
          {record.method == "exhaustive" ? "grid_side" : "bound", record.extent},
          {"seed", record.seed},
          {"restarts", record.restarts},
          {"iterations", record.iterations},
          {"symmetry_pruning", record.symmetry_pruning},
          {"complete", record.complete},
          {"history", history},
          {"best_points", points},
          {"best_config", configuration_to_json(best)},
          {"spectrum", spectrum_to_json(s, true)},
          {"incidence_conjecture", report_to_json(check_incidence_conjecture(s, true))}};
}

}  // namespace spanlines
