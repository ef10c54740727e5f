#include "dissoc/report.hpp"

#include <json.hpp>
#include <sstream>

namespace dissoc {

using Json = nlohmann::ordered_json;

namespace {

Json records_json(const std::vector<GraphRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) out.push_back({{"graph6", r.graph6}, {"code", r.code}});
  return out;
}

Json findings_json(const std::vector<Finding>& findings) {
  Json out = Json::array();
  for (const auto& f : findings)
    out.push_back({{"graph6", f.graph6}, {"rule", f.rule}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"detail", f.detail}});
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::vector<GraphRecord> records_from(const Json& j) {
  std::vector<GraphRecord> out;
  for (const auto& r : j) out.push_back({r.at("graph6").get<std::string>(), r.at("code").get<std::string>()});
  return out;
}

std::vector<Finding> findings_from(const Json& j) {
  std::vector<Finding> out;
  for (const auto& f : j)
    out.push_back({f.at("graph6").get<std::string>(), f.at("rule").get<std::string>(), f.at("lhs").get<std::int64_t>(),
                   f.at("rhs").get<std::int64_t>(), f.value("detail", std::string{})});
  return out;
}

template <class T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string order_label(const VerificationReport& r) {
  if (r.order_min == r.order_max) return std::to_string(r.order_min);
  return std::to_string(r.order_min) + ".." + std::to_string(r.order_max);
}

template <class T>
std::string optional_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string{};
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports, const ReportFormatOptions& opts) {
  Json out = Json::array();
  for (const auto& r : reports) {
    out.push_back({
        {"suite", r.suite},
        {"order_min", r.order_min},
        {"order_max", r.order_max},
        {"graphs_examined", r.graphs_examined},
        {"bound", optional_json(r.bound)},
        {"min_phi", optional_json(r.min_phi)},
        {"minimizers", records_json(r.minimizers)},
        {"expected_minimizers", records_json(r.expected_minimizers)},
        {"violations", findings_json(r.violations)},
        {"observations", findings_json(r.observations)},
        {"runtime_ms", opts.include_runtime ? optional_json(r.runtime_ms) : Json(nullptr)},
        {"engine_version", r.engine_version},
        {"passed", r.passed()},
    });
  }
  return out.dump(2) + "\n";
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
  std::vector<VerificationReport> out;
  for (const auto& j : Json::parse(text)) {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.order_min = j.at("order_min").get<int>();
    r.order_max = j.at("order_max").get<int>();
    r.graphs_examined = j.at("graphs_examined").get<Count>();
    r.bound = optional_from<Count>(j, "bound");
    r.min_phi = optional_from<Count>(j, "min_phi");
    r.minimizers = records_from(j.at("minimizers"));
    r.expected_minimizers = records_from(j.at("expected_minimizers"));
    r.violations = findings_from(j.at("violations"));
    r.observations = findings_from(j.value("observations", Json::array()));
    r.runtime_ms = optional_from<double>(j, "runtime_ms");
    r.engine_version = j.at("engine_version").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "suite,n,graphs,min_phi,bound,pass\n";
  for (const auto& r : reports)
    os << r.suite << ',' << order_label(r) << ',' << r.graphs_examined << ',' << optional_text(r.min_phi) << ','
       << optional_text(r.bound) << ',' << (r.passed() ? "true" : "false") << '\n';
  return os.str();
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.passed() ? "PASS " : "FAIL ") << r.suite << " n=" << order_label(r) << " graphs=" << r.graphs_examined;
    if (r.min_phi) os << " min_phi=" << *r.min_phi;
    if (r.bound) os << " bound=" << *r.bound;
    if (!r.minimizers.empty()) os << " minimizers=" << r.minimizers.size();
    os << '\n';
    for (const auto& v : r.violations)
      os << "  violation " << v.rule << ": lhs=" << v.lhs << " rhs=" << v.rhs << " graph6=" << v.graph6
         << (v.detail.empty() ? "" : " (" + v.detail + ")") << '\n';
    for (const auto& o : r.observations)
      os << "  note " << o.rule << ": lhs=" << o.lhs << " rhs=" << o.rhs
         << (o.graph6.empty() ? "" : " graph6=" + o.graph6) << (o.detail.empty() ? "" : " (" + o.detail + ")")
         << '\n';
  }
  return os.str();
}

}  // namespace dissoc
