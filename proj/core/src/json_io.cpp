#include "su2ent/json_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace su2ent {

namespace {

nlohmann::json parse(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

int int_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

std::vector<double> vector_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::invalid_argument(std::string("missing array field \"") + key + "\"");
  std::vector<double> out;
  for (const auto& entry : j[key]) {
    if (!entry.is_number())
      throw std::invalid_argument(std::string("non-numeric entry in \"") + key + "\"");
    out.push_back(entry.get<double>());
  }
  return out;
}

void append_doubles(std::string& out, const std::vector<double>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_double(values[i]);
  }
  out += ']';
}

void append_ints(std::string& out, const std::vector<int>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  out += ']';
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

SU2State state_from_json(const std::string& text) {
  const nlohmann::json j = parse(text);
  const int ts1 = int_field(j, "ts1");
  const int ts2 = int_field(j, "ts2");
  if (ts1 < 0 || ts2 < 0)
    throw std::invalid_argument("ts1/ts2 must be non-negative");
  return SU2State(ts1, ts2, vector_field(j, "A"));
}

std::string state_to_json(const SU2State& state) {
  std::string out = "{\"ts1\": " + std::to_string(state.ts1().value) +
                    ", \"ts2\": " + std::to_string(state.ts2().value) + ", \"A\": ";
  append_doubles(out, state.weights());
  out += '}';
  return out;
}

PTSpectrum spectrum_from_json(const std::string& text) {
  const nlohmann::json j = parse(text);
  const int ts1 = int_field(j, "ts1");
  const int ts2 = int_field(j, "ts2");
  if (ts1 < 0 || ts2 < 0)
    throw std::invalid_argument("ts1/ts2 must be non-negative");
  std::vector<double> b = vector_field(j, "B");
  std::vector<int> tks = multiplet_range(ts1, ts2);
  if (b.size() != tks.size())
    throw std::invalid_argument("B has wrong length for the spin pair");
  return PTSpectrum{TwiceSpin(ts1), TwiceSpin(ts2), std::move(tks), std::move(b)};
}

std::string spectrum_to_json(const PTSpectrum& spectrum) {
  std::string out = "{\"ts1\": " + std::to_string(spectrum.ts1.value) +
                    ", \"ts2\": " + std::to_string(spectrum.ts2.value) + ", \"B\": ";
  append_doubles(out, spectrum.b);
  out += '}';
  return out;
}

std::string report_to_json(const SU2State& state, const PTSpectrum& spectrum,
                           const CriteriaReport& report,
                           std::optional<double> invariance_residual) {
  std::string out = "{\n";
  out += "  \"ts1\": " + std::to_string(state.ts1().value) + ",\n";
  out += "  \"ts2\": " + std::to_string(state.ts2().value) + ",\n";
  out += "  \"A\": ";
  append_doubles(out, state.weights());
  out += ",\n  \"B\": ";
  append_doubles(out, spectrum.b);
  out += ",\n  \"dot_correlator\": " + format_double(report.dot_correlator);
  out += ",\n  \"dot_squared_correlator\": " + format_double(report.dot_squared_correlator);
  out += ",\n  \"witness_values\": ";
  append_doubles(out, report.witness_values);
  out += ",\n  \"negative_Ks\": ";
  append_ints(out, report.negative_tks);
  out += ",\n  \"ppt_negative\": ";
  out += report.ppt_negative ? "true" : "false";
  out += ",\n  \"sufficient_npt\": ";
  out += report.sufficient_npt ? "true" : "false";
  out += ",\n  \"max_neg_necessary_met\": ";
  out += report.max_neg_necessary_met ? "true" : "false";
  out += ",\n  \"reduction_violated\": ";
  out += report.reduction_violated ? "true" : "false";
  out += ",\n  \"majorization_violated\": ";
  out += report.majorization_violated ? "true" : "false";
  out += ",\n  \"lur_violated\": ";
  out += report.lur_violated ? "true" : "false";
  if (invariance_residual)
    out += ",\n  \"invariance_residual\": " + format_double(*invariance_residual);
  out += ",\n  \"entangled\": ";
  out += report.entangled() ? "true" : "false";
  out += "\n}\n";
  return out;
}

}  // namespace su2ent
