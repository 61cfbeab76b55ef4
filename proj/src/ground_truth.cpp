#include "mcs/ground_truth.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mcs {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int lineno, const std::string& msg) {
  throw std::runtime_error("ground truth " + origin + ": line " + std::to_string(lineno) +
                           ": " + msg);
}

double parse_field(const std::string& origin, int lineno, const std::string& v,
                   const char* what) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return d;
  } catch (const std::exception&) {
    fail(origin, lineno, std::string("bad ") + what + " value '" + v + "'");
  }
}

}  // namespace

std::vector<GroundTruthRecord> parse_ground_truth(std::istream& in, const std::string& origin) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) {
    throw std::runtime_error("ground truth " + origin + ": empty file");
  }
  ++lineno;
  if (trim(line) != "task_id,timestamp,lat,lon,true_value") {
    fail(origin, lineno, "bad header, expected task_id,timestamp,lat,lon,true_value");
  }

  std::vector<GroundTruthRecord> out;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (fields.size() != 5) {
      fail(origin, lineno, "expected 5 fields, got " + std::to_string(fields.size()));
    }
    GroundTruthRecord rec;
    rec.task_id = fields[0];
    if (rec.task_id.empty()) fail(origin, lineno, "empty task_id");
    rec.timestamp = parse_field(origin, lineno, fields[1], "timestamp");
    rec.lat = parse_field(origin, lineno, fields[2], "lat");
    rec.lon = parse_field(origin, lineno, fields[3], "lon");
    rec.true_value = parse_field(origin, lineno, fields[4], "true_value");
    if (rec.lat < -90.0 || rec.lat > 90.0) fail(origin, lineno, "lat outside [-90, 90]");
    if (rec.lon < -180.0 || rec.lon > 180.0) fail(origin, lineno, "lon outside [-180, 180]");
    out.push_back(std::move(rec));
  }
  if (out.empty()) {
    throw std::runtime_error("ground truth " + origin + ": no data rows");
  }
  return out;
}

std::vector<GroundTruthRecord> load_ground_truth(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("ground truth: cannot open " + path);
  return parse_ground_truth(in, path);
}

std::vector<GroundTruthRecord> synthetic_ground_truth(const SyntheticTruthParams& params,
                                                      Rng& rng) {
  if (params.count < 1) throw std::invalid_argument("synthetic_ground_truth: count < 1");
  std::vector<GroundTruthRecord> out;
  out.reserve(static_cast<std::size_t>(params.count));
  for (int i = 0; i < params.count; ++i) {
    GroundTruthRecord rec;
    rec.task_id = "task" + std::to_string(i);
    rec.timestamp = params.t0 + params.t_step * i;
    rec.lat = rng.uniform(params.lat_min, params.lat_max);
    rec.lon = rng.uniform(params.lon_min, params.lon_max);
    rec.true_value = rng.uniform(params.value_min, params.value_max);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace mcs
