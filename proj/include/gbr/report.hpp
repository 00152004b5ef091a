#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gbr/solvers.hpp"

namespace gbr {

/// Shared numeric and output defaults for the command-line tools.
struct RunConfig {
  NumericConfig num;
  int theta_samples = 64;
  std::uint64_t seed = 1;
  enum class Format { Csv, Json } format = Format::Csv;

  /// Applies "key=value" lines (unknown keys are an error, '#' comments and
  /// blank lines are skipped).
  void load_file(const std::string& path);
  void set(const std::string& key, const std::string& value);
};

/// One row of the radius table. Optional fields stay empty (CSV) or null
/// (JSON) for failed instances.
struct ResultRecord {
  std::string cls;
  std::optional<double> psi_d;
  std::optional<double> psi_e;
  std::optional<double> alpha;
  double beta = 0.0;
  MExponent m;
  int N = 1;
  std::string weights;
  std::optional<double> r0;
  std::optional<double> rb;
  std::optional<bool> capped;
  std::optional<double> residual;
  std::string status = "ok";
};

ResultRecord make_record(const RadiusProblem& p);
ResultRecord make_record(const RadiusProblem& p, const RadiusResult& res);

/// %.12g, the precision every float in the CSV/JSON output carries.
std::string format_g12(double x);

std::string csv_header();
std::string csv_row(const ResultRecord& rec);
std::string json_record(const ResultRecord& rec);

}  // namespace gbr
