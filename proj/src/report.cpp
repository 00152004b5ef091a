#include "gbr/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gbr {

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << "config line " << lineno << " is not key=value: " << line;
      throw PreconditionError(msg.str());
    }
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "T") {
    num.T = std::stoi(value);
  } else if (key == "root_tol") {
    num.root_tol = std::stod(value);
  } else if (key == "quad_tol") {
    num.quad_tol = std::stod(value);
  } else if (key == "r_max") {
    num.r_max = std::stod(value);
  } else if (key == "theta_samples") {
    theta_samples = std::stoi(value);
  } else if (key == "seed") {
    seed = std::stoull(value);
  } else if (key == "format") {
    if (value == "csv")
      format = Format::Csv;
    else if (value == "json")
      format = Format::Json;
    else
      throw PreconditionError("format must be csv or json");
  } else {
    throw PreconditionError("unknown config key: " + key);
  }
  if (num.T < 32) throw PreconditionError("T must be >= 32");
  if (num.root_tol <= 0.0 || num.quad_tol <= 0.0)
    throw PreconditionError("tolerances must be positive");
}

std::string format_g12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

void fill_psi_fields(ResultRecord& rec, const PsiModel& psi) {
  if (!psi.has_closed_form_eval()) return;
  rec.psi_d = psi.d();
  rec.psi_e = psi.e();
  if (psi.kind() == PsiModel::Kind::OrderAlpha) rec.alpha = psi.alpha();
}

}  // namespace

ResultRecord make_record(const RadiusProblem& p) {
  ResultRecord rec;
  rec.cls = to_string(p.tag);
  fill_psi_fields(rec, p.psi);
  rec.beta = p.beta;
  rec.m = p.m;
  rec.N = p.N;
  rec.weights = p.weights.str();
  return rec;
}

ResultRecord make_record(const RadiusProblem& p, const RadiusResult& res) {
  ResultRecord rec = make_record(p);
  rec.r0 = res.r0;
  rec.rb = res.rb;
  rec.capped = res.capped;
  rec.residual = res.residual;
  rec.status = "ok";
  return rec;
}

std::string csv_header() {
  return "class,psi_D,psi_E,alpha,beta,m,N,weights,r0,rb,capped,residual,status";
}

namespace {

std::string opt_field(const std::optional<double>& v) {
  return v ? format_g12(*v) : std::string();
}

/// Round-trip through %.12g so that CSV and JSON carry identical numbers.
double rounded_g12(double x) { return std::stod(format_g12(x)); }

}  // namespace

std::string csv_row(const ResultRecord& rec) {
  std::ostringstream out;
  out << rec.cls << ',' << opt_field(rec.psi_d) << ',' << opt_field(rec.psi_e) << ','
      << opt_field(rec.alpha) << ',' << format_g12(rec.beta) << ',' << rec.m.str() << ','
      << rec.N << ',' << rec.weights << ',' << opt_field(rec.r0) << ',' << opt_field(rec.rb)
      << ',' << (rec.capped ? (*rec.capped ? "true" : "false") : "") << ','
      << opt_field(rec.residual) << ',' << rec.status;
  return out.str();
}

std::string json_record(const ResultRecord& rec) {
  nlohmann::ordered_json j;
  j["class"] = rec.cls;
  const auto put_opt = [&](const char* key, const std::optional<double>& v) {
    if (v)
      j[key] = rounded_g12(*v);
    else
      j[key] = nullptr;
  };
  put_opt("psi_D", rec.psi_d);
  put_opt("psi_E", rec.psi_e);
  put_opt("alpha", rec.alpha);
  j["beta"] = rounded_g12(rec.beta);
  j["m"] = rec.m.str();
  j["N"] = rec.N;
  j["weights"] = rec.weights;
  put_opt("r0", rec.r0);
  put_opt("rb", rec.rb);
  if (rec.capped)
    j["capped"] = *rec.capped;
  else
    j["capped"] = nullptr;
  put_opt("residual", rec.residual);
  j["status"] = rec.status;
  return j.dump();
}

}  // namespace gbr
