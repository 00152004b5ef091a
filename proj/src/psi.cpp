#include "gbr/psi.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace gbr {

PsiModel PsiModel::janowski(double D, double E) {
  if (!(-1.0 <= E && E < D && D <= 1.0))
    throw PreconditionError("Janowski parameters require -1 <= E < D <= 1");
  PsiModel m;
  m.kind_ = Kind::Janowski;
  m.d_ = D;
  m.e_ = E;
  return m;
}

PsiModel PsiModel::order_alpha(double alpha) {
  if (!(0.0 <= alpha && alpha < 1.0))
    throw PreconditionError("order parameter requires 0 <= alpha < 1");
  PsiModel m;
  m.kind_ = Kind::OrderAlpha;
  m.alpha_ = alpha;
  m.d_ = 1.0 - 2.0 * alpha;
  m.e_ = -1.0;
  return m;
}

PsiModel PsiModel::classical() {
  PsiModel m;
  m.kind_ = Kind::Classical;
  m.d_ = 1.0;
  m.e_ = -1.0;
  return m;
}

PsiModel PsiModel::custom(std::vector<Complex> coeffs) {
  if (coeffs.empty() || std::abs(coeffs[0] - Complex{1.0}) > 1e-12)
    throw PreconditionError("custom psi requires constant coefficient 1");
  PsiModel m;
  m.kind_ = Kind::Custom;
  m.custom_ = std::move(coeffs);
  return m;
}

PsiModel PsiModel::custom_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open psi coefficient file: " + path);
  std::vector<Complex> coeffs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    double re = 0.0, im = 0.0;
    if (!(ls >> re >> im)) {
      std::ostringstream msg;
      msg << "malformed coefficient at line " << lineno << " of " << path;
      throw PreconditionError(msg.str());
    }
    coeffs.emplace_back(re, im);
  }
  return custom(std::move(coeffs));
}

double PsiModel::d() const {
  if (kind_ == Kind::Custom) throw PreconditionError("custom psi has no Janowski parameters");
  return d_;
}

double PsiModel::e() const {
  if (kind_ == Kind::Custom) throw PreconditionError("custom psi has no Janowski parameters");
  return e_;
}

double PsiModel::alpha() const {
  if (kind_ != Kind::OrderAlpha) throw PreconditionError("not an order-alpha model");
  return alpha_;
}

double PsiModel::prime0() const {
  if (kind_ == Kind::Custom) return std::abs(custom_.size() > 1 ? custom_[1] : Complex{});
  return d_ - e_;
}

std::string PsiModel::str() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Classical: out << "classical"; break;
    case Kind::OrderAlpha: out << "order-alpha(" << alpha_ << ")"; break;
    case Kind::Janowski: out << "janowski(" << d_ << "," << e_ << ")"; break;
    case Kind::Custom: out << "custom[" << custom_.size() << "]"; break;
  }
  return out.str();
}

Series psi_series(const PsiModel& model, int truncation_order) {
  std::vector<Complex> c(static_cast<size_t>(truncation_order) + 1, Complex{});
  if (model.kind_ == PsiModel::Kind::Custom) {
    for (size_t n = 0; n < model.custom_.size() && n <= static_cast<size_t>(truncation_order); ++n)
      c[n] = model.custom_[n];
  } else {
    c[0] = 1.0;
    const double de = model.d_ - model.e_;
    double p = 1.0;  // (-E)^{n-1}
    for (int n = 1; n <= truncation_order; ++n) {
      c[static_cast<size_t>(n)] = de * p;
      p *= -model.e_;
    }
  }
  return Series(std::move(c));
}

double psi_eval(const PsiModel& model, double x) {
  if (model.kind_ == PsiModel::Kind::Custom) {
    if (std::abs(x) >= 1.0) throw PreconditionError("custom psi evaluation requires |x| < 1");
    const EvalResult r = eval(psi_series(model, static_cast<int>(model.custom_.size()) - 1), x);
    const Complex v = certified_value(r, x);
    if (std::abs(v.imag()) > 1e-10)
      throw PreconditionError("custom psi is not real on the real axis");
    return v.real();
  }
  if (std::abs(x) > 1.0) throw PreconditionError("psi evaluation requires |x| <= 1");
  const double denom = 1.0 + model.e_ * x;
  if (denom == 0.0) throw PreconditionError("psi has a pole at this point");
  return (1.0 + model.d_ * x) / denom;
}

double psi_majorant_tail(const PsiModel& model, int N, double t) {
  if (N < 1) throw PreconditionError("majorant tail requires N >= 1");
  if (t < 0.0 || t >= 1.0) throw PreconditionError("majorant tail requires t in [0,1)");
  if (model.kind_ == PsiModel::Kind::Custom) {
    const auto r = tail_sum(psi_series(model, static_cast<int>(model.custom_.size()) - 1), N, t);
    return certified_value(r, t);
  }
  const double de = model.d_ - model.e_;
  const double ae = std::abs(model.e_);
  if (ae == 0.0) return N == 1 ? model.d_ * t : 0.0;
  if (ae * t >= 1.0) throw DivergenceError("majorant tail outside certified range", t);
  return de * std::pow(ae, N - 1) * std::pow(t, N) / (1.0 - ae * t);
}

}  // namespace gbr
