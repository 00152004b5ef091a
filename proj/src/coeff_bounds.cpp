#include "gbr/coeff_bounds.hpp"

#include <cmath>
#include <sstream>

namespace gbr {

CoeffBoundProvider CoeffBoundProvider::janowski_product(double D, double E) {
  if (!(-1.0 <= E && E < D && D <= 1.0))
    throw PreconditionError("Janowski parameters require -1 <= E < D <= 1");
  CoeffBoundProvider p;
  p.kind_ = Kind::JanowskiProduct;
  p.d_ = D;
  p.e_ = E;
  return p;
}

CoeffBoundProvider CoeffBoundProvider::order_alpha_product(double alpha) {
  if (!(0.0 <= alpha && alpha < 1.0))
    throw PreconditionError("order parameter requires 0 <= alpha < 1");
  CoeffBoundProvider p;
  p.kind_ = Kind::OrderAlphaProduct;
  p.alpha_ = alpha;
  return p;
}

CoeffBoundProvider CoeffBoundProvider::classical_n() {
  CoeffBoundProvider p;
  p.kind_ = Kind::ClassicalN;
  return p;
}

CoeffBoundProvider CoeffBoundProvider::extremal_derived(Series f0) {
  CoeffBoundProvider p;
  p.kind_ = Kind::ExtremalDerived;
  p.f0_ = std::move(f0);
  return p;
}

double CoeffBoundProvider::bound(int n) const {
  if (n < 1) throw PreconditionError("coefficient bounds start at n = 1");
  switch (kind_) {
    case Kind::ClassicalN:
      return static_cast<double>(n);
    case Kind::JanowskiProduct: {
      double m = 1.0;
      for (int k = 0; k <= n - 2; ++k) m = m * std::abs(e_ - d_ + e_ * k) / (k + 1);
      return m;
    }
    case Kind::OrderAlphaProduct: {
      double m = 1.0;
      for (int k = 0; k <= n - 2; ++k) m = m * (k + 2.0 * (1.0 - alpha_)) / (k + 1);
      return m;
    }
    case Kind::ExtremalDerived: {
      if (n > f0_.order())
        throw PreconditionError("index exceeds the stored extremal truncation");
      return std::abs(f0_.coeff(n));
    }
  }
  return 0.0;
}

int CoeffBoundProvider::max_index() const {
  return kind_ == Kind::ExtremalDerived ? f0_.order() : std::numeric_limits<int>::max();
}

std::string CoeffBoundProvider::str() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::ClassicalN: out << "classical-n"; break;
    case Kind::JanowskiProduct: out << "janowski(" << d_ << "," << e_ << ")"; break;
    case Kind::OrderAlphaProduct: out << "order-alpha(" << alpha_ << ")"; break;
    case Kind::ExtremalDerived: out << "extremal[" << f0_.order() << "]"; break;
  }
  return out.str();
}

}  // namespace gbr
