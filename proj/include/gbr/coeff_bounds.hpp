#pragma once

#include <limits>
#include <string>

#include "gbr/series.hpp"

namespace gbr {

/// Per-index bound M(n) on |a_n| over a function class. M(1) = 1 always.
///
/// JanowskiProduct: prod_{k=0}^{n-2} |E-D+Ek|/(k+1)
/// OrderAlphaProduct: prod_{k=0}^{n-2} (k+2(1-alpha))/(k+1)
/// ClassicalN: n
/// ExtremalDerived: |n-th coefficient of a stored extremal|, the fallback when
/// no closed-form class bound is known.
class CoeffBoundProvider {
 public:
  enum class Kind { JanowskiProduct, OrderAlphaProduct, ClassicalN, ExtremalDerived };

  static CoeffBoundProvider janowski_product(double D, double E);
  static CoeffBoundProvider order_alpha_product(double alpha);
  static CoeffBoundProvider classical_n();
  static CoeffBoundProvider extremal_derived(Series f0);

  /// M(n) for n >= 1. Products accumulate factor by factor (multiply before
  /// divide), which keeps integer-valued cases exact.
  double bound(int n) const;

  Kind kind() const { return kind_; }

  /// Largest index with stored data; unbounded for the formula providers.
  int max_index() const;

  /// True when a zero bound at some index forces all later bounds to zero
  /// (running products).
  bool zero_terminating() const { return kind_ != Kind::ExtremalDerived; }

  std::string str() const;

 private:
  CoeffBoundProvider() : f0_(0) {}
  Kind kind_ = Kind::ClassicalN;
  double d_ = 1.0;
  double e_ = -1.0;
  double alpha_ = 0.0;
  Series f0_;
};

}  // namespace gbr
