#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbr/coeff_bounds.hpp"

namespace gbr {

/// The weight family {phi_n(r)} of a generalized Bohr sum. Every supported
/// variant is an index-masked power weight: phi_n(r) = r^n on the active
/// index set, 0 elsewhere. (Non-power weight shapes would defeat the
/// geometric tail certification and are out of scope.)
class WeightSequence {
 public:
  enum class Kind { PowerTail, OddPowers, EvenPowers, Masked };

  static WeightSequence power_tail(int N);               // active n >= N
  static WeightSequence odd_powers();                    // active n = 1,3,5,...
  static WeightSequence even_powers();                   // active n = 2,4,6,...
  static WeightSequence masked(std::vector<int> indices);  // explicit finite set

  /// Accepts "tail:N", "odd", "even", "mask:1,3,5" and "mask:" (empty).
  static WeightSequence parse(const std::string& spec);

  double weight(int n, double r) const;  // phi_n(r)
  bool active(int n) const;
  /// Smallest active index > n, if any.
  std::optional<int> next_active(int n) const;
  bool finite() const { return kind_ == Kind::Masked; }

  Kind kind() const { return kind_; }
  int tail_start() const { return tail_start_; }
  std::string str() const;

 private:
  WeightSequence() = default;
  Kind kind_ = Kind::PowerTail;
  int tail_start_ = 1;
  std::vector<int> mask_;  // sorted, unique
};

struct WeightedSum {
  double value = 0.0;
  double tail_bound = 0.0;  // certified bound on the omitted remainder
  long terms = 0;
};

/// sum_{n>=1} M(n) phi_n(r), extended until both the running term and a
/// geometric tail bound drop below tol. Throws DivergenceError when the
/// observed term ratio reaches 1 or the sum cannot be certified.
WeightedSum weighted_sum(const CoeffBoundProvider& bounds, const WeightSequence& weights,
                         double r, double tol = 1e-14);

}  // namespace gbr
