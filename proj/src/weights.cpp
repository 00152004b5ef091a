#include "gbr/weights.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace gbr {

WeightSequence WeightSequence::power_tail(int N) {
  if (N < 1) throw PreconditionError("power tail requires N >= 1");
  WeightSequence w;
  w.kind_ = Kind::PowerTail;
  w.tail_start_ = N;
  return w;
}

WeightSequence WeightSequence::odd_powers() {
  WeightSequence w;
  w.kind_ = Kind::OddPowers;
  return w;
}

WeightSequence WeightSequence::even_powers() {
  WeightSequence w;
  w.kind_ = Kind::EvenPowers;
  return w;
}

WeightSequence WeightSequence::masked(std::vector<int> indices) {
  for (int n : indices)
    if (n < 1) throw PreconditionError("mask indices start at 1");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  WeightSequence w;
  w.kind_ = Kind::Masked;
  w.mask_ = std::move(indices);
  return w;
}

WeightSequence WeightSequence::parse(const std::string& spec) {
  if (spec == "odd") return odd_powers();
  if (spec == "even") return even_powers();
  if (spec.rfind("tail:", 0) == 0) {
    const int n = std::stoi(spec.substr(5));
    return power_tail(n);
  }
  if (spec.rfind("mask:", 0) == 0) {
    std::vector<int> idx;
    std::istringstream in(spec.substr(5));
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!tok.empty()) idx.push_back(std::stoi(tok));
    return masked(std::move(idx));
  }
  throw PreconditionError("unknown weight spec: " + spec);
}

double WeightSequence::weight(int n, double r) const {
  if (n < 0) throw PreconditionError("weight index must be >= 0");
  return active(n) ? std::pow(r, n) : 0.0;
}

bool WeightSequence::active(int n) const {
  if (n < 1) return false;
  switch (kind_) {
    case Kind::PowerTail: return n >= tail_start_;
    case Kind::OddPowers: return n % 2 == 1;
    case Kind::EvenPowers: return n % 2 == 0;
    case Kind::Masked: return std::binary_search(mask_.begin(), mask_.end(), n);
  }
  return false;
}

std::optional<int> WeightSequence::next_active(int n) const {
  switch (kind_) {
    case Kind::PowerTail: return std::max(n + 1, tail_start_);
    case Kind::OddPowers: return n < 1 ? 1 : (n % 2 == 1 ? n + 2 : n + 1);
    case Kind::EvenPowers: return n < 2 ? 2 : (n % 2 == 0 ? n + 2 : n + 1);
    case Kind::Masked: {
      auto it = std::upper_bound(mask_.begin(), mask_.end(), n);
      if (it == mask_.end()) return std::nullopt;
      return *it;
    }
  }
  return std::nullopt;
}

std::string WeightSequence::str() const {
  switch (kind_) {
    case Kind::PowerTail: return "tail:" + std::to_string(tail_start_);
    case Kind::OddPowers: return "odd";
    case Kind::EvenPowers: return "even";
    case Kind::Masked: {
      std::ostringstream out;
      out << "mask:";
      for (size_t i = 0; i < mask_.size(); ++i) {
        if (i) out << ',';
        out << mask_[i];
      }
      return out.str();
    }
  }
  return "?";
}

WeightedSum weighted_sum(const CoeffBoundProvider& bounds, const WeightSequence& weights,
                         double r, double tol) {
  if (r < 0.0 || r >= 1.0) throw PreconditionError("weighted_sum requires r in [0,1)");
  WeightedSum out;
  if (r == 0.0) return out;

  constexpr int kMaxTerms = 20000;
  std::deque<double> ratios;
  double prev_term = 0.0;
  int n = 0;

  while (true) {
    const auto next = weights.next_active(n);
    if (!next) return out;  // finite mask exhausted: the sum is exact
    n = *next;
    if (n > bounds.max_index()) break;  // stored-extremal data exhausted

    const double term = bounds.bound(n) * std::pow(r, n);
    out.value += term;
    ++out.terms;

    if (term == 0.0) {
      if (bounds.zero_terminating()) return out;  // running product stays zero
      continue;
    }
    if (prev_term > 0.0) {
      ratios.push_back(term / prev_term);
      if (ratios.size() > 8) ratios.pop_front();
    }
    prev_term = term;

    if (ratios.size() >= 4) {
      const double q = *std::max_element(ratios.begin(), ratios.end());
      if (q < 1.0) {
        out.tail_bound = term * q / (1.0 - q);
        if (term <= tol && out.tail_bound <= tol) return out;
      }
    }
    if (out.terms >= kMaxTerms) {
      std::ostringstream msg;
      msg << "weighted sum not certified below tolerance at r=" << r << " after " << out.terms
          << " terms";
      throw DivergenceError(msg.str(), r);
    }
  }

  // Ran past the stored extremal coefficients: certify the remainder from the
  // observed decay, or refuse.
  if (!ratios.empty()) {
    const double q = *std::max_element(ratios.begin(), ratios.end());
    if (q < 1.0) {
      out.tail_bound = prev_term * q / (1.0 - q);
      if (out.tail_bound <= tol) return out;
    }
  } else if (prev_term == 0.0) {
    return out;  // nothing beyond zeros
  }
  throw DivergenceError("stored extremal data ends before the sum is certified", r);
}

}  // namespace gbr
