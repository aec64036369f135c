#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace mgof {

// Enumeration would exceed the configured member cap.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::size_t cap, const std::string& what)
      : std::runtime_error(what), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// The extremal problem has an empty constraint set.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Compensated (Neumaier) accumulator. Summation results do not depend on
// how the inputs are chunked as long as the order within a chunk sequence
// is fixed, which keeps reductions reproducible.
class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace mgof
