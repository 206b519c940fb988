#ifndef DESCENT_METRIC_HPP
#define DESCENT_METRIC_HPP

#include <cstdint>
#include <vector>

namespace descent {

// Diagonal +-1 metric on R^m in the coordinate frame, together with the
// volume form dx^0^...^dx^(m-1). The inverse metric has the same entries.
// Hodge signs are tabulated per basis index at construction.
class Metric {
 public:
  Metric(int dim, std::vector<int> signs);

  static Metric lorentzian(int dim);  // (+, -, ..., -)
  static Metric euclidean(int dim);

  int dimension() const { return dim_; }
  int sign(int axis) const { return signs_[static_cast<std::size_t>(axis)]; }
  const std::vector<int>& signs() const { return signs_; }

  // Negative index of inertia: number of -1 entries.
  int negative_inertia() const { return neg_; }

  std::uint32_t volume_mask() const { return (1u << dim_) - 1u; }

  // Sign c(I) in star(dx^I) = c(I) dx^(complement of I).
  int hodge_sign(std::uint32_t mask) const { return table_[mask]; }

 private:
  int dim_;
  std::vector<int> signs_;
  int neg_;
  std::vector<std::int8_t> table_;
};

}  // namespace descent

#endif
