#include <descent/metric.hpp>

#include <descent/poly.hpp>

#include <bit>
#include <stdexcept>

namespace descent {

Metric::Metric(int dim, std::vector<int> signs) : dim_(dim), signs_(std::move(signs)), neg_(0) {
  if (dim < 2 || dim > kMaxDimension) throw std::invalid_argument("metric dimension out of range");
  if (static_cast<int>(signs_.size()) != dim) throw std::invalid_argument("signature length mismatch");
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("signature entries must be +1 or -1");
    if (s < 0) ++neg_;
  }

  // star(dx^I) = (product of metric signs over I) * i_{X_ip} ... i_{X_i1}
  // applied to the volume form, axes of I ascending.
  const std::uint32_t full = volume_mask();
  table_.resize(full + 1u);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    int sgn = 1;
    std::uint32_t remaining = full;
    for (int a = 0; a < dim_; ++a) {
      if (!((mask >> a) & 1u)) continue;
      sgn *= signs_[static_cast<std::size_t>(a)];
      const int pos = std::popcount(remaining & ((1u << a) - 1u));
      if (pos % 2 != 0) sgn = -sgn;
      remaining &= ~(1u << a);
    }
    table_[mask] = static_cast<std::int8_t>(sgn);
  }
}

Metric Metric::lorentzian(int dim) {
  std::vector<int> s(static_cast<std::size_t>(dim), -1);
  s[0] = 1;
  return Metric(dim, std::move(s));
}

Metric Metric::euclidean(int dim) {
  return Metric(dim, std::vector<int>(static_cast<std::size_t>(dim), 1));
}

}  // namespace descent
