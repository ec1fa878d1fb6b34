#pragma once

// Max-plus spans of entire functions and the shortest-length machinery.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropical/maxplus.hpp"
#include "tropical/piecewise.hpp"

namespace tropical {

class SpanBasis {
 public:
  // Throws InvalidArgument when empty or with repeated functions, NotEntire
  // (with the index) for a non-convex member.
  explicit SpanBasis(std::vector<PiecewiseLinear> functions);

  std::span<const PiecewiseLinear> functions() const noexcept { return functions_; }
  std::size_t size() const noexcept { return functions_.size(); }
  const PiecewiseLinear& operator[](std::size_t k) const { return functions_[k]; }

 private:
  std::vector<PiecewiseLinear> functions_;
};

// a_k = inf (f - g_k), Bottom when unbounded below. This is the largest
// coefficient vector with (+) a_k (.) g_k <= f.
std::vector<MaxPlus> residuate(const PiecewiseLinear& f, std::span<const PiecewiseLinear> basis);

// The residuated coefficients when they reproduce f exactly.
std::optional<std::vector<MaxPlus>> span_membership(const PiecewiseLinear& f, const SpanBasis& basis);

// Throws NotInSpan.
std::size_t shortest_length(const PiecewiseLinear& f, const SpanBasis& basis);

// shortest_length(f) == basis size. Throws NotInSpan.
bool is_complete(const PiecewiseLinear& f, const SpanBasis& basis);

// Number of non-complete members. Throws NotInSpan with the member index.
std::size_t degree_of_degeneracy(std::span<const PiecewiseLinear> q, const SpanBasis& basis);

struct DimensionProbe {
  std::size_t lower_bound = 0;
  bool certified_max = false;  // lower_bound reached the basis size
};

// Never reports less than 1. Throws NotInSpan with the probe index.
DimensionProbe dimension_probe(const SpanBasis& basis, std::span<const PiecewiseLinear> probes);

}  // namespace tropical
