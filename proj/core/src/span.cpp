#include "tropical/span.hpp"

#include <algorithm>
#include <string>

#include "tropical/error.hpp"

namespace tropical {

SpanBasis::SpanBasis(std::vector<PiecewiseLinear> functions) : functions_(std::move(functions)) {
  if (functions_.empty()) throw Error(ErrorCode::InvalidArgument, "span basis is empty");
  for (std::size_t k = 0; k < functions_.size(); ++k) {
    if (!is_entire(functions_[k])) {
      throw Error(ErrorCode::NotEntire, "basis function " + std::to_string(k) + " is not entire", k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (functions_[j] == functions_[k]) {
        throw Error(ErrorCode::InvalidArgument,
                    "basis functions " + std::to_string(j) + " and " + std::to_string(k) + " coincide");
      }
    }
  }
}

std::vector<MaxPlus> residuate(const PiecewiseLinear& f, std::span<const PiecewiseLinear> basis) {
  std::vector<MaxPlus> coeffs;
  coeffs.reserve(basis.size());
  for (const auto& g : basis) {
    auto inf = infimum(tminus(f, g));
    coeffs.push_back(inf ? MaxPlus(*inf) : MaxPlus::bottom());
  }
  return coeffs;
}

namespace {

bool reproduces(const PiecewiseLinear& f, std::span<const PiecewiseLinear> fns) {
  auto coeffs = residuate(f, fns);
  auto combo = linear_combination(coeffs, fns);
  return combo && *combo == f;
}

// Advances a sorted k-subset of {0..n-1} to the next one in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<MaxPlus>> span_membership(const PiecewiseLinear& f, const SpanBasis& basis) {
  auto coeffs = residuate(f, basis.functions());
  auto combo = linear_combination(coeffs, basis.functions());
  if (!combo || *combo != f) return std::nullopt;
  return coeffs;
}

std::size_t shortest_length(const PiecewiseLinear& f, const SpanBasis& basis) {
  if (!span_membership(f, basis)) throw Error(ErrorCode::NotInSpan, "function is not in the span");
  const std::size_t n = basis.size();
  for (std::size_t size = 1; size < n; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    do {
      std::vector<PiecewiseLinear> subset;
      subset.reserve(size);
      for (std::size_t i : idx) subset.push_back(basis[i]);
      if (reproduces(f, subset)) return size;
    } while (next_combination(idx, n));
  }
  return n;
}

bool is_complete(const PiecewiseLinear& f, const SpanBasis& basis) {
  return shortest_length(f, basis) == basis.size();
}

std::size_t degree_of_degeneracy(std::span<const PiecewiseLinear> q, const SpanBasis& basis) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (!span_membership(q[k], basis)) {
      throw Error(ErrorCode::NotInSpan, "member " + std::to_string(k) + " is not in the span", k);
    }
    if (!is_complete(q[k], basis)) ++count;
  }
  return count;
}

DimensionProbe dimension_probe(const SpanBasis& basis, std::span<const PiecewiseLinear> probes) {
  DimensionProbe probe{1, false};
  for (std::size_t k = 0; k < probes.size(); ++k) {
    if (!span_membership(probes[k], basis)) {
      throw Error(ErrorCode::NotInSpan, "probe " + std::to_string(k) + " is not in the span", k);
    }
    probe.lower_bound = std::max(probe.lower_bound, shortest_length(probes[k], basis));
  }
  probe.certified_max = probe.lower_bound == basis.size();
  return probe;
}

}  // namespace tropical
