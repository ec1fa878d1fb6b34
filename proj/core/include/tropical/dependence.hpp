#pragma once

// Gondran-Minoux linear dependence of piecewise-linear functions:
//   max_{i in I} (alpha_i + f_i) == max_{j in J} (alpha_j + f_j)
// for a partition I, J of the indices.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropical/maxplus.hpp"
#include "tropical/piecewise.hpp"

namespace tropical {

struct DependenceCertificate {
  std::vector<std::size_t> I;
  std::vector<std::size_t> J;
  std::vector<MaxPlus> alpha;  // indexed by function, not by position in I/J

  friend bool operator==(const DependenceCertificate&, const DependenceCertificate&) = default;
};

// Throws InvalidCertificate when the partition or coefficients are malformed
// for `count` functions.
void validate_certificate(const DependenceCertificate& cert, std::size_t count);

// Exact equality of both envelopes over all of R. A side whose coefficients
// are all Bottom is the constant Bottom symbol. Throws InvalidCertificate.
bool verify_dependence(std::span<const PiecewiseLinear> functions, const DependenceCertificate& cert);

inline constexpr std::size_t kDependenceSearchLimit = 12;

struct DependenceSearchConfig {
  // Gauss-Seidel sweeps allowed per partition before giving up on it.
  std::size_t max_sweeps = 512;
};

struct DependenceSearchResult {
  std::optional<DependenceCertificate> certificate;
  // True when the answer is conclusive: a certificate was found, or every
  // partition was solved to its fixed point.
  bool complete = false;
  std::size_t partitions_examined = 0;
  std::size_t partitions_unresolved = 0;
};

// Throws TooManyFunctions above the limit, InvalidArgument for fewer than two.
DependenceSearchResult search_dependence(std::span<const PiecewiseLinear> functions,
                                         const DependenceSearchConfig& config = {});

}  // namespace tropical
