#include "tropical/dependence.hpp"

#include <string>

#include "tropical/error.hpp"

namespace tropical {

namespace {

// max over k in side of alpha_k + f_k; nullopt when every alpha_k is Bottom.
std::optional<PiecewiseLinear> side_envelope(std::span<const PiecewiseLinear> functions,
                                             const std::vector<std::size_t>& side,
                                             const std::vector<MaxPlus>& alpha) {
  std::vector<PiecewiseLinear> terms;
  for (std::size_t k : side) {
    if (alpha[k].is_finite()) terms.push_back(add_constant(functions[k], alpha[k].value()));
  }
  if (terms.empty()) return std::nullopt;
  return tmax_all(terms);
}

// The sweep map S commutes with adding a constant to every coefficient. If
// S^p(a) = a + c with c < 0 then the iterates fall without bound, so the only
// solution below the start is all-Bottom.
bool uniform_drift(const std::vector<std::vector<MaxPlus>>& history, const std::vector<MaxPlus>& current) {
  constexpr std::size_t kMaxPeriod = 8;
  for (std::size_t p = 1; p <= kMaxPeriod && p <= history.size(); ++p) {
    const auto& past = history[history.size() - p];
    std::optional<Rational> shift;
    bool uniform = true;
    for (std::size_t k = 0; k < current.size() && uniform; ++k) {
      if (past[k].is_bottom() != current[k].is_bottom()) {
        uniform = false;
      } else if (current[k].is_finite()) {
        Rational d = current[k].value() - past[k].value();
        if (!shift) {
          shift = d;
        } else if (*shift != d) {
          uniform = false;
        }
      }
    }
    if (uniform && shift && *shift < 0) return true;
  }
  return false;
}

}  // namespace

void validate_certificate(const DependenceCertificate& cert, std::size_t count) {
  if (cert.alpha.size() != count) {
    throw Error(ErrorCode::InvalidCertificate, "coefficient count " + std::to_string(cert.alpha.size()) +
                                                   " does not match " + std::to_string(count) + " functions");
  }
  if (cert.I.empty() || cert.J.empty()) throw Error(ErrorCode::InvalidCertificate, "I and J must be nonempty");
  std::vector<int> seen(count, 0);
  for (const auto* side : {&cert.I, &cert.J}) {
    for (std::size_t k : *side) {
      if (k >= count) throw Error(ErrorCode::InvalidCertificate, "index " + std::to_string(k) + " out of range");
      if (seen[k]++) throw Error(ErrorCode::InvalidCertificate, "index " + std::to_string(k) + " repeated");
    }
  }
  for (std::size_t k = 0; k < count; ++k) {
    if (!seen[k]) throw Error(ErrorCode::InvalidCertificate, "index " + std::to_string(k) + " not covered");
  }
  bool any_finite = false;
  for (const auto& a : cert.alpha) any_finite = any_finite || a.is_finite();
  if (!any_finite) throw Error(ErrorCode::InvalidCertificate, "all coefficients are Bottom");
}

bool verify_dependence(std::span<const PiecewiseLinear> functions, const DependenceCertificate& cert) {
  validate_certificate(cert, functions.size());
  auto lhs = side_envelope(functions, cert.I, cert.alpha);
  auto rhs = side_envelope(functions, cert.J, cert.alpha);
  return lhs == rhs;
}

DependenceSearchResult search_dependence(std::span<const PiecewiseLinear> functions,
                                         const DependenceSearchConfig& config) {
  const std::size_t n = functions.size();
  if (n > kDependenceSearchLimit) {
    throw Error(ErrorCode::TooManyFunctions,
                "dependence search limited to " + std::to_string(kDependenceSearchLimit) + " functions");
  }
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "dependence search needs at least two functions");

  DependenceSearchResult result;
  // Index 0 always sits in I, which removes the I <-> J mirror duplicates.
  const std::size_t partitions = std::size_t{1} << (n - 1);
  for (std::size_t mask = 0; mask + 1 < partitions; ++mask) {
    DependenceCertificate cert;
    cert.I.push_back(0);
    for (std::size_t k = 1; k < n; ++k) {
      if (mask & (std::size_t{1} << (k - 1))) {
        cert.I.push_back(k);
      } else {
        cert.J.push_back(k);
      }
    }
    ++result.partitions_examined;

    // Greatest solution of alpha_k + f_k <= envelope of the other side,
    // starting from alpha = 0 (any solution can be shifted to have max 0).
    std::vector<bool> in_i(n, false);
    for (std::size_t k : cert.I) in_i[k] = true;
    std::vector<MaxPlus> alpha(n, MaxPlus::unit());
    std::vector<std::vector<MaxPlus>> history;
    bool fixed = false;
    bool drifting = false;
    for (std::size_t sweep = 0; sweep < config.max_sweeps && !fixed && !drifting; ++sweep) {
      history.push_back(alpha);
      fixed = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (alpha[k].is_bottom()) continue;
        auto other = side_envelope(functions, in_i[k] ? cert.J : cert.I, alpha);
        std::optional<Rational> bound;
        if (other) bound = infimum(tminus(*other, functions[k]));
        if (!bound) {
          alpha[k] = MaxPlus::bottom();
          fixed = false;
        } else if (*bound < alpha[k].value()) {
          alpha[k] = MaxPlus(*bound);
          fixed = false;
        }
      }
      if (!fixed) drifting = uniform_drift(history, alpha);
    }
    if (drifting) continue;
    if (!fixed) {
      ++result.partitions_unresolved;
      continue;
    }
    bool any_finite = false;
    for (const auto& a : alpha) any_finite = any_finite || a.is_finite();
    if (!any_finite) continue;

    cert.alpha = std::move(alpha);
    if (!verify_dependence(functions, cert)) {
      throw Error(ErrorCode::InternalInconsistency, "fixed point of the dependence solver failed verification");
    }
    result.certificate = std::move(cert);
    result.complete = true;
    return result;
  }
  result.complete = result.partitions_unresolved == 0;
  return result;
}

}  // namespace tropical
