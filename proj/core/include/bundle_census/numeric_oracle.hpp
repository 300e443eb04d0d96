#pragma once

// Floating-point cross-check of the exact engine: find the Chern roots
// numerically and sum the binomial coefficients C(delta_j, r) directly.
// Nothing here decides integrality.

#include "bundle_census/chern_vector.hpp"
#include "bundle_census/exact.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bundle_census {

struct OracleConfig {
    /// Roots are reliable when max |P(root)| < residual_scale * (1 + max |c_i|).
    double residual_scale = 1e-8;
    /// Agreement tolerance before scaling by (1 + max |delta_j|)^r.
    double absolute_tolerance = 1e-6;
    int max_iterations = 2000;
};

/// The Chern roots delta_j, i.e. prod_j (y + delta_j) = y^n + c_1 y^{n-1} + ... + c_n.
struct NumericRoots {
    std::vector<std::complex<double>> roots;
    /// The same roots at the working precision of the iteration; residuals
    /// and binomial sums are evaluated from these.
    std::vector<std::complex<long double>> extended;
    /// Inclusion radius per root: a true root lies within this distance.
    std::vector<double> error_bounds;
    /// max_j |P(-delta_j)| for the monic Chern polynomial P.
    double residual = 0.0;
    double residual_threshold = 0.0;
    bool converged = true;
    bool reliable = true;
};

NumericRoots find_roots(std::span<const BigInt> classes, const OracleConfig& config = {});
/// Uses rank(v) roots; classes beyond the stored range are zero.
NumericRoots find_roots(const ChernVector& v, const OracleConfig& config = {});

struct NumericBinomialSum {
    std::size_t r = 0;
    std::complex<double> value;
    /// 1e-6 * (1 + max |delta_j|)^r by default.
    double tolerance = 0.0;
    /// Propagated root error plus rounding in the falling factorials.
    double error_estimate = 0.0;
    /// |Re value - nearest integer|, diagnostic only.
    double distance_to_integer = 0.0;
    /// Set when the roots are unreliable or the error estimate exceeds the
    /// tolerance; a flagged value is never a disagreement.
    bool flagged = false;
};

NumericBinomialSum binomial_sum_numeric(const NumericRoots& roots, std::size_t r, const OracleConfig& config = {});
NumericBinomialSum binomial_sum_numeric(const ChernVector& v, std::size_t r, const OracleConfig& config = {});

struct Agreement {
    double difference = 0.0;
    bool flagged = false;
    bool agrees = false;
};

/// |exact - Re numeric| < numeric.tolerance, unless flagged.
Agreement compare_with_exact(const ExactRational& exact, const NumericBinomialSum& numeric);

} // namespace bundle_census
