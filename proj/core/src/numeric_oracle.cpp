#include "bundle_census/numeric_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bundle_census {

namespace {

using Real = long double;
using Complex = std::complex<Real>;

constexpr Real kEps = std::numeric_limits<Real>::epsilon();

struct Evaluation {
    Complex value;
    Complex derivative;
    Real magnitude; // sum_i |a_i| |z|^{d-i}, the rounding-error scale of value
};

// P(z) = a[0] z^d + ... + a[d].
Evaluation evaluate(const std::vector<Real>& a, Complex z) {
    Complex p = a[0];
    Complex dp = 0;
    Real mag = std::abs(a[0]);
    const Real az = std::abs(z);
    for (std::size_t i = 1; i < a.size(); ++i) {
        dp = dp * z + p;
        p = p * z + a[i];
        mag = mag * az + std::abs(a[i]);
    }
    return {p, dp, mag};
}

// Aberth-Ehrlich simultaneous iteration, Gauss-Seidel ordering. A root is
// frozen once |P(z)| is at the rounding level of the Horner evaluation.
bool aberth(const std::vector<Real>& a, std::vector<Complex>& z, int max_iterations) {
    const std::size_t d = a.size() - 1;
    Real bound = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        bound = std::max(bound, std::pow(std::abs(a[i]), Real(1) / static_cast<Real>(i)));
    }
    bound = bound > 0 ? 2 * bound : 1;

    z.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
        const Real angle = 2 * std::numbers::pi_v<Real> * static_cast<Real>(k) / static_cast<Real>(d) + Real(0.7);
        z[k] = std::polar(bound, angle);
    }

    std::vector<bool> done(d, false);
    for (int iter = 0; iter < max_iterations; ++iter) {
        bool all_done = true;
        for (std::size_t k = 0; k < d; ++k) {
            if (done[k]) continue;
            const Evaluation ev = evaluate(a, z[k]);
            if (std::abs(ev.value) <= 16 * kEps * ev.magnitude) {
                done[k] = true;
                continue;
            }
            all_done = false;
            if (ev.derivative == Complex(0)) {
                z[k] += Complex(kEps * (1 + std::abs(z[k])), kEps);
                continue;
            }
            const Complex ratio = ev.value / ev.derivative;
            Complex repulsion = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == k) continue;
                const Complex gap = z[k] - z[j];
                if (gap != Complex(0)) repulsion += Real(1) / gap;
            }
            z[k] -= ratio / (Real(1) - ratio * repulsion);
        }
        if (all_done) return true;
    }
    return std::all_of(done.begin(), done.end(), [](bool b) { return b; });
}

} // namespace

NumericRoots find_roots(std::span<const BigInt> classes, const OracleConfig& config) {
    if (classes.empty()) throw DomainError("find_roots: need at least one class");

    std::vector<Real> a(classes.size() + 1);
    a[0] = 1;
    double max_class = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        a[i + 1] = classes[i].convert_to<Real>();
        max_class = std::max(max_class, static_cast<double>(std::abs(a[i + 1])));
    }

    // Trailing zero coefficients are exact zero roots.
    std::size_t zero_roots = 0;
    while (a.size() > 1 && a.back() == 0) {
        a.pop_back();
        ++zero_roots;
    }

    NumericRoots out;
    std::vector<Complex> zeros;
    if (a.size() > 1) out.converged = aberth(a, zeros, config.max_iterations);

    const Real degree = static_cast<Real>(a.size() - 1);
    for (const Complex& zero : zeros) {
        const std::complex<double> root(-static_cast<double>(zero.real()), -static_cast<double>(zero.imag()));
        const Evaluation ev = evaluate(a, zero);
        const Real residual = std::abs(ev.value);
        const Real slope = std::abs(ev.derivative);
        out.residual = std::max(out.residual, static_cast<double>(residual));
        out.error_bounds.push_back(slope > 0 ? static_cast<double>(degree * residual / slope)
                                             : std::numeric_limits<double>::infinity());
        out.roots.push_back(root);
        out.extended.push_back(-zero);
    }
    out.roots.insert(out.roots.end(), zero_roots, std::complex<double>(0.0, 0.0));
    out.extended.insert(out.extended.end(), zero_roots, Complex(0));
    out.error_bounds.insert(out.error_bounds.end(), zero_roots, 0.0);

    out.residual_threshold = config.residual_scale * (1.0 + max_class);
    out.reliable = out.converged && out.residual < out.residual_threshold;
    return out;
}

NumericRoots find_roots(const ChernVector& v, const OracleConfig& config) {
    const std::vector<BigInt> classes = v.padded(v.rank());
    return find_roots(classes, config);
}

NumericBinomialSum binomial_sum_numeric(const NumericRoots& roots, std::size_t r, const OracleConfig& config) {
    if (r == 0) throw DomainError("binomial_sum_numeric: r must be at least 1");

    NumericBinomialSum out;
    out.r = r;

    Real factorial = 1;
    for (std::size_t i = 2; i <= r; ++i) factorial *= static_cast<Real>(i);

    Real max_abs = 0;
    Complex sum = 0;
    Real propagated = 0;
    Real magnitude = 0;
    for (std::size_t j = 0; j < roots.extended.size(); ++j) {
        const Complex delta = roots.extended[j];
        max_abs = std::max(max_abs, std::abs(delta));

        Complex falling = 1;
        Real mag = 1;
        std::vector<Real> gaps(r);
        for (std::size_t i = 0; i < r; ++i) {
            falling *= delta - static_cast<Real>(i);
            gaps[i] = std::abs(delta - static_cast<Real>(i));
            mag *= std::abs(delta) + static_cast<Real>(i);
        }
        sum += falling;
        magnitude += mag;

        // |d/d delta of the falling factorial| <= sum_k prod_{i != k} |delta - i|
        Real slope = 0;
        for (std::size_t k = 0; k < r; ++k) {
            Real term = 1;
            for (std::size_t i = 0; i < r; ++i) {
                if (i != k) term *= gaps[i];
            }
            slope += term;
        }
        propagated += static_cast<Real>(roots.error_bounds[j]) * slope;
    }

    const Complex value = sum / factorial;
    out.value = std::complex<double>(static_cast<double>(value.real()), static_cast<double>(value.imag()));
    out.tolerance = config.absolute_tolerance * std::pow(1.0 + static_cast<double>(max_abs), static_cast<double>(r));
    out.error_estimate = static_cast<double>((propagated + 4 * static_cast<Real>(r) * kEps * magnitude) / factorial) +
                         std::numeric_limits<double>::epsilon() * std::abs(out.value);
    out.distance_to_integer = std::abs(out.value.real() - std::round(out.value.real()));
    out.flagged = !roots.reliable || !(out.error_estimate <= out.tolerance);
    return out;
}

NumericBinomialSum binomial_sum_numeric(const ChernVector& v, std::size_t r, const OracleConfig& config) {
    return binomial_sum_numeric(find_roots(v, config), r, config);
}

Agreement compare_with_exact(const ExactRational& exact, const NumericBinomialSum& numeric) {
    Agreement out;
    out.difference = std::abs(exact.to_double() - numeric.value.real());
    out.flagged = numeric.flagged;
    out.agrees = out.flagged || out.difference < numeric.tolerance;
    return out;
}

} // namespace bundle_census
