#include "bundle_census/chern.hpp"

#include "bundle_census/symfun.hpp"

#include <algorithm>
#include <string>

namespace bundle_census {

ChernPolynomial::ChernPolynomial(std::size_t dim) : coeffs_(dim + 1, BigInt(0)) { coeffs_[0] = 1; }

ChernPolynomial::ChernPolynomial(std::size_t dim, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != dim + 1) {
        throw DomainError("ChernPolynomial: expected " + std::to_string(dim + 1) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
    }
    if (coeffs_[0] != 1) throw DomainError("ChernPolynomial: constant term must be 1");
}

ChernPolynomial total_chern(const ChernVector& v) {
    std::vector<BigInt> coeffs(v.dim() + 1, BigInt(0));
    coeffs[0] = 1;
    const auto classes = v.classes();
    for (std::size_t i = 1; i <= classes.size() && i <= v.dim(); ++i) coeffs[i] = classes[i - 1];
    return ChernPolynomial(v.dim(), std::move(coeffs));
}

ChernPolynomial whitney_sum(const ChernPolynomial& a, const ChernPolynomial& b) {
    if (a.dim() != b.dim()) {
        throw DomainError("whitney_sum: ambient dimensions differ (CP^" + std::to_string(a.dim()) + " vs CP^" +
                          std::to_string(b.dim()) + ")");
    }
    const std::size_t m = a.dim();
    std::vector<BigInt> out(m + 1, BigInt(0));
    for (std::size_t i = 0; i <= m; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= m; ++j) out[i + j] += a[i] * b[j];
    }
    return ChernPolynomial(m, std::move(out));
}

ChernVector twist_by_line(const ChernVector& v, const BigInt& d) {
    const std::size_t n = v.rank();
    const std::size_t stored = v.classes().size();
    std::vector<BigInt> powers(stored + 1, BigInt(1));
    for (std::size_t i = 1; i <= stored; ++i) powers[i] = powers[i - 1] * d;

    std::vector<BigInt> out(stored, BigInt(0));
    for (std::size_t k = 1; k <= stored; ++k) {
        BigInt ck = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            const BigInt ci = i == 0 ? BigInt(1) : v.c(i);
            if (ci == 0) continue;
            ck += binomial(static_cast<long>(n - i), static_cast<long>(k - i)) * ci * powers[k - i];
        }
        out[k - 1] = std::move(ck);
    }
    return ChernVector(n, v.dim(), std::move(out));
}

ChernVector dual(const ChernVector& v) {
    std::vector<BigInt> out(v.classes().begin(), v.classes().end());
    for (std::size_t i = 0; i < out.size(); i += 2) out[i] = -out[i];
    return ChernVector(v.rank(), v.dim(), std::move(out));
}

ChernVector line_bundle_sum(std::size_t dim, std::span<const BigInt> degrees) {
    return ChernVector(degrees.size(), dim, elementary_symmetric(degrees));
}

} // namespace bundle_census
