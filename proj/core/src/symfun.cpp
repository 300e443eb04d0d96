#include "bundle_census/symfun.hpp"

namespace bundle_census {

const BigInt& StirlingTable::operator()(std::size_t r, std::size_t k) {
    if (k > r) throw DomainError("stirling_first: k > r");
    extend_to(r);
    return rows_[r][k];
}

void StirlingTable::extend_to(std::size_t r) {
    while (rows_.size() <= r) {
        const std::size_t row = rows_.size();
        const auto& prev = rows_.back();
        std::vector<BigInt> next(row + 1, BigInt(0));
        // s(r, k) = s(r-1, k-1) - (r-1) s(r-1, k)
        for (std::size_t k = 1; k <= row; ++k) {
            next[k] = prev[k - 1];
            if (k < prev.size()) next[k] -= BigInt(row - 1) * prev[k];
        }
        rows_.push_back(std::move(next));
    }
}

BigInt stirling_first(long r, long k) {
    if (r < 0 || k < 0) throw DomainError("stirling_first: negative argument");
    if (k > r) throw DomainError("stirling_first: k > r");
    thread_local StirlingTable table;
    return table(static_cast<std::size_t>(r), static_cast<std::size_t>(k));
}

PowerSums newton_power_sums(std::span<const BigInt> elementary, std::size_t max_degree) {
    if (max_degree == 0) throw DomainError("newton_power_sums: max degree must be at least 1");
    PowerSums out;
    out.n = elementary.size();
    out.values.reserve(max_degree);
    auto e = [&](std::size_t i) -> BigInt { return i <= elementary.size() ? elementary[i - 1] : BigInt(0); };
    for (std::size_t k = 1; k <= max_degree; ++k) {
        // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
        BigInt pk = BigInt(k) * e(k);
        if (k % 2 == 0) pk = -pk;
        for (std::size_t i = 1; i < k && i <= elementary.size(); ++i) {
            BigInt term = elementary[i - 1] * out.values[k - i - 1];
            if (i % 2 == 0) {
                pk -= term;
            } else {
                pk += term;
            }
        }
        out.values.push_back(std::move(pk));
    }
    return out;
}

PowerSums newton_power_sums(const ChernVector& c, std::size_t max_degree) {
    PowerSums out = newton_power_sums(c.classes(), max_degree);
    out.n = c.rank();
    return out;
}

namespace {

ExactRational binomial_sum_from(const PowerSums& sums, std::size_t r, StirlingTable& stirling) {
    BigInt numerator = 0;
    BigInt factorial = 1;
    for (std::size_t k = 1; k <= r; ++k) {
        numerator += stirling(r, k) * sums.p(k);
        factorial *= k;
    }
    return ExactRational(numerator, factorial);
}

} // namespace

ExactRational binomial_sum(std::span<const BigInt> elementary, std::size_t r) {
    if (r == 0) throw DomainError("binomial_sum: r must be at least 1");
    thread_local StirlingTable stirling;
    return binomial_sum_from(newton_power_sums(elementary, r), r, stirling);
}

ExactRational binomial_sum(const ChernVector& c, std::size_t r) { return binomial_sum(c.classes(), r); }

std::vector<ExactRational> binomial_sums(std::span<const BigInt> elementary, std::size_t max_degree) {
    thread_local StirlingTable stirling;
    const PowerSums sums = newton_power_sums(elementary, max_degree);
    std::vector<ExactRational> out;
    out.reserve(max_degree);
    for (std::size_t r = 1; r <= max_degree; ++r) out.push_back(binomial_sum_from(sums, r, stirling));
    return out;
}

std::vector<BigInt> elementary_symmetric(std::span<const BigInt> roots) {
    // Coefficients of prod_j (1 + d_j t), built one factor at a time.
    std::vector<BigInt> e(roots.size() + 1, BigInt(0));
    e[0] = 1;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        for (std::size_t i = j + 1; i >= 1; --i) e[i] += roots[j] * e[i - 1];
    }
    e.erase(e.begin());
    return e;
}

} // namespace bundle_census
