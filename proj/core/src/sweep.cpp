#include "bundle_census/sweep.hpp"

#include "bundle_census/chern_vector.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

namespace bundle_census {

void SweepSpec::validate() const {
    if (rank == 0 || dim == 0) throw DomainError("sweep: rank and dim must be at least 1");
    const std::size_t expected = std::min(rank, dim);
    if (bounds.size() != expected) {
        throw DomainError("sweep: rank " + std::to_string(rank) + " on CP^" + std::to_string(dim) + " needs " +
                          std::to_string(expected) + " class intervals, got " + std::to_string(bounds.size()));
    }
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        if (bounds[i].lo > bounds[i].hi) {
            throw DomainError("sweep: empty interval for c_" + std::to_string(i + 1) + " (" +
                              std::to_string(bounds[i].lo) + " > " + std::to_string(bounds[i].hi) + ")");
        }
    }
}

BigInt SweepSpec::tuple_count() const {
    BigInt total = 1;
    for (const auto& b : bounds) total *= BigInt(b.hi) - BigInt(b.lo) + 1;
    return total;
}

std::string count_label(const std::optional<unsigned>& count) {
    return count ? std::to_string(*count) : std::string("unknown");
}

ResultRecord make_record(std::vector<BigInt> classes, const BundleCount& count) {
    ResultRecord record;
    record.classes = std::move(classes);
    record.count = count.count;
    record.regime = count.regime;
    record.one_class_extends = count.one_class_extends;
    if (count.report) {
        for (const auto& entry : count.report->failures()) record.failing_r.emplace_back(entry.r, entry.value);
    }
    return record;
}

ResultRecord evaluate_tuple(std::size_t rank, std::size_t dim, std::vector<BigInt> classes) {
    ChernVector v(rank, dim, classes);
    if (dim == rank + 1 && !reduce_stable(v.padded(dim), rank, dim)) {
        throw std::logic_error("sweep: corank-one tuple without a rank-n representative");
    }
    return make_record(std::move(classes), count_bundles(v));
}

namespace {

std::vector<BigInt> tuple_at(const SweepSpec& spec, std::size_t index) {
    std::vector<BigInt> classes(spec.bounds.size());
    for (std::size_t i = spec.bounds.size(); i-- > 0;) {
        const auto width = static_cast<std::size_t>(spec.bounds[i].hi - spec.bounds[i].lo + 1);
        classes[i] = BigInt(spec.bounds[i].lo) + BigInt(index % width);
        index /= width;
    }
    return classes;
}

} // namespace

std::vector<ResultRecord> run_sweep(const SweepSpec& spec, unsigned jobs) {
    spec.validate();
    const BigInt total_big = spec.tuple_count();
    if (total_big > BigInt(std::numeric_limits<std::size_t>::max() / sizeof(ResultRecord))) {
        throw DomainError("sweep: box too large to materialize");
    }
    const auto total = total_big.convert_to<std::size_t>();
    std::vector<ResultRecord> records(total);

    const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
        constexpr std::size_t chunk = 64;
        try {
            for (;;) {
                const std::size_t start = next.fetch_add(chunk);
                if (start >= total || failed.load()) return;
                const std::size_t stop = std::min(total, start + chunk);
                for (std::size_t i = start; i < stop; ++i) {
                    records[i] = evaluate_tuple(spec.rank, spec.dim, tuple_at(spec, i));
                }
            }
        } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

SweepSummary summarize(const std::vector<ResultRecord>& records) {
    SweepSummary summary{{"0", 0}, {"1", 0}, {"2", 0}, {"unknown", 0}};
    for (const auto& record : records) ++summary[count_label(record.count)];
    return summary;
}

} // namespace bundle_census
