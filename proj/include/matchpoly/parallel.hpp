#pragma once

#include <cstdint>
#include <future>
#include <utility>
#include <vector>

namespace matchpoly {

// Splits [0, count) into contiguous ranges, folds each with work(begin, end)
// and merges the partial results in range order. All folds here are exact
// rational sums, so the result is independent of the partitioning.
template <class T, class Work, class Merge>
T partitioned_fold(std::uint64_t count, int parts, Work work, Merge merge) {
    if (parts < 1) parts = 1;
    if (count > 0 && static_cast<std::uint64_t>(parts) > count) parts = static_cast<int>(count);
    if (count == 0 || parts == 1) return work(0, count);

    const std::uint64_t chunk = count / parts;
    const std::uint64_t extra = count % parts;
    std::vector<std::future<T>> partials;
    partials.reserve(parts);
    std::uint64_t begin = 0;
    for (int p = 0; p < parts; ++p) {
        const std::uint64_t len = chunk + (static_cast<std::uint64_t>(p) < extra ? 1 : 0);
        const std::uint64_t b = begin;
        const std::uint64_t e = begin + len;
        begin = e;
        partials.push_back(std::async(std::launch::async, [b, e, &work] { return work(b, e); }));
    }
    T acc = partials[0].get();
    for (size_t p = 1; p < partials.size(); ++p) acc = merge(std::move(acc), partials[p].get());
    return acc;
}

}  // namespace matchpoly
