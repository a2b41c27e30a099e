#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "racdraw/layout.hpp"

namespace racdraw {

struct BenchRow {
    std::int64_t l = 0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    double seconds = 0;       // median wall time of one construction
    double ns_per_item = 0;   // seconds / (n + m), in nanoseconds
};

/// Times draw_complete(l^4) for l = 2..l_max. Each sample repeats the
/// construction until at least `min_sample` has elapsed; the row reports the
/// median of `repeat` samples.
inline std::vector<BenchRow> bench_construction(std::int64_t l_max, int repeat,
                                                std::chrono::duration<double> min_sample = std::chrono::milliseconds(50)) {
    if (l_max < 2) throw Error(ErrorKind::LimitExceeded, "l-max must be ≥ 2");
    if (repeat < 1) repeat = 1;
    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    for (std::int64_t l = 2; l <= l_max; ++l) {
        const std::int64_t n = l * l * l * l;
        std::vector<double> samples;
        volatile std::size_t sink = 0;
        for (int r = 0; r < repeat; ++r) {
            std::int64_t iters = 0;
            const auto start = clock::now();
            auto now = start;
            do {
                const Drawing d = draw_complete(n);
                sink = sink + d.edges.size();
                ++iters;
                now = clock::now();
            } while (now - start < min_sample);
            samples.push_back(std::chrono::duration<double>(now - start).count() / static_cast<double>(iters));
        }
        std::sort(samples.begin(), samples.end());
        BenchRow row;
        row.l = l;
        row.n = n;
        row.m = n * (n - 1) / 2;
        row.seconds = samples[samples.size() / 2];
        row.ns_per_item = row.seconds * 1e9 / static_cast<double>(row.n + row.m);
        rows.push_back(row);
    }
    return rows;
}

} // namespace racdraw
