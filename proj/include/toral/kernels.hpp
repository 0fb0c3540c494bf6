#pragma once

// First-hit search over an index range. The serial version is the reference;
// the parallel one must return the identical (smallest) index.

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

namespace toral {

template <class Pred>
std::optional<std::uint64_t> first_hit_serial(std::uint64_t count, Pred && pred)
{
    for (std::uint64_t i = 0; i < count; ++i)
        if (pred(i)) return i;
    return std::nullopt;
}

template <class Pred>
std::optional<std::uint64_t> first_hit_parallel(std::uint64_t count, Pred && pred, std::uint64_t chunk = 512)
{
    if (count == 0) return std::nullopt;
    if (chunk == 0) chunk = 1;
    std::uint64_t const none = count;
    std::atomic<std::uint64_t> best{none};
    auto const nchunks = static_cast<std::int64_t>((count + chunk - 1) / chunk);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        std::uint64_t const lo = static_cast<std::uint64_t>(c) * chunk;
        if (lo >= best.load(std::memory_order_relaxed)) continue;
        std::uint64_t const hi = lo + chunk < count ? lo + chunk : count;
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (i >= best.load(std::memory_order_relaxed)) break;
            if (pred(i)) {
                std::uint64_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                break;
            }
        }
    }
    std::uint64_t const b = best.load();
    if (b == none) return std::nullopt;
    return b;
}

// Coordinate vectors in the cube [-s, s]^n, indexed with the first coordinate
// varying fastest and each coordinate running 0, 1, -1, 2, -2, ...
inline std::uint64_t shell_cube_size(std::size_t n, std::int64_t s)
{
    std::uint64_t c = 1;
    for (std::size_t k = 0; k < n; ++k)
        c *= static_cast<std::uint64_t>(2 * s + 1);
    return c;
}

inline std::vector<std::int64_t> shell_cube_point(std::size_t n, std::int64_t s, std::uint64_t index)
{
    std::vector<std::int64_t> v(n);
    auto const radix = static_cast<std::uint64_t>(2 * s + 1);
    for (std::size_t k = 0; k < n; ++k) {
        auto const d = static_cast<std::int64_t>(index % radix);
        index /= radix;
        v[k] = (d % 2 == 1) ? (d + 1) / 2 : -(d / 2);
    }
    return v;
}

// Points of the cube with max |c_k| = s exactly, grouped by the first k
// attaining s: earlier coordinates lie in [-(s-1), s-1], c_k = +s or -s,
// later ones in [-s, s].
inline std::uint64_t shell_size(std::size_t n, std::int64_t s)
{
    if (s == 0) return 1;
    return shell_cube_size(n, s) - shell_cube_size(n, s - 1);
}

inline std::vector<std::int64_t> shell_point(std::size_t n, std::int64_t s, std::uint64_t index)
{
    if (s == 0) return std::vector<std::int64_t>(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t const inner = shell_cube_size(k, s - 1);
        std::uint64_t const outer = shell_cube_size(n - k - 1, s);
        std::uint64_t const block = inner * 2 * outer;
        if (index >= block) {
            index -= block;
            continue;
        }
        std::vector<std::int64_t> v = shell_cube_point(k, s - 1, index % inner);
        index /= inner;
        v.push_back(index % 2 == 0 ? s : -s);
        index /= 2;
        auto const tail = shell_cube_point(n - k - 1, s, index);
        v.insert(v.end(), tail.begin(), tail.end());
        return v;
    }
    return {};
}

inline std::int64_t max_abs(std::vector<std::int64_t> const & v)
{
    std::int64_t m = 0;
    for (auto x : v)
        m = x < 0 ? (-x > m ? -x : m) : (x > m ? x : m);
    return m;
}

} // namespace toral
