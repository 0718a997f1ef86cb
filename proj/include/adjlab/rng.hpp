#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

namespace adjlab {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937 because the
// output stream is pinned by the algorithm itself, so seeded generators and
// golden test values stay byte-identical across platforms and toolchains.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Modulo bias is irrelevant at our bounds
    // (< 2^32); determinism is what matters here.
    uint64_t bounded(uint64_t bound) {
        assert(bound > 0);
        return next() % bound;
    }

    // Bernoulli(p) with the threshold computed once from the double p.
    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next() < uint64_t(p * 18446744073709551616.0);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = bounded(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct values from [0, n), ascending.
    std::vector<int> sample(int n, int k) {
        assert(0 <= k && k <= n);
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        for (int i = 0; i < k; ++i) {
            int j = i + int(bounded(uint64_t(n - i)));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    uint64_t state_;
};

} // namespace adjlab
