#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "adjlab/contiguity.hpp"
#include "adjlab/errors.hpp"
#include "adjlab/graph.hpp"

namespace adjlab {

// A finite bitstring, MSB-first within bytes, zero-padded tail.
struct Label {
    std::vector<uint8_t> bytes;
    int bit_len = 0;

    bool operator==(const Label& o) const = default;

    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        s.reserve(bytes.size() * 2);
        for (uint8_t b : bytes) {
            s.push_back(digits[b >> 4]);
            s.push_back(digits[b & 15]);
        }
        return s;
    }

    static Label from_hex(const std::string& hex, int bit_len) {
        if (hex.size() % 2 != 0) throw input_error("label hex string has odd length");
        Label l;
        l.bit_len = bit_len;
        l.bytes.reserve(hex.size() / 2);
        auto nibble = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            throw input_error("bad hex digit in label");
        };
        for (size_t i = 0; i < hex.size(); i += 2)
            l.bytes.push_back(uint8_t(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
        if (int(l.bytes.size()) != (bit_len + 7) / 8)
            throw input_error("label length does not match bit count");
        return l;
    }
};

class BitWriter {
public:
    void push_bit(bool b) {
        if (label_.bit_len % 8 == 0) label_.bytes.push_back(0);
        if (b) label_.bytes.back() |= uint8_t(1 << (7 - label_.bit_len % 8));
        ++label_.bit_len;
    }
    // value written MSB-first in exactly `width` bits
    void push_uint(uint64_t value, int width) {
        for (int i = width - 1; i >= 0; --i) push_bit((value >> i) & 1);
    }
    // Elias gamma code of x >= 1: floor(log2 x) zeros, then x in binary.
    void push_gamma(uint64_t x) {
        int len = 63 - std::countl_zero(x);
        for (int i = 0; i < len; ++i) push_bit(false);
        push_uint(x, len + 1);
    }
    Label take() { return std::move(label_); }

private:
    Label label_;
};

class BitReader {
public:
    explicit BitReader(const Label& l) : label_(l) {}

    bool pull_bit() {
        if (pos_ >= label_.bit_len) throw decode_error("label truncated");
        bool b = (label_.bytes[pos_ / 8] >> (7 - pos_ % 8)) & 1;
        ++pos_;
        return b;
    }
    uint64_t pull_uint(int width) {
        uint64_t v = 0;
        for (int i = 0; i < width; ++i) v = v << 1 | uint64_t(pull_bit());
        return v;
    }
    uint64_t pull_gamma() {
        int zeros = 0;
        while (!pull_bit()) ++zeros;
        uint64_t v = 1;
        for (int i = 0; i < zeros; ++i) v = v << 1 | uint64_t(pull_bit());
        return v;
    }
    int position() const { return pos_; }

private:
    const Label& label_;
    int pos_ = 0;
};

inline int gamma_length(uint64_t x) { return 2 * (63 - std::countl_zero(x)) + 1; }

// Field width for positions/ids/counts; every such value fits below 2^w.
inline int label_width(int n) {
    int w = 0;
    while ((1LL << w) < n) ++w;
    return std::max(1, w);
}

enum class Scheme { interval, degeneracy };

inline std::string scheme_name(Scheme s) {
    return s == Scheme::interval ? "interval" : "degeneracy";
}

inline Scheme scheme_from_name(const std::string& name) {
    if (name == "interval") return Scheme::interval;
    if (name == "degeneracy") return Scheme::degeneracy;
    throw input_error("unknown scheme '" + name + "'");
}

struct LabelSet {
    int n = 0;
    Scheme scheme = Scheme::interval;
    int width = 0; // w
    std::vector<Label> labels;
    VertexOrdering ordering; // sigma (interval) or degeneracy ordering
    // scheme details for stats and reports
    int k = 0;                   // interval: achieved contiguity
    long long path_crossing = 0; // interval: k_P of the pipeline path
    int degeneracy = 0;          // degeneracy scheme: d
};

// ---------------------------------------------------------------------------
// Interval scheme (contiguity-based labels)
//
// layout: [tag 0][gamma(w)][pos: w][m: w][m * (start: w, end: w)]

// Labels from an already-computed contiguity pipeline run.
inline LabelSet encode_interval_with(const Graph& g, const ContiguityReport& rep) {
    LabelSet out;
    out.n = g.n();
    out.scheme = Scheme::interval;
    out.width = label_width(g.n());
    out.ordering = rep.result.ordering;
    out.k = rep.result.k;
    out.path_crossing = rep.path_crossing();
    for (int v = 0; v < g.n(); ++v) {
        const IntervalSet& is = rep.result.per_vertex[v];
        BitWriter w;
        w.push_bit(false); // tag
        w.push_gamma(uint64_t(out.width));
        w.push_uint(uint64_t(rep.result.ordering.pos[v]), out.width);
        w.push_uint(uint64_t(is.count()), out.width);
        for (auto [a, b] : is.intervals) {
            w.push_uint(uint64_t(a), out.width);
            w.push_uint(uint64_t(b), out.width);
        }
        out.labels.push_back(w.take());
    }
    return out;
}

inline LabelSet encode_interval(const Graph& g, const ContiguityOptions& opts = {}) {
    return encode_interval_with(g, low_contiguity_ordering(g, opts));
}

namespace detail {

struct IntervalFields {
    int width = 0;
    int pos = 0;
    IntervalSet intervals;
};

inline IntervalFields parse_interval_label(const Label& l) {
    BitReader r(l);
    if (r.pull_bit()) throw decode_error("not an interval-scheme label");
    IntervalFields f;
    f.width = int(r.pull_gamma());
    f.pos = int(r.pull_uint(f.width));
    int m = int(r.pull_uint(f.width));
    for (int i = 0; i < m; ++i) {
        int a = int(r.pull_uint(f.width));
        int b = int(r.pull_uint(f.width));
        f.intervals.intervals.emplace_back(a, b);
    }
    return f;
}

struct DegeneracyFields {
    int width = 0;
    int id = 0;
    std::vector<int> back_neighbors; // positions earlier in the ordering
};

inline DegeneracyFields parse_degeneracy_label(const Label& l) {
    BitReader r(l);
    if (!r.pull_bit()) throw decode_error("not a degeneracy-scheme label");
    DegeneracyFields f;
    f.width = int(r.pull_gamma());
    f.id = int(r.pull_uint(f.width));
    int c = int(r.pull_uint(f.width));
    for (int i = 0; i < c; ++i) f.back_neighbors.push_back(int(r.pull_uint(f.width)));
    return f;
}

} // namespace detail

inline bool decode_interval(const Label& a, const Label& b) {
    detail::IntervalFields fa = detail::parse_interval_label(a);
    detail::IntervalFields fb = detail::parse_interval_label(b);
    if (fa.width != fb.width) throw decode_error("labels use different field widths");
    return fb.intervals.contains(fa.pos);
}

// ---------------------------------------------------------------------------
// Degeneracy scheme
//
// layout: [tag 1][gamma(w)][id: w][c: w][c * (back neighbor id: w)]
// ids are positions in the degeneracy ordering, so back lists stay <= d long.

inline LabelSet encode_degeneracy(const Graph& g) {
    DegeneracyResult deg = degeneracy_ordering(g);
    LabelSet out;
    out.n = g.n();
    out.scheme = Scheme::degeneracy;
    out.width = label_width(g.n());
    out.ordering = deg.ordering;
    out.degeneracy = deg.d;
    for (int v = 0; v < g.n(); ++v) {
        BitWriter w;
        w.push_bit(true); // tag
        w.push_gamma(uint64_t(out.width));
        w.push_uint(uint64_t(deg.ordering.pos[v]), out.width);
        std::vector<int> backs;
        g.neighbors(v).for_each([&](int u) {
            if (deg.ordering.pos[u] < deg.ordering.pos[v]) backs.push_back(deg.ordering.pos[u]);
        });
        std::sort(backs.begin(), backs.end());
        w.push_uint(uint64_t(backs.size()), out.width);
        for (int p : backs) w.push_uint(uint64_t(p), out.width);
        out.labels.push_back(w.take());
    }
    return out;
}

inline bool decode_degeneracy(const Label& a, const Label& b) {
    detail::DegeneracyFields fa = detail::parse_degeneracy_label(a);
    detail::DegeneracyFields fb = detail::parse_degeneracy_label(b);
    if (fa.width != fb.width) throw decode_error("labels use different field widths");
    return std::binary_search(fa.back_neighbors.begin(), fa.back_neighbors.end(), fb.id) ||
           std::binary_search(fb.back_neighbors.begin(), fb.back_neighbors.end(), fa.id);
}

// Dispatch on the leading tag bit; labels of mixed schemes are a decode error
// surfaced by the per-scheme parsers.
inline bool decode_adjacency(const Label& a, const Label& b) {
    if (a.bit_len < 1 || b.bit_len < 1) throw decode_error("empty label");
    bool tag_a = (a.bytes[0] & 0x80) != 0;
    bool tag_b = (b.bytes[0] & 0x80) != 0;
    if (tag_a != tag_b) throw decode_error("labels come from different schemes");
    return tag_a ? decode_degeneracy(a, b) : decode_interval(a, b);
}

// ---------------------------------------------------------------------------
// Size accounting

struct LabelStats {
    int max_bits = 0;
    double mean_bits = 0;
    int bound_bits = 0; // scheme-specific format bound
    bool bound_ok = false;
};

inline LabelStats label_stats(const LabelSet& ls) {
    LabelStats st;
    long long total = 0;
    for (const Label& l : ls.labels) {
        st.max_bits = std::max(st.max_bits, l.bit_len);
        total += l.bit_len;
    }
    st.mean_bits = ls.labels.empty() ? 0.0 : double(total) / double(ls.labels.size());
    int w = ls.width;
    int header = 1 + gamma_length(uint64_t(w));
    if (ls.scheme == Scheme::interval)
        st.bound_bits = header + (2 * ls.k + 2) * w;
    else
        st.bound_bits = header + (ls.degeneracy + 2) * w;
    st.bound_ok = st.max_bits <= st.bound_bits;
    return st;
}

// Degeneracy scheme when the graph is at most `degeneracy_threshold`
// degenerate, interval scheme otherwise.
inline LabelSet choose_scheme(const Graph& g, int degeneracy_threshold,
                              const ContiguityOptions& opts = {}) {
    if (degeneracy_threshold < 0) throw input_error("negative degeneracy threshold");
    DegeneracyResult deg = degeneracy_ordering(g);
    if (deg.d <= degeneracy_threshold) return encode_degeneracy(g);
    return encode_interval(g, opts);
}

} // namespace adjlab
