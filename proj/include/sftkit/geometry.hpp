#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sftkit {

// Symbols are indices into an Alphabet; -1 marks an unassigned cell in
// dense scratch buffers.
using SymbolId = int32_t;
inline constexpr SymbolId kUnassigned = -1;

// A point of Z^d. Lexicographic comparison (first axis most significant)
// is the canonical cell order used by every enumeration in the library.
using Coord = std::vector<int>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Coord zero_coord(int dim) { return Coord(static_cast<size_t>(dim), 0); }

inline Coord add(const Coord& a, const Coord& b) {
    Coord r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Coord sub(const Coord& a, const Coord& b) {
    Coord r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline int inf_norm(const Coord& a) {
    int m = 0;
    for (int v : a) m = std::max(m, v < 0 ? -v : v);
    return m;
}

// Axis-aligned box, both corners inclusive. Cells are visited in
// lexicographic coordinate order (axis 0 outermost).
class Box {
public:
    Box() = default;
    Box(Coord lo, Coord hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_.size() != hi_.size()) throw InputError("box corners disagree on dimension");
        for (size_t i = 0; i < lo_.size(); ++i)
            if (lo_[i] > hi_[i]) throw InputError("box has negative extent");
    }

    // B_r = [-r, r]^d
    static Box cube(int dim, int radius) {
        if (radius < 0) throw InputError("negative radius");
        return Box(Coord(static_cast<size_t>(dim), -radius), Coord(static_cast<size_t>(dim), radius));
    }

    // [0, n)^d
    static Box sided(int dim, int side) {
        if (side < 1) throw InputError("side must be >= 1");
        return Box(Coord(static_cast<size_t>(dim), 0), Coord(static_cast<size_t>(dim), side - 1));
    }

    int dim() const { return static_cast<int>(lo_.size()); }
    const Coord& lo() const { return lo_; }
    const Coord& hi() const { return hi_; }

    bool contains(const Coord& c) const {
        for (size_t i = 0; i < lo_.size(); ++i)
            if (c[i] < lo_[i] || c[i] > hi_[i]) return false;
        return true;
    }

    size_t size() const {
        size_t n = 1;
        for (size_t i = 0; i < lo_.size(); ++i) n *= static_cast<size_t>(hi_[i] - lo_[i] + 1);
        return n;
    }

    int extent(int axis) const { return hi_[static_cast<size_t>(axis)] - lo_[static_cast<size_t>(axis)] + 1; }

    // Flat index in canonical order.
    size_t index(const Coord& c) const {
        size_t idx = 0;
        for (size_t i = 0; i < lo_.size(); ++i)
            idx = idx * static_cast<size_t>(extent(static_cast<int>(i))) + static_cast<size_t>(c[i] - lo_[i]);
        return idx;
    }

    Coord coord_at(size_t idx) const {
        Coord c(lo_.size());
        for (size_t i = lo_.size(); i-- > 0;) {
            auto e = static_cast<size_t>(extent(static_cast<int>(i)));
            c[i] = lo_[i] + static_cast<int>(idx % e);
            idx /= e;
        }
        return c;
    }

    std::vector<Coord> cells() const {
        std::vector<Coord> out;
        out.reserve(size());
        Coord c = lo_;
        for (;;) {
            out.push_back(c);
            size_t i = lo_.size();
            for (;;) {
                if (i == 0) return out;
                --i;
                if (c[i] < hi_[i]) {
                    ++c[i];
                    break;
                }
                c[i] = lo_[i];
            }
        }
    }

    bool operator==(const Box& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

private:
    Coord lo_, hi_;
};

inline std::string coord_to_string(const Coord& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    s += ')';
    return s;
}

}  // namespace sftkit
