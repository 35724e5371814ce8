#pragma once

// Brute-force reference implementations for the test suite. These stay
// independent of the library's compiled search kernels: admissibility is
// checked straight off the spec's pattern list, enumeration is
// generate-then-filter over the whole assignment space.

#include <cstdint>
#include <vector>

#include "sftkit/core.hpp"

namespace oracle {

using sftkit::Box;
using sftkit::Coord;
using sftkit::SymbolId;
namespace core = sftkit::core;

// Does any translate of `f` fit fully inside `box` and match `vals`?
inline bool contains_forbidden(const core::SftSpec& spec, const Box& box,
                               const std::vector<SymbolId>& vals, const core::Pattern& f) {
    if (f.empty()) return true;
    auto fbb = *f.bounding_box();
    Coord lo(static_cast<size_t>(box.dim())), hi(static_cast<size_t>(box.dim()));
    for (int a = 0; a < box.dim(); ++a) {
        lo[static_cast<size_t>(a)] = box.lo()[static_cast<size_t>(a)] - fbb.lo()[static_cast<size_t>(a)];
        hi[static_cast<size_t>(a)] = box.hi()[static_cast<size_t>(a)] - fbb.hi()[static_cast<size_t>(a)];
        if (lo[static_cast<size_t>(a)] > hi[static_cast<size_t>(a)]) return false;
    }
    for (const Coord& t : Box(lo, hi).cells()) {
        bool match = true;
        for (const auto& [off, sym] : f.cells()) {
            if (vals[box.index(sftkit::add(t, off))] != spec.alphabet().require(sym)) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

inline bool block_admissible(const core::SftSpec& spec, const Box& box,
                             const std::vector<SymbolId>& vals) {
    for (const auto& f : spec.forbidden())
        if (contains_forbidden(spec, box, vals, f)) return false;
    return true;
}

// All admissible assignments of `box`, generate-then-filter, canonical order.
inline std::vector<std::vector<SymbolId>> admissible_blocks(const core::SftSpec& spec, const Box& box) {
    std::vector<std::vector<SymbolId>> out;
    size_t cells = box.size();
    int a = spec.alphabet().size();
    if (a == 0) return out;
    uint64_t total = 1;
    for (size_t i = 0; i < cells; ++i) total *= static_cast<uint64_t>(a);
    std::vector<SymbolId> vals(cells);
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t c = code;
        for (size_t i = cells; i-- > 0;) {
            vals[i] = static_cast<SymbolId>(c % static_cast<uint64_t>(a));
            c /= static_cast<uint64_t>(a);
        }
        if (block_admissible(spec, box, vals)) out.push_back(vals);
    }
    return out;
}

inline uint64_t admissible_count(const core::SftSpec& spec, const Box& box) {
    return admissible_blocks(spec, box).size();
}

// Direct validity check of a periodic configuration: every forbidden
// translate checked with wraparound on a domain large enough to cover the
// pattern extents.
inline bool torus_valid(const core::SftSpec& spec, const core::PeriodicConfig& cfg) {
    Coord hi(static_cast<size_t>(spec.dim()));
    for (int a = 0; a < spec.dim(); ++a) hi[static_cast<size_t>(a)] = cfg.periods()[static_cast<size_t>(a)] - 1;
    Box domain(sftkit::zero_coord(spec.dim()), hi);
    for (const auto& f : spec.forbidden()) {
        if (f.empty()) return false;
        for (const Coord& anchor : domain.cells()) {
            bool match = true;
            for (const auto& [off, sym] : f.cells()) {
                if (cfg.at(sftkit::add(anchor, off)) != spec.alphabet().require(sym)) {
                    match = false;
                    break;
                }
            }
            if (match) return false;
        }
    }
    return true;
}

// Count valid tilings of the p1 x p2 torus by exhaustive assignment.
inline uint64_t torus_count(const core::SftSpec& spec, const std::vector<int>& periods) {
    size_t cells = 1;
    for (int p : periods) cells *= static_cast<size_t>(p);
    int a = spec.alphabet().size();
    uint64_t total = 1;
    for (size_t i = 0; i < cells; ++i) total *= static_cast<uint64_t>(a);
    uint64_t count = 0;
    std::vector<SymbolId> vals(cells);
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t c = code;
        for (size_t i = cells; i-- > 0;) {
            vals[i] = static_cast<SymbolId>(c % static_cast<uint64_t>(a));
            c /= static_cast<uint64_t>(a);
        }
        if (torus_valid(spec, core::PeriodicConfig(periods, vals))) ++count;
    }
    return count;
}

}  // namespace oracle
