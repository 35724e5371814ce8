#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sftkit/bigint.hpp"
#include "sftkit/core.hpp"

namespace sftkit::core {

// Forbidden set compiled to symbol ids for the search kernels. Singleton
// and axis-adjacent two-cell patterns get fast paths; everything else is
// checked by anchored placement. General supports are centering-translated,
// which leaves the defined subshift unchanged.
class CompiledSpec {
public:
    explicit CompiledSpec(const SftSpec& spec);

    int dim() const { return dim_; }
    int nsyms() const { return nsyms_; }
    int bounding_radius() const { return bounding_radius_; }
    bool symbol_banned(SymbolId s) const { return banned_[static_cast<size_t>(s)] != 0; }
    bool all_symbols_banned() const;

    bool axis_pair_forbidden(int axis, SymbolId a, SymbolId b) const {
        const auto& bits = axis_forbidden_[static_cast<size_t>(axis)];
        size_t idx = static_cast<size_t>(a) * static_cast<size_t>(nsyms_) + static_cast<size_t>(b);
        return (bits[idx >> 6] >> (idx & 63)) & 1u;
    }
    bool has_axis_constraints() const { return any_axis_; }

    struct GenPattern {
        std::vector<Coord> offsets;    // centered
        std::vector<SymbolId> symbols;
    };
    const std::vector<GenPattern>& general() const { return general_; }

    // Check a fully assigned flat block over `box` (no kUnassigned cells).
    bool block_admissible(const Box& box, const std::vector<SymbolId>& values) const;

    // Incremental check: cell `idx` of `box` was just set; validates every
    // constraint all of whose cells are assigned and which involves it.
    bool assignment_ok(const Box& box, const std::vector<SymbolId>& values, size_t idx) const;

private:
    int dim_;
    int nsyms_;
    int bounding_radius_ = 0;
    bool any_axis_ = false;
    std::vector<uint8_t> banned_;
    std::vector<std::vector<uint64_t>> axis_forbidden_;
    std::vector<GenPattern> general_;
};

// Depth-first enumeration of admissible assignments of `box`, canonical
// order (cells lexicographic, symbols in alphabet order). `pinned` cells
// are fixed up front. Visitor returns false to stop; the function returns
// false when stopped early.
bool for_each_admissible(const CompiledSpec& cs, const Box& box,
                         const std::vector<std::pair<Coord, SymbolId>>& pinned,
                         const std::function<bool(const std::vector<SymbolId>&)>& visit);

// Same search with a per-assignment hook for extra pruning (preimage
// search and friends). The hook sees the partial assignment right after
// cell `idx` is set and may veto the branch.
bool for_each_admissible_hooked(
    const CompiledSpec& cs, const Box& box, const std::vector<std::pair<Coord, SymbolId>>& pinned,
    const std::function<bool(const std::vector<SymbolId>&, size_t idx)>& on_assign,
    const std::function<bool(const std::vector<SymbolId>&)>& visit);

// First admissible completion, if any.
std::optional<std::vector<SymbolId>> find_admissible(const CompiledSpec& cs, const Box& box,
                                                     const std::vector<std::pair<Coord, SymbolId>>& pinned);

// Exact admissible-assignment count over `box` (count-only, no
// materialization).
BigUint count_admissible(const CompiledSpec& cs, const Box& box);

// Valid fully periodic configurations with the given periods, canonical
// order. All forbidden placements are checked with wraparound.
bool for_each_valid_torus(const CompiledSpec& cs, const std::vector<int>& periods,
                          const std::function<bool(const std::vector<SymbolId>&)>& visit);

// Period vectors with entries in [1, budget], sorted by max entry then
// lexicographically: the search order of prove_nonempty.
std::vector<std::vector<int>> period_vectors(int dim, int budget);

}  // namespace sftkit::core
