#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sftkit/compiled.hpp"
#include "sftkit/core.hpp"

namespace sftkit::codes {

using core::Alphabet;
using core::CompiledSpec;
using core::Pattern;
using core::PeriodicConfig;
using core::SftSpec;
using core::WangTileset;

// Raised when a table rule is evaluated on a window it does not cover.
struct RuleDomainError : std::runtime_error {
    explicit RuleDomainError(std::string window_repr)
        : std::runtime_error("local rule undefined on window " + window_repr),
          window(std::move(window_repr)) {}
    std::string window;
};

// A sliding block code: local rule on the window B_r, evaluated
// deterministically. Rules come in four shapes: explicit table,
// coordinate projection through a symbol map, composition chain, and
// star augmentation. Codes are immutable values; copies share the rule.
class SlidingBlockCode {
public:
    // Table rule: keys are B_r windows flattened in canonical cell order.
    // Windows absent from the table evaluate to `fallback` when given,
    // and raise RuleDomainError otherwise.
    static SlidingBlockCode table(Alphabet source, Alphabet target, int dim, int radius,
                                  std::vector<std::pair<std::vector<SymbolId>, SymbolId>> entries,
                                  std::optional<SymbolId> fallback = std::nullopt);

    // Projection: output = symbol_map[window(offset)]. Radius 0 with zero
    // offset is the plain symbol map; identity() specializes it.
    static SlidingBlockCode projection(Alphabet source, Alphabet target, int dim, int radius,
                                       Coord offset, std::vector<SymbolId> symbol_map);

    static SlidingBlockCode identity(const Alphabet& alphabet, int dim);

    int dim() const;
    int radius() const;
    const Alphabet& source() const;
    const Alphabet& target() const;

    enum class RuleKind { table, projection, composition, star };
    RuleKind kind() const;
    // table introspection (entries in canonical key order)
    std::vector<std::pair<std::vector<SymbolId>, SymbolId>> table_entries() const;
    std::optional<SymbolId> table_fallback() const;
    // projection introspection
    const Coord& proj_offset() const;
    const std::vector<SymbolId>& proj_symbol_map() const;
    // composition introspection (applied front to back)
    const std::vector<SlidingBlockCode>& chain() const;
    // star introspection
    const SlidingBlockCode& star_inner() const;
    const SftSpec& star_source_spec() const;

    // Evaluate on a full B_r window, flattened canonically. No cell may be
    // kUnassigned.
    SymbolId eval_window(const std::vector<SymbolId>& window) const;

    // Evaluate output cell `at` reading `block` over `box` (all needed
    // cells must be inside the box and assigned).
    SymbolId eval_in_block(const Box& box, const std::vector<SymbolId>& block, const Coord& at) const;

    struct Impl;
    const Impl& impl() const { return *impl_; }

private:
    friend SlidingBlockCode compose(const SlidingBlockCode&, const SlidingBlockCode&);
    friend SlidingBlockCode star_augment(const SlidingBlockCode&, const SftSpec&);
    explicit SlidingBlockCode(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// The global map on finite patterns: output support is the erosion of
// p's support by B_r; each output cell holds rule(window at that cell).
Pattern apply_to_pattern(const SlidingBlockCode& F, const Pattern& p);

// Finite total surrogate for the global map: same periods, wraparound
// windows.
PeriodicConfig apply_to_torus(const SlidingBlockCode& F, const PeriodicConfig& c);

// compose(G, F) = G after F; radius r_G + r_F.
SlidingBlockCode compose(const SlidingBlockCode& G, const SlidingBlockCode& F);

// F' over the star-extended alphabets: the window evaluates to F when it
// contains neither a forbidden pattern of X nor a star, and to the star
// symbol otherwise. Radius max(r_F, r_X).
SlidingBlockCode star_augment(const SlidingBlockCode& F, const SftSpec& X);

// Star-extended alphabet: X's symbols plus a fresh star symbol (name "*",
// doubled until fresh). The star id is the old alphabet's size.
Alphabet star_alphabet(const Alphabet& a);
std::string star_symbol_name(const Alphabet& a);

// --- conversions living on the core/codes boundary ----------------------

struct SftToWangResult {
    WangTileset tileset;
    SlidingBlockCode encode;  // X -> tilings, radius 1
    SlidingBlockCode decode;  // tilings -> X, radius 0
};

// Higher-block Wang encoding of a 2D SFT: tiles are the admissible B_1
// blocks, edge colors the shared 2x3 / 3x2 overlaps. (encode, decode)
// form a conjugacy certificate between X and wang_to_sft(tileset).
SftToWangResult sft_to_wang(const SftSpec& X);

}  // namespace sftkit::codes
