#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sftkit/geometry.hpp"

namespace sftkit::core {

// Finite ordered alphabet. Construction order is canonical and drives
// every enumeration tie-break in the library.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::string& name(SymbolId id) const { return symbols_.at(static_cast<size_t>(id)); }
    std::optional<SymbolId> find(const std::string& name) const;
    SymbolId require(const std::string& name) const;
    const std::vector<std::string>& symbols() const { return symbols_; }

    bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
    std::vector<std::string> symbols_;
    std::map<std::string, SymbolId> index_;
};

// Finite partial coloring of Z^d. Lookup outside the support is "absent",
// never a default symbol. Equality is exact on supports and values.
class Pattern {
public:
    explicit Pattern(int dim) : dim_(dim) {
        if (dim < 1) throw InputError("pattern dimension must be >= 1");
    }

    int dim() const { return dim_; }
    bool empty() const { return cells_.empty(); }
    size_t size() const { return cells_.size(); }

    void set(const Coord& at, std::string symbol);
    const std::string* at(const Coord& c) const;
    const std::map<Coord, std::string>& cells() const { return cells_; }

    Pattern translated(const Coord& by) const;
    // Smallest box containing the support; nullopt for the empty pattern.
    std::optional<Box> bounding_box() const;
    // Restriction to a box (cells outside are dropped).
    Pattern restricted(const Box& box) const;

    bool operator==(const Pattern& o) const { return dim_ == o.dim_ && cells_ == o.cells_; }
    bool operator!=(const Pattern& o) const { return !(*this == o); }
    bool operator<(const Pattern& o) const {
        if (dim_ != o.dim_) return dim_ < o.dim_;
        return cells_ < o.cells_;
    }

    // Dense pattern covering `box`, symbols indexed in canonical order.
    static Pattern from_block(const Box& box, const std::vector<SymbolId>& values, const Alphabet& alphabet);

private:
    int dim_;
    std::map<Coord, std::string> cells_;
};

// An SFT given by alphabet, dimension and a finite forbidden pattern set.
class SftSpec {
public:
    SftSpec(Alphabet alphabet, int dim, std::vector<Pattern> forbidden);

    const Alphabet& alphabet() const { return alphabet_; }
    int dim() const { return dim_; }
    const std::vector<Pattern>& forbidden() const { return forbidden_; }

    // Smallest r such that every forbidden support fits in B_r after a
    // centering translation (0 when the forbidden set is empty).
    int bounding_radius() const;

private:
    Alphabet alphabet_;
    int dim_;
    std::vector<Pattern> forbidden_;
};

struct WangTile {
    std::string north, east, south, west;
    bool operator==(const WangTile& o) const {
        return north == o.north && east == o.east && south == o.south && west == o.west;
    }
    bool operator<(const WangTile& o) const {
        if (north != o.north) return north < o.north;
        if (east != o.east) return east < o.east;
        if (south != o.south) return south < o.south;
        return west < o.west;
    }
};

// Edge-colored unit squares; implicitly two-dimensional.
class WangTileset {
public:
    WangTileset() = default;
    explicit WangTileset(std::vector<WangTile> tiles);

    int size() const { return static_cast<int>(tiles_.size()); }
    const WangTile& tile(int i) const { return tiles_.at(static_cast<size_t>(i)); }
    const std::vector<WangTile>& tiles() const { return tiles_; }

    bool operator==(const WangTileset& o) const { return tiles_ == o.tiles_; }

private:
    std::vector<WangTile> tiles_;
};

// A fully periodic configuration given by its fundamental domain
// [0,p_1) x ... x [0,p_d), cells in canonical order.
class PeriodicConfig {
public:
    PeriodicConfig() = default;
    PeriodicConfig(std::vector<int> periods, std::vector<SymbolId> cells);

    int dim() const { return static_cast<int>(periods_.size()); }
    const std::vector<int>& periods() const { return periods_; }
    const std::vector<SymbolId>& cells() const { return cells_; }

    SymbolId at(const Coord& c) const;

    bool operator==(const PeriodicConfig& o) const { return periods_ == o.periods_ && cells_ == o.cells_; }

private:
    std::vector<int> periods_;
    std::vector<SymbolId> cells_;
};

enum class Status { proven, refuted, unknown };

const char* status_name(Status s);

// Verdict of the bounded extensibility check. Proven and Refuted carry
// finitely checkable witnesses; Unknown echoes exhausted budgets.
struct ExtensibilityVerdict {
    Status status = Status::unknown;
    // refuted: least radius with no admissible extension (or -1 when the
    // input pattern itself is inadmissible)
    int refuted_radius = -1;
    std::optional<PeriodicConfig> witness;  // proven
    int radius_budget = 0;
    int period_budget = 0;
};

// --- module operations -------------------------------------------------

// True iff no translate of a forbidden pattern of X fits entirely inside
// p's support and matches p there.
bool is_admissible(const Pattern& p, const SftSpec& X);

// Visit admissible B_n blocks of X in canonical order (lexicographic cell
// values, alphabet order). The visitor receives the flat block; returning
// false stops the stream. Returns false when stopped early.
bool enumerate_admissible_blocks(const SftSpec& X, int n,
                                 const std::function<bool(const std::vector<SymbolId>&)>& visit);

// Convenience: materialize the stream as Patterns.
std::vector<Pattern> admissible_blocks(const SftSpec& X, int n);

ExtensibilityVerdict check_extensibility(const Pattern& p, const SftSpec& X, int radius_budget,
                                         int period_budget);

// Equivalent spec whose forbidden set is exactly the inadmissible B_r
// blocks of X.
SftSpec normalize_to_radius(const SftSpec& X, int r);

SftSpec wang_to_sft(const WangTileset& T);

}  // namespace sftkit::core
