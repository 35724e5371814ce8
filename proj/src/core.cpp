#include "sftkit/core.hpp"

#include <algorithm>

#include "sftkit/compiled.hpp"

namespace sftkit::core {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    for (size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].empty()) throw InputError("empty symbol name");
        auto [it, inserted] = index_.emplace(symbols_[i], static_cast<SymbolId>(i));
        if (!inserted) throw InputError("duplicate symbol name: " + symbols_[i]);
    }
}

std::optional<SymbolId> Alphabet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SymbolId Alphabet::require(const std::string& name) const {
    auto id = find(name);
    if (!id) throw InputError("symbol not in alphabet: " + name);
    return *id;
}

void Pattern::set(const Coord& at, std::string symbol) {
    if (static_cast<int>(at.size()) != dim_) throw InputError("cell dimension mismatch");
    cells_[at] = std::move(symbol);
}

const std::string* Pattern::at(const Coord& c) const {
    auto it = cells_.find(c);
    return it == cells_.end() ? nullptr : &it->second;
}

Pattern Pattern::translated(const Coord& by) const {
    Pattern out(dim_);
    for (const auto& [c, s] : cells_) out.cells_.emplace(add(c, by), s);
    return out;
}

std::optional<Box> Pattern::bounding_box() const {
    if (cells_.empty()) return std::nullopt;
    Coord lo = cells_.begin()->first, hi = lo;
    for (const auto& [c, s] : cells_) {
        for (size_t i = 0; i < c.size(); ++i) {
            lo[i] = std::min(lo[i], c[i]);
            hi[i] = std::max(hi[i], c[i]);
        }
    }
    return Box(lo, hi);
}

Pattern Pattern::restricted(const Box& box) const {
    Pattern out(dim_);
    for (const auto& [c, s] : cells_)
        if (box.contains(c)) out.cells_.emplace(c, s);
    return out;
}

Pattern Pattern::from_block(const Box& box, const std::vector<SymbolId>& values, const Alphabet& alphabet) {
    Pattern out(box.dim());
    auto cells = box.cells();
    if (cells.size() != values.size()) throw InputError("block size mismatch");
    for (size_t i = 0; i < cells.size(); ++i) out.set(cells[i], alphabet.name(values[i]));
    return out;
}

SftSpec::SftSpec(Alphabet alphabet, int dim, std::vector<Pattern> forbidden)
    : alphabet_(std::move(alphabet)), dim_(dim), forbidden_(std::move(forbidden)) {
    if (dim_ < 1) throw InputError("dimension must be >= 1");
    for (const auto& p : forbidden_) {
        if (p.dim() != dim_) throw InputError("forbidden pattern dimension mismatch");
        for (const auto& [c, s] : p.cells()) alphabet_.require(s);
    }
}

int SftSpec::bounding_radius() const {
    int r = 0;
    for (const auto& p : forbidden_) {
        auto bb = p.bounding_box();
        if (!bb) continue;
        for (int a = 0; a < dim_; ++a) {
            int extent = bb->extent(a);
            r = std::max(r, extent / 2);  // centered support reaches floor(extent/2)
        }
    }
    return r;
}

WangTileset::WangTileset(std::vector<WangTile> tiles) : tiles_(std::move(tiles)) {
    std::vector<WangTile> sorted = tiles_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("duplicate Wang tile");
}

PeriodicConfig::PeriodicConfig(std::vector<int> periods, std::vector<SymbolId> cells)
    : periods_(std::move(periods)), cells_(std::move(cells)) {
    size_t n = 1;
    for (int p : periods_) {
        if (p < 1) throw InputError("period must be >= 1");
        n *= static_cast<size_t>(p);
    }
    if (n != cells_.size()) throw InputError("fundamental domain size mismatch");
}

SymbolId PeriodicConfig::at(const Coord& c) const {
    size_t idx = 0;
    for (size_t i = 0; i < periods_.size(); ++i) {
        int p = periods_[i];
        int m = c[i] % p;
        if (m < 0) m += p;
        idx = idx * static_cast<size_t>(p) + static_cast<size_t>(m);
    }
    return cells_[idx];
}

const char* status_name(Status s) {
    switch (s) {
        case Status::proven: return "proven";
        case Status::refuted: return "refuted";
        case Status::unknown: return "unknown";
    }
    return "?";
}

namespace {

void require_over(const Pattern& p, const SftSpec& X) {
    if (p.dim() != X.dim()) throw InputError("pattern dimension does not match spec");
    for (const auto& [c, s] : p.cells()) X.alphabet().require(s);
}

}  // namespace

bool is_admissible(const Pattern& p, const SftSpec& X) {
    require_over(p, X);
    if (p.empty()) return true;
    auto pbb = p.bounding_box();
    for (const auto& f : X.forbidden()) {
        if (f.empty()) return false;  // the empty forbidden pattern occurs everywhere
        auto fbb = f.bounding_box();
        // candidate translates t: t + support(f) within p's bounding box
        Coord lo(p.dim()), hi(p.dim());
        bool feasible = true;
        for (int a = 0; a < p.dim(); ++a) {
            lo[a] = pbb->lo()[a] - fbb->lo()[a];
            hi[a] = pbb->hi()[a] - fbb->hi()[a];
            if (lo[a] > hi[a]) feasible = false;
        }
        if (!feasible) continue;
        for (const Coord& t : Box(lo, hi).cells()) {
            bool match = true;
            for (const auto& [off, sym] : f.cells()) {
                const std::string* have = p.at(add(t, off));
                if (!have || *have != sym) {
                    match = false;
                    break;
                }
            }
            if (match) return false;
        }
    }
    return true;
}

bool enumerate_admissible_blocks(const SftSpec& X, int n,
                                 const std::function<bool(const std::vector<SymbolId>&)>& visit) {
    if (n < 0) throw InputError("block radius must be >= 0");
    CompiledSpec cs(X);
    return for_each_admissible(cs, Box::cube(X.dim(), n), {}, visit);
}

std::vector<Pattern> admissible_blocks(const SftSpec& X, int n) {
    std::vector<Pattern> out;
    Box box = Box::cube(X.dim(), n);
    enumerate_admissible_blocks(X, n, [&](const std::vector<SymbolId>& vals) {
        out.push_back(Pattern::from_block(box, vals, X.alphabet()));
        return true;
    });
    return out;
}

ExtensibilityVerdict check_extensibility(const Pattern& p, const SftSpec& X, int radius_budget,
                                         int period_budget) {
    require_over(p, X);
    ExtensibilityVerdict v;
    v.radius_budget = radius_budget;
    v.period_budget = period_budget;
    if (!is_admissible(p, X)) {
        v.status = Status::refuted;
        v.refuted_radius = -1;
        return v;
    }
    CompiledSpec cs(X);

    // Smallest radius whose block can contain p at the origin.
    int r0 = 0;
    if (auto bb = p.bounding_box()) r0 = std::max(inf_norm(bb->lo()), inf_norm(bb->hi()));

    std::vector<std::pair<Coord, SymbolId>> pinned;
    for (const auto& [c, s] : p.cells()) pinned.emplace_back(c, X.alphabet().require(s));

    for (int r = r0; r <= radius_budget; ++r) {
        if (!find_admissible(cs, Box::cube(X.dim(), r), pinned)) {
            v.status = Status::refuted;
            v.refuted_radius = r;
            return v;
        }
    }

    // Sound positive branch: a valid periodic configuration containing p.
    std::vector<std::pair<Coord, SymbolId>> pcells;
    for (const auto& [c, s] : p.cells()) pcells.emplace_back(c, X.alphabet().require(s));
    for (const auto& periods : period_vectors(X.dim(), period_budget)) {
        Coord hi(periods.size());
        for (size_t i = 0; i < periods.size(); ++i) hi[i] = periods[i] - 1;
        auto anchors = Box(zero_coord(X.dim()), hi).cells();
        for_each_valid_torus(cs, periods, [&](const std::vector<SymbolId>& cells) {
            PeriodicConfig cfg(periods, cells);
            // p occurs iff it matches at some anchor of the fundamental domain
            for (const Coord& anchor : anchors) {
                bool match = true;
                for (const auto& [off, sym] : pcells) {
                    if (cfg.at(add(anchor, off)) != sym) {
                        match = false;
                        break;
                    }
                }
                if (match) {
                    v.status = Status::proven;
                    v.witness = cfg;
                    return false;
                }
            }
            return true;
        });
        if (v.status == Status::proven) return v;
    }
    v.status = Status::unknown;
    return v;
}

SftSpec normalize_to_radius(const SftSpec& X, int r) {
    if (r < 0) throw InputError("radius must be >= 0");
    for (const auto& f : X.forbidden()) {
        auto bb = f.bounding_box();
        if (!bb) continue;
        for (int a = 0; a < X.dim(); ++a)
            if (bb->extent(a) > 2 * r + 1)
                throw InputError("radius too small to contain a forbidden support");
    }
    if (X.bounding_radius() > r) throw InputError("radius too small to contain a forbidden support");

    // The normalized forbidden set is exactly the inadmissible B_r blocks.
    std::vector<Pattern> forbidden;
    Box box = Box::cube(X.dim(), r);
    auto cells = box.cells();
    std::vector<SymbolId> vals(cells.size(), 0);
    CompiledSpec cs(X);
    // enumerate the full block space in canonical order
    size_t total = 1;
    for (size_t i = 0; i < cells.size(); ++i) {
        total *= static_cast<size_t>(X.alphabet().size());
        if (total > 100000000u) throw InputError("normalize_to_radius: block space too large to materialize");
    }
    for (size_t code = 0; code < total; ++code) {
        size_t c = code;
        for (size_t i = cells.size(); i-- > 0;) {
            vals[i] = static_cast<SymbolId>(c % static_cast<size_t>(X.alphabet().size()));
            c /= static_cast<size_t>(X.alphabet().size());
        }
        if (!cs.block_admissible(box, vals))
            forbidden.push_back(Pattern::from_block(box, vals, X.alphabet()));
    }
    return SftSpec(X.alphabet(), X.dim(), std::move(forbidden));
}

SftSpec wang_to_sft(const WangTileset& T) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(T.size()));
    for (int i = 0; i < T.size(); ++i) names.push_back("t" + std::to_string(i));
    Alphabet alphabet(names);

    // mismatch pairs are quadratic in the tile count; refuse rather than
    // exhaust memory on an explicit pattern list
    size_t pair_bound = 2 * static_cast<size_t>(T.size()) * static_cast<size_t>(T.size());
    if (pair_bound > 4000000u)
        throw InputError("wang_to_sft: tileset too large to materialize as an explicit spec");

    std::vector<Pattern> forbidden;
    for (int a = 0; a < T.size(); ++a) {
        for (int b = 0; b < T.size(); ++b) {
            if (T.tile(a).east != T.tile(b).west) {
                Pattern p(2);
                p.set({0, 0}, names[static_cast<size_t>(a)]);
                p.set({1, 0}, names[static_cast<size_t>(b)]);
                forbidden.push_back(std::move(p));
            }
            if (T.tile(a).north != T.tile(b).south) {
                Pattern p(2);
                p.set({0, 0}, names[static_cast<size_t>(a)]);
                p.set({0, 1}, names[static_cast<size_t>(b)]);
                forbidden.push_back(std::move(p));
            }
        }
    }
    return SftSpec(std::move(alphabet), 2, std::move(forbidden));
}

}  // namespace sftkit::core
