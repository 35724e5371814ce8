#include "sftkit/constructions.hpp"

#include <algorithm>
#include <set>

#include "sftkit/compiled.hpp"
#include "sftkit/robinson_detail.hpp"

namespace sftkit::cons {

using core::Pattern;
using core::WangTile;

SftSpec full_shift(int k, int dim) {
    if (k < 1) throw InputError("full shift needs at least one symbol");
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) names.push_back("a" + std::to_string(i));
    return SftSpec(Alphabet(std::move(names)), dim, {});
}

SftSpec full_shift(const Alphabet& alphabet, int dim) { return SftSpec(alphabet, dim, {}); }

SftSpec empty_sft(const Alphabet& alphabet, int dim) {
    std::vector<Pattern> forbidden;
    for (const auto& s : alphabet.symbols()) {
        Pattern p(dim);
        p.set(zero_coord(dim), s);
        forbidden.push_back(std::move(p));
    }
    return SftSpec(alphabet, dim, std::move(forbidden));
}

SftSpec singleton_sft(const std::string& symbol, int dim) {
    return SftSpec(Alphabet({symbol}), dim, {});
}

std::string product_symbol_name(const std::string& left, const std::string& right) {
    auto escape = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '\\' || c == '|') out += '\\';
            out += c;
        }
        return out;
    };
    return escape(left) + "|" + escape(right);
}

std::pair<std::string, std::string> split_product_symbol(const std::string& name) {
    std::string left, right;
    std::string* cur = &left;
    for (size_t i = 0; i < name.size(); ++i) {
        if (name[i] == '\\' && i + 1 < name.size()) {
            *cur += name[++i];
        } else if (name[i] == '|' && cur == &left) {
            cur = &right;
        } else {
            *cur += name[i];
        }
    }
    return {left, right};
}

SftSpec product(const SftSpec& X, const SftSpec& Y) {
    if (X.dim() != Y.dim()) throw InputError("product: dimension mismatch");
    const auto& ax = X.alphabet();
    const auto& ay = Y.alphabet();
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(ax.size()) * static_cast<size_t>(ay.size()));
    for (const auto& l : ax.symbols())
        for (const auto& r : ay.symbols()) names.push_back(product_symbol_name(l, r));
    Alphabet alphabet(names);
    auto pair_name = [&](SymbolId l, SymbolId r) {
        return names[static_cast<size_t>(l) * static_cast<size_t>(ay.size()) + static_cast<size_t>(r)];
    };

    // lift of a forbidden pattern: constrained component fixed, the other
    // free (every combination materialized)
    std::vector<Pattern> forbidden;
    auto lift = [&](const Pattern& f, bool left_component) {
        std::vector<std::pair<Coord, SymbolId>> cells;
        for (const auto& [c, s] : f.cells())
            cells.emplace_back(c, left_component ? ax.require(s) : ay.require(s));
        int free_count = left_component ? ay.size() : ax.size();
        size_t combos = 1;
        for (size_t i = 0; i < cells.size(); ++i) {
            combos *= static_cast<size_t>(free_count);
            if (combos + forbidden.size() > 4000000u)
                throw InputError("product: forbidden lift too large to materialize");
        }
        std::vector<SymbolId> frees(cells.size(), 0);
        for (size_t code = 0; code < combos; ++code) {
            size_t v = code;
            for (size_t i = cells.size(); i-- > 0;) {
                frees[i] = static_cast<SymbolId>(v % static_cast<size_t>(free_count));
                v /= static_cast<size_t>(free_count);
            }
            Pattern p(X.dim());
            for (size_t i = 0; i < cells.size(); ++i) {
                SymbolId l = left_component ? cells[i].second : frees[i];
                SymbolId r = left_component ? frees[i] : cells[i].second;
                p.set(cells[i].first, pair_name(l, r));
            }
            forbidden.push_back(std::move(p));
        }
    };
    for (const auto& f : X.forbidden()) lift(f, true);
    for (const auto& f : Y.forbidden()) lift(f, false);
    return SftSpec(std::move(alphabet), X.dim(), std::move(forbidden));
}

SftSpec disjoint_union(const SftSpec& X, const SftSpec& Y) {
    if (X.dim() != Y.dim()) throw InputError("disjoint_union: dimension mismatch");
    std::vector<std::string> names;
    for (const auto& s : X.alphabet().symbols()) names.push_back("L:" + s);
    for (const auto& s : Y.alphabet().symbols()) names.push_back("R:" + s);
    Alphabet alphabet(names);

    std::vector<Pattern> forbidden;
    auto retag = [&](const Pattern& f, const char* tag) {
        Pattern p(f.dim());
        for (const auto& [c, s] : f.cells()) p.set(c, std::string(tag) + s);
        return p;
    };
    for (const auto& f : X.forbidden()) forbidden.push_back(retag(f, "L:"));
    for (const auto& f : Y.forbidden()) forbidden.push_back(retag(f, "R:"));

    // tag mixing along any axis is forbidden in both orders
    for (int a = 0; a < X.dim(); ++a) {
        Coord step = zero_coord(X.dim());
        step[static_cast<size_t>(a)] = 1;
        for (const auto& l : X.alphabet().symbols()) {
            for (const auto& r : Y.alphabet().symbols()) {
                Pattern p(X.dim());
                p.set(zero_coord(X.dim()), "L:" + l);
                p.set(step, "R:" + r);
                forbidden.push_back(std::move(p));
                Pattern q(X.dim());
                q.set(zero_coord(X.dim()), "R:" + r);
                q.set(step, "L:" + l);
                forbidden.push_back(std::move(q));
            }
        }
    }
    return SftSpec(std::move(alphabet), X.dim(), std::move(forbidden));
}

SftSpec lift_dimension(const SftSpec& X, int d_target) {
    if (d_target <= X.dim()) throw InputError("lift_dimension: target dimension must exceed source");
    std::vector<Pattern> forbidden;
    for (const auto& f : X.forbidden()) {
        Pattern p(d_target);
        for (const auto& [c, s] : f.cells()) {
            Coord e = c;
            e.resize(static_cast<size_t>(d_target), 0);
            p.set(e, s);
        }
        forbidden.push_back(std::move(p));
    }
    for (int a = X.dim(); a < d_target; ++a) {
        Coord step = zero_coord(d_target);
        step[static_cast<size_t>(a)] = 1;
        for (const auto& s : X.alphabet().symbols()) {
            for (const auto& t : X.alphabet().symbols()) {
                if (s == t) continue;
                Pattern p(d_target);
                p.set(zero_coord(d_target), s);
                p.set(step, t);
                forbidden.push_back(std::move(p));
            }
        }
    }
    return SftSpec(X.alphabet(), d_target, std::move(forbidden));
}

// --- computation strips --------------------------------------------------

TmStripTileset tm_strip_tileset(const tm::TuringMachine& M) {
    TmStripTileset out;
    std::vector<WangTile> tiles;

    const std::string blank = M.blank();
    auto sym = [](const std::string& a) { return "s:" + a; };
    auto head = [](const std::string& q, const std::string& a) { return "h:" + q + ":" + a; };

    // states that can actually be signalled into a neighboring cell
    std::set<std::string> emitted;
    if (!M.is_halting(M.initial()) && M.transition(M.initial(), blank))
        emitted.insert(M.transition(M.initial(), blank)->next_state);
    for (const auto& [key, t] : M.delta()) emitted.insert(t.next_state);

    // floor row: forces blank input around the seed
    tiles.push_back({sym(blank), "f0", "F", "f0"});
    const tm::Transition* seed_t =
        M.is_halting(M.initial()) ? nullptr : M.transition(M.initial(), blank);
    out.start_color = "S";
    if (seed_t) {
        WangTile seed;
        seed.south = "S";
        seed.north = sym(seed_t->write);
        if (seed_t->move == tm::Move::right) {
            seed.east = "fr:" + seed_t->next_state;
            seed.west = "f0";
        } else {
            seed.west = "fl:" + seed_t->next_state;
            seed.east = "f0";
        }
        out.seed_index = static_cast<int>(tiles.size());
        tiles.push_back(seed);
    }
    for (const auto& q : emitted) {
        tiles.push_back({head(q, blank), "f0", "F", "fr:" + q});  // head arrives from the west
        tiles.push_back({head(q, blank), "fl:" + q, "F", "f0"});  // head arrives from the east
    }

    // interior rows
    for (const auto& a : M.tape_symbols()) tiles.push_back({sym(a), "0", sym(a), "0"});
    for (const auto& [key, t] : M.delta()) {
        WangTile action;
        action.south = head(key.first, key.second);
        action.north = sym(t.write);
        if (t.move == tm::Move::right) {
            action.east = "r:" + t.next_state;
            action.west = "0";
        } else {
            action.west = "l:" + t.next_state;
            action.east = "0";
        }
        tiles.push_back(action);
    }
    for (const auto& q : emitted) {
        for (const auto& a : M.tape_symbols()) {
            tiles.push_back({head(q, a), "0", sym(a), "r:" + q});
            tiles.push_back({head(q, a), "l:" + q, sym(a), "0"});
        }
    }
    out.tiles = WangTileset(std::move(tiles));
    return out;
}

int max_seed_strip_height(const TmStripTileset& T, int h_max) {
    if (!T.seed_index) return 0;
    SftSpec spec = core::wang_to_sft(T.tiles);
    core::CompiledSpec cs(spec);
    int best = 0;
    for (int h = 1; h <= h_max; ++h) {
        Box strip({-h, 0}, {h, h - 1});
        std::vector<std::pair<Coord, SymbolId>> pinned{{{0, 0}, *T.seed_index}};
        if (!core::find_admissible(cs, strip, pinned)) break;
        best = h;
    }
    return best;
}

WangTileset layered_computation_tileset(const tm::TuringMachine& M) {
    const RobinsonDetail& rd = robinson_detail();
    TmStripTileset strip = tm_strip_tileset(M);
    std::set<int> ne(rd.ne_cross_tiles.begin(), rd.ne_cross_tiles.end());

    std::vector<WangTile> tiles;
    auto pair_tile = [](const WangTile& a, const WangTile& b) {
        return WangTile{a.north + "&" + b.north, a.east + "&" + b.east, a.south + "&" + b.south,
                        a.west + "&" + b.west};
    };
    WangTile off{"off", "off", "off", "off"};
    for (int r = 0; r < rd.tiles.size(); ++r) {
        tiles.push_back(pair_tile(rd.tiles.tile(r), off));
        for (int s = 0; s < strip.tiles.size(); ++s) {
            // computation seeds anchor on northeast-facing first-order crosses
            if (strip.seed_index && s == *strip.seed_index && !ne.count(r)) continue;
            tiles.push_back(pair_tile(rd.tiles.tile(r), strip.tiles.tile(s)));
        }
    }
    return WangTileset(std::move(tiles));
}

SftSpec conj_hardness_instance(const SftSpec& X, const tm::TuringMachine& M) {
    if (X.dim() != 2) throw InputError("conj_hardness_instance needs a 2-dimensional spec");
    SftSpec r_m = core::wang_to_sft(layered_computation_tileset(M));
    SftSpec right = product(r_m, full_shift(X.alphabet().size() + 1, 2));
    return disjoint_union(X, right);
}

}  // namespace sftkit::cons
