#include "sftkit/codes.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace sftkit::codes {

namespace {

std::string render_window(const std::vector<SymbolId>& window) {
    std::string s = "[";
    for (size_t i = 0; i < window.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(window[i]);
    }
    return s + "]";
}

uint64_t window_space(int nsyms, size_t cells) {
    uint64_t space = 1;
    for (size_t i = 0; i < cells; ++i) {
        if (nsyms != 0 && space > (1ull << 62) / static_cast<uint64_t>(nsyms))
            throw InputError("table window space too large");
        space *= static_cast<uint64_t>(nsyms);
    }
    return space;
}

}  // namespace

namespace rules {

struct Table {
    std::unordered_map<uint64_t, SymbolId> map;
    std::vector<SymbolId> lut;  // dense when the window space is small
    bool use_lut = false;
    std::optional<SymbolId> fallback;
};
struct Proj {
    size_t flat_index = 0;
    Coord offset;
    std::vector<SymbolId> symbol_map;
};
struct Compose {
    std::vector<SlidingBlockCode> chain;  // applied front to back
};
struct Star {
    std::shared_ptr<const SlidingBlockCode> inner;
    std::shared_ptr<const SftSpec> spec;
    std::shared_ptr<const CompiledSpec> forbidden;
    SymbolId star_src = 0;
    SymbolId star_tgt = 0;
};

}  // namespace rules

struct SlidingBlockCode::Impl {
    Alphabet source, target;
    int dim = 0;
    int radius = 0;

    using TableRule = rules::Table;
    using ProjRule = rules::Proj;
    using ComposeRule = rules::Compose;
    using StarRule = rules::Star;
    std::variant<TableRule, ProjRule, ComposeRule, StarRule> rule;

    uint64_t window_key(const std::vector<SymbolId>& window) const {
        uint64_t key = 0;
        auto a = static_cast<uint64_t>(source.size());
        for (SymbolId v : window) key = key * a + static_cast<uint64_t>(v);
        return key;
    }
};

SlidingBlockCode SlidingBlockCode::table(Alphabet source, Alphabet target, int dim, int radius,
                                         std::vector<std::pair<std::vector<SymbolId>, SymbolId>> entries,
                                         std::optional<SymbolId> fallback) {
    if (dim < 1 || radius < 0) throw InputError("bad code geometry");
    auto impl = std::make_shared<Impl>();
    impl->source = std::move(source);
    impl->target = std::move(target);
    impl->dim = dim;
    impl->radius = radius;
    size_t cells = Box::cube(dim, radius).size();
    uint64_t space = window_space(impl->source.size(), cells);

    Impl::TableRule rule;
    rule.fallback = fallback;
    rule.use_lut = space <= (1ull << 22);
    if (rule.use_lut) rule.lut.assign(static_cast<size_t>(space), kUnassigned);
    for (auto& [window, value] : entries) {
        if (window.size() != cells) throw InputError("table window size mismatch");
        for (SymbolId v : window)
            if (v < 0 || v >= impl->source.size()) throw InputError("table window symbol out of range");
        if (value < 0 || value >= impl->target.size()) throw InputError("table value out of range");
        uint64_t key = impl->window_key(window);
        if (rule.use_lut)
            rule.lut[static_cast<size_t>(key)] = value;
        else
            rule.map[key] = value;
    }
    impl->rule = std::move(rule);
    return SlidingBlockCode(std::move(impl));
}

SlidingBlockCode SlidingBlockCode::projection(Alphabet source, Alphabet target, int dim, int radius,
                                              Coord offset, std::vector<SymbolId> symbol_map) {
    if (dim < 1 || radius < 0) throw InputError("bad code geometry");
    Box win = Box::cube(dim, radius);
    if (static_cast<int>(offset.size()) != dim || !win.contains(offset))
        throw InputError("projection offset outside window");
    if (symbol_map.size() != static_cast<size_t>(source.size()))
        throw InputError("projection symbol map size mismatch");
    for (SymbolId v : symbol_map)
        if (v < 0 || v >= target.size()) throw InputError("projection value out of range");
    auto impl = std::make_shared<Impl>();
    impl->dim = dim;
    impl->radius = radius;
    Impl::ProjRule rule;
    rule.flat_index = win.index(offset);
    rule.offset = std::move(offset);
    rule.symbol_map = std::move(symbol_map);
    impl->source = std::move(source);
    impl->target = std::move(target);
    impl->rule = std::move(rule);
    return SlidingBlockCode(std::move(impl));
}

SlidingBlockCode SlidingBlockCode::identity(const Alphabet& alphabet, int dim) {
    std::vector<SymbolId> id_map(static_cast<size_t>(alphabet.size()));
    for (size_t i = 0; i < id_map.size(); ++i) id_map[i] = static_cast<SymbolId>(i);
    return projection(alphabet, alphabet, dim, 0, zero_coord(dim), std::move(id_map));
}

int SlidingBlockCode::dim() const { return impl_->dim; }
int SlidingBlockCode::radius() const { return impl_->radius; }
const Alphabet& SlidingBlockCode::source() const { return impl_->source; }
const Alphabet& SlidingBlockCode::target() const { return impl_->target; }

SlidingBlockCode::RuleKind SlidingBlockCode::kind() const {
    if (std::holds_alternative<Impl::TableRule>(impl_->rule)) return RuleKind::table;
    if (std::holds_alternative<Impl::ProjRule>(impl_->rule)) return RuleKind::projection;
    if (std::holds_alternative<Impl::ComposeRule>(impl_->rule)) return RuleKind::composition;
    return RuleKind::star;
}

std::vector<std::pair<std::vector<SymbolId>, SymbolId>> SlidingBlockCode::table_entries() const {
    const auto& t = std::get<Impl::TableRule>(impl_->rule);
    size_t cells = Box::cube(impl_->dim, impl_->radius).size();
    auto a = static_cast<uint64_t>(impl_->source.size());
    std::vector<uint64_t> keys;
    if (t.use_lut) {
        for (size_t k = 0; k < t.lut.size(); ++k)
            if (t.lut[k] != kUnassigned) keys.push_back(k);
    } else {
        for (const auto& [k, v] : t.map) keys.push_back(k);
        std::sort(keys.begin(), keys.end());
    }
    std::vector<std::pair<std::vector<SymbolId>, SymbolId>> out;
    out.reserve(keys.size());
    for (uint64_t key : keys) {
        std::vector<SymbolId> window(cells);
        uint64_t k = key;
        for (size_t i = cells; i-- > 0;) {
            window[i] = static_cast<SymbolId>(k % a);
            k /= a;
        }
        SymbolId v = t.use_lut ? t.lut[static_cast<size_t>(key)] : t.map.at(key);
        out.emplace_back(std::move(window), v);
    }
    return out;
}

std::optional<SymbolId> SlidingBlockCode::table_fallback() const {
    return std::get<Impl::TableRule>(impl_->rule).fallback;
}

const Coord& SlidingBlockCode::proj_offset() const {
    return std::get<Impl::ProjRule>(impl_->rule).offset;
}

const std::vector<SymbolId>& SlidingBlockCode::proj_symbol_map() const {
    return std::get<Impl::ProjRule>(impl_->rule).symbol_map;
}

const std::vector<SlidingBlockCode>& SlidingBlockCode::chain() const {
    return std::get<Impl::ComposeRule>(impl_->rule).chain;
}

const SlidingBlockCode& SlidingBlockCode::star_inner() const {
    return *std::get<Impl::StarRule>(impl_->rule).inner;
}

const SftSpec& SlidingBlockCode::star_source_spec() const {
    return *std::get<Impl::StarRule>(impl_->rule).spec;
}

SymbolId SlidingBlockCode::eval_window(const std::vector<SymbolId>& window) const {
    const Impl& im = *impl_;
    if (window.size() != Box::cube(im.dim, im.radius).size())
        throw InputError("window size mismatch");

    if (const auto* t = std::get_if<Impl::TableRule>(&im.rule)) {
        uint64_t key = im.window_key(window);
        SymbolId out = kUnassigned;
        if (t->use_lut) {
            out = t->lut[static_cast<size_t>(key)];
        } else {
            auto it = t->map.find(key);
            if (it != t->map.end()) out = it->second;
        }
        if (out == kUnassigned) {
            if (t->fallback) return *t->fallback;
            throw RuleDomainError(render_window(window));
        }
        return out;
    }
    if (const auto* p = std::get_if<Impl::ProjRule>(&im.rule)) {
        return p->symbol_map[static_cast<size_t>(window[p->flat_index])];
    }
    if (const auto* c = std::get_if<Impl::ComposeRule>(&im.rule)) {
        // shrink the window stage by stage
        int r = im.radius;
        std::vector<SymbolId> buf = window;
        for (const auto& code : c->chain) {
            int rin = r;
            r -= code.radius();
            Box in_box = Box::cube(im.dim, rin);
            Box out_box = Box::cube(im.dim, r);
            std::vector<SymbolId> next(out_box.size());
            auto out_cells = out_box.cells();
            for (size_t i = 0; i < out_cells.size(); ++i)
                next[i] = code.eval_in_block(in_box, buf, out_cells[i]);
            buf = std::move(next);
        }
        return buf[0];
    }
    const auto& s = std::get<Impl::StarRule>(im.rule);
    for (SymbolId v : window) {
        if (v == s.star_src) return s.star_tgt;
        if (v < 0 || v > s.star_src) throw InputError("window symbol out of range");
    }
    Box win = Box::cube(im.dim, im.radius);
    if (!s.forbidden->block_admissible(win, window)) return s.star_tgt;
    // window clean: act as the inner code on the centered sub-window
    int rin = s.inner->radius();
    Box inner_box = Box::cube(im.dim, rin);
    std::vector<SymbolId> sub(inner_box.size());
    auto cells = inner_box.cells();
    for (size_t i = 0; i < cells.size(); ++i) sub[i] = window[win.index(cells[i])];
    return s.inner->eval_window(sub);
}

SymbolId SlidingBlockCode::eval_in_block(const Box& box, const std::vector<SymbolId>& block,
                                         const Coord& at) const {
    Box win = Box::cube(impl_->dim, impl_->radius);
    std::vector<SymbolId> window(win.size());
    auto offs = win.cells();
    for (size_t i = 0; i < offs.size(); ++i) {
        Coord c = add(at, offs[i]);
        if (!box.contains(c)) throw InputError("window reaches outside block");
        SymbolId v = block[box.index(c)];
        if (v == kUnassigned) throw InputError("window reads unassigned cell");
        window[i] = v;
    }
    return eval_window(window);
}

Pattern apply_to_pattern(const SlidingBlockCode& F, const Pattern& p) {
    if (p.dim() != F.dim()) throw InputError("pattern dimension mismatch");
    for (const auto& [c, s] : p.cells()) F.source().require(s);
    Pattern out(p.dim());
    if (p.empty()) return out;

    auto offs = Box::cube(F.dim(), F.radius()).cells();
    auto bb = p.bounding_box();
    Coord lo = bb->lo(), hi = bb->hi();
    for (size_t i = 0; i < lo.size(); ++i) {
        lo[i] += F.radius();
        hi[i] -= F.radius();
        if (lo[i] > hi[i]) return out;  // erosion empty
    }
    std::vector<SymbolId> window(offs.size());
    for (const Coord& z : Box(lo, hi).cells()) {
        bool covered = true;
        for (size_t i = 0; i < offs.size(); ++i) {
            const std::string* s = p.at(add(z, offs[i]));
            if (!s) {
                covered = false;
                break;
            }
            window[i] = F.source().require(*s);
        }
        if (covered) out.set(z, F.target().name(F.eval_window(window)));
    }
    return out;
}

PeriodicConfig apply_to_torus(const SlidingBlockCode& F, const PeriodicConfig& c) {
    if (c.dim() != F.dim()) throw InputError("torus dimension mismatch");
    for (SymbolId v : c.cells())
        if (v < 0 || v >= F.source().size()) throw InputError("torus symbol out of range");

    auto offs = Box::cube(F.dim(), F.radius()).cells();
    Coord hi(c.periods().size());
    for (size_t i = 0; i < c.periods().size(); ++i) hi[i] = c.periods()[i] - 1;
    Box domain(zero_coord(F.dim()), hi);

    std::vector<SymbolId> out;
    out.reserve(domain.size());
    std::vector<SymbolId> window(offs.size());
    for (const Coord& z : domain.cells()) {
        for (size_t i = 0; i < offs.size(); ++i) window[i] = c.at(add(z, offs[i]));
        out.push_back(F.eval_window(window));
    }
    return PeriodicConfig(c.periods(), std::move(out));
}

SlidingBlockCode compose(const SlidingBlockCode& G, const SlidingBlockCode& F) {
    if (F.target() != G.source()) throw InputError("compose: alphabet mismatch");
    if (F.dim() != G.dim()) throw InputError("compose: dimension mismatch");
    auto impl = std::make_shared<SlidingBlockCode::Impl>();
    impl->source = F.source();
    impl->target = G.target();
    impl->dim = F.dim();
    impl->radius = F.radius() + G.radius();
    SlidingBlockCode::Impl::ComposeRule rule;
    auto append = [&rule](const SlidingBlockCode& code) {
        if (const auto* c = std::get_if<SlidingBlockCode::Impl::ComposeRule>(&code.impl().rule)) {
            for (const auto& part : c->chain) rule.chain.push_back(part);
        } else {
            rule.chain.push_back(code);
        }
    };
    append(F);
    append(G);
    impl->rule = std::move(rule);
    return SlidingBlockCode(std::move(impl));
}

std::string star_symbol_name(const Alphabet& a) {
    std::string name = "*";
    while (a.find(name)) name += '*';
    return name;
}

Alphabet star_alphabet(const Alphabet& a) {
    auto symbols = a.symbols();
    symbols.push_back(star_symbol_name(a));
    return Alphabet(std::move(symbols));
}

SlidingBlockCode star_augment(const SlidingBlockCode& F, const SftSpec& X) {
    if (F.source() != X.alphabet()) throw InputError("star_augment: source alphabet mismatch");
    if (F.dim() != X.dim()) throw InputError("star_augment: dimension mismatch");
    auto impl = std::make_shared<SlidingBlockCode::Impl>();
    impl->source = star_alphabet(X.alphabet());
    impl->target = star_alphabet(F.target());
    impl->dim = F.dim();
    impl->radius = std::max(F.radius(), X.bounding_radius());
    SlidingBlockCode::Impl::StarRule rule;
    rule.inner = std::make_shared<const SlidingBlockCode>(F);
    rule.spec = std::make_shared<const SftSpec>(X);
    rule.forbidden = std::make_shared<const CompiledSpec>(X);
    rule.star_src = X.alphabet().size();
    rule.star_tgt = F.target().size();
    impl->rule = std::move(rule);
    return SlidingBlockCode(std::move(impl));
}

SftToWangResult sft_to_wang(const SftSpec& X) {
    if (X.dim() != 2) throw InputError("sft_to_wang needs dimension 2");
    if (X.bounding_radius() > 1)
        throw InputError("sft_to_wang: forbidden supports must fit in B_1 (see normalize_to_radius)");

    Box win = Box::cube(2, 1);
    auto cells = win.cells();  // canonical: (-1,-1),(-1,0),(-1,1),(0,-1),...

    std::vector<std::vector<SymbolId>> blocks;
    core::enumerate_admissible_blocks(X, 1, [&](const std::vector<SymbolId>& b) {
        blocks.push_back(b);
        return true;
    });

    // overlap contents in each direction, as canonical id lists
    auto overlap = [&](const std::vector<SymbolId>& b, int axis, int keep_sign) {
        std::vector<SymbolId> out;
        for (size_t i = 0; i < cells.size(); ++i) {
            int c = cells[i][static_cast<size_t>(axis)];
            if (keep_sign > 0 ? c >= 0 : c <= 0) out.push_back(b[i]);
        }
        return out;
    };

    std::map<std::vector<SymbolId>, int> hcolors, vcolors;
    auto color_id = [](std::map<std::vector<SymbolId>, int>& pool, const std::vector<SymbolId>& key) {
        auto [it, inserted] = pool.emplace(key, static_cast<int>(pool.size()));
        return it->second;
    };
    // two passes so color ids are independent of tile order: collect, sort
    for (const auto& b : blocks) {
        hcolors.emplace(overlap(b, 0, +1), 0);
        hcolors.emplace(overlap(b, 0, -1), 0);
        vcolors.emplace(overlap(b, 1, +1), 0);
        vcolors.emplace(overlap(b, 1, -1), 0);
    }
    int h = 0, v = 0;
    for (auto& [key, id] : hcolors) id = h++;
    for (auto& [key, id] : vcolors) id = v++;

    std::vector<core::WangTile> tiles;
    tiles.reserve(blocks.size());
    for (const auto& b : blocks) {
        core::WangTile t;
        t.east = "h" + std::to_string(color_id(hcolors, overlap(b, 0, +1)));
        t.west = "h" + std::to_string(color_id(hcolors, overlap(b, 0, -1)));
        t.north = "v" + std::to_string(color_id(vcolors, overlap(b, 1, +1)));
        t.south = "v" + std::to_string(color_id(vcolors, overlap(b, 1, -1)));
        tiles.push_back(std::move(t));
    }
    WangTileset tileset(tiles);
    SftSpec Y = core::wang_to_sft(tileset);

    std::vector<std::pair<std::vector<SymbolId>, SymbolId>> entries;
    std::vector<SymbolId> centers;
    for (size_t i = 0; i < blocks.size(); ++i) {
        entries.emplace_back(blocks[i], static_cast<SymbolId>(i));
        centers.push_back(blocks[i][win.index(zero_coord(2))]);
    }
    SlidingBlockCode encode =
        SlidingBlockCode::table(X.alphabet(), Y.alphabet(), 2, 1, std::move(entries));
    SlidingBlockCode decode =
        SlidingBlockCode::projection(Y.alphabet(), X.alphabet(), 2, 0, zero_coord(2), std::move(centers));
    return SftToWangResult{std::move(tileset), std::move(encode), std::move(decode)};
}

}  // namespace sftkit::codes
