#include "sftkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <unordered_map>

#include "sftkit/compiled.hpp"
#include "sftkit/pool.hpp"

namespace sftkit::verify {

using core::CompiledSpec;

namespace {

// ---- precompiled admissibility check for one fixed box ------------------

struct BlockChecker {
    const CompiledSpec* cs = nullptr;
    struct PairCheck {
        int axis;
        size_t a, b;
    };
    std::vector<PairCheck> pairs;
    struct GenCheck {
        size_t pattern;
        std::vector<size_t> cells;
    };
    std::vector<GenCheck> gens;
    bool any_banned = false;

    BlockChecker() = default;
    BlockChecker(const CompiledSpec& spec, const Box& box) : cs(&spec) {
        for (SymbolId v = 0; v < spec.nsyms(); ++v)
            if (spec.symbol_banned(v)) any_banned = true;
        auto cells = box.cells();
        if (spec.has_axis_constraints()) {
            for (size_t i = 0; i < cells.size(); ++i) {
                for (int a = 0; a < spec.dim(); ++a) {
                    Coord nb = cells[i];
                    ++nb[static_cast<size_t>(a)];
                    if (box.contains(nb)) pairs.push_back({a, i, box.index(nb)});
                }
            }
        }
        for (size_t pi = 0; pi < spec.general().size(); ++pi) {
            const auto& gp = spec.general()[pi];
            for (size_t anchor = 0; anchor < cells.size(); ++anchor) {
                GenCheck gc;
                gc.pattern = pi;
                bool fits = true;
                for (const auto& off : gp.offsets) {
                    Coord c = add(cells[anchor], off);
                    if (!box.contains(c)) {
                        fits = false;
                        break;
                    }
                    gc.cells.push_back(box.index(c));
                }
                if (fits) gens.push_back(std::move(gc));
            }
        }
    }

    bool ok(const SymbolId* vals, size_t n) const {
        if (any_banned) {
            for (size_t i = 0; i < n; ++i)
                if (cs->symbol_banned(vals[i])) return false;
        }
        for (const auto& p : pairs)
            if (cs->axis_pair_forbidden(p.axis, vals[p.a], vals[p.b])) return false;
        for (const auto& g : gens) {
            const auto& gp = cs->general()[g.pattern];
            bool match = true;
            for (size_t j = 0; j < g.cells.size(); ++j) {
                if (vals[g.cells[j]] != gp.symbols[j]) {
                    match = false;
                    break;
                }
            }
            if (match) return false;
        }
        return true;
    }
};

// ---- lean code evaluation on gathered windows ----------------------------

struct FastEval {
    enum class K { point, lut, hash, generic } k = K::generic;
    const SlidingBlockCode* code = nullptr;
    std::vector<SymbolId> map;  // point: symbol map, lut: dense table
    std::unordered_map<uint64_t, SymbolId> hash;
    SymbolId fallback = kUnassigned;
    uint64_t radix = 0;
    size_t window_cells = 0;
    size_t point_index = 0;  // index of the projection cell within the window

    static FastEval build(const SlidingBlockCode& code) {
        FastEval fe;
        fe.code = &code;
        Box win = Box::cube(code.dim(), code.radius());
        fe.window_cells = win.size();
        fe.radix = static_cast<uint64_t>(code.source().size());
        if (code.kind() == SlidingBlockCode::RuleKind::projection) {
            fe.k = K::point;
            fe.map = code.proj_symbol_map();
            fe.point_index = win.index(code.proj_offset());
            return fe;
        }
        if (code.kind() == SlidingBlockCode::RuleKind::table) {
            if (auto fb = code.table_fallback()) fe.fallback = *fb;
            uint64_t space = 1;
            bool small = true;
            for (size_t i = 0; i < fe.window_cells; ++i) {
                if (space > (1ull << 22) / std::max<uint64_t>(1, fe.radix)) {
                    small = false;
                    break;
                }
                space *= fe.radix;
            }
            auto entries = code.table_entries();
            if (small) {
                fe.k = K::lut;
                fe.map.assign(static_cast<size_t>(space), kUnassigned);
                for (auto& [w, v] : entries) {
                    uint64_t key = 0;
                    for (SymbolId s : w) key = key * fe.radix + static_cast<uint64_t>(s);
                    fe.map[static_cast<size_t>(key)] = v;
                }
            } else {
                fe.k = K::hash;
                for (auto& [w, v] : entries) {
                    uint64_t key = 0;
                    for (SymbolId s : w) key = key * fe.radix + static_cast<uint64_t>(s);
                    fe.hash.emplace(key, v);
                }
            }
            return fe;
        }
        fe.k = K::generic;
        return fe;
    }

    bool pointwise() const { return k == K::point; }

    SymbolId eval_point(SymbolId v) const { return map[static_cast<size_t>(v)]; }

    SymbolId eval_gathered(const SymbolId* w, std::vector<SymbolId>& scratch) const {
        switch (k) {
            case K::point:
                return map[static_cast<size_t>(w[point_index])];
            case K::lut: {
                uint64_t key = 0;
                for (size_t i = 0; i < window_cells; ++i)
                    key = key * radix + static_cast<uint64_t>(w[i]);
                SymbolId out = map[static_cast<size_t>(key)];
                if (out == kUnassigned) {
                    if (fallback != kUnassigned) return fallback;
                    scratch.assign(w, w + window_cells);
                    return code->eval_window(scratch);  // raises the domain error
                }
                return out;
            }
            case K::hash: {
                uint64_t key = 0;
                for (size_t i = 0; i < window_cells; ++i)
                    key = key * radix + static_cast<uint64_t>(w[i]);
                auto it = hash.find(key);
                if (it != hash.end()) return it->second;
                if (fallback != kUnassigned) return fallback;
                scratch.assign(w, w + window_cells);
                return code->eval_window(scratch);
            }
            case K::generic:
            default:
                scratch.assign(w, w + window_cells);
                return code->eval_window(scratch);
        }
    }
};

// ---- the certificate block test ------------------------------------------

// Tests (outer' o inner')(c) == c at the origin. Inner star checks are
// skipped: candidates come from admissible enumerations, where the inner
// windows can contain neither stars nor forbidden patterns — so the value
// only depends on the candidate's restriction to radius
// r_inner + r_outer', which is the scanned box. Candidates stand in for
// the full B_k blocks through the extensibility filter in scan_side.
struct SideTest {
    Box cbox;
    size_t origin = 0;
    FastEval inner, outer;
    std::vector<std::vector<size_t>> inner_windows;  // per mid cell
    std::vector<size_t> inner_point;                 // pointwise shortcut
    bool inner_is_point = false;
    Box mid_box;
    BlockChecker outer_star_check;
    std::vector<size_t> outer_window;

    struct Scratch {
        std::vector<SymbolId> mid, gather, generic;
    };

    SideTest(const SlidingBlockCode& first, const SlidingBlockCode& second, const SftSpec& mid_spec,
             int r_outer_aug)
        : cbox(Box::cube(first.dim(), first.radius() + r_outer_aug)),
          inner(FastEval::build(first)),
          outer(FastEval::build(second)),
          mid_box(Box::cube(first.dim(), r_outer_aug)),
          outer_star_check(BlockChecker()) {
        origin = cbox.index(zero_coord(first.dim()));
        mid_cs_ = std::make_shared<CompiledSpec>(mid_spec);
        outer_star_check = BlockChecker(*mid_cs_, mid_box);

        Box inner_win = Box::cube(first.dim(), first.radius());
        auto inner_offs = inner_win.cells();
        inner_is_point = inner.pointwise();
        for (const Coord& z : mid_box.cells()) {
            if (inner_is_point) {
                Coord c = add(z, inner_offs[inner.point_index]);
                inner_point.push_back(cbox.index(c));
            } else {
                std::vector<size_t> idx;
                idx.reserve(inner_offs.size());
                for (const auto& off : inner_offs) idx.push_back(cbox.index(add(z, off)));
                inner_windows.push_back(std::move(idx));
            }
        }
        Box outer_win = Box::cube(first.dim(), second.radius());
        for (const Coord& off : outer_win.cells()) outer_window.push_back(mid_box.index(off));
    }

    size_t block_cells() const { return cbox.size(); }

    Scratch make_scratch() const {
        Scratch s;
        s.mid.resize(mid_box.size());
        s.gather.resize(std::max(inner.window_cells, outer.window_cells));
        return s;
    }

    bool pass(const SymbolId* c, Scratch& s) const {
        size_t mids = s.mid.size();
        if (inner_is_point) {
            for (size_t m = 0; m < mids; ++m) s.mid[m] = inner.eval_point(c[inner_point[m]]);
        } else {
            for (size_t m = 0; m < mids; ++m) {
                const auto& idx = inner_windows[m];
                for (size_t i = 0; i < idx.size(); ++i) s.gather[i] = c[idx[i]];
                s.mid[m] = inner.eval_gathered(s.gather.data(), s.generic);
            }
        }
        // outer star augmentation: forbidden pattern in the mid window -> star
        if (!outer_star_check.ok(s.mid.data(), s.mid.size())) return false;
        for (size_t i = 0; i < outer.window_cells; ++i) s.gather[i] = s.mid[outer_window[i]];
        SymbolId out = outer.eval_gathered(s.gather.data(), s.generic);
        return out == c[origin];
    }

private:
    std::shared_ptr<CompiledSpec> mid_cs_;
};

// ---- fast 2D enumeration for axis-constraint specs -----------------------

struct Scan2D {
    int nsyms = 0;
    int width = 0, height = 0;
    std::vector<std::vector<SymbolId>> cont;  // (west+1) x (south+1) continuation lists
    std::vector<uint8_t> has_west, has_south;

    Scan2D(const CompiledSpec& cs, const Box& box) {
        nsyms = cs.nsyms();
        width = box.extent(0);
        height = box.extent(1);
        int a1 = nsyms + 1;
        cont.resize(static_cast<size_t>(a1) * static_cast<size_t>(a1));
        for (int w = 0; w <= nsyms; ++w) {
            for (int s = 0; s <= nsyms; ++s) {
                auto& list = cont[static_cast<size_t>(w) * static_cast<size_t>(a1) + static_cast<size_t>(s)];
                for (SymbolId v = 0; v < nsyms; ++v) {
                    if (cs.symbol_banned(v)) continue;
                    if (w < nsyms && cs.axis_pair_forbidden(0, w, v)) continue;
                    if (s < nsyms && cs.axis_pair_forbidden(1, s, v)) continue;
                    list.push_back(v);
                }
            }
        }
        size_t n = static_cast<size_t>(width) * static_cast<size_t>(height);
        has_west.resize(n);
        has_south.resize(n);
        for (size_t i = 0; i < n; ++i) {
            has_west[i] = i >= static_cast<size_t>(height);
            has_south[i] = (i % static_cast<size_t>(height)) != 0;
        }
    }

    // Enumerate admissible completions of `prefix` in canonical order;
    // leaf(vals) -> bool continue. Returns false when stopped early.
    template <typename Leaf>
    bool run(const std::vector<SymbolId>& prefix, Leaf&& leaf) const {
        size_t n = static_cast<size_t>(width) * static_cast<size_t>(height);
        std::vector<SymbolId> vals(n, kUnassigned);
        for (size_t i = 0; i < prefix.size(); ++i) vals[i] = prefix[i];
        if (prefix.size() == n) return leaf(vals);

        size_t start = prefix.size();
        std::vector<const std::vector<SymbolId>*> lists(n);
        std::vector<size_t> pos(n, 0);
        size_t d = start;
        size_t a1 = static_cast<size_t>(nsyms) + 1;
        size_t hh = static_cast<size_t>(height);
        auto list_for = [&](size_t i) -> const std::vector<SymbolId>* {
            size_t w = has_west[i] ? static_cast<size_t>(vals[i - hh]) : static_cast<size_t>(nsyms);
            size_t s = has_south[i] ? static_cast<size_t>(vals[i - 1]) : static_cast<size_t>(nsyms);
            return &cont[w * a1 + s];
        };
        lists[d] = list_for(d);
        pos[d] = 0;
        for (;;) {
            if (pos[d] >= lists[d]->size()) {
                // backtrack
                if (d == start) return true;
                --d;
                vals[d] = kUnassigned;
                ++pos[d];
                continue;
            }
            vals[d] = (*lists[d])[pos[d]];
            if (d + 1 == n) {
                if (!leaf(vals)) return false;
                ++pos[d];
                continue;
            }
            ++d;
            lists[d] = list_for(d);
            pos[d] = 0;
        }
    }
};

// Valid prefixes of length min(2, cells) in canonical order, for task
// partitioning.
std::vector<std::vector<SymbolId>> scan_prefixes(const CompiledSpec& cs, const Box& box) {
    std::vector<std::vector<SymbolId>> out;
    size_t n = box.size();
    if (static_cast<size_t>(cs.nsyms()) == 0) return out;
    if (n == 1) {
        for (SymbolId v = 0; v < cs.nsyms(); ++v)
            if (!cs.symbol_banned(v)) out.push_back({v});
        return out;
    }
    std::vector<SymbolId> vals(n, kUnassigned);
    for (SymbolId v0 = 0; v0 < cs.nsyms(); ++v0) {
        vals[0] = v0;
        if (!cs.assignment_ok(box, vals, 0)) continue;
        for (SymbolId v1 = 0; v1 < cs.nsyms(); ++v1) {
            vals[1] = v1;
            if (cs.assignment_ok(box, vals, 1)) out.push_back({v0, v1});
            vals[1] = kUnassigned;
        }
        vals[0] = kUnassigned;
    }
    return out;
}

struct SideScanResult {
    bool refuted = false;
    std::vector<SymbolId> refuting_block;  // extended B_k block
    std::exception_ptr error;
};

// Scan all admissible B_rc blocks of `spec`; where the round-trip test
// fails, try to extend the candidate to an admissible B_k block. The
// first (canonical order) extensible failure refutes the certificate.
SideScanResult scan_side(const SftSpec& spec, const SideTest& test, int k, int threads) {
    const Box& cbox = test.cbox;
    CompiledSpec cs(spec);
    Box kbox = Box::cube(spec.dim(), k);
    auto cells = cbox.cells();

    auto extend = [&](const std::vector<SymbolId>& c) -> std::optional<std::vector<SymbolId>> {
        std::vector<std::pair<Coord, SymbolId>> pinned;
        pinned.reserve(cells.size());
        for (size_t i = 0; i < cells.size(); ++i) pinned.emplace_back(cells[i], c[i]);
        return core::find_admissible(cs, kbox, pinned);
    };

    auto prefixes = scan_prefixes(cs, cbox);
    if (prefixes.empty()) return {};

    bool fast = spec.dim() == 2 && cs.general().empty();
    std::optional<Scan2D> scan;
    if (fast) scan.emplace(cs, cbox);

    std::vector<SideScanResult> results(prefixes.size());
    std::atomic<size_t> best{prefixes.size()};

    parallel_for(threads, prefixes.size(), [&](size_t t) {
        if (t > best.load(std::memory_order_relaxed)) return;
        SideScanResult& res = results[t];
        SideTest::Scratch scratch = test.make_scratch();
        auto leaf = [&](const std::vector<SymbolId>& vals) {
            if (test.pass(vals.data(), scratch)) return true;
            if (auto ext = extend(vals)) {
                res.refuted = true;
                res.refuting_block = *ext;
                return false;  // first extensible failure in this prefix
            }
            return true;
        };
        try {
            if (fast) {
                scan->run(prefixes[t], leaf);
            } else {
                std::vector<std::pair<Coord, SymbolId>> pinned;
                for (size_t i = 0; i < prefixes[t].size(); ++i)
                    pinned.emplace_back(cells[i], prefixes[t][i]);
                core::for_each_admissible(cs, cbox, pinned, leaf);
            }
        } catch (...) {
            res.error = std::current_exception();
        }
        if (res.refuted || res.error) {
            size_t cur = best.load();
            while (t < cur && !best.compare_exchange_weak(cur, t)) {
            }
        }
    });

    for (auto& r : results) {
        if (r.error) std::rethrow_exception(r.error);
        if (r.refuted) return r;
    }
    return {};
}

}  // namespace

CertificateVerdict verify_conjugacy_certificate(const SftSpec& X, const SftSpec& Y,
                                                const ConjugacyCertificate& cert, int threads) {
    const SlidingBlockCode& F = cert.F;
    const SlidingBlockCode& G = cert.G;
    if (F.dim() != X.dim() || G.dim() != X.dim() || Y.dim() != X.dim())
        throw InputError("certificate dimension mismatch");
    if (F.source() != X.alphabet() || F.target() != Y.alphabet())
        throw InputError("F must map the source spec's alphabet to the target's");
    if (G.source() != Y.alphabet() || G.target() != X.alphabet())
        throw InputError("G must map the target spec's alphabet to the source's");

    int rF_aug = std::max(F.radius(), X.bounding_radius());
    int rG_aug = std::max(G.radius(), Y.bounding_radius());
    if (cert.k <= rF_aug + rG_aug)
        throw InputError("certificate k must exceed the sum of star-augmented radii");

    int nthreads = resolve_thread_count(threads);

    CertificateVerdict v;
    v.k = cert.k;

    // source side: (G' o F')(b) at 0 == b at 0 for admissible B_k blocks of X
    SideTest x_test(F, G, Y, rG_aug);
    SideScanResult xr = scan_side(X, x_test, cert.k, nthreads);
    if (xr.refuted) {
        v.status = Status::refuted;
        v.counterexample =
            core::Pattern::from_block(Box::cube(X.dim(), cert.k), xr.refuting_block, X.alphabet());
        v.counterexample_in_target = false;
        return v;
    }
    // target side: (F' o G')(b) at 0 == b at 0 for admissible B_k blocks of Y
    SideTest y_test(G, F, X, rF_aug);
    SideScanResult yr = scan_side(Y, y_test, cert.k, nthreads);
    if (yr.refuted) {
        v.status = Status::refuted;
        v.counterexample =
            core::Pattern::from_block(Box::cube(X.dim(), cert.k), yr.refuting_block, Y.alphabet());
        v.counterexample_in_target = true;
        return v;
    }
    v.status = Status::proven;
    return v;
}

ConjugacySearchVerdict search_conjugacy(const SftSpec& X, const SftSpec& Y, int max_radius, int max_k) {
    if (max_radius < 0 || max_k < 0) throw InputError("budgets must be >= 0");
    if (X.dim() != Y.dim()) throw InputError("dimension mismatch");
    ConjugacySearchVerdict out;
    out.max_radius = max_radius;
    out.max_k = max_k;

    for (int rsum = 0; rsum <= 2 * max_radius; ++rsum) {
        for (int rF = std::max(0, rsum - max_radius); rF <= std::min(rsum, max_radius); ++rF) {
            int rG = rsum - rF;
            int rF_aug = std::max(rF, X.bounding_radius());
            int rG_aug = std::max(rG, Y.bounding_radius());
            int k_min = rF_aug + rG_aug + 1;
            if (k_min > max_k) continue;

            std::vector<std::vector<SymbolId>> xblocks, yblocks;
            core::enumerate_admissible_blocks(X, rF, [&](const std::vector<SymbolId>& b) {
                xblocks.push_back(b);
                return true;
            });
            core::enumerate_admissible_blocks(Y, rG, [&](const std::vector<SymbolId>& b) {
                yblocks.push_back(b);
                return true;
            });
            // a local map into an empty alphabet cannot exist
            if (Y.alphabet().size() == 0 && !xblocks.empty()) continue;
            if (X.alphabet().size() == 0 && !yblocks.empty()) continue;

            // lexicographic odometers over both table spaces
            std::vector<SymbolId> ftab(xblocks.size(), 0), gtab(yblocks.size(), 0);
            auto bump = [](std::vector<SymbolId>& t, int base) {
                for (size_t i = t.size(); i-- > 0;) {
                    if (++t[i] < base) return true;
                    t[i] = 0;
                }
                return false;
            };
            auto make_code = [&](const std::vector<std::vector<SymbolId>>& blocks,
                                 const std::vector<SymbolId>& tab, const core::Alphabet& src,
                                 const core::Alphabet& tgt, int r) {
                std::vector<std::pair<std::vector<SymbolId>, SymbolId>> entries;
                entries.reserve(blocks.size());
                for (size_t i = 0; i < blocks.size(); ++i) entries.emplace_back(blocks[i], tab[i]);
                return SlidingBlockCode::table(src, tgt, X.dim(), r, std::move(entries), 0);
            };

            bool f_more = true;
            while (f_more) {
                SlidingBlockCode F = make_code(xblocks, ftab, X.alphabet(), Y.alphabet(), rF);
                std::fill(gtab.begin(), gtab.end(), 0);
                bool g_more = true;
                while (g_more) {
                    SlidingBlockCode G = make_code(yblocks, gtab, Y.alphabet(), X.alphabet(), rG);
                    for (int k = k_min; k <= max_k; ++k) {
                        ConjugacyCertificate cert{F, G, k};
                        CertificateVerdict cv = verify_conjugacy_certificate(X, Y, cert);
                        if (cv.status == Status::proven) {
                            out.status = Status::proven;
                            out.certificate = cert;
                            return out;
                        }
                    }
                    g_more = !gtab.empty() && bump(gtab, X.alphabet().size());
                }
                f_more = !ftab.empty() && bump(ftab, Y.alphabet().size());
            }
        }
    }
    out.status = Status::unknown;
    return out;
}

InclusionVerdict check_factor_inclusion(const SlidingBlockCode& F, const SftSpec& X, const SftSpec& Y,
                                        int r) {
    if (F.dim() != X.dim() || Y.dim() != X.dim()) throw InputError("dimension mismatch");
    if (F.source() != X.alphabet() || F.target() != Y.alphabet())
        throw InputError("code alphabets must match the specs");
    int rY = Y.bounding_radius();
    if (r < F.radius() + rY) throw InputError("radius too small: need r >= r_F + r_Y");

    int margin = r - F.radius() - rY;
    Box mbox = Box::cube(X.dim(), r);
    Box img_box = Box::cube(X.dim(), margin + rY);
    Box center_box = Box::cube(X.dim(), margin);

    CompiledSpec ycs(Y);
    // forbidden placements anchored in the center region
    BlockChecker center_check;
    center_check.cs = &ycs;
    {
        auto img_cells = img_box.cells();
        if (ycs.has_axis_constraints()) {
            for (size_t i = 0; i < img_cells.size(); ++i) {
                if (!center_box.contains(img_cells[i])) continue;
                for (int a = 0; a < X.dim(); ++a) {
                    Coord nb = img_cells[i];
                    ++nb[static_cast<size_t>(a)];
                    if (img_box.contains(nb)) center_check.pairs.push_back({a, i, img_box.index(nb)});
                }
            }
        }
        for (SymbolId v = 0; v < ycs.nsyms(); ++v)
            if (ycs.symbol_banned(v)) center_check.any_banned = true;
        for (size_t pi = 0; pi < ycs.general().size(); ++pi) {
            const auto& gp = ycs.general()[pi];
            for (const Coord& anchor : center_box.cells()) {
                BlockChecker::GenCheck gc;
                gc.pattern = pi;
                bool fits = true;
                for (const auto& off : gp.offsets) {
                    Coord c = add(anchor, off);
                    if (!img_box.contains(c)) {
                        fits = false;
                        break;
                    }
                    gc.cells.push_back(img_box.index(c));
                }
                if (fits) center_check.gens.push_back(std::move(gc));
            }
        }
    }
    // the banned-symbol rule must only apply to the center region
    std::vector<size_t> center_cells;
    {
        auto img_cells = img_box.cells();
        for (size_t i = 0; i < img_cells.size(); ++i)
            if (center_box.contains(img_cells[i])) center_cells.push_back(i);
    }
    center_check.any_banned = false;  // handled separately below

    FastEval feval = FastEval::build(F);
    Box fwin = Box::cube(X.dim(), F.radius());
    auto foffs = fwin.cells();
    std::vector<std::vector<size_t>> windows;
    for (const Coord& z : img_box.cells()) {
        std::vector<size_t> idx;
        idx.reserve(foffs.size());
        for (const auto& off : foffs) idx.push_back(mbox.index(add(z, off)));
        windows.push_back(std::move(idx));
    }

    InclusionVerdict out;
    out.r = r;
    CompiledSpec xcs(X);
    std::vector<SymbolId> img(img_box.size());
    std::vector<SymbolId> gather(foffs.size()), scratch;
    bool found = false;
    std::vector<SymbolId> bad_block;
    core::for_each_admissible(xcs, mbox, {}, [&](const std::vector<SymbolId>& vals) {
        for (size_t m = 0; m < windows.size(); ++m) {
            for (size_t i = 0; i < windows[m].size(); ++i) gather[i] = vals[windows[m][i]];
            img[m] = feval.eval_gathered(gather.data(), scratch);
        }
        bool bad = !center_check.ok(img.data(), img.size());
        if (!bad) {
            for (size_t ci : center_cells) {
                if (ycs.symbol_banned(img[ci])) {
                    bad = true;
                    break;
                }
            }
        }
        if (bad) {
            found = true;
            bad_block = vals;
            return false;
        }
        return true;
    });

    if (found) {
        out.status = Status::unknown;
        out.block = core::Pattern::from_block(mbox, bad_block, X.alphabet());
    } else {
        out.status = Status::proven;
    }
    return out;
}

SurjectivityReport check_surjectivity(const SlidingBlockCode& F, const SftSpec& X, const SftSpec& Y,
                                      int n, int extension_radius, int period_budget) {
    if (F.dim() != X.dim() || Y.dim() != X.dim()) throw InputError("dimension mismatch");
    if (F.source() != X.alphabet() || F.target() != Y.alphabet())
        throw InputError("code alphabets must match the specs");
    if (n < 0 || extension_radius < 0 || period_budget < 0) throw InputError("budgets must be >= 0");

    SurjectivityReport rep;
    rep.n = n;
    rep.extension_radius = extension_radius;
    rep.period_budget = period_budget;

    Box nbox = Box::cube(Y.dim(), n);
    Box pbox = Box::cube(X.dim(), n + F.radius());
    CompiledSpec xcs(X);
    Coord shift(static_cast<size_t>(X.dim()), F.radius());

    bool any_refuted = false, all_satisfied = true;
    core::enumerate_admissible_blocks(Y, n, [&](const std::vector<SymbolId>& m) {
        SurjectivityBlockReport br{core::Pattern::from_block(nbox, m, Y.alphabet()),
                                   SurjectivityBlockClass::undetermined,
                                   std::nullopt,
                                   -1,
                                   std::nullopt};

        // preimage search with image-consistency pruning: output cell w is
        // checked as soon as its window completes (its lex-max corner)
        std::optional<std::vector<SymbolId>> preimage;
        auto on_assign = [&](const std::vector<SymbolId>& vals, size_t idx) {
            Coord w = sub(pbox.coord_at(idx), shift);
            if (!nbox.contains(w)) return true;
            SymbolId want = m[nbox.index(w)];
            return F.eval_in_block(pbox, vals, w) == want;
        };
        core::for_each_admissible_hooked(xcs, pbox, {}, on_assign,
                                         [&](const std::vector<SymbolId>& vals) {
                                             preimage = vals;
                                             return false;
                                         });
        if (preimage) {
            br.cls = SurjectivityBlockClass::satisfied_by_preimage;
            br.preimage = core::Pattern::from_block(pbox, *preimage, X.alphabet());
        } else {
            auto ext = core::check_extensibility(br.block, Y, extension_radius, period_budget);
            if (ext.status == Status::refuted) {
                br.cls = SurjectivityBlockClass::satisfied_by_nonextensibility;
                br.nonextensible_radius = ext.refuted_radius;
            } else if (ext.status == Status::proven) {
                br.cls = SurjectivityBlockClass::refuted;
                br.witness = ext.witness;
                any_refuted = true;
            } else {
                br.cls = SurjectivityBlockClass::undetermined;
                all_satisfied = false;
            }
        }
        rep.blocks.push_back(std::move(br));
        return true;
    });

    if (any_refuted)
        rep.status = Status::refuted;
    else if (all_satisfied)
        rep.status = Status::proven;  // evidence at (n, R), flagged by evidence_only
    else
        rep.status = Status::unknown;
    return rep;
}

EmptinessVerdict prove_empty(const SftSpec& X, int n_max) {
    if (n_max < 0) throw InputError("n_max must be >= 0");
    EmptinessVerdict v;
    v.n_max = n_max;
    CompiledSpec cs(X);
    for (int r = 0; r <= n_max; ++r) {
        if (!core::find_admissible(cs, Box::cube(X.dim(), r), {})) {
            v.status = Status::proven;
            v.radius = r;
            return v;
        }
    }
    v.status = Status::unknown;
    return v;
}

NonemptinessVerdict prove_nonempty(const SftSpec& X, int period_budget) {
    if (period_budget < 1) throw InputError("period budget must be >= 1");
    NonemptinessVerdict v;
    v.period_budget = period_budget;
    CompiledSpec cs(X);
    for (const auto& periods : core::period_vectors(X.dim(), period_budget)) {
        bool found = false;
        core::for_each_valid_torus(cs, periods, [&](const std::vector<SymbolId>& cells) {
            v.witness = core::PeriodicConfig(periods, cells);
            found = true;
            return false;
        });
        if (found) {
            v.status = Status::proven;
            return v;
        }
    }
    v.status = Status::unknown;
    return v;
}

}  // namespace sftkit::verify
