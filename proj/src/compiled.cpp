#include "sftkit/compiled.hpp"

#include <algorithm>

namespace sftkit::core {

CompiledSpec::CompiledSpec(const SftSpec& spec)
    : dim_(spec.dim()), nsyms_(spec.alphabet().size()), banned_(static_cast<size_t>(spec.alphabet().size()), 0) {
    size_t words = (static_cast<size_t>(nsyms_) * static_cast<size_t>(nsyms_) + 63) / 64;
    axis_forbidden_.assign(static_cast<size_t>(dim_), std::vector<uint64_t>(words, 0));

    for (const auto& f : spec.forbidden()) {
        std::vector<std::pair<Coord, SymbolId>> cells;
        for (const auto& [c, s] : f.cells()) cells.emplace_back(c, spec.alphabet().require(s));

        if (cells.empty()) {
            // empty forbidden pattern occurs everywhere: everything banned
            std::fill(banned_.begin(), banned_.end(), 1);
            continue;
        }
        if (cells.size() == 1) {
            banned_[static_cast<size_t>(cells[0].second)] = 1;
            continue;
        }
        if (cells.size() == 2) {
            Coord d = sub(cells[1].first, cells[0].first);
            int axis = -1, nonzero = 0;
            for (int a = 0; a < dim_; ++a) {
                if (d[static_cast<size_t>(a)] != 0) {
                    ++nonzero;
                    axis = a;
                }
            }
            if (nonzero == 1 && (d[static_cast<size_t>(axis)] == 1 || d[static_cast<size_t>(axis)] == -1)) {
                SymbolId lo = cells[0].second, hi = cells[1].second;
                if (d[static_cast<size_t>(axis)] == -1) std::swap(lo, hi);
                size_t idx = static_cast<size_t>(lo) * static_cast<size_t>(nsyms_) + static_cast<size_t>(hi);
                axis_forbidden_[static_cast<size_t>(axis)][idx >> 6] |= 1ull << (idx & 63);
                any_axis_ = true;
                bounding_radius_ = std::max(bounding_radius_, 1);
                continue;
            }
        }
        // general pattern: centering translation per axis
        auto bb = f.bounding_box();
        GenPattern gp;
        Coord shift(static_cast<size_t>(dim_));
        for (int a = 0; a < dim_; ++a) {
            int lo = bb->lo()[static_cast<size_t>(a)];
            int extent = bb->extent(a);
            shift[static_cast<size_t>(a)] = -(lo + (extent - 1) / 2);
            bounding_radius_ = std::max(bounding_radius_, extent / 2);
        }
        for (auto& [c, sym] : cells) {
            gp.offsets.push_back(add(c, shift));
            gp.symbols.push_back(sym);
        }
        general_.push_back(std::move(gp));
    }
}

bool CompiledSpec::all_symbols_banned() const {
    if (nsyms_ == 0) return true;
    return std::all_of(banned_.begin(), banned_.end(), [](uint8_t b) { return b != 0; });
}

bool CompiledSpec::block_admissible(const Box& box, const std::vector<SymbolId>& values) const {
    for (SymbolId v : values)
        if (banned_[static_cast<size_t>(v)]) return false;
    if (any_axis_) {
        auto cells = box.cells();
        for (size_t i = 0; i < cells.size(); ++i) {
            for (int a = 0; a < dim_; ++a) {
                Coord nb = cells[i];
                ++nb[static_cast<size_t>(a)];
                if (!box.contains(nb)) continue;
                if (axis_pair_forbidden(a, values[i], values[box.index(nb)])) return false;
            }
        }
    }
    for (const auto& gp : general_) {
        // try every anchor where the pattern fits in the box
        Coord lo(static_cast<size_t>(dim_)), hi(static_cast<size_t>(dim_));
        bool feasible = true;
        for (int a = 0; a < dim_; ++a) {
            int omin = gp.offsets[0][static_cast<size_t>(a)], omax = omin;
            for (const auto& o : gp.offsets) {
                omin = std::min(omin, o[static_cast<size_t>(a)]);
                omax = std::max(omax, o[static_cast<size_t>(a)]);
            }
            lo[static_cast<size_t>(a)] = box.lo()[static_cast<size_t>(a)] - omin;
            hi[static_cast<size_t>(a)] = box.hi()[static_cast<size_t>(a)] - omax;
            if (lo[static_cast<size_t>(a)] > hi[static_cast<size_t>(a)]) feasible = false;
        }
        if (!feasible) continue;
        for (const Coord& t : Box(lo, hi).cells()) {
            bool match = true;
            for (size_t i = 0; i < gp.offsets.size(); ++i) {
                if (values[box.index(add(t, gp.offsets[i]))] != gp.symbols[i]) {
                    match = false;
                    break;
                }
            }
            if (match) return false;
        }
    }
    return true;
}

bool CompiledSpec::assignment_ok(const Box& box, const std::vector<SymbolId>& values, size_t idx) const {
    Coord z = box.coord_at(idx);
    SymbolId v = values[idx];
    if (banned_[static_cast<size_t>(v)]) return false;
    if (any_axis_) {
        for (int a = 0; a < dim_; ++a) {
            Coord nb = z;
            --nb[static_cast<size_t>(a)];
            if (box.contains(nb)) {
                SymbolId w = values[box.index(nb)];
                if (w != kUnassigned && axis_pair_forbidden(a, w, v)) return false;
            }
            nb[static_cast<size_t>(a)] += 2;
            if (box.contains(nb)) {
                SymbolId w = values[box.index(nb)];
                if (w != kUnassigned && axis_pair_forbidden(a, v, w)) return false;
            }
        }
    }
    for (const auto& gp : general_) {
        for (size_t i = 0; i < gp.offsets.size(); ++i) {
            Coord anchor = sub(z, gp.offsets[i]);
            bool match = true;
            for (size_t j = 0; j < gp.offsets.size(); ++j) {
                Coord c = add(anchor, gp.offsets[j]);
                if (!box.contains(c)) {
                    match = false;
                    break;
                }
                SymbolId w = values[box.index(c)];
                if (w == kUnassigned || w != gp.symbols[j]) {
                    match = false;
                    break;
                }
            }
            if (match) return false;
        }
    }
    return true;
}

namespace {

// Flattened DFS state shared by the enumeration entry points. Cell order
// is canonical; neighbor/constraint bookkeeping is precomputed per cell.
struct Dfs {
    const CompiledSpec& cs;
    Box box;
    std::vector<SymbolId> values;
    std::vector<uint8_t> is_pinned;
    std::vector<size_t> free_cells;  // indices to assign, in canonical order

    // per free cell: flat indices of already-assigned axis predecessors
    // (pred means "-e_a"), successors ("+e_a") that are pinned
    struct CellPlan {
        // (axis, neighbor flat index, neighbor-is-left) triples
        std::vector<std::array<size_t, 3>> axis_checks;
        // general placements whose last-assigned cell is this one
        struct Placement {
            size_t pattern;
            std::vector<size_t> cells;  // flat indices per pattern cell
        };
        std::vector<Placement> placements;
    };
    std::vector<CellPlan> plans;

    const std::function<bool(const std::vector<SymbolId>&, size_t)>* on_assign = nullptr;

    Dfs(const CompiledSpec& cs_, const Box& box_, const std::vector<std::pair<Coord, SymbolId>>& pinned)
        : cs(cs_), box(box_) {
        size_t n = box.size();
        values.assign(n, kUnassigned);
        is_pinned.assign(n, 0);
        for (const auto& [c, v] : pinned) {
            if (!box.contains(c)) throw InputError("pinned cell outside box");
            size_t i = box.index(c);
            if (values[i] != kUnassigned && values[i] != v) throw InputError("conflicting pinned cells");
            values[i] = v;
            is_pinned[i] = 1;
        }
        for (size_t i = 0; i < n; ++i)
            if (!is_pinned[i]) free_cells.push_back(i);

        plans.resize(free_cells.size());
        std::vector<size_t> free_rank(n, SIZE_MAX);
        for (size_t fi = 0; fi < free_cells.size(); ++fi) free_rank[free_cells[fi]] = fi;

        for (size_t fi = 0; fi < free_cells.size(); ++fi) {
            size_t i = free_cells[fi];
            Coord z = box.coord_at(i);
            auto& plan = plans[fi];
            if (!cs.has_axis_constraints()) continue;
            for (int a = 0; a < cs.dim(); ++a) {
                Coord nb = z;
                --nb[static_cast<size_t>(a)];
                if (box.contains(nb)) {
                    size_t j = box.index(nb);
                    // predecessors in canonical order are assigned by now;
                    // pinned cells always are
                    if (j < i || is_pinned[j]) plan.axis_checks.push_back({static_cast<size_t>(a), j, 1});
                }
                nb[static_cast<size_t>(a)] += 2;
                if (box.contains(nb)) {
                    size_t j = box.index(nb);
                    if (is_pinned[j]) plan.axis_checks.push_back({static_cast<size_t>(a), j, 0});
                }
            }
        }
        // each general placement is checked exactly once, when its last
        // free cell gets assigned (fully pinned placements are covered by
        // pinned_consistent)
        for (size_t pi = 0; pi < cs.general().size(); ++pi) {
            const auto& gp = cs.general()[pi];
            // anchor range: placement fully inside the box
            Coord lo = box.lo(), hi = box.hi();
            bool feasible = true;
            for (int a = 0; a < cs.dim(); ++a) {
                int omin = gp.offsets[0][static_cast<size_t>(a)], omax = omin;
                for (const auto& off : gp.offsets) {
                    omin = std::min(omin, off[static_cast<size_t>(a)]);
                    omax = std::max(omax, off[static_cast<size_t>(a)]);
                }
                lo[static_cast<size_t>(a)] -= omin;
                hi[static_cast<size_t>(a)] -= omax;
                if (lo[static_cast<size_t>(a)] > hi[static_cast<size_t>(a)]) feasible = false;
            }
            if (!feasible) continue;
            for (const Coord& anchor : Box(lo, hi).cells()) {
                CellPlan::Placement pl;
                pl.pattern = pi;
                size_t last_free = SIZE_MAX;  // max free rank among the cells
                for (const auto& off : gp.offsets) {
                    size_t ci = box.index(add(anchor, off));
                    pl.cells.push_back(ci);
                    if (!is_pinned[ci]) {
                        size_t rank = free_rank[ci];
                        if (last_free == SIZE_MAX || rank > last_free) last_free = rank;
                    }
                }
                if (last_free != SIZE_MAX) plans[last_free].placements.push_back(std::move(pl));
            }
        }
    }

    bool pinned_consistent() {
        for (size_t i = 0; i < values.size(); ++i)
            if (is_pinned[i] && !cs.assignment_ok(box, values, i)) return false;
        return true;
    }

    bool cell_ok(size_t fi, SymbolId v) {
        size_t i = free_cells[fi];
        if (cs.symbol_banned(v)) return false;
        const auto& plan = plans[fi];
        for (const auto& [axis, j, left] : plan.axis_checks) {
            SymbolId w = values[j];
            if (left ? cs.axis_pair_forbidden(static_cast<int>(axis), w, v)
                     : cs.axis_pair_forbidden(static_cast<int>(axis), v, w))
                return false;
        }
        if (!plan.placements.empty()) {
            values[i] = v;
            bool ok = true;
            for (const auto& pl : plan.placements) {
                const auto& gp = cs.general()[pl.pattern];
                bool match = true;
                for (size_t cj = 0; cj < pl.cells.size(); ++cj) {
                    if (values[pl.cells[cj]] != gp.symbols[cj]) {
                        match = false;
                        break;
                    }
                }
                if (match) {
                    ok = false;
                    break;
                }
            }
            values[i] = kUnassigned;
            if (!ok) return false;
        }
        return true;
    }

    // returns false when the visitor stopped the enumeration
    bool run(size_t fi, const std::function<bool(const std::vector<SymbolId>&)>& visit) {
        if (fi == free_cells.size()) return visit(values);
        size_t i = free_cells[fi];
        for (SymbolId v = 0; v < cs.nsyms(); ++v) {
            if (!cell_ok(fi, v)) continue;
            values[i] = v;
            if (on_assign && !(*on_assign)(values, i)) {
                values[i] = kUnassigned;
                continue;
            }
            if (!run(fi + 1, visit)) {
                values[i] = kUnassigned;
                return false;
            }
            values[i] = kUnassigned;
        }
        return true;
    }
};

}  // namespace

bool for_each_admissible(const CompiledSpec& cs, const Box& box,
                         const std::vector<std::pair<Coord, SymbolId>>& pinned,
                         const std::function<bool(const std::vector<SymbolId>&)>& visit) {
    if (box.dim() != cs.dim()) throw InputError("box dimension mismatch");
    Dfs dfs(cs, box, pinned);
    if (!dfs.pinned_consistent()) return true;
    return dfs.run(0, visit);
}

bool for_each_admissible_hooked(
    const CompiledSpec& cs, const Box& box, const std::vector<std::pair<Coord, SymbolId>>& pinned,
    const std::function<bool(const std::vector<SymbolId>&, size_t idx)>& on_assign,
    const std::function<bool(const std::vector<SymbolId>&)>& visit) {
    if (box.dim() != cs.dim()) throw InputError("box dimension mismatch");
    Dfs dfs(cs, box, pinned);
    if (!dfs.pinned_consistent()) return true;
    dfs.on_assign = &on_assign;
    return dfs.run(0, visit);
}

std::optional<std::vector<SymbolId>> find_admissible(const CompiledSpec& cs, const Box& box,
                                                     const std::vector<std::pair<Coord, SymbolId>>& pinned) {
    std::optional<std::vector<SymbolId>> found;
    for_each_admissible(cs, box, pinned, [&](const std::vector<SymbolId>& vals) {
        found = vals;
        return false;
    });
    return found;
}

BigUint count_admissible(const CompiledSpec& cs, const Box& box) {
    uint64_t chunk = 0;
    BigUint total;
    for_each_admissible(cs, box, {}, [&](const std::vector<SymbolId>&) {
        if (++chunk == (1ull << 62)) {
            total += BigUint(chunk);
            chunk = 0;
        }
        return true;
    });
    total += BigUint(chunk);
    return total;
}

namespace {

struct TorusDfs {
    const CompiledSpec& cs;
    std::vector<int> periods;
    Box domain;
    std::vector<SymbolId> values;
    std::vector<Coord> cells;

    // per cell: axis pairs to check once this cell is assigned (all their
    // cells already assigned), and general placements likewise
    struct Check {
        int axis;
        size_t a, b;  // flat indices, pair (value[a], value[b]) along +axis
    };
    std::vector<std::vector<Check>> axis_checks;
    struct GenCheck {
        size_t pattern;
        std::vector<size_t> cell_idx;  // per pattern cell
    };
    std::vector<std::vector<GenCheck>> gen_checks;

    TorusDfs(const CompiledSpec& cs_, const std::vector<int>& p) : cs(cs_), periods(p) {
        Coord hi(p.size());
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 1) throw InputError("period must be >= 1");
            hi[i] = p[i] - 1;
        }
        domain = Box(zero_coord(static_cast<int>(p.size())), hi);
        cells = domain.cells();
        values.assign(cells.size(), kUnassigned);
        axis_checks.resize(cells.size());
        gen_checks.resize(cells.size());

        auto wrap_index = [&](Coord c) {
            for (size_t i = 0; i < periods.size(); ++i) {
                c[i] %= periods[i];
                if (c[i] < 0) c[i] += periods[i];
            }
            return domain.index(c);
        };

        if (cs.has_axis_constraints()) {
            for (size_t i = 0; i < cells.size(); ++i) {
                for (int a = 0; a < cs.dim(); ++a) {
                    Coord nb = cells[i];
                    ++nb[static_cast<size_t>(a)];
                    size_t j = wrap_index(nb);
                    // schedule at whichever endpoint is assigned later
                    size_t at = std::max(i, j);
                    axis_checks[at].push_back({a, i, j});
                }
            }
        }
        for (size_t pi = 0; pi < cs.general().size(); ++pi) {
            const auto& gp = cs.general()[pi];
            for (size_t anchor = 0; anchor < cells.size(); ++anchor) {
                GenCheck gc;
                gc.pattern = pi;
                size_t latest = 0;
                for (const auto& off : gp.offsets) {
                    size_t ci = wrap_index(add(cells[anchor], off));
                    gc.cell_idx.push_back(ci);
                    latest = std::max(latest, ci);
                }
                gen_checks[latest].push_back(std::move(gc));
            }
        }
    }

    bool ok_after(size_t i) {
        for (const auto& ch : axis_checks[i])
            if (cs.axis_pair_forbidden(ch.axis, values[ch.a], values[ch.b])) return false;
        for (const auto& gc : gen_checks[i]) {
            const auto& gp = cs.general()[gc.pattern];
            bool match = true;
            for (size_t j = 0; j < gc.cell_idx.size(); ++j) {
                if (values[gc.cell_idx[j]] != gp.symbols[j]) {
                    match = false;
                    break;
                }
            }
            if (match) return false;
        }
        return true;
    }

    bool run(size_t i, const std::function<bool(const std::vector<SymbolId>&)>& visit) {
        if (i == cells.size()) return visit(values);
        for (SymbolId v = 0; v < cs.nsyms(); ++v) {
            if (cs.symbol_banned(v)) continue;
            values[i] = v;
            if (ok_after(i) && !run(i + 1, visit)) return false;
        }
        values[i] = kUnassigned;
        return true;
    }
};

}  // namespace

bool for_each_valid_torus(const CompiledSpec& cs, const std::vector<int>& periods,
                          const std::function<bool(const std::vector<SymbolId>&)>& visit) {
    if (static_cast<int>(periods.size()) != cs.dim()) throw InputError("period dimension mismatch");
    if (cs.nsyms() == 0) return true;
    TorusDfs dfs(cs, periods);
    return dfs.run(0, visit);
}

std::vector<std::vector<int>> period_vectors(int dim, int budget) {
    std::vector<std::vector<int>> out;
    if (budget < 1) return out;
    std::vector<int> cur(static_cast<size_t>(dim), 1);
    for (;;) {
        out.push_back(cur);
        size_t i = cur.size();
        for (;;) {
            if (i == 0) {
                std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
                    int ma = *std::max_element(a.begin(), a.end());
                    int mb = *std::max_element(b.begin(), b.end());
                    if (ma != mb) return ma < mb;
                    return a < b;
                });
                return out;
            }
            --i;
            if (cur[i] < budget) {
                ++cur[i];
                break;
            }
            cur[i] = 1;
        }
    }
}

}  // namespace sftkit::core
