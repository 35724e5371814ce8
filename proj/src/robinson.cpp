#include "sftkit/robinson_detail.hpp"

#include <map>
#include <set>

namespace sftkit::cons {

namespace {

// The generator renders the canonical fixed point of Robinson's square
// hierarchy and reads the tile menu off a large sample window.
//
// Structure (positive quadrant, axes excluded):
//   * order-k crosses sit at cells whose coordinates both have 2-adic
//     valuation k-1;
//   * the four order-k crosses around an order-(k+1) cross C are the
//     corners of a square centered at C with half-side 2^(k-1); its side
//     lines run between the corners, drawn off-center toward the square's
//     interior and directed toward the side midpoints;
//   * every cross of order >= 2 sends four arms (centered, directed
//     outward) to the side midpoints of its square.
// Edges are colored by the lines crossing them plus the coordinate
// parities, so matching edges reproduce exactly the local consistency of
// the hierarchy.

int val2(long long n) {
    int k = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++k;
    }
    return k;
}

// Unique member of residue + mod*Z within [lo, hi], if any (window
// narrower than mod).
std::optional<long long> progression_in(long long lo, long long hi, long long residue, long long mod) {
    long long delta = ((lo - residue) % mod + mod) % mod;
    long long first = delta == 0 ? lo : lo + (mod - delta);
    if (first > hi) return std::nullopt;
    return first;
}

struct EdgeColor {
    int center = 0;  // 0 none, 1 negative direction (W/S), 2 positive (E/N)
    int side = 0;    // 0 none, else 1 + 2*offset_flavor + dir_bit
    int parity = 0;  // (primary & 1) | ((secondary & 1) << 1)

    int encoded() const { return (center * 5 + side) * 4 + parity; }
};

// Lines crossing the vertical edge between cells (x,y) and (x+1,y) are
// horizontal; `x` is the edge index. Requires y >= 1.
EdgeColor horizontal_lines_edge(long long x, long long y) {
    EdgeColor c;
    c.parity = static_cast<int>(x & 1) | (static_cast<int>(y & 1) << 1);

    int s = val2(y);
    // arms radiate from crosses of order s+1 >= 2 on this row
    if (s >= 1) {
        long long reach = 1ll << (s - 1);
        long long res = 1ll << s;
        long long mod = 1ll << (s + 1);
        if (progression_in(x - reach + 1, x, res, mod)) c.center = 2;       // east arm
        else if (progression_in(x + 1, x + reach, res, mod)) c.center = 1;  // west arm
    }
    // side line of the squares whose corners have order k = s+1
    {
        long long half = 1ll << s;  // 2^(k-1)
        long long res = 1ll << (s + 1);
        long long mod = 1ll << (s + 2);
        long long up = y + half;
        bool south_side = ((up % res == 0) && ((up / res) & 1));  // center above: val2(up) == k
        if (auto cx = progression_in(x - half + 1, x + half, res, mod)) {
            int off_flavor = south_side ? 0 : 1;   // N-offset on south sides
            int dir_bit = (x + 1 <= *cx) ? 1 : 0;  // toward the midpoint
            c.side = 1 + 2 * off_flavor + dir_bit;
        }
    }
    return c;
}

// Lines crossing the horizontal edge between (x,y) and (x,y+1); `y` is
// the edge index. Requires x >= 1.
EdgeColor vertical_lines_edge(long long x, long long y) {
    EdgeColor c;
    c.parity = static_cast<int>(y & 1) | (static_cast<int>(x & 1) << 1);

    int s = val2(x);
    if (s >= 1) {
        long long reach = 1ll << (s - 1);
        long long res = 1ll << s;
        long long mod = 1ll << (s + 1);
        if (progression_in(y - reach + 1, y, res, mod)) c.center = 2;       // north arm
        else if (progression_in(y + 1, y + reach, res, mod)) c.center = 1;  // south arm
    }
    {
        long long half = 1ll << s;
        long long res = 1ll << (s + 1);
        long long mod = 1ll << (s + 2);
        long long right = x + half;
        bool west_side = ((right % res == 0) && ((right / res) & 1));
        if (auto cy = progression_in(y - half + 1, y + half, res, mod)) {
            int off_flavor = west_side ? 0 : 1;  // E-offset on west sides
            int dir_bit = (y + 1 <= *cy) ? 1 : 0;
            c.side = 1 + 2 * off_flavor + dir_bit;
        }
    }
    return c;
}

core::WangTile tile_at_cell(long long x, long long y) {
    core::WangTile t;
    t.north = "v" + std::to_string(vertical_lines_edge(x, y).encoded());
    t.south = "v" + std::to_string(vertical_lines_edge(x, y - 1).encoded());
    t.east = "h" + std::to_string(horizontal_lines_edge(x, y).encoded());
    t.west = "h" + std::to_string(horizontal_lines_edge(x - 1, y).encoded());
    return t;
}

bool is_ne_cross_cell(long long x, long long y) {
    // first-order cross whose parent square lies to the northeast
    if ((x & 1) == 0 || (y & 1) == 0) return false;
    return ((x >> 1) & 1) == 0 && ((y >> 1) & 1) == 0;
}

}  // namespace

std::set<core::WangTile> robinson_sample_tiles(long long n) {
    std::set<core::WangTile> tiles;
    for (long long x = 1; x <= n; ++x)
        for (long long y = 1; y <= n; ++y) tiles.insert(tile_at_cell(x, y));
    return tiles;
}

const RobinsonDetail& robinson_detail() {
    static const RobinsonDetail detail = [] {
        RobinsonDetail d;
        auto tiles = robinson_sample_tiles(256);
        d.tiles = WangTileset(std::vector<core::WangTile>(tiles.begin(), tiles.end()));

        std::map<core::WangTile, int> index;
        for (int i = 0; i < d.tiles.size(); ++i) index[d.tiles.tile(i)] = i;
        std::set<int> ne;
        for (long long x = 1; x <= 64; ++x)
            for (long long y = 1; y <= 64; ++y)
                if (is_ne_cross_cell(x, y)) ne.insert(index.at(tile_at_cell(x, y)));
        d.ne_cross_tiles.assign(ne.begin(), ne.end());

        d.tile_at = [index](long long x, long long y) {
            auto it = index.find(tile_at_cell(x, y));
            return it == index.end() ? -1 : it->second;
        };
        return d;
    }();
    return detail;
}

WangTileset robinson_tileset() { return robinson_detail().tiles; }

}  // namespace sftkit::cons
