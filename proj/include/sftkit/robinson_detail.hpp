#pragma once

#include <functional>
#include <optional>
#include <set>

#include "sftkit/constructions.hpp"

namespace sftkit::cons {

// Introspection into the Robinson generator, used by the layered
// construction and the test suite.
struct RobinsonDetail {
    core::WangTileset tiles;
    std::vector<int> ne_cross_tiles;  // first-order crosses facing northeast
    std::function<int(long long, long long)> tile_at;  // sample cell -> tile index
};

const RobinsonDetail& robinson_detail();

// Distinct tiles read off the fixed-point sample window [1,n]^2.
std::set<core::WangTile> robinson_sample_tiles(long long n);

}  // namespace sftkit::cons
