#include "doctest.h"

#include "sftkit/codes.hpp"
#include "sftkit/compiled.hpp"
#include "sftkit/constructions.hpp"
#include "sftkit/core.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace sftkit;
using core::Alphabet;
using core::Pattern;
using core::SftSpec;
using core::Status;

TEST_CASE("alphabet is ordered and rejects duplicates") {
    Alphabet a({"x", "y", "z"});
    CHECK(a.size() == 3);
    CHECK(a.require("y") == 1);
    CHECK(!a.find("w"));
    CHECK_THROWS_AS(Alphabet({"x", "x"}), InputError);
}

TEST_CASE("pattern lookups outside the support are absent") {
    Pattern p(2);
    p.set({0, 0}, "a");
    CHECK(p.at({0, 0}) != nullptr);
    CHECK(p.at({1, 0}) == nullptr);
    Pattern q = p.translated({2, -1});
    CHECK(q.at({2, -1}) != nullptr);
    CHECK(p != q);
}

TEST_CASE("empty pattern is admissible everywhere") {
    SftSpec x = testutil::golden_mean();
    CHECK(core::is_admissible(Pattern(2), x));
}

TEST_CASE("a forbidden pattern is inadmissible as itself") {
    SftSpec x = testutil::golden_mean();
    Pattern p(2);
    p.set({0, 0}, "1");
    p.set({1, 0}, "1");
    CHECK(!core::is_admissible(p, x));
    // translated occurrences count too
    Pattern q(2);
    q.set({5, 5}, "1");
    q.set({6, 5}, "1");
    q.set({7, 5}, "0");
    CHECK(!core::is_admissible(q, x));
}

TEST_CASE("admissible does not imply extensible") {
    SftSpec x = testutil::dead_symbol_spec();
    Pattern c(2);
    c.set({0, 0}, "c");
    CHECK(core::is_admissible(c, x));

    // oracle: no admissible B_1 block has c at the center
    Box b1 = Box::cube(2, 1);
    size_t center = b1.index({0, 0});
    bool any = false;
    for (const auto& block : oracle::admissible_blocks(x, b1))
        if (block[center] == x.alphabet().require("c")) any = true;
    CHECK(!any);

    auto verdict = core::check_extensibility(c, x, 1, 2);
    CHECK(verdict.status == Status::refuted);
    CHECK(verdict.refuted_radius == 1);
}

TEST_CASE("admissibility is antitone under extension") {
    SftSpec x = testutil::golden_mean();
    Box b1 = Box::cube(2, 1);
    for (const auto& block : oracle::admissible_blocks(x, b1)) {
        Pattern q = Pattern::from_block(b1, block, x.alphabet());
        Pattern p = q.restricted(Box::cube(2, 0));
        CHECK(core::is_admissible(p, x));
    }
}

TEST_CASE("block enumeration matches the brute-force filter") {
    SftSpec x = testutil::golden_mean();
    auto expected = oracle::admissible_blocks(x, Box::cube(2, 1));
    CHECK(expected.size() == 63);  // independent sets of the 3x3 grid graph

    std::vector<std::vector<SymbolId>> got;
    core::enumerate_admissible_blocks(x, 1, [&](const std::vector<SymbolId>& b) {
        got.push_back(b);
        return true;
    });
    CHECK(got == expected);
}

TEST_CASE("full shift block counts are exact powers") {
    SftSpec f2 = cons::full_shift(2, 2);
    size_t n0 = 0, n1 = 0;
    core::enumerate_admissible_blocks(f2, 0, [&](const auto&) { ++n0; return true; });
    core::enumerate_admissible_blocks(f2, 1, [&](const auto&) { ++n1; return true; });
    CHECK(n0 == 2);
    CHECK(n1 == 512);
}

TEST_CASE("projections of bigger blocks land among smaller blocks") {
    SftSpec x = testutil::golden_mean();
    auto small = oracle::admissible_blocks(x, Box::cube(2, 0));
    Box b1 = Box::cube(2, 1);
    size_t center = b1.index({0, 0});
    core::enumerate_admissible_blocks(x, 1, [&](const std::vector<SymbolId>& b) {
        bool found = false;
        for (const auto& s : small)
            if (s[0] == b[center]) found = true;
        CHECK(found);
        return true;
    });
}

TEST_CASE("extensibility: full shift proves by the uniform configuration") {
    SftSpec f = cons::full_shift(2, 2);
    Pattern p(2);
    p.set({0, 0}, "a0");
    auto v = core::check_extensibility(p, f, 1, 1);
    REQUIRE(v.status == Status::proven);
    REQUIRE(v.witness.has_value());
    CHECK(oracle::torus_valid(f, *v.witness));
    // witness really contains the pattern
    CHECK(v.witness->at({0, 0}) == f.alphabet().require("a0"));
}

TEST_CASE("extensibility verdicts are never contradictory on an exhaustive sweep") {
    SftSpec x = testutil::dead_symbol_spec();
    Box b0 = Box::cube(2, 0);
    for (const auto& sym : x.alphabet().symbols()) {
        Pattern p(2);
        p.set({0, 0}, sym);
        auto v1 = core::check_extensibility(p, x, 1, 1);
        auto v2 = core::check_extensibility(p, x, 2, 3);
        // a sound Refuted cannot flip to Proven with bigger budgets
        if (v1.status == Status::refuted) CHECK(v2.status != Status::proven);
        if (v1.status == Status::proven) {
            CHECK(v2.status != Status::refuted);
            CHECK(oracle::torus_valid(x, *v1.witness));
        }
    }
    (void)b0;
}

TEST_CASE("normalize_to_radius forbids exactly the inadmissible blocks") {
    SftSpec x = testutil::golden_mean();
    SftSpec n1 = core::normalize_to_radius(x, 1);

    // oracle: brute force over all 512 B_1 blocks
    Box b1 = Box::cube(2, 1);
    size_t admissible = oracle::admissible_count(x, b1);
    CHECK(n1.forbidden().size() == 512 - admissible);
    CHECK(oracle::admissible_blocks(x, b1) == oracle::admissible_blocks(n1, b1));

    // identical admissible block sets at radius 2 as well
    auto blocks_of = [](const SftSpec& s, int r) {
        std::vector<std::vector<SymbolId>> out;
        core::enumerate_admissible_blocks(s, r, [&](const std::vector<SymbolId>& b) {
            out.push_back(b);
            return true;
        });
        return out;
    };
    CHECK(blocks_of(x, 2) == blocks_of(n1, 2));

    // idempotence on admissible sets
    SftSpec n2 = core::normalize_to_radius(n1, 1);
    CHECK(oracle::admissible_blocks(n1, b1) == oracle::admissible_blocks(n2, b1));

    CHECK_THROWS_AS(core::normalize_to_radius(x, 0), InputError);
}

TEST_CASE("full shift stays unconstrained under normalization") {
    SftSpec f = cons::full_shift(2, 2);
    CHECK(core::normalize_to_radius(f, 1).forbidden().empty());
}

TEST_CASE("normalizing a single horizontal domino counts the blocks containing it") {
    Alphabet bits({"0", "1"});
    Pattern h(2);
    h.set({0, 0}, "1");
    h.set({1, 0}, "1");
    SftSpec x(bits, 2, {h});
    SftSpec n1 = core::normalize_to_radius(x, 1);

    // oracle: how many of the 512 B_1 blocks contain a horizontal 11
    Box b1 = Box::cube(2, 1);
    size_t containing = 0;
    for (uint64_t code = 0; code < 512; ++code) {
        std::vector<SymbolId> vals(9);
        for (size_t i = 0; i < 9; ++i) vals[i] = static_cast<SymbolId>((code >> (8 - i)) & 1);
        if (!oracle::block_admissible(x, b1, vals)) ++containing;
    }
    CHECK(n1.forbidden().size() == containing);
}

TEST_CASE("wang_to_sft emits matching constraints only") {
    SUBCASE("single self-matching tile gives the full shift") {
        core::WangTileset t({{"c", "c", "c", "c"}});
        SftSpec s = core::wang_to_sft(t);
        CHECK(s.alphabet().size() == 1);
        CHECK(s.forbidden().empty());
    }
    SUBCASE("east/west mismatch forbids the only horizontal pair") {
        core::WangTileset t({{"n", "e", "n", "w"}});
        SftSpec s = core::wang_to_sft(t);
        CHECK(s.forbidden().size() == 1);
    }
    SUBCASE("two tiles with all-distinct colors: oracle count") {
        core::WangTileset t({{"n0", "e0", "s0", "w0"}, {"n1", "e1", "s1", "w1"}});
        SftSpec s = core::wang_to_sft(t);
        // every horizontal pair mismatches (4), every vertical pair too (4)
        CHECK(s.forbidden().size() == 8);
    }
}

TEST_CASE("torus counts survive the wang round trip at small periods") {
    // start from a wang tileset, convert to SFT and back; tiling counts on
    // small toruses must match (kept tiny: the oracle enumerates the full
    // assignment space)
    SUBCASE("one free tile") {
        core::WangTileset original({{"c", "c", "c", "c"}});
        SftSpec as_sft = core::wang_to_sft(original);
        SftSpec round = core::wang_to_sft(codes::sft_to_wang(as_sft).tileset);
        for (int k = 1; k <= 3; ++k) {
            std::vector<int> periods{k, k};
            CHECK(oracle::torus_count(as_sft, periods) == oracle::torus_count(round, periods));
        }
    }
    SUBCASE("two mutually exclusive tiles") {
        core::WangTileset original({{"c", "c", "c", "c"}, {"d", "d", "d", "d"}});
        SftSpec as_sft = core::wang_to_sft(original);
        SftSpec round = core::wang_to_sft(codes::sft_to_wang(as_sft).tileset);
        for (int k = 1; k <= 3; ++k) {
            std::vector<int> periods{k, k};
            CHECK(oracle::torus_count(as_sft, periods) == oracle::torus_count(round, periods));
        }
    }
}

TEST_CASE("period vectors are ordered by max then lexicographically") {
    auto v = core::period_vectors(2, 2);
    REQUIRE(v.size() == 4);
    CHECK(v[0] == std::vector<int>{1, 1});
    CHECK(v[1] == std::vector<int>{1, 2});
    CHECK(v[2] == std::vector<int>{2, 1});
    CHECK(v[3] == std::vector<int>{2, 2});
}
