#include "doctest.h"

#include <sstream>

#include "sftkit/io.hpp"
#include "sftkit/tm.hpp"

using namespace sftkit;

namespace {

tm::TuringMachine parse(const char* text) {
    std::istringstream in(text);
    return io::parse_tm(in);
}

}  // namespace

TEST_CASE("machine with no transitions halts immediately") {
    auto M = parse("tm 1\nstates:\nq0\nblank: B\ninit: q0\nhalt:\ndelta:\n");
    auto r = tm::run(M, {}, 0);
    CHECK(r.halted);
    CHECK(r.steps == 0);
}

TEST_CASE("one-state right mover never halts") {
    auto M = parse("tm 1\nstates:\nq0\nblank: B\ninit: q0\nhalt:\ndelta:\nq0,B -> q0,B,R\n");
    for (int budget : {0, 1, 10, 100}) {
        auto r = tm::run(M, {}, budget);
        CHECK(!r.halted);
        CHECK(r.steps == budget);
    }
}

TEST_CASE("three-step counter halts with the traced tape") {
    auto M = parse(
        "tm 1\nstates:\nq0\nq1\nq2\nqh\nblank: B\ninit: q0\nhalt:\nqh\ndelta:\n"
        "q0,B -> q1,1,R\nq1,B -> q2,1,R\nq2,B -> qh,1,R\n");
    auto r = tm::run(M, {}, 100);
    REQUIRE(r.halted);
    CHECK(r.steps == 3);
    CHECK(r.state == "qh");
    CHECK(r.head == 3);
    REQUIRE(r.tape.size() == 3);
    CHECK(r.tape.at(0) == "1");
    CHECK(r.tape.at(1) == "1");
    CHECK(r.tape.at(2) == "1");
}

TEST_CASE("runs are budget-monotone") {
    auto M = parse(
        "tm 1\nstates:\nq0\nq1\nq2\nqh\nblank: B\ninit: q0\nhalt:\nqh\ndelta:\n"
        "q0,B -> q1,1,R\nq1,B -> q2,1,R\nq2,B -> qh,1,R\n");
    auto r3 = tm::run(M, {}, 3);
    REQUIRE(r3.halted);
    for (int budget = 3; budget <= 6; ++budget) {
        auto r = tm::run(M, {}, budget);
        CHECK(r.halted);
        CHECK(r.steps == r3.steps);
    }
    CHECK(!tm::run(M, {}, 2).halted);
}

TEST_CASE("left moves and input tapes work") {
    auto M = parse(
        "tm 1\nstates:\nq0\nqh\nblank: B\ninit: q0\nhalt:\nqh\ndelta:\n"
        "q0,x -> q0,y,L\nq0,B -> qh,B,R\n");
    auto r = tm::run(M, {"x"}, 10);
    REQUIRE(r.halted);
    CHECK(r.steps == 2);
    CHECK(r.tape.at(0) == "y");
}

TEST_CASE("halting states may not have outgoing transitions") {
    CHECK_THROWS_AS(parse("tm 1\nstates:\nq0\nblank: B\ninit: q0\nhalt:\nq0\ndelta:\nq0,B -> q0,B,R\n"),
                    InputError);
}
