#include <bcs/global_solver.hh>
#include <bcs/oracles.hh>

#include "random_instances.hh"

#include <doctest.h>

using namespace bcs;
using namespace bcs::testing;

namespace
{
    // two threads must alternate: memory reads a (thread 1), b (thread 2), a again
    auto ping_pong() -> Smcp
    {
        Smcp s{ { "a", "b" }, Nfa(4, 2, 0, 3), { Nfa(3, 2, 0, 2), Nfa(2, 2, 0, 1) } };
        s.memory.add_transition(0, 0, 1);
        s.memory.add_transition(1, 1, 2);
        s.memory.add_transition(2, 0, 3);
        s.threads[0].add_transition(0, 0, 1);
        s.threads[0].add_transition(1, 0, 2);
        s.threads[1].add_transition(0, 1, 1);
        return s;
    }
}

TEST_CASE("epsilon convention")
{
    Smcp s{ { "a" }, Nfa(1, 1, 0, 0), { Nfa(2, 1, 0, 1) } };
    auto r = solve_bcs(s, 0);
    CHECK(r.yes);
    CHECK(r.witness.empty());
}

TEST_CASE("single thread, single context")
{
    Smcp s{ { "a", "b" }, Nfa(3, 2, 0, 2), { Nfa(3, 2, 0, 2) } };
    s.memory.add_transition(0, 0, 1);
    s.memory.add_transition(1, 1, 2);
    s.threads[0].add_transition(0, 0, 1);
    s.threads[0].add_transition(1, 1, 2);
    auto r = solve_bcs(s, 0);
    REQUIRE(r.yes);
    CHECK(r.sigma == InterfaceSeq{ { 0, 2 } });
    CHECK(r.witness == TaggedWord{ { 0, 0 }, { 1, 0 } });
}

TEST_CASE("alternating threads need two switches")
{
    auto s = ping_pong();
    CHECK(! solve_bcs(s, 0).yes);
    CHECK(! solve_bcs(s, 1).yes);
    auto r = solve_bcs(s, 2);
    REQUIRE(r.yes);
    CHECK(r.sigma == InterfaceSeq{ { 0, 1 }, { 1, 2 }, { 2, 3 } });
    CHECK(r.assignment == std::vector<std::size_t>{ 0, 1, 0 });
    CHECK(r.witness == TaggedWord{ { 0, 0 }, { 1, 1 }, { 0, 0 } });
    CHECK(check_witness(s, r.witness, 2));
}

TEST_CASE("reconstruct_witness rejects inconsistent assignments")
{
    auto s = ping_pong();
    CHECK_THROWS_AS(std::ignore = reconstruct_witness(s, { { 0, 1 }, { 1, 2 }, { 2, 3 } }, { 1, 1, 0 }), InternalError);
    CHECK_THROWS_AS(std::ignore = reconstruct_witness(s, { { 0, 1 } }, { 0, 0 }), InternalError);
}

TEST_CASE("cap on shuffle checks")
{
    auto s = ping_pong();
    BcsOptions options;
    options.cap = 0;
    CHECK_THROWS_AS(std::ignore = solve_bcs(s, 2, options), ResourceError);
}

TEST_CASE("solve_bcs agrees with the switch oracle, witnesses replay, monotone in cs")
{
    Rng rng(41);
    for (int round = 0 ; round < 200 ; ++round) {
        auto s = random_smcp(rng, 4, 3, 4);
        bool previous = false;
        for (std::size_t cs = 0 ; cs <= 5 ; ++cs) {
            auto r = solve_bcs(s, cs);
            REQUIRE(r.yes == oracle_bcs(s, cs));
            if (r.yes)
                REQUIRE(check_witness(s, r.witness, cs));
            if (previous)
                REQUIRE(r.yes);
            previous = r.yes;
        }
    }
}

TEST_CASE("parallel batches give the same report")
{
    Rng rng(42);
    BcsOptions parallel;
    parallel.jobs = 4;
    for (int round = 0 ; round < 60 ; ++round) {
        auto s = random_smcp(rng, 4, 3, 4);
        for (std::size_t cs = 0 ; cs <= 4 ; ++cs) {
            auto a = solve_bcs(s, cs), b = solve_bcs(s, cs, parallel);
            REQUIRE(a.yes == b.yes);
            REQUIRE(a.sigma == b.sigma);
            REQUIRE(a.witness == b.witness);
        }
    }
}
