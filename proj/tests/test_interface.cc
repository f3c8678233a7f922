#include <bcs/interface.hh>
#include <bcs/oracles.hh>
#include <bcs/subset_convolution.hh>

#include "random_instances.hh"

#include <doctest.h>

#include <set>

using namespace bcs;
using namespace bcs::testing;

namespace
{
    auto all_sequences(std::size_t m, std::size_t max_len) -> std::vector<InterfaceSeq>
    {
        std::vector<InterfaceSeq> out{ {} };
        for (std::size_t i = 0 ; i < out.size() ; ++i)
            if (out[i].size() < max_len)
                for (State q = 0 ; q < m ; ++q)
                    for (State q2 = 0 ; q2 < m ; ++q2) {
                        auto seq = out[i];
                        seq.push_back({ q, q2 });
                        out.push_back(seq);
                    }
        return out;
    }
}

TEST_CASE("is_valid examples")
{
    Nfa m(3, 1, 0, 2);
    CHECK(is_valid({ { 0, 1 }, { 1, 2 } }, m));
    CHECK(! is_valid({ { 0, 1 }, { 0, 2 } }, m));
    CHECK(! is_valid({}, m));
    Nfa single(1, 1, 0, 0);
    CHECK(is_valid({ { 0, 0 } }, single));
    CHECK(is_valid({}, single));
}

TEST_CASE("interface automaton of an epsilon-only thread")
{
    Nfa m(2, 1, 0, 1), a(1, 1, 0, 0);
    m.add_transition(0, 0, 1);
    auto b = interface_automaton(m, a);
    CHECK(b.num_states() == 1);
    CHECK(b.num_symbols() == 4);
    CHECK(accepts(b, Word{}));
    CHECK(accepts(b, Word{ pair_symbol({ 0, 0 }, 2) }));
    CHECK(accepts(b, Word{ pair_symbol({ 1, 1 }, 2) }));
    CHECK(! accepts(b, Word{ pair_symbol({ 0, 1 }, 2) }));
}

TEST_CASE("interface automaton of a two-letter thread")
{
    Nfa m(2, 2, 0, 1), a(3, 2, 0, 2);
    m.add_transition(0, 0, 1);
    m.add_transition(1, 1, 0);
    a.add_transition(0, 0, 1);
    a.add_transition(1, 1, 2);
    auto b = interface_automaton(m, a);
    auto has = [&] (State p, StatePair pr, State p2) {
        auto succ = b.successors(p, pair_symbol(pr, 2));
        return std::find(succ.begin(), succ.end(), p2) != succ.end();
    };
    CHECK(has(0, { 0, 1 }, 1));
    CHECK(has(1, { 1, 0 }, 2));
    CHECK(has(0, { 0, 0 }, 2));
    CHECK(! has(0, { 0, 1 }, 2));

    auto plus = interface_automaton(m, a, true);
    CHECK(plus.successors(0, pair_symbol({ 0, 0 }, 2)).size() == 1);
    CHECK(plus.successors(1, pair_symbol({ 1, 1 }, 2)).empty());
}

TEST_CASE("interface automaton matches the layered product search")
{
    Rng rng(21);
    for (int round = 0 ; round < 60 ; ++round) {
        std::size_t symbols = uniform(rng, 1, 2);
        auto m = random_nfa(rng, uniform(rng, 1, 3), symbols, 0.3);
        auto a = random_nfa(rng, uniform(rng, 1, 3), symbols, 0.3);
        auto b = interface_automaton(m, a);
        for (auto & seq : all_sequences(m.num_states(), 3))
            REQUIRE(accepts(b, pair_word(seq, m.num_states())) == oracle_interface_member(m, a, seq));
    }
}

TEST_CASE("enumerate_valid counts and order")
{
    Nfa one(1, 1, 0, 0);
    std::vector<InterfaceSeq> seen;
    enumerate_valid(one, 2, [&] (const InterfaceSeq & s) { seen.push_back(s); return true; });
    CHECK(seen == std::vector<InterfaceSeq>{ { { 0, 0 } }, { { 0, 0 }, { 0, 0 } } });

    for (std::size_t m = 1 ; m <= 4 ; ++m)
        for (std::size_t len = 1 ; len <= 4 ; ++len) {
            Nfa mem(m, 1, 0, State(m - 1));
            std::set<InterfaceSeq> distinct;
            std::size_t count = 0;
            InterfaceSeq previous;
            enumerate_valid(mem, len, [&] (const InterfaceSeq & s) {
                    CHECK(is_valid(s, mem));
                    if (! previous.empty()) {
                        bool ordered = previous.size() < s.size() || (previous.size() == s.size() && previous < s);
                        CHECK(ordered);
                    }
                    previous = s;
                    distinct.insert(s);
                    ++count;
                    return true;
                });
            std::size_t expected = 0, power = 1;
            for (std::size_t l = 1 ; l <= len ; ++l, power *= m)
                expected += power;
            CHECK(count == expected);
            CHECK(distinct.size() == expected);
        }

    Nfa three(3, 1, 0, 2);
    std::size_t count = 0;
    enumerate_valid(three, 3, [&] (const InterfaceSeq &) { ++count; return true; });
    CHECK(count == 13);

    count = 0;
    CHECK(! enumerate_valid(three, 3, [&] (const InterfaceSeq &) { return ++count < 5; }));
    CHECK(count == 5);
}

TEST_CASE("induced_sequence")
{
    Smcp s{ { "a", "b" }, Nfa(3, 2, 0, 2), { Nfa(2, 2, 0, 1), Nfa(2, 2, 0, 1) } };
    s.memory.add_transition(0, 0, 1);
    s.memory.add_transition(1, 1, 2);
    s.memory.add_transition(1, 0, 1);
    CHECK(induced_sequence(s, { { 0, 0 }, { 1, 0 } }, { 0, 1, 2 }) == InterfaceSeq{ { 0, 2 } });
    CHECK(induced_sequence(s, { { 0, 0 }, { 1, 1 } }, { 0, 1, 2 }) == InterfaceSeq{ { 0, 1 }, { 1, 2 } });
    CHECK(induced_sequence(s, { { 0, 0 }, { 0, 1 }, { 1, 0 } }, { 0, 1, 1, 2 })
            == InterfaceSeq{ { 0, 1 }, { 1, 1 }, { 1, 2 } });
    CHECK_THROWS_AS(std::ignore = induced_sequence(s, { { 0, 0 } }, { 0, 1 }), InputError);

    Rng rng(22);
    for (int round = 0 ; round < 50 ; ++round) {
        // random accepting runs of the memory, cut into random contexts
        auto m = random_nfa(rng, 3, 2, 0.5);
        Smcp r{ { "a", "b" }, m, { Nfa(1, 2, 0, 0), Nfa(1, 2, 0, 0) } };
        std::vector<State> run{ m.initial() };
        TaggedWord u;
        for (int step = 0 ; step < 6 ; ++step) {
            auto out = m.transitions_from(run.back());
            if (out.empty())
                break;
            auto & tr = out[uniform(rng, 0, out.size() - 1)];
            u.push_back({ tr.symbol, uniform(rng, 0, 1) });
            run.push_back(tr.target);
        }
        if (run.back() != m.final())
            continue;
        auto seq = induced_sequence(r, u, run);
        CHECK(seq.size() == count_contexts(u));
        CHECK(is_valid(seq, m) == ! seq.empty());
    }
}

TEST_CASE("interface languages decompose the program language")
{
    // sigma is induced by some word with |sigma| contexts iff sigma is valid
    // and lies in the shuffle of the threads' interface languages
    Rng rng(23);
    for (int round = 0 ; round < 40 ; ++round) {
        auto s = random_smcp(rng, 3, 2, 2, 2, 0.35);
        const std::size_t mq = s.memory.num_states();
        std::vector<Nfa> bs;
        for (auto & a : s.threads)
            bs.push_back(interface_automaton(s.memory, a));
        for (auto & seq : all_sequences(mq, 2)) {
            if (seq.empty() || ! is_valid(seq, s.memory))
                continue;
            bool by_shuffle = shuffle_membership(bs, pair_word(seq, mq));

            // brute force: owner per position, then segments thread by thread
            bool by_search = false;
            std::size_t t = s.num_threads();
            std::size_t combos = 1;
            for (std::size_t x = 0 ; x < seq.size() ; ++x)
                combos *= t;
            for (std::size_t c = 0 ; c < combos && ! by_search ; ++c) {
                bool ok = true;
                std::size_t code = c;
                std::vector<InterfaceSeq> parts(t);
                for (std::size_t x = 0 ; x < seq.size() ; ++x, code /= t)
                    parts[code % t].push_back(seq[x]);
                for (std::size_t i = 0 ; i < t && ok ; ++i)
                    ok = parts[i].empty() || oracle_interface_member(s.memory, s.threads[i], parts[i]);
                by_search = ok;
            }
            REQUIRE(by_shuffle == by_search);
        }
    }
}
