#include <bcs/oracles.hh>
#include <bcs/subset_convolution.hh>

#include "random_instances.hh"

#include <doctest.h>

#include <bit>

using namespace bcs;
using namespace bcs::testing;

namespace
{
    auto naive(const SetFunction & f, const SetFunction & g) -> SetFunction
    {
        SetFunction h(f.k);
        for (std::size_t s = 0 ; s < h.table.size() ; ++s)
            for (std::size_t u = s ; ; u = (u - 1) & s) {
                h.table[s] += f.table[u] * g.table[s ^ u];
                if (u == 0)
                    break;
            }
        return h;
    }

    auto random_function(Rng & rng, std::size_t k, int lo, int hi) -> SetFunction
    {
        SetFunction f(k);
        std::uniform_int_distribution<int> d(lo, hi);
        for (auto & v : f.table)
            v = d(rng);
        return f;
    }

    auto project(const Word & w, std::size_t mask) -> Word
    {
        Word out;
        for (std::size_t p = 0 ; p < w.size() ; ++p)
            if (mask & (std::size_t{ 1 } << p))
                out.push_back(w[p]);
        return out;
    }

    // ordered t-partitions (U_1, ..., U_t) of the positions with every
    // piece accepted (or empty)
    auto count_partitions(const std::vector<Nfa> & bs, const Word & w) -> Value
    {
        std::size_t t = bs.size(), k = w.size();
        std::size_t combos = 1;
        for (std::size_t x = 0 ; x < k ; ++x)
            combos *= t;
        Value total = 0;
        for (std::size_t c = 0 ; c < combos ; ++c) {
            std::vector<std::size_t> masks(t, 0);
            std::size_t code = c;
            for (std::size_t p = 0 ; p < k ; ++p, code /= t)
                masks[code % t] |= std::size_t{ 1 } << p;
            bool ok = true;
            for (std::size_t i = 0 ; i < t && ok ; ++i)
                ok = masks[i] == 0 || accepts(bs[i], project(w, masks[i]));
            total += ok;
        }
        return total;
    }
}

TEST_CASE("convolution identity and counting")
{
    Rng rng(31);
    for (std::size_t k = 0 ; k <= 6 ; ++k) {
        SetFunction e(k);
        e.table[0] = 1;
        auto f = random_function(rng, k, -5, 5);
        CHECK(convolve(f, e) == f);
        CHECK(convolve(e, f) == f);
    }

    SetFunction one(2);
    for (auto & v : one.table)
        v = 1;
    auto h = convolve(one, one);
    for (std::size_t s = 0 ; s < 4 ; ++s)
        CHECK((h.table[s] == (Value{ 1 } << std::popcount(s))));
}

TEST_CASE("convolution equals the naive sum")
{
    Rng rng(32);
    for (int round = 0 ; round < 200 ; ++round) {
        std::size_t k = uniform(rng, 0, 8);
        auto f = random_function(rng, k, -5, 5), g = random_function(rng, k, -5, 5);
        REQUIRE(convolve(f, g) == naive(f, g));
    }
}

TEST_CASE("convolution is associative and commutative")
{
    Rng rng(33);
    for (int round = 0 ; round < 50 ; ++round) {
        std::size_t k = uniform(rng, 0, 6);
        auto f = random_function(rng, k, -5, 5), g = random_function(rng, k, -5, 5), h = random_function(rng, k, -5, 5);
        REQUIRE(convolve(convolve(f, g), h) == convolve(f, convolve(g, h)));
        REQUIRE(convolve(f, g) == convolve(g, f));
    }
}

TEST_CASE("convolution overflow is an error")
{
    SetFunction f(1);
    f.table = { Value{ 1 } << 100, Value{ 1 } << 100 };
    CHECK_THROWS_AS(std::ignore = convolve(f, f), ResourceError);
    CHECK_THROWS_AS(std::ignore = convolve(SetFunction(1), SetFunction(2)), InputError);
}

TEST_CASE("characteristic function")
{
    Nfa b(2, 2, 0, 1);
    b.add_transition(0, 1, 1);
    auto f = characteristic(b, Word{ 0, 1 });
    CHECK((f.table[0] == 1));
    CHECK((f.table[1] == 0));
    CHECK((f.table[2] == 1));
    CHECK((f.table[3] == 0));

    Rng rng(34);
    for (int round = 0 ; round < 100 ; ++round) {
        auto a = random_nfa(rng, uniform(rng, 1, 5), 3, 0.3);
        Word w;
        for (std::size_t x = uniform(rng, 0, 8) ; x > 0 ; --x)
            w.push_back(Symbol(uniform(rng, 0, 2)));
        auto g = characteristic(a, w);
        for (std::size_t s = 0 ; s < g.table.size() ; ++s)
            REQUIRE((g.table[s] == (s == 0 || accepts(a, project(w, s)) ? 1 : 0)));
    }
}

TEST_CASE("shuffle membership degenerate cases")
{
    Nfa b(2, 2, 0, 1);
    b.add_transition(0, 1, 1);
    CHECK(shuffle_membership({ b }, Word{}));
    CHECK(shuffle_membership({ b }, Word{ 1 }));
    CHECK(! shuffle_membership({ b }, Word{ 0 }));
    CHECK(shuffle_membership({ b, b }, Word{ 1, 1 }));
    CHECK(! shuffle_membership({ b, b }, Word{ 1, 1, 1 }));
    CHECK_THROWS_AS(std::ignore = shuffle_membership({}, Word{}), InputError);
}

TEST_CASE("shuffle count equals explicit partition counting")
{
    Rng rng(35);
    for (int round = 0 ; round < 100 ; ++round) {
        std::vector<Nfa> bs;
        for (std::size_t t = uniform(rng, 1, 3) ; t > 0 ; --t)
            bs.push_back(random_nfa(rng, uniform(rng, 1, 4), 2, 0.35));
        Word w;
        for (std::size_t x = uniform(rng, 0, 7) ; x > 0 ; --x)
            w.push_back(Symbol(uniform(rng, 0, 1)));
        REQUIRE((shuffle_count(bs, w) == count_partitions(bs, w)));
    }
}

TEST_CASE("shuffle membership agrees with the assignment search, certificates are valid")
{
    Rng rng(36);
    for (int round = 0 ; round < 300 ; ++round) {
        std::size_t symbols = uniform(rng, 1, 3);
        std::vector<Nfa> bs;
        for (std::size_t t = uniform(rng, 1, 4) ; t > 0 ; --t)
            bs.push_back(random_nfa(rng, uniform(rng, 1, 5), symbols, 0.3));
        Word w;
        for (std::size_t x = uniform(rng, 0, 10) ; x > 0 ; --x)
            w.push_back(Symbol(uniform(rng, 0, symbols - 1)));
        bool yes = shuffle_membership(bs, w);
        REQUIRE(yes == oracle_sm(bs, w));

        auto cert = shuffle_certificate(bs, w);
        REQUIRE(cert.has_value() == yes);
        if (cert)
            for (std::size_t i = 0 ; i < bs.size() ; ++i) {
                Word piece;
                for (std::size_t p = 0 ; p < w.size() ; ++p)
                    if ((*cert)[p] == i)
                        piece.push_back(w[p]);
                REQUIRE((piece.empty() || accepts(bs[i], piece)));
            }
    }
}

TEST_CASE("adding an epsilon automaton keeps a positive answer")
{
    Rng rng(37);
    Nfa eps(1, 2, 0, 0);
    for (int round = 0 ; round < 100 ; ++round) {
        std::vector<Nfa> bs;
        for (std::size_t t = uniform(rng, 1, 3) ; t > 0 ; --t)
            bs.push_back(random_nfa(rng, uniform(rng, 1, 4), 2, 0.35));
        Word w;
        for (std::size_t x = uniform(rng, 0, 7) ; x > 0 ; --x)
            w.push_back(Symbol(uniform(rng, 0, 1)));
        bool before = shuffle_membership(bs, w);
        bs.push_back(eps);
        if (before)
            REQUIRE(shuffle_membership(bs, w));
    }
}
