/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BCS_TESTS_RANDOM_INSTANCES_HH
#define BCS_TESTS_RANDOM_INSTANCES_HH 1

#include <bcs/interface.hh>
#include <bcs/nfa.hh>
#include <bcs/sched_graph.hh>

#include <random>
#include <string>
#include <vector>

namespace bcs::testing
{
    using Rng = std::mt19937_64;

    inline auto uniform(Rng & rng, std::size_t lo, std::size_t hi) -> std::size_t
    {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    inline auto random_nfa(Rng & rng, std::size_t states, std::size_t symbols, double density) -> Nfa
    {
        std::bernoulli_distribution edge(density);
        Nfa a(states, symbols, 0, State(uniform(rng, 0, states - 1)));
        for (State p = 0 ; p < states ; ++p)
            for (Symbol s = 0 ; s < symbols ; ++s)
                for (State q = 0 ; q < states ; ++q)
                    if (edge(rng))
                        a.add_transition(p, s, q);
        return a;
    }

    /// Final state differs from the initial one, so the epsilon shortcut does not fire.
    inline auto random_smcp(Rng & rng, std::size_t max_m, std::size_t max_t, std::size_t max_p,
            std::size_t max_symbols = 3, double density = 0.3) -> Smcp
    {
        Smcp s;
        std::size_t symbols = uniform(rng, 1, max_symbols);
        for (std::size_t i = 0 ; i < symbols ; ++i)
            s.alphabet.push_back(std::string(1, char('a' + i)));
        std::size_t m = uniform(rng, 2, max_m);
        s.memory = random_nfa(rng, m, symbols, density);
        s.memory = [&] {
            Nfa fixed(m, symbols, 0, State(uniform(rng, 1, m - 1)));
            for (auto & tr : s.memory.transitions())
                fixed.add_transition(tr.source, tr.symbol, tr.target);
            return fixed;
        }();
        std::size_t t = uniform(rng, 1, max_t);
        for (std::size_t i = 0 ; i < t ; ++i)
            s.threads.push_back(random_nfa(rng, uniform(rng, 1, max_p), symbols, density));
        return s;
    }

    inline auto random_graph(Rng & rng, std::size_t n, Weight max_weight) -> SchedGraph
    {
        std::vector<NodeId> nodes;
        for (NodeId i = 1 ; i <= n ; ++i)
            nodes.push_back(i);
        SchedGraph g(nodes);
        for (NodeId i = 1 ; i <= n ; ++i)
            for (NodeId j = 1 ; j <= n ; ++j)
                if (i != j)
                    g.set_weight(i, j, uniform(rng, 0, max_weight));
        return g;
    }

    /// Every graph on n nodes with weights in [0, max_weight], in a fixed order.
    inline auto all_graphs(std::size_t n, Weight max_weight) -> std::vector<SchedGraph>
    {
        std::vector<NodeId> nodes;
        for (NodeId i = 1 ; i <= n ; ++i)
            nodes.push_back(i);
        std::vector<std::pair<NodeId, NodeId>> arcs;
        for (NodeId i = 1 ; i <= n ; ++i)
            for (NodeId j = 1 ; j <= n ; ++j)
                if (i != j)
                    arcs.emplace_back(i, j);

        std::vector<SchedGraph> result;
        std::vector<Weight> w(arcs.size(), 0);
        while (true) {
            SchedGraph g(nodes);
            for (std::size_t x = 0 ; x < arcs.size() ; ++x)
                g.set_weight(arcs[x].first, arcs[x].second, w[x]);
            result.push_back(g);
            std::size_t x = 0;
            while (x < w.size() && w[x] == max_weight)
                w[x++] = 0;
            if (x == w.size())
                break;
            ++w[x];
        }
        return result;
    }
}

#endif
