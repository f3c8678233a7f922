/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BCS_TESTS_GENERATOR_CORPUS_HH
#define BCS_TESTS_GENERATOR_CORPUS_HH 1

#include "random_instances.hh"

#include <bcs/generators.hh>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace bcs::testing
{
    inline auto graph_from_mask(std::size_t n, unsigned mask) -> SimpleGraph
    {
        SimpleGraph g;
        for (std::size_t v = 0 ; v < n ; ++v)
            g.names.push_back("v" + std::to_string(v + 1));
        unsigned bit = 0;
        for (std::size_t u = 0 ; u < n ; ++u)
            for (std::size_t v = u + 1 ; v < n ; ++v, ++bit)
                if (mask >> bit & 1)
                    g.edges.emplace_back(u, v);
        return g;
    }

    /// One representative of every isomorphism class of graphs on exactly n vertices.
    inline auto graph_classes(std::size_t n) -> std::vector<SimpleGraph>
    {
        std::size_t pairs = n * (n - 1) / 2;
        std::set<unsigned> seen;
        std::vector<SimpleGraph> result;
        for (unsigned mask = 0 ; mask < (1u << pairs) ; ++mask) {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            unsigned canonical = ~0u;
            do {
                unsigned relabelled = 0, bit = 0;
                for (std::size_t u = 0 ; u < n ; ++u)
                    for (std::size_t v = u + 1 ; v < n ; ++v, ++bit)
                        if (mask >> bit & 1) {
                            std::size_t a = std::min(perm[u], perm[v]), b = std::max(perm[u], perm[v]);
                            relabelled |= 1u << (a * (2 * n - a - 1) / 2 + (b - a - 1));
                        }
                canonical = std::min(canonical, relabelled);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (seen.insert(canonical).second)
                result.push_back(graph_from_mask(n, mask));
        }
        return result;
    }

    inline auto has_isolated_vertex(const SimpleGraph & g) -> bool
    {
        std::vector<char> touched(g.num_vertices(), 0);
        for (auto & [u, v] : g.edges)
            touched[u] = touched[v] = 1;
        return std::find(touched.begin(), touched.end(), 0) != touched.end();
    }

    inline auto random_formula(Rng & rng, std::size_t k, std::size_t l) -> CnfFormula
    {
        CnfFormula f{ k, {} };
        for (std::size_t c = 0 ; c < l ; ++c) {
            std::vector<int> clause;
            for (std::size_t i = 0, n = uniform(rng, 1, 3) ; i < n ; ++i) {
                int v = int(uniform(rng, 1, k));
                clause.push_back(uniform(rng, 0, 1) ? v : -v);
            }
            f.clauses.push_back(clause);
        }
        return f;
    }

    inline auto random_family(Rng & rng, std::size_t universe, std::size_t sets) -> SetFamily
    {
        SetFamily f;
        for (std::size_t u = 0 ; u < universe ; ++u)
            f.universe.push_back("u" + std::to_string(u + 1));
        for (std::size_t s = 0 ; s < sets ; ++s) {
            std::vector<std::string> set;
            for (std::size_t u = 0 ; u < universe ; ++u)
                if (uniform(rng, 0, 2) == 0)
                    set.push_back(f.universe[u]);
            f.sets.push_back(set);
        }
        return f;
    }

    inline auto random_matrix_graph(Rng & rng, std::size_t k, double density) -> MatrixGraph
    {
        std::bernoulli_distribution edge(density);
        MatrixGraph g{ k, {} };
        for (std::size_t r = 0 ; r < k ; ++r)
            for (std::size_t c = 0 ; c < k ; ++c)
                for (std::size_t r2 = r + 1 ; r2 < k ; ++r2)
                    for (std::size_t c2 = 0 ; c2 < k ; ++c2)
                        if (edge(rng))
                            g.edges.push_back({ { r, c }, { r2, c2 } });
        return g;
    }

    /// A random complete deterministic automaton.
    inline auto random_dfa(Rng & rng, std::size_t states, std::size_t symbols) -> Nfa
    {
        Nfa a(states, symbols, 0, State(uniform(rng, 0, states - 1)));
        for (State p = 0 ; p < states ; ++p)
            for (Symbol s = 0 ; s < symbols ; ++s)
                a.add_transition(p, s, State(uniform(rng, 0, states - 1)));
        return a;
    }
}

#endif
