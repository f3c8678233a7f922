/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BCS_GENERATORS_HH
#define BCS_GENERATORS_HH 1

#include <bcs/nfa.hh>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bcs
{
    /// Undirected simple graph on vertices 0 .. names.size() - 1.
    struct SimpleGraph
    {
        std::vector<std::string> names;
        std::vector<std::pair<std::size_t, std::size_t>> edges;

        [[nodiscard]] auto num_vertices() const -> std::size_t { return names.size(); }

        /// Throws InputError on loops, repeated edges or unknown vertices.
        auto validate() const -> void;
    };

    /// A literal is +v or -v for a 1-based variable v, as in DIMACS.
    struct CnfFormula
    {
        std::size_t num_vars = 0;
        std::vector<std::vector<int>> clauses;
    };

    struct SetFamily
    {
        std::vector<std::string> universe;
        std::vector<std::vector<std::string>> sets;
    };

    /// Graph on the k x k vertex matrix; vertices are (row, column) pairs, 0-based.
    struct MatrixGraph
    {
        std::size_t k = 0;
        std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>> edges;
    };

    struct GeneratedBcs
    {
        Smcp program;
        std::size_t cs = 0;
    };

    /// A shuffle membership instance: is word in the shuffle of the L(automata[i]) + epsilon?
    struct SmInstance
    {
        std::vector<std::string> alphabet;
        std::vector<Nfa> automata;
        Word word;

        auto operator== (const SmInstance &) const -> bool = default;
    };

    /**
     * Subgraph isomorphism as bounded context switching. The memory spells out
     * an injective map block by block, ordered by the input order of h's
     * vertices; each edge of g is a thread that reads its two endpoint images.
     */
    [[nodiscard]] auto gen_sgi(const SimpleGraph & g, const SimpleGraph & h) -> GeneratedBcs;

    /// Set cover with exactly t sets as shuffle membership.
    [[nodiscard]] auto gen_setcov(const SetFamily & family, std::size_t t) -> SmInstance;

    /// One program that has a short computation iff one of the formulas is satisfiable.
    [[nodiscard]] auto gen_3sat_cc(const std::vector<CnfFormula> & formulas) -> GeneratedBcs;

    /// Row-wise clique search as a round-robin program with k rounds.
    [[nodiscard]] auto gen_kkclique(const MatrixGraph & g) -> GeneratedBcs;

    /// Bounded intersection of n automata over a common alphabet, word length m.
    [[nodiscard]] auto gen_bdfai(const std::vector<std::string> & alphabet, const std::vector<Nfa> & automata,
            std::size_t m) -> GeneratedBcs;
}

#endif
