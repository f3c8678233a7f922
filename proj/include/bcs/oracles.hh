/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BCS_ORACLES_HH
#define BCS_ORACLES_HH 1

#include <bcs/generators.hh>
#include <bcs/interface.hh>
#include <bcs/nfa.hh>
#include <bcs/sched_graph.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace bcs
{
    // Brute-force deciders. None of these use the interface automata, the
    // convolution kernel or the subset dynamic programs.

    inline constexpr std::uint64_t default_oracle_cap = 5'000'000;

    /// Fewest context switches of any word of the program, by 0-1 BFS over configurations.
    [[nodiscard]] auto oracle_min_switches(const Smcp & s, std::uint64_t cap = default_oracle_cap)
        -> std::optional<std::size_t>;

    [[nodiscard]] auto oracle_bcs(const Smcp & s, std::size_t cs, std::uint64_t cap = default_oracle_cap) -> bool;

    /// Search over position-to-automaton assignments. Throws ResourceError when k log2 t exceeds cap_bits.
    [[nodiscard]] auto oracle_sm(const std::vector<Nfa> & bs, const Word & w, double cap_bits = 48) -> bool;

    /// Minimum degree over every contraction process, enumerated explicitly.
    [[nodiscard]] auto oracle_sdim(const SchedGraph & g, std::size_t node_cap = 7) -> Weight;

    struct LocalOracleResult
    {
        bool yes = false;
        /// Owning thread (1-based) of every context of a witness.
        std::vector<NodeId> contexts;
    };

    [[nodiscard]] auto oracle_bcsl_sd(const Smcp & s, std::size_t sd, std::uint64_t cap = default_oracle_cap) -> LocalOracleResult;
    [[nodiscard]] auto oracle_bcsl_fix(const Smcp & s, const SchedGraph & g, std::uint64_t cap = default_oracle_cap) -> LocalOracleResult;
    [[nodiscard]] auto oracle_bcsl_rr(const Smcp & s, std::size_t cs, std::uint64_t cap = default_oracle_cap) -> LocalOracleResult;
    [[nodiscard]] auto oracle_bcsl_any(const Smcp & s, std::size_t cs, std::uint64_t cap = default_oracle_cap) -> LocalOracleResult;

    /// Is seq in the interface language of a, by a layered search over the memory-thread product?
    [[nodiscard]] auto oracle_interface_member(const Nfa & m, const Nfa & a, const InterfaceSeq & seq) -> bool;

    /// Memory accepts u, every thread accepts its projection (or has none), at most cs switches.
    [[nodiscard]] auto check_witness(const Smcp & s, const TaggedWord & u, std::size_t cs) -> bool;

    // Brute force for the source problems of the generators.

    /// Is g isomorphic to a subgraph of h? Tries every injective vertex map.
    [[nodiscard]] auto brute_subgraph_iso(const SimpleGraph & g, const SimpleGraph & h) -> bool;

    /// Do exactly t distinct members of the family cover the universe?
    [[nodiscard]] auto brute_set_cover(const SetFamily & family, std::size_t t) -> bool;

    [[nodiscard]] auto brute_satisfiable(const CnfFormula & f) -> bool;

    /// One vertex per row, pairwise adjacent.
    [[nodiscard]] auto brute_row_clique(const MatrixGraph & g) -> bool;

    /// Is some word of length m accepted by every automaton?
    [[nodiscard]] auto brute_bounded_intersection(const std::vector<Nfa> & automata, std::size_t num_symbols,
            std::size_t m) -> bool;
}

#endif
