/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BCS_LOCAL_SOLVER_HH
#define BCS_LOCAL_SOLVER_HH 1

#include <bcs/interface.hh>
#include <bcs/nfa.hh>
#include <bcs/sched_graph.hh>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

namespace bcs
{
    using SeqSet = std::set<InterfaceSeq>;

    /// An interface sequence together with the threads (bitmask, bit i = thread i, 0-based) that realise it.
    struct GenIfaceSeq
    {
        InterfaceSeq seq;
        std::uint64_t threads = 0;

        auto operator<=> (const GenIfaceSeq &) const = default;
    };

    /// Every sequence obtained by summarising chainable blocks of rho, rho included.
    [[nodiscard]] auto closure(const InterfaceSeq & rho) -> SeqSet;

    /// Closures of all interleavings of sigma and tau, keeping lengths <= k.
    [[nodiscard]] auto merge(const InterfaceSeq & sigma, const InterfaceSeq & tau, std::size_t k) -> SeqSet;

    /// Empty when the thread sets overlap.
    [[nodiscard]] auto merge_gen(const GenIfaceSeq & a, const GenIfaceSeq & b, std::size_t k) -> std::set<GenIfaceSeq>;

    /**
     * Interleavings of sigma and tau with exactly i contractions where a sigma
     * pair is directly followed by a tau pair and j where a tau pair is
     * directly followed by a sigma pair. Only chaining neighbours contract.
     */
    [[nodiscard]] auto directed_product(const InterfaceSeq & sigma, const InterfaceSeq & tau,
            std::size_t i, std::size_t j) -> SeqSet;

    /// All sequences of length 1..max_len accepted by b, decoded with m memory states.
    [[nodiscard]] auto accepted_sequences(const Nfa & b, std::size_t num_memory_states, std::size_t max_len) -> SeqSet;

    struct LocalOptions
    {
        /// Most lattice elements before giving up with ResourceError.
        std::size_t cap = 2'000'000;
    };

    /// Is there a word of the program whose scheduling graph has dimension <= sd?
    [[nodiscard]] auto solve_bcsl_sd(const Smcp & s, std::size_t sd, const LocalOptions & options = {}) -> bool;

    /// Is there a word of the program whose scheduling graph is exactly g? Merges follow p.
    [[nodiscard]] auto solve_bcsl_fix(const Smcp & s, const SchedGraph & g, const ContractionProcess & p,
            const LocalOptions & options = {}) -> bool;

    /// The round-robin graph: a cycle 1 -> 2 -> ... -> t -> 1 with weights cs, closed by cs - 1.
    [[nodiscard]] auto round_robin_graph(std::size_t t, std::size_t cs) -> SchedGraph;

    /// Contract 1 and 2, then the result with 3, and so on up to t.
    [[nodiscard]] auto chain_process(std::size_t t) -> ContractionProcess;

    /// Exactly cs rounds of the order 1, 2, ..., t, every context nonempty.
    [[nodiscard]] auto solve_bcsl_rr(const Smcp & s, std::size_t cs, const LocalOptions & options = {}) -> bool;

    /// Every thread runs at most cs contexts.
    [[nodiscard]] auto solve_bcsl_any(const Smcp & s, std::size_t cs, const LocalOptions & options = {}) -> bool;
}

#endif
