/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BCS_GLOBAL_SOLVER_HH
#define BCS_GLOBAL_SOLVER_HH 1

#include <bcs/interface.hh>
#include <bcs/nfa.hh>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bcs
{
    struct BcsOptions
    {
        /// Most shuffle-membership checks before giving up with ResourceError.
        std::uint64_t cap = 50'000'000;
        unsigned jobs = 1;
    };

    struct BcsResult
    {
        bool yes = false;
        InterfaceSeq sigma;
        /// Owning thread (0-based) of every position of sigma.
        std::vector<std::size_t> assignment;
        TaggedWord witness;
        std::uint64_t checks = 0;
    };

    /**
     * Is there a word of the program with at most cs context switches? Tries
     * valid interface sequences of length 1..cs + 1 in order and decides each
     * by shuffle membership over the threads' interface automata.
     */
    [[nodiscard]] auto solve_bcs(const Smcp & s, std::size_t cs, const BcsOptions & options = {}) -> BcsResult;

    /**
     * Fills every position of sigma with a shortest segment word along an
     * accepting path of its owner's interface automaton.
     */
    [[nodiscard]] auto reconstruct_witness(const Smcp & s, const InterfaceSeq & sigma,
            const std::vector<std::size_t> & assignment) -> TaggedWord;
}

#endif
