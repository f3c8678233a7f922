/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BCS_INTERFACE_HH
#define BCS_INTERFACE_HH 1

#include <bcs/nfa.hh>

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

namespace bcs
{
    struct StatePair
    {
        State first;
        State second;

        auto operator<=> (const StatePair &) const = default;
    };

    using InterfaceSeq = std::vector<StatePair>;

    /// Pair symbols of an interface automaton are encoded as q * m + q2.
    [[nodiscard]] inline auto pair_symbol(StatePair p, std::size_t num_memory_states) -> Symbol
    {
        return Symbol(p.first * num_memory_states + p.second);
    }

    [[nodiscard]] inline auto symbol_pair(Symbol s, std::size_t num_memory_states) -> StatePair
    {
        return { State(s / num_memory_states), State(s % num_memory_states) };
    }

    [[nodiscard]] auto pair_word(const InterfaceSeq & seq, std::size_t num_memory_states) -> Word;

    /// Empty sequences are valid exactly when the memory's initial and final
    /// states coincide.
    [[nodiscard]] auto is_valid(const InterfaceSeq & seq, const Nfa & m) -> bool;

    /**
     * The interface automaton B: states of a, alphabet of pair symbols, and an
     * edge p --(q,q2)--> p2 whenever some word is accepted both by m from q to
     * q2 and by a from p to p2. With nonempty set that word must have length
     * at least one, so B then describes runs made of nonempty contexts.
     */
    [[nodiscard]] auto interface_automaton(const Nfa & m, const Nfa & a, bool nonempty = false) -> Nfa;

    /// Pair filter for enumerate_valid, indexed by pair symbol.
    using PairFilter = std::vector<char>;

    /**
     * Calls visit on every valid sequence of length 1..max_len, shortest first
     * and lexicographically within a length. Stops early when visit returns
     * false, in which case the result is false too. With a filter, only pairs
     * whose entry is nonzero are used.
     */
    auto enumerate_valid(const Nfa & m, std::size_t max_len,
            const std::function<auto (const InterfaceSeq &) -> bool> & visit,
            const PairFilter * filter = nullptr) -> bool;

    /**
     * The interface sequence a run induces: run holds the memory states
     * before and after each letter of u, and a pair is emitted for every
     * maximal single-thread block of u.
     */
    [[nodiscard]] auto induced_sequence(const Smcp & s, const TaggedWord & u, const std::vector<State> & run) -> InterfaceSeq;
}

#endif
