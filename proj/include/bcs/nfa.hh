/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BCS_NFA_HH
#define BCS_NFA_HH 1

#include <bcs/errors.hh>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bcs
{
    using State = std::uint32_t;
    using Symbol = std::uint32_t;
    using Word = std::vector<Symbol>;

    struct Transition
    {
        State source;
        Symbol symbol;
        State target;

        auto operator<=> (const Transition &) const = default;
    };

    /**
     * Nondeterministic finite automaton with exactly one initial and one
     * final state and no epsilon transitions. States and symbols are dense
     * ids; state names are kept only for reporting and file round trips.
     */
    class Nfa
    {
        private:
            std::size_t _num_symbols = 0;
            State _initial = 0;
            State _final = 0;
            std::vector<std::string> _state_names;
            // successors, indexed by state * num_symbols + symbol
            std::vector<std::vector<State>> _delta;
            std::vector<Transition> _transitions;

            auto check_state(State s, const char * what) const -> void;

        public:
            Nfa() = default;

            /// Creates an automaton with states named q0, q1, ...
            Nfa(std::size_t num_states, std::size_t num_symbols, State initial, State final);

            Nfa(std::vector<std::string> state_names, std::size_t num_symbols, State initial, State final);

            auto add_transition(State source, Symbol symbol, State target) -> void;

            [[nodiscard]] auto num_states() const -> std::size_t { return _state_names.size(); }
            [[nodiscard]] auto num_symbols() const -> std::size_t { return _num_symbols; }
            [[nodiscard]] auto initial() const -> State { return _initial; }
            [[nodiscard]] auto final() const -> State { return _final; }
            [[nodiscard]] auto state_name(State s) const -> const std::string & { return _state_names.at(s); }
            [[nodiscard]] auto state_names() const -> const std::vector<std::string> & { return _state_names; }

            [[nodiscard]] auto successors(State s, Symbol a) const -> std::span<const State>
            {
                return _delta[s * _num_symbols + a];
            }

            /// All transitions, sorted and without duplicates.
            [[nodiscard]] auto transitions() const -> const std::vector<Transition> & { return _transitions; }

            /// Transitions leaving s, as a contiguous sorted slice of transitions().
            [[nodiscard]] auto transitions_from(State s) const -> std::span<const Transition>;

            auto operator== (const Nfa & other) const -> bool;
    };

    /**
     * Shared-memory concurrent program: a memory automaton plus t thread
     * automata over the same alphabet. Thread i (1-based in reports) is
     * threads[i - 1]; the thread tag on symbols is implicit in that index.
     */
    struct Smcp
    {
        std::vector<std::string> alphabet;
        Nfa memory;
        std::vector<Nfa> threads;

        [[nodiscard]] auto num_threads() const -> std::size_t { return threads.size(); }

        /// Throws InputError unless t >= 1 and every automaton uses the alphabet.
        auto validate() const -> void;

        auto operator== (const Smcp &) const -> bool = default;
    };

    struct TaggedSymbol
    {
        Symbol symbol;
        std::size_t thread;     // 0-based thread index

        auto operator<=> (const TaggedSymbol &) const = default;
    };

    using TaggedWord = std::vector<TaggedSymbol>;

    [[nodiscard]] auto accepts(const Nfa & a, std::span<const Symbol> w) -> bool;

    /**
     * Decides L(M(q, q2)) cap L(A(p, p2)) != empty by breadth-first search on
     * the product, returning one shortest common word. With require_nonempty
     * set, only words of length >= 1 count.
     */
    [[nodiscard]] auto segment_nonempty(const Nfa & m, State q, State q2, const Nfa & a, State p, State p2,
            bool require_nonempty = false) -> std::optional<Word>;

    /**
     * Unbounded reachability: is L(S) nonempty? Explores the product of the
     * memory with every thread, where a thread that has not moved yet is
     * distinguished from one that returned to its initial state. Throws
     * ResourceError when m * prod(|P_i| + 1) exceeds state_cap.
     */
    [[nodiscard]] auto product_reach(const Smcp & s, std::uint64_t state_cap = 10'000'000) -> bool;

    /// Number of contexts (maximal single-thread infixes) of a tagged word.
    [[nodiscard]] auto count_contexts(const TaggedWord & u) -> std::size_t;

    /// The word with thread tags dropped.
    [[nodiscard]] auto untag(const TaggedWord & u) -> Word;

    /// Projection of u onto the symbols of one thread.
    [[nodiscard]] auto project(const TaggedWord & u, std::size_t thread) -> Word;
}

#endif
