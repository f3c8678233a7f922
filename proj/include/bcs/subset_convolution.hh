/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BCS_SUBSET_CONVOLUTION_HH
#define BCS_SUBSET_CONVOLUTION_HH 1

#include <bcs/nfa.hh>

#include <cstddef>
#include <optional>
#include <vector>

namespace bcs
{
    using Value = __int128;

    /// An integer function on the subsets of {0, ..., k - 1}, indexed by bitmask.
    struct SetFunction
    {
        std::size_t k = 0;
        std::vector<Value> table;

        SetFunction() = default;
        explicit SetFunction(std::size_t k);

        auto operator== (const SetFunction &) const -> bool = default;
    };

    /// Largest supported ground set.
    inline constexpr std::size_t max_subset_bits = 24;

    [[nodiscard]] auto checked_add(Value a, Value b) -> Value;
    [[nodiscard]] auto checked_mul(Value a, Value b) -> Value;

    /**
     * Subset convolution h(S) = sum over U subset of S of f(U) g(S \ U), via
     * ranked zeta transforms and Moebius inversion. Overflow throws
     * ResourceError.
     */
    [[nodiscard]] auto convolve(const SetFunction & f, const SetFunction & g) -> SetFunction;

    /// f(S) = 1 iff S is empty or the letters of w at positions S form a word of b.
    [[nodiscard]] auto characteristic(const Nfa & b, const Word & w) -> SetFunction;

    /// Is w in the shuffle of the languages L(b) + epsilon, one per automaton?
    [[nodiscard]] auto shuffle_membership(const std::vector<Nfa> & bs, const Word & w) -> bool;

    /// The number of ordered t-partitions of w's positions accepted piecewise.
    [[nodiscard]] auto shuffle_count(const std::vector<Nfa> & bs, const Word & w) -> Value;

    /**
     * A position-to-automaton assignment witnessing shuffle membership, or
     * nothing. Recovered from the prefix folds f_1 * ... * f_j.
     */
    [[nodiscard]] auto shuffle_certificate(const std::vector<Nfa> & bs, const Word & w)
        -> std::optional<std::vector<std::size_t>>;
}

#endif
