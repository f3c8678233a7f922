/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <bcs/subset_convolution.hh>

#include <algorithm>
#include <bit>
#include <string>

using std::optional;
using std::size_t;
using std::to_string;
using std::vector;

namespace bcs
{
    SetFunction::SetFunction(size_t k) :
        k(k)
    {
        if (k > max_subset_bits)
            throw ResourceError("set function over " + to_string(k) + " positions exceeds the supported "
                    + to_string(max_subset_bits));
        table.assign(size_t{ 1 } << k, 0);
    }

    auto checked_add(Value a, Value b) -> Value
    {
        Value r;
        if (__builtin_add_overflow(a, b, &r))
            throw ResourceError("integer overflow in subset convolution");
        return r;
    }

    auto checked_mul(Value a, Value b) -> Value
    {
        Value r;
        if (__builtin_mul_overflow(a, b, &r))
            throw ResourceError("integer overflow in subset convolution");
        return r;
    }

    namespace
    {
        auto checked_sub(Value a, Value b) -> Value
        {
            Value r;
            if (__builtin_sub_overflow(a, b, &r))
                throw ResourceError("integer overflow in subset convolution");
            return r;
        }

        // ranked[r * n + S] = sum of f(U) over U subset of S with |U| = r
        auto ranked_zeta(const SetFunction & f) -> vector<Value>
        {
            const size_t n = f.table.size();
            vector<Value> ranked((f.k + 1) * n, 0);
            vector<char> used(f.k + 1, 0);
            Value largest = 0;
            for (size_t s = 0 ; s < n ; ++s)
                if (f.table[s] != 0) {
                    ranked[size_t(std::popcount(s)) * n + s] = f.table[s];
                    used[size_t(std::popcount(s))] = 1;
                    largest = std::max(largest, f.table[s] < 0 ? -f.table[s] : f.table[s]);
                }

            // a row entry sums at most 2^k values, so small inputs cannot overflow
            bool safe = f.k < 100 && largest < (Value{ 1 } << (125 - f.k));
            for (size_t r = 0 ; r <= f.k ; ++r) {
                if (! used[r])
                    continue;
                Value * row = ranked.data() + r * n;
                for (size_t half = 1 ; half < n ; half <<= 1)
                    for (size_t block = 0 ; block < n ; block += 2 * half)
                        for (size_t s = block + half ; s < block + 2 * half ; ++s)
                            row[s] = safe ? row[s] + row[s - half] : checked_add(row[s], row[s - half]);
            }
            return ranked;
        }
    }

    auto convolve(const SetFunction & f, const SetFunction & g) -> SetFunction
    {
        if (f.k != g.k || f.table.size() != (size_t{ 1 } << f.k) || g.table.size() != f.table.size())
            throw InputError("convolution operands must share the ground set");

        const size_t k = f.k, n = f.table.size();
        auto fr = ranked_zeta(f);
        auto gr = ranked_zeta(g);

        SetFunction h(k);
        vector<Value> layer(n);
        for (size_t r = 0 ; r <= k ; ++r) {
            for (size_t s = 0 ; s < n ; ++s) {
                Value acc = 0;
                for (size_t j = 0 ; j <= r ; ++j)
                    acc = checked_add(acc, checked_mul(fr[j * n + s], gr[(r - j) * n + s]));
                layer[s] = acc;
            }
            for (size_t bit = 0 ; bit < k ; ++bit)
                for (size_t s = 0 ; s < n ; ++s)
                    if (s & (size_t{ 1 } << bit))
                        layer[s] = checked_sub(layer[s], layer[s ^ (size_t{ 1 } << bit)]);
            for (size_t s = 0 ; s < n ; ++s)
                if (size_t(std::popcount(s)) == r)
                    h.table[s] = layer[s];
        }
        return h;
    }

    auto characteristic(const Nfa & b, const Word & w) -> SetFunction
    {
        for (auto sym : w)
            if (sym >= b.num_symbols())
                throw InputError("word symbol " + to_string(sym) + " is not declared in the automaton");

        SetFunction f(w.size());
        const size_t n = f.table.size();
        const size_t words = (b.num_states() + 63) / 64;

        // reach[S] = states after reading w[S], built from S minus its top bit
        vector<std::uint64_t> reach(n * words, 0);
        reach[b.initial() / 64] |= std::uint64_t{ 1 } << (b.initial() % 64);
        f.table[0] = 1;
        for (size_t s = 1 ; s < n ; ++s) {
            size_t top = size_t(std::bit_width(s)) - 1;
            const std::uint64_t * from = reach.data() + (s ^ (size_t{ 1 } << top)) * words;
            std::uint64_t * to = reach.data() + s * words;
            for (size_t x = 0 ; x < words ; ++x)
                for (std::uint64_t bits = from[x] ; bits ; bits &= bits - 1) {
                    State p = State(x * 64 + size_t(std::countr_zero(bits)));
                    for (auto p2 : b.successors(p, w[top]))
                        to[p2 / 64] |= std::uint64_t{ 1 } << (p2 % 64);
                }
            f.table[s] = (to[b.final() / 64] >> (b.final() % 64)) & 1;
        }
        return f;
    }

    namespace
    {
        auto folds(const vector<Nfa> & bs, const Word & w, vector<SetFunction> * chars) -> vector<SetFunction>
        {
            if (bs.empty())
                throw InputError("shuffle membership needs at least one automaton");
            vector<SetFunction> result;
            for (size_t i = 0 ; i < bs.size() ; ++i) {
                auto f = characteristic(bs[i], w);
                if (result.empty())
                    result.push_back(f);
                else
                    result.push_back(convolve(result.back(), f));
                if (chars)
                    chars->push_back(std::move(f));
            }
            return result;
        }
    }

    auto shuffle_count(const vector<Nfa> & bs, const Word & w) -> Value
    {
        if (bs.empty())
            throw InputError("shuffle membership needs at least one automaton");

        // Stay in the ranked zeta domain: per set S, multiply the rank
        // polynomials of all automata truncated at degree k. The coefficient
        // of x^k counts tuples of subsets of S whose sizes add up to k, and
        // inclusion-exclusion over S keeps those covering every position,
        // which are then exactly the disjoint ones.
        const size_t k = w.size(), n = size_t{ 1 } << k;
        vector<Value> product;
        for (auto & b : bs) {
            auto f = ranked_zeta(characteristic(b, w));
            if (product.empty()) {
                product = std::move(f);
                continue;
            }
            vector<Value> next((k + 1) * n, 0);
            for (size_t s = 0 ; s < n ; ++s) {
                size_t top = size_t(std::popcount(s));
                // the new factor has degree at most |S|, but overlapping tuples
                // push the running product beyond it
                for (size_t i = 0 ; i <= k ; ++i) {
                    Value a = product[i * n + s];
                    if (a == 0)
                        continue;
                    for (size_t j = 0 ; i + j <= k && j <= top ; ++j)
                        if (f[j * n + s] != 0)
                            next[(i + j) * n + s] = checked_add(next[(i + j) * n + s], checked_mul(a, f[j * n + s]));
                }
            }
            product = std::move(next);
        }

        Value result = 0;
        for (size_t s = 0 ; s < n ; ++s) {
            Value term = product[k * n + s];
            result = ((k - size_t(std::popcount(s))) % 2) ? checked_sub(result, term) : checked_add(result, term);
        }
        return result;
    }

    auto shuffle_membership(const vector<Nfa> & bs, const Word & w) -> bool
    {
        if (bs.empty())
            throw InputError("shuffle membership needs at least one automaton");
        if (w.empty())
            return true;
        return shuffle_count(bs, w) > 0;
    }

    auto shuffle_certificate(const vector<Nfa> & bs, const Word & w) -> optional<vector<size_t>>
    {
        vector<SetFunction> chars;
        auto fold = folds(bs, w, &chars);
        size_t rest = fold.back().table.size() - 1;
        if (fold.back().table[rest] <= 0)
            return std::nullopt;

        vector<size_t> owner(w.size(), 0);
        for (size_t i = bs.size() - 1 ; i > 0 ; --i) {
            // some U with f_i(U) = 1 and fold_{i-1}(rest \ U) > 0 exists
            // because fold_i(rest) > 0 and all terms are nonnegative
            size_t chosen = rest + 1;
            for (size_t u = rest ; ; u = (u - 1) & rest) {
                if (chars[i].table[u] > 0 && fold[i - 1].table[rest ^ u] > 0) {
                    chosen = u;
                    break;
                }
                if (u == 0)
                    break;
            }
            if (chosen > rest)
                throw InternalError("shuffle certificate walk found no split");
            for (size_t p = 0 ; p < w.size() ; ++p)
                if (chosen & (size_t{ 1 } << p))
                    owner[p] = i;
            rest ^= chosen;
        }
        if (chars[0].table[rest] <= 0)
            throw InternalError("shuffle certificate walk ended on a rejected set");
        return owner;
    }
}
