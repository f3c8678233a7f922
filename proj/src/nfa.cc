/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <bcs/nfa.hh>

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>

using std::deque;
using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace bcs
{
    Nfa::Nfa(size_t num_states, size_t num_symbols, State initial, State final) :
        Nfa([&] {
            vector<string> names;
            names.reserve(num_states);
            for (size_t i = 0 ; i < num_states ; ++i)
                names.push_back("q" + to_string(i));
            return names;
        }(), num_symbols, initial, final)
    {
    }

    Nfa::Nfa(vector<string> state_names, size_t num_symbols, State initial, State final) :
        _num_symbols(num_symbols),
        _initial(initial),
        _final(final),
        _state_names(std::move(state_names)),
        _delta(_state_names.size() * num_symbols)
    {
        if (_state_names.empty())
            throw InputError("automaton must have at least one state");
        check_state(initial, "initial state");
        check_state(final, "final state");
    }

    auto Nfa::check_state(State s, const char * what) const -> void
    {
        if (s >= _state_names.size())
            throw InputError(string(what) + " " + to_string(s) + " is not a declared state");
    }

    auto Nfa::add_transition(State source, Symbol symbol, State target) -> void
    {
        check_state(source, "transition source");
        check_state(target, "transition target");
        if (symbol >= _num_symbols)
            throw InputError("transition symbol " + to_string(symbol) + " is not declared");

        Transition t{ source, symbol, target };
        auto pos = std::lower_bound(_transitions.begin(), _transitions.end(), t);
        if (pos != _transitions.end() && *pos == t)
            return;
        _transitions.insert(pos, t);

        auto & succ = _delta[source * _num_symbols + symbol];
        succ.insert(std::lower_bound(succ.begin(), succ.end(), target), target);
    }

    auto Nfa::transitions_from(State s) const -> span<const Transition>
    {
        auto lo = std::lower_bound(_transitions.begin(), _transitions.end(), Transition{ s, 0, 0 });
        auto hi = std::lower_bound(lo, _transitions.end(), Transition{ s + 1, 0, 0 });
        return { lo, hi };
    }

    auto Nfa::operator== (const Nfa & other) const -> bool
    {
        return _num_symbols == other._num_symbols && _initial == other._initial && _final == other._final
            && _state_names == other._state_names && _transitions == other._transitions;
    }

    auto Smcp::validate() const -> void
    {
        if (threads.empty())
            throw InputError("program needs at least one thread");
        if (memory.num_symbols() != alphabet.size())
            throw InputError("memory alphabet does not match the program alphabet");
        for (size_t i = 0 ; i < threads.size() ; ++i)
            if (threads[i].num_symbols() != alphabet.size())
                throw InputError("thread " + to_string(i + 1) + " alphabet does not match the program alphabet");
    }

    auto accepts(const Nfa & a, span<const Symbol> w) -> bool
    {
        vector<char> current(a.num_states(), 0), next(a.num_states(), 0);
        current[a.initial()] = 1;
        for (auto sym : w) {
            if (sym >= a.num_symbols())
                throw InputError("word symbol " + to_string(sym) + " is not declared in the automaton");
            std::fill(next.begin(), next.end(), 0);
            bool any = false;
            for (State s = 0 ; s < a.num_states() ; ++s)
                if (current[s])
                    for (auto t : a.successors(s, sym))
                        next[t] = any = true;
            if (! any)
                return false;
            std::swap(current, next);
        }
        return current[a.final()];
    }

    auto segment_nonempty(const Nfa & m, State q, State q2, const Nfa & a, State p, State p2,
            bool require_nonempty) -> optional<Word>
    {
        if (q >= m.num_states() || q2 >= m.num_states() || p >= a.num_states() || p2 >= a.num_states())
            throw InputError("segment endpoints must be states of their automata");
        if (m.num_symbols() != a.num_symbols())
            throw InputError("segment test needs automata over one alphabet");

        if (q == q2 && p == p2 && ! require_nonempty)
            return Word{};

        const size_t width = a.num_states();
        const auto encode = [&] (State x, State y) { return size_t(x) * width + y; };
        constexpr size_t none = std::numeric_limits<size_t>::max();

        vector<size_t> parent(m.num_states() * width, none);
        vector<Symbol> via(m.num_states() * width, 0);
        vector<char> seen(m.num_states() * width, 0);
        deque<size_t> queue;

        // expand the source once without marking it, so that with
        // require_nonempty a cycle back to it is still found
        const size_t source = encode(q, p);
        const size_t goal = encode(q2, p2);
        for (const auto & tr : m.transitions_from(q))
            for (auto pt : a.successors(p, tr.symbol)) {
                auto id = encode(tr.target, pt);
                if (! seen[id]) {
                    seen[id] = 1;
                    parent[id] = source;
                    via[id] = tr.symbol;
                    queue.push_back(id);
                }
            }

        while (! queue.empty() && ! seen[goal]) {
            auto id = queue.front();
            queue.pop_front();
            State x = State(id / width), y = State(id % width);
            for (const auto & tr : m.transitions_from(x))
                for (auto yt : a.successors(y, tr.symbol)) {
                    auto nid = encode(tr.target, yt);
                    if (! seen[nid]) {
                        seen[nid] = 1;
                        parent[nid] = id;
                        via[nid] = tr.symbol;
                        queue.push_back(nid);
                    }
                }
        }

        if (! seen[goal])
            return std::nullopt;

        Word word;
        size_t cur = goal;
        do {
            word.push_back(via[cur]);
            cur = parent[cur];
        } while (cur != source);
        std::reverse(word.begin(), word.end());
        return word;
    }

    auto product_reach(const Smcp & s, uint64_t state_cap) -> bool
    {
        s.validate();
        const auto & m = s.memory;
        const size_t t = s.num_threads();

        if (m.initial() == m.final())
            return true;

        // radix encoding: memory state, then each thread in [0, |P_i|], where
        // |P_i| marks "not moved yet"
        vector<uint64_t> radix(t + 1);
        uint64_t total = m.num_states();
        for (size_t i = 0 ; i < t ; ++i) {
            radix[i] = total;
            auto width = uint64_t(s.threads[i].num_states()) + 1;
            if (total > state_cap / width)
                throw ResourceError("product state space exceeds the cap of " + to_string(state_cap));
            total *= width;
        }
        if (total > state_cap)
            throw ResourceError("product state space exceeds the cap of " + to_string(state_cap));

        auto decode_thread = [&] (uint64_t id, size_t i) -> State {
            return State((id / radix[i]) % (s.threads[i].num_states() + 1));
        };

        uint64_t start = m.initial();
        for (size_t i = 0 ; i < t ; ++i)
            start += radix[i] * s.threads[i].num_states();

        std::unordered_set<uint64_t> seen{ start };
        deque<uint64_t> queue{ start };
        while (! queue.empty()) {
            auto id = queue.front();
            queue.pop_front();
            State q = State(id % m.num_states());

            if (q == m.final()) {
                bool ok = true;
                for (size_t i = 0 ; i < t && ok ; ++i) {
                    auto p = decode_thread(id, i);
                    ok = (p == s.threads[i].num_states() || p == s.threads[i].final());
                }
                if (ok)
                    return true;
            }

            for (size_t i = 0 ; i < t ; ++i) {
                const auto & a = s.threads[i];
                State p = decode_thread(id, i);
                State from = (p == a.num_states()) ? a.initial() : p;
                uint64_t base = id - q - uint64_t(p) * radix[i];
                for (const auto & tr : m.transitions_from(q))
                    for (auto pt : a.successors(from, tr.symbol)) {
                        uint64_t nid = base + tr.target + uint64_t(pt) * radix[i];
                        if (seen.insert(nid).second)
                            queue.push_back(nid);
                    }
            }
        }
        return false;
    }

    auto count_contexts(const TaggedWord & u) -> size_t
    {
        size_t contexts = 0;
        for (size_t i = 0 ; i < u.size() ; ++i)
            if (i == 0 || u[i].thread != u[i - 1].thread)
                ++contexts;
        return contexts;
    }

    auto untag(const TaggedWord & u) -> Word
    {
        Word w;
        w.reserve(u.size());
        for (const auto & x : u)
            w.push_back(x.symbol);
        return w;
    }

    auto project(const TaggedWord & u, size_t thread) -> Word
    {
        Word w;
        for (const auto & x : u)
            if (x.thread == thread)
                w.push_back(x.symbol);
        return w;
    }
}
