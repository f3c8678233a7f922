/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <bcs/interface.hh>

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

using std::deque;
using std::function;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace bcs
{
    auto pair_word(const InterfaceSeq & seq, size_t num_memory_states) -> Word
    {
        Word w;
        w.reserve(seq.size());
        for (auto & p : seq)
            w.push_back(pair_symbol(p, num_memory_states));
        return w;
    }

    auto is_valid(const InterfaceSeq & seq, const Nfa & m) -> bool
    {
        for (auto & p : seq)
            if (p.first >= m.num_states() || p.second >= m.num_states())
                throw InputError("interface sequence mentions an undeclared memory state");

        if (seq.empty())
            return m.initial() == m.final();
        if (seq.front().first != m.initial() || seq.back().second != m.final())
            return false;
        for (size_t i = 0 ; i + 1 < seq.size() ; ++i)
            if (seq[i].second != seq[i + 1].first)
                return false;
        return true;
    }

    auto interface_automaton(const Nfa & m, const Nfa & a, bool nonempty) -> Nfa
    {
        if (m.num_symbols() != a.num_symbols())
            throw InputError("interface automaton needs automata over one alphabet");

        const size_t mq = m.num_states(), ap = a.num_states();
        Nfa b(a.state_names(), mq * mq, a.initial(), a.final());

        // one search of the product per source (q, p) fills the whole row of
        // the sync table
        vector<char> seen(mq * ap);
        deque<size_t> queue;
        for (State q = 0 ; q < mq ; ++q)
            for (State p = 0 ; p < ap ; ++p) {
                std::fill(seen.begin(), seen.end(), 0);
                queue.clear();
                if (! nonempty) {
                    seen[q * ap + p] = 1;
                    queue.push_back(q * ap + p);
                }
                else {
                    for (auto & tr : m.transitions_from(q))
                        for (auto pt : a.successors(p, tr.symbol))
                            if (! seen[tr.target * ap + pt]) {
                                seen[tr.target * ap + pt] = 1;
                                queue.push_back(tr.target * ap + pt);
                            }
                }

                while (! queue.empty()) {
                    auto id = queue.front();
                    queue.pop_front();
                    State x = State(id / ap), y = State(id % ap);
                    for (auto & tr : m.transitions_from(x))
                        for (auto yt : a.successors(y, tr.symbol))
                            if (! seen[tr.target * ap + yt]) {
                                seen[tr.target * ap + yt] = 1;
                                queue.push_back(tr.target * ap + yt);
                            }
                }

                for (State q2 = 0 ; q2 < mq ; ++q2)
                    for (State p2 = 0 ; p2 < ap ; ++p2)
                        if (seen[q2 * ap + p2])
                            b.add_transition(p, pair_symbol({ q, q2 }, mq), p2);
            }

        return b;
    }

    auto enumerate_valid(const Nfa & m, size_t max_len,
            const function<auto (const InterfaceSeq &) -> bool> & visit,
            const PairFilter * filter) -> bool
    {
        if (max_len < 1)
            throw InputError("enumeration needs max_len >= 1");

        const size_t mq = m.num_states();
        auto allowed = [&] (State q, State q2) {
            return ! filter || (*filter)[q * mq + q2];
        };

        // fewest pairs needed to get from each state to the final state
        constexpr size_t unreachable = std::numeric_limits<size_t>::max();
        vector<size_t> dist(mq, unreachable);
        dist[m.final()] = 0;
        deque<State> queue{ m.final() };
        while (! queue.empty()) {
            State x = queue.front();
            queue.pop_front();
            for (State q = 0 ; q < mq ; ++q)
                if (dist[q] == unreachable && allowed(q, x)) {
                    dist[q] = dist[x] + 1;
                    queue.push_back(q);
                }
        }

        InterfaceSeq seq;
        function<auto (State, size_t) -> bool> extend = [&] (State from, size_t remaining) -> bool {
            if (remaining == 1) {
                if (! allowed(from, m.final()))
                    return true;
                seq.push_back({ from, m.final() });
                bool go_on = visit(seq);
                seq.pop_back();
                return go_on;
            }
            for (State q2 = 0 ; q2 < mq ; ++q2) {
                if (! allowed(from, q2) || dist[q2] == unreachable || dist[q2] > remaining - 1)
                    continue;
                seq.push_back({ from, q2 });
                bool go_on = extend(q2, remaining - 1);
                seq.pop_back();
                if (! go_on)
                    return false;
            }
            return true;
        };

        for (size_t len = 1 ; len <= max_len ; ++len)
            if (dist[m.initial()] != unreachable && dist[m.initial()] <= len)
                if (! extend(m.initial(), len))
                    return false;
        return true;
    }

    auto induced_sequence(const Smcp & s, const TaggedWord & u, const vector<State> & run) -> InterfaceSeq
    {
        const auto & m = s.memory;
        if (run.size() != u.size() + 1)
            throw InputError("memory run must have one more state than the word has letters");
        if (run.front() != m.initial() || run.back() != m.final())
            throw InputError("memory run is not accepting");
        for (size_t i = 0 ; i < u.size() ; ++i) {
            if (u[i].thread >= s.num_threads())
                throw InputError("letter " + to_string(i) + " names an undeclared thread");
            if (u[i].symbol >= m.num_symbols())
                throw InputError("letter " + to_string(i) + " is not a declared symbol");
            auto succ = m.successors(run[i], u[i].symbol);
            if (std::find(succ.begin(), succ.end(), run[i + 1]) == succ.end())
                throw InputError("memory run has no transition at letter " + to_string(i));
        }

        InterfaceSeq seq;
        size_t start = 0;
        for (size_t i = 1 ; i <= u.size() ; ++i)
            if (i == u.size() || u[i].thread != u[i - 1].thread) {
                seq.push_back({ run[start], run[i] });
                start = i;
            }
        return seq;
    }
}
