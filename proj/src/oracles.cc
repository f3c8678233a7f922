/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <bcs/oracles.hh>

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

using std::deque;
using std::function;
using std::map;
using std::optional;
using std::set;
using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace bcs
{
    auto oracle_min_switches(const Smcp & s, uint64_t cap) -> optional<size_t>
    {
        s.validate();
        const size_t t = s.num_threads();
        const auto & m = s.memory;

        // configuration: memory state, thread states (|P_i| = not moved yet),
        // active thread (t = none yet)
        using Config = vector<State>;
        Config start{ m.initial() };
        for (auto & a : s.threads)
            start.push_back(State(a.num_states()));
        start.push_back(State(t));

        auto accepting = [&] (const Config & c) {
            if (c[0] != m.final())
                return false;
            for (size_t i = 0 ; i < t ; ++i)
                if (c[i + 1] != s.threads[i].num_states() && c[i + 1] != s.threads[i].final())
                    return false;
            return true;
        };

        map<Config, size_t> dist{ { start, 0 } };
        deque<Config> queue{ start };
        while (! queue.empty()) {
            Config c = queue.front();
            queue.pop_front();
            size_t d = dist.at(c);
            if (accepting(c))
                return d;

            for (size_t i = 0 ; i < t ; ++i) {
                const auto & a = s.threads[i];
                State p = c[i + 1] == a.num_states() ? a.initial() : c[i + 1];
                bool switching = c[t + 1] != t && c[t + 1] != i;
                for (Symbol sym = 0 ; sym < m.num_symbols() ; ++sym)
                    for (auto q2 : m.successors(c[0], sym))
                        for (auto p2 : a.successors(p, sym)) {
                            Config n = c;
                            n[0] = q2;
                            n[i + 1] = p2;
                            n[t + 1] = State(i);
                            size_t nd = d + (switching ? 1 : 0);
                            auto it = dist.find(n);
                            if (it != dist.end() && it->second <= nd)
                                continue;
                            dist[n] = nd;
                            if (dist.size() > cap)
                                throw ResourceError("switch oracle exceeded the cap of " + to_string(cap) + " configurations");
                            if (switching)
                                queue.push_back(n);
                            else
                                queue.push_front(n);
                        }
            }
        }
        return std::nullopt;
    }

    auto oracle_bcs(const Smcp & s, size_t cs, uint64_t cap) -> bool
    {
        auto d = oracle_min_switches(s, cap);
        return d && *d <= cs;
    }

    auto oracle_sm(const vector<Nfa> & bs, const Word & w, double cap_bits) -> bool
    {
        if (bs.empty())
            throw InputError("shuffle oracle needs at least one automaton");
        const size_t t = bs.size(), k = w.size();
        if (double(k) * std::log2(double(t)) > cap_bits)
            throw ResourceError("shuffle oracle search space exceeds 2^" + to_string(int(cap_bits)));

        // per automaton, the set of current states as a sorted list; a thread
        // that has read nothing may also stop with the empty word
        vector<vector<State>> sets;
        for (auto & b : bs)
            sets.push_back({ b.initial() });
        vector<char> used(t, 0);
        std::unordered_set<string> failed;

        auto key = [&] (size_t pos) {
            string k2 = to_string(pos) + "|";
            for (size_t i = 0 ; i < t ; ++i) {
                k2 += used[i] ? "u" : "n";
                for (auto p : sets[i])
                    k2 += to_string(p) + ",";
                k2 += ";";
            }
            return k2;
        };

        function<auto (size_t) -> bool> go = [&] (size_t pos) -> bool {
            if (pos == k) {
                for (size_t i = 0 ; i < t ; ++i)
                    if (used[i] && ! std::binary_search(sets[i].begin(), sets[i].end(), bs[i].final()))
                        return false;
                return true;
            }
            auto here = key(pos);
            if (failed.count(here))
                return false;
            for (size_t i = 0 ; i < t ; ++i) {
                vector<State> next;
                for (auto p : sets[i])
                    for (auto p2 : bs[i].successors(p, w[pos]))
                        next.push_back(p2);
                std::sort(next.begin(), next.end());
                next.erase(std::unique(next.begin(), next.end()), next.end());
                if (next.empty())
                    continue;
                auto saved = std::move(sets[i]);
                char saved_used = used[i];
                sets[i] = std::move(next);
                used[i] = 1;
                bool ok = go(pos + 1);
                sets[i] = std::move(saved);
                used[i] = saved_used;
                if (ok)
                    return true;
            }
            failed.insert(here);
            return false;
        };

        for (auto sym : w)
            for (auto & b : bs)
                if (sym >= b.num_symbols())
                    throw InputError("word symbol " + to_string(sym) + " is not declared in the automaton");
        return go(0);
    }

    auto oracle_sdim(const SchedGraph & g, size_t node_cap) -> Weight
    {
        const size_t n = g.num_nodes();
        if (n > node_cap)
            throw ResourceError("sdim oracle supports at most " + to_string(node_cap) + " nodes");
        if (n == 0)
            throw InputError("graph has no nodes");

        using Matrix = vector<vector<Weight>>;
        Matrix start(n, vector<Weight>(n));
        for (size_t i = 0 ; i < n ; ++i)
            for (size_t j = 0 ; j < n ; ++j)
                start[i][j] = g.weight_at(i, j);

        auto deg = [] (const Matrix & e) {
            Weight d = 0;
            for (size_t i = 0 ; i < e.size() ; ++i) {
                Weight out = 0, in = 0;
                for (size_t j = 0 ; j < e.size() ; ++j)
                    out += e[i][j], in += e[j][i];
                d = std::max({ d, out, in });
            }
            return d;
        };

        function<auto (const Matrix &) -> Weight> best = [&] (const Matrix & e) -> Weight {
            Weight here = deg(e);
            if (e.size() == 1)
                return here;
            Weight result = std::numeric_limits<Weight>::max();
            for (size_t a = 0 ; a < e.size() ; ++a)
                for (size_t b = a + 1 ; b < e.size() ; ++b) {
                    // a and b become one node, placed last
                    vector<size_t> keep;
                    for (size_t x = 0 ; x < e.size() ; ++x)
                        if (x != a && x != b)
                            keep.push_back(x);
                    size_t r = keep.size();
                    Matrix f(r + 1, vector<Weight>(r + 1, 0));
                    for (size_t x = 0 ; x < r ; ++x) {
                        for (size_t y = 0 ; y < r ; ++y)
                            f[x][y] = e[keep[x]][keep[y]];
                        f[x][r] = e[keep[x]][a] + e[keep[x]][b];
                        f[r][x] = e[a][keep[x]] + e[b][keep[x]];
                    }
                    result = std::min(result, best(f));
                }
            return std::max(here, result);
        };
        return best(start);
    }

    namespace
    {
        // memory state followed by every thread state
        using Config = vector<State>;

        // configurations after one nonempty context of thread i
        auto context_step(const Smcp & s, const set<Config> & from, size_t i, uint64_t cap) -> set<Config>
        {
            const auto & m = s.memory;
            const auto & a = s.threads[i];
            set<Config> out;
            for (auto & c : from) {
                set<std::pair<State, State>> seen;
                deque<std::pair<State, State>> queue;
                auto push_succ = [&] (State q, State p) {
                    for (Symbol sym = 0 ; sym < m.num_symbols() ; ++sym)
                        for (auto q2 : m.successors(q, sym))
                            for (auto p2 : a.successors(p, sym))
                                if (seen.insert({ q2, p2 }).second)
                                    queue.push_back({ q2, p2 });
                };
                push_succ(c[0], c[i + 1]);
                while (! queue.empty()) {
                    auto [q, p] = queue.front();
                    queue.pop_front();
                    push_succ(q, p);
                }
                for (auto [q, p] : seen) {
                    Config n = c;
                    n[0] = q;
                    n[i + 1] = p;
                    out.insert(n);
                }
                if (out.size() > cap)
                    throw ResourceError("local oracle exceeded the cap of " + to_string(cap) + " configurations");
            }
            return out;
        }

        auto start_config(const Smcp & s) -> set<Config>
        {
            Config c{ s.memory.initial() };
            for (auto & a : s.threads)
                c.push_back(a.initial());
            return { c };
        }

        auto accepts_config(const Smcp & s, const set<Config> & configs, const vector<NodeId> & owners) -> bool
        {
            vector<char> moved(s.num_threads(), 0);
            for (auto o : owners)
                moved[o - 1] = 1;
            for (auto & c : configs) {
                bool ok = c[0] == s.memory.final();
                for (size_t i = 0 ; i < s.num_threads() && ok ; ++i)
                    ok = ! moved[i] || c[i + 1] == s.threads[i].final();
                if (ok)
                    return true;
            }
            return false;
        }

        // depth-first search over owner sequences; choices(seq) lists the
        // threads (1-based) that may run next, done(seq) says whether seq is a
        // complete candidate
        auto search_owners(const Smcp & s, uint64_t cap,
                const function<auto (const vector<NodeId> &) -> vector<NodeId>> & choices,
                const function<auto (const vector<NodeId> &) -> bool> & done) -> LocalOracleResult
        {
            s.validate();
            LocalOracleResult result;
            if (s.memory.initial() == s.memory.final()) {
                result.yes = true;
                return result;
            }

            vector<NodeId> owners;
            function<auto (const set<Config> &) -> bool> go = [&] (const set<Config> & configs) -> bool {
                if (! owners.empty() && done(owners) && accepts_config(s, configs, owners))
                    return true;
                for (auto next : choices(owners)) {
                    auto after = context_step(s, configs, next - 1, cap);
                    if (after.empty())
                        continue;
                    owners.push_back(next);
                    if (go(after))
                        return true;
                    owners.pop_back();
                }
                return false;
            };
            if (go(start_config(s))) {
                result.yes = true;
                result.contexts = owners;
            }
            return result;
        }

        auto owner_graph(const vector<NodeId> & owners) -> SchedGraph
        {
            vector<NodeId> nodes(owners.begin(), owners.end());
            std::sort(nodes.begin(), nodes.end());
            nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
            SchedGraph g(nodes);
            for (size_t i = 0 ; i + 1 < owners.size() ; ++i)
                g.set_weight(owners[i], owners[i + 1], g.weight(owners[i], owners[i + 1]) + 1);
            return g;
        }
    }

    auto oracle_bcsl_sd(const Smcp & s, size_t sd, uint64_t cap) -> LocalOracleResult
    {
        const size_t t = s.num_threads();
        const size_t max_len = t * sd + 1;
        return search_owners(s, cap,
                [&] (const vector<NodeId> & owners) {
                    vector<NodeId> next;
                    if (owners.size() < max_len)
                        for (NodeId i = 1 ; i <= t ; ++i)
                            if (owners.empty() || owners.back() != i)
                                next.push_back(i);
                    return next;
                },
                [&] (const vector<NodeId> & owners) {
                    return oracle_sdim(owner_graph(owners), std::max<size_t>(t, 7)) <= sd;
                });
    }

    auto oracle_bcsl_fix(const Smcp & s, const SchedGraph & g, uint64_t cap) -> LocalOracleResult
    {
        for (auto v : g.nodes())
            if (v < 1 || v > s.num_threads())
                throw InputError("graph node " + to_string(v) + " is not a thread of the program");
        Weight total = 0;
        for (auto u : g.nodes())
            for (auto v : g.nodes())
                total += g.weight(u, v);

        return search_owners(s, cap,
                [&] (const vector<NodeId> & owners) {
                    vector<NodeId> next;
                    if (owners.empty()) {
                        next = g.nodes();
                        return next;
                    }
                    if (owners.size() > total)
                        return next;
                    for (auto v : g.nodes()) {
                        Weight used = 0;
                        for (size_t i = 0 ; i + 1 < owners.size() ; ++i)
                            used += owners[i] == owners.back() && owners[i + 1] == v;
                        if (used < g.weight(owners.back(), v))
                            next.push_back(v);
                    }
                    return next;
                },
                [&] (const vector<NodeId> & owners) {
                    return owners.size() == total + 1 && owner_graph(owners) == g;
                });
    }

    auto oracle_bcsl_rr(const Smcp & s, size_t cs, uint64_t cap) -> LocalOracleResult
    {
        if (cs < 1)
            throw InputError("round robin needs cs >= 1");
        const size_t t = s.num_threads();
        const size_t rounds = t == 1 ? 1 : cs;
        return search_owners(s, cap,
                [&] (const vector<NodeId> & owners) {
                    vector<NodeId> next;
                    if (owners.size() < rounds * t)
                        next.push_back(owners.size() % t + 1);
                    return next;
                },
                [&] (const vector<NodeId> & owners) { return owners.size() == rounds * t; });
    }

    auto oracle_bcsl_any(const Smcp & s, size_t cs, uint64_t cap) -> LocalOracleResult
    {
        const size_t t = s.num_threads();
        return search_owners(s, cap,
                [&] (const vector<NodeId> & owners) {
                    vector<NodeId> next;
                    for (NodeId i = 1 ; i <= t ; ++i)
                        if ((owners.empty() || owners.back() != i)
                                && size_t(std::count(owners.begin(), owners.end(), i)) < cs)
                            next.push_back(i);
                    return next;
                },
                [] (const vector<NodeId> &) { return true; });
    }

    auto oracle_interface_member(const Nfa & m, const Nfa & a, const InterfaceSeq & seq) -> bool
    {
        set<State> current{ a.initial() };
        for (auto & pr : seq) {
            set<State> next;
            for (auto p : current) {
                set<std::pair<State, State>> seen{ { pr.first, p } };
                deque<std::pair<State, State>> queue{ { pr.first, p } };
                while (! queue.empty()) {
                    auto [q, x] = queue.front();
                    queue.pop_front();
                    if (q == pr.second)
                        next.insert(x);
                    for (Symbol sym = 0 ; sym < m.num_symbols() ; ++sym)
                        for (auto q2 : m.successors(q, sym))
                            for (auto x2 : a.successors(x, sym))
                                if (seen.insert({ q2, x2 }).second)
                                    queue.push_back({ q2, x2 });
                }
            }
            current = std::move(next);
        }
        return current.count(a.final());
    }

    auto check_witness(const Smcp & s, const TaggedWord & u, size_t cs) -> bool
    {
        Word w;
        for (auto & x : u) {
            if (x.thread >= s.num_threads())
                return false;
            w.push_back(x.symbol);
        }
        if (! accepts(s.memory, w))
            return false;
        for (size_t i = 0 ; i < s.num_threads() ; ++i) {
            Word proj;
            for (auto & x : u)
                if (x.thread == i)
                    proj.push_back(x.symbol);
            if (! proj.empty() && ! accepts(s.threads[i], proj))
                return false;
        }
        size_t contexts = 0;
        for (size_t i = 0 ; i < u.size() ; ++i)
            contexts += i == 0 || u[i].thread != u[i - 1].thread;
        return contexts == 0 || contexts - 1 <= cs;
    }
}

namespace bcs
{
    auto brute_subgraph_iso(const SimpleGraph & g, const SimpleGraph & h) -> bool
    {
        size_t ng = g.num_vertices(), nh = h.num_vertices();
        if (ng > nh)
            return false;
        vector<vector<char>> adjacent(nh, vector<char>(nh, 0));
        for (auto & [a, b] : h.edges)
            adjacent[a][b] = adjacent[b][a] = 1;

        vector<size_t> image(nh);
        for (size_t i = 0 ; i < nh ; ++i)
            image[i] = i;
        // every injective map is a prefix of some permutation
        do {
            bool ok = std::all_of(g.edges.begin(), g.edges.end(), [&] (auto & e) {
                    return adjacent[image[e.first]][image[e.second]]; });
            if (ok)
                return true;
        } while (std::next_permutation(image.begin(), image.end()));
        return false;
    }

    auto brute_set_cover(const SetFamily & family, size_t t) -> bool
    {
        set<string> universe(family.universe.begin(), family.universe.end());
        if (universe.empty())
            for (auto & s : family.sets)
                universe.insert(s.begin(), s.end());

        size_t n = family.sets.size();
        if (t > n)
            return false;
        for (uint64_t mask = 0 ; mask < (uint64_t(1) << n) ; ++mask) {
            if (size_t(std::popcount(mask)) != t)
                continue;
            set<string> covered;
            for (size_t i = 0 ; i < n ; ++i)
                if (mask >> i & 1)
                    covered.insert(family.sets[i].begin(), family.sets[i].end());
            if (std::includes(covered.begin(), covered.end(), universe.begin(), universe.end()))
                return true;
        }
        return false;
    }

    auto brute_satisfiable(const CnfFormula & f) -> bool
    {
        for (uint64_t a = 0 ; a < (uint64_t(1) << f.num_vars) ; ++a) {
            bool ok = std::all_of(f.clauses.begin(), f.clauses.end(), [&] (auto & clause) {
                    return std::any_of(clause.begin(), clause.end(), [&] (int lit) {
                            bool value = a >> (std::abs(lit) - 1) & 1;
                            return lit > 0 ? value : ! value; }); });
            if (ok)
                return true;
        }
        return false;
    }

    auto brute_row_clique(const MatrixGraph & g) -> bool
    {
        size_t k = g.k;
        set<std::pair<size_t, size_t>> adjacent;
        for (auto & [a, b] : g.edges) {
            adjacent.emplace(a.first * k + a.second, b.first * k + b.second);
            adjacent.emplace(b.first * k + b.second, a.first * k + a.second);
        }
        vector<size_t> column(k, 0);
        while (true) {
            bool ok = true;
            for (size_t r = 0 ; r < k && ok ; ++r)
                for (size_t r2 = r + 1 ; r2 < k && ok ; ++r2)
                    ok = adjacent.contains({ r * k + column[r], r2 * k + column[r2] });
            if (ok)
                return true;
            size_t r = 0;
            while (r < k && ++column[r] == k)
                column[r++] = 0;
            if (r == k)
                return false;
        }
    }

    auto brute_bounded_intersection(const vector<Nfa> & automata, size_t num_symbols, size_t m) -> bool
    {
        Word w(m, 0);
        while (true) {
            if (std::all_of(automata.begin(), automata.end(), [&] (const Nfa & b) { return accepts(b, w); }))
                return true;
            size_t i = 0;
            while (i < m && ++w[i] == num_symbols)
                w[i++] = 0;
            if (i == m)
                return false;
        }
    }
}
