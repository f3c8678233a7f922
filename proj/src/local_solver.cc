/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <bcs/local_solver.hh>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <string>

using std::function;
using std::map;
using std::set;
using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace bcs
{
    namespace
    {
        // calls visit(rho, from_tau) for every interleaving; the flags pin the
        // first pair of sigma to the front and its last pair to the back
        auto interleavings(const InterfaceSeq & sigma, const InterfaceSeq & tau,
                const function<auto (const InterfaceSeq &, const vector<char> &) -> void> & visit,
                bool sigma_first = false, bool sigma_last = false,
                bool tau_first = false, bool tau_last = false) -> void
        {
            InterfaceSeq rho;
            vector<char> origin;
            function<auto (size_t, size_t) -> void> go = [&] (size_t a, size_t b) {
                if (a == sigma.size() && b == tau.size()) {
                    visit(rho, origin);
                    return;
                }
                bool at_front = rho.empty();
                if (a < sigma.size() && ! (at_front && tau_first)
                        && ! (sigma_last && a + 1 == sigma.size() && b < tau.size())) {
                    rho.push_back(sigma[a]);
                    origin.push_back(0);
                    go(a + 1, b);
                    rho.pop_back();
                    origin.pop_back();
                }
                if (b < tau.size() && ! (at_front && sigma_first)
                        && ! (tau_last && b + 1 == tau.size() && a < sigma.size())) {
                    rho.push_back(tau[b]);
                    origin.push_back(1);
                    go(a, b + 1);
                    rho.pop_back();
                    origin.pop_back();
                }
            };
            go(0, 0);
        }

        // summaries of rho of length <= k; with finest set, only those of
        // length exactly min(k, |rho|), since every coarser one is a summary
        // of one of these
        auto summaries(const InterfaceSeq & rho, size_t k, bool finest, SeqSet & out) -> void
        {
            if (rho.empty())
                return;
            const size_t target = std::min(k, rho.size());
            InterfaceSeq result;
            function<auto (size_t, StatePair) -> void> go = [&] (size_t next, StatePair open) {
                if (result.size() + 1 > k)
                    return;
                if (finest && result.size() + 1 + (rho.size() - next) < target)
                    return;
                if (next == rho.size()) {
                    result.push_back(open);
                    out.insert(result);
                    result.pop_back();
                    return;
                }
                if (open.second == rho[next].first)
                    go(next + 1, { open.first, rho[next].second });
                result.push_back(open);
                go(next + 1, rho[next]);
                result.pop_back();
            };
            go(1, rho[0]);
        }
    }

    auto closure(const InterfaceSeq & rho) -> SeqSet
    {
        SeqSet out;
        if (rho.empty())
            out.insert(rho);
        summaries(rho, rho.size(), false, out);
        return out;
    }

    auto merge(const InterfaceSeq & sigma, const InterfaceSeq & tau, size_t k) -> SeqSet
    {
        if (k < 1)
            throw InputError("merge needs a length bound of at least 1");
        SeqSet out;
        interleavings(sigma, tau, [&] (const InterfaceSeq & rho, const vector<char> &) {
                summaries(rho, k, false, out);
            });
        return out;
    }

    auto merge_gen(const GenIfaceSeq & a, const GenIfaceSeq & b, size_t k) -> set<GenIfaceSeq>
    {
        set<GenIfaceSeq> out;
        if (a.threads & b.threads)
            return out;
        for (auto & seq : merge(a.seq, b.seq, k))
            out.insert({ seq, a.threads | b.threads });
        return out;
    }

    auto directed_product(const InterfaceSeq & sigma, const InterfaceSeq & tau, size_t i, size_t j) -> SeqSet
    {
        SeqSet out;
        interleavings(sigma, tau, [&] (const InterfaceSeq & rho, const vector<char> & origin) {
                InterfaceSeq result;
                function<auto (size_t, StatePair, size_t, size_t) -> void> go =
                    [&] (size_t next, StatePair open, size_t outs, size_t ins) {
                    if (outs > i || ins > j)
                        return;
                    if (next == rho.size()) {
                        if (outs == i && ins == j) {
                            result.push_back(open);
                            out.insert(result);
                            result.pop_back();
                        }
                        return;
                    }
                    if (origin[next - 1] != origin[next] && open.second == rho[next].first) {
                        bool is_out = origin[next - 1] == 0;
                        go(next + 1, { open.first, rho[next].second }, outs + is_out, ins + ! is_out);
                    }
                    result.push_back(open);
                    go(next + 1, rho[next], outs, ins);
                    result.pop_back();
                };
                if (! rho.empty())
                    go(1, rho[0], 0, 0);
            });
        return out;
    }

    auto accepted_sequences(const Nfa & b, size_t num_memory_states, size_t max_len) -> SeqSet
    {
        SeqSet out;
        InterfaceSeq seq;
        function<auto (const vector<State> &) -> void> go = [&] (const vector<State> & current) {
            if (seq.size() == max_len)
                return;
            map<Symbol, vector<State>> next;
            for (auto p : current)
                for (auto & tr : b.transitions_from(p))
                    next[tr.symbol].push_back(tr.target);
            for (auto & [sym, targets] : next) {
                std::sort(targets.begin(), targets.end());
                targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
                seq.push_back(symbol_pair(sym, num_memory_states));
                if (std::binary_search(targets.begin(), targets.end(), b.final()))
                    out.insert(seq);
                go(targets);
                seq.pop_back();
            }
        };
        go({ b.initial() });
        return out;
    }

    namespace
    {
        struct Element
        {
            InterfaceSeq seq;
            uint64_t threads = 0;
            bool starts = false, ends = false;

            auto operator<=> (const Element &) const = default;
        };

        auto check_threads(const Smcp & s) -> void
        {
            s.validate();
            if (s.num_threads() > 64)
                throw ResourceError("local solvers support at most 64 threads");
        }

        // least fixed point of pairwise merges; with flags, elements know
        // whether they hold the first or last context of the word
        // with left_deep, clusters only grow by one thread of higher index at
        // a time, which is complete when the cluster bound never binds
        auto fixed_point(const Smcp & s, size_t seed_len, size_t bound, bool flags, bool left_deep,
                const LocalOptions & options) -> bool
        {
            const auto & m = s.memory;
            const size_t mq = m.num_states();
            // a cluster never has more runs than its threads have contexts
            auto limit = [&] (const Element & e) {
                return std::min(bound + (flags && e.starts && e.ends ? 1 : 0),
                        size_t(std::popcount(e.threads)) * (seed_len + (flags ? 1 : 0)));
            };

            set<Element> known;
            vector<Element> all, frontier;
            // elements stand for all their summaries, so a chain from the
            // initial to the final memory state is a hit
            auto add = [&] (Element e) -> bool {
                if (is_valid(e.seq, m))
                    return true;
                if (known.insert(e).second) {
                    if (known.size() > options.cap)
                        throw ResourceError("local solver lattice exceeded the cap of " + to_string(options.cap));
                    frontier.push_back(std::move(e));
                }
                return false;
            };

            for (size_t i = 0 ; i < s.num_threads() ; ++i) {
                auto b = interface_automaton(m, s.threads[i], true);
                for (auto & seq : accepted_sequences(b, mq, seed_len + (flags ? 1 : 0)))
                    for (int st = 0 ; st <= (flags ? 1 : 0) ; ++st)
                        for (int en = 0 ; en <= (flags ? 1 : 0) ; ++en) {
                            Element e{ seq, uint64_t{ 1 } << i, bool(st), bool(en) };
                            if (st && seq.front().first != m.initial())
                                continue;
                            if (en && seq.back().second != m.final())
                                continue;
                            if (seq.size() > std::min(seed_len, bound) + (st && en ? 1 : 0))
                                continue;
                            if (add(e))
                                return true;
                        }
            }

            const vector<Element> seeds = frontier;
            while (! frontier.empty()) {
                auto fresh = std::move(frontier);
                frontier.clear();
                all.insert(all.end(), fresh.begin(), fresh.end());
                const auto & partners = left_deep ? seeds : all;
                for (auto & x : fresh)
                    for (size_t y = 0 ; y < partners.size() ; ++y) {
                        const Element & a = x, & b = partners[y];
                        if ((a.threads & b.threads) || (a.starts && b.starts) || (a.ends && b.ends))
                            continue;
                        if (left_deep && b.threads < a.threads)
                            continue;
                        Element proto{ {}, a.threads | b.threads, a.starts || b.starts, a.ends || b.ends };
                        SeqSet merged;
                        interleavings(a.seq, b.seq, [&] (const InterfaceSeq & rho, const vector<char> &) {
                                summaries(rho, limit(proto), true, merged);
                            }, a.starts, a.ends, b.starts, b.ends);
                        for (auto & seq : merged) {
                            proto.seq = seq;
                            if (add(proto))
                                return true;
                        }
                    }
            }
            return false;
        }
    }

    auto solve_bcsl_sd(const Smcp & s, size_t sd, const LocalOptions & options) -> bool
    {
        check_threads(s);
        if (s.memory.initial() == s.memory.final())
            return true;
        return fixed_point(s, sd, sd, true, false, options);
    }

    auto solve_bcsl_any(const Smcp & s, size_t cs, const LocalOptions & options) -> bool
    {
        check_threads(s);
        if (s.memory.initial() == s.memory.final())
            return true;
        if (cs == 0)
            return false;
        return fixed_point(s, cs, s.num_threads() * cs, false, true, options);
    }

    namespace
    {
        struct Run
        {
            State q, q2;
            NodeId first_thread, last_thread;

            auto operator<=> (const Run &) const = default;
        };

        using RunSeq = vector<Run>;

        struct Cluster
        {
            set<RunSeq> runs;
            vector<NodeId> members;
        };

        auto fix_with_designation(const Smcp & s, const SchedGraph & g, const ContractionProcess & p,
                NodeId v0, NodeId vf, const LocalOptions & options) -> bool
        {
            const auto & m = s.memory;
            const size_t mq = m.num_states();
            size_t total = 0;

            map<NodeId, Cluster> live;
            for (auto v : g.nodes()) {
                size_t contexts = node_degree(g, v) + (v == v0 && v == vf ? 1 : 0);
                if (contexts == 0)
                    return false;
                auto b = interface_automaton(m, s.threads[v - 1], true);
                Cluster c;
                c.members = { v };
                for (auto & seq : accepted_sequences(b, mq, contexts)) {
                    if (seq.size() != contexts)
                        continue;
                    if (v == v0 && seq.front().first != m.initial())
                        continue;
                    if (v == vf && seq.back().second != m.final())
                        continue;
                    RunSeq r;
                    for (auto & pr : seq)
                        r.push_back({ pr.first, pr.second, v, v });
                    c.runs.insert(r);
                }
                if (c.runs.empty())
                    return false;
                total += c.runs.size();
                live.emplace(v, std::move(c));
            }

            for (auto & step : p.steps) {
                auto & c1 = live.at(step.first);
                auto & c2 = live.at(step.second);

                // required switches between the two clusters, per thread pair
                map<std::pair<NodeId, NodeId>, Weight> need;
                Weight need_total = 0;
                for (auto u : c1.members)
                    for (auto v : c2.members) {
                        if (auto w = g.weight(u, v))
                            need[{ u, v }] = w, need_total += w;
                        if (auto w = g.weight(v, u))
                            need[{ v, u }] = w, need_total += w;
                    }

                Cluster merged;
                merged.members = c1.members;
                merged.members.insert(merged.members.end(), c2.members.begin(), c2.members.end());

                for (auto & a : c1.runs)
                    for (auto & b : c2.runs) {
                        map<std::pair<NodeId, NodeId>, Weight> have;
                        RunSeq result;
                        function<auto (size_t, size_t, int, Run, Weight) -> void> go =
                            [&] (size_t ia, size_t ib, int last_origin, Run open, Weight joined) {
                            if (ia == a.size() && ib == b.size()) {
                                if (joined == need_total) {
                                    result.push_back(open);
                                    merged.runs.insert(result);
                                    result.pop_back();
                                }
                                return;
                            }
                            for (int origin = 0 ; origin < 2 ; ++origin) {
                                const RunSeq & src = origin == 0 ? a : b;
                                size_t idx = origin == 0 ? ia : ib;
                                if (idx == src.size())
                                    continue;
                                const Run & next = src[idx];
                                size_t na = ia + (origin == 0), nb = ib + (origin == 1);
                                if (origin != last_origin && open.q2 == next.q) {
                                    auto key = std::pair{ open.last_thread, next.first_thread };
                                    auto it = need.find(key);
                                    if (it != need.end() && have[key] < it->second) {
                                        ++have[key];
                                        go(na, nb, origin, { open.q, next.q2, open.first_thread, next.last_thread }, joined + 1);
                                        --have[key];
                                    }
                                }
                                result.push_back(open);
                                go(na, nb, origin, next, joined);
                                result.pop_back();
                            }
                        };

                        // the first run opens the block
                        for (int origin = 0 ; origin < 2 ; ++origin) {
                            const RunSeq & src = origin == 0 ? a : b;
                            if (src.empty())
                                continue;
                            go(origin == 0 ? 1 : 0, origin == 1 ? 1 : 0, origin, src[0], 0);
                        }
                    }

                total += merged.runs.size();
                if (total > options.cap)
                    throw ResourceError("local solver sets exceeded the cap of " + to_string(options.cap));
                if (merged.runs.empty())
                    return false;
                live.erase(step.first);
                live.erase(step.second);
                live.emplace(step.fresh, std::move(merged));
            }

            auto & root = live.begin()->second;
            for (auto & r : root.runs)
                if (r.size() == 1 && r[0].q == m.initial() && r[0].q2 == m.final())
                    return true;
            return false;
        }
    }

    auto solve_bcsl_fix(const Smcp & s, const SchedGraph & g, const ContractionProcess & p, const LocalOptions & options) -> bool
    {
        s.validate();
        for (auto v : g.nodes())
            if (v < 1 || v > s.num_threads())
                throw InputError("graph node " + to_string(v) + " is not a thread of the program");
        if (g.num_nodes() == 0)
            throw InputError("scheduling graph has no nodes");
        std::ignore = process_degree(g, p);

        if (s.memory.initial() == s.memory.final())
            return true;

        vector<NodeId> starts, ends;
        for (auto v : g.nodes()) {
            auto out = g.out_weight(v), in = g.in_weight(v);
            if (out == in + 1)
                starts.push_back(v);
            else if (in == out + 1)
                ends.push_back(v);
            else if (in != out)
                return false;
        }

        if (starts.size() == 1 && ends.size() == 1)
            return fix_with_designation(s, g, p, starts[0], ends[0], options);
        if (! starts.empty() || ! ends.empty())
            return false;
        for (auto v : g.nodes())
            if (fix_with_designation(s, g, p, v, v, options))
                return true;
        return false;
    }

    auto round_robin_graph(size_t t, size_t cs) -> SchedGraph
    {
        if (t < 1 || cs < 1)
            throw InputError("round robin needs t >= 1 and cs >= 1");
        vector<NodeId> nodes;
        for (size_t i = 1 ; i <= t ; ++i)
            nodes.push_back(i);
        SchedGraph g(nodes);
        if (t == 1)
            return g;
        for (size_t i = 1 ; i < t ; ++i)
            g.set_weight(i, i + 1, cs);
        g.set_weight(t, 1, cs - 1);
        return g;
    }

    auto chain_process(size_t t) -> ContractionProcess
    {
        ContractionProcess p;
        if (t < 2)
            return p;
        p.steps.push_back({ 1, 2, t + 1 });
        for (size_t i = 3 ; i <= t ; ++i)
            p.steps.push_back({ t + i - 2, i, t + i - 1 });
        return p;
    }

    auto solve_bcsl_rr(const Smcp & s, size_t cs, const LocalOptions & options) -> bool
    {
        s.validate();
        return solve_bcsl_fix(s, round_robin_graph(s.num_threads(), cs), chain_process(s.num_threads()), options);
    }
}
