/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <bcs/generators.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <tuple>

using std::map;
using std::pair;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace bcs
{
    namespace
    {
        // Collects named states and transitions; the state count is only
        // known once everything has been added.
        class AutomatonBuilder
        {
            private:
                map<string, State> _ids;
                vector<string> _names;
                vector<Transition> _transitions;

            public:
                auto state(const string & name) -> State
                {
                    auto [it, fresh] = _ids.emplace(name, State(_names.size()));
                    if (fresh)
                        _names.push_back(name);
                    return it->second;
                }

                auto add(State from, Symbol a, State to) -> void
                {
                    _transitions.push_back(Transition{ from, a, to });
                }

                auto build(size_t num_symbols, State initial, State final) -> Nfa
                {
                    Nfa result(_names, num_symbols, initial, final);
                    for (auto & t : _transitions)
                        result.add_transition(t.source, t.symbol, t.target);
                    return result;
                }
        };

        auto vertex_degrees(const SimpleGraph & g) -> vector<size_t>
        {
            vector<size_t> result(g.num_vertices(), 0);
            for (auto & [u, v] : g.edges) {
                ++result[u];
                ++result[v];
            }
            return result;
        }
    }

    auto SimpleGraph::validate() const -> void
    {
        std::set<pair<size_t, size_t>> seen;
        for (auto & [u, v] : edges) {
            if (u >= names.size() || v >= names.size())
                throw InputError("edge mentions an unknown vertex");
            if (u == v)
                throw InputError("graph has a loop at vertex " + names[u]);
            if (! seen.emplace(std::min(u, v), std::max(u, v)).second)
                throw InputError("graph repeats the edge " + names[u] + " " + names[v]);
        }
    }

    auto gen_sgi(const SimpleGraph & g, const SimpleGraph & h) -> GeneratedBcs
    {
        g.validate();
        h.validate();
        if (g.edges.empty())
            throw InputError("pattern graph has no edges");

        auto deg = vertex_degrees(g);
        for (size_t v = 0 ; v < g.num_vertices() ; ++v)
            if (deg[v] == 0)
                throw InputError("pattern graph has an isolated vertex " + g.names[v]);

        size_t nh = h.num_vertices();
        auto sym = [&] (size_t v, size_t w) { return Symbol(v * nh + w); };

        GeneratedBcs result;
        for (size_t v = 0 ; v < g.num_vertices() ; ++v)
            for (size_t w = 0 ; w < nh ; ++w)
                result.program.alphabet.push_back(g.names[v] + "/" + h.names[w]);
        size_t num_symbols = result.program.alphabet.size();
        size_t total = 2 * g.edges.size();

        // Memory: blocks (v, w)^deg(v), images strictly increasing, total length 2|E(g)|.
        // A state is (v, w, letters of this block, letters so far).
        using Key = std::tuple<size_t, size_t, size_t, size_t>;
        AutomatonBuilder memory;
        State init = memory.state("init");
        State final = memory.state("done");
        map<Key, State> ids;
        std::queue<Key> todo;
        auto enter = [&] (State from, const Key & key) {
            auto [v, w, c, n] = key;
            if (c == deg[v] && n == total) {
                memory.add(from, sym(v, w), final);
                return;
            }
            auto it = ids.find(key);
            if (it == ids.end()) {
                State s = memory.state("b" + to_string(v) + "_" + to_string(w) + "_" + to_string(c) + "_" + to_string(n));
                it = ids.emplace(key, s).first;
                todo.push(key);
            }
            memory.add(from, sym(v, w), it->second);
        };

        for (size_t v = 0 ; v < g.num_vertices() ; ++v)
            for (size_t w = 0 ; w < nh ; ++w)
                enter(init, Key{ v, w, 1, 1 });
        while (! todo.empty()) {
            auto key = todo.front();
            todo.pop();
            auto [v, w, c, n] = key;
            State from = ids.at(key);
            if (c < deg[v])
                enter(from, Key{ v, w, c + 1, n + 1 });
            else if (n < total)
                for (size_t v2 = 0 ; v2 < g.num_vertices() ; ++v2)
                    if (v2 != v)
                        for (size_t w2 = w + 1 ; w2 < nh ; ++w2)
                            enter(from, Key{ v2, w2, 1, n + 1 });
        }
        result.program.memory = memory.build(num_symbols, init, final);

        // One thread per pattern edge, reading its endpoint images in the order of h.
        for (auto & [s, t] : g.edges) {
            AutomatonBuilder thread;
            State p0 = thread.state("p0");
            State pf = thread.state("pf");
            for (auto & [a, b] : h.edges)
                for (auto [ws, wt] : { pair{ a, b }, pair{ b, a } }) {
                    if (ws < wt) {
                        State mid = thread.state("s" + to_string(ws));
                        thread.add(p0, sym(s, ws), mid);
                        thread.add(mid, sym(t, wt), pf);
                    }
                    else {
                        State mid = thread.state("t" + to_string(wt));
                        thread.add(p0, sym(t, wt), mid);
                        thread.add(mid, sym(s, ws), pf);
                    }
                }
            result.program.threads.push_back(thread.build(num_symbols, p0, pf));
        }

        result.cs = total;
        return result;
    }

    auto gen_setcov(const SetFamily & family, size_t t) -> SmInstance
    {
        if (family.sets.empty())
            throw InputError("set family is empty");

        SmInstance result;
        map<string, Symbol> ids;
        auto add_symbol = [&] (const string & name) {
            if (ids.emplace(name, Symbol(result.alphabet.size())).second)
                result.alphabet.push_back(name);
        };

        if (family.universe.empty()) {
            for (auto & set : family.sets)
                for (auto & u : set)
                    add_symbol(u);
        }
        else {
            for (auto & u : family.universe) {
                if (ids.contains(u))
                    throw InputError("universe lists " + u + " twice");
                add_symbol(u);
            }
            for (auto & set : family.sets)
                for (auto & u : set)
                    if (! ids.contains(u))
                        throw InputError("set element " + u + " is not in the universe");
        }

        size_t universe_size = result.alphabet.size();
        for (size_t j = 1 ; j <= t ; ++j) {
            string name = "slot" + to_string(j);
            if (ids.contains(name))
                throw InputError("universe element " + name + " clashes with a slot letter");
            add_symbol(name);
        }

        for (auto & set : family.sets) {
            Nfa b(2, result.alphabet.size(), 0, 1);
            for (auto & u : set)
                b.add_transition(0, ids.at(u), 0);
            for (size_t j = 0 ; j < t ; ++j)
                b.add_transition(0, Symbol(universe_size + j), 1);
            result.automata.push_back(std::move(b));
        }

        for (size_t a = 0 ; a < result.alphabet.size() ; ++a)
            result.word.push_back(Symbol(a));
        return result;
    }

    auto gen_3sat_cc(const vector<CnfFormula> & formulas) -> GeneratedBcs
    {
        if (formulas.empty())
            throw InputError("no formulas given");
        size_t k = formulas.front().num_vars, l = formulas.front().clauses.size();
        if (k == 0)
            throw InputError("formulas have no variables");
        for (size_t i = 0 ; i < formulas.size() ; ++i) {
            auto & f = formulas[i];
            if (f.num_vars != k || f.clauses.size() != l)
                throw InputError("formula " + to_string(i + 1) + " differs in its number of variables or clauses");
            for (auto & clause : f.clauses) {
                if (clause.empty())
                    throw InputError("formula " + to_string(i + 1) + " has an empty clause");
                for (int lit : clause)
                    if (lit == 0 || size_t(lit < 0 ? -lit : lit) > k)
                        throw InputError("formula " + to_string(i + 1) + " has literal " + to_string(lit) + " out of range");
            }
        }

        // Per variable x: (x, ?0), (x, !0), (x, ?1), (x, !1); then the separator.
        auto query = [] (size_t x, bool value) { return Symbol(4 * x + (value ? 2 : 0)); };
        auto answer = [] (size_t x, bool value) { return Symbol(4 * x + (value ? 3 : 1)); };
        Symbol sep = Symbol(4 * k);

        GeneratedBcs result;
        for (size_t x = 0 ; x < k ; ++x)
            for (string s : { "?0", "!0", "?1", "!1" })
                result.program.alphabet.push_back("x" + to_string(x + 1) + s);
        result.program.alphabet.push_back("sep");
        size_t num_symbols = result.program.alphabet.size();

        AutomatonBuilder memory;
        State q_init = memory.state("init");
        State q_f = memory.state("ready");
        memory.add(q_init, sep, q_f);
        for (size_t x = 0 ; x < k ; ++x)
            for (bool v : { false, true }) {
                State asked = memory.state("asked" + to_string(x + 1) + "_" + (v ? "1" : "0"));
                memory.add(q_f, query(x, v), asked);
                memory.add(asked, answer(x, v), q_f);
            }
        result.program.memory = memory.build(num_symbols, q_init, q_f);

        // Variable threads answer every query with one fixed value.
        for (size_t x = 0 ; x < k ; ++x) {
            Nfa a(vector<string>{ "p0", "zero", "one", "pf" }, num_symbols, 0, 3);
            for (bool v : { false, true }) {
                State mid = v ? 2 : 1;
                a.add_transition(0, answer(x, v), mid);
                a.add_transition(mid, answer(x, v), mid);
                a.add_transition(0, answer(x, v), 3);
                a.add_transition(mid, answer(x, v), 3);
            }
            result.program.threads.push_back(std::move(a));
        }

        // The chooser picks a formula and asks for one true literal per clause.
        AutomatonBuilder chooser;
        State p = chooser.state("p");
        State pf = chooser.state("pf");
        if (l == 0)
            chooser.add(p, sep, pf);
        else {
            State p0 = chooser.state("p0");
            chooser.add(p, sep, p0);
            for (size_t j = 0 ; j < formulas.size() ; ++j) {
                State prev = p0;
                for (size_t c = 0 ; c < l ; ++c) {
                    State next = (c + 1 == l) ? pf : chooser.state("f" + to_string(j + 1) + "_" + to_string(c + 1));
                    for (int lit : formulas[j].clauses[c])
                        chooser.add(prev, query(size_t(lit < 0 ? -lit : lit) - 1, lit > 0), next);
                    prev = next;
                }
            }
        }
        result.program.threads.push_back(chooser.build(num_symbols, p, pf));

        result.cs = 2 * l;
        return result;
    }

    auto gen_kkclique(const MatrixGraph & g) -> GeneratedBcs
    {
        size_t k = g.k;
        if (k == 0)
            throw InputError("matrix graph needs k >= 1");

        vector<char> adjacent(k * k * k * k, 0);
        auto vertex = [&] (size_t r, size_t c) { return r * k + c; };
        for (auto & [a, b] : g.edges) {
            if (a.first >= k || a.second >= k || b.first >= k || b.second >= k)
                throw InputError("edge leaves the " + to_string(k) + " x " + to_string(k) + " matrix");
            adjacent[vertex(a.first, a.second) * k * k + vertex(b.first, b.second)] = 1;
            adjacent[vertex(b.first, b.second) * k * k + vertex(a.first, a.second)] = 1;
        }
        auto edge = [&] (size_t r1, size_t c1, size_t r2, size_t c2) {
            return adjacent[vertex(r1, c1) * k * k + vertex(r2, c2)] != 0;
        };

        // Letter (v_rc, i) is read by thread i; (sep, i) is a trivial context of thread i.
        auto letter = [&] (size_t r, size_t c, size_t i) { return Symbol(vertex(r, c) * k + i); };
        auto sep = [&] (size_t i) { return Symbol(k * k * k + i); };

        GeneratedBcs result;
        for (size_t r = 0 ; r < k ; ++r)
            for (size_t c = 0 ; c < k ; ++c)
                for (size_t i = 0 ; i < k ; ++i)
                    result.program.alphabet.push_back("r" + to_string(r + 1) + "c" + to_string(c + 1) + ":" + to_string(i + 1));
        for (size_t i = 0 ; i < k ; ++i)
            result.program.alphabet.push_back("sep:" + to_string(i + 1));
        size_t num_symbols = result.program.alphabet.size();

        // Memory, 1-based as in the construction: guess phase q_1 .. q_{k+1},
        // then verification rounds i = 1 .. k - 1 over states (i, i', j) with
        // j = 0 standing for "nothing remembered".
        AutomatonBuilder memory;
        auto guess = [&] (size_t n) { return memory.state("g" + to_string(n)); };
        std::function<State (size_t, size_t, size_t)> round_state = [&] (size_t i, size_t i2, size_t j) -> State {
            if (i2 == 1 && j == 0)
                return i == 1 ? guess(k + 1) : round_state(i - 1, k + 1, 0);
            return memory.state("v" + to_string(i) + "_" + to_string(i2) + "_" + to_string(j));
        };

        State init = guess(1);
        for (size_t r = 1 ; r <= k ; ++r)
            for (size_t c = 0 ; c < k ; ++c)
                memory.add(guess(r), letter(r - 1, c, r - 1), guess(r + 1));

        for (size_t i = 1 ; i + 1 <= k ; ++i) {
            for (size_t i2 = 1 ; i2 < i ; ++i2)
                memory.add(round_state(i, i2, 0), sep(i2 - 1), round_state(i, i2 + 1, 0));
            for (size_t j = 1 ; j <= k ; ++j) {
                memory.add(round_state(i, i, 0), letter(i - 1, j - 1, i - 1), round_state(i, i + 1, j));
                for (size_t i2 = i + 1 ; i2 < k ; ++i2)
                    memory.add(round_state(i, i2, j), letter(i - 1, j - 1, i2 - 1), round_state(i, i2 + 1, j));
                memory.add(round_state(i, k, j), letter(i - 1, j - 1, k - 1), round_state(i, k + 1, 0));
            }
        }
        State final = k == 1 ? guess(2) : round_state(k - 1, k + 1, 0);
        result.program.memory = memory.build(num_symbols, init, final);

        // Row thread i guesses a column j, then only accepts letters of
        // rows above it that are adjacent to v_ij, its own letter, and sep.
        for (size_t i = 0 ; i < k ; ++i) {
            AutomatonBuilder row;
            State q0 = row.state("q0");
            State qf = row.state("qf");
            for (size_t j = 0 ; j < k ; ++j) {
                State qj = row.state("q" + to_string(j + 1));
                auto add = [&] (State from, Symbol a) {
                    row.add(from, a, qj);
                    row.add(from, a, qf);
                };
                add(q0, letter(i, j, i));
                add(qj, letter(i, j, i));
                add(qj, sep(i));
                for (size_t r = 0 ; r < i ; ++r)
                    for (size_t c = 0 ; c < k ; ++c)
                        if (edge(i, j, r, c))
                            add(qj, letter(r, c, i));
            }
            result.program.threads.push_back(row.build(num_symbols, q0, qf));
        }

        result.cs = k;
        return result;
    }

    auto gen_bdfai(const vector<string> & alphabet, const vector<Nfa> & automata, size_t m) -> GeneratedBcs
    {
        if (automata.empty())
            throw InputError("no automata given");
        if (m == 0)
            throw InputError("word length must be at least 1");
        for (auto & b : automata)
            if (b.num_symbols() != alphabet.size())
                throw InputError("automaton alphabet does not match");

        size_t n = automata.size(), gamma = alphabet.size();
        auto tagged = [&] (Symbol a, size_t i) { return Symbol(a * n + i); };

        GeneratedBcs result;
        for (auto & a : alphabet)
            for (size_t i = 0 ; i < n ; ++i)
                result.program.alphabet.push_back(a + ":" + to_string(i + 1));
        size_t num_symbols = result.program.alphabet.size();

        // Block r spells (a, 1) ... (a, n) for one letter a.
        AutomatonBuilder memory;
        auto block = [&] (size_t r) { return memory.state("b" + to_string(r)); };
        for (size_t r = 0 ; r < m ; ++r)
            for (Symbol a = 0 ; a < gamma ; ++a) {
                State prev = block(r);
                for (size_t i = 0 ; i < n ; ++i) {
                    State next = (i + 1 == n) ? block(r + 1)
                        : memory.state("b" + to_string(r) + "_" + alphabet[a] + "_" + to_string(i + 1));
                    memory.add(prev, tagged(a, i), next);
                    prev = next;
                }
            }
        result.program.memory = memory.build(num_symbols, block(0), block(m));

        for (size_t i = 0 ; i < n ; ++i) {
            auto & b = automata[i];
            Nfa a(b.state_names(), num_symbols, b.initial(), b.final());
            for (auto & t : b.transitions())
                a.add_transition(t.source, tagged(t.symbol, i), t.target);
            result.program.threads.push_back(std::move(a));
        }

        result.cs = m * n;
        return result;
    }
}
