/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <bcs/formats.hh>

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>

using std::map;
using std::optional;
using std::size_t;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace bcs
{
    namespace
    {
        struct Token
        {
            string text;
            size_t column;
        };

        struct Line
        {
            size_t number;
            vector<Token> tokens;
        };

        [[noreturn]] auto fail(size_t line, size_t column, const string & message) -> void
        {
            throw InputError("line " + to_string(line) + ", column " + to_string(column) + ": " + message);
        }

        [[noreturn]] auto fail(const Line & line, const Token & token, const string & message) -> void
        {
            fail(line.number, token.column, message);
        }

        // Splits into nonempty lines of whitespace-separated tokens. ';' is
        // always a token of its own and '#' starts a comment.
        auto tokenize(string_view text) -> vector<Line>
        {
            vector<Line> result;
            size_t number = 0;
            size_t start = 0;
            while (start <= text.size()) {
                size_t end = text.find('\n', start);
                if (end == string_view::npos)
                    end = text.size();
                string_view line = text.substr(start, end - start);
                ++number;

                Line current{ number, {} };
                size_t i = 0;
                while (i < line.size()) {
                    char c = line[i];
                    if (c == '#')
                        break;
                    if (c == ' ' || c == '\t' || c == '\r') {
                        ++i;
                        continue;
                    }
                    if (c == ';') {
                        current.tokens.push_back(Token{ ";", i + 1 });
                        ++i;
                        continue;
                    }
                    size_t j = i;
                    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r'
                            && line[j] != ';' && line[j] != '#')
                        ++j;
                    current.tokens.push_back(Token{ string(line.substr(i, j - i)), i + 1 });
                    i = j;
                }
                if (! current.tokens.empty())
                    result.push_back(std::move(current));
                start = end + 1;
            }
            return result;
        }

        auto parse_number(const Line & line, const Token & token, const string & what) -> size_t
        {
            size_t value = 0;
            auto [ptr, ec] = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
            if (ec != std::errc() || ptr != token.text.data() + token.text.size())
                fail(line, token, what + " must be a non-negative integer, got '" + token.text + "'");
            return value;
        }

        auto is_plain_name(const string & name) -> bool
        {
            return ! name.empty() && name.back() != ':' && std::none_of(name.begin(), name.end(), [] (char c) {
                    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ';' || c == '#' || c == '@'; });
        }

        auto check_name(const string & name, const string & what) -> void
        {
            if (! is_plain_name(name))
                throw InputError(what + " '" + name + "' cannot be written: names must be nonempty, must not end in ':' "
                        "and must not contain whitespace, ';', '#' or '@'");
        }

        struct BlockDraft
        {
            string label;
            size_t line = 0;
            optional<Line> states, init, final;
            vector<Line> trans;
        };

        struct Document
        {
            optional<Line> alphabet, word, length;
            optional<BlockDraft> memory;
            vector<BlockDraft> threads;
        };

        auto read_document(string_view text) -> Document
        {
            Document doc;
            BlockDraft * current = nullptr;
            for (auto & line : tokenize(text)) {
                auto & head = line.tokens.front();
                if (head.text == "thread") {
                    if (line.tokens.size() != 2 || line.tokens[1].text.empty() || line.tokens[1].text.back() != ':')
                        fail(line, head, "expected 'thread <i>:'");
                    Token index{ line.tokens[1].text.substr(0, line.tokens[1].text.size() - 1), line.tokens[1].column };
                    size_t i = parse_number(line, index, "thread index");
                    if (i != doc.threads.size() + 1)
                        fail(line, index, "expected thread " + to_string(doc.threads.size() + 1) + ", got thread " + index.text);
                    doc.threads.push_back(BlockDraft{ "thread " + index.text, line.number, {}, {}, {}, {} });
                    current = &doc.threads.back();
                    continue;
                }

                if (head.text.back() != ':')
                    fail(line, head, "expected a key such as 'states:', got '" + head.text + "'");
                string key = head.text.substr(0, head.text.size() - 1);
                Line rest{ line.number, vector<Token>(line.tokens.begin() + 1, line.tokens.end()) };

                auto once = [&] (optional<Line> & slot) {
                    if (slot)
                        fail(line, head, "duplicate '" + head.text + "' line");
                    slot = rest;
                };

                if (key == "alphabet")
                    once(doc.alphabet);
                else if (key == "word")
                    once(doc.word);
                else if (key == "length")
                    once(doc.length);
                else if (key == "memory") {
                    if (! rest.tokens.empty())
                        fail(line, rest.tokens.front(), "'memory:' takes no values");
                    if (doc.memory)
                        fail(line, head, "duplicate memory block");
                    doc.memory = BlockDraft{ "memory", line.number, {}, {}, {}, {} };
                    current = &*doc.memory;
                }
                else if (key == "states" || key == "init" || key == "final" || key == "trans") {
                    if (! current)
                        fail(line, head, "'" + head.text + "' outside a memory or thread block");
                    if (key == "states")
                        once(current->states);
                    else if (key == "init")
                        once(current->init);
                    else if (key == "final")
                        once(current->final);
                    else
                        current->trans.push_back(rest);
                }
                else
                    fail(line, head, "unknown key '" + head.text + "'");
            }
            return doc;
        }

        auto symbol_table(const Document & doc) -> std::pair<vector<string>, map<string, Symbol>>
        {
            if (! doc.alphabet)
                throw InputError("line 1, column 1: missing 'alphabet:' line");
            vector<string> names;
            map<string, Symbol> ids;
            for (auto & token : doc.alphabet->tokens) {
                if (token.text == ";" || ! is_plain_name(token.text))
                    fail(*doc.alphabet, token, "'" + token.text + "' is not a valid symbol name");
                if (! ids.emplace(token.text, Symbol(names.size())).second)
                    fail(*doc.alphabet, token, "symbol '" + token.text + "' declared twice");
                names.push_back(token.text);
            }
            return { names, ids };
        }

        auto build_automaton(const BlockDraft & block, const map<string, Symbol> & symbols) -> Nfa
        {
            auto missing = [&] (const char * key) {
                fail(block.line, 1, block.label + " has no '" + key + ":' line");
            };
            if (! block.states)
                missing("states");
            if (! block.init)
                missing("init");
            if (! block.final)
                missing("final");

            vector<string> names;
            map<string, State> ids;
            for (auto & token : block.states->tokens) {
                if (token.text == ";" || ! is_plain_name(token.text))
                    fail(*block.states, token, "'" + token.text + "' is not a valid state name");
                if (! ids.emplace(token.text, State(names.size())).second)
                    fail(*block.states, token, "state '" + token.text + "' declared twice in " + block.label);
                names.push_back(token.text);
            }
            if (names.empty())
                fail(*block.states, Token{ "", 1 }, block.label + " declares no states");

            auto single_state = [&] (const Line & line, const char * key) -> State {
                if (line.tokens.size() != 1)
                    fail(line.number, line.tokens.size() > 1 ? line.tokens[1].column : 1,
                            string("'") + key + ":' needs exactly one state");
                auto it = ids.find(line.tokens[0].text);
                if (it == ids.end())
                    fail(line, line.tokens[0], "unknown state '" + line.tokens[0].text + "' in " + block.label);
                return it->second;
            };
            State initial = single_state(*block.init, "init");
            State final = single_state(*block.final, "final");

            Nfa result(names, symbols.size(), initial, final);
            for (auto & line : block.trans) {
                vector<Token> triple;
                auto flush = [&] (size_t column) {
                    if (triple.size() != 3)
                        fail(line.number, triple.empty() ? column : triple.front().column,
                                "transition needs 3 fields (src sym dst), got " + to_string(triple.size()));
                    auto src = ids.find(triple[0].text), dst = ids.find(triple[2].text);
                    auto sym = symbols.find(triple[1].text);
                    if (src == ids.end())
                        fail(line, triple[0], "unknown state '" + triple[0].text + "' in " + block.label);
                    if (sym == symbols.end())
                        fail(line, triple[1], "symbol '" + triple[1].text + "' is not in the alphabet");
                    if (dst == ids.end())
                        fail(line, triple[2], "unknown state '" + triple[2].text + "' in " + block.label);
                    result.add_transition(src->second, sym->second, dst->second);
                    triple.clear();
                };
                for (auto & token : line.tokens) {
                    if (token.text == ";")
                        flush(token.column);
                    else
                        triple.push_back(token);
                }
                // a trailing ';' is allowed
                if (! triple.empty())
                    flush(triple.front().column);
            }
            return result;
        }

        auto emit_automaton(std::ostringstream & out, const string & header, const Nfa & a,
                const vector<string> & alphabet) -> void
        {
            out << header << "\n";
            out << "    states:";
            for (auto & n : a.state_names()) {
                check_name(n, "state");
                out << " " << n;
            }
            out << "\n    init: " << a.state_name(a.initial()) << "\n";
            out << "    final: " << a.state_name(a.final()) << "\n";
            for (State p = 0 ; p < a.num_states() ; ++p) {
                auto from = a.transitions_from(p);
                if (from.empty())
                    continue;
                out << "    trans:";
                bool first = true;
                for (auto & t : from) {
                    out << (first ? " " : "; ") << a.state_name(t.source) << " " << alphabet.at(t.symbol)
                        << " " << a.state_name(t.target);
                    first = false;
                }
                out << "\n";
            }
        }

        auto emit_alphabet(std::ostringstream & out, const vector<string> & alphabet) -> void
        {
            out << "alphabet:";
            for (auto & a : alphabet) {
                check_name(a, "symbol");
                out << " " << a;
            }
            out << "\n";
        }

        auto reject(const optional<Line> & line, const string & what) -> void
        {
            if (line)
                fail(line->number, 1, what);
        }

        auto thread_list(const Document & doc, const map<string, Symbol> & ids) -> vector<Nfa>
        {
            vector<Nfa> result;
            for (auto & block : doc.threads)
                result.push_back(build_automaton(block, ids));
            return result;
        }
    }

    auto parse_smcp(string_view text) -> Smcp
    {
        auto doc = read_document(text);
        reject(doc.word, "'word:' is not part of a program file");
        reject(doc.length, "'length:' is not part of a program file");
        auto [names, ids] = symbol_table(doc);
        if (! doc.memory)
            throw InputError("line 1, column 1: missing 'memory:' block");
        if (doc.threads.empty())
            throw InputError("line 1, column 1: a program needs at least one thread block");

        Smcp s{ names, build_automaton(*doc.memory, ids), thread_list(doc, ids) };
        s.validate();
        return s;
    }

    auto emit_smcp(const Smcp & s) -> string
    {
        std::ostringstream out;
        emit_alphabet(out, s.alphabet);
        emit_automaton(out, "memory:", s.memory, s.alphabet);
        for (size_t i = 0 ; i < s.threads.size() ; ++i)
            emit_automaton(out, "thread " + to_string(i + 1) + ":", s.threads[i], s.alphabet);
        return out.str();
    }

    auto parse_sm(string_view text, bool require_word) -> SmInstance
    {
        auto doc = read_document(text);
        reject(doc.length, "'length:' is not part of a shuffle instance");
        if (doc.memory)
            fail(doc.memory->line, 1, "a shuffle instance has no memory block");
        auto [names, ids] = symbol_table(doc);
        if (doc.threads.empty())
            throw InputError("line 1, column 1: a shuffle instance needs at least one thread block");
        if (! doc.word && require_word)
            throw InputError("line 1, column 1: missing 'word:' line");

        SmInstance result{ names, thread_list(doc, ids), {} };
        if (doc.word)
            for (auto & token : doc.word->tokens) {
                auto it = ids.find(token.text);
                if (it == ids.end())
                    fail(*doc.word, token, "symbol '" + token.text + "' is not in the alphabet");
                result.word.push_back(it->second);
            }
        return result;
    }

    auto parse_word(string_view text, const vector<string> & alphabet) -> Word
    {
        Word w;
        for (auto & line : tokenize(text))
            for (auto & token : line.tokens) {
                auto it = std::find(alphabet.begin(), alphabet.end(), token.text);
                if (it == alphabet.end())
                    fail(line, token, "symbol '" + token.text + "' is not in the alphabet");
                w.push_back(Symbol(it - alphabet.begin()));
            }
        return w;
    }

    auto emit_sm(const SmInstance & s) -> string
    {
        std::ostringstream out;
        emit_alphabet(out, s.alphabet);
        for (size_t i = 0 ; i < s.automata.size() ; ++i)
            emit_automaton(out, "thread " + to_string(i + 1) + ":", s.automata[i], s.alphabet);
        out << "word:";
        for (auto a : s.word)
            out << " " << s.alphabet.at(a);
        out << "\n";
        return out.str();
    }

    auto parse_automata_list(string_view text) -> AutomataList
    {
        auto doc = read_document(text);
        reject(doc.word, "'word:' is not part of an automata list");
        if (doc.memory)
            fail(doc.memory->line, 1, "an automata list has no memory block");
        auto [names, ids] = symbol_table(doc);
        if (doc.threads.empty())
            throw InputError("line 1, column 1: at least one automaton block is needed");
        if (! doc.length)
            throw InputError("line 1, column 1: missing 'length:' line");
        if (doc.length->tokens.size() != 1)
            fail(doc.length->number, 1, "'length:' needs exactly one number");
        return AutomataList{ names, thread_list(doc, ids), parse_number(*doc.length, doc.length->tokens[0], "length") };
    }

    auto parse_sched_graph(string_view text) -> SchedGraph
    {
        auto lines = tokenize(text);
        if (lines.empty() || lines.front().tokens.front().text != "nodes:")
            fail(lines.empty() ? 1 : lines.front().number, 1, "expected a 'nodes:' line first");
        vector<NodeId> nodes;
        for (size_t i = 1 ; i < lines.front().tokens.size() ; ++i)
            nodes.push_back(parse_number(lines.front(), lines.front().tokens[i], "node id"));

        SchedGraph g;
        try {
            g = SchedGraph(nodes);
        }
        catch (const InputError & e) {
            fail(lines.front().number, 1, e.what());
        }
        for (size_t l = 1 ; l < lines.size() ; ++l) {
            auto & line = lines[l];
            if (line.tokens.size() != 3)
                fail(line, line.tokens.front(), "arc needs 3 fields (i j w), got " + to_string(line.tokens.size()));
            NodeId i = parse_number(line, line.tokens[0], "node id");
            NodeId j = parse_number(line, line.tokens[1], "node id");
            Weight w = parse_number(line, line.tokens[2], "weight");
            if (! g.has_node(i))
                fail(line, line.tokens[0], "node " + to_string(i) + " is not declared");
            if (! g.has_node(j))
                fail(line, line.tokens[1], "node " + to_string(j) + " is not declared");
            if (i == j && w != 0)
                fail(line, line.tokens[1], "loop at node " + to_string(i));
            g.add_weight(i, j, w);
        }
        return g;
    }

    auto emit_sched_graph(const SchedGraph & g) -> string
    {
        std::ostringstream out;
        out << "nodes:";
        for (auto n : g.nodes())
            out << " " << n;
        out << "\n";
        for (size_t i = 0 ; i < g.num_nodes() ; ++i)
            for (size_t j = 0 ; j < g.num_nodes() ; ++j)
                if (g.weight_at(i, j) != 0)
                    out << g.nodes()[i] << " " << g.nodes()[j] << " " << g.weight_at(i, j) << "\n";
        return out.str();
    }

    auto parse_process(string_view text) -> ContractionProcess
    {
        ContractionProcess p;
        for (auto & line : tokenize(text)) {
            if (line.tokens.size() != 4 || line.tokens[2].text != "->")
                fail(line, line.tokens.front(), "expected 'n1 n2 -> n'");
            p.steps.push_back(ContractionStep{
                    parse_number(line, line.tokens[0], "node id"),
                    parse_number(line, line.tokens[1], "node id"),
                    parse_number(line, line.tokens[3], "node id") });
        }
        return p;
    }

    auto emit_process(const ContractionProcess & p) -> string
    {
        std::ostringstream out;
        for (auto & s : p.steps)
            out << s.first << " " << s.second << " -> " << s.fresh << "\n";
        return out.str();
    }

    auto parse_carving(string_view text) -> CarvingDecomposition
    {
        size_t pos = 0, line = 1, column = 1;
        auto advance = [&] {
            if (text[pos] == '\n') {
                ++line;
                column = 1;
            }
            else
                ++column;
            ++pos;
        };
        auto skip = [&] {
            while (pos < text.size()) {
                if (text[pos] == '#')
                    while (pos < text.size() && text[pos] != '\n')
                        advance();
                else if (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' || text[pos] == '\n')
                    advance();
                else
                    break;
            }
        };

        CarvingDecomposition d;
        std::function<size_t ()> node = [&] () -> size_t {
            skip();
            if (pos == text.size())
                fail(line, column, "unexpected end of decomposition");
            if (text[pos] == '(') {
                advance();
                size_t left = node();
                size_t right = node();
                skip();
                if (pos == text.size() || text[pos] != ')')
                    fail(line, column, "expected ')': internal nodes have exactly two children");
                advance();
                d.tree.push_back(CarvingDecomposition::TreeNode{ left, right, std::nullopt });
                return d.tree.size() - 1;
            }
            size_t start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
                advance();
            if (start == pos)
                fail(line, column, string("unexpected '") + text[pos] + "'");
            NodeId id = 0;
            std::from_chars(text.data() + start, text.data() + pos, id);
            d.tree.push_back(CarvingDecomposition::TreeNode{ std::nullopt, std::nullopt, id });
            return d.tree.size() - 1;
        };

        d.root = node();
        skip();
        if (pos != text.size())
            fail(line, column, "trailing text after the decomposition");
        return d;
    }

    auto emit_carving(const CarvingDecomposition & d) -> string
    {
        std::function<string (size_t)> node = [&] (size_t i) -> string {
            auto & n = d.tree.at(i);
            if (n.leaf)
                return to_string(*n.leaf);
            if (! n.left || ! n.right)
                throw InputError("carving decomposition has an internal node without two children");
            return "(" + node(*n.left) + " " + node(*n.right) + ")";
        };
        if (d.tree.empty())
            throw InputError("carving decomposition is empty");
        return node(d.root) + "\n";
    }

    auto parse_witness(string_view text, const Smcp & s) -> TaggedWord
    {
        map<string, Symbol> ids;
        for (size_t a = 0 ; a < s.alphabet.size() ; ++a)
            ids.emplace(s.alphabet[a], Symbol(a));

        TaggedWord u;
        for (auto & line : tokenize(text))
            for (auto & token : line.tokens) {
                auto at = token.text.rfind('@');
                if (at == string::npos)
                    fail(line, token, "expected sym@thread, got '" + token.text + "'");
                auto it = ids.find(token.text.substr(0, at));
                if (it == ids.end())
                    fail(line, token, "symbol '" + token.text.substr(0, at) + "' is not in the alphabet");
                Token thread{ token.text.substr(at + 1), token.column + at + 1 };
                size_t i = parse_number(line, thread, "thread");
                if (i < 1 || i > s.num_threads())
                    fail(line, thread, "thread " + thread.text + " does not exist");
                u.push_back(TaggedSymbol{ it->second, i - 1 });
            }
        return u;
    }

    auto emit_witness(const TaggedWord & u, const Smcp & s) -> string
    {
        string result;
        for (auto & x : u) {
            if (! result.empty())
                result += " ";
            result += s.alphabet.at(x.symbol) + "@" + to_string(x.thread + 1);
        }
        return result;
    }

    auto emit_interface(const InterfaceSeq & sigma, const Nfa & memory) -> string
    {
        string result;
        for (auto & p : sigma) {
            if (! result.empty())
                result += " ";
            result += "(" + memory.state_name(p.first) + "," + memory.state_name(p.second) + ")";
        }
        return result;
    }

    auto parse_simple_graph(string_view text) -> SimpleGraph
    {
        auto lines = tokenize(text);
        if (lines.empty() || lines.front().tokens.front().text != "nodes:")
            fail(lines.empty() ? 1 : lines.front().number, 1, "expected a 'nodes:' line first");
        SimpleGraph g;
        map<string, size_t> ids;
        for (size_t i = 1 ; i < lines.front().tokens.size() ; ++i) {
            auto & token = lines.front().tokens[i];
            if (! ids.emplace(token.text, g.names.size()).second)
                fail(lines.front(), token, "vertex '" + token.text + "' declared twice");
            g.names.push_back(token.text);
        }
        std::set<std::pair<size_t, size_t>> seen;
        for (size_t l = 1 ; l < lines.size() ; ++l) {
            auto & line = lines[l];
            if (line.tokens.size() != 2)
                fail(line, line.tokens.front(), "edge needs 2 fields (u v), got " + to_string(line.tokens.size()));
            size_t ends[2];
            for (size_t e = 0 ; e < 2 ; ++e) {
                auto it = ids.find(line.tokens[e].text);
                if (it == ids.end())
                    fail(line, line.tokens[e], "vertex '" + line.tokens[e].text + "' is not declared");
                ends[e] = it->second;
            }
            if (ends[0] == ends[1])
                fail(line, line.tokens[1], "loop at vertex '" + line.tokens[0].text + "'");
            if (! seen.emplace(std::min(ends[0], ends[1]), std::max(ends[0], ends[1])).second)
                fail(line, line.tokens[0], "edge repeated");
            g.edges.emplace_back(ends[0], ends[1]);
        }
        return g;
    }

    auto emit_simple_graph(const SimpleGraph & g) -> string
    {
        std::ostringstream out;
        out << "nodes:";
        for (auto & n : g.names) {
            check_name(n, "vertex");
            out << " " << n;
        }
        out << "\n";
        for (auto & [u, v] : g.edges)
            out << g.names.at(u) << " " << g.names.at(v) << "\n";
        return out.str();
    }

    auto parse_dimacs(string_view text) -> vector<CnfFormula>
    {
        vector<CnfFormula> result;
        vector<size_t> declared;
        vector<int> clause;
        size_t number = 0, start = 0;
        auto finish = [&] (size_t line) {
            if (! clause.empty())
                fail(line, 1, "clause is not terminated by 0");
            if (! result.empty() && result.back().clauses.size() != declared.back())
                fail(line, 1, "formula " + to_string(result.size()) + " declares " + to_string(declared.back())
                        + " clauses but has " + to_string(result.back().clauses.size()));
        };

        while (start <= text.size()) {
            size_t end = text.find('\n', start);
            if (end == string_view::npos)
                end = text.size();
            string_view raw = text.substr(start, end - start);
            start = end + 1;
            ++number;

            size_t first = raw.find_first_not_of(" \t\r");
            if (first == string_view::npos || raw[first] == 'c')
                continue;
            if (raw[first] == '%')
                break;

            std::istringstream in{ string(raw) };
            if (raw[first] == 'p') {
                string p, cnf;
                long vars = -1, clauses = -1;
                in >> p >> cnf >> vars >> clauses;
                if (cnf != "cnf" || vars < 0 || clauses < 0)
                    fail(number, first + 1, "expected 'p cnf <variables> <clauses>'");
                finish(number);
                result.push_back(CnfFormula{ size_t(vars), {} });
                declared.push_back(size_t(clauses));
                continue;
            }
            if (result.empty())
                fail(number, first + 1, "clause before the 'p cnf' header");
            string token;
            size_t column = first + 1;
            while (in >> token) {
                int lit = 0;
                auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), lit);
                column = raw.find(token, column - 1) + 1;
                if (ec != std::errc() || ptr != token.data() + token.size())
                    fail(number, column, "'" + token + "' is not a literal");
                if (lit == 0) {
                    result.back().clauses.push_back(clause);
                    clause.clear();
                }
                else {
                    if (size_t(lit < 0 ? -lit : lit) > result.back().num_vars)
                        fail(number, column, "literal " + token + " exceeds the declared variable count");
                    clause.push_back(lit);
                }
                column += token.size();
            }
        }
        finish(number);
        if (result.empty())
            throw InputError("line 1, column 1: no 'p cnf' header");
        return result;
    }

    auto parse_set_cover(string_view text) -> SetCoverInput
    {
        SetCoverInput result;
        bool have_t = false;
        for (auto & line : tokenize(text)) {
            auto & head = line.tokens.front();
            if (head.text == "t:") {
                if (line.tokens.size() != 2)
                    fail(line, head, "'t:' needs exactly one number");
                result.t = parse_number(line, line.tokens[1], "t");
                have_t = true;
            }
            else if (head.text == "universe:") {
                for (size_t i = 1 ; i < line.tokens.size() ; ++i)
                    result.family.universe.push_back(line.tokens[i].text);
            }
            else {
                vector<string> set;
                for (auto & token : line.tokens) {
                    if (token.text == ";" || token.text.back() == ':')
                        fail(line, token, "'" + token.text + "' is not a set element");
                    set.push_back(token.text);
                }
                result.family.sets.push_back(set);
            }
        }
        if (! have_t)
            throw InputError("line 1, column 1: missing 't:' line");
        return result;
    }

    auto parse_matrix_graph(string_view text) -> MatrixGraph
    {
        auto lines = tokenize(text);
        if (lines.empty() || lines.front().tokens.front().text != "k:" || lines.front().tokens.size() != 2)
            fail(lines.empty() ? 1 : lines.front().number, 1, "expected a 'k: <number>' line first");
        MatrixGraph g{ parse_number(lines.front(), lines.front().tokens[1], "k"), {} };
        for (size_t l = 1 ; l < lines.size() ; ++l) {
            auto & line = lines[l];
            if (line.tokens.size() != 4)
                fail(line, line.tokens.front(), "edge needs 4 fields (r1 c1 r2 c2), got " + to_string(line.tokens.size()));
            size_t x[4];
            for (size_t i = 0 ; i < 4 ; ++i) {
                x[i] = parse_number(line, line.tokens[i], "coordinate");
                if (x[i] < 1 || x[i] > g.k)
                    fail(line, line.tokens[i], "coordinate " + line.tokens[i].text + " outside 1.." + to_string(g.k));
            }
            g.edges.push_back({ { x[0] - 1, x[1] - 1 }, { x[2] - 1, x[3] - 1 } });
        }
        return g;
    }
}
