/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <bcs/cli.hh>
#include <bcs/formats.hh>
#include <bcs/generators.hh>
#include <bcs/global_solver.hh>
#include <bcs/local_solver.hh>
#include <bcs/oracles.hh>
#include <bcs/sched_graph.hh>
#include <bcs/subset_convolution.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

using json = nlohmann::json;

namespace bcs
{
    namespace
    {
        class UsageError : public std::runtime_error
        {
            public:
                using std::runtime_error::runtime_error;
        };

        struct Flags
        {
            optional<size_t> cs, sdim;
            string graph, process, word;
            unsigned jobs = 1;
            optional<uint64_t> cap;
            uint64_t seed = 1;
            bool json = false;
            size_t k_min = 8, k_max = 14, reps = 3;
        };

        // Either a YES/NO answer with details, or plain output for commands
        // that compute something.
        struct Report
        {
            optional<bool> answer;
            vector<string> lines;
            json data = json::object();
        };

        auto read_text(const string & path) -> string
        {
            if (path == "-")
                return string(std::istreambuf_iterator<char>(std::cin), {});
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw InputError("cannot read " + path);
            return string(std::istreambuf_iterator<char>(in), {});
        }

        auto write_text(const string & path, const string & text) -> void
        {
            std::ofstream out(path, std::ios::binary);
            if (! (out << text))
                throw InputError("cannot write " + path);
        }

        // Prefixes parse errors with the file they came from.
        template <typename F_>
        auto parse_file(const string & path, F_ && parse)
        {
            auto text = read_text(path);
            try {
                return parse(text);
            }
            catch (const InputError & e) {
                throw InputError(path + ": " + e.what());
            }
        }

        auto need(const optional<size_t> & value, const string & flag, const string & problem) -> size_t
        {
            if (! value)
                throw UsageError(problem + " needs " + flag);
            return *value;
        }

        auto need_path(const string & value, const string & flag, const string & what) -> const string &
        {
            if (value.empty())
                throw UsageError(what + " needs " + flag);
            return value;
        }

        auto thread_list(const vector<NodeId> & contexts) -> string
        {
            string result;
            for (auto c : contexts)
                result += (result.empty() ? "" : " ") + to_string(c);
            return result;
        }

        auto local_report(const LocalOracleResult & r, Report & report) -> void
        {
            report.answer = r.yes;
            if (r.yes) {
                report.lines.push_back("contexts: " + thread_list(r.contexts));
                report.data["contexts"] = r.contexts;
            }
        }

        auto fix_inputs(const Flags & flags, const string & problem) -> std::pair<SchedGraph, optional<ContractionProcess>>
        {
            auto g = parse_file(need_path(flags.graph, "--graph", problem), parse_sched_graph);
            optional<ContractionProcess> p;
            if (! flags.process.empty())
                p = parse_file(flags.process, parse_process);
            return { g, p };
        }

        auto decide(bool oracle, const string & problem, const string & file, const Flags & flags) -> Report
        {
            Report report;
            report.data["problem"] = problem;
            report.data["method"] = oracle ? "oracle" : "solver";
            uint64_t oracle_cap = flags.cap.value_or(default_oracle_cap);
            LocalOptions local;
            if (flags.cap)
                local.cap = *flags.cap;

            if (problem == "sm") {
                auto inst = parse_file(file, [&] (const string & text) { return parse_sm(text, flags.word.empty()); });
                if (! flags.word.empty())
                    inst.word = parse_word(flags.word, inst.alphabet);
                if (oracle) {
                    report.answer = oracle_sm(inst.automata, inst.word);
                    return report;
                }
                auto certificate = shuffle_certificate(inst.automata, inst.word);
                report.answer = inst.word.empty() || certificate.has_value();
                if (certificate) {
                    vector<size_t> owners;
                    for (auto o : *certificate)
                        owners.push_back(o + 1);
                    report.lines.push_back("assignment: " + thread_list(owners));
                    report.data["assignment"] = owners;
                }
                return report;
            }

            auto s = parse_file(file, parse_smcp);

            if (problem == "bcs") {
                size_t cs = need(flags.cs, "--cs", problem);
                report.data["cs"] = cs;
                if (oracle) {
                    report.answer = oracle_bcs(s, cs, oracle_cap);
                    return report;
                }
                BcsOptions options;
                options.jobs = std::max(1u, flags.jobs);
                if (flags.cap)
                    options.cap = *flags.cap;
                auto r = solve_bcs(s, cs, options);
                report.answer = r.yes;
                report.data["checks"] = r.checks;
                if (r.yes) {
                    if (! check_witness(s, r.witness, cs))
                        throw InternalError("reconstructed witness does not replay");
                    json sigma = json::array();
                    for (auto & p : r.sigma)
                        sigma.push_back({ s.memory.state_name(p.first), s.memory.state_name(p.second) });
                    vector<size_t> owners;
                    for (auto o : r.assignment)
                        owners.push_back(o + 1);
                    report.lines.push_back("sigma: " + emit_interface(r.sigma, s.memory));
                    report.lines.push_back("assignment: " + thread_list(owners));
                    report.lines.push_back("witness: " + emit_witness(r.witness, s));
                    report.data["sigma"] = sigma;
                    report.data["assignment"] = owners;
                    report.data["witness"] = emit_witness(r.witness, s);
                }
                return report;
            }

            if (problem == "cs") {
                if (oracle) {
                    auto fewest = oracle_min_switches(s, oracle_cap);
                    report.answer = fewest.has_value();
                    if (fewest) {
                        report.lines.push_back("fewest switches: " + to_string(*fewest));
                        report.data["fewest_switches"] = *fewest;
                    }
                }
                else
                    report.answer = flags.cap ? product_reach(s, *flags.cap) : product_reach(s);
                return report;
            }

            if (problem == "bcsl-sd") {
                size_t sd = need(flags.sdim, "--sdim", problem);
                report.data["sdim"] = sd;
                if (oracle)
                    local_report(oracle_bcsl_sd(s, sd, oracle_cap), report);
                else
                    report.answer = solve_bcsl_sd(s, sd, local);
                return report;
            }

            if (problem == "bcsl-fix") {
                auto [g, p] = fix_inputs(flags, problem);
                if (oracle)
                    local_report(oracle_bcsl_fix(s, g, oracle_cap), report);
                else
                    report.answer = solve_bcsl_fix(s, g, p ? *p : sdim_exact(g).second, local);
                return report;
            }

            size_t cs = need(flags.cs, "--cs", problem);
            report.data["cs"] = cs;
            if (problem == "bcsl-rr") {
                if (oracle)
                    local_report(oracle_bcsl_rr(s, cs, oracle_cap), report);
                else
                    report.answer = solve_bcsl_rr(s, cs, local);
            }
            else {
                if (oracle)
                    local_report(oracle_bcsl_any(s, cs, oracle_cap), report);
                else
                    report.answer = solve_bcsl_any(s, cs, local);
            }
            return report;
        }

        auto process_json(const ContractionProcess & p) -> json
        {
            json steps = json::array();
            for (auto & s : p.steps)
                steps.push_back({ s.first, s.second, s.fresh });
            return steps;
        }

        auto run_sdim(const string & file, const Flags & flags) -> Report
        {
            auto g = parse_file(file, parse_sched_graph);
            auto [d, p] = sdim_exact(g);
            Report report;
            report.lines.push_back(to_string(d));
            report.data["sdim"] = d;
            report.data["process"] = process_json(p);
            if (! flags.process.empty())
                write_text(flags.process, emit_process(p));
            return report;
        }

        auto run_cw(const string & file) -> Report
        {
            auto g = to_undirected(parse_file(file, parse_sched_graph));
            auto [w, d] = carving_width(g);
            Report report;
            report.lines.push_back(to_string(w));
            report.data["carving_width"] = w;
            report.data["decomposition"] = emit_carving(d).substr(0, emit_carving(d).size() - 1);
            return report;
        }

        auto run_convert(const string & direction, const string & file, const Flags & flags) -> Report
        {
            auto g = parse_file(need_path(flags.graph, "--graph", "convert"), parse_sched_graph);
            Report report;
            if (direction == "carving-to-process") {
                auto d = parse_file(file, parse_carving);
                auto p = carving_to_process(d, g);
                auto text = emit_process(p);
                text.pop_back();
                report.lines.push_back(text);
                report.data["process"] = process_json(p);
                report.data["process_degree"] = process_degree(g, p);
                report.data["decomposition_width"] = decomposition_width(to_undirected(g), d);
            }
            else {
                auto p = parse_file(file, parse_process);
                auto d = process_to_carving(p, g);
                auto text = emit_carving(d);
                text.pop_back();
                report.lines.push_back(text);
                report.data["decomposition"] = text;
                report.data["process_degree"] = process_degree(g, p);
                report.data["decomposition_width"] = decomposition_width(to_undirected(g), d);
            }
            return report;
        }

        auto run_gen(const string & kind, const vector<string> & inputs) -> Report
        {
            auto arity = [&] (size_t n) {
                if (inputs.size() != n)
                    throw UsageError("gen " + kind + " takes " + to_string(n) + " input file" + (n == 1 ? "" : "s"));
            };

            string text;
            optional<size_t> cs;
            if (kind == "sgi") {
                arity(2);
                auto g = gen_sgi(parse_file(inputs[0], parse_simple_graph), parse_file(inputs[1], parse_simple_graph));
                cs = g.cs;
                text = emit_smcp(g.program);
            }
            else if (kind == "setcov") {
                arity(1);
                auto in = parse_file(inputs[0], parse_set_cover);
                text = emit_sm(gen_setcov(in.family, in.t));
            }
            else if (kind == "3sat-cc") {
                if (inputs.empty())
                    throw UsageError("gen 3sat-cc takes at least one DIMACS file");
                vector<CnfFormula> formulas;
                for (auto & f : inputs)
                    for (auto & phi : parse_file(f, parse_dimacs))
                        formulas.push_back(phi);
                auto g = gen_3sat_cc(formulas);
                cs = g.cs;
                text = emit_smcp(g.program);
            }
            else if (kind == "kkclique") {
                arity(1);
                auto g = gen_kkclique(parse_file(inputs[0], parse_matrix_graph));
                cs = g.cs;
                text = emit_smcp(g.program);
            }
            else {
                arity(1);
                auto in = parse_file(inputs[0], parse_automata_list);
                auto g = gen_bdfai(in.alphabet, in.automata, in.length);
                cs = g.cs;
                text = emit_smcp(g.program);
            }

            Report report;
            if (cs) {
                text = "# cs: " + to_string(*cs) + "\n" + text;
                report.data["cs"] = *cs;
            }
            text.pop_back();
            report.lines.push_back(text);
            report.data["instance"] = text + "\n";
            return report;
        }

        auto run_bench(const Flags & flags) -> Report
        {
            Report report;
            json sm = json::array(), bcs = json::array();
            auto points = shuffle_scaling(flags.seed, flags.k_min, flags.k_max, flags.reps);
            for (size_t i = 0 ; i < points.size() ; ++i) {
                std::ostringstream line;
                line << "sm k=" << points[i].k << " median_s=" << points[i].median_seconds;
                json entry{ { "k", points[i].k }, { "median_seconds", points[i].median_seconds } };
                if (i > 0 && points[i - 1].median_seconds > 0) {
                    double ratio = points[i].median_seconds / points[i - 1].median_seconds;
                    line << " growth=" << ratio;
                    entry["growth"] = ratio;
                }
                report.lines.push_back(line.str());
                sm.push_back(entry);
            }
            for (auto & p : bcs_scaling(flags.cs.value_or(6), flags.reps)) {
                std::ostringstream line;
                line << "bcs m=2 cs=" << p.k << " median_s=" << p.median_seconds;
                report.lines.push_back(line.str());
                bcs.push_back(json{ { "cs", p.k }, { "median_seconds", p.median_seconds } });
            }
            report.data["sm"] = sm;
            report.data["bcs"] = bcs;
            return report;
        }

        auto print(const Report & report, const Flags & flags, std::ostream & out) -> int
        {
            if (flags.json) {
                json data = report.data;
                if (report.answer)
                    data["answer"] = *report.answer ? "yes" : "no";
                out << data.dump(2) << "\n";
            }
            else {
                if (report.answer)
                    out << (*report.answer ? "YES" : "NO") << "\n";
                for (auto & l : report.lines)
                    out << l << "\n";
            }
            return int(report.answer.value_or(true) ? ExitStatus::yes : ExitStatus::no);
        }

        auto fail_with(ExitStatus status, const string & kind, const string & message, const Flags & flags,
                std::ostream & out, std::ostream & err) -> int
        {
            err << "error: " << message << "\n";
            if (flags.json)
                out << json{ { "error", kind }, { "message", message } }.dump(2) << "\n";
            return int(status);
        }

        template <typename Clock_ = std::chrono::steady_clock>
        auto seconds_for(auto && f) -> double
        {
            auto start = Clock_::now();
            f();
            return std::chrono::duration<double>(Clock_::now() - start).count();
        }

        auto median(vector<double> xs) -> double
        {
            std::sort(xs.begin(), xs.end());
            return xs.empty() ? 0.0 : xs[xs.size() / 2];
        }
    }

    auto shuffle_scaling(uint64_t seed, size_t k_min, size_t k_max, size_t reps) -> vector<ScalingPoint>
    {
        std::mt19937_64 rng(seed);
        auto pick = [&] (size_t lo, size_t hi) { return std::uniform_int_distribution<size_t>(lo, hi)(rng); };
        vector<ScalingPoint> result;
        for (size_t k = k_min ; k <= k_max ; ++k) {
            vector<double> times;
            for (size_t r = 0 ; r < std::max<size_t>(reps, 1) ; ++r) {
                constexpr size_t symbols = 3, t = 3;
                vector<Nfa> bs;
                for (size_t i = 0 ; i < t ; ++i) {
                    size_t n = pick(2, 5);
                    Nfa b(n, symbols, 0, State(pick(0, n - 1)));
                    for (State p = 0 ; p < n ; ++p)
                        for (Symbol a = 0 ; a < symbols ; ++a)
                            for (State q = 0 ; q < n ; ++q)
                                if (pick(0, 2) == 0)
                                    b.add_transition(p, a, q);
                    bs.push_back(std::move(b));
                }
                Word w;
                for (size_t i = 0 ; i < k ; ++i)
                    w.push_back(Symbol(pick(0, symbols - 1)));
                times.push_back(seconds_for([&] { (void) shuffle_membership(bs, w); }));
            }
            result.push_back(ScalingPoint{ k, median(times) });
        }
        return result;
    }

    auto bcs_scaling(size_t cs_max, size_t reps) -> vector<ScalingPoint>
    {
        // The memory accepts an odd number of a's, the threads only produce
        // an even number, yet every memory transition is realizable by a
        // single context of the first thread.
        Smcp s{ { "a", "b" }, Nfa(2, 2, 0, 1), { Nfa(2, 2, 0, 0), Nfa(2, 2, 0, 1) } };
        s.memory.add_transition(0, 0, 1);
        s.memory.add_transition(1, 0, 0);
        s.memory.add_transition(0, 1, 0);
        s.memory.add_transition(1, 1, 1);
        s.threads[0].add_transition(0, 0, 1);
        s.threads[0].add_transition(1, 0, 0);
        s.threads[1].add_transition(0, 1, 1);
        s.threads[1].add_transition(1, 1, 1);

        vector<ScalingPoint> result;
        for (size_t cs = 0 ; cs <= cs_max ; ++cs) {
            vector<double> times;
            for (size_t r = 0 ; r < std::max<size_t>(reps, 1) ; ++r)
                times.push_back(seconds_for([&] { (void) solve_bcs(s, cs); }));
            result.push_back(ScalingPoint{ cs, median(times) });
        }
        return result;
    }

    auto run_cli(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Bounded context switching: solvers, oracles, graph tools and instance generators" };
        app.name(args.empty() ? "bcs" : args.front());
        app.require_subcommand(1);

        Flags flags;
        string problem, file, direction, kind;
        vector<string> inputs;
        const vector<string> problems{ "bcs", "sm", "bcsl-sd", "bcsl-fix", "bcsl-rr", "bcsl-any", "cs" };

        auto common = [&] (CLI::App * sub) {
            sub->add_flag("--json", flags.json, "Machine-readable report");
        };
        auto deciding = [&] (CLI::App * sub) {
            sub->add_option("problem", problem, "Problem to decide")->required()->check(CLI::IsMember(problems));
            sub->add_option("file", file, "Instance file (.smcp, or .sm for sm)")->required();
            sub->add_option("--cs", flags.cs, "Context switch bound");
            sub->add_option("--sdim", flags.sdim, "Scheduling dimension bound");
            sub->add_option("--graph", flags.graph, "Scheduling graph file (.sg)");
            sub->add_option("--process", flags.process, "Contraction process file (.cp)");
            sub->add_option("--word", flags.word, "Word for sm, as space-separated symbols");
            sub->add_option("--jobs", flags.jobs, "Worker threads");
            sub->add_option("--cap", flags.cap, "Resource cap");
            common(sub);
        };

        auto solve = app.add_subcommand("solve", "Decide an instance with the fast solver");
        deciding(solve);
        auto oracle = app.add_subcommand("oracle", "Decide an instance by brute force");
        deciding(oracle);

        auto sdim = app.add_subcommand("sdim", "Scheduling dimension of a graph");
        sdim->add_option("file", file, "Scheduling graph (.sg)")->required();
        sdim->add_option("--process", flags.process, "Also write an optimal contraction process here");
        common(sdim);

        auto cw = app.add_subcommand("cw", "Carving width of the undirected view of a graph");
        cw->add_option("file", file, "Scheduling graph (.sg)")->required();
        common(cw);

        auto convert = app.add_subcommand("convert", "Convert between carving decompositions and contraction processes");
        convert->add_option("direction", direction)->required()
            ->check(CLI::IsMember({ "carving-to-process", "process-to-carving" }));
        convert->add_option("file", file, "Decomposition (.cd) or process (.cp)")->required();
        convert->add_option("--graph", flags.graph, "Scheduling graph file (.sg)");
        common(convert);

        auto gen = app.add_subcommand("gen", "Build an instance from a source problem");
        gen->add_option("kind", kind)->required()
            ->check(CLI::IsMember({ "sgi", "setcov", "3sat-cc", "kkclique", "bdfai" }));
        gen->add_option("inputs", inputs, "Source problem files")->required();
        common(gen);

        auto bench = app.add_subcommand("bench", "Scaling probes for shuffle membership and the global solver");
        bench->add_option("--seed", flags.seed, "Seed for the random instances");
        bench->add_option("--kmin", flags.k_min, "Smallest word length");
        bench->add_option("--kmax", flags.k_max, "Largest word length");
        bench->add_option("--reps", flags.reps, "Instances per point");
        bench->add_option("--cs", flags.cs, "Largest context switch bound");
        common(bench);

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            if (! reversed.empty())
                reversed.pop_back();
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? 0 : int(ExitStatus::usage);
        }

        try {
            Report report;
            if (solve->parsed())
                report = decide(false, problem, file, flags);
            else if (oracle->parsed())
                report = decide(true, problem, file, flags);
            else if (sdim->parsed())
                report = run_sdim(file, flags);
            else if (cw->parsed())
                report = run_cw(file);
            else if (convert->parsed())
                report = run_convert(direction, file, flags);
            else if (gen->parsed())
                report = run_gen(kind, inputs);
            else
                report = run_bench(flags);
            return print(report, flags, out);
        }
        catch (const UsageError & e) {
            return fail_with(ExitStatus::usage, "usage", e.what(), flags, out, err);
        }
        catch (const InputError & e) {
            return fail_with(ExitStatus::usage, "input", e.what(), flags, out, err);
        }
        catch (const ResourceError & e) {
            return fail_with(ExitStatus::resource, "resource", e.what(), flags, out, err);
        }
        catch (const InternalError & e) {
            return fail_with(ExitStatus::internal, "internal", e.what(), flags, out, err);
        }
    }
}
