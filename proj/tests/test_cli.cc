#include <bcs/cli.hh>
#include <bcs/formats.hh>
#include <bcs/generators.hh>

#include "generator_corpus.hh"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bcs;
using namespace bcs::testing;

namespace
{
    struct Run
    {
        int status;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Run
    {
        std::ostringstream out, err;
        args.insert(args.begin(), "bcs");
        int status = run_cli(args, out, err);
        return Run{ status, out.str(), err.str() };
    }

    auto scratch() -> std::filesystem::path
    {
        auto dir = std::filesystem::temp_directory_path() / "bcs_cli_test";
        std::filesystem::create_directories(dir);
        return dir;
    }

    auto put(const std::string & name, const std::string & text) -> std::string
    {
        auto path = scratch() / name;
        std::ofstream(path) << text;
        return path.string();
    }
}

TEST_CASE("sgi triangle through the command line")
{
    auto k3 = put("k3.g", "nodes: a b c\na b\nb c\na c\n");
    auto p3 = put("p3.g", "nodes: a b c\na b\nb c\n");

    auto gen = run({ "gen", "sgi", k3, k3 });
    REQUIRE(gen.status == 0);
    CHECK(gen.out.rfind("# cs: 6\n", 0) == 0);
    auto yes = put("k3k3.smcp", gen.out);

    auto solved = run({ "solve", "bcs", yes, "--cs", "6" });
    CHECK(solved.status == 0);
    CHECK(solved.out.rfind("YES\n", 0) == 0);
    CHECK(solved.out.find("witness: ") != std::string::npos);
    CHECK(run({ "oracle", "bcs", yes, "--cs", "6" }).status == 0);

    auto no = put("k3p3.smcp", run({ "gen", "sgi", k3, p3 }).out);
    CHECK(run({ "solve", "bcs", no, "--cs", "6" }).status == 1);
    CHECK(run({ "oracle", "bcs", no, "--cs", "6" }).status == 1);

    auto js = run({ "solve", "bcs", yes, "--cs", "6", "--json", "--jobs", "2" });
    auto data = nlohmann::json::parse(js.out);
    CHECK(data["answer"] == "yes");
    CHECK(data["sigma"].size() >= 1);
    CHECK(js.out == run({ "solve", "bcs", yes, "--cs", "6", "--json", "--jobs", "2" }).out);
}

TEST_CASE("sdim, cw and conversions")
{
    auto g = put("two.sg", "nodes: 1 2\n1 2 3\n2 1 2\n");
    auto r = run({ "sdim", g });
    CHECK(r.status == 0);
    CHECK(r.out == "3\n");

    auto cp = (scratch() / "two.cp").string();
    CHECK(run({ "sdim", g, "--process", cp }).status == 0);
    std::ifstream in(cp);
    std::string line;
    std::getline(in, line);
    CHECK(line == "1 2 -> 3");

    CHECK(run({ "cw", g }).out == "3\n");

    auto four = put("four.sg", "nodes: 1 2 3 4\n1 2 1\n2 3 1\n3 4 1\n4 1 1\n");
    auto cd = put("four.cd", "((1 2) (3 4))\n");
    auto conv = run({ "convert", "carving-to-process", cd, "--graph", four, "--json" });
    REQUIRE(conv.status == 0);
    auto data = nlohmann::json::parse(conv.out);
    CHECK(data["process"].size() == 3);
    CHECK(data["process_degree"].get<int>() <= data["decomposition_width"].get<int>());

    auto proc = put("four.cp", "1 2 -> 5\n5 3 -> 6\n6 4 -> 7\n");
    auto back = run({ "convert", "process-to-carving", proc, "--graph", four });
    CHECK(back.status == 0);
    CHECK(back.out == "(((1 2) 3) 4)\n");
    CHECK(run({ "convert", "process-to-carving", proc }).status == 2);
}

TEST_CASE("exit statuses for errors")
{
    auto bad = put("bad.smcp", "alphabet: a\nmemory:\n states: m\n init: m\n final: m\n trans: m a\nthread 1:\n states: p\n init: p\n final: p\n");
    auto r = run({ "solve", "bcs", bad, "--cs", "1" });
    CHECK(r.status == 2);
    CHECK(r.err.find("line 6") != std::string::npos);

    CHECK(run({}).status == 2);
    CHECK(run({ "solve", "nonsense", bad }).status == 2);
    CHECK(run({ "solve", "bcs", (scratch() / "absent.smcp").string(), "--cs", "1" }).status == 2);
    CHECK(run({ "--help" }).status == 0);

    Smcp s = gen_sgi(graph_from_mask(3, 0b111), graph_from_mask(3, 0b111)).program;
    auto file = put("capped.smcp", emit_smcp(s));
    CHECK(run({ "solve", "bcs", file }).status == 2);
    auto capped = run({ "solve", "bcs", file, "--cs", "6", "--cap", "1", "--json" });
    CHECK(capped.status == 3);
    CHECK(nlohmann::json::parse(capped.out)["error"] == "resource");
    CHECK(run({ "solve", "bcsl-sd", file }).status == 2);
    CHECK(run({ "solve", "bcsl-fix", file }).status == 2);
}

TEST_CASE("solve and oracle agree on a regression corpus")
{
    Rng rng(101);
    for (int i = 0 ; i < 25 ; ++i) {
        auto s = random_smcp(rng, 3, 3, 3, 2, 0.35);
        auto file = put("corpus" + std::to_string(i) + ".smcp", emit_smcp(s));
        std::vector<std::vector<std::string>> commands{
            { "bcs", file, "--cs", "3" },
            { "bcsl-sd", file, "--sdim", "1" },
            { "bcsl-rr", file, "--cs", "2" },
            { "bcsl-any", file, "--cs", "2" },
            { "cs", file } };
        for (auto & c : commands) {
            auto solve = c, oracle = c;
            solve.insert(solve.begin(), "solve");
            oracle.insert(oracle.begin(), "oracle");
            CAPTURE(c[0]);
            CAPTURE(i);
            int a = run(solve).status, b = run(oracle).status;
            CHECK(a == b);
            CHECK(a <= 1);
        }

        auto sg = put("corpus" + std::to_string(i) + ".sg", "nodes: 1 2\n1 2 1\n2 1 1\n");
        if (s.num_threads() == 2)
            CHECK(run({ "solve", "bcsl-fix", file, "--graph", sg }).status
                    == run({ "oracle", "bcsl-fix", file, "--graph", sg }).status);
    }
}

TEST_CASE("shuffle membership from the command line")
{
    auto f = put("sc.txt", "t: 1\nuniverse: u1 u2\nu1\nu2\nu1 u2\n");
    auto gen = run({ "gen", "setcov", f });
    REQUIRE(gen.status == 0);
    auto sm = put("sc.sm", gen.out);
    CHECK(run({ "solve", "sm", sm }).status == 0);
    CHECK(run({ "oracle", "sm", sm }).status == 0);
    auto r = run({ "solve", "sm", sm, "--word", "slot1 u1" });
    CHECK(r.status == 1);
    CHECK(run({ "oracle", "sm", sm, "--word", "slot1 u1" }).status == 1);
    CHECK(run({ "solve", "sm", sm, "--word", "zz" }).status == 2);
}

TEST_CASE("other generators from the command line")
{
    auto cnf = put("f.cnf", "p cnf 2 2\n1 2 0\n-1 0\n");
    auto sat = run({ "gen", "3sat-cc", cnf });
    REQUIRE(sat.status == 0);
    auto satfile = put("sat.smcp", sat.out);
    CHECK(run({ "solve", "bcs", satfile, "--cs", "4" }).status == 0);

    auto kk = put("kk.txt", "k: 2\n1 1 2 2\n");
    auto gen = run({ "gen", "kkclique", kk });
    REQUIRE(gen.status == 0);
    auto kkfile = put("kk.smcp", gen.out);
    CHECK(run({ "solve", "bcsl-rr", kkfile, "--cs", "2" }).status == 0);
    CHECK(run({ "oracle", "bcsl-rr", kkfile, "--cs", "2" }).status == 0);

    auto bd = put("bd.txt", "alphabet: a b\nthread 1:\n states: p q\n init: p\n final: q\n trans: p a q; q b q\nlength: 2\n");
    auto bgen = run({ "gen", "bdfai", bd, "--json" });
    REQUIRE(bgen.status == 0);
    auto data = nlohmann::json::parse(bgen.out);
    CHECK(data["cs"] == 2);
    auto bdfile = put("bd.smcp", data["instance"].get<std::string>());
    CHECK(run({ "solve", "bcs", bdfile, "--cs", "2" }).status == 0);

    CHECK(run({ "gen", "sgi", kk }).status == 2);
}

TEST_CASE("bench prints both probes")
{
    auto r = run({ "bench", "--kmin", "4", "--kmax", "6", "--reps", "1", "--cs", "2", "--json" });
    REQUIRE(r.status == 0);
    auto data = nlohmann::json::parse(r.out);
    CHECK(data["sm"].size() == 3);
    CHECK(data["bcs"].size() == 3);
}
