// Exit-code and output contract of the command-line tool. Takes the
// binary path and the fixture directory as arguments.

#include <corrhom/json_io.hh>
#include <corrhom/model.hh>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace
{
    int checks = 0, failures = 0;
    std::string cli, data, tmp;

    struct RunResult
    {
        int code = -1;
        std::string out;
        std::string err;
    };

    std::string slurp(const std::string & path)
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    RunResult run(const std::string & args)
    {
        std::string out_file = tmp + "/out", err_file = tmp + "/err";
        std::string cmd = cli + " " + args + " > " + out_file + " 2> " + err_file;
        int status = std::system(cmd.c_str());
        RunResult r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(out_file);
        r.err = slurp(err_file);
        return r;
    }

    void expect(bool ok, const std::string & what)
    {
        ++checks;
        if (! ok) {
            ++failures;
            std::cerr << "FAIL: " << what << "\n";
        }
    }

    void expect_eq(int got, int want, const std::string & what)
    {
        expect(got == want, what + " (exit " + std::to_string(got) +
            ", wanted " + std::to_string(want) + ")");
    }
}

int main(int argc, char ** argv)
{
    if (argc < 3) {
        std::cerr << "usage: test_cli <binary> <data-dir>\n";
        return 2;
    }
    cli = argv[1];
    data = argv[2];
    tmp = "cli-scratch";
    std::system(("mkdir -p " + tmp).c_str());

    // classify: polynomial and list-hard shapes, parse failure
    {
        RunResult r = run("classify " + data + "/reflexive-2k2.json");
        expect_eq(r.code, 0, "classify 2k2 standard");
        json j = json::parse(r.out);
        expect(j["complexity"] == "polynomial" && j["engine"] == "xor",
            "2k2 standard routes to xor");

        r = run("classify " + data + "/reflexive-2k2.json --variant list");
        expect_eq(r.code, 0, "classify 2k2 list");
        j = json::parse(r.out);
        expect(j["complexity"] == "np-complete" && ! j["reason"].get<std::string>().empty(),
            "2k2 list variant is hard with a reason");

        r = run("classify " + data + "/k1-union-k2.json");
        j = json::parse(r.out);
        expect(j["complexity"] == "np-complete", "K1 u K2 is hard");

        r = run("classify " + data + "/double-star.json --variant by-side");
        j = json::parse(r.out);
        expect(j["complexity"] == "polynomial" && j["engine"] == "two-sat",
            "double star by side routes to two-sat");

        r = run("classify " + data + "/double-star.json --variant standard");
        j = json::parse(r.out);
        expect(j["complexity"] == "np-complete", "double star standard variant is hard");

        expect_eq(run("classify " + data + "/missing.json").code, 2, "missing file");
        expect_eq(run("classify " + data + "/bad-nonbijective.json").code, 2,
            "target parse failure");
    }

    // solve: answers, exit codes, witness re-verification
    {
        RunResult r = run("solve " + data + "/fig1-edge.json --engine xor");
        expect_eq(r.code, 0, "solve crossing edge with xor");
        json j = json::parse(r.out);
        expect(j["answer"] == "yes" && j["engine"] == "xor", "xor yes");

        // the witness satisfies x_a + y_a + y_b = 1 in the bit naming
        std::string fx = j["witness"]["x"], fy = j["witness"]["y"];
        int xa = fx[0] - '0', ya = fy[0] - '0', yb = fy[1] - '0';
        expect((xa ^ ya ^ yb) == 1, "witness satisfies the frozen equation");

        // and passes the definitional checker
        corrhom::Instance inst = corrhom::parse_instance(slurp(data + "/fig1-edge.json"));
        corrhom::Assignment f{inst.target.index_of(fx), inst.target.index_of(fy)};
        expect(corrhom::check_assignment(inst, f).ok, "witness re-checks");

        RunResult oracle = run("solve " + data + "/fig1-edge.json --engine oracle");
        RunResult aut = run("solve " + data + "/fig1-edge.json");
        expect(json::parse(oracle.out)["answer"] == json::parse(aut.out)["answer"],
            "oracle agrees with auto");

        expect_eq(run("solve " + data + "/odd-cycle-swap.json --engine propagate").code, 1,
            "odd swap cycle is a no");
        expect_eq(run("solve " + data + "/odd-cycle-swap.json").code, 1,
            "auto agrees on the no");

        expect_eq(run("solve " + data + "/fig1-edge.json --engine propagate").code, 4,
            "forced engine mismatch");
        expect_eq(run("solve " + data + "/bad-nonbijective.json").code, 2,
            "invalid instance");
        expect_eq(run("solve " + data + "/fig1-edge.json --engine oracle --max-nodes 1").code, 3,
            "node budget exhausts");
    }

    // normalize: loop removal, determinism, simple fixpoint
    {
        RunResult r = run("normalize " + data + "/loop-instance.json --seed 7");
        expect_eq(r.code, 0, "normalize loop instance");
        corrhom::Instance out = corrhom::parse_instance(r.out);
        for (const auto & e : out.edges)
            expect(e.u != e.v, "no loops remain");
        expect(out.g_size() == 5, "loop blew into n+1 copies");

        RunResult again = run("normalize " + data + "/loop-instance.json --seed 7");
        expect(r.out == again.out, "normalize is byte-identical per seed");

        RunResult fix = run("normalize " + data + "/fig1-edge.json");
        expect(corrhom::parse_instance(fix.out) ==
            corrhom::parse_instance(slurp(data + "/fig1-edge.json")),
            "simple instances pass through");

        expect_eq(run("normalize " + data + "/odd-cycle-swap.json").code, 0,
            "co-clique target is reflexive, normalize applies");
    }

    // reduce: gadget targets and piped solving
    {
        RunResult r = run("reduce one-in-three-sat " + data + "/sat-one-clause.json");
        expect_eq(r.code, 0, "reduce a satisfiable formula");
        corrhom::Instance inst = corrhom::parse_instance(r.out);
        expect(inst.g_size() == 4 && inst.edges.size() == 3, "one clause, four vertices");

        std::ofstream(tmp + "/reduced.json") << r.out;
        expect_eq(run("solve " + tmp + "/reduced.json").code, 0, "reduced instance solves yes");

        RunResult k4 = run("reduce three-col " + data + "/k4.json");
        expect_eq(k4.code, 0, "reduce K4");
        std::ofstream(tmp + "/k4-reduced.json") << k4.out;
        expect_eq(run("solve " + tmp + "/k4-reduced.json").code, 1,
            "K4 is not 3-colourable");

        expect_eq(run("reduce nonsense " + data + "/k4.json").code, 2, "unknown reduction");
    }

    // generate and selfcheck
    {
        RunResult a = run("generate --shape reflexive-2k2 --g-size 6 --g-edges 7 --seed 11");
        RunResult b = run("generate --shape reflexive-2k2 --g-size 6 --g-edges 7 --seed 11");
        expect_eq(a.code, 0, "generate");
        expect(a.out == b.out, "generate is byte-identical per seed");
        corrhom::Instance inst = corrhom::parse_instance(a.out);
        expect(inst.g_size() == 6, "generated size");

        RunResult s = run("selfcheck --trials 5 --max-g 4 --seed 2");
        expect_eq(s.code, 0, "small selfcheck passes");
        expect(json::parse(s.out)["ok"] == true, "selfcheck report ok");
    }

    std::cout << checks << " checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}
