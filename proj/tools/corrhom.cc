#include <corrhom/classify.hh>
#include <corrhom/engines.hh>
#include <corrhom/errors.hh>
#include <corrhom/generate.hh>
#include <corrhom/json_io.hh>
#include <corrhom/oracle.hh>
#include <corrhom/selfcheck.hh>
#include <corrhom/transforms.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace corrhom;
using nlohmann::ordered_json;

namespace
{
    constexpr std::uint64_t default_seed = 1729;

    std::string slurp(const std::string & path)
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw ParseError("cannot read '" + path + "'");
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    }

    std::string answer_name(Answer a)
    {
        switch (a) {
        case Answer::Yes:              return "yes";
        case Answer::No:               return "no";
        case Answer::ResourceExceeded: return "resource-exceeded";
        }
        return "no";
    }

    int cmd_classify(const std::string & path, const std::string & variant_flag)
    {
        Variant variant = Variant::Standard;
        if (variant_flag == "standard")
            variant = Variant::Standard;
        else if (variant_flag == "list")
            variant = Variant::List;
        else if (variant_flag == "by-side")
            variant = Variant::BySide;
        else if (variant_flag == "by-side-list")
            variant = Variant::BySideList;
        else
            throw ValidationError("unknown variant '" + variant_flag + "'");

        TargetGraph h = parse_target(slurp(path));
        Classification c = classify(h, variant);

        ordered_json out;
        out["shape"] = shape_name(c.shape.tag);
        out["variant"] = variant_name(c.variant);
        out["complexity"] = c.polynomial ? "polynomial" : "np-complete";
        if (c.polynomial)
            out["engine"] = c.engine;
        else
            out["reason"] = c.reason;
        if (c.shape.p || c.shape.q) {
            out["params"]["p"] = c.shape.p;
            out["params"]["q"] = c.shape.q;
        }
        if (! c.shape.centers.empty()) {
            auto centers = ordered_json::array();
            TargetGraph stripped = (variant == Variant::Standard || variant == Variant::List)
                    && h.has_loop() ? strip_isolated_loopless(h) : h;
            for (int v : c.shape.centers)
                centers.push_back(stripped.vertices[v]);
            out["params"]["centers"] = centers;
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    int cmd_solve(const std::string & path, const std::string & engine,
        const SearchLimits & limits)
    {
        Instance inst = parse_instance(slurp(path));
        EngineResult r = run_engine(engine, inst, limits);

        ordered_json out;
        out["answer"] = answer_name(r.verdict.answer);
        out["engine"] = r.engine;
        out["fallback"] = r.fallback;
        if (r.verdict.witness) {
            if (! check_assignment(inst, *r.verdict.witness).ok)
                throw InternalError("witness failed re-verification before printing");
            out["witness"] = ordered_json::parse(witness_json(inst, *r.verdict.witness));
        }
        std::cout << out.dump() << "\n";
        switch (r.verdict.answer) {
        case Answer::Yes:              return 0;
        case Answer::No:               return 1;
        case Answer::ResourceExceeded: return 3;
        }
        return 1;
    }

    int cmd_normalize(const std::string & path, bool loops_only, bool parallels_only,
        std::uint64_t seed)
    {
        Instance inst = parse_instance(slurp(path));
        int v0 = inst.g_size(), e0 = static_cast<int>(inst.edges.size());

        Instance out = inst;
        if (! parallels_only)
            out = eliminate_loops(out);
        if (! loops_only)
            out = eliminate_parallel_edges(out, seed);

        std::cerr << "normalize: " << v0 << " vertices, " << e0 << " edges -> "
            << out.g_size() << " vertices, " << out.edges.size() << " edges\n";
        std::cout << emit_instance(out) << "\n";
        return 0;
    }

    int cmd_reduce(const std::string & kind, const std::string & path)
    {
        Instance out;
        if (kind == "one-in-three-sat")
            out = reduce_one_in_three_sat(parse_cnf(slurp(path)));
        else if (kind == "three-col")
            out = reduce_three_colouring(parse_plain_graph(slurp(path)));
        else
            throw ValidationError("unknown reduction '" + kind + "'");
        std::cout << emit_instance(out) << "\n";
        return 0;
    }

    int cmd_generate(const std::string & family, int size_a, int size_b, int g_size,
        int g_edges, bool with_lists, bool no_loops, std::uint64_t seed)
    {
        Rng rng(seed);
        TargetGraph t = make_family_target(family, size_a, size_b, rng);

        Mode mode = t.side ? Mode::BySide : Mode::Standard;
        GenOptions opt;
        opt.g_count = g_size;
        opt.edge_count = g_edges;
        opt.allow_loops = mode == Mode::Standard && ! no_loops;
        opt.with_lists = with_lists;
        Instance inst = random_instance(t, mode, opt, rng);
        std::cout << emit_instance(inst) << "\n";
        return 0;
    }

    int cmd_selfcheck(int trials, int max_g, std::uint64_t seed)
    {
        auto results = run_selfcheck(trials, max_g, seed);

        bool ok = true;
        ordered_json suites = ordered_json::array();
        for (const auto & r : results) {
            std::cerr << r.name << ": " << r.trials << " trials, "
                << r.failures << " failures\n";
            if (r.failures > 0) {
                ok = false;
                std::cerr << "  first failure: " << r.first_failure << "\n";
            }
            ordered_json s;
            s["suite"] = r.name;
            s["trials"] = r.trials;
            s["failures"] = r.failures;
            if (r.failures > 0)
                s["firstFailure"] = r.first_failure;
            suites.push_back(std::move(s));
        }
        ordered_json out;
        out["suites"] = std::move(suites);
        out["ok"] = ok;
        std::cout << out.dump() << "\n";
        return ok ? 0 : 5;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"correspondence homomorphism solver suite"};
    app.require_subcommand(1);

    std::string target_file, instance_file, input_file;
    std::string variant = "standard";
    std::string engine = "auto";
    std::string reduce_kind, family = "reflexive-2k2";
    std::uint64_t seed = default_seed;
    SearchLimits limits;
    bool loops_only = false, parallels_only = false;
    bool with_lists = false, no_loops = false;
    int size_a = 3, size_b = 2, g_size = 4, g_edges = 4;
    int trials = 100, max_g = 6;

    auto * classify_cmd = app.add_subcommand("classify",
        "complexity of the target's problem by its shape");
    classify_cmd->add_option("target", target_file, "target graph JSON file")->required();
    classify_cmd->add_option("--variant", variant,
        "standard | list | by-side | by-side-list");

    auto * solve_cmd = app.add_subcommand("solve", "decide one labeled instance");
    solve_cmd->add_option("instance", instance_file, "instance JSON file")->required();
    solve_cmd->add_option("--engine", engine,
        "auto | oracle | xor | two-sat | propagate | unary | double-k12");
    solve_cmd->add_option("--max-nodes", limits.max_nodes, "search node budget");
    solve_cmd->add_option("--timeout-ms", limits.max_millis, "search time budget");

    auto * normalize_cmd = app.add_subcommand("normalize",
        "remove loops and parallel edges, preserving the answer");
    normalize_cmd->add_option("instance", instance_file, "instance JSON file")->required();
    normalize_cmd->add_flag("--loops-only", loops_only, "only eliminate loops");
    normalize_cmd->add_flag("--parallels-only", parallels_only, "only eliminate parallel edges");
    normalize_cmd->add_option("--seed", seed, "expander sampling seed");

    auto * reduce_cmd = app.add_subcommand("reduce", "emit a hardness gadget instance");
    reduce_cmd->add_option("kind", reduce_kind, "one-in-three-sat | three-col")->required();
    reduce_cmd->add_option("input", input_file, "formula or graph JSON file")->required();

    auto * generate_cmd = app.add_subcommand("generate", "random instance for a target family");
    generate_cmd->add_option("--shape", family, "target family name");
    generate_cmd->add_option("--size-a", size_a, "first family size knob");
    generate_cmd->add_option("--size-b", size_b, "second family size knob");
    generate_cmd->add_option("--g-size", g_size, "input vertex count");
    generate_cmd->add_option("--g-edges", g_edges, "input edge count");
    generate_cmd->add_flag("--with-lists", with_lists, "attach random lists");
    generate_cmd->add_flag("--no-loops", no_loops, "keep the input loop-free");
    generate_cmd->add_option("--seed", seed, "generator seed");

    auto * selfcheck_cmd = app.add_subcommand("selfcheck",
        "engine-versus-oracle and transform-preservation suites");
    selfcheck_cmd->add_option("--trials", trials, "trials per suite");
    selfcheck_cmd->add_option("--max-g", max_g, "largest input vertex count");
    selfcheck_cmd->add_option("--seed", seed, "suite seed");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (classify_cmd->parsed())
            return cmd_classify(target_file, variant);
        if (solve_cmd->parsed())
            return cmd_solve(instance_file, engine, limits);
        if (normalize_cmd->parsed())
            return cmd_normalize(instance_file, loops_only, parallels_only, seed);
        if (reduce_cmd->parsed())
            return cmd_reduce(reduce_kind, input_file);
        if (generate_cmd->parsed())
            return cmd_generate(family, size_a, size_b, g_size, g_edges,
                with_lists, no_loops, seed);
        if (selfcheck_cmd->parsed())
            return cmd_selfcheck(trials, max_g, seed);
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const ValidationError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const DomainMismatch & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const ShapeMismatch & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    catch (const TargetMismatch & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    catch (const NonAffineList & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    catch (const NotApplicable & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    catch (const RetriesExhausted & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
