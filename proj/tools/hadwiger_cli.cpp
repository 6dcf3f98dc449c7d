// Command-line front end: bound reports, exact solves, family construction,
// witness checking and the experiment runner. Exit codes: 0 success, 1 when
// a theorem-validity check (thm1/thm3/obs1/chi_bounds) is violated, 2 on
// usage or parse errors.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "hadwiger/bounds.hpp"
#include "hadwiger/enumerate.hpp"
#include "hadwiger/errors.hpp"
#include "hadwiger/exact.hpp"
#include "hadwiger/experiment.hpp"
#include "hadwiger/families.hpp"
#include "hadwiger/graph_io.hpp"

namespace {

using hadwiger::FamilySpec;

void print_optional(std::ostream& out, const char* name, const std::optional<int>& v)
{
    out << name << ": ";
    if (v)
        out << *v;
    else
        out << "n/a";
    out << '\n';
}

int cmd_bound(const std::string& path)
{
    hadwiger::Graph g = hadwiger::load_graph_file(path);
    hadwiger::BoundReport b = hadwiger::evaluate_all(g);
    std::cout << "n: " << b.n << '\n' << "m: " << b.m << '\n' << "delta: " << b.delta << '\n';
    print_optional(std::cout, "delta2", b.delta2);
    print_optional(std::cout, "s", b.s);
    std::cout << "ek: " << b.ek << '\n' << "chs_sqrt: " << b.chs_sqrt << '\n';
    print_optional(std::cout, "improved", b.improved);
    std::cout << "brooks: " << b.brooks << '\n' << "welsh_powell: " << b.welsh_powell << '\n';
    print_optional(std::cout, "stacho_delta2", b.stacho_delta2);
    print_optional(std::cout, "stacho_s", b.stacho_s);
    const char* reduced = b.reduced == hadwiger::ReducedClass::Clique      ? "clique"
                          : b.reduced == hadwiger::ReducedClass::OddCycle ? "odd_cycle"
                                                                          : "other";
    std::cout << "reduced_class: " << reduced << '\n';
    return 0;
}

int cmd_exact(const std::string& path, bool chi, bool hadwiger_flag,
              const std::string& witness_out)
{
    hadwiger::Graph g = hadwiger::load_graph_file(path);
    const bool both = !chi && !hadwiger_flag;
    if (chi || both)
        std::cout << "chi: " << hadwiger::chromatic_number(g) << '\n';
    if (hadwiger_flag || both) {
        hadwiger::HadwigerSolution sol = hadwiger::hadwiger_solve(g);
        std::cout << "h: " << sol.number << '\n';
        if (!witness_out.empty())
            hadwiger::write_text_file(witness_out, hadwiger::serialize_partition(sol.witness));
    }
    return 0;
}

int cmd_family(const FamilySpec& spec, const std::string& emit_path,
               const std::string& witness_path)
{
    hadwiger::Graph g = hadwiger::build_family(spec);
    const std::string text = hadwiger::serialize_graph(g);
    if (emit_path.empty())
        std::cout << text;
    else
        hadwiger::write_text_file(emit_path, text);
    if (!witness_path.empty()) {
        hadwiger::MinorWitness w;
        switch (spec.kind) {
        case FamilySpec::Kind::D:
            w = hadwiger::d_r_n_witness(spec.r, spec.n);
            break;
        case FamilySpec::Kind::Figure1a:
            w = hadwiger::figure_1a_witness();
            break;
        case FamilySpec::Kind::TreeClique:
            w = hadwiger::tree_clique_witness(spec.k);
            break;
        }
        hadwiger::write_text_file(witness_path, hadwiger::serialize_partition(w));
    }
    return 0;
}

int cmd_check(const std::string& graph_path, const std::string& witness_path)
{
    hadwiger::Graph g = hadwiger::load_graph_file(graph_path);
    hadwiger::MinorWitness w = hadwiger::load_partition_file(witness_path, g.vertex_count());
    if (hadwiger::verify_minor_witness(g, w))
        std::cout << "accepted: witness certifies h >= " << w.classes.size() << '\n';
    else
        std::cout << "rejected\n";
    return 0;
}

FamilySpec::Kind parse_kind(const std::string& kind)
{
    if (kind == "d")
        return FamilySpec::Kind::D;
    if (kind == "fig1a")
        return FamilySpec::Kind::Figure1a;
    if (kind == "treeclique")
        return FamilySpec::Kind::TreeClique;
    throw hadwiger::precondition_error("unknown family kind: " + kind);
}

void apply_config_file(const std::string& path, hadwiger::ExperimentConfig& cfg)
{
    std::ifstream in(path);
    if (!in)
        throw hadwiger::parse_error("cannot open config file: " + path, 0);
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.contains("source")) {
        const std::string s = j["source"];
        if (s == "exhaustive")
            cfg.source = hadwiger::SourceKind::Exhaustive;
        else if (s == "random")
            cfg.source = hadwiger::SourceKind::Random;
        else if (s == "family")
            cfg.source = hadwiger::SourceKind::Family;
        else
            throw hadwiger::precondition_error("unknown source: " + s);
    }
    if (j.contains("n"))
        cfg.n = j["n"];
    if (j.contains("p"))
        cfg.edge_probability = j["p"];
    if (j.contains("samples"))
        cfg.samples = j["samples"];
    if (j.contains("seed"))
        cfg.seed = j["seed"];
    if (j.contains("checks")) {
        std::string joined;
        for (const auto& name : j["checks"])
            joined += std::string(name) + ",";
        cfg.checks = hadwiger::CheckSelection::parse(joined);
    }
    if (j.contains("family")) {
        const auto& f = j["family"];
        if (f.contains("kind"))
            cfg.family.kind = parse_kind(f["kind"]);
        if (f.contains("r"))
            cfg.family.r = f["r"];
        if (f.contains("n"))
            cfg.family.n = f["n"];
        if (f.contains("k"))
            cfg.family.k = f["k"];
    }
    if (j.contains("limits") && j["limits"].contains("max_exact_n"))
        cfg.limits.max_exact_n = j["limits"]["max_exact_n"];
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"clique-contraction (Hadwiger) number bounds, exact desk-scale "
                 "solvers and experiment harness"};
    app.require_subcommand(1);

    std::string graph_path, witness_path, emit_path, witness_out;
    bool flag_chi = false, flag_h = false;

    auto* bound = app.add_subcommand("bound", "print every applicable bound for a graph file");
    bound->add_option("file", graph_path, "graph file")->required();

    auto* exact = app.add_subcommand("exact", "exact chromatic / clique-contraction number");
    exact->add_option("file", graph_path, "graph file")->required();
    exact->add_flag("--chi", flag_chi, "chromatic number only");
    exact->add_flag("--hadwiger", flag_h, "clique-contraction number only");
    exact->add_option("--witness-out", witness_out, "write the solver's witness partition");

    std::string kind = "fig1a";
    FamilySpec spec;
    auto* family = app.add_subcommand("family", "emit a built-in family graph");
    family->add_option("--kind", kind, "d | fig1a | treeclique")->required();
    family->add_option("--r", spec.r, "column count (d)");
    family->add_option("--n", spec.n, "vertex count (d)");
    family->add_option("--k", spec.k, "tree count (treeclique)");
    family->add_option("--emit", emit_path, "write the graph file here instead of stdout");
    family->add_option("--emit-witness", witness_path, "write the family's witness partition");

    auto* check = app.add_subcommand("check", "verify a minor witness partition");
    check->add_option("file", graph_path, "graph file")->required();
    check->add_option("--witness", witness_path, "partition file, one class per line")->required();

    hadwiger::ExperimentConfig cfg;
    std::string source = "exhaustive", checks = "", format = "csv", config_path;
    bool serial = false;
    auto* experiment = app.add_subcommand("experiment", "run checks over a graph population");
    experiment->add_option("--config", config_path, "JSON config; explicit flags override it");
    experiment->add_option("--source", source, "exhaustive | random | family");
    experiment->add_option("--n", cfg.n, "vertex count (exhaustive <= 7, random)");
    experiment->add_option("--p", cfg.edge_probability, "edge probability (random)");
    experiment->add_option("--samples", cfg.samples, "sample count (random)");
    experiment->add_option("--kind", kind, "family kind (family source)");
    experiment->add_option("--r", spec.r, "family r");
    experiment->add_option("--k", spec.k, "family k");
    experiment->add_option("--family-n", spec.n, "family n (d)");
    experiment->add_option("--checks", checks,
                           "comma list: thm1,thm2,thm3,thm4,obs1,chi_bounds,"
                           "hadwiger_conjecture_spotcheck or 'all'");
    experiment->add_option("--seed", cfg.seed, "random seed");
    experiment->add_option("--format", format, "csv | table");
    experiment->add_option("--max-exact-n", cfg.limits.max_exact_n,
                           "largest n handed to the exact solvers");
    experiment->add_flag("--serial", serial, "run the serial reference implementation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bound->parsed())
            return cmd_bound(graph_path);
        if (exact->parsed())
            return cmd_exact(graph_path, flag_chi, flag_h, witness_out);
        if (family->parsed()) {
            spec.kind = parse_kind(kind);
            return cmd_family(spec, emit_path, witness_path);
        }
        if (check->parsed())
            return cmd_check(graph_path, witness_path);
        if (experiment->parsed()) {
            if (!config_path.empty())
                apply_config_file(config_path, cfg);
            if (experiment->count("--source")) {
                if (source == "exhaustive")
                    cfg.source = hadwiger::SourceKind::Exhaustive;
                else if (source == "random")
                    cfg.source = hadwiger::SourceKind::Random;
                else if (source == "family")
                    cfg.source = hadwiger::SourceKind::Family;
                else
                    throw hadwiger::precondition_error("unknown source: " + source);
            }
            if (experiment->count("--kind"))
                cfg.family.kind = parse_kind(kind);
            if (experiment->count("--r"))
                cfg.family.r = spec.r;
            if (experiment->count("--k"))
                cfg.family.k = spec.k;
            if (experiment->count("--family-n"))
                cfg.family.n = spec.n;
            if (!checks.empty())
                cfg.checks = hadwiger::CheckSelection::parse(checks);
            if (!cfg.checks.any())
                cfg.checks = hadwiger::CheckSelection::all();

            const auto rows = serial ? hadwiger::run_experiment_serial(cfg)
                                     : hadwiger::run_experiment(cfg);
            const auto fmt = format == "table" ? hadwiger::ReportFormat::Table
                                               : hadwiger::ReportFormat::Csv;
            std::cout << hadwiger::emit_report(rows, fmt);
            return hadwiger::has_validity_violation(rows) ? 1 : 0;
        }
    } catch (const hadwiger::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const hadwiger::precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const hadwiger::not_applicable_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
