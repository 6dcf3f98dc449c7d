#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hadwiger/bounds.hpp"
#include "hadwiger/exact.hpp"
#include "hadwiger/experiment.hpp"
#include "hadwiger/families.hpp"

using namespace hadwiger;

namespace {

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep))
        out.push_back(field);
    return out;
}

ExperimentConfig family_config(FamilySpec spec, CheckSelection checks)
{
    ExperimentConfig cfg;
    cfg.source = SourceKind::Family;
    cfg.family = spec;
    cfg.checks = checks;
    return cfg;
}

} // namespace

TEST_CASE("check selection parsing")
{
    CheckSelection c = CheckSelection::parse("thm1,chi_bounds");
    CHECK(c.thm1);
    CHECK(c.chi_bounds);
    CHECK_FALSE(c.thm2);
    CHECK(CheckSelection::parse("all").obs1);
    CHECK_THROWS(CheckSelection::parse("thm9"));
}

TEST_CASE("exhaustive n=5 with every validity check comes back clean")
{
    ExperimentConfig cfg;
    cfg.source = SourceKind::Exhaustive;
    cfg.n = 5;
    cfg.checks = CheckSelection::parse("thm1,thm3,obs1,chi_bounds");
    const auto rows = run_experiment(cfg);
    CHECK(rows.size() == 728);
    CHECK_FALSE(has_validity_violation(rows));
    // informational findings are fine (K_5 exceeds the unrestricted improved
    // bound), hard violations are not
    for (const auto& row : rows)
        for (const auto& token : row.violations)
            CHECK(token == "thm3_unrestricted");
}

TEST_CASE("D_{5,24} row certifies non-interpolation of the degree bounds")
{
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::D;
    spec.r = 5;
    spec.n = 24;
    const auto rows = run_experiment(family_config(spec, CheckSelection::parse("thm2,thm4")));
    REQUIRE(rows.size() == 1);
    const ExperimentRow& row = rows[0];
    CHECK(row.h_certified_lower == 5);
    CHECK(row.brooks == 4);
    CHECK(row.welsh_powell == 4);
    CHECK(row.stacho_delta2 == 4);
    const auto& v = row.violations;
    CHECK(std::count(v.begin(), v.end(), "thm2:brooks") == 1);
    CHECK(std::count(v.begin(), v.end(), "thm2:welsh_powell") == 1);
    CHECK(std::count(v.begin(), v.end(), "thm2:stacho_delta2") == 1);
    CHECK(std::count(v.begin(), v.end(), "thm2:stacho_s") == 0); // bound is 5, not exceeded
    CHECK(std::count(v.begin(), v.end(), "thm4") == 0);
    CHECK_FALSE(has_validity_violation(rows)); // thm2 findings are expected, not violations
}

TEST_CASE("D_{6,35} exceeds the degree-class bound")
{
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::D;
    spec.r = 6;
    spec.n = 35;
    const auto rows = run_experiment(family_config(spec, CheckSelection::parse("thm2")));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].h_certified_lower == 6);
    CHECK(rows[0].stacho_s == 5);
    const auto& v = rows[0].violations;
    CHECK(std::count(v.begin(), v.end(), "thm2:stacho_s") == 1);
}

TEST_CASE("figure-1a row shows the unrestricted improved bound failing")
{
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::Figure1a;
    const auto rows = run_experiment(family_config(spec, CheckSelection::parse("thm1,thm3")));
    REQUIRE(rows.size() == 1);
    const ExperimentRow& row = rows[0];
    CHECK(row.n == 8);
    CHECK(row.m == 10);
    CHECK(row.h == 4);
    CHECK(row.ek == 4);
    CHECK(row.improved == 3);
    CHECK(row.acyclic_clique == true);
    const auto& v = row.violations;
    CHECK(std::count(v.begin(), v.end(), "thm3_unrestricted") == 1);
    CHECK(std::count(v.begin(), v.end(), "thm3") == 0); // the restricted theorem holds
    CHECK(std::count(v.begin(), v.end(), "thm1") == 0);
    CHECK_FALSE(has_validity_violation(rows));
}

TEST_CASE("random source rows are deterministic in the seed")
{
    ExperimentConfig cfg;
    cfg.source = SourceKind::Random;
    cfg.n = 7;
    cfg.edge_probability = 0.5;
    cfg.samples = 40;
    cfg.seed = 20260810;
    cfg.checks = CheckSelection::all();
    const std::string a = emit_csv(run_experiment(cfg));
    const std::string b = emit_csv(run_experiment(cfg));
    CHECK(a == b);
    const std::string serial = emit_csv(run_experiment_serial(cfg));
    CHECK(a == serial);

    cfg.seed = 1;
    CHECK(emit_csv(run_experiment(cfg)) != a);
}

TEST_CASE("CSV layout")
{
    CHECK(emit_csv({})
          == "graph_id,n,m,delta,delta2,s,chi,h,h_certified_lower,ek,chs_sqrt,improved,"
             "brooks,welsh_powell,stacho_delta2,stacho_s,reduced_class,acyclic_clique,"
             "violations\n");

    FamilySpec fig;
    fig.kind = FamilySpec::Kind::Figure1a;
    const auto rows = run_experiment(family_config(fig, CheckSelection::all()));
    const std::string csv = emit_csv(rows);
    const auto lines = split(csv, '\n');
    REQUIRE(lines.size() >= 2);
    const auto header = split(lines[0], ',');
    const auto cells = split(lines[1], ',');
    REQUIRE(header.size() == 19);
    REQUIRE(cells.size() >= 18);
    CHECK(cells[1] == "8");
    CHECK(cells[2] == "10");
    CHECK(cells[6] == "3");  // chi
    CHECK(cells[7] == "4");  // h
    CHECK(cells[9] == "4");  // ek
    CHECK(cells[11] == "3"); // improved
    CHECK(cells[16] == "other");
    CHECK(cells[17] == "1");

    FamilySpec d39;
    d39.kind = FamilySpec::Kind::D;
    d39.r = 3;
    d39.n = 9;
    const auto drows = run_experiment(family_config(d39, CheckSelection::all()));
    const auto dcells = split(split(emit_csv(drows), '\n')[1], ',');
    CHECK(dcells[6] == "3");  // chi
    CHECK(dcells[12] == "4"); // brooks
    CHECK(dcells[14] == "3"); // stacho_delta2 bound: no adjacent degree-3 pair at n=9

    // table format keeps the same cells, space-aligned
    const std::string table = emit_table(drows);
    CHECK(table.find("graph_id") != std::string::npos);
    const bool has_reduced_class = table.find("odd_cycle") != std::string::npos
                                   || table.find("other") != std::string::npos
                                   || table.find("clique") != std::string::npos;
    CHECK(has_reduced_class);
}

TEST_CASE("disconnected family input yields a bounds-free row")
{
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::D;
    spec.r = 3;
    spec.n = 6; // below the connectivity guarantee, and in fact disconnected
    const auto rows = run_experiment(family_config(spec, CheckSelection::all()));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].error.has_value());
    CHECK_FALSE(rows[0].ek.has_value());
    CHECK_FALSE(has_validity_violation(rows));
}

TEST_CASE("violation flags reproduce in isolation")
{
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::TreeClique;
    spec.k = 5;
    ExperimentConfig cfg = family_config(spec, CheckSelection::parse("thm2,thm3"));
    const auto rows = run_experiment(cfg);
    REQUIRE(rows.size() == 1);
    for (const auto& token : rows[0].violations) {
        Graph g = build_tree_clique_counterexample(5);
        if (token == "thm2:brooks")
            CHECK(hadwiger_number(g) > brooks_bound(g));
        else if (token == "thm2:welsh_powell")
            CHECK(hadwiger_number(g) > welsh_powell_bound(degree_sequence(g)));
        else if (token == "thm2:stacho_delta2")
            CHECK(hadwiger_number(g) > stacho_delta2_bound(g));
        else if (token == "thm2:stacho_s")
            CHECK(hadwiger_number(g) > stacho_s_bound(g));
        else if (token == "thm3_unrestricted")
            CHECK(hadwiger_number(g) > improved_bound(g.vertex_count(), g.edge_count()));
    }
    // h(tree-clique k=5) = 5 exceeds brooks = 4
    CHECK(std::count(rows[0].violations.begin(), rows[0].violations.end(), "thm2:brooks") == 1);
}

TEST_CASE("validity-violation classification drives the exit code")
{
    ExperimentRow benign;
    benign.violations = {"thm2:brooks", "thm3_unrestricted", "hc"};
    CHECK_FALSE(has_validity_violation({benign}));
    for (const char* token : {"thm1", "thm3", "obs1", "chi:brooks", "chi:chs_sqrt"}) {
        ExperimentRow bad;
        bad.violations = {token};
        CHECK(has_validity_violation({bad}));
    }
}
