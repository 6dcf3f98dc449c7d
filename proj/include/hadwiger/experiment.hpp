#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hadwiger/bounds.hpp"
#include "hadwiger/exact.hpp"
#include "hadwiger/families.hpp"
#include "hadwiger/graph.hpp"

namespace hadwiger {

enum class SourceKind { Exhaustive, Random, Family };

struct CheckSelection {
    bool thm1 = false;          // exact h <= ek bound
    bool thm2 = false;          // report certified h above a chromatic bound
    bool thm3 = false;          // no acyclic clique contraction && m >= n => h <= improved
    bool thm4 = false;          // column witness of a D instance accepted, degrees <= 3
    bool obs1 = false;          // odd-cycle acyclic contraction implies a K_3 one
    bool chi_bounds = false;    // exact chi <= every applicable chromatic bound
    bool hadwiger_spotcheck = false; // informational: chi <= h

    bool any() const
    {
        return thm1 || thm2 || thm3 || thm4 || obs1 || chi_bounds || hadwiger_spotcheck;
    }
    static CheckSelection all();
    // comma-separated names: thm1,thm2,thm3,thm4,obs1,chi_bounds,
    // hadwiger_conjecture_spotcheck (or "all"); unknown names are errors
    static CheckSelection parse(const std::string& names);
};

struct ExperimentLimits {
    int max_exact_n = kMaxExactHadwigerN; // exact h and the acyclic predicates
    int max_chi_n = kMaxExactChromaticN;
};

struct ExperimentConfig {
    SourceKind source = SourceKind::Exhaustive;
    int n = 5;                   // exhaustive / random vertex count
    double edge_probability = 0.5;
    int samples = 100;           // random sample count
    FamilySpec family;
    std::uint64_t seed = 0;
    CheckSelection checks;
    ExperimentLimits limits;
};

// One evaluated graph. A violation token is recorded only when both sides of
// the inequality were computed exactly; certified lower bounds may only
// confirm non-interpolation (h_certified_lower > bound, the thm2:* tokens).
// Tokens: thm1, thm3, obs1, chi:<bound>, thm4 (validity; nonzero exit),
// thm2:<bound>, thm3_unrestricted, hc (expected findings / informational).
struct ExperimentRow {
    int graph_id = 0;
    int n = 0;
    std::int64_t m = 0;
    std::optional<int> delta, delta2, s;
    std::optional<int> chi;
    std::optional<int> h;                 // exact, when within limits
    std::optional<int> h_certified_lower; // witness-based otherwise
    std::optional<int> ek, chs_sqrt, improved;
    std::optional<int> brooks, welsh_powell, stacho_delta2, stacho_s;
    std::optional<ReducedClass> reduced;
    std::optional<bool> acyclic_clique;
    std::vector<std::string> violations;
    std::optional<std::string> error; // per-graph resource errors, run continues
};

// Evaluates every sourced graph. Graph generation is serial and
// seed-determined; evaluation runs under OpenMP when available and rows come
// back sorted by graph id, so equal configs give byte-identical reports.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);
// Reference implementation without the parallel loop.
std::vector<ExperimentRow> run_experiment_serial(const ExperimentConfig& cfg);

// True when some row carries a theorem-validity violation
// (thm1 / thm3 / obs1 / chi:*), the exit-code-1 condition.
bool has_validity_violation(const std::vector<ExperimentRow>& rows);

enum class ReportFormat { Csv, Table };

// CSV columns, absent values as empty fields:
// graph_id,n,m,delta,delta2,s,chi,h,h_certified_lower,ek,chs_sqrt,improved,
// brooks,welsh_powell,stacho_delta2,stacho_s,reduced_class,acyclic_clique,
// violations
std::string emit_csv(const std::vector<ExperimentRow>& rows);
std::string emit_table(const std::vector<ExperimentRow>& rows);
std::string emit_report(const std::vector<ExperimentRow>& rows, ReportFormat format);

// Single-graph evaluation used by the runner; exposed for targeted re-checks.
ExperimentRow evaluate_graph(int graph_id, const Graph& g, const ExperimentConfig& cfg);

} // namespace hadwiger
