#include "hadwiger/experiment.hpp"

#include <algorithm>
#include <sstream>

#include "hadwiger/enumerate.hpp"
#include "hadwiger/errors.hpp"

namespace hadwiger {

CheckSelection CheckSelection::all()
{
    CheckSelection c;
    c.thm1 = c.thm2 = c.thm3 = c.thm4 = c.obs1 = c.chi_bounds = c.hadwiger_spotcheck = true;
    return c;
}

CheckSelection CheckSelection::parse(const std::string& names)
{
    CheckSelection c;
    std::istringstream in(names);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (name.empty())
            continue;
        if (name == "all")
            c = all();
        else if (name == "thm1")
            c.thm1 = true;
        else if (name == "thm2")
            c.thm2 = true;
        else if (name == "thm3")
            c.thm3 = true;
        else if (name == "thm4")
            c.thm4 = true;
        else if (name == "obs1")
            c.obs1 = true;
        else if (name == "chi_bounds")
            c.chi_bounds = true;
        else if (name == "hadwiger_conjecture_spotcheck" || name == "spotcheck")
            c.hadwiger_spotcheck = true;
        else
            throw precondition_error("unknown check name: " + name);
    }
    return c;
}

namespace {

std::optional<int> family_witness_size(const FamilySpec& spec, const Graph& g)
{
    switch (spec.kind) {
    case FamilySpec::Kind::D:
        if (spec.n >= spec.r * spec.r - 1 && verify_minor_witness(g, d_r_n_witness(spec.r, spec.n)))
            return spec.r;
        return std::nullopt;
    case FamilySpec::Kind::Figure1a:
        return verify_minor_witness(g, figure_1a_witness()) ? std::optional<int>(4) : std::nullopt;
    case FamilySpec::Kind::TreeClique:
        return verify_minor_witness(g, tree_clique_witness(spec.k)) ? std::optional<int>(spec.k)
                                                                    : std::nullopt;
    }
    return std::nullopt;
}

} // namespace

ExperimentRow evaluate_graph(int graph_id, const Graph& g, const ExperimentConfig& cfg)
{
    ExperimentRow row;
    row.graph_id = graph_id;
    row.n = g.vertex_count();
    row.m = g.edge_count();

    const bool connected = is_connected(g);
    if (connected && row.n >= 1) {
        BoundReport b = evaluate_all(g);
        row.delta = b.delta;
        row.delta2 = b.delta2;
        row.s = b.s;
        row.ek = b.ek;
        row.chs_sqrt = b.chs_sqrt;
        row.improved = b.improved;
        row.brooks = b.brooks;
        row.welsh_powell = b.welsh_powell;
        row.stacho_delta2 = b.stacho_delta2;
        row.stacho_s = b.stacho_s;
        row.reduced = b.reduced;
    } else {
        if (row.n >= 1)
            row.delta = g.max_degree();
        row.error = "disconnected input: bounds and solvers skipped";
        return row;
    }

    const CheckSelection& checks = cfg.checks;
    const bool want_h =
        checks.thm1 || checks.thm2 || checks.thm3 || checks.hadwiger_spotcheck;
    const bool want_chi = checks.chi_bounds || checks.hadwiger_spotcheck;

    try {
        if (want_h) {
            if (row.n <= cfg.limits.max_exact_n) {
                row.h = hadwiger_number(g);
            } else {
                std::optional<int> lower;
                if (cfg.source == SourceKind::Family)
                    lower = family_witness_size(cfg.family, g);
                if (!lower)
                    lower = static_cast<int>(greedy_clique_witness(g).classes.size());
                row.h_certified_lower = lower;
            }
        }
        if (want_chi && row.n <= cfg.limits.max_chi_n)
            row.chi = chromatic_number(g);
        if (checks.thm3 && row.n <= cfg.limits.max_exact_n)
            row.acyclic_clique = has_acyclic_contraction_to_any_clique(g);
    } catch (const resource_error& e) {
        row.error = e.what();
        if (e.has_lower_bound() && !row.h_certified_lower)
            row.h_certified_lower = e.lower_bound();
    }

    auto note = [&row](std::string token) { row.violations.push_back(std::move(token)); };

    if (checks.thm1 && row.h && *row.h > *row.ek)
        note("thm1");

    if (checks.thm3 && row.h && row.acyclic_clique && !*row.acyclic_clique && row.m >= row.n
        && row.improved && *row.h > *row.improved)
        note("thm3");
    if (checks.thm3 && row.improved && row.acyclic_clique && *row.acyclic_clique) {
        const int h_known = row.h ? *row.h : row.h_certified_lower.value_or(0);
        if (h_known > *row.improved)
            note("thm3_unrestricted"); // expected for the counterexample families
    }

    if (checks.thm2) {
        const std::optional<int> h_known = row.h ? row.h : row.h_certified_lower;
        if (h_known) {
            if (*h_known > *row.brooks)
                note("thm2:brooks");
            if (*h_known > *row.welsh_powell)
                note("thm2:welsh_powell");
            if (row.stacho_delta2 && *h_known > *row.stacho_delta2)
                note("thm2:stacho_delta2");
            if (row.stacho_s && *h_known > *row.stacho_s)
                note("thm2:stacho_s");
        }
    }

    if (checks.thm4 && cfg.source == SourceKind::Family
        && cfg.family.kind == FamilySpec::Kind::D) {
        bool ok = g.max_degree() <= 3;
        if (ok) {
            try {
                ok = verify_minor_witness(g, d_r_n_witness(cfg.family.r, cfg.family.n));
            } catch (const not_applicable_error&) {
                ok = false; // n below the witness guarantee
            }
        }
        if (!ok)
            note("thm4");
    }

    if (checks.obs1 && row.n <= cfg.limits.max_exact_n) {
        for (int len = 3; len <= row.n; len += 2) {
            if (has_acyclic_contraction_to_cycle(g, len)
                && !has_acyclic_contraction_to_clique(g, 3)) {
                note("obs1");
                break;
            }
        }
    }

    if (checks.chi_bounds && row.chi) {
        if (*row.chi > *row.brooks)
            note("chi:brooks");
        if (*row.chi > *row.welsh_powell)
            note("chi:welsh_powell");
        if (row.stacho_delta2 && *row.chi > *row.stacho_delta2)
            note("chi:stacho_delta2");
        if (row.stacho_s && *row.chi > *row.stacho_s)
            note("chi:stacho_s");
        if (*row.chi > *row.chs_sqrt)
            note("chi:chs_sqrt");
        if (row.reduced == ReducedClass::Other && row.improved && *row.chi > *row.improved)
            note("chi:improved");
    }

    if (checks.hadwiger_spotcheck && row.chi && row.h && *row.chi > *row.h)
        note("hc");

    return row;
}

namespace {

struct GraphSource {
    int count = 0;
    // materialized graphs for random/family sources; exhaustive sources keep
    // only the edge masks and build graphs inside the evaluation loop
    std::vector<Graph> graphs;
    std::vector<std::uint64_t> masks;
    int mask_n = 0;

    Graph at(int id) const
    {
        if (!graphs.empty())
            return graphs[static_cast<std::size_t>(id)];
        return graph_from_edge_mask(mask_n, masks[static_cast<std::size_t>(id)]);
    }
};

GraphSource make_source(const ExperimentConfig& cfg)
{
    GraphSource source;
    switch (cfg.source) {
    case SourceKind::Exhaustive:
        source.masks = connected_graph_masks(cfg.n);
        source.mask_n = cfg.n;
        source.count = static_cast<int>(source.masks.size());
        break;
    case SourceKind::Random: {
        if (cfg.samples < 1)
            throw precondition_error("random source: need samples >= 1");
        std::mt19937_64 rng(cfg.seed);
        for (int i = 0; i < cfg.samples; ++i)
            source.graphs.push_back(random_connected_graph(cfg.n, cfg.edge_probability, rng));
        source.count = cfg.samples;
        break;
    }
    case SourceKind::Family:
        source.graphs.push_back(build_family(cfg.family));
        source.count = 1;
        break;
    }
    return source;
}

} // namespace

std::vector<ExperimentRow> run_experiment_serial(const ExperimentConfig& cfg)
{
    const GraphSource source = make_source(cfg);
    std::vector<ExperimentRow> rows(static_cast<std::size_t>(source.count));
    for (int id = 0; id < source.count; ++id)
        rows[static_cast<std::size_t>(id)] = evaluate_graph(id, source.at(id), cfg);
    return rows;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg)
{
    const GraphSource source = make_source(cfg);
    std::vector<ExperimentRow> rows(static_cast<std::size_t>(source.count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (int id = 0; id < source.count; ++id)
        rows[static_cast<std::size_t>(id)] = evaluate_graph(id, source.at(id), cfg);
    return rows;
}

bool has_validity_violation(const std::vector<ExperimentRow>& rows)
{
    for (const auto& row : rows)
        for (const auto& token : row.violations)
            if (token == "thm1" || token == "thm3" || token == "obs1"
                || token.rfind("chi:", 0) == 0)
                return true;
    return false;
}

namespace {

const char* kColumns[] = {"graph_id", "n", "m", "delta", "delta2", "s", "chi", "h",
                          "h_certified_lower", "ek", "chs_sqrt", "improved", "brooks",
                          "welsh_powell", "stacho_delta2", "stacho_s", "reduced_class",
                          "acyclic_clique", "violations"};

std::string reduced_name(ReducedClass c)
{
    switch (c) {
    case ReducedClass::Clique:
        return "clique";
    case ReducedClass::OddCycle:
        return "odd_cycle";
    case ReducedClass::Other:
        return "other";
    }
    return "other";
}

template <typename T> std::string cell(const std::optional<T>& v)
{
    return v ? std::to_string(*v) : std::string();
}

std::vector<std::string> row_cells(const ExperimentRow& r)
{
    std::string violations;
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
        if (i)
            violations += ';';
        violations += r.violations[i];
    }
    return {std::to_string(r.graph_id),
            std::to_string(r.n),
            std::to_string(r.m),
            cell(r.delta),
            cell(r.delta2),
            cell(r.s),
            cell(r.chi),
            cell(r.h),
            cell(r.h_certified_lower),
            cell(r.ek),
            cell(r.chs_sqrt),
            cell(r.improved),
            cell(r.brooks),
            cell(r.welsh_powell),
            cell(r.stacho_delta2),
            cell(r.stacho_s),
            r.reduced ? reduced_name(*r.reduced) : std::string(),
            r.acyclic_clique ? std::string(*r.acyclic_clique ? "1" : "0") : std::string(),
            violations};
}

} // namespace

std::string emit_csv(const std::vector<ExperimentRow>& rows)
{
    std::ostringstream out;
    constexpr int ncols = static_cast<int>(std::size(kColumns));
    for (int i = 0; i < ncols; ++i)
        out << (i ? "," : "") << kColumns[i];
    out << '\n';
    for (const auto& row : rows) {
        const auto cells = row_cells(row);
        for (int i = 0; i < ncols; ++i)
            out << (i ? "," : "") << cells[static_cast<std::size_t>(i)];
        out << '\n';
    }
    return out.str();
}

std::string emit_table(const std::vector<ExperimentRow>& rows)
{
    constexpr int ncols = static_cast<int>(std::size(kColumns));
    std::vector<std::size_t> width(ncols);
    for (int i = 0; i < ncols; ++i)
        width[static_cast<std::size_t>(i)] = std::string(kColumns[i]).size();
    std::vector<std::vector<std::string>> table;
    for (const auto& row : rows) {
        table.push_back(row_cells(row));
        for (int i = 0; i < ncols; ++i)
            width[static_cast<std::size_t>(i)] =
                std::max(width[static_cast<std::size_t>(i)], table.back()[static_cast<std::size_t>(i)].size());
    }
    std::ostringstream out;
    auto emit_line = [&](const std::vector<std::string>& cells) {
        for (int i = 0; i < ncols; ++i) {
            if (i)
                out << "  ";
            out << cells[static_cast<std::size_t>(i)];
            for (std::size_t pad = cells[static_cast<std::size_t>(i)].size();
                 pad < width[static_cast<std::size_t>(i)]; ++pad)
                out << ' ';
        }
        out << '\n';
    };
    std::vector<std::string> header(kColumns, kColumns + ncols);
    emit_line(header);
    for (const auto& cells : table)
        emit_line(cells);
    return out.str();
}

std::string emit_report(const std::vector<ExperimentRow>& rows, ReportFormat format)
{
    return format == ReportFormat::Csv ? emit_csv(rows) : emit_table(rows);
}

} // namespace hadwiger
