#include "taylorlab/cli.hpp"

#include "taylorlab/errors.hpp"
#include "taylorlab/expr.hpp"
#include "taylorlab/fixedpoint.hpp"
#include "taylorlab/report.hpp"
#include "taylorlab/simplex.hpp"
#include "taylorlab/taylor.hpp"
#include "taylorlab/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

namespace taylorlab::cli {

namespace {

/// Everything a command may need; which fields are required depends on the command.
struct RunConfig
{
    std::string command;
    std::string function;
    double a = 0.0;
    int order = 0;
    std::vector<double> xs;
    std::vector<std::string> x_ranges;
    double abs_tol = QuadratureConfig{}.abs_tolerance;
    double rel_tol = QuadratureConfig{}.rel_tolerance;
    int max_depth = QuadratureConfig{}.max_subdivision_depth;
    std::uint64_t samples = MonteCarloConfig{}.samples;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    std::string format = "csv";
    std::string out_path;

    double upper = 1.0;

    std::string method = "newton";
    double x0 = 1.0;
    std::string matrix;
    std::string v0;
    double fp_tol = 1e-10;
    int max_iter = 100;

    std::string suite;
    std::optional<std::uint64_t> verify_seed;
    double perturb_basis = 0.0;

    QuadratureConfig quadrature() const
    {
        QuadratureConfig q;
        q.abs_tolerance = abs_tol;
        q.rel_tolerance = rel_tol;
        q.max_subdivision_depth = max_depth;
        q.validate();
        return q;
    }

    unsigned worker_count() const
    {
        if (workers > 0)
            return workers;
        return std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    }
};

/// Usage-level problems found after flag parsing.
class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

double parse_double(std::string_view text, const std::string& what)
{
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    double v = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v))
        throw ConfigError(what + ": '" + std::string(text) + "' is not a finite number");
    return v;
}

std::vector<double> parse_list(std::string_view text, char sep, const std::string& what)
{
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        std::size_t stop = text.find(sep, start);
        out.push_back(parse_double(text.substr(start, stop - start), what));
        if (stop == std::string_view::npos)
            break;
        start = stop + 1;
    }
    return out;
}

/// Explicit --x values followed by each lo:hi:count range, endpoints included.
std::vector<double> evaluation_points(const RunConfig& cfg)
{
    std::vector<double> xs = cfg.xs;
    for (const std::string& range : cfg.x_ranges) {
        auto parts = parse_list(range, ':', "--x-range");
        if (parts.size() != 3 || parts[2] < 1 || parts[2] != std::floor(parts[2]) || parts[2] > 1e6)
            throw ConfigError("--x-range expects lo:hi:count with integer count >= 1");
        const auto count = static_cast<int>(parts[2]);
        for (int k = 0; k < count; ++k)
            xs.push_back(count == 1 ? parts[0] : parts[0] + (parts[1] - parts[0]) * k / (count - 1));
    }
    return xs;
}

void require_order(const RunConfig& cfg)
{
    if (cfg.order < 0 || cfg.order > max_expansion_order)
        throw ConfigError("--n must lie in [0, " + std::to_string(max_expansion_order) + "]");
}

Record base_config(const RunConfig& cfg)
{
    return {{"format", cfg.format}};
}

Record quadrature_config(const QuadratureConfig& q)
{
    return {{"abs_tolerance", q.abs_tolerance},
            {"rel_tolerance", q.rel_tolerance},
            {"max_subdivision_depth", std::int64_t{q.max_subdivision_depth}}};
}

void append(Record& r, const Record& more)
{
    r.insert(r.end(), more.begin(), more.end());
}

Cell optional_cell(const std::optional<double>& v)
{
    return v ? Cell{*v} : Cell{};
}

struct Output
{
    Report report;
    std::vector<std::string> columns;
};

//---------------------------------------------------------------------------//

Output cmd_expand(const RunConfig& cfg)
{
    require_order(cfg);
    const Expr f = parse(cfg.function);
    const auto xs = evaluation_points(cfg);
    const TaylorExpansion t = expand(f, cfg.a, cfg.order);

    Output o;
    o.columns = {"kind", "n", "x", "value"};
    o.report.command = "expand";
    o.report.config = {{"function", render(f)}, {"a", cfg.a}, {"n", std::int64_t{cfg.order}}};
    append(o.report.config, base_config(cfg));

    const auto& c = t.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k)
        o.report.rows.push_back(
            {{"kind", "coefficient"}, {"n", static_cast<std::int64_t>(k)}, {"x", Cell{}}, {"value", c[k]}});
    double fact = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        fact *= k == 0 ? 1.0 : static_cast<double>(k);
        o.report.rows.push_back({{"kind", "scaled_coefficient"},
                                 {"n", static_cast<std::int64_t>(k)},
                                 {"x", Cell{}},
                                 {"value", c[k] / fact}});
    }
    for (double x : xs)
        o.report.rows.push_back({{"kind", "polynomial"},
                                 {"n", std::int64_t{cfg.order}},
                                 {"x", x},
                                 {"value", evaluate_polynomial(t, x)}});
    return o;
}

Output cmd_remainder(const RunConfig& cfg)
{
    require_order(cfg);
    const Expr f = parse(cfg.function);
    const auto xs = evaluation_points(cfg);
    if (xs.empty())
        throw ConfigError("remainder needs at least one --x or --x-range");
    const QuadratureConfig q = cfg.quadrature();

    Output o;
    o.columns = {"x", "direct", "exact_integral", "nested_integral", "sliced", "bound", "max_gap"};
    o.report.command = "remainder";
    o.report.config = {{"function", render(f)}, {"a", cfg.a}, {"n", std::int64_t{cfg.order}}};
    append(o.report.config, quadrature_config(q));
    append(o.report.config, base_config(cfg));

    double worst_gap = 0.0;
    double worst_excess = -HUGE_VAL;
    for (double x : xs) {
        RemainderReport r = remainder_report(f, cfg.a, cfg.order, x, q);
        const double sliced = remainder_by_slicing(f, cfg.a, cfg.order, x, q);
        const double gap = max_pairwise_gap({r.direct, r.exact_integral, r.nested_integral, sliced});
        worst_gap = std::max(worst_gap, gap);
        worst_excess = std::max(worst_excess, std::abs(r.direct) - (r.bound * (1.0 + 1e-9) + 1e-12));
        o.report.rows.push_back({{"x", x},
                                 {"direct", r.direct},
                                 {"exact_integral", r.exact_integral},
                                 {"nested_integral", optional_cell(r.nested_integral)},
                                 {"sliced", sliced},
                                 {"bound", r.bound},
                                 {"max_gap", gap}});
    }
    const double floor = cfg.order + 1 <= max_nested_depth ? 1e-6 : 1e-7;
    o.report.invariants.push_back(
        CheckReport::from_gap("remainder_agreement", worst_gap, std::max(floor, 1e3 * q.abs_tolerance)));
    o.report.invariants.push_back(CheckReport::from_gap("bound_validity", worst_excess, 0.0));
    return o;
}

Output cmd_simplex(const RunConfig& cfg)
{
    const SimplexSpec spec{cfg.order, cfg.a, cfg.upper};
    const MonteCarloConfig mc{cfg.samples, cfg.seed};
    try {
        spec.validate();
        mc.validate();
    } catch (const PreconditionError& e) {
        throw ConfigError(e.what());
    }
    const unsigned workers = cfg.worker_count();
    const double exact = simplex_volume_exact(spec);
    const MonteCarloEstimate est = simplex_volume_montecarlo(spec, mc, workers);
    const double z = est.std_error > 0.0 ? (est.estimate - exact) / est.std_error
                                         : (est.estimate == exact ? 0.0 : HUGE_VAL);

    Output o;
    o.columns = {"dimension", "a", "x",           "samples",        "seed",
                 "exact",     "estimate", "std_error", "z_score", "partition_classified",
                 "partition_discarded", "chi_square", "chi_square_critical", "max_cell_sigma"};
    o.report.command = "simplex";
    o.report.config = {{"dimension", std::int64_t{spec.dimension}},
                       {"a", spec.a},
                       {"x", spec.x},
                       {"samples", static_cast<std::int64_t>(mc.samples)},
                       {"seed", static_cast<std::int64_t>(mc.seed)}};
    append(o.report.config, base_config(cfg));

    Record row = {{"dimension", std::int64_t{spec.dimension}},
                  {"a", spec.a},
                  {"x", spec.x},
                  {"samples", static_cast<std::int64_t>(mc.samples)},
                  {"seed", static_cast<std::int64_t>(mc.seed)},
                  {"exact", exact},
                  {"estimate", est.estimate},
                  {"std_error", est.std_error},
                  {"z_score", std::isfinite(z) ? Cell{z} : Cell{}}};
    o.report.invariants.push_back(CheckReport::from_gap("exact_vs_montecarlo", std::abs(z), 4.0));

    if (spec.dimension >= 2 && spec.dimension <= 6) {
        PartitionReport p = ordering_partition_check(spec.dimension, mc, workers);
        row.insert(row.end(), {{"partition_classified", static_cast<std::int64_t>(p.classified)},
                               {"partition_discarded", static_cast<std::int64_t>(p.discarded)},
                               {"chi_square", p.chi_square},
                               {"chi_square_critical", p.chi_square_critical},
                               {"max_cell_sigma", p.max_cell_sigma}});
        for (auto& c : p.checks())
            o.report.invariants.push_back(std::move(c));
    } else {
        for (const char* name : {"partition_classified", "partition_discarded", "chi_square",
                                 "chi_square_critical", "max_cell_sigma"})
            row.emplace_back(name, Cell{});
    }
    o.report.rows.push_back(std::move(row));
    return o;
}

Output scalar_fixedpoint(const RunConfig& cfg)
{
    const Expr f = parse(cfg.function);
    Output o;
    o.columns = {"k", "iterate", "residual"};
    o.report.command = "fixedpoint";
    o.report.config = {{"method", cfg.method},
                       {"function", render(f)},
                       {"x0", cfg.x0},
                       {"tol", cfg.fp_tol},
                       {"max_iter", std::int64_t{cfg.max_iter}}};
    append(o.report.config, base_config(cfg));

    ScalarTrace trace =
        cfg.method == "newton"
            ? newton(f, cfg.x0, cfg.fp_tol, cfg.max_iter)
            : iterate_scalar(RealFunction::from_expr(f, Interval::wide()), cfg.x0, cfg.fp_tol, cfg.max_iter);
    for (std::size_t k = 0; k < trace.iterates.size(); ++k)
        o.report.rows.push_back({{"k", static_cast<std::int64_t>(k)},
                                 {"iterate", trace.iterates[k]},
                                 {"residual", k == 0 ? Cell{} : Cell{trace.residuals[k - 1]}}});
    auto c = CheckReport::from_gap("converged", trace.residuals.back(), cfg.fp_tol);
    c.pass = trace.converged;
    o.report.invariants.push_back(std::move(c));
    return o;
}

Output power_fixedpoint(const RunConfig& cfg)
{
    if (cfg.matrix.empty())
        throw ConfigError("--method power needs --matrix \"r00,r01;r10,r11\"");
    std::vector<double> entries;
    std::size_t rows = 0;
    std::size_t start = 0;
    while (true) {
        std::size_t stop = cfg.matrix.find(';', start);
        auto row = parse_list(std::string_view(cfg.matrix).substr(start, stop - start), ',', "--matrix");
        entries.insert(entries.end(), row.begin(), row.end());
        ++rows;
        if (stop == std::string::npos)
            break;
        start = stop + 1;
    }
    const int d = static_cast<int>(rows);
    std::optional<SmallMatrix> m;
    std::vector<double> v0(rows, 1.0);
    try {
        m.emplace(d, entries);
        if (!cfg.v0.empty())
            v0 = parse_list(cfg.v0, ',', "--v0");
    } catch (const PreconditionError& e) {
        throw ConfigError(e.what());
    }
    if (v0.size() != rows)
        throw ConfigError("--v0 must have one entry per matrix row");

    PowerMethodResult res;
    try {
        res = power_method(*m, v0, cfg.fp_tol, cfg.max_iter);
    } catch (const PreconditionError& e) {
        throw ConfigError(e.what());
    }

    Output o;
    o.columns = {"k", "residual", "rayleigh"};
    for (int i = 0; i < d; ++i)
        o.columns.push_back("v" + std::to_string(i));
    o.report.command = "fixedpoint";
    o.report.config = {{"method", cfg.method},
                       {"matrix", cfg.matrix},
                       {"dimension", std::int64_t{d}},
                       {"tol", cfg.fp_tol},
                       {"max_iter", std::int64_t{cfg.max_iter}}};
    append(o.report.config, base_config(cfg));

    for (std::size_t k = 0; k < res.trace.iterates.size(); ++k) {
        const auto& v = res.trace.iterates[k];
        auto mv = m->multiply(v);
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            num += v[i] * mv[i];
            den += v[i] * v[i];
        }
        Record row = {{"k", static_cast<std::int64_t>(k)},
                      {"residual", k == 0 ? Cell{} : Cell{res.trace.residuals[k - 1]}},
                      {"rayleigh", num / den}};
        for (std::size_t i = 0; i < v.size(); ++i)
            row.emplace_back("v" + std::to_string(i), v[i]);
        o.report.rows.push_back(std::move(row));
    }
    auto c = CheckReport::from_gap("converged", res.trace.residuals.back(), cfg.fp_tol);
    c.pass = res.trace.converged;
    c.values = {{"eigenvalue", res.eigenvalue}};
    o.report.invariants.push_back(std::move(c));
    return o;
}

Output cmd_fixedpoint(const RunConfig& cfg)
{
    if (cfg.max_iter < 1)
        throw ConfigError("--max-iter must be >= 1");
    if (!(cfg.fp_tol > 0.0))
        throw ConfigError("--tol must be positive");
    if (cfg.method == "power")
        return power_fixedpoint(cfg);
    if (cfg.function.empty())
        throw ConfigError("--method " + cfg.method + " needs --f");
    return scalar_fixedpoint(cfg);
}

Output cmd_verify(const RunConfig& cfg)
{
    verify::Options opt;
    opt.quadrature = cfg.quadrature();
    opt.perturb_basis = cfg.perturb_basis;
    if (cfg.verify_seed)
        opt.seed = *cfg.verify_seed;
    std::optional<std::string> only;
    if (!cfg.suite.empty()) {
        const auto& names = verify::suite_names();
        if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
            throw ConfigError("unknown suite '" + cfg.suite + "'");
        only = cfg.suite;
    }

    Output o;
    o.columns = {"suite", "check", "pass", "measured_gap", "threshold"};
    o.report.command = "verify";
    o.report.config = {{"suite", only ? Cell{*only} : Cell{}},
                       {"seed", static_cast<std::int64_t>(opt.seed)},
                       {"perturb_basis", opt.perturb_basis}};
    append(o.report.config, quadrature_config(opt.quadrature));
    append(o.report.config, base_config(cfg));

    for (const auto& suite : verify::run_suites(opt, only)) {
        for (const auto& check : suite.checks) {
            o.report.rows.push_back({{"suite", suite.suite},
                                     {"check", check.name},
                                     {"pass", check.pass},
                                     {"measured_gap", check.measured_gap},
                                     {"threshold", check.threshold}});
            CheckReport named = check;
            named.name = suite.suite + "." + check.name;
            o.report.invariants.push_back(std::move(named));
        }
    }
    return o;
}

//---------------------------------------------------------------------------//

void add_output_flags(CLI::App& sub, RunConfig& cfg)
{
    sub.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub.add_option("--out", cfg.out_path, "Output file (default standard output)");
}

void add_quadrature_flags(CLI::App& sub, RunConfig& cfg)
{
    sub.add_option("--tol", cfg.abs_tol, "Absolute quadrature tolerance");
    sub.add_option("--rel-tol", cfg.rel_tol, "Relative quadrature tolerance");
    sub.add_option("--max-depth", cfg.max_depth, "Quadrature subdivision depth cap");
}

void add_expansion_flags(CLI::App& sub, RunConfig& cfg)
{
    sub.add_option("--f", cfg.function, "Function of x")->required();
    sub.add_option("--a", cfg.a, "Expansion base")->required();
    sub.add_option("--n", cfg.order, "Expansion order N")->required();
    sub.add_option("--x", cfg.xs, "Evaluation point (repeatable)")->allow_extra_args(false);
    sub.add_option("--x-range", cfg.x_ranges, "Evaluation grid lo:hi:count (repeatable)")
        ->allow_extra_args(false);
}

std::string failing_names(const Report& r)
{
    std::string names;
    for (const auto& c : r.invariants)
        if (!c.pass)
            names += (names.empty() ? "" : ", ") + c.name;
    return names;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app("Taylor expansion via the fundamental theorem of calculus, with numerical witnesses",
                 "taylorlab");
    app.require_subcommand(1, 1);

    auto* expand_cmd = app.add_subcommand("expand", "Taylor coefficients and P_N at points");
    add_expansion_flags(*expand_cmd, cfg);
    add_output_flags(*expand_cmd, cfg);

    auto* remainder_cmd = app.add_subcommand("remainder", "Remainder computed four ways, with its bound");
    add_expansion_flags(*remainder_cmd, cfg);
    add_quadrature_flags(*remainder_cmd, cfg);
    add_output_flags(*remainder_cmd, cfg);

    auto* simplex_cmd = app.add_subcommand("simplex", "Ordered-simplex volume and order-cell tiling");
    simplex_cmd->add_option("--n", cfg.order, "Dimension")->required();
    simplex_cmd->add_option("--a", cfg.a, "Lower limit");
    simplex_cmd->add_option("--x", cfg.upper, "Upper limit");
    simplex_cmd->add_option("--samples", cfg.samples, "Monte Carlo samples");
    simplex_cmd->add_option("--seed", cfg.seed, "Random seed");
    simplex_cmd->add_option("--workers", cfg.workers, "Worker threads (output does not depend on it)");
    add_output_flags(*simplex_cmd, cfg);

    auto* fixedpoint_cmd = app.add_subcommand("fixedpoint", "Fixed-point, Newton and power iteration");
    fixedpoint_cmd->add_option("--method", cfg.method, "iterate | newton | power")
        ->check(CLI::IsMember({"iterate", "newton", "power"}));
    fixedpoint_cmd->add_option("--f", cfg.function, "Map g (iterate) or function f (newton)");
    fixedpoint_cmd->add_option("--x0", cfg.x0, "Starting point");
    fixedpoint_cmd->add_option("--matrix", cfg.matrix, "Rows separated by ';', entries by ','");
    fixedpoint_cmd->add_option("--v0", cfg.v0, "Start vector, entries separated by ','");
    fixedpoint_cmd->add_option("--tol", cfg.fp_tol, "Stopping tolerance");
    fixedpoint_cmd->add_option("--max-iter", cfg.max_iter, "Iteration cap");
    add_output_flags(*fixedpoint_cmd, cfg);

    auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
    verify_cmd->add_option("--suite", cfg.suite, "Run only this suite");
    verify_cmd->add_option("--seed", cfg.verify_seed, "Random seed for the suites");
    verify_cmd->add_option("--perturb-basis", cfg.perturb_basis,
                           "Fault injection: scale I_a^n 1 by 1 + eps in the basis check");
    add_quadrature_flags(*verify_cmd, cfg);
    add_output_flags(*verify_cmd, cfg);

    std::vector<const char*> argv{"taylorlab"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    Output result;
    try {
        if (cfg.command == "expand")
            result = cmd_expand(cfg);
        else if (cfg.command == "remainder")
            result = cmd_remainder(cfg);
        else if (cfg.command == "simplex")
            result = cmd_simplex(cfg);
        else if (cfg.command == "fixedpoint")
            result = cmd_fixedpoint(cfg);
        else
            result = cmd_verify(cfg);
    } catch (const ParseError& e) {
        err << "taylorlab: " << e.what() << "\n  " << cfg.function << "\n  "
            << std::string(std::min(e.offset(), cfg.function.size()), ' ') << "^\n";
        return exit_usage;
    } catch (const ConfigError& e) {
        err << "taylorlab: " << e.what() << '\n';
        return exit_usage;
    } catch (const PreconditionError& e) {
        err << "taylorlab: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "taylorlab: numeric failure: " << e.what() << '\n';
        return exit_numeric;
    }

    std::ostringstream text;
    if (cfg.format == "json")
        write_json(result.report, text);
    else
        write_csv(result.report, result.columns, text);

    if (cfg.out_path.empty()) {
        out << text.str();
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!(file << text.str())) {
            err << "taylorlab: cannot write " << cfg.out_path << '\n';
            return exit_usage;
        }
    }
    if (!result.report.all_pass()) {
        err << "taylorlab: invariant failure: " << failing_names(result.report) << '\n';
        return exit_invariant_failure;
    }
    return exit_ok;
}

}  // namespace taylorlab::cli
