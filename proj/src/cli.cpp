#include "xychain/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "xychain/csvio.hpp"
#include "xychain/entanglement.hpp"
#include "xychain/errors.hpp"
#include "xychain/oracle.hpp"
#include "xychain/scans.hpp"

namespace xychain {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Flags {
    double h = 1.0, gamma = 1.0, t = 0.0;
    int alpha = 1, beta = 1;
    double tol = 1e-10;
    int dmax = 8;
    int n_sites = 8;
    double t_max = 3.0;
    std::string k_range = "-3:3";
    std::string grid;    // lo:hi:n
    std::string config;  // a:<d> | b:<d>
    std::string sites;   // i,j,k
    std::string format = "csv";
    std::string out_path;
    bool serial = false;
};

void add_model_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--h", f.h, "transverse field (>= 0)");
    sub->add_option("--gamma", f.gamma, "anisotropy in [0, 1]");
    sub->add_option("--T", f.t, "temperature, reduced units (>= 0)");
    sub->add_option("--tol", f.tol, "quadrature absolute tolerance");
}

void add_geometry_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--alpha", f.alpha, "first gap j - i (>= 1)");
    sub->add_option("--beta", f.beta, "second gap k - j (>= 1)");
}

void add_output_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--format", f.format, "csv | json");
    sub->add_option("--out", f.out_path, "output path (default standard output)");
}

int usage_fail(std::ostream& err, const std::string& msg) {
    err << "error: " << msg << "\n";
    err << "usage: xychain <subcommand> [flags]; run `xychain --help` for details\n";
    return 1;
}

// "lo:hi" -> two ints, lo <= hi.
std::optional<std::pair<int, int>> parse_k_range(const std::string& s) {
    int lo, hi;
    char colon, tail;
    std::istringstream in(s);
    if (!(in >> lo >> colon >> hi) || colon != ':' || (in >> tail)) return std::nullopt;
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

// "lo:hi:n" -> inclusive linspace spec, n >= 1 points.
struct GridSpec {
    double lo, hi;
    int n;
};

std::optional<GridSpec> parse_grid(const std::string& s) {
    double lo, hi;
    int n;
    char c1, c2, tail;
    std::istringstream in(s);
    if (!(in >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || (in >> tail))
        return std::nullopt;
    if (!std::isfinite(lo) || !std::isfinite(hi) || n < 1 || (n == 1 && lo != hi))
        return std::nullopt;
    if (lo > hi) return std::nullopt;
    return GridSpec{lo, hi, n};
}

// "a:<d>" or "b:<d>" with d >= 1.
std::optional<TripleConfig> parse_config(const std::string& s) {
    if (s.size() < 3 || s[1] != ':') return std::nullopt;
    char kind = s[0];
    int d;
    char tail;
    std::istringstream in(s.substr(2));
    if (!(in >> d) || (in >> tail) || d < 1) return std::nullopt;
    if (kind == 'a') return TripleConfig::A(d);
    if (kind == 'b') return TripleConfig::B(d);
    return std::nullopt;
}

// "i,j,k" strictly increasing.
std::optional<std::array<int, 3>> parse_sites(const std::string& s) {
    int i, j, k;
    char c1, c2, tail;
    std::istringstream in(s);
    if (!(in >> i >> c1 >> j >> c2 >> k) || c1 != ',' || c2 != ',' || (in >> tail))
        return std::nullopt;
    if (!(i < j && j < k)) return std::nullopt;
    return std::array<int, 3>{i, j, k};
}

std::optional<std::string> check_model(const Flags& f) {
    if (!(f.h >= 0) || !std::isfinite(f.h)) return "--h must be finite and >= 0";
    if (!(f.gamma >= 0 && f.gamma <= 1)) return "--gamma must lie in [0, 1]";
    if (!(f.t >= 0) || !std::isfinite(f.t)) return "--T must be finite and >= 0";
    if (!(f.tol > 0)) return "--tol must be > 0";
    return std::nullopt;
}

std::optional<std::string> check_geometry(const Flags& f) {
    if (f.alpha < 1) return "--alpha must be >= 1";
    if (f.beta < 1) return "--beta must be >= 1";
    return std::nullopt;
}

const char* cut_name(Cut c) {
    switch (c) {
        case Cut::FirstVsRest: return "first";
        case Cut::MiddleVsRest: return "middle";
        default: return "last";
    }
}

std::string join_cuts(const std::vector<Cut>& cuts) {
    std::string s;
    for (Cut c : cuts) {
        if (!s.empty()) s += '|';
        s += cut_name(c);
    }
    return s;
}

void push_threshold(std::vector<Value>& row, const Threshold& th) {
    row.emplace_back(th.present ? th.value : kNaN);
    row.emplace_back(th.present ? th.half_width : kNaN);
    row.emplace_back(static_cast<std::int64_t>(th.flagged ? 1 : 0));
}

Table g_table(const Flags& f) {
    auto range = parse_k_range(f.k_range);
    ModelParams p{f.h, f.gamma, f.t};
    QuadratureConfig quad{f.tol};
    Table t;
    t.header = {"k", "value"};
    for (int k = range->first; k <= range->second; ++k)
        t.rows.push_back({static_cast<std::int64_t>(k), g_k(k, p, quad)});
    return t;
}

Table correlators_table(const Flags& f) {
    ModelParams p{f.h, f.gamma, f.t};
    CorrelatorSet s = correlator_set({f.alpha, f.beta}, p, QuadratureConfig{f.tol});
    Table t;
    t.header = {"h",        "gamma",    "T",        "alpha",    "beta",
                "z",        "zz_alpha", "zz_beta",  "zz_gamma", "xx_alpha",
                "xx_beta",  "xx_gamma", "yy_alpha", "yy_beta",  "yy_gamma",
                "zzz",      "xxz",      "zxx",      "xzx",      "yyz",
                "zyy",      "yzy"};
    t.rows.push_back({f.h, f.gamma, f.t, static_cast<std::int64_t>(f.alpha),
                      static_cast<std::int64_t>(f.beta), s.z, s.zz_alpha, s.zz_beta,
                      s.zz_gamma, s.xx_alpha, s.xx_beta, s.xx_gamma, s.yy_alpha,
                      s.yy_beta, s.yy_gamma, s.zzz, s.xxz, s.zxx, s.xzx, s.yyz,
                      s.zyy, s.yzy});
    return t;
}

Table rho_table(const Flags& f) {
    ModelParams p{f.h, f.gamma, f.t};
    Rho3 rho = assemble_rho3(correlator_set({f.alpha, f.beta}, p, QuadratureConfig{f.tol}));
    Table t;
    t.header = {"r", "c", "value"};
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            t.rows.push_back({static_cast<std::int64_t>(r), static_cast<std::int64_t>(c),
                              rho.at(r, c)});
    return t;
}

Table analyze_table(const Flags& f) {
    ModelParams p{f.h, f.gamma, f.t};
    EntanglementReport rep = analyze_triple(p, {f.alpha, f.beta}, QuadratureConfig{f.tol});
    Table t;
    t.header = {"h",        "gamma",      "T",        "alpha",   "beta",
                "neg_first", "neg_middle", "neg_last", "conc_ij", "conc_jk",
                "conc_ik",   "npt_cuts",   "classification"};
    t.rows.push_back({f.h, f.gamma, f.t, static_cast<std::int64_t>(f.alpha),
                      static_cast<std::int64_t>(f.beta), rep.neg_first.value,
                      rep.neg_middle.value, rep.neg_last.value, rep.conc_ij, rep.conc_jk,
                      rep.conc_ik, join_cuts(rep.npt_cuts),
                      std::string(class_label(rep.classification))});
    return t;
}

Table range_table(const Flags& f) {
    ModelParams p{f.h, f.gamma, f.t};
    PairRangeResult r = pair_range(p, f.dmax, QuadratureConfig{f.tol});
    Table t;
    t.header = {"h", "gamma", "T", "dmax", "pair_range", "capped"};
    t.rows.push_back({f.h, f.gamma, f.t, static_cast<std::int64_t>(f.dmax),
                      static_cast<std::int64_t>(r.range),
                      static_cast<std::int64_t>(r.capped ? 1 : 0)});
    return t;
}

Table scan_field_table(const Flags& f, const TripleConfig& config, const GridSpec& grid) {
    auto rows = sweep_field(f.gamma, f.t, config, linspace(grid.lo, grid.hi, grid.n),
                            QuadratureConfig{f.tol},
                            f.serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel);
    Table t;
    t.header = {"h",        "t",         "alpha",    "beta",    "neg_first",
                "neg_middle", "neg_last", "conc_ij",  "conc_jk", "conc_ik",
                "class_label", "failed",  "status"};
    for (const SweepRow& r : rows)
        t.rows.push_back({r.h, r.t, static_cast<std::int64_t>(r.alpha),
                          static_cast<std::int64_t>(r.beta), r.neg_first, r.neg_middle,
                          r.neg_last, r.conc_ij, r.conc_jk, r.conc_ik, r.class_label,
                          static_cast<std::int64_t>(r.failed ? 1 : 0), r.status});
    return t;
}

Table scan_thermal_table(const Flags& f, const GridSpec& grid) {
    Table t;
    t.header = {"h",
                "t_c2", "t_c2_halfwidth", "t_c2_flagged",
                "t_c1", "t_c1_halfwidth", "t_c1_flagged",
                "t_n_ext", "t_n_ext_halfwidth", "t_n_ext_flagged",
                "t_n_centr", "t_n_centr_halfwidth", "t_n_centr_flagged"};
    for (double h : linspace(grid.lo, grid.hi, grid.n)) {
        ThresholdSet set = thermal_thresholds(f.gamma, h, f.t_max, QuadratureConfig{f.tol});
        std::vector<Value> row;
        row.emplace_back(h);
        push_threshold(row, set.t_c2);
        push_threshold(row, set.t_c1);
        push_threshold(row, set.t_n_ext);
        push_threshold(row, set.t_n_centr);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table oracle_table(const Flags& f, const std::array<int, 3>& sites) {
    ModelParams p{f.h, f.gamma, f.t};
    CompareReport rep = compare(p, f.n_sites, sites, QuadratureConfig{f.tol});
    Table t;
    t.header = {"quantity", "ed", "ff", "thermo"};
    for (const auto& e : rep.correlators)
        t.rows.push_back({e.name, e.ed, e.ff, e.thermo});
    // Deviation rows carry the max-abs Rho3 disagreement in the two columns
    // being compared.
    t.rows.push_back({std::string("max_rho_dev"), rep.dev_ed_ff, rep.dev_ed_ff, kNaN});
    t.rows.push_back({std::string("max_rho_dev"), rep.dev_ed_thermo, kNaN, rep.dev_ed_thermo});
    t.rows.push_back({std::string("max_rho_dev"), kNaN, rep.dev_ff_thermo, rep.dev_ff_thermo});
    return t;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"three-spin entanglement in the transverse-field XY chain"};
    app.name("xychain");
    // --h is a model flag everywhere, so short help must go.
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    Flags f;

    CLI::App* g = app.add_subcommand("g", "fermionic contraction G_k");
    add_model_flags(g, f);
    g->add_option("--k", f.k_range, "index range lo:hi");
    add_output_flags(g, f);

    CLI::App* corr = app.add_subcommand("correlators", "spin correlators of a triple");
    add_model_flags(corr, f);
    add_geometry_flags(corr, f);
    add_output_flags(corr, f);

    CLI::App* rho = app.add_subcommand("rho", "8x8 three-spin reduced density matrix");
    add_model_flags(rho, f);
    add_geometry_flags(rho, f);
    add_output_flags(rho, f);

    CLI::App* analyze = app.add_subcommand("analyze", "negativities, concurrences, class");
    add_model_flags(analyze, f);
    add_geometry_flags(analyze, f);
    add_output_flags(analyze, f);

    CLI::App* range = app.add_subcommand("range", "largest pair distance with concurrence");
    add_model_flags(range, f);
    range->add_option("--dmax", f.dmax, "search cap (>= 1)");
    add_output_flags(range, f);

    // the scans supply their own field (and, for scan-thermal, temperature)
    // axis, so --h / --T are rejected rather than silently ignored
    CLI::App* scan_field = app.add_subcommand("scan-field", "sweep the field at fixed T");
    scan_field->add_option("--gamma", f.gamma, "anisotropy in [0, 1]");
    scan_field->add_option("--T", f.t, "temperature, reduced units (>= 0)");
    scan_field->add_option("--tol", f.tol, "quadrature absolute tolerance");
    scan_field->add_option("--config", f.config, "a:<d> (pair + far spin) | b:<d> (equal gaps)")
        ->required();
    scan_field->add_option("--grid", f.grid, "field grid lo:hi:n")->required();
    scan_field->add_flag("--serial", f.serial, "disable parallel grid evaluation");
    add_output_flags(scan_field, f);

    CLI::App* scan_thermal =
        app.add_subcommand("scan-thermal", "death temperatures across a field grid");
    scan_thermal->add_option("--gamma", f.gamma, "anisotropy in [0, 1]");
    scan_thermal->add_option("--tol", f.tol, "quadrature absolute tolerance");
    scan_thermal->add_option("--grid", f.grid, "field grid lo:hi:n")->required();
    scan_thermal->add_option("--tmax", f.t_max, "upper bracket temperature (> 0)");
    add_output_flags(scan_thermal, f);

    CLI::App* oracle = app.add_subcommand("oracle-compare", "ED vs free fermions vs bulk");
    add_model_flags(oracle, f);
    add_geometry_flags(oracle, f);
    oracle->add_option("--N", f.n_sites, "chain length (2..14)");
    oracle->add_option("--sites", f.sites, "i,j,k (default: centered from gaps)");
    add_output_flags(oracle, f);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        auto subs = app.get_subcommands();
        out << (subs.empty() ? app : *subs.front()).help();
        return 0;
    } catch (const CLI::ParseError& e) {
        return usage_fail(err, e.what());
    }

    if (auto msg = check_model(f)) return usage_fail(err, *msg);
    OutputFormat format;
    try {
        format = parse_format(f.format);
    } catch (const Error& e) {
        return usage_fail(err, e.what());
    }

    std::function<Table()> job;
    if (g->parsed()) {
        if (!parse_k_range(f.k_range)) return usage_fail(err, "--k expects lo:hi with lo <= hi");
        job = [&] { return g_table(f); };
    } else if (corr->parsed() || rho->parsed() || analyze->parsed()) {
        if (auto msg = check_geometry(f)) return usage_fail(err, *msg);
        if (corr->parsed())
            job = [&] { return correlators_table(f); };
        else if (rho->parsed())
            job = [&] { return rho_table(f); };
        else
            job = [&] { return analyze_table(f); };
    } else if (range->parsed()) {
        if (f.dmax < 1) return usage_fail(err, "--dmax must be >= 1");
        job = [&] { return range_table(f); };
    } else if (scan_field->parsed()) {
        auto config = parse_config(f.config);
        if (!config) return usage_fail(err, "--config expects a:<d> or b:<d> with d >= 1");
        auto grid = parse_grid(f.grid);
        if (!grid) return usage_fail(err, "--grid expects lo:hi:n with lo <= hi, n >= 1");
        job = [&, config, grid] { return scan_field_table(f, *config, *grid); };
    } else if (scan_thermal->parsed()) {
        auto grid = parse_grid(f.grid);
        if (!grid) return usage_fail(err, "--grid expects lo:hi:n with lo <= hi, n >= 1");
        if (!(f.t_max > 0)) return usage_fail(err, "--tmax must be > 0");
        job = [&, grid] { return scan_thermal_table(f, *grid); };
    } else {  // oracle-compare
        if (f.n_sites < 2 || f.n_sites > FiniteChain::kEdMax)
            return usage_fail(err, "--N must lie in [2, 14]");
        std::array<int, 3> sites;
        if (!f.sites.empty()) {
            auto parsed = parse_sites(f.sites);
            if (!parsed) return usage_fail(err, "--sites expects i,j,k strictly increasing");
            sites = *parsed;
        } else {
            if (auto msg = check_geometry(f)) return usage_fail(err, *msg);
            if (f.alpha + f.beta > f.n_sites - 1)
                return usage_fail(err, "geometry does not fit on the chain");
            sites = centered_sites(f.n_sites, {f.alpha, f.beta});
        }
        if (sites[0] < 1 || sites[2] > f.n_sites)
            return usage_fail(err, "--sites must lie in [1, N]");
        job = [&, sites] { return oracle_table(f, sites); };
    }

    try {
        Table table = job();
        if (f.out_path.empty()) {
            emit(table, format, out);
        } else {
            std::ofstream file(f.out_path);
            if (!file) throw Error("cannot open output path: " + f.out_path);
            emit(table, format, file);
            if (!file.good()) throw Error("write failed: " + f.out_path);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace xychain
