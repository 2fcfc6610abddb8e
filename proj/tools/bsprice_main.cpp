// ============================================================================
// bsprice — command-line front end for the double-series call pricer
// ============================================================================
//
// Subcommands: price, table, compare, converge, validate, bench.
// Documents are CSV (17-significant-digit round-trip formatting, '.' decimal
// separator, no grouping) or JSON (flat objects).  Exit codes: 0 success,
// 1 validation-suite or self-check failure, 2 usage error, 3 domain error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsseries/market.hpp"
#include "bsseries/mellin.hpp"
#include "bsseries/reference_pricers.hpp"
#include "bsseries/series_pricer.hpp"
#include "bsseries/special_functions.hpp"

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Formatting and document plumbing
// ---------------------------------------------------------------------------

/// Lossless decimal rendering of a binary64 value (17 significant digits).
std::string format_full(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

/// Self-check comparison: |a - b| <= 1e-12 * max(1, |b|).
bool cells_equal(double reparsed, double recomputed) {
    return std::abs(reparsed - recomputed) <=
           1e-12 * std::max(1.0, std::abs(recomputed));
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream stream(line);
    std::string cell;
    while (std::getline(stream, cell, ',')) {
        cells.push_back(cell);
    }
    return cells;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& document) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream stream(document);
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty()) {
            rows.push_back(split_csv_line(line));
        }
    }
    return rows;
}

void emit_document(const std::string& output_path, const std::string& document) {
    if (output_path.empty()) {
        std::cout << document;
        return;
    }
    std::ofstream file(output_path);
    if (!file) {
        throw bsseries::ConfigError("cannot open output file: " + output_path);
    }
    file << document;
}

// ---------------------------------------------------------------------------
// Shared flag bundles
// ---------------------------------------------------------------------------

struct MarketFlags {
    double spot = 4000.0;
    double strike = 4000.0;
    double rate = 0.01;
    double vol = 0.2;
    double tau = 1.0;

    bsseries::MarketParams params() const {
        return {spot, strike, rate, vol, tau};
    }
};

void add_market_flags(CLI::App* cmd, MarketFlags& market, bool with_spot_tau) {
    if (with_spot_tau) {
        cmd->add_option("--spot", market.spot, "spot price")
            ->capture_default_str();
        cmd->add_option("--tau", market.tau, "time to expiry in years")
            ->capture_default_str();
    }
    cmd->add_option("--strike", market.strike, "strike")->capture_default_str();
    cmd->add_option("--rate", market.rate, "risk-free rate")
        ->capture_default_str();
    cmd->add_option("--vol", market.vol, "lognormal volatility")
        ->capture_default_str();
}

struct SeriesFlags {
    int max_n = 20;
    int max_m = 20;
    double tolerance = 0.0;
    CLI::Option* tolerance_option = nullptr;

    bsseries::SeriesConfig config() const {
        bsseries::SeriesConfig cfg{max_n, max_m, std::nullopt};
        if (tolerance_option != nullptr && tolerance_option->count() > 0) {
            cfg.tolerance = tolerance;
        }
        return cfg;
    }
};

void add_series_flags(CLI::App* cmd, SeriesFlags& series) {
    cmd->add_option("--max-n", series.max_n, "inner truncation (powers of the forward gap)")
        ->capture_default_str();
    cmd->add_option("--max-m", series.max_m, "column truncation")
        ->capture_default_str();
    series.tolerance_option = cmd->add_option(
        "--tolerance", series.tolerance,
        "adaptive stop: two consecutive column sums below this value");
}

struct OutputFlags {
    std::string format;
    std::string output_path;
    bool self_check = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& out,
                      const std::string& default_format) {
    out.format = default_format;
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", out.output_path,
                    "write the document to this path (default stdout)");
    cmd->add_flag("--self-check", out.self_check,
                  "re-parse the emitted document and recompute every cell");
}

// ---------------------------------------------------------------------------
// price
// ---------------------------------------------------------------------------

const std::vector<std::string> kMethods = {
    "closed_form", "series", "atm_series", "brenner", "quadrature", "contour2d"};

struct PriceOutcome {
    double price = 0.0;
    std::optional<std::pair<int, int>> truncation;
};

PriceOutcome compute_price(const std::string& method,
                           const bsseries::MarketParams& params,
                           const bsseries::SeriesConfig& series_config) {
    PriceOutcome outcome;
    if (method == "closed_form") {
        outcome.price = bsseries::closed_form_call(params);
    } else if (method == "series") {
        const bsseries::TermGrid grid =
            bsseries::build_term_grid(params, series_config);
        outcome.price = grid.cumulative_price.back();
        outcome.truncation = {grid.max_n, grid.max_m};
    } else if (method == "atm_series") {
        outcome.price = bsseries::price_atm_series(params, series_config);
        outcome.truncation = {series_config.max_n, series_config.max_m};
    } else if (method == "brenner") {
        outcome.price = bsseries::brenner_subrahmanyam_atm(params);
    } else if (method == "quadrature") {
        outcome.price = bsseries::green_quadrature_call(params);
    } else {  // contour2d; the flag validator admits nothing else
        outcome.price = bsseries::contour_price_2d(params);
    }
    return outcome;
}

constexpr const char* kPriceCsvHeader =
    "spot,strike,rate,vol,tau,method,price,max_n,max_m,"
    "abs_diff_vs_closed_form,wall_time_ns";

int run_price(const MarketFlags& market, const SeriesFlags& series,
              const std::string& method, const OutputFlags& out) {
    const bsseries::MarketParams params = market.params();
    const bsseries::SeriesConfig series_config = series.config();

    const auto start = std::chrono::steady_clock::now();
    const PriceOutcome outcome = compute_price(method, params, series_config);
    const auto stop = std::chrono::steady_clock::now();
    const long long wall_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
            .count();
    const double abs_diff =
        std::abs(outcome.price - bsseries::closed_form_call(params));

    std::string document;
    if (out.format == "json") {
        ordered_json report;
        report["spot"] = params.spot;
        report["strike"] = params.strike;
        report["rate"] = params.rate;
        report["vol"] = params.vol;
        report["tau"] = params.tau;
        report["method"] = method;
        report["price"] = outcome.price;
        if (outcome.truncation) {
            report["max_n"] = outcome.truncation->first;
            report["max_m"] = outcome.truncation->second;
        }
        report["abs_diff_vs_closed_form"] = abs_diff;
        report["wall_time_ns"] = wall_ns;
        document = report.dump(2) + "\n";
    } else {
        std::ostringstream csv;
        csv << kPriceCsvHeader << "\n";
        csv << format_full(params.spot) << ',' << format_full(params.strike)
            << ',' << format_full(params.rate) << ',' << format_full(params.vol)
            << ',' << format_full(params.tau) << ',' << method << ','
            << format_full(outcome.price) << ',';
        if (outcome.truncation) {
            csv << outcome.truncation->first << ',' << outcome.truncation->second;
        } else {
            csv << ',';
        }
        csv << ',' << format_full(abs_diff) << ',' << wall_ns << "\n";
        document = csv.str();
    }

    if (out.self_check) {
        // Recompute the price and the diff; wall time is not a recomputable cell.
        const PriceOutcome again = compute_price(method, params, series_config);
        double reported_price = outcome.price;
        double reported_diff = abs_diff;
        if (out.format == "json") {
            const auto parsed = nlohmann::json::parse(document);
            reported_price = parsed.at("price").get<double>();
            reported_diff = parsed.at("abs_diff_vs_closed_form").get<double>();
        } else {
            const auto rows = parse_csv(document);
            reported_price = std::strtod(rows.at(1).at(6).c_str(), nullptr);
            reported_diff = std::strtod(rows.at(1).at(9).c_str(), nullptr);
        }
        const double again_diff =
            std::abs(again.price - bsseries::closed_form_call(params));
        if (!cells_equal(reported_price, again.price) ||
            !cells_equal(reported_diff, again_diff)) {
            std::cerr << "self-check failed: emitted price does not match "
                         "recomputation\n";
            return 1;
        }
    }
    emit_document(out.output_path, document);
    return 0;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

std::string render_table_csv(const bsseries::TermGrid& grid) {
    std::ostringstream csv;
    csv << "n";
    for (int m = 1; m <= grid.max_m; ++m) {
        csv << ",m=" << m;
    }
    csv << "\n";
    for (int n = 0; n <= grid.max_n; ++n) {
        csv << n;
        for (int m = 1; m <= grid.max_m; ++m) {
            csv << ',' << format_full(grid.terms[n][m - 1]);
        }
        csv << "\n";
    }
    csv << "Call";
    for (int m = 1; m <= grid.max_m; ++m) {
        csv << ',' << format_full(grid.cumulative_price[m - 1]);
    }
    csv << "\n";
    return csv.str();
}

int run_table(const MarketFlags& market, const SeriesFlags& series,
              const OutputFlags& out) {
    const bsseries::MarketParams params = market.params();
    const bsseries::TermGrid grid =
        bsseries::build_term_grid(params, series.config());

    std::string document;
    if (out.format == "json") {
        ordered_json doc;
        doc["max_n"] = grid.max_n;
        doc["max_m"] = grid.max_m;
        doc["terms"] = grid.terms;
        doc["column_sums"] = grid.column_sums;
        doc["cumulative_price"] = grid.cumulative_price;
        doc["max_abs_term"] = grid.max_abs_term;
        document = doc.dump(2) + "\n";
    } else {
        document = render_table_csv(grid);
    }

    if (out.self_check && out.format == "csv") {
        const auto rows = parse_csv(document);
        const bsseries::SeriesVariables vars =
            bsseries::derive_variables(params);
        const double strike_discount = params.strike * vars.discount;
        for (int n = 0; n <= grid.max_n; ++n) {
            for (int m = 1; m <= grid.max_m; ++m) {
                const double reparsed =
                    std::strtod(rows.at(n + 1).at(m).c_str(), nullptr);
                const double recomputed =
                    bsseries::series_term(vars, strike_discount, n, m);
                if (!cells_equal(reparsed, recomputed)) {
                    std::cerr << "self-check failed at cell (" << n << ", " << m
                              << ")\n";
                    return 1;
                }
            }
        }
    }
    emit_document(out.output_path, document);
    return 0;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

constexpr const char* kCompareCsvHeader =
    "spot,tau,closed_form,series_20x20,abs_diff";

int run_compare(std::vector<double> spots, std::vector<double> taus,
                const MarketFlags& market, const OutputFlags& out) {
    std::sort(spots.begin(), spots.end());
    std::sort(taus.begin(), taus.end());
    const bsseries::SeriesConfig series_config{20, 20, std::nullopt};

    struct Row {
        double spot, tau, closed, series, diff;
    };
    std::vector<Row> table;
    for (const double spot : spots) {
        for (const double tau : taus) {
            bsseries::MarketParams params = market.params();
            params.spot = spot;
            params.tau = tau;
            const double closed = bsseries::closed_form_call(params);
            const double series = bsseries::price_series(params, series_config);
            table.push_back({spot, tau, closed, series, std::abs(series - closed)});
        }
    }

    std::string document;
    if (out.format == "json") {
        ordered_json doc = ordered_json::array();
        for (const Row& row : table) {
            doc.push_back({{"spot", row.spot},
                           {"tau", row.tau},
                           {"closed_form", row.closed},
                           {"series_20x20", row.series},
                           {"abs_diff", row.diff}});
        }
        document = doc.dump(2) + "\n";
    } else {
        std::ostringstream csv;
        csv << kCompareCsvHeader << "\n";
        for (const Row& row : table) {
            csv << format_full(row.spot) << ',' << format_full(row.tau) << ','
                << format_full(row.closed) << ',' << format_full(row.series)
                << ',' << format_full(row.diff) << "\n";
        }
        document = csv.str();
    }

    if (out.self_check && out.format == "csv") {
        const auto rows = parse_csv(document);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            bsseries::MarketParams params = market.params();
            params.spot = std::strtod(rows[i].at(0).c_str(), nullptr);
            params.tau = std::strtod(rows[i].at(1).c_str(), nullptr);
            const double closed = bsseries::closed_form_call(params);
            const double series = bsseries::price_series(params, series_config);
            if (!cells_equal(std::strtod(rows[i].at(2).c_str(), nullptr), closed) ||
                !cells_equal(std::strtod(rows[i].at(3).c_str(), nullptr), series)) {
                std::cerr << "self-check failed at row " << i << "\n";
                return 1;
            }
        }
    }
    emit_document(out.output_path, document);
    return 0;
}

// ---------------------------------------------------------------------------
// converge
// ---------------------------------------------------------------------------

constexpr const char* kConvergeCsvHeader =
    "m,column_sum,cumulative_price,abs_error_vs_closed_form";

int run_converge(const MarketFlags& market, const SeriesFlags& series,
                 const OutputFlags& out) {
    const bsseries::MarketParams params = market.params();
    const bsseries::TermGrid grid =
        bsseries::build_term_grid(params, series.config());
    const double closed = bsseries::closed_form_call(params);

    std::string document;
    if (out.format == "json") {
        ordered_json doc = ordered_json::array();
        for (int m = 1; m <= grid.max_m; ++m) {
            doc.push_back(
                {{"m", m},
                 {"column_sum", grid.column_sums[m - 1]},
                 {"cumulative_price", grid.cumulative_price[m - 1]},
                 {"abs_error_vs_closed_form",
                  std::abs(grid.cumulative_price[m - 1] - closed)}});
        }
        document = doc.dump(2) + "\n";
    } else {
        std::ostringstream csv;
        csv << kConvergeCsvHeader << "\n";
        for (int m = 1; m <= grid.max_m; ++m) {
            csv << m << ',' << format_full(grid.column_sums[m - 1]) << ','
                << format_full(grid.cumulative_price[m - 1]) << ','
                << format_full(std::abs(grid.cumulative_price[m - 1] - closed))
                << "\n";
        }
        document = csv.str();
    }

    if (out.self_check && out.format == "csv") {
        const auto rows = parse_csv(document);
        const bsseries::TermGrid again =
            bsseries::build_term_grid(params, series.config());
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const int m = static_cast<int>(std::strtol(rows[i].at(0).c_str(),
                                                       nullptr, 10));
            if (!cells_equal(std::strtod(rows[i].at(1).c_str(), nullptr),
                             again.column_sums.at(m - 1)) ||
                !cells_equal(std::strtod(rows[i].at(2).c_str(), nullptr),
                             again.cumulative_price.at(m - 1))) {
                std::cerr << "self-check failed at m = " << m << "\n";
                return 1;
            }
        }
    }
    emit_document(out.output_path, document);
    return 0;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int run_validate(const bsseries::ContourSpec& spec, const OutputFlags& out) {
    if (!bsseries::in_convergence_polyhedron(spec)) {
        throw bsseries::DomainError(
            "contour outside convergence polyhedron (need 2*c1 + c2 > 2 and "
            "0 < c2 < 1)");
    }
    std::ostringstream report;
    bool all_pass = true;
    const auto line = [&](const std::string& name, bool pass,
                          const std::string& detail) {
        report << (pass ? "[PASS] " : "[FAIL] ") << name << ": " << detail
               << "\n";
        all_pass = all_pass && pass;
    };

    // 1-D Cahen-Mellin inversion against the exponential and its residue
    // series.  This is a fixed self-test of the inversion machinery, so it
    // always runs at the default line and resolution; the command-line
    // contour flags configure the 2-D checks below.
    {
        const bsseries::ContourSpec one_d{};
        double worst_exp = 0.0;
        double worst_residue = 0.0;
        for (const double x : {0.1, 1.0, 5.0}) {
            const double inverse = bsseries::cahen_mellin_inverse(x, one_d);
            worst_exp = std::max(worst_exp, std::abs(inverse - std::exp(-x)));
            worst_residue = std::max(
                worst_residue,
                std::abs(inverse - bsseries::residue_series_exponential(x, 40)));
        }
        line("cahen-mellin-1d",
             worst_exp <= 1e-8 && worst_residue <= 1e-7,
             "max |inverse - exp(-x)| = " + format_full(worst_exp) +
                 " (tol 1e-8), max |inverse - residue series| = " +
                 format_full(worst_residue) + " (tol 1e-7)");
    }

    // 2-D contour against the double series on the two reference parameter sets.
    const bsseries::MarketParams short_expiry{3800.0, 4000.0, 0.01, 0.2, 1.0};
    const bsseries::MarketParams long_expiry{3800.0, 4000.0, 0.01, 0.2, 5.0};
    const bsseries::SeriesConfig series_config{20, 20, std::nullopt};
    const double contour_short =
        bsseries::contour_price_2d(short_expiry, spec);
    {
        const double contour_long =
            bsseries::contour_price_2d(long_expiry, spec);
        const double err_short = std::abs(
            contour_short - bsseries::price_series(short_expiry, series_config));
        const double err_long = std::abs(
            contour_long - bsseries::price_series(long_expiry, series_config));
        const double worst = std::max(err_short, err_long);
        line("contour-vs-series-2d", worst <= 1e-3,
             "max |contour - series| = " + format_full(worst) +
                 " (tol 1e-3); the truncated tensor integral grows with "
                 "height instead of settling — see README");
    }

    // Contour independence: three admissible abscissa pairs.
    {
        std::vector<bsseries::ContourSpec> specs = {
            spec,
            {1.6, 0.3, spec.height, spec.step},
            {2.0, 0.7, spec.height, spec.step},
        };
        std::vector<double> values = {contour_short};
        for (std::size_t i = 1; i < specs.size(); ++i) {
            values.push_back(
                bsseries::contour_price_2d(short_expiry, specs[i]));
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (std::size_t j = i + 1; j < values.size(); ++j) {
                worst = std::max(worst, std::abs(values[i] - values[j]));
            }
        }
        line("contour-independence", worst <= 2e-3,
             "max pairwise |difference| over 3 abscissa pairs = " +
                 format_full(worst) + " (tol 2e-3)");
    }

    report << (all_pass ? "all checks passed\n" : "checks failed\n");
    emit_document(out.output_path, report.str());
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

constexpr const char* kBenchCsvHeader = "method,params_per_sec,mean_ns,p99_ns";

std::vector<std::string> split_methods(const std::string& csv_list) {
    std::vector<std::string> methods;
    std::stringstream stream(csv_list);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (!token.empty()) {
            methods.push_back(token);
        }
    }
    return methods;
}

int run_bench(long long repetitions, int grid_size,
              const std::string& methods_list, const OutputFlags& out) {
    const std::vector<std::string> methods = split_methods(methods_list);
    for (const std::string& method : methods) {
        if (std::find(kMethods.begin(), kMethods.end(), method) ==
            kMethods.end()) {
            throw CLI::ValidationError("--methods",
                                       "unknown method: " + method);
        }
    }
    if (repetitions < 0 || grid_size < 1) {
        throw bsseries::ConfigError(
            "bench: repetitions must be >= 0 and grid size >= 1");
    }

    // Randomized but reproducible valid-parameter grid, drawn per method so
    // each method is timed inside its own domain: the ATM series only exists
    // on the forward line, and the 2-D contour representation requires
    // z^2/2 > log forward moneyness.
    const auto make_grid = [grid_size](const std::string& method) {
        std::mt19937_64 rng(42);
        std::uniform_real_distribution<double> moneyness(0.8, 1.2);
        std::uniform_real_distribution<double> vol(0.1, 0.4);
        std::uniform_real_distribution<double> tau(0.25, 5.0);
        std::uniform_real_distribution<double> rate(0.0, 0.04);
        std::vector<bsseries::MarketParams> grid;
        grid.reserve(grid_size);
        while (grid.size() < static_cast<std::size_t>(grid_size)) {
            bsseries::MarketParams params{4000.0 * moneyness(rng), 4000.0,
                                          rate(rng), vol(rng), tau(rng)};
            if (method == "atm_series") {
                params.spot =
                    params.strike * std::exp(-params.rate * params.tau);
            } else if (method == "contour2d") {
                const bsseries::SeriesVariables vars =
                    bsseries::derive_variables(params);
                if (!(0.5 * vars.z * vars.z > vars.log_moneyness)) {
                    continue;
                }
            }
            grid.push_back(params);
        }
        return grid;
    };

    const bsseries::SeriesConfig series_config{20, 20, std::nullopt};
    std::ostringstream csv;
    csv << kBenchCsvHeader << "\n";
    for (const std::string& method : methods) {
        if (repetitions == 0) {
            continue;
        }
        const std::vector<bsseries::MarketParams> grid = make_grid(method);
        std::vector<long long> samples;
        samples.reserve(static_cast<std::size_t>(repetitions));
        double sink = 0.0;
        for (long long i = 0; i < repetitions; ++i) {
            const bsseries::MarketParams& params =
                grid[static_cast<std::size_t>(i) % grid.size()];
            const auto start = std::chrono::steady_clock::now();
            sink += compute_price(method, params, series_config).price;
            const auto stop = std::chrono::steady_clock::now();
            samples.push_back(
                std::chrono::duration_cast<std::chrono::nanoseconds>(stop -
                                                                     start)
                    .count());
        }
        if (!std::isfinite(sink)) {
            std::cerr << "bench: non-finite price encountered\n";
        }
        std::sort(samples.begin(), samples.end());
        const double mean =
            static_cast<double>(std::accumulate(samples.begin(), samples.end(),
                                                0LL)) /
            static_cast<double>(samples.size());
        const std::size_t p99_index = static_cast<std::size_t>(
            std::ceil(0.99 * static_cast<double>(samples.size()))) - 1;
        const long long p99 = samples[std::min(p99_index, samples.size() - 1)];
        csv << method << ',' << format_full(1e9 / mean) << ','
            << format_full(mean) << ',' << p99 << "\n";
    }
    emit_document(out.output_path, csv.str());
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// main
// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{
        "bsprice: European call pricing via a double power series, with "
        "closed-form, quadrature, and contour-integral oracles"};
    app.require_subcommand(1);
    int exit_code = 0;

    // --- price ---
    MarketFlags price_market;
    SeriesFlags price_series_flags;
    OutputFlags price_out;
    std::string price_method = "series";
    CLI::App* price_cmd =
        app.add_subcommand("price", "price one call and report diagnostics");
    add_market_flags(price_cmd, price_market, true);
    add_series_flags(price_cmd, price_series_flags);
    price_cmd->add_option("--method", price_method, "pricing method")
        ->check(CLI::IsMember(kMethods))
        ->capture_default_str();
    add_output_flags(price_cmd, price_out, "json");
    price_cmd->callback([&] {
        exit_code = run_price(price_market, price_series_flags, price_method,
                              price_out);
    });

    // --- table ---
    MarketFlags table_market;
    SeriesFlags table_series;
    OutputFlags table_out;
    CLI::App* table_cmd = app.add_subcommand(
        "table", "emit the full (n, m) term grid with column and Call rows");
    add_market_flags(table_cmd, table_market, true);
    add_series_flags(table_cmd, table_series);
    add_output_flags(table_cmd, table_out, "csv");
    table_cmd->callback(
        [&] { exit_code = run_table(table_market, table_series, table_out); });

    // --- compare ---
    MarketFlags compare_market;
    OutputFlags compare_out;
    std::vector<double> compare_spots = {3800.0, 4000.0, 4200.0};
    std::vector<double> compare_taus = {1.0, 2.0, 3.0, 4.0, 5.0};
    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "closed form vs 20x20 series over a spot/expiry grid");
    add_market_flags(compare_cmd, compare_market, false);
    compare_cmd->add_option("--spots", compare_spots, "spot list")
        ->delimiter(',')
        ->capture_default_str();
    compare_cmd->add_option("--taus", compare_taus, "expiry list (years)")
        ->delimiter(',')
        ->capture_default_str();
    add_output_flags(compare_cmd, compare_out, "csv");
    compare_cmd->callback([&] {
        exit_code =
            run_compare(compare_spots, compare_taus, compare_market, compare_out);
    });

    // --- converge ---
    MarketFlags converge_market;
    SeriesFlags converge_series;
    OutputFlags converge_out;
    converge_market.spot = 3800.0;
    CLI::App* converge_cmd = app.add_subcommand(
        "converge", "column sums and cumulative price per column");
    add_market_flags(converge_cmd, converge_market, true);
    add_series_flags(converge_cmd, converge_series);
    add_output_flags(converge_cmd, converge_out, "csv");
    converge_cmd->callback([&] {
        exit_code = run_converge(converge_market, converge_series, converge_out);
    });

    // --- validate ---
    bsseries::ContourSpec validate_spec;
    OutputFlags validate_out;
    CLI::App* validate_cmd = app.add_subcommand(
        "validate", "run the Mellin validation suite at a given contour");
    validate_cmd->add_option("--c1", validate_spec.c1, "t1 line abscissa")
        ->capture_default_str();
    validate_cmd->add_option("--c2", validate_spec.c2, "t2 line abscissa")
        ->capture_default_str();
    validate_cmd
        ->add_option("--height", validate_spec.height, "imaginary-axis truncation")
        ->capture_default_str();
    validate_cmd->add_option("--step", validate_spec.step, "quadrature step")
        ->capture_default_str();
    validate_cmd->add_option("--output", validate_out.output_path,
                             "write the report to this path (default stdout)");
    validate_cmd->callback(
        [&] { exit_code = run_validate(validate_spec, validate_out); });

    // --- bench ---
    long long bench_repetitions = 10000;
    int bench_grid_size = 64;
    std::string bench_methods = "closed_form,series";
    OutputFlags bench_out;
    CLI::App* bench_cmd = app.add_subcommand(
        "bench", "micro-benchmark pricing methods over a randomized grid");
    bench_cmd
        ->add_option("--repetitions", bench_repetitions, "number of pricings")
        ->capture_default_str();
    bench_cmd->add_option("--grid-size", bench_grid_size,
                          "distinct parameter sets in the cycle")
        ->capture_default_str();
    bench_cmd->add_option("--methods", bench_methods,
                          "comma-separated method list")
        ->capture_default_str();
    bench_cmd->add_option("--output", bench_out.output_path,
                          "write the CSV to this path (default stdout)");
    bench_cmd->callback([&] {
        exit_code = run_bench(bench_repetitions, bench_grid_size, bench_methods,
                              bench_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli_code = app.exit(e);  // prints help or the error message
        return cli_code == 0 ? 0 : 2;
    } catch (const bsseries::ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::overflow_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
