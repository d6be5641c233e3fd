#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rrcolor/colored.hpp"
#include "rrcolor/partition.hpp"
#include "rrcolor/qseries.hpp"
#include "rrcolor/table.hpp"
#include "rrcolor/verify.hpp"

namespace rrcolor::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string format = "text";
    std::string output;
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    // table / coeffs positionals
    int modulus = 0;
    int residue = 0;
    int n = 0;
    std::string form;

    // verify
    std::string scope;
    std::optional<int> opt_modulus;
    std::optional<int> opt_residue;
    std::optional<int> opt_k;
    std::string parity;
    std::optional<int> n_max;
    std::optional<int> N_max;

    // angles
    std::string partition;
};

std::string render_coefficients(std::span<const Int> coeffs, const std::string& format)
{
    if (format == "json") {
        nlohmann::ordered_json doc = to_decimal_strings(coeffs);
        return doc.dump(2) + "\n";
    }
    std::string out;
    if (format == "csv") {
        out = "n,coefficient\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            out += std::to_string(i) + "," + std::to_string(coeffs[i]) + "\n";
        return out;
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(coeffs[i]);
    }
    return out + "\n";
}

std::string render_int_list(std::span<const int> v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
}

std::string cmd_table(const Config& cfg)
{
    const IdentityParams params(cfg.modulus, cfg.residue);
    if (cfg.n < 0)
        throw UsageError("n must be non-negative");
    const auto rows = bijection_table(params, cfg.n);
    if (cfg.format == "csv")
        return render_table_csv(rows);
    if (cfg.format == "json")
        return render_table_json(rows);
    return render_table_text(rows);
}

std::string cmd_coeffs(const Config& cfg)
{
    const IdentityParams params(cfg.modulus, cfg.residue);
    if (cfg.n < 0)
        throw UsageError("truncation order N must be non-negative");
    TruncatedSeries series(0);
    if (cfg.form == "product")
        series = restricted_product(params, cfg.n);
    else if (cfg.form == "bosonic")
        series = bosonic_sum(params, cfg.n);
    else if (cfg.form == "fermionic")
        series = fermionic_multisum(params, cfg.n);
    else
        throw UsageError("unknown series form '" + cfg.form + "'");
    return render_coefficients(series.coefficients(), cfg.format);
}

std::string cmd_angles(const Config& cfg)
{
    const Partition p = Partition::parse(cfg.partition);
    const AngleDecomposition a = angles(p);
    std::vector<int> widths;
    std::vector<int> heights;
    for (const Angle& angle : a.angles()) {
        widths.push_back(angle.width);
        heights.push_back(angle.height);
    }
    const std::vector<int> ranks = successive_ranks(p);
    std::optional<ColoredPartition> colored;
    if (cfg.opt_modulus || cfg.opt_residue) {
        if (!cfg.opt_modulus || !cfg.opt_residue)
            throw UsageError("--M and --r must be given together");
        colored = color_map(p, IdentityParams(*cfg.opt_modulus, *cfg.opt_residue));
    }

    if (cfg.format == "json") {
        nlohmann::ordered_json doc;
        doc["partition"] = p.to_string();
        doc["conjugate"] = conjugate(p).to_string();
        doc["durfee"] = durfee_size(p);
        doc["ranks"] = ranks;
        doc["widths"] = widths;
        doc["heights"] = heights;
        doc["alpha"] = a.lengths();
        if (colored)
            doc["colored"] = colored->to_string();
        return doc.dump(2) + "\n";
    }
    std::vector<std::pair<std::string, std::string>> fields{
        {"partition", p.to_string()},
        {"conjugate", conjugate(p).to_string()},
        {"durfee", std::to_string(durfee_size(p))},
        {"ranks", render_int_list(ranks)},
        {"widths", render_int_list(widths)},
        {"heights", render_int_list(heights)},
        {"alpha", Partition(a.lengths()).to_string()},
    };
    if (colored)
        fields.emplace_back("colored", colored->to_string());
    std::string out;
    if (cfg.format == "csv") {
        out = "field,value\n";
        for (const auto& [k, v] : fields)
            out += k + ",\"" + v + "\"\n";
        return out;
    }
    for (const auto& [k, v] : fields)
        out += k + ": " + v + "\n";
    return out;
}

VerificationReport run_verify(const Config& cfg)
{
    if (cfg.n_max && *cfg.n_max < 0)
        throw UsageError("--n-max must be non-negative");
    if (cfg.N_max && *cfg.N_max < 0)
        throw UsageError("--N-max must be non-negative");

    GridOptions grid;
    if (cfg.n_max)
        grid.n_max = *cfg.n_max;
    const int threads = std::max(cfg.threads, 1);

    // (M, r) pairs selected by --M / --r over the default grid.
    auto pairs = [&](bool odd_only) {
        std::vector<std::pair<int, int>> out;
        const int lo = cfg.opt_modulus ? *cfg.opt_modulus : grid.modulus_min;
        const int hi = cfg.opt_modulus ? *cfg.opt_modulus : grid.modulus_max;
        for (int M = lo; M <= hi; ++M) {
            if (odd_only && M % 2 == 0)
                continue;
            if (cfg.opt_residue) {
                IdentityParams check(M, *cfg.opt_residue);
                out.emplace_back(M, *cfg.opt_residue);
            } else {
                for (int r = 1; 2 * r <= M; ++r)
                    out.emplace_back(M, r);
            }
        }
        return out;
    };

    const std::string& scope = cfg.scope;
    if (scope == "all") {
        if (cfg.opt_modulus || cfg.opt_residue || cfg.opt_k)
            throw UsageError("scope 'all' runs the default grid; use a specific scope for single parameters");
        if (cfg.N_max) {
            grid.odd_N_max = *cfg.N_max;
            grid.even_N_max = *cfg.N_max;
        }
        return verify_all(grid, threads);
    }
    if (scope == "theorem5" || scope == "theorem6" || scope == "alt") {
        VerificationReport report(scope);
        for (const auto& [M, r] : pairs(false)) {
            if (scope == "theorem5")
                report.merge(verify_theorem5(M, r, grid.n_max, threads));
            else if (scope == "theorem6")
                report.merge(verify_theorem6(M, r, grid.n_max, threads));
            else
                report.merge(verify_alt_coloring(M, r, grid.n_max, threads));
        }
        return report;
    }
    if (scope == "gordon") {
        VerificationReport report(scope);
        if (cfg.opt_k) {
            if (cfg.opt_modulus)
                throw UsageError("give either --k or --M for gordon, not both");
            const int k = *cfg.opt_k;
            if (k < 1)
                throw UsageError("--k must be positive");
            std::vector<int> residues;
            if (cfg.opt_residue)
                residues.push_back(*cfg.opt_residue);
            else
                for (int r = 1; r <= k; ++r)
                    residues.push_back(r);
            for (int r : residues) {
                IdentityParams check(2 * k + 1, r);
                report.merge(verify_gordon(k, r, grid.n_max, threads));
            }
            return report;
        }
        if (cfg.opt_modulus && *cfg.opt_modulus % 2 == 0)
            throw UsageError("gordon needs an odd modulus");
        for (const auto& [M, r] : pairs(true))
            report.merge(verify_gordon(M / 2, r, grid.n_max, threads));
        return report;
    }
    if (scope == "finitized") {
        if (cfg.opt_modulus)
            throw UsageError("finitized takes --k and --parity, not --M");
        std::vector<Parity> parities;
        if (cfg.parity.empty() || cfg.parity == "odd")
            parities.push_back(Parity::odd);
        if (cfg.parity.empty() || cfg.parity == "even")
            parities.push_back(Parity::even);
        if (parities.empty())
            throw UsageError("--parity must be odd or even");
        std::vector<int> ks;
        if (cfg.opt_k)
            ks.push_back(*cfg.opt_k);
        else
            for (int k = 2; k <= grid.finitized_k_max; ++k)
                ks.push_back(k);
        VerificationReport report(scope);
        for (Parity parity : parities)
            for (int k : ks) {
                if (k < (parity == Parity::odd ? 1 : 2))
                    throw UsageError("k out of range for this parity");
                std::vector<int> residues;
                if (cfg.opt_residue)
                    residues.push_back(*cfg.opt_residue);
                else
                    for (int r = 1; r <= k; ++r)
                        residues.push_back(r);
                for (int r : residues) {
                    if (r < 1 || r > k)
                        throw UsageError("--r must satisfy 0 < r <= k");
                    const int N_max =
                        cfg.N_max ? *cfg.N_max : (parity == Parity::odd ? grid.odd_N_max : grid.even_N_max);
                    report.merge(verify_finitized(parity, k, r, N_max, cfg.n_max, threads));
                }
            }
        return report;
    }
    throw UsageError("unknown verify scope '" + scope + "'");
}

void emit(const Config& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.output.empty() || cfg.output == "-") {
        out << text;
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file)
        throw UsageError("cannot open output file " + cfg.output);
    file << text;
}

void add_common(CLI::App* sub, Config& cfg)
{
    sub->add_option("-f,--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("-o,--output", cfg.output, "Write to this file instead of standard output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Rank-bounded partitions, their multi-color encoding, and the Rogers-Ramanujan type "
                 "series they count"};
    app.set_config("--config", "", "Read options from a TOML/INI file; flags override it");
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "Bijection table for every member of A_n(M, r)");
    table->add_option("M", cfg.modulus, "Modulus")->required();
    table->add_option("r", cfg.residue, "Residue, 0 < r <= M/2")->required();
    table->add_option("n", cfg.n, "Weight")->required();
    add_common(table, cfg);

    auto* coeffs = app.add_subcommand("coeffs", "Coefficients of one series form up to q^N");
    coeffs->add_option("form", cfg.form, "product | bosonic | fermionic")
        ->required()
        ->check(CLI::IsMember({"product", "bosonic", "fermionic"}));
    coeffs->add_option("M", cfg.modulus, "Modulus")->required();
    coeffs->add_option("r", cfg.residue, "Residue, 0 < r <= M/2")->required();
    coeffs->add_option("N", cfg.n, "Truncation order")->required();
    add_common(coeffs, cfg);

    auto* verify = app.add_subcommand("verify", "Exhaustive verification runs; exit status 1 on any failure");
    verify->add_option("scope", cfg.scope, "all | theorem5 | theorem6 | gordon | finitized | alt")
        ->required()
        ->check(CLI::IsMember({"all", "theorem5", "theorem6", "gordon", "finitized", "alt"}));
    verify->add_option("-M,--M", cfg.opt_modulus, "Single modulus instead of the default grid");
    verify->add_option("-r,--r", cfg.opt_residue, "Single residue");
    verify->add_option("-k,--k", cfg.opt_k, "k for gordon and finitized scopes");
    verify->add_option("-p,--parity", cfg.parity, "odd | even (finitized)")->check(CLI::IsMember({"odd", "even"}));
    verify->add_option("-n,--n-max", cfg.n_max, "Largest weight checked");
    verify->add_option("-N,--N-max", cfg.N_max, "Largest truncation N of the finitized identities");
    verify->add_option("-j,--threads", cfg.threads, "Worker threads (output does not depend on it)");
    add_common(verify, cfg);

    auto* angles_cmd = app.add_subcommand("angles", "Ranks and angle decomposition of one partition");
    angles_cmd->add_option("partition", cfg.partition, "e.g. 7,5,5,5,4,4,2")->required();
    angles_cmd->add_option("-M,--M", cfg.opt_modulus, "Also show the coloring for this modulus");
    angles_cmd->add_option("-r,--r", cfg.opt_residue, "Residue for the coloring");
    add_common(angles_cmd, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    try {
        if (table->parsed()) {
            emit(cfg, cmd_table(cfg), out);
        } else if (coeffs->parsed()) {
            emit(cfg, cmd_coeffs(cfg), out);
        } else if (angles_cmd->parsed()) {
            emit(cfg, cmd_angles(cfg), out);
        } else if (verify->parsed()) {
            const VerificationReport report = run_verify(cfg);
            const std::string text = cfg.format == "json"  ? report.to_json()
                                     : cfg.format == "csv" ? report.to_csv()
                                                           : report.to_text();
            emit(cfg, text, out);
            if (!report.passed()) {
                err << "verification failed: " << report.counterexample().value_or("a record failed") << "\n";
                return verification_failed;
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return success;
}

}  // namespace rrcolor::cli
