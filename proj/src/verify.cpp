#include "rrcolor/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "parallel.hpp"
#include "rrcolor/colored.hpp"
#include "rrcolor/enumerate.hpp"

namespace rrcolor {

namespace {

struct CellResult {
    std::vector<GridRecord> records;
    std::optional<std::string> failure;
};

std::string params_label(int M, int r) { return "M=" + std::to_string(M) + " r=" + std::to_string(r); }

bool all_equal(const std::vector<CountEntry>& counts)
{
    return std::all_of(counts.begin(), counts.end(),
                       [&](const CountEntry& e) { return e.value == counts.front().value; });
}

std::string describe_counts(const std::vector<CountEntry>& counts)
{
    std::string out;
    for (const CountEntry& e : counts) {
        if (!out.empty())
            out += ' ';
        out += e.name + "=" + std::to_string(e.value);
    }
    return out;
}

void collect(VerificationReport& report, std::vector<CellResult>&& cells)
{
    // A cell's own diagnosis is more specific than the count mismatch.
    for (CellResult& cell : cells) {
        if (cell.failure)
            report.fail(*cell.failure);
        for (GridRecord& record : cell.records)
            report.add(std::move(record));
    }
}

GridRecord make_record(std::string check, int M, int r, int n)
{
    GridRecord rec;
    rec.check = std::move(check);
    rec.modulus = M;
    rec.residue = r;
    rec.n = n;
    return rec;
}

Int coefficient_or_zero(const std::vector<Int>& v, int n)
{
    return n >= 0 && static_cast<std::size_t>(n) < v.size() ? v[static_cast<std::size_t>(n)] : 0;
}

}  // namespace

// ------------------------------------------------------------- report

bool VerificationReport::all_of_pass() const
{
    return std::all_of(records_.begin(), records_.end(), [](const GridRecord& r) { return r.pass; });
}

void VerificationReport::add(GridRecord record)
{
    if (!record.pass && !counterexample_) {
        std::string what = record.check + " " + params_label(record.modulus, record.residue);
        if (record.truncation)
            what += " N=" + std::to_string(*record.truncation);
        what += " n=" + std::to_string(record.n) + ": " + describe_counts(record.counts);
        counterexample_ = what;
    }
    records_.push_back(std::move(record));
}

void VerificationReport::fail(const std::string& what)
{
    if (!counterexample_)
        counterexample_ = what;
}

void VerificationReport::merge(const VerificationReport& other)
{
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
    if (!counterexample_ && other.counterexample_)
        counterexample_ = other.counterexample_;
}

std::string VerificationReport::to_text() const
{
    std::ostringstream out;
    if (!title_.empty())
        out << title_ << '\n';

    std::size_t i = 0;
    while (i < records_.size()) {
        // One aligned block per run of records sharing a check name.
        std::size_t end = i;
        while (end < records_.size() && records_[end].check == records_[i].check)
            ++end;
        const bool finitized = records_[i].truncation.has_value();

        std::vector<std::string> header{"M", "r"};
        if (finitized)
            header.insert(header.end(), {"N", "u", "v"});
        header.push_back("n");
        for (const CountEntry& e : records_[i].counts)
            header.push_back(e.name);
        header.push_back("status");

        std::vector<std::vector<std::string>> rows{header};
        for (std::size_t j = i; j < end; ++j) {
            const GridRecord& rec = records_[j];
            std::vector<std::string> row{std::to_string(rec.modulus), std::to_string(rec.residue)};
            if (finitized) {
                row.push_back(std::to_string(rec.truncation.value_or(0)));
                row.push_back(rec.box ? std::to_string(rec.box->cols) : "-");
                row.push_back(rec.box ? std::to_string(rec.box->rows) : "-");
            }
            row.push_back(std::to_string(rec.n));
            for (const CountEntry& e : rec.counts)
                row.push_back(std::to_string(e.value));
            row.push_back(rec.pass ? "ok" : "FAIL");
            rows.push_back(std::move(row));
        }
        std::vector<std::size_t> width(header.size(), 0);
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
                width[c] = std::max(width[c], row[c].size());

        out << "== " << records_[i].check << " ==\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c)
                    out << "  ";
                const std::size_t w = c < width.size() ? width[c] : row[c].size();
                if (c + 1 == row.size())
                    out << row[c];
                else
                    out << std::string(w - row[c].size(), ' ') << row[c];
            }
            out << '\n';
        }
        i = end;
    }
    if (passed())
        out << "PASS (" << records_.size() << " grid points)\n";
    else
        out << "FAIL: " << counterexample_.value_or("record marked failed") << '\n';
    return out.str();
}

std::string VerificationReport::to_csv() const
{
    std::ostringstream out;
    out << "check,M,r,N,u,v,n,count,value,pass\n";
    for (const GridRecord& rec : records_) {
        for (const CountEntry& e : rec.counts) {
            out << rec.check << ',' << rec.modulus << ',' << rec.residue << ',';
            if (rec.truncation)
                out << *rec.truncation;
            out << ',';
            if (rec.box)
                out << rec.box->cols;
            out << ',';
            if (rec.box)
                out << rec.box->rows;
            out << ',' << rec.n << ',' << e.name << ',' << e.value << ',' << (rec.pass ? "true" : "false") << '\n';
        }
    }
    return out.str();
}

std::string VerificationReport::to_json() const
{
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["title"] = title_;
    doc["passed"] = passed();
    doc["counterexample"] = counterexample_ ? ordered_json(*counterexample_) : ordered_json(nullptr);
    ordered_json records = ordered_json::array();
    for (const GridRecord& rec : records_) {
        ordered_json r;
        r["check"] = rec.check;
        r["M"] = rec.modulus;
        r["r"] = rec.residue;
        if (rec.truncation)
            r["N"] = *rec.truncation;
        if (rec.box) {
            r["u"] = rec.box->cols;
            r["v"] = rec.box->rows;
        }
        r["n"] = rec.n;
        ordered_json counts = ordered_json::object();
        for (const CountEntry& e : rec.counts)
            counts[e.name] = std::to_string(e.value);
        r["counts"] = std::move(counts);
        r["pass"] = rec.pass;
        records.push_back(std::move(r));
    }
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

// -------------------------------------------------------------- checks

VerificationReport verify_theorem5(int M, int r, int n_max, int threads)
{
    const IdentityParams params(M, r);
    VerificationReport report("theorem5 " + params_label(M, r));
    if (n_max < 0)
        return report;
    const TruncatedSeries product = restricted_product(params, n_max);
    const TruncatedSeries bosonic = bosonic_sum(params, n_max);
    const TruncatedSeries fermionic = fermionic_multisum(params, n_max);

    auto cells = detail::parallel_map(n_max + 1, threads, [&](int n) {
        GridRecord rec = make_record("theorem5", M, r, n);
        const auto idx = static_cast<std::size_t>(n);
        rec.counts = {
            {"A", static_cast<Int>(rank_family(params, n).size())},
            {"parts", product_side_count(params, n)},
            {"product", product[idx]},
            {"bosonic", bosonic[idx]},
            {"fermionic", fermionic[idx]},
        };
        rec.pass = all_equal(rec.counts);
        return CellResult{{std::move(rec)}, std::nullopt};
    });
    collect(report, std::move(cells));
    return report;
}

VerificationReport verify_theorem6(int M, int r, int n_max, int threads)
{
    const IdentityParams params(M, r);
    VerificationReport report("theorem6 " + params_label(M, r));
    if (n_max < 0)
        return report;

    auto cells = detail::parallel_map(n_max + 1, threads, [&](int n) {
        CellResult cell;
        const std::string where = "theorem6 " + params_label(M, r) + " n=" + std::to_string(n) + ": ";
        auto note = [&](const std::string& what) {
            if (!cell.failure)
                cell.failure = where + what;
        };

        const std::vector<Partition> family = rank_family(params, n);
        const std::vector<ColoredPartition> direct = colored_family(params, n);
        std::vector<ColoredPartition> image;
        image.reserve(family.size());
        for (const Partition& p : family) {
            try {
                const ColoredPartition c = color_map(p, params);
                image.push_back(c);
                if (const ConditionCheck check = check_conditions(c, params); !check)
                    note(p.to_string() + " maps to " + c.to_string() + " which fails " + check.describe());
                else if (inverse_map(c, params) != p)
                    note("inverse_map(color_map(" + p.to_string() + ")) = " + inverse_map(c, params).to_string());
            } catch (const std::exception& e) {
                note(p.to_string() + ": " + e.what());
            }
        }
        for (const ColoredPartition& c : direct) {
            try {
                const Partition p = inverse_map(c, params);
                if (!in_rank_family(p, params))
                    note(c.to_string() + " decodes to " + p.to_string() + " outside A_n");
                else if (color_map(p, params) != c)
                    note("color_map(inverse_map(" + c.to_string() + ")) = " + color_map(p, params).to_string());
            } catch (const std::exception& e) {
                note(c.to_string() + ": " + e.what());
            }
        }
        std::sort(image.begin(), image.end(), std::greater<>());
        const auto distinct = static_cast<Int>(std::set<ColoredPartition>(image.begin(), image.end()).size());
        if (distinct != static_cast<Int>(image.size()))
            note("color_map is not injective");
        else if (image != direct)
            note("image of color_map differs from the directly generated C_n");

        GridRecord rec = make_record("theorem6", M, r, n);
        rec.counts = {
            {"A", static_cast<Int>(family.size())},
            {"C", static_cast<Int>(direct.size())},
            {"image", distinct},
        };
        rec.pass = all_equal(rec.counts) && !cell.failure;
        cell.records.push_back(std::move(rec));
        return cell;
    });
    collect(report, std::move(cells));
    return report;
}

VerificationReport verify_gordon(int k, int r, int n_max, int threads)
{
    const IdentityParams params(2 * k + 1, r);
    VerificationReport report("gordon k=" + std::to_string(k) + " r=" + std::to_string(r));
    if (n_max < 0)
        return report;
    const TruncatedSeries product = restricted_product(params, n_max);
    auto cells = detail::parallel_map(n_max + 1, threads, [&](int n) {
        GridRecord rec = make_record("gordon", 2 * k + 1, r, n);
        rec.counts = {
            {"gordon", static_cast<Int>(gordon_family(k, r, n).size())},
            {"product", product[static_cast<std::size_t>(n)]},
        };
        rec.pass = all_equal(rec.counts);
        return CellResult{{std::move(rec)}, std::nullopt};
    });
    collect(report, std::move(cells));
    return report;
}

VerificationReport verify_finitized(Parity parity, int k, int r, int N_max, std::optional<int> n_max, int threads)
{
    const bool odd = parity == Parity::odd;
    const int M = odd ? 2 * k + 1 : 2 * k;
    const IdentityParams params(M, r);
    const std::string check = odd ? "finitized-odd" : "finitized-even";
    VerificationReport report(check + " k=" + std::to_string(k) + " r=" + std::to_string(r));
    if (N_max < 0)
        return report;

    auto cells = detail::parallel_map(N_max + 1, threads, [&](int N) {
        CellResult cell;
        const QPolynomial lhs = odd ? fq_odd_lhs(k, r, N) : fq_even_lhs(k, r, N);
        const QPolynomial rhs = odd ? fq_odd_rhs(k, r, N) : fq_even_rhs(k, r, N);
        const Box box = odd ? fq_odd_box(k, r, N) : fq_even_box(k, r, N);
        if (const auto diff = first_difference(lhs.coefficients(), rhs.coefficients()))
            cell.failure = check + " " + params_label(M, r) + " N=" + std::to_string(N) +
                           ": sides differ first at degree " + std::to_string(*diff);

        const std::vector<Int> boxed = boxed_counts(params, box);
        std::vector<Int> colored;
        if (box.cols >= 0 && box.rows >= 0) {
            const int area = box.cols * box.rows;
            if (odd)
                colored = colored_counts(params, N - 1, area, [&](const ColoredPartition& c) {
                    return check_odd_finitized_condition(c, params, N);
                });
            else
                colored = colored_counts(params, 2 * N + k - r - 1, area, [&](const ColoredPartition& c) {
                    return check_even_finitized_condition(c, params, N);
                });
        }

        int limit = std::max({lhs.degree(), rhs.degree(), static_cast<int>(boxed.size()) - 1,
                              static_cast<int>(colored.size()) - 1, 0});
        if (n_max)
            limit = std::min(limit, *n_max);
        for (int n = 0; n <= limit; ++n) {
            GridRecord rec = make_record(check, M, r, n);
            rec.truncation = N;
            rec.box = box;
            rec.counts = {
                {"lhs", lhs.coefficient(n)},
                {"rhs", rhs.coefficient(n)},
                {"F", coefficient_or_zero(boxed, n)},
                {"C_iv", coefficient_or_zero(colored, n)},
            };
            rec.pass = all_equal(rec.counts);
            cell.records.push_back(std::move(rec));
        }
        return cell;
    });
    collect(report, std::move(cells));
    return report;
}

VerificationReport verify_alt_coloring(int M, int r, int n_max, int threads)
{
    const IdentityParams params(M, r);
    VerificationReport report("alt-coloring " + params_label(M, r));
    if (n_max < 0)
        return report;
    auto cells = detail::parallel_map(n_max + 1, threads, [&](int n) {
        CellResult cell;
        std::map<ColoredPartition, Partition> seen;
        for (const Partition& p : rank_family(params, n)) {
            const ColoredPartition c = alt_color_map(p, params);
            const auto [it, inserted] = seen.emplace(c, p);
            if (!inserted && !cell.failure)
                cell.failure = "alt-coloring " + params_label(M, r) + " n=" + std::to_string(n) + ": " +
                               it->second.to_string() + " and " + p.to_string() + " both map to " + c.to_string();
        }
        GridRecord rec = make_record("alt-coloring", M, r, n);
        rec.counts = {
            {"A", static_cast<Int>(rank_family(params, n).size())},
            {"distinct", static_cast<Int>(seen.size())},
        };
        rec.pass = all_equal(rec.counts);
        cell.records.push_back(std::move(rec));
        return cell;
    });
    collect(report, std::move(cells));
    return report;
}

VerificationReport verify_all(const GridOptions& options, int threads)
{
    VerificationReport report("all");
    for (int M = std::max(options.modulus_min, 3); M <= options.modulus_max; ++M)
        for (int r = 1; 2 * r <= M; ++r) {
            report.merge(verify_theorem5(M, r, options.n_max, threads));
            report.merge(verify_theorem6(M, r, options.n_max, threads));
            if (M % 2 == 1)
                report.merge(verify_gordon(M / 2, r, options.n_max, threads));
        }
    for (int k = 2; k <= options.finitized_k_max; ++k)
        for (int r = 1; r <= k; ++r) {
            report.merge(verify_finitized(Parity::odd, k, r, options.odd_N_max, std::nullopt, threads));
            report.merge(verify_finitized(Parity::even, k, r, options.even_N_max, std::nullopt, threads));
        }
    return report;
}

}  // namespace rrcolor
