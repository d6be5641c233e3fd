#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrcolor/checked.hpp"
#include "rrcolor/qseries.hpp"

namespace rrcolor {

struct CountEntry {
    std::string name;
    Int value = 0;
};

/// One grid point of a verification run: which check, its parameters, and
/// every count that was compared.
struct GridRecord {
    std::string check;
    int modulus = 0;
    int residue = 0;
    int n = 0;
    std::optional<int> truncation;  // N of a finitized identity
    std::optional<Box> box;
    std::vector<CountEntry> counts;
    bool pass = true;
};

class VerificationReport {
public:
    VerificationReport() = default;
    explicit VerificationReport(std::string title) : title_(std::move(title)) {}

    const std::string& title() const { return title_; }
    const std::vector<GridRecord>& records() const { return records_; }
    const std::optional<std::string>& counterexample() const { return counterexample_; }

    bool passed() const { return !counterexample_ && all_of_pass(); }

    void add(GridRecord record);
    /// Records a failure that is not a count mismatch (for instance a broken
    /// round trip). Only the first one is kept.
    void fail(const std::string& what);
    /// Appends another report's records and keeps the earliest counterexample.
    void merge(const VerificationReport& other);

    std::string to_text() const;
    std::string to_csv() const;
    std::string to_json() const;

private:
    bool all_of_pass() const;

    std::string title_;
    std::vector<GridRecord> records_;
    std::optional<std::string> counterexample_;
};

/// |A_n(M, r)| against the product, bosonic and fermionic coefficients and
/// the count of partitions into allowed parts, for n = 0..n_max.
VerificationReport verify_theorem5(int M, int r, int n_max, int threads = 1);

/// |A_n| = |C_n|, color_map injective with image C_n (generated directly),
/// and the round trip in both directions, for n = 0..n_max.
VerificationReport verify_theorem6(int M, int r, int n_max, int threads = 1);

/// Gordon family counts against the product coefficients, M = 2k + 1.
VerificationReport verify_gordon(int k, int r, int n_max, int threads = 1);

enum class Parity { odd, even };

/// For every N = 0..N_max: the finitized identity holds exactly, and its
/// left-side coefficients equal |F_n| for the associated box and the count of
/// colored partitions passing the specialised box condition. n_max caps the
/// compared weights (default: the whole polynomial).
VerificationReport verify_finitized(Parity parity, int k, int r, int N_max, std::optional<int> n_max = {},
                                    int threads = 1);

/// Alternative coloring: reports, per n, |A_n| and the number of distinct
/// images under alt_color_map; fails on the first collision.
VerificationReport verify_alt_coloring(int M, int r, int n_max, int threads = 1);

struct GridOptions {
    int modulus_min = 4;
    int modulus_max = 9;
    int n_max = 30;
    int odd_N_max = 12;
    int even_N_max = 10;
    int finitized_k_max = 4;
};

/// The count and bijection checks over every (M, r) in the grid, Gordon for
/// every odd M in it, and both finitized families for k = 2..finitized_k_max.
VerificationReport verify_all(const GridOptions& options, int threads = 1);

}  // namespace rrcolor
