#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrcolor/checked.hpp"
#include "rrcolor/partition.hpp"

namespace rrcolor {

/*
 * Modulus M and residue r of a generalized Rogers-Ramanujan identity, with
 * the derived k = floor(M/2) and s = M mod 2 (so M = 2k + s). Partitions in
 * A_n(M, r) have every successive rank in [rank_low(), rank_high()], and the
 * matching colored partitions use colors 1..k-1.
 */
class IdentityParams {
public:
    /// Throws std::invalid_argument unless M >= 3 and 0 < r <= M/2.
    IdentityParams(int modulus, int residue);

    int modulus() const { return modulus_; }
    int residue() const { return residue_; }
    int k() const { return modulus_ / 2; }
    int s() const { return modulus_ % 2; }
    bool even_modulus() const { return s() == 0; }
    int color_count() const { return k() - 1; }

    int rank_low() const { return 2 - residue_; }
    int rank_high() const { return modulus_ - residue_ - 2; }
    bool rank_allowed(int rank) const { return rank >= rank_low() && rank <= rank_high(); }

    friend bool operator==(const IdentityParams&, const IdentityParams&) = default;

private:
    int modulus_;
    int residue_;
};

struct ColoredPart {
    int size = 0;
    int color = 0;

    friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
    friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

/*
 * A multi-color partition: sizes non-increasing, and equal sizes carry
 * non-decreasing colors. The color range is not enforced here; the
 * condition checker reports colors outside 1..k-1.
 */
class ColoredPartition {
public:
    ColoredPartition() = default;

    /// Throws std::invalid_argument if the parts are not in canonical order
    /// or a size is non-positive.
    explicit ColoredPartition(std::vector<ColoredPart> parts);

    /// Stable-sorts equal sizes by color (and sizes descending) first.
    static ColoredPartition normalized(std::vector<ColoredPart> parts);

    std::span<const ColoredPart> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    const ColoredPart& operator[](std::size_t i) const { return parts_[i]; }
    Int weight() const { return weight_; }

    /// The underlying uncolored partition.
    Partition sizes() const;

    friend bool operator==(const ColoredPartition& a, const ColoredPartition& b)
    {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const ColoredPartition& a, const ColoredPartition& b)
    {
        return a.parts_ <=> b.parts_;
    }

    /// "(9_2,1_1)"
    std::string to_string() const;
    static ColoredPartition parse(const std::string& text);

private:
    std::vector<ColoredPart> parts_;
    Int weight_ = 0;
};

enum class Condition {
    none,
    color_range,       // color outside 1..k-1
    initial,           // (i)
    color_difference,  // (ii)
    last_color_parity  // (iii), even M only
};

struct ConditionCheck {
    Condition violated = Condition::none;
    std::size_t index = 0;  // 0-based part index of the first violation

    bool ok() const { return violated == Condition::none; }
    explicit operator bool() const { return ok(); }
    std::string describe() const;
};

/// Thrown when a partition has a successive rank outside the identity's interval.
class RankOutOfRange : public std::domain_error {
public:
    RankOutOfRange(std::size_t index, int rank, const IdentityParams& params);
    std::size_t index() const { return index_; }
    int rank() const { return rank_; }

private:
    std::size_t index_;
    int rank_;
};

/// Color of one angle with the given length and rank.
int angle_color(int length, int rank, const IdentityParams& params);

/// Width of the angle that a part of the given size and color decodes to.
int decoded_width(int size, int color, const IdentityParams& params);

/// Forward map A_n(M, r) -> C_n(M, r): angle lengths colored by rank.
ColoredPartition color_map(const Partition& p, const IdentityParams& params);

/// Inverse of color_map. Throws std::invalid_argument when `c` violates the
/// membership conditions of C_n(M, r), std::logic_error if decoding produces
/// malformed angles anyway.
Partition inverse_map(const ColoredPartition& c, const IdentityParams& params);

/// Checks the color range and conditions (i), (ii), (iii) in that order;
/// reports the first violation.
ConditionCheck check_conditions(const ColoredPartition& c, const IdentityParams& params);

/// |X + 1/2| - 1/2 for integer X, kept in integers.
constexpr Int half_shifted_abs(Int x) { return x >= 0 ? x : -x - 1; }

/// The box condition on the largest part: true iff the preimage of `c` fits
/// in a rectangle of `rows` rows and `cols` columns (u = cols, v = rows).
/// The empty colored partition always passes.
bool check_box_condition(const ColoredPartition& c, const IdentityParams& params, int cols, int rows);

/// The box condition specialised to the odd finitized identity (M = 2k + 1,
/// truncation N). Implies a largest part of at most N - 1.
bool check_odd_finitized_condition(const ColoredPartition& c, const IdentityParams& params, int N);

/// The box condition specialised to the even finitized identity (M = 2k).
bool check_even_finitized_condition(const ColoredPartition& c, const IdentityParams& params, int N);

/// Alternative coloring by distance of the rank from k - r. Colors are
/// recorded verbatim (they may be 0).
ColoredPartition alt_color_map(const Partition& p, const IdentityParams& params);

}  // namespace rrcolor
