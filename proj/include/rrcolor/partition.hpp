#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rrcolor/checked.hpp"

namespace rrcolor {

/*
 * An integer partition: a finite non-increasing sequence of positive parts.
 * Parts are indexed from 0 in the C++ interface; the empty partition is the
 * unique partition of 0.
 */
class Partition {
public:
    Partition() = default;

    /// Takes parts that are already in canonical (non-increasing, positive)
    /// order. Throws std::invalid_argument otherwise.
    explicit Partition(std::vector<int> parts);

    /// Sorts the parts into canonical order first. Non-positive parts are
    /// still rejected.
    static Partition from_unsorted(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    Int weight() const { return weight_; }

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Lexicographic comparison on the part sequence.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

    /// "(7,5,5,5,4,4,2)"; the empty partition renders as "()".
    std::string to_string() const;

    /// Parses the rendering above (whitespace tolerated, parentheses optional).
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    Int weight_ = 0;
};

/// Transpose of the Ferrers diagram: part i counts the parts >= i + 1.
Partition conjugate(const Partition& p);

/// Side of the largest square fitting in the Ferrers diagram.
int durfee_size(const Partition& p);

/// (pi_1 - pi'_1, ..., pi_d - pi'_d) with d the Durfee size.
std::vector<int> successive_ranks(const Partition& p);

/// True when successive parts differ by at least 2.
bool is_type1(const Partition& p);

/*
 * The i-th angle of a Ferrers diagram is the hook of dots in row i to the
 * right of the diagonal together with column i below it. Width counts the
 * row segment (diagonal dot included), height the column segment (diagonal
 * dot included).
 */
struct Angle {
    int width = 0;
    int height = 0;

    int length() const { return width + height - 1; }
    int rank() const { return width - height; }

    friend bool operator==(const Angle&, const Angle&) = default;
};

class AngleDecomposition {
public:
    AngleDecomposition() = default;

    /// Requires strictly decreasing positive widths and heights; throws
    /// std::invalid_argument otherwise.
    explicit AngleDecomposition(std::vector<Angle> angles);

    std::span<const Angle> angles() const { return angles_; }
    std::size_t size() const { return angles_.size(); }
    bool empty() const { return angles_.empty(); }
    const Angle& operator[](std::size_t i) const { return angles_[i]; }

    std::vector<int> lengths() const;
    std::vector<int> ranks() const;

    friend bool operator==(const AngleDecomposition&, const AngleDecomposition&) = default;

private:
    std::vector<Angle> angles_;
};

AngleDecomposition angles(const Partition& p);

/// The unique partition whose angles are `a`.
Partition from_angles(const AngleDecomposition& a);

/// Convenience: the partition of angle lengths, alpha(p).
Partition angle_partition(const Partition& p);

/// "[0,-2,-1,-1]"
std::string ranks_to_string(std::span<const int> ranks);

}  // namespace rrcolor
