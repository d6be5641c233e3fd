#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rrcolor/colored.hpp"
#include "rrcolor/partition.hpp"
#include "rrcolor/qseries.hpp"

namespace rrcolor {

using PartitionVisitor = std::function<void(const Partition&)>;
using ColoredVisitor = std::function<void(const ColoredPartition&)>;

/// Every partition of n exactly once, in reverse-lexicographic order
/// ((n) first, (1,...,1) last).
void for_each_partition(int n, const PartitionVisitor& visit);
std::vector<Partition> partitions_of(int n);

/// Every partition (of any weight, the empty one included) whose Ferrers
/// diagram fits in `box.rows` rows and `box.cols` columns. Nothing is visited
/// when either side is negative.
void for_each_partition_in_box(const Box& box, const PartitionVisitor& visit);

/// Every colored partition satisfying conditions (i)-(iii) whose parts are at
/// most `max_size` and whose weight is at most `max_weight`, generated part
/// by part from the largest down. The empty one is visited first.
void for_each_admissible_colored(const IdentityParams& params, int max_size, int max_weight,
                                 const ColoredVisitor& visit);

enum class Family { A, C, F, Gordon, Type1, ProductParts };

std::string family_name(Family f);

/*
 * Selects one of the partition families by weight n:
 *   A             partitions with all successive ranks in the identity's interval
 *   C             colored partitions satisfying conditions (i)-(iii)
 *   F             members of A fitting in `box`
 *   Gordon        pi_j - pi_{j+k-1} >= 2 and at most r-1 parts equal to 1,
 *                 for odd M = 2k + 1
 *   Type1         parts differing by at least 2, all parts >= min_part
 *   ProductParts  parts not congruent to 0, r, -r modulo M
 */
struct FamilySpec {
    Family family = Family::A;
    std::optional<IdentityParams> params;
    std::optional<Box> box;
    int n = 0;
    int min_part = 1;

    /// Throws std::invalid_argument for inconsistent combinations.
    void validate() const;
};

using FamilyMembers = std::variant<std::vector<Partition>, std::vector<ColoredPartition>>;

/// Members in canonical order: reverse-lexicographic for partitions,
/// lexicographic descending on (size, -color) runs for colored partitions
/// (i.e. sorted descending as part sequences).
FamilyMembers enumerate_family(const FamilySpec& spec);
Int count_family(const FamilySpec& spec);

bool in_rank_family(const Partition& p, const IdentityParams& params);
bool fits_box(const Partition& p, const Box& box);
bool in_gordon_family(const Partition& p, int k, int r);

std::vector<Partition> rank_family(const IdentityParams& params, int n);
std::vector<ColoredPartition> colored_family(const IdentityParams& params, int n);
/// C_n obtained as the image of A_n under color_map, sorted like colored_family.
std::vector<ColoredPartition> colored_family_via_map(const IdentityParams& params, int n);
std::vector<Partition> boxed_family(const IdentityParams& params, const Box& box, int n);
std::vector<Partition> gordon_family(int k, int r, int n);
std::vector<Partition> type1_family(int n, int min_part = 1);
std::vector<Partition> product_parts_family(const IdentityParams& params, int n);

/// Coefficient of q^n in restricted_product by direct enumeration: the number
/// of partitions into allowed parts when 2r < M; when 2r = M, the signed count
/// over partitions with no part divisible by M whose parts congruent to M/2
/// are distinct, each weighted by (-1)^(number of such parts).
Int product_side_count(const IdentityParams& params, int n);

/// |F_n(M, r, u, v)| for every n from 0 to u*v, by exhaustive box enumeration.
std::vector<Int> boxed_counts(const IdentityParams& params, const Box& box);

/// Counts by weight (0 to max_weight) of colored partitions in C(M, r) with
/// parts at most max_size that satisfy `keep`.
std::vector<Int> colored_counts(const IdentityParams& params, int max_size, int max_weight,
                                const std::function<bool(const ColoredPartition&)>& keep);

/// Counts by weight of colored partitions in C(M, r) that satisfy the box
/// condition for `box`; indices 0 to u*v. Empty when the box is negative.
std::vector<Int> colored_box_counts(const IdentityParams& params, const Box& box);

}  // namespace rrcolor
