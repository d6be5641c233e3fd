#pragma once

#include <string>
#include <vector>

#include "rrcolor/colored.hpp"
#include "rrcolor/partition.hpp"

namespace rrcolor {

/// One row of a bijection table: a member of A_n(M, r), its successive ranks
/// and its image under color_map.
struct TableRow {
    Partition partition;
    std::vector<int> ranks;
    ColoredPartition colored;
};

/*
 * Rows for every member of A_n(M, r), in canonical order: reverse
 * lexicographic on the partition, except that for even M the rows whose
 * coloring uses the last color k-1 form a second block after all others
 * (each block reverse lexicographic).
 */
std::vector<TableRow> bijection_table(const IdentityParams& params, int n);

/// "(7,1,1,1) [3] (10_2)" per line.
std::string render_table_text(const std::vector<TableRow>& rows);
/// Header "partition,ranks,colored"; fields quoted.
std::string render_table_csv(const std::vector<TableRow>& rows);
/// Array of {"partition", "ranks", "colored"} objects with the text renderings.
std::string render_table_json(const std::vector<TableRow>& rows);

}  // namespace rrcolor
