#include "rrcolor/table.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "rrcolor/enumerate.hpp"

namespace rrcolor {

namespace {

bool uses_last_color(const ColoredPartition& c, const IdentityParams& params)
{
    return std::any_of(c.parts().begin(), c.parts().end(),
                       [&](const ColoredPart& part) { return part.color == params.k() - 1; });
}

}  // namespace

std::vector<TableRow> bijection_table(const IdentityParams& params, int n)
{
    std::vector<TableRow> rows;
    // rank_family already yields reverse-lexicographic order.
    for (const Partition& p : rank_family(params, n))
        rows.push_back({p, successive_ranks(p), color_map(p, params)});
    if (params.even_modulus())
        std::stable_partition(rows.begin(), rows.end(),
                              [&](const TableRow& row) { return !uses_last_color(row.colored, params); });
    return rows;
}

std::string render_table_text(const std::vector<TableRow>& rows)
{
    std::string out;
    for (const TableRow& row : rows)
        out += row.partition.to_string() + " " + ranks_to_string(row.ranks) + " " + row.colored.to_string() + "\n";
    return out;
}

std::string render_table_csv(const std::vector<TableRow>& rows)
{
    std::string out = "partition,ranks,colored\n";
    for (const TableRow& row : rows)
        out += "\"" + row.partition.to_string() + "\",\"" + ranks_to_string(row.ranks) + "\",\"" +
               row.colored.to_string() + "\"\n";
    return out;
}

std::string render_table_json(const std::vector<TableRow>& rows)
{
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const TableRow& row : rows) {
        nlohmann::ordered_json item;
        item["partition"] = row.partition.to_string();
        item["ranks"] = ranks_to_string(row.ranks);
        item["colored"] = row.colored.to_string();
        doc.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

}  // namespace rrcolor
