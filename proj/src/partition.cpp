#include "rrcolor/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rrcolor {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
        weight_ = checked_add(weight_, parts_[i]);
    }
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::string Partition::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

Partition Partition::parse(const std::string& text)
{
    std::string body;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            body += c;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')')
            throw std::invalid_argument("unbalanced parentheses in partition: " + text);
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    if (!body.empty()) {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(item, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad part '" + item + "' in partition: " + text);
            }
            if (used != item.size())
                throw std::invalid_argument("bad part '" + item + "' in partition: " + text);
            parts.push_back(value);
        }
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& p)
{
    // Column i has one dot for every row of length > i; walk rows from the
    // bottom so each column height is read off once.
    std::vector<int> out(static_cast<std::size_t>(p.largest()));
    const int rows = static_cast<int>(p.length());
    int col = 0;
    for (int row = rows; row >= 1; --row) {
        const int len = p[static_cast<std::size_t>(row - 1)];
        for (; col < len; ++col)
            out[static_cast<std::size_t>(col)] = row;
    }
    return Partition(std::move(out));
}

int durfee_size(const Partition& p)
{
    int d = 0;
    while (static_cast<std::size_t>(d) < p.length() && p[static_cast<std::size_t>(d)] >= d + 1)
        ++d;
    return d;
}

std::vector<int> successive_ranks(const Partition& p)
{
    const Partition dual = conjugate(p);
    const auto d = static_cast<std::size_t>(durfee_size(p));
    std::vector<int> ranks(d);
    for (std::size_t i = 0; i < d; ++i)
        ranks[i] = p[i] - dual[i];
    return ranks;
}

bool is_type1(const Partition& p)
{
    for (std::size_t i = 0; i + 1 < p.length(); ++i)
        if (p[i] - p[i + 1] < 2)
            return false;
    return true;
}

AngleDecomposition::AngleDecomposition(std::vector<Angle> angles) : angles_(std::move(angles))
{
    for (std::size_t i = 0; i < angles_.size(); ++i) {
        const Angle& a = angles_[i];
        if (a.width < 1 || a.height < 1)
            throw std::invalid_argument("angle " + std::to_string(i + 1) +
                                        " has non-positive width or height");
        if (i > 0 && (a.width >= angles_[i - 1].width || a.height >= angles_[i - 1].height))
            throw std::invalid_argument("angle " + std::to_string(i + 1) +
                                        " is not strictly inside angle " + std::to_string(i));
    }
}

std::vector<int> AngleDecomposition::lengths() const
{
    std::vector<int> out;
    out.reserve(angles_.size());
    for (const Angle& a : angles_)
        out.push_back(a.length());
    return out;
}

std::vector<int> AngleDecomposition::ranks() const
{
    std::vector<int> out;
    out.reserve(angles_.size());
    for (const Angle& a : angles_)
        out.push_back(a.rank());
    return out;
}

AngleDecomposition angles(const Partition& p)
{
    const Partition dual = conjugate(p);
    const int d = durfee_size(p);
    std::vector<Angle> out;
    out.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        out.push_back({p[idx] - i, dual[idx] - i});
    }
    return AngleDecomposition(std::move(out));
}

Partition from_angles(const AngleDecomposition& a)
{
    const int d = static_cast<int>(a.size());
    if (d == 0)
        return {};
    // Rows 1..d come straight from the widths; row j > d counts the columns
    // (among the first d) whose height reaches it.
    const int rows = a[0].height;
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(rows));
    for (int i = 0; i < d; ++i)
        parts.push_back(a[static_cast<std::size_t>(i)].width + i);
    for (int row = d + 1; row <= rows; ++row) {
        int len = 0;
        for (int i = 0; i < d; ++i)
            if (a[static_cast<std::size_t>(i)].height + i >= row)
                ++len;
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

Partition angle_partition(const Partition& p)
{
    return Partition(angles(p).lengths());
}

std::string ranks_to_string(std::span<const int> ranks)
{
    std::string out = "[";
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(ranks[i]);
    }
    out += ']';
    return out;
}

}  // namespace rrcolor
