#include "rrcolor/colored.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace rrcolor {

namespace {

bool congruent_mod2(Int a, Int b) { return same_parity(a, b); }

int parse_int(const std::string& item, const std::string& context)
{
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(item, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + item + "' in: " + context);
    }
    if (used != item.size())
        throw std::invalid_argument("bad integer '" + item + "' in: " + context);
    return value;
}

}  // namespace

IdentityParams::IdentityParams(int modulus, int residue) : modulus_(modulus), residue_(residue)
{
    if (modulus < 3)
        throw std::invalid_argument("modulus M must be at least 3, got " + std::to_string(modulus));
    if (residue <= 0 || 2 * residue > modulus)
        throw std::invalid_argument("residue r must satisfy 0 < r <= M/2, got M=" +
                                    std::to_string(modulus) + " r=" + std::to_string(residue));
}

ColoredPartition::ColoredPartition(std::vector<ColoredPart> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].size <= 0)
            throw std::invalid_argument("colored partition sizes must be positive");
        if (i > 0) {
            const ColoredPart& prev = parts_[i - 1];
            if (parts_[i].size > prev.size)
                throw std::invalid_argument("colored partition sizes must be non-increasing");
            if (parts_[i].size == prev.size && parts_[i].color < prev.color)
                throw std::invalid_argument("equal sizes must carry non-decreasing colors");
        }
        weight_ = checked_add(weight_, parts_[i].size);
    }
}

ColoredPartition ColoredPartition::normalized(std::vector<ColoredPart> parts)
{
    std::stable_sort(parts.begin(), parts.end(), [](const ColoredPart& a, const ColoredPart& b) {
        if (a.size != b.size)
            return a.size > b.size;
        return a.color < b.color;
    });
    return ColoredPartition(std::move(parts));
}

Partition ColoredPartition::sizes() const
{
    std::vector<int> out;
    out.reserve(parts_.size());
    for (const ColoredPart& part : parts_)
        out.push_back(part.size);
    return Partition(std::move(out));
}

std::string ColoredPartition::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i].size);
        out += '_';
        out += std::to_string(parts_[i].color);
    }
    out += ')';
    return out;
}

ColoredPartition ColoredPartition::parse(const std::string& text)
{
    std::string body;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            body += c;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')')
            throw std::invalid_argument("unbalanced parentheses in colored partition: " + text);
        body = body.substr(1, body.size() - 2);
    }
    std::vector<ColoredPart> parts;
    if (!body.empty()) {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto sep = item.find('_');
            if (sep == std::string::npos)
                throw std::invalid_argument("missing '_' in colored part '" + item + "'");
            parts.push_back({parse_int(item.substr(0, sep), text), parse_int(item.substr(sep + 1), text)});
        }
    }
    return ColoredPartition(std::move(parts));
}

std::string ConditionCheck::describe() const
{
    const std::string at = " at part " + std::to_string(index + 1);
    switch (violated) {
    case Condition::none:
        return "ok";
    case Condition::color_range:
        return "color out of range" + at;
    case Condition::initial:
        return "initial condition (i) violated" + at;
    case Condition::color_difference:
        return "color difference condition (ii) violated" + at;
    case Condition::last_color_parity:
        return "last-color parity condition (iii) violated" + at;
    }
    return "unknown";
}

RankOutOfRange::RankOutOfRange(std::size_t index, int rank, const IdentityParams& params)
    : std::domain_error("successive rank " + std::to_string(rank) + " at index " +
                        std::to_string(index + 1) + " lies outside [" +
                        std::to_string(params.rank_low()) + "," + std::to_string(params.rank_high()) +
                        "]"),
      index_(index),
      rank_(rank)
{
}

int angle_color(int length, int rank, const IdentityParams& params)
{
    const int r = params.residue();
    return congruent_mod2(length, r) ? (rank + r - 1) / 2 : (rank + r) / 2;
}

int decoded_width(int size, int color, const IdentityParams& params)
{
    const int r = params.residue();
    return congruent_mod2(size, r) ? (-r + 2 * color + size + 2) / 2 : (-r + 2 * color + size + 1) / 2;
}

ColoredPartition color_map(const Partition& p, const IdentityParams& params)
{
    const AngleDecomposition decomposition = angles(p);
    std::vector<ColoredPart> parts;
    parts.reserve(decomposition.size());
    for (std::size_t i = 0; i < decomposition.size(); ++i) {
        const Angle& a = decomposition[i];
        if (!params.rank_allowed(a.rank()))
            throw RankOutOfRange(i, a.rank(), params);
        const int color = angle_color(a.length(), a.rank(), params);
        if (color < 1 || color > params.color_count())
            throw std::logic_error("color " + std::to_string(color) + " out of range for an in-range rank");
        parts.push_back({a.length(), color});
    }
    return ColoredPartition::normalized(std::move(parts));
}

ConditionCheck check_conditions(const ColoredPartition& c, const IdentityParams& params)
{
    const int r = params.residue();
    const std::size_t l = c.length();

    for (std::size_t i = 0; i < l; ++i)
        if (c[i].color < 1 || c[i].color > params.color_count())
            return {Condition::color_range, i};

    for (std::size_t i = 0; i < l; ++i) {
        const int size = c[i].size;
        const int twice = 2 * c[i].color;
        const int bound = congruent_mod2(size, r) ? std::abs(twice - r + 1) : std::abs(twice - r);
        if (size <= bound)
            return {Condition::initial, i};
    }

    for (std::size_t i = 0; i + 1 < l; ++i) {
        const int upper = c[i].size;
        const int lower = c[i + 1].size;
        const int delta = 2 * (c[i].color - c[i + 1].color);
        int bound = 0;
        if (congruent_mod2(upper, lower))
            bound = 2 + std::abs(delta);
        else if (congruent_mod2(lower, r))
            bound = 2 + std::abs(delta - 1);
        else
            bound = 2 + std::abs(delta + 1);
        if (upper - lower < bound)
            return {Condition::color_difference, i};
    }

    if (params.even_modulus())
        for (std::size_t i = 0; i < l; ++i)
            if (c[i].color == params.k() - 1 && congruent_mod2(c[i].size, r))
                return {Condition::last_color_parity, i};

    return {};
}

Partition inverse_map(const ColoredPartition& c, const IdentityParams& params)
{
    if (const ConditionCheck check = check_conditions(c, params); !check)
        throw std::invalid_argument(c.to_string() + " is not in C_n(" + std::to_string(params.modulus()) +
                                    "," + std::to_string(params.residue()) + "): " + check.describe());
    std::vector<Angle> decoded;
    decoded.reserve(c.length());
    for (const ColoredPart& part : c.parts()) {
        const int width = decoded_width(part.size, part.color, params);
        decoded.push_back({width, part.size - width + 1});
    }
    try {
        return from_angles(AngleDecomposition(std::move(decoded)));
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("inverse map produced malformed angles: ") + e.what());
    }
}

bool check_box_condition(const ColoredPartition& c, const IdentityParams& params, int cols, int rows)
{
    if (cols < 0 || rows < 0)
        throw std::invalid_argument("box dimensions must be non-negative");
    if (c.empty())
        return true;
    const Int x = Int{2} * c[0].color - params.residue() + (rows - cols);
    return Int{cols} + rows - 1 - c[0].size >= half_shifted_abs(x);
}

bool check_odd_finitized_condition(const ColoredPartition& c, const IdentityParams& params, int N)
{
    if (params.even_modulus())
        throw std::invalid_argument("odd finitized condition needs an odd modulus");
    if (c.empty())
        return true;
    const int k = params.k();
    const Int x = congruent_mod2(N + k, params.residue()) ? Int{2} * c[0].color - k : Int{2} * c[0].color - k - 1;
    return Int{N} - 1 - c[0].size >= half_shifted_abs(x);
}

bool check_even_finitized_condition(const ColoredPartition& c, const IdentityParams& params, int N)
{
    if (!params.even_modulus())
        throw std::invalid_argument("even finitized condition needs an even modulus");
    if (c.empty())
        return true;
    const int k = params.k();
    const Int x = Int{2} * c[0].color - k;
    return Int{2} * N + k - params.residue() - 1 - c[0].size >= half_shifted_abs(x);
}

ColoredPartition alt_color_map(const Partition& p, const IdentityParams& params)
{
    const AngleDecomposition decomposition = angles(p);
    const int pivot = params.k() - params.residue();
    std::vector<ColoredPart> parts;
    parts.reserve(decomposition.size());
    for (std::size_t i = 0; i < decomposition.size(); ++i) {
        const Angle& a = decomposition[i];
        if (!params.rank_allowed(a.rank()))
            throw RankOutOfRange(i, a.rank(), params);
        const int color = a.rank() > pivot ? a.rank() - pivot : pivot - a.rank();
        parts.push_back({a.length(), color});
    }
    return ColoredPartition::normalized(std::move(parts));
}

}  // namespace rrcolor
