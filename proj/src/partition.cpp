#include "stsys/partition.hpp"

#include "stsys/rational.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace stsys {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw InputError("a partition needs at least one part");
    for (int p : parts_)
        if (p < 1)
            throw InputError("partition parts must be positive, got " + std::to_string(p));
    std::sort(parts_.begin(), parts_.end());
}

int Partition::total() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::size_t Partition::duplicated_number(int p) const
{
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), p));
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    std::string digits;
    auto flush = [&] {
        if (digits.empty())
            return;
        if (digits.size() > 6)
            throw InputError("partition part too large: " + digits);
        parts.push_back(std::stoi(digits));
        digits.clear();
    };
    for (char c : text) {
        if (c >= '0' && c <= '9')
            digits += c;
        else if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '\t')
            flush();
        else
            throw InputError("unexpected character '" + std::string(1, c) + "' in partition '" +
                             std::string(text) + "'");
    }
    flush();
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n, const std::set<int>& admissible)
{
    if (n < 1)
        throw InputError("partitions need n >= 1");
    std::vector<int> degrees;
    for (int d : admissible)
        if (d >= 1 && d <= n)
            degrees.push_back(d);

    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(std::size_t, int)> grow = [&](std::size_t from, int remaining) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t i = from; i < degrees.size() && degrees[i] <= remaining; ++i) {
            current.push_back(degrees[i]);
            grow(i, remaining - degrees[i]);
            current.pop_back();
        }
    };
    grow(0, n);
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    });
    return out;
}

std::set<Partition> coarsenings(const std::vector<int>& parts)
{
    std::set<Partition> out;
    if (parts.empty())
        return out;
    // States are sorted block sums; equal states reached by different
    // assignments are merged, so the work tracks distinct multisets only.
    std::set<std::vector<int>> states{{}};
    for (int p : parts) {
        std::set<std::vector<int>> next;
        for (const auto& blocks : states) {
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                if (b > 0 && blocks[b] == blocks[b - 1])
                    continue;
                auto grown = blocks;
                grown[b] += p;
                std::sort(grown.begin(), grown.end());
                next.insert(std::move(grown));
            }
            auto opened = blocks;
            opened.push_back(p);
            std::sort(opened.begin(), opened.end());
            next.insert(std::move(opened));
        }
        states = std::move(next);
    }
    for (const auto& blocks : states)
        out.insert(Partition(blocks));
    return out;
}

}  // namespace stsys
