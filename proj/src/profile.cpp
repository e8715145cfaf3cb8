#include "stsys/profile.hpp"

#include "stsys/cohomology.hpp"
#include "stsys/homology.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace stsys {

int DimensionProfile::betti_at(int q) const
{
    if (q < 0 || q >= static_cast<int>(betti.size()))
        return 0;
    return betti[q];
}

void DimensionProfile::validate() const
{
    const std::string who = name.empty() ? std::string("profile") : "profile '" + name + "'";
    if (dimension < 0)
        throw InputError(who + ": negative dimension");
    if (static_cast<int>(betti.size()) != dimension + 1)
        throw InputError(who + ": expected " + std::to_string(dimension + 1) + " Betti numbers, got " +
                         std::to_string(betti.size()));
    for (int b : betti)
        if (b < 0)
            throw InputError(who + ": negative Betti number");
    if (betti[0] != 1)
        throw InputError(who + ": betti(0) must be 1 (connected)");
    if (orientable && betti[dimension] != 1)
        throw InputError(who + ": orientable but betti(n) != 1");
    if (homology_sphere) {
        for (int q = 1; q < dimension; ++q)
            if (betti[q] != 0)
                throw InputError(who + ": homology sphere with betti(" + std::to_string(q) + ") != 0");
        if (betti[dimension] != 1)
            throw InputError(who + ": homology sphere with betti(n) != 1");
    }
    if (cup_witness) {
        int total = 0;
        for (int d : *cup_witness) {
            if (betti_at(d) == 0 || d < 1)
                throw InputError(who + ": cup witness uses degree " + std::to_string(d) +
                                 " without homology");
            total += d;
        }
        if (total != dimension)
            throw InputError(who + ": cup witness degrees do not sum to the dimension");
        if (cup_length && static_cast<int>(cup_witness->size()) > *cup_length)
            throw InputError(who + ": cup witness longer than the cup length");
    }
    if (max_cup && *max_cup) {
        const auto l = lpd(*this);
        if (!l)
            throw InputError(who + ": maximal cup length flag without positive-degree homology");
        if (cup_length && *cup_length != dimension / *l)
            throw InputError(who + ": maximal cup length flag disagrees with the cup length");
    }
    for (const auto& f : factors)
        f.validate();
}

namespace {

/// Fills the ring data a real homology sphere always has.
void complete_sphere_data(DimensionProfile& p)
{
    if (!p.homology_sphere || p.dimension < 1)
        return;
    if (!p.max_cup)
        p.max_cup = true;
    if (!p.cup_length)
        p.cup_length = 1;
    if (!p.cup_witness)
        p.cup_witness = std::vector<int>{p.dimension};
}

}  // namespace

DimensionProfile sphere_profile(int m)
{
    if (m < 1)
        throw InputError("sphere dimension must be >= 1, got " + std::to_string(m));
    DimensionProfile p;
    p.name = "S" + std::to_string(m);
    p.dimension = m;
    p.betti.assign(m + 1, 0);
    p.betti[0] = 1;
    p.betti[m] = 1;
    p.homology_sphere = true;
    complete_sphere_data(p);
    return p;
}

DimensionProfile torus_profile(int dim)
{
    if (dim < 1)
        throw InputError("torus dimension must be >= 1, got " + std::to_string(dim));
    DimensionProfile p = sphere_profile(1);
    for (int i = 1; i < dim; ++i)
        p = kunneth_product(p, sphere_profile(1));
    if (dim > 1)
        p.sealed = true;
    p.name = "T" + std::to_string(dim);
    return p;
}

std::optional<int> lpd(const DimensionProfile& p)
{
    for (int q = 1; q <= p.dimension; ++q)
        if (p.betti_at(q) > 0)
            return q;
    return std::nullopt;
}

std::set<int> admissible_degrees(const DimensionProfile& p)
{
    std::set<int> out;
    for (int q = 1; q <= p.dimension; ++q)
        if (p.betti_at(q) > 0)
            out.insert(q);
    return out;
}

bool mod_condition(int m, int lpd_m, int n, int lpd_n)
{
    if (lpd_m < 1 || lpd_n < 1)
        throw InputError("least positive dimensions must be >= 1");
    return m % lpd_m + n % lpd_n < std::max(lpd_m, lpd_n);
}

namespace {

std::optional<bool> product_max_cup(const DimensionProfile& a, const DimensionProfile& b)
{
    if ((a.max_cup && !*a.max_cup) || (b.max_cup && !*b.max_cup))
        return false;
    if (!a.max_cup || !b.max_cup)
        return std::nullopt;
    const auto la = lpd(a);
    const auto lb = lpd(b);
    if (!la || !lb)
        return std::nullopt;
    const int m = a.dimension;
    const int n = b.dimension;
    const int l = std::min(*la, *lb);
    return m / *la == m / l && n / *lb == n / l && m % l + n % l < l;
}

void append_operand(std::vector<DimensionProfile>& out, const DimensionProfile& p)
{
    if (p.is_product() && !p.sealed)
        out.insert(out.end(), p.factors.begin(), p.factors.end());
    else
        out.push_back(p);
}

}  // namespace

DimensionProfile kunneth_product(const DimensionProfile& a, const DimensionProfile& b)
{
    a.validate();
    b.validate();
    if (a.dimension == 0)
        return b;
    if (b.dimension == 0)
        return a;

    DimensionProfile out;
    out.name = a.name + " x " + b.name;
    out.dimension = a.dimension + b.dimension;
    out.betti.assign(out.dimension + 1, 0);
    for (int i = 0; i <= a.dimension; ++i)
        for (int j = 0; j <= b.dimension; ++j)
            out.betti[i + j] += a.betti[i] * b.betti[j];
    out.orientable = a.orientable && b.orientable;
    out.homology_sphere = false;
    out.max_cup = product_max_cup(a, b);
    if (a.cup_length && b.cup_length)
        out.cup_length = *a.cup_length + *b.cup_length;
    if (a.cup_witness && b.cup_witness) {
        std::vector<int> w = *a.cup_witness;
        w.insert(w.end(), b.cup_witness->begin(), b.cup_witness->end());
        out.cup_witness = std::move(w);
    }
    append_operand(out.factors, a);
    append_operand(out.factors, b);
    return out;
}

std::vector<DimensionProfile> leaves(const DimensionProfile& p)
{
    if (!p.is_product())
        return {p};
    std::vector<DimensionProfile> out;
    for (const auto& f : p.factors) {
        auto sub = leaves(f);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

namespace {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    DimensionProfile parse()
    {
        DimensionProfile p = expression();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return p;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("product expression '" + std::string(text_) + "': " + what + " at offset " +
                         std::to_string(pos_));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool separator()
    {
        skip_space();
        if (pos_ >= text_.size())
            return false;
        const char c = text_[pos_];
        if (c == 'x' || c == 'X' || c == '*') {
            ++pos_;
            return true;
        }
        if (text_.substr(pos_, 2) == "\xC3\x97") {
            pos_ += 2;
            return true;
        }
        return false;
    }

    int number()
    {
        if (pos_ < text_.size() && text_[pos_] == '^')
            ++pos_;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected a dimension");
        if (pos_ - start > 4)
            fail("dimension too large");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    DimensionProfile factor()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("expected a factor");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            DimensionProfile inner = expression();
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                fail("expected ')'");
            ++pos_;
            if (inner.is_product()) {
                inner.sealed = true;
                inner.name = "(" + inner.name + ")";
            }
            return inner;
        }
        if (c == 'S' || c == 's') {
            ++pos_;
            return sphere_profile(number());
        }
        if (c == 'T' || c == 't') {
            ++pos_;
            return torus_profile(number());
        }
        fail("expected S<m>, T<n> or '('");
    }

    DimensionProfile expression()
    {
        DimensionProfile p = factor();
        while (separator())
            p = kunneth_product(p, factor());
        return p;
    }
};

using nlohmann::json;

template <class T>
std::optional<T> optional_field(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

DimensionProfile profile_from(const json& j)
{
    if (!j.is_object())
        throw InputError("profile must be a JSON object");
    if (j.contains("expression"))
        return parse_product_expression(j.at("expression").get<std::string>());

    DimensionProfile p;
    if (j.contains("factors")) {
        const auto& fs = j.at("factors");
        if (!fs.is_array() || fs.empty())
            throw InputError("profile 'factors' must be a non-empty array");
        p = profile_from(fs.at(0));
        for (std::size_t i = 1; i < fs.size(); ++i)
            p = kunneth_product(p, profile_from(fs.at(i)));
        if (p.is_product())
            p.sealed = true;
    } else {
        if (!j.contains("dimension") || !j.contains("betti"))
            throw InputError("profile needs 'dimension' and 'betti' (or 'factors' or 'expression')");
        p.dimension = j.at("dimension").get<int>();
        p.betti = j.at("betti").get<std::vector<int>>();
        const bool top_one = !p.betti.empty() && p.betti.back() == 1 &&
                             static_cast<int>(p.betti.size()) == p.dimension + 1;
        p.orientable = top_one;
        bool sphere = top_one && p.dimension >= 1;
        for (std::size_t q = 1; q + 1 < p.betti.size(); ++q)
            sphere = sphere && p.betti[q] == 0;
        p.homology_sphere = sphere;
        p.name = "M" + std::to_string(p.dimension);
    }
    if (auto v = optional_field<std::string>(j, "name"))
        p.name = *v;
    if (auto v = optional_field<bool>(j, "orientable"))
        p.orientable = *v;
    if (auto v = optional_field<bool>(j, "homology_sphere"))
        p.homology_sphere = *v;
    if (j.contains("max_cup"))
        p.max_cup = optional_field<bool>(j, "max_cup");
    if (auto v = optional_field<int>(j, "cup_length"))
        p.cup_length = *v;
    if (auto v = optional_field<std::vector<int>>(j, "witness"))
        p.cup_witness = *v;
    complete_sphere_data(p);
    p.validate();
    return p;
}

json to_json(const DimensionProfile& p)
{
    json j;
    j["name"] = p.name;
    j["dimension"] = p.dimension;
    j["betti"] = p.betti;
    j["orientable"] = p.orientable;
    j["homology_sphere"] = p.homology_sphere;
    j["max_cup"] = p.max_cup ? json(*p.max_cup) : json(nullptr);
    j["cup_length"] = p.cup_length ? json(*p.cup_length) : json(nullptr);
    j["witness"] = p.cup_witness ? json(*p.cup_witness) : json(nullptr);
    if (p.is_product()) {
        json fs = json::array();
        for (const auto& f : p.factors)
            fs.push_back(to_json(f));
        j["factors"] = fs;
    }
    return j;
}

}  // namespace

DimensionProfile parse_product_expression(std::string_view text)
{
    return ExpressionParser(text).parse();
}

DimensionProfile parse_profile_json(std::string_view text)
{
    try {
        return profile_from(json::parse(text));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed profile JSON: ") + e.what());
    }
}

std::string profile_to_json(const DimensionProfile& p)
{
    return to_json(p).dump(2);
}

DimensionProfile load_profile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open profile file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_profile_json(text);
    return parse_product_expression(text);
}

DimensionProfile profile_from_complex(const WeightedCellComplex& k, std::string name)
{
    const auto h = homology(k);
    DimensionProfile p;
    p.name = std::move(name);
    p.dimension = k.top_dim();
    p.betti.clear();
    for (int q = 0; q <= p.dimension; ++q)
        p.betti.push_back(static_cast<int>(h.betti(q)));
    p.orientable = p.betti.back() == 1;
    bool sphere = p.orientable && p.dimension >= 1;
    for (int q = 1; q < p.dimension; ++q)
        sphere = sphere && p.betti[q] == 0;
    p.homology_sphere = sphere;
    if (k.kind() == ComplexKind::Simplicial) {
        const auto ring = ring_profile(k);
        p.cup_length = ring.cup_length;
        p.max_cup = ring.lpd ? std::optional<bool>(ring.maximal_cup_length) : std::nullopt;
        if (ring.maximal_cup_length)
            p.cup_witness = ring.witness_degrees;
    }
    complete_sphere_data(p);
    p.validate();
    return p;
}

}  // namespace stsys
