#include "stsys/cohomology.hpp"

#include <string>

namespace stsys {

bool Cochain::is_zero() const
{
    for (const auto& x : values)
        if (x != 0)
            return false;
    return true;
}

Cochain& Cochain::operator+=(const Cochain& rhs)
{
    if (rhs.degree != degree || rhs.values.size() != values.size())
        throw InputError("adding cochains of different shapes");
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] += rhs.values[i];
    return *this;
}

Cochain& Cochain::operator*=(const Rational& s)
{
    for (auto& x : values)
        x *= s;
    return *this;
}

Cochain zero_cochain(const WeightedCellComplex& k, int q)
{
    return Cochain{q, std::vector<Rational>(k.num_cells(q))};
}

Rational evaluate(const Cochain& phi, const Chain& c)
{
    if (phi.degree != c.degree || phi.values.size() != c.coefficients.size())
        throw InputError("cochain and chain have different shapes");
    Rational s = 0;
    for (std::size_t i = 0; i < phi.values.size(); ++i)
        if (phi.values[i] != 0 && c.coefficients[i] != 0)
            s += phi.values[i] * c.coefficients[i];
    return s;
}

namespace {

void validate_cochain(const WeightedCellComplex& k, const Cochain& phi)
{
    if (phi.degree < 0 || phi.degree > k.top_dim())
        throw InputError("cochain degree " + std::to_string(phi.degree) + " out of range");
    if (phi.values.size() != k.num_cells(phi.degree))
        throw InputError("cochain has " + std::to_string(phi.values.size()) + " values for " +
                         std::to_string(k.num_cells(phi.degree)) + " cells");
}

/// Incremental echelon basis used to test linear independence.
class Span {
public:
    bool insert(std::vector<Rational> v)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p] == 0)
                continue;
            const Rational f = v[p] / rows_[r][p];
            for (std::size_t c = 0; c < v.size(); ++c)
                if (rows_[r][c] != 0)
                    v[c] -= f * rows_[r][c];
        }
        for (std::size_t c = 0; c < v.size(); ++c)
            if (v[c] != 0) {
                rows_.push_back(std::move(v));
                pivots_.push_back(c);
                return true;
            }
        return false;
    }

private:
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

struct ProductClass {
    int degree;
    std::vector<Rational> coordinates;
    std::vector<int> witness;
};

}  // namespace

Cochain coboundary(const WeightedCellComplex& k, const Cochain& phi)
{
    validate_cochain(k, phi);
    const int q = phi.degree;
    if (q == k.top_dim())
        return Cochain{q + 1, {}};
    Cochain out = zero_cochain(k, q + 1);
    const auto& d = k.boundary_matrix(q + 1);
    for (std::size_t j = 0; j < d.cols(); ++j)
        for (const auto& e : d.column(j))
            if (phi.values[e.row] != 0)
                out.values[j] += e.value * phi.values[e.row];
    return out;
}

bool is_cocycle(const WeightedCellComplex& k, const Cochain& phi)
{
    return coboundary(k, phi).is_zero();
}

Cochain cup_product(const WeightedCellComplex& k, const Cochain& alpha, const Cochain& beta)
{
    if (k.kind() != ComplexKind::Simplicial)
        throw InputError("cup products need a simplicial complex");
    validate_cochain(k, alpha);
    validate_cochain(k, beta);
    const int p = alpha.degree;
    const int q = beta.degree;
    if (p + q > k.top_dim())
        return Cochain{p + q, {}};
    Cochain out = zero_cochain(k, p + q);
    const auto& cells = k.cells(p + q);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& v = cells[i].vertices;
        const std::vector<int> front(v.begin(), v.begin() + p + 1);
        const auto fi = k.find_simplex(front);
        if (alpha.values[*fi] == 0)
            continue;
        const std::vector<int> back(v.begin() + p, v.end());
        const auto bi = k.find_simplex(back);
        out.values[i] = alpha.values[*fi] * beta.values[*bi];
    }
    return out;
}

std::size_t CohomologyBasis::dimension(int q) const
{
    if (q < 0 || q >= static_cast<int>(cocycles.size()))
        return 0;
    return cocycles[q].size();
}

CohomologyBasis cohomology_basis(const WeightedCellComplex& k, const HomologySummary& h)
{
    // The coordinate functionals vanish on boundaries, so they are cocycles,
    // and they are dual to the generators by construction.
    CohomologyBasis out;
    out.cocycles.resize(k.top_dim() + 1);
    for (int q = 0; q <= k.top_dim(); ++q)
        for (const auto& f : h.at(q).coordinate_functionals)
            out.cocycles[q].push_back(Cochain{q, f});
    return out;
}

std::vector<Rational> cohomology_coordinates(const WeightedCellComplex& k, const HomologySummary& h,
                                             const Cochain& phi)
{
    if (phi.degree > k.top_dim() && phi.values.empty())
        return {};
    if (!is_cocycle(k, phi))
        throw InputError("cochain of degree " + std::to_string(phi.degree) + " is not a cocycle");
    std::vector<Rational> out;
    for (const auto& g : h.at(phi.degree).generators)
        out.push_back(evaluate(phi, g));
    return out;
}

Cochain cohomology_representative(const WeightedCellComplex& k, const CohomologyBasis& basis, int q,
                                  const std::vector<Rational>& coordinates)
{
    if (coordinates.size() != basis.dimension(q))
        throw InputError("cohomology class has " + std::to_string(coordinates.size()) +
                         " coordinates, degree " + std::to_string(q) + " has dimension " +
                         std::to_string(basis.dimension(q)));
    Cochain out = zero_cochain(k, q);
    for (std::size_t j = 0; j < coordinates.size(); ++j)
        if (coordinates[j] != 0)
            out += coordinates[j] * basis.cocycles[q][j];
    return out;
}

std::optional<int> lpd(const HomologySummary& h)
{
    for (int q = 1; q <= h.top_dim(); ++q)
        if (h.betti(q) > 0)
            return q;
    return std::nullopt;
}

namespace {

/// Levels A_1, A_2, ... of the product filtration, each as independent classes.
std::vector<std::vector<ProductClass>> product_filtration(const WeightedCellComplex& k)
{
    if (k.kind() != ComplexKind::Simplicial)
        throw InputError("cup products need a simplicial complex");
    const auto h = homology(k);
    const auto basis = cohomology_basis(k, h);
    const int n = k.top_dim();

    std::vector<ProductClass> first;
    for (int q = 1; q <= n; ++q)
        for (std::size_t j = 0; j < basis.dimension(q); ++j) {
            std::vector<Rational> e(basis.dimension(q));
            e[j] = 1;
            first.push_back({q, std::move(e), {q}});
        }
    std::vector<std::vector<ProductClass>> levels;
    if (first.empty())
        return levels;
    levels.push_back(first);

    while (true) {
        std::vector<Span> spans(n + 1);
        std::vector<ProductClass> next;
        for (const auto& a : levels.back()) {
            const Cochain ra = cohomology_representative(k, basis, a.degree, a.coordinates);
            for (const auto& b : first) {
                const int d = a.degree + b.degree;
                if (d > n)
                    continue;
                const Cochain rb = cohomology_representative(k, basis, b.degree, b.coordinates);
                auto coords = cohomology_coordinates(k, h, cup_product(k, ra, rb));
                if (!spans[d].insert(coords))
                    continue;
                auto witness = a.witness;
                witness.push_back(b.degree);
                next.push_back({d, std::move(coords), std::move(witness)});
            }
        }
        if (next.empty())
            break;
        levels.push_back(std::move(next));
    }
    return levels;
}

}  // namespace

CupLengthResult cup_length(const WeightedCellComplex& k)
{
    const auto levels = product_filtration(k);
    CupLengthResult out;
    out.cup_length = static_cast<int>(levels.size());
    if (!levels.empty())
        out.witness_degrees = levels.back().front().witness;
    return out;
}

RingProfile ring_profile(const WeightedCellComplex& k)
{
    const auto levels = product_filtration(k);
    RingProfile out;
    out.dimension = k.top_dim();
    out.lpd = lpd(homology(k));
    out.cup_length = static_cast<int>(levels.size());
    if (!out.lpd)
        return out;
    const int r = out.dimension / *out.lpd;
    if (r < 1 || r > out.cup_length)
        return out;
    for (const auto& c : levels[r - 1])
        if (c.degree == out.dimension) {
            out.maximal_cup_length = true;
            out.witness_degrees = c.witness;
            break;
        }
    return out;
}

}  // namespace stsys
