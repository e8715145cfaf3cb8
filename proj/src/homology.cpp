#include "stsys/homology.hpp"

#include "stsys/smith_normal_form.hpp"

namespace stsys {

std::size_t HomologySummary::betti(int q) const
{
    if (q < 0 || q > top_dim())
        return 0;
    return degrees[q].betti;
}

const std::vector<Integer>& HomologySummary::torsion(int q) const
{
    static const std::vector<Integer> none;
    if (q < 0 || q > top_dim())
        return none;
    return degrees[q].torsion;
}

const DegreeHomology& HomologySummary::at(int q) const
{
    if (q < 0 || q > top_dim())
        throw InputError("homology degree " + std::to_string(q) + " out of range");
    return degrees[q];
}

long HomologySummary::euler_characteristic() const
{
    long chi = 0;
    for (const auto& d : degrees)
        chi += (d.degree % 2 == 0 ? 1 : -1) * static_cast<long>(d.betti);
    return chi;
}

bool HomologyClass::is_zero() const
{
    for (const auto& x : coordinates)
        if (x != 0)
            return false;
    return true;
}

namespace {

Chain column_chain(int q, const IntMatrix& m, std::size_t col)
{
    Chain c{q, std::vector<Rational>(m.rows())};
    for (std::size_t i = 0; i < m.rows(); ++i)
        c.coefficients[i] = Rational(m(i, col));
    return c;
}

}  // namespace

HomologySummary homology(const WeightedCellComplex& k)
{
    const int top = k.top_dim();
    HomologySummary out;
    out.degrees.resize(top + 1);

    for (int q = 0; q <= top; ++q) {
        const std::size_t n = k.num_cells(q);
        DegreeHomology& h = out.degrees[q];
        h.degree = q;

        // Cycles: the trailing columns of V^{-1} span ker ∂_q over Z.
        const IntMatrix dq = q == 0 ? IntMatrix(0, n) : IntMatrix::from_sparse(k.boundary_matrix(q));
        const SmithForm cycles = smith_normal_form(dq);
        const std::size_t r = cycles.rank();
        const std::size_t z = n - r;
        h.cycle_rank = z;

        IntMatrix cycle_basis(n, z);       // columns: Z-basis of Z_q
        IntMatrix to_cycle_coords(z, n);   // rows of V on the kernel block
        for (std::size_t j = 0; j < z; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                cycle_basis(i, j) = cycles.v_inverse(i, r + j);
                to_cycle_coords(j, i) = cycles.v(r + j, i);
            }
        }

        // Boundaries B_q expressed in cycle coordinates.
        const IntMatrix dnext = q == top ? IntMatrix(n, 0) : IntMatrix::from_sparse(k.boundary_matrix(q + 1));
        const IntMatrix boundary_coords = to_cycle_coords * dnext;
        const SmithForm quotient = smith_normal_form(boundary_coords);
        const std::size_t rb = quotient.rank();
        h.boundary_rank = rb;
        h.betti = z - rb;

        const IntMatrix adapted = cycle_basis * quotient.u;  // columns: adapted basis of Z_q
        for (std::size_t i = 0; i < rb; ++i)
            if (quotient.invariant_factors[i] > 1) {
                h.torsion.push_back(quotient.invariant_factors[i]);
                h.torsion_generators.push_back(column_chain(q, adapted, i));
            }
        const IntMatrix functionals = quotient.u_inverse * to_cycle_coords;
        for (std::size_t i = rb; i < z; ++i) {
            h.generators.push_back(column_chain(q, adapted, i));
            std::vector<Rational> unit(h.betti);
            unit[i - rb] = 1;
            h.lattice_basis.push_back(std::move(unit));
            std::vector<Rational> row(n);
            for (std::size_t c = 0; c < n; ++c)
                row[c] = Rational(functionals(i, c));
            h.coordinate_functionals.push_back(std::move(row));
        }
    }
    return out;
}

std::vector<Rational> class_coordinates(const WeightedCellComplex& k, const HomologySummary& h,
                                        const Chain& z)
{
    validate_chain(k, z);
    if (!is_cycle(k, z))
        throw InputError("chain of degree " + std::to_string(z.degree) + " is not a cycle");
    const auto& d = h.at(z.degree);
    std::vector<Rational> coords(d.betti);
    for (std::size_t i = 0; i < d.betti; ++i) {
        const auto& f = d.coordinate_functionals[i];
        Rational s = 0;
        for (std::size_t c = 0; c < f.size(); ++c)
            if (f[c] != 0 && z.coefficients[c] != 0)
                s += f[c] * z.coefficients[c];
        coords[i] = s;
    }
    return coords;
}

std::vector<Rational> class_coordinates(const WeightedCellComplex& k, const Chain& z)
{
    return class_coordinates(k, homology(k), z);
}

Chain class_representative(const WeightedCellComplex& k, const HomologySummary& h, int q,
                           const std::vector<Rational>& coordinates)
{
    const auto& d = h.at(q);
    if (coordinates.size() != d.betti)
        throw InputError("class has " + std::to_string(coordinates.size()) +
                         " coordinates, degree " + std::to_string(q) + " has Betti number " +
                         std::to_string(d.betti));
    Chain c = zero_chain(k, q);
    for (std::size_t i = 0; i < d.betti; ++i)
        if (coordinates[i] != 0)
            c += coordinates[i] * d.generators[i];
    return c;
}

}  // namespace stsys
