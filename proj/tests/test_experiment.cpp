#include <doctest.h>

#include "stsys/category.hpp"
#include "stsys/complex_io.hpp"
#include "stsys/experiment.hpp"
#include "stsys/homology.hpp"
#include "stsys/stable_norm.hpp"
#include "test_support.hpp"

using namespace stsys;
namespace lib = stsys::library;

namespace {

void check_same_complex(const WeightedCellComplex& a, const WeightedCellComplex& b)
{
    REQUIRE(a.top_dim() == b.top_dim());
    CHECK(a.kind() == b.kind());
    for (int q = 0; q <= a.top_dim(); ++q) {
        REQUIRE(a.num_cells(q) == b.num_cells(q));
        for (std::size_t i = 0; i < a.num_cells(q); ++i) {
            CHECK(a.cell(q, i).id == b.cell(q, i).id);
            CHECK(a.weight(q, i) == b.weight(q, i));
            CHECK(a.cell(q, i).vertices == b.cell(q, i).vertices);
            CHECK(a.cell(q, i).factor == b.cell(q, i).factor);
        }
        if (q > 0)
            for (std::size_t j = 0; j < a.num_cells(q); ++j)
                for (std::size_t i = 0; i < a.num_cells(q - 1); ++i)
                    CHECK(a.boundary_matrix(q).at(i, j) == b.boundary_matrix(q).at(i, j));
    }
}

WeightedCellComplex s1_x_s2()
{
    return product_complex(lib::cubical_circle(3), lib::cubical_sphere(2));
}

}  // namespace

TEST_CASE("complex JSON round trip")
{
    for (const auto& [name, k] : testing::named_fixtures()) {
        CAPTURE(name);
        check_same_complex(k, complex_from_json(complex_to_json(k)));
    }
}

TEST_CASE("complex JSON shorthands and library references")
{
    check_same_complex(load_complex("lib:flat-torus:4:1/4"), lib::flat_torus(4, Rational(1, 4)));
    check_same_complex(complex_from_json(R"({"library": "circle", "args": ["3"]})"), lib::circle(3));
    check_same_complex(
        complex_from_json(R"({"product": [{"library": "circle", "args": [3]}, {"library": "sphere", "args": [2]}]})"),
        product_complex(lib::circle(3), lib::sphere(2)));
    check_same_complex(complex_from_json(R"({"rescale": {"library": "circle", "args": ["4"]}, "t": "3/2"})"),
                       rescale(lib::circle(4), Rational(3, 2)));

    const auto loop = complex_from_json(R"({"kind": "general", "cells": [
        [{"id": "v", "weight": 1}],
        [{"id": "a", "weight": "5/2", "boundary": []}]]})");
    CHECK(homology(loop).betti(1) == 1);
    CHECK(*stable_systole(loop, 1).value == Rational(5, 2));
}

TEST_CASE("malformed complex files are input errors")
{
    for (const char* bad : {
             "{nope",
             R"({"cells": []})",
             R"({"kind": "prismatic", "cells": [[{"id": "v"}]]})",
             R"({"cells": [[{"id": "v"}, {"id": "v"}]]})",
             R"({"cells": [[{"id": "v"}], [{"id": "e", "boundary": [["w", 1]]}]]})",
             R"({"cells": [[{"id": "v", "weight": "-1"}]]})",
             R"({"top_dim": 2, "cells": [[{"id": "v"}]]})",
             R"({"cells": [[{"id": "v"}], [{"id": "e", "boundary": [["v", 1]]}], [{"id": "f", "boundary": [["e", 1]]}]]})",
         })
        CHECK_THROWS_AS(complex_from_json(bad), InputError);
    CHECK_THROWS_AS(load_complex("/nonexistent/file.json"), InputError);
    CHECK_THROWS_AS(load_complex("lib:"), InputError);
    CHECK_THROWS_AS(load_complex("lib:dodecahedron"), InputError);
}

TEST_CASE("fundamental class mass")
{
    CHECK(fundamental_class_mass(lib::flat_torus(4)) == 16);
    CHECK(fundamental_class_mass(lib::sphere(2)) == 4);
    CHECK(fundamental_class_mass(rescale(lib::flat_torus(4), 2)) == 64);
    CHECK(fundamental_class_mass(lib::circle(5, Rational(1, 3))) == Rational(5, 3));
    CHECK(fundamental_class_mass(lib::torus9()) == 18);
    CHECK_THROWS_AS(fundamental_class_mass(lib::rp2()), PreconditionError);
}

TEST_CASE("exact exponent extraction")
{
    CHECK(exact_exponent(2, 8) == 3);
    CHECK(exact_exponent(2, Rational(1, 4)) == -2);
    CHECK(exact_exponent(Rational(3, 2), Rational(9, 4)) == 2);
    CHECK(exact_exponent(2, 1) == 0);
    CHECK_FALSE(exact_exponent(2, 3).has_value());
    CHECK_FALSE(exact_exponent(2, Rational(-4)).has_value());
    CHECK_THROWS_AS(exact_exponent(1, 2), InputError);
}

TEST_CASE("torus sweep with partition (1,1) stays bounded")
{
    const DeformationFamily family(product_complex(lib::circle(4), lib::circle(4)));
    const auto r = deformation_sweep(family, Partition({1, 1}));
    REQUIRE(r.rows.size() == 4);
    CHECK(r.certified);
    for (const auto& row : r.rows) {
        CHECK(row.systoles == std::vector<Rational>{4, 4});
        CHECK(row.volume == 16 * row.t);
        CHECK(row.ratio == 1 / row.t);
    }
    CHECK(r.exponent == -1);
    CHECK(r.verdict == GrowthVerdict::Bounded);
    CHECK_FALSE(predicted_exponent(lib::circle(4), lib::circle(4), Partition({1, 1})).has_value());
}

TEST_CASE("S1 x S2 sweep with partition (1,1,1) diverges at the predicted rate")
{
    const auto x = lib::cubical_circle(3);
    const auto y = lib::cubical_sphere(2);
    const DeformationFamily family(s1_x_s2());
    const Partition p({1, 1, 1});
    const auto r = deformation_sweep(family, p, {1, 2, 3, 5, 8});
    CHECK(r.verdict == GrowthVerdict::Diverges);
    REQUIRE(r.exponent.has_value());
    CHECK(r.exponent == predicted_exponent(x, y, p));
    CHECK(*r.exponent == 2);
    for (const auto& row : r.rows)
        CHECK(row.ratio == *predicted_ratio(x, y, p, row.t));
    for (std::size_t j = 0; j + 1 < r.rows.size(); ++j)
        CHECK(r.rows[j + 1].ratio / r.rows[j].ratio == pow(r.rows[j + 1].t / r.rows[j].t, *r.exponent));

    const auto verdicts = partition_verdicts(parse_product_expression("S1 x S2"));
    for (const auto& v : verdicts)
        if (v.partition == p)
            CHECK(v.divergence_exponent == r.exponent);

    const auto kept = deformation_sweep(family, Partition({1, 2}));
    CHECK(kept.verdict == GrowthVerdict::Bounded);
    CHECK(kept.exponent == 0);
}

TEST_CASE("a single sample reproduces the undeformed ratio")
{
    const auto k = s1_x_s2();
    const auto r = deformation_sweep(DeformationFamily(k), Partition({1, 2}), {1});
    REQUIRE(r.rows.size() == 1);
    const Rational direct = *stable_systole(k, 1).value * *stable_systole(k, 2).value / fundamental_class_mass(k);
    CHECK(r.rows[0].ratio == direct);
    CHECK(r.verdict == GrowthVerdict::Inconclusive);
    CHECK(r.step_exponents.empty());
}

TEST_CASE("sweep preconditions")
{
    const DeformationFamily family(s1_x_s2());
    CHECK_THROWS_AS(deformation_sweep(family, Partition({1, 2}), {}), InputError);
    CHECK_THROWS_AS(deformation_sweep(family, Partition({1, 2}), {2, 1}), InputError);
    CHECK_THROWS_AS(deformation_sweep(family, Partition({1, 2}), {Rational(1, 2), 1}), InputError);
    CHECK_THROWS_AS(deformation_sweep(family, Partition({1, 1}), {1, 2}), InputError);
    const DeformationFamily s1s3(product_complex(lib::circle(3), lib::sphere(3)));
    CHECK_THROWS_AS(deformation_sweep(s1s3, Partition({2, 2}), {1, 2}), PreconditionError);
    CHECK_THROWS_AS(DeformationFamily(lib::circle(3)), InputError);
    const DeformationFamily nonorientable(product_complex(lib::circle(3), lib::rp2()));
    CHECK_THROWS_AS(deformation_sweep(nonorientable, Partition({1, 2}), {1, 2}), PreconditionError);
}

TEST_CASE("CSV reports round-trip exactly")
{
    const auto r = deformation_sweep(DeformationFamily(s1_x_s2()), Partition({1, 1, 1}), {1, 2, 4});
    const std::string csv = to_csv(r);
    CHECK(csv.rfind("t,part1_q1,part2_q1,part3_q1,product,volume,ratio\n", 0) == 0);
    const auto back = parse_csv(csv);
    CHECK(back.partition == r.partition);
    CHECK(back.rows == r.rows);
    CHECK(back.exponent == r.exponent);
    CHECK(back.verdict == r.verdict);

    CHECK_THROWS_AS(parse_csv(""), InputError);
    CHECK_THROWS_AS(parse_csv("t,a,b\n"), InputError);
    CHECK_THROWS_AS(parse_csv("t,part1_q1,product,volume,ratio\n1,2,3\n"), InputError);
    CHECK_THROWS_AS(parse_csv("t,part1_q2,part2_q1,product,volume,ratio\n"), InputError);
}
