#pragma once

#include "stsys/cell_complex.hpp"
#include "stsys/homology.hpp"
#include "stsys/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stsys {

enum class NormCertificate { OptimalLp, TrivialZeroClass };

std::string_view to_string(NormCertificate c);

/// Least mass of a rational cycle in a rational homology class.
struct StableNormResult {
    Rational value;
    Chain optimal_cycle;
    NormCertificate certificate = NormCertificate::OptimalLp;
};

/**
 * Minimizes Σ w_i |x_i| over rational q-cycles x whose class has the given
 * lattice coordinates. Throws InputError on a bad degree or coordinate length.
 */
StableNormResult stable_norm(const WeightedCellComplex& k, const HomologySummary& h,
                             const HomologyClass& eta);
StableNormResult stable_norm(const WeightedCellComplex& k, const HomologyClass& eta);

enum class SearchStatus { Trivial, Exact, Certified, BoundedSearch };

std::string_view to_string(SearchStatus s);

/**
 * Least stable norm over integral classes with nonzero rational image.
 * `value` is empty exactly when the status is Trivial (betti_q = 0).
 */
struct SystoleResult {
    int degree = 0;
    std::optional<Rational> value;
    std::vector<Integer> witness_class;
    std::optional<Chain> witness_cycle;
    SearchStatus status = SearchStatus::Trivial;
    int search_radius = 0;
    std::vector<Rational> slab_constants;  // filled when betti_q >= 2

    bool is_trivial() const { return status == SearchStatus::Trivial; }
};

/**
 * betti_q = 0: Trivial. betti_q = 1: the generator, Exact. Otherwise the
 * primitive vectors of [-R, R]^betti are searched and the result is
 * Certified when it is at most R times the smallest slab constant
 * c_i = min{ ||η|| : η_i = 1 }, since every class outside the box has some
 * |η_i| > R and hence norm > R·c_i. Otherwise BoundedSearch.
 */
SystoleResult stable_systole(const WeightedCellComplex& k, const HomologySummary& h, int q,
                             int search_radius = 5);
SystoleResult stable_systole(const WeightedCellComplex& k, int q, int search_radius = 5);

/// Outcome of checking one inequality or equality between systoles.
struct LawReport {
    std::string law;
    bool applicable = true;
    bool holds = false;
    std::vector<std::pair<std::string, Rational>> values;  // named quantities, in print order
    std::string note;
};

/// stsys_q(rescale(K, t)) = t^q · stsys_q(K). PreconditionError if trivial.
LawReport verify_rescaling(const WeightedCellComplex& k, int q, const Rational& t);

/// stsys_{p+q}(K × L) <= stsys_p(K) · stsys_q(L). PreconditionError if either side is trivial.
LawReport verify_product_inequality(const WeightedCellComplex& k, const WeightedCellComplex& l,
                                    int p, int q);

/**
 * stsys_q(K × L) = stsys_q(K) when all of H_q(K × L) comes from
 * H_q(K) ⊗ H_0(L) and is nonzero; otherwise the report is inapplicable.
 */
LawReport verify_projection_equality(const WeightedCellComplex& k, const WeightedCellComplex& l,
                                     int q);

/**
 * A vertex map between simplicial complexes that sends every simplex onto a
 * simplex. Vertices are identified by their labels in the source and target.
 */
class SimplicialMap {
public:
    SimplicialMap(WeightedCellComplex source, WeightedCellComplex target,
                  std::map<int, int> vertex_map);

    const WeightedCellComplex& source() const { return source_; }
    const WeightedCellComplex& target() const { return target_; }
    const std::map<int, int>& vertex_map() const { return vertex_map_; }

    /// No simplex is collapsed onto a lower-dimensional one.
    bool non_degenerate() const { return non_degenerate_; }

    /// Index of the image simplex, or nothing when simplex i collapses.
    std::optional<std::size_t> image(int q, std::size_t i) const { return images_.at(q).at(i); }

    /// Sign of the vertex permutation relating the image to its stored order.
    int orientation(int q, std::size_t i) const { return signs_.at(q).at(i); }

    Chain push_forward(const Chain& c) const;

    /// Source complex whose simplices carry the weights of their images.
    WeightedCellComplex pullback_weights() const;

private:
    WeightedCellComplex source_;
    WeightedCellComplex target_;
    std::map<int, int> vertex_map_;
    bool non_degenerate_ = true;
    std::vector<std::vector<std::optional<std::size_t>>> images_;
    std::vector<std::vector<int>> signs_;
};

/**
 * max over top simplices e of the target of |deg_e|, where deg_e counts the
 * preimages of e with the signs by which the source fundamental cycle meets
 * them. Requires a non-degenerate map between complexes of equal dimension,
 * each with a one-dimensional top homology.
 */
Integer degree_bound(const SimplicialMap& g);

/**
 * stsys_q(L) <= stsys_q(K, g*G_L) <= D(g) · stsys_q(L), with K carrying the
 * pulled-back weights. Inapplicable when g_* is not injective on H_q(;Q).
 */
LawReport verify_degree_sandwich(const SimplicialMap& g, int q);

}  // namespace stsys
