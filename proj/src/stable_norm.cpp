#include "stsys/stable_norm.hpp"

#include "stsys/linear_program.hpp"
#include "stsys/rational_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace stsys {

std::string_view to_string(NormCertificate c)
{
    switch (c) {
    case NormCertificate::OptimalLp: return "optimal-LP";
    case NormCertificate::TrivialZeroClass: return "trivial-zero-class";
    }
    return "?";
}

std::string_view to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Trivial: return "trivial";
    case SearchStatus::Exact: return "exact";
    case SearchStatus::Certified: return "certified";
    case SearchStatus::BoundedSearch: return "bounded-search";
    }
    return "?";
}

namespace {

/**
 * min Σ w|x| over rational q-cycles x with functional_i(x) = targets_i for
 * every fixed target. Variables are x⁺ (0..n-1) and x⁻ (n..2n-1).
 */
StableNormResult minimize_mass(const WeightedCellComplex& k, const DegreeHomology& d,
                               const std::vector<std::optional<Rational>>& targets)
{
    const int q = d.degree;
    const std::size_t n = k.num_cells(q);
    LinearProgram lp(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        lp.cost[j] = k.weight(q, j);
        lp.cost[n + j] = k.weight(q, j);
    }
    if (q >= 1) {
        const auto& dq = k.boundary_matrix(q);
        std::vector<SparseRow> rows(dq.rows());
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& e : dq.column(j)) {
                rows[e.row].emplace_back(j, Rational(e.value));
                rows[e.row].emplace_back(n + j, Rational(-e.value));
            }
        for (auto& r : rows)
            if (!r.empty())
                lp.add_constraint(std::move(r), 0);
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (!targets[i])
            continue;
        SparseRow row;
        const auto& f = d.coordinate_functionals[i];
        for (std::size_t j = 0; j < n; ++j)
            if (f[j] != 0) {
                row.emplace_back(j, f[j]);
                row.emplace_back(n + j, -f[j]);
            }
        lp.add_constraint(std::move(row), *targets[i]);
    }

    const LpSolution sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
        throw Error("stable norm program did not reach an optimum");
    Chain x{q, std::vector<Rational>(n)};
    for (std::size_t j = 0; j < n; ++j)
        x.coefficients[j] = sol.x[j] - sol.x[n + j];
    StableNormResult out{sol.value, std::move(x), NormCertificate::OptimalLp};
    if (mass(out.optimal_cycle, k) != out.value)
        throw Error("stable norm optimum is not attained by its own cycle");
    return out;
}

Integer gcd_of(const std::vector<Integer>& v)
{
    Integer g = 0;
    for (const auto& x : v)
        g = boost::multiprecision::gcd(g, x);
    return g;
}

std::vector<Rational> to_rational(const std::vector<Integer>& v)
{
    return {v.begin(), v.end()};
}

}  // namespace

StableNormResult stable_norm(const WeightedCellComplex& k, const HomologySummary& h,
                             const HomologyClass& eta)
{
    const auto& d = h.at(eta.degree);
    if (eta.coordinates.size() != d.betti)
        throw InputError("class has " + std::to_string(eta.coordinates.size()) +
                         " coordinates but the Betti number in degree " +
                         std::to_string(eta.degree) + " is " + std::to_string(d.betti));
    if (eta.is_zero())
        return {Rational(0), zero_chain(k, eta.degree), NormCertificate::TrivialZeroClass};
    std::vector<std::optional<Rational>> targets(eta.coordinates.begin(), eta.coordinates.end());
    return minimize_mass(k, d, targets);
}

StableNormResult stable_norm(const WeightedCellComplex& k, const HomologyClass& eta)
{
    return stable_norm(k, homology(k), eta);
}

SystoleResult stable_systole(const WeightedCellComplex& k, const HomologySummary& h, int q,
                             int search_radius)
{
    if (search_radius < 1)
        throw InputError("search radius must be positive");
    SystoleResult out;
    out.degree = q;
    out.search_radius = search_radius;
    if (q < 0 || q > k.top_dim() || h.betti(q) == 0) {
        out.status = SearchStatus::Trivial;
        return out;
    }
    const auto& d = h.at(q);
    const std::size_t b = d.betti;

    if (b == 1) {
        auto r = stable_norm(k, h, HomologyClass{q, {Rational(1)}, std::nullopt});
        out.value = r.value;
        out.witness_class = {Integer(1)};
        out.witness_cycle = std::move(r.optimal_cycle);
        out.status = SearchStatus::Exact;
        return out;
    }

    // Primitive vectors of the box, one from each ± pair (first nonzero entry positive).
    std::vector<Integer> v(b, Integer(-search_radius));
    auto advance = [&] {
        for (std::size_t i = b; i-- > 0;) {
            if (v[i] < search_radius) {
                ++v[i];
                return true;
            }
            v[i] = -search_radius;
        }
        return false;
    };
    do {
        auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
        if (first == v.end() || *first < 0 || gcd_of(v) != 1)
            continue;
        auto r = stable_norm(k, h, HomologyClass{q, to_rational(v), std::nullopt});
        if (!out.value || r.value < *out.value) {
            out.value = r.value;
            out.witness_class = v;
            out.witness_cycle = std::move(r.optimal_cycle);
        }
    } while (advance());

    Rational smallest_slab;
    for (std::size_t i = 0; i < b; ++i) {
        std::vector<std::optional<Rational>> targets(b);
        targets[i] = Rational(1);
        Rational c = minimize_mass(k, d, targets).value;
        if (i == 0 || c < smallest_slab)
            smallest_slab = c;
        out.slab_constants.push_back(std::move(c));
    }
    out.status = *out.value <= search_radius * smallest_slab ? SearchStatus::Certified
                                                             : SearchStatus::BoundedSearch;
    return out;
}

SystoleResult stable_systole(const WeightedCellComplex& k, int q, int search_radius)
{
    return stable_systole(k, homology(k), q, search_radius);
}

namespace {

const Rational& require_value(const SystoleResult& s, const std::string& what)
{
    if (!s.value)
        throw PreconditionError("the degree-" + std::to_string(s.degree) + " stable systole of " +
                                what + " is trivial");
    return *s.value;
}

std::string status_note(std::initializer_list<const SystoleResult*> results)
{
    for (const auto* r : results)
        if (r->status == SearchStatus::BoundedSearch)
            return "a systole came from a bounded search without certificate";
    return {};
}

}  // namespace

LawReport verify_rescaling(const WeightedCellComplex& k, int q, const Rational& t)
{
    const auto before = stable_systole(k, q);
    const Rational& s = require_value(before, "K");
    const auto after = stable_systole(rescale(k, t), q);
    const Rational& st = require_value(after, "the rescaled complex");
    LawReport r;
    r.law = "rescaling";
    r.values = {{"t", t}, {"stsys(K)", s}, {"t^q * stsys(K)", pow(t, q) * s}, {"stsys(K_t)", st}};
    r.holds = st == pow(t, q) * s;
    r.note = status_note({&before, &after});
    return r;
}

LawReport verify_product_inequality(const WeightedCellComplex& k, const WeightedCellComplex& l,
                                    int p, int q)
{
    const auto sk = stable_systole(k, p);
    const auto sl = stable_systole(l, q);
    const Rational& a = require_value(sk, "K");
    const Rational& b = require_value(sl, "L");
    const auto sp = stable_systole(product_complex(k, l), p + q);
    const Rational& c = require_value(sp, "K x L");
    LawReport r;
    r.law = "product";
    r.values = {{"stsys(K x L)", c}, {"stsys(K)", a}, {"stsys(L)", b}, {"stsys(K) * stsys(L)", a * b}};
    r.holds = c <= a * b;
    r.note = status_note({&sk, &sl, &sp});
    return r;
}

LawReport verify_projection_equality(const WeightedCellComplex& k, const WeightedCellComplex& l,
                                     int q)
{
    const auto hk = homology(k);
    const auto hl = homology(l);
    const auto prod = product_complex(k, l);
    const auto hp = homology(prod);
    LawReport r;
    r.law = "projection";
    const std::size_t from_k = hk.betti(q) * hl.betti(0);
    if (hp.betti(q) != from_k || from_k == 0) {
        r.applicable = false;
        r.note = "H_q(K x L) has rank " + std::to_string(hp.betti(q)) +
                 " while H_q(K) (x) H_0(L) has rank " + std::to_string(from_k);
        return r;
    }
    const auto sk = stable_systole(k, hk, q);
    const auto sp = stable_systole(prod, hp, q);
    r.values = {{"stsys(K x L)", *sp.value}, {"stsys(K)", *sk.value}};
    r.holds = *sp.value == *sk.value;
    r.note = status_note({&sk, &sp});
    return r;
}

SimplicialMap::SimplicialMap(WeightedCellComplex source, WeightedCellComplex target,
                             std::map<int, int> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map))
{
    if (source_.kind() != ComplexKind::Simplicial || target_.kind() != ComplexKind::Simplicial)
        throw InputError("simplicial maps need simplicial source and target");
    images_.resize(source_.top_dim() + 1);
    signs_.resize(source_.top_dim() + 1);
    for (int q = 0; q <= source_.top_dim(); ++q) {
        for (const auto& cell : source_.cells(q)) {
            std::vector<int> image;
            for (int v : cell.vertices) {
                auto it = vertex_map_.find(v);
                if (it == vertex_map_.end())
                    throw InputError("vertex map has no image for vertex " + std::to_string(v));
                image.push_back(it->second);
            }
            // Bubble sort keeps track of the permutation parity.
            int sign = 1;
            for (std::size_t a = 0; a < image.size(); ++a)
                for (std::size_t b = 0; b + 1 < image.size() - a; ++b)
                    if (image[b] > image[b + 1]) {
                        std::swap(image[b], image[b + 1]);
                        sign = -sign;
                    }
            if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
                non_degenerate_ = false;
                images_[q].push_back(std::nullopt);
                signs_[q].push_back(0);
                continue;
            }
            auto found = target_.find_simplex(image);
            if (!found)
                throw InputError("vertex map sends simplex " + cell.id + " outside the target");
            images_[q].push_back(found);
            signs_[q].push_back(sign);
        }
    }
}

Chain SimplicialMap::push_forward(const Chain& c) const
{
    validate_chain(source_, c);
    if (c.degree > target_.top_dim())
        throw InputError("chain degree exceeds the target dimension");
    Chain out = zero_chain(target_, c.degree);
    for (std::size_t i = 0; i < c.coefficients.size(); ++i)
        if (const auto& img = images_[c.degree][i]; img && c.coefficients[i] != 0)
            out.coefficients[*img] += signs_[c.degree][i] * c.coefficients[i];
    return out;
}

WeightedCellComplex SimplicialMap::pullback_weights() const
{
    if (!non_degenerate_)
        throw PreconditionError("pullback weights need a non-degenerate map");
    std::vector<std::vector<Rational>> w(source_.top_dim() + 1);
    for (int q = 0; q <= source_.top_dim(); ++q)
        for (std::size_t i = 0; i < source_.num_cells(q); ++i)
            w[q].push_back(target_.weight(q, *images_[q][i]));
    return source_.with_weights(w);
}

Integer degree_bound(const SimplicialMap& g)
{
    if (!g.non_degenerate())
        throw PreconditionError("degree bound needs a non-degenerate map");
    const int n = g.source().top_dim();
    if (g.target().top_dim() != n)
        throw PreconditionError("source and target dimensions differ");
    const auto hk = homology(g.source());
    const auto hl = homology(g.target());
    if (hk.betti(n) != 1 || hl.betti(n) != 1)
        throw PreconditionError("degree bound needs one-dimensional top homology on both sides");
    const Chain& zk = hk.at(n).generators[0];
    const Chain& zl = hl.at(n).generators[0];

    std::vector<Rational> count(g.target().num_cells(n));
    for (std::size_t i = 0; i < g.source().num_cells(n); ++i)
        count[*g.image(n, i)] += g.orientation(n, i) * zk.coefficients[i];
    Integer best = 0;
    for (std::size_t e = 0; e < count.size(); ++e) {
        if (zl.coefficients[e] == 0)
            throw PreconditionError("target top cycle misses simplex " + g.target().cell(n, e).id);
        const Rational deg = count[e] / zl.coefficients[e];
        if (!is_integer(deg))
            throw PreconditionError("local degree over " + g.target().cell(n, e).id +
                                    " is not an integer");
        best = std::max(best, Integer(abs(boost::multiprecision::numerator(deg))));
    }
    return best;
}

LawReport verify_degree_sandwich(const SimplicialMap& g, int q)
{
    const WeightedCellComplex k = g.pullback_weights();
    const auto hk = homology(k);
    const auto hl = homology(g.target());
    LawReport r;
    r.law = "degree-sandwich";

    const auto& dk = hk.at(q);
    if (dk.betti == 0 || hl.betti(q) == 0) {
        r.applicable = false;
        r.note = "degree-" + std::to_string(q) + " rational homology vanishes";
        return r;
    }
    RationalMatrix images(dk.betti, hl.betti(q));
    for (std::size_t i = 0; i < dk.betti; ++i) {
        const auto coords = class_coordinates(g.target(), hl, g.push_forward(dk.generators[i]));
        for (std::size_t j = 0; j < coords.size(); ++j)
            images(i, j) = coords[j];
    }
    if (rank(images) != dk.betti) {
        r.applicable = false;
        r.note = "the map is not injective on degree-" + std::to_string(q) + " rational homology";
        return r;
    }

    const Integer d = degree_bound(g);
    const auto sl = stable_systole(g.target(), hl, q);
    const auto sk = stable_systole(k, hk, q);
    const Rational& lo = *sl.value;
    const Rational& mid = *sk.value;
    const Rational hi = Rational(d) * lo;
    r.values = {{"D(g)", Rational(d)}, {"stsys(L)", lo}, {"stsys(K, g*G_L)", mid}, {"D(g) * stsys(L)", hi}};
    r.holds = lo <= mid && mid <= hi;
    r.note = status_note({&sl, &sk});
    return r;
}

}  // namespace stsys
