#include "stsys/standard_complexes.hpp"

#include <algorithm>
#include <map>

namespace stsys::library {

WeightedCellComplex point()
{
    ComplexBuilder b(ComplexKind::Simplicial);
    b.add_simplex({0}, 1);
    return std::move(b).build();
}

WeightedCellComplex circle(int k, const Rational& edge_weight)
{
    if (k < 3)
        throw InputError("a simplicial circle needs at least 3 vertices");
    ComplexBuilder b(ComplexKind::Simplicial);
    for (int v = 0; v < k; ++v)
        b.add_simplex({v}, 1);
    for (int v = 0; v < k; ++v)
        b.add_simplex({v, (v + 1) % k}, edge_weight);
    return std::move(b).build();
}

WeightedCellComplex cubical_circle(int k, const Rational& edge_weight)
{
    if (k < 1)
        throw InputError("a cubical circle needs at least 1 vertex");
    ComplexBuilder b(ComplexKind::Cubical);
    for (int v = 0; v < k; ++v)
        b.add_cell(0, "v" + std::to_string(v), 1, {});
    for (int v = 0; v < k; ++v) {
        const std::size_t from = v;
        const std::size_t to = (v + 1) % k;
        std::vector<std::pair<std::size_t, long>> d;
        if (from != to)
            d = {{from, -1}, {to, 1}};
        b.add_cell(1, "e" + std::to_string(v), edge_weight, d);
    }
    return std::move(b).build();
}

WeightedCellComplex sphere(int n, const Rational& weight)
{
    if (n < 0)
        throw InputError("sphere dimension must be non-negative");
    ComplexBuilder b(ComplexKind::Simplicial);
    const int vertices = n + 2;
    // Every proper nonempty subset of {0..n+1}, by size then lexicographically.
    for (int size = 1; size <= n + 1; ++size) {
        std::vector<bool> pick(vertices, false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            std::vector<int> s;
            for (int i = 0; i < vertices; ++i)
                if (pick[i])
                    s.push_back(i);
            b.add_simplex(s, size == 1 ? Rational(1) : weight);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return std::move(b).build();
}

WeightedCellComplex cubical_sphere(int n, const Rational& weight)
{
    if (n < 0)
        throw InputError("sphere dimension must be non-negative");
    const int dims = n + 1;
    // A face of [0,1]^dims is a word over {0, 1, *}; '*' marks a free coordinate.
    std::vector<std::vector<std::string>> faces(dims);
    std::map<std::string, std::size_t> index;
    long total = 1;
    for (int i = 0; i < dims; ++i)
        total *= 3;
    std::vector<std::string> all;
    for (long code = 0; code < total; ++code) {
        std::string w(dims, '0');
        long c = code;
        int free = 0;
        for (int i = 0; i < dims; ++i) {
            w[i] = "01*"[c % 3];
            free += (w[i] == '*');
            c /= 3;
        }
        if (free < dims)
            faces[free].push_back(w);
    }
    ComplexBuilder b(ComplexKind::Cubical);
    for (int q = 0; q < dims; ++q) {
        std::sort(faces[q].begin(), faces[q].end());
        for (const auto& w : faces[q]) {
            std::vector<std::pair<std::size_t, long>> d;
            int j = 0;
            for (int i = 0; i < dims; ++i) {
                if (w[i] != '*')
                    continue;
                const long sign = (j % 2 == 0) ? 1 : -1;
                std::string lo = w, hi = w;
                lo[i] = '0';
                hi[i] = '1';
                d.emplace_back(index.at(hi), sign);
                d.emplace_back(index.at(lo), -sign);
                ++j;
            }
            index[w] = b.add_cell(q, w, q == 0 ? Rational(1) : weight, d);
        }
    }
    return std::move(b).build();
}

WeightedCellComplex flat_torus(int k, const Rational& edge_length)
{
    auto c = cubical_circle(k, edge_length);
    return product_complex(c, c);
}

WeightedCellComplex rp2()
{
    static const int triangles[10][3] = {
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
        {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5},
    };
    ComplexBuilder b(ComplexKind::Simplicial);
    for (const auto& t : triangles)
        b.add_simplex_closure({t[0], t[1], t[2]}, 1);
    return std::move(b).build();
}

WeightedCellComplex torus9()
{
    ComplexBuilder b(ComplexKind::Simplicial);
    auto v = [](int i, int j) { return 3 * ((i % 3 + 3) % 3) + ((j % 3 + 3) % 3); };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            b.add_simplex_closure({v(i, j), v(i + 1, j), v(i + 1, j + 1)}, 1);
            b.add_simplex_closure({v(i, j), v(i, j + 1), v(i + 1, j + 1)}, 1);
        }
    return std::move(b).build();
}

WeightedCellComplex simplicial_torus(int dim, int k)
{
    if (dim < 1 || k < 3)
        throw InputError("simplicial torus needs dim >= 1 and k >= 3");
    std::size_t count = 1;
    for (int i = 0; i < dim; ++i)
        count *= static_cast<std::size_t>(k);
    auto label = [&](const std::vector<int>& x) {
        int v = 0;
        for (int i = dim; i-- > 0;)
            v = v * k + ((x[i] % k) + k) % k;
        return v;
    };
    ComplexBuilder b(ComplexKind::Simplicial);
    std::vector<int> axes(dim);
    for (int i = 0; i < dim; ++i)
        axes[i] = i;
    for (std::size_t base = 0; base < count; ++base) {
        std::vector<int> x(dim);
        for (int i = 0, r = static_cast<int>(base); i < dim; ++i, r /= k)
            x[i] = r % k;
        // One top simplex per ordering of the axes: walk from x, one unit step per axis.
        std::vector<int> order = axes;
        do {
            std::vector<int> simplex{label(x)};
            std::vector<int> y = x;
            for (int a : order) {
                ++y[a];
                simplex.push_back(label(y));
            }
            b.add_simplex_closure(std::move(simplex), 1);
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return std::move(b).build();
}

WeightedCellComplex graph(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<Rational>& edge_weights)
{
    if (num_vertices < 1)
        throw InputError("a graph needs at least one vertex");
    if (edges.size() != edge_weights.size())
        throw InputError("one weight per edge is required");
    ComplexBuilder b(ComplexKind::General);
    for (int v = 0; v < num_vertices; ++v)
        b.add_cell(0, "v" + std::to_string(v), 1, {});
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [from, to] = edges[e];
        if (from < 0 || to < 0 || from >= num_vertices || to >= num_vertices)
            throw InputError("edge endpoint out of range");
        std::vector<std::pair<std::size_t, long>> d;
        if (from != to)
            d = {{static_cast<std::size_t>(from), -1}, {static_cast<std::size_t>(to), 1}};
        b.add_cell(1, "e" + std::to_string(e), edge_weights[e], d);
    }
    return std::move(b).build();
}

std::vector<std::string> names()
{
    return {"point", "circle", "cubical-circle", "sphere", "cubical-sphere",
            "flat-torus", "rp2", "torus9", "simplicial-torus"};
}

WeightedCellComplex by_name(const std::string& name, const std::vector<std::string>& args)
{
    auto int_arg = [&](std::size_t i) {
        if (i >= args.size())
            throw InputError("'" + name + "' needs an integer argument");
        const Rational r = parse_rational(args[i]);
        if (!is_integer(r))
            throw InputError("'" + args[i] + "' is not an integer");
        return static_cast<int>(boost::multiprecision::numerator(r));
    };
    auto rational_arg = [&](std::size_t i) {
        return i < args.size() ? parse_rational(args[i]) : Rational(1);
    };
    if (name == "point")
        return point();
    if (name == "circle")
        return circle(int_arg(0), rational_arg(1));
    if (name == "cubical-circle")
        return cubical_circle(int_arg(0), rational_arg(1));
    if (name == "sphere")
        return sphere(int_arg(0), rational_arg(1));
    if (name == "cubical-sphere")
        return cubical_sphere(int_arg(0), rational_arg(1));
    if (name == "flat-torus")
        return flat_torus(int_arg(0), rational_arg(1));
    if (name == "rp2")
        return rp2();
    if (name == "torus9")
        return torus9();
    if (name == "simplicial-torus")
        return simplicial_torus(int_arg(0), args.size() > 1 ? int_arg(1) : 3);
    throw InputError("unknown library complex '" + name + "'");
}

}  // namespace stsys::library
