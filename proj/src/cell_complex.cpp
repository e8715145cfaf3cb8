#include "stsys/cell_complex.hpp"

#include <algorithm>
#include <sstream>

namespace stsys {

std::string_view to_string(ComplexKind kind)
{
    switch (kind) {
    case ComplexKind::Simplicial: return "simplicial";
    case ComplexKind::Cubical: return "cubical";
    case ComplexKind::General: return "general";
    }
    return "general";
}

ComplexKind parse_complex_kind(std::string_view text)
{
    if (text == "simplicial")
        return ComplexKind::Simplicial;
    if (text == "cubical")
        return ComplexKind::Cubical;
    if (text == "general")
        return ComplexKind::General;
    throw InputError("unknown complex kind '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// SparseIntMatrix

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols)
{}

long SparseIntMatrix::at(std::size_t row, std::size_t col) const
{
    for (const auto& e : columns_.at(col))
        if (e.row == row)
            return e.value;
    return 0;
}

void SparseIntMatrix::add(std::size_t row, std::size_t col, long value)
{
    if (row >= rows_)
        throw InputError("matrix row index out of range");
    auto& column = columns_.at(col);
    auto it = std::lower_bound(column.begin(), column.end(), row,
                               [](const MatrixEntry& e, std::size_t r) { return e.row < r; });
    if (it != column.end() && it->row == row) {
        it->value += value;
        if (it->value == 0)
            column.erase(it);
    } else if (value != 0) {
        column.insert(it, MatrixEntry{row, value});
    }
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& rhs) const
{
    if (cols() != rhs.rows())
        throw InputError("matrix shapes do not compose");
    SparseIntMatrix out(rows_, rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j)
        for (const auto& r : rhs.column(j))
            for (const auto& l : column(r.row))
                out.add(l.row, j, l.value * r.value);
    return out;
}

bool SparseIntMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(),
                       [](const auto& c) { return c.empty(); });
}

std::size_t SparseIntMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

// ---------------------------------------------------------------------------
// WeightedCellComplex

namespace {

std::vector<std::pair<std::size_t, long>> alternating_faces(
    const std::vector<int>& vertices, const std::map<std::vector<int>, std::size_t>& index,
    bool& missing)
{
    std::vector<std::pair<std::size_t, long>> out;
    missing = false;
    if (vertices.size() < 2)
        return out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        std::vector<int> face;
        face.reserve(vertices.size() - 1);
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (j != i)
                face.push_back(vertices[j]);
        auto it = index.find(face);
        if (it == index.end()) {
            missing = true;
            return {};
        }
        out.emplace_back(it->second, (i % 2 == 0) ? 1L : -1L);
    }
    return out;
}

}  // namespace

WeightedCellComplex::WeightedCellComplex(ComplexKind kind, std::vector<std::vector<Cell>> cells,
                                         std::vector<SparseIntMatrix> boundaries)
    : kind_(kind), cells_(std::move(cells)), boundaries_(std::move(boundaries))
{
    if (cells_.empty())
        throw InputError("a cell complex needs at least one degree");
    if (cells_[0].empty())
        throw InputError("a cell complex needs at least one vertex");
    while (cells_.size() > 1 && cells_.back().empty())
        cells_.pop_back();
    boundaries_.resize(cells_.size());

    const int top = top_dim();
    id_index_.resize(cells_.size());
    for (int q = 0; q <= top; ++q) {
        for (std::size_t i = 0; i < cells_[q].size(); ++i) {
            const Cell& c = cells_[q][i];
            if (c.weight <= 0)
                throw InputError("cell '" + c.id + "' has non-positive weight " + to_string(c.weight));
            if (!id_index_[q].emplace(c.id, i).second)
                throw InputError("duplicate cell id '" + c.id + "' in degree " + std::to_string(q));
            if (c.factor && (c.factor->first < 0 || c.factor->second < 0 ||
                             c.factor->first + c.factor->second != q))
                throw InputError("factor tag of cell '" + c.id + "' does not add up to its degree");
        }
    }
    boundaries_[0] = SparseIntMatrix(0, cells_[0].size());
    for (int q = 1; q <= top; ++q) {
        const auto& d = boundaries_[q];
        if (d.rows() != cells_[q - 1].size() || d.cols() != cells_[q].size())
            throw InputError("boundary matrix in degree " + std::to_string(q) + " has the wrong shape");
    }
    for (int q = 2; q <= top; ++q)
        if (!(boundaries_[q - 1] * boundaries_[q]).is_zero())
            throw InputError("boundary of boundary is nonzero in degree " + std::to_string(q));

    if (kind_ == ComplexKind::Simplicial) {
        for (int q = 0; q <= top; ++q)
            for (std::size_t i = 0; i < cells_[q].size(); ++i) {
                const auto& v = cells_[q][i].vertices;
                if (v.size() != static_cast<std::size_t>(q + 1) ||
                    !std::is_sorted(v.begin(), v.end()) ||
                    std::adjacent_find(v.begin(), v.end()) != v.end())
                    throw InputError("simplex '" + cells_[q][i].id +
                                     "' must list q+1 distinct increasing vertices");
                if (!simplex_index_.emplace(v, i).second)
                    throw InputError("simplex '" + cells_[q][i].id + "' appears twice");
            }
        for (int q = 1; q <= top; ++q)
            for (std::size_t i = 0; i < cells_[q].size(); ++i) {
                bool missing = false;
                auto faces = alternating_faces(cells_[q][i].vertices, simplex_index_, missing);
                if (missing)
                    throw InputError("simplex '" + cells_[q][i].id + "' has a missing face");
                SparseIntMatrix expected(cells_[q - 1].size(), 1);
                for (auto [row, s] : faces)
                    expected.add(row, 0, s);
                auto stored = boundaries_[q].column(i);
                auto want = expected.column(0);
                bool same = stored.size() == want.size() &&
                            std::equal(stored.begin(), stored.end(), want.begin(),
                                       [](const MatrixEntry& a, const MatrixEntry& b) {
                                           return a.row == b.row && a.value == b.value;
                                       });
                if (!same)
                    throw InputError("simplex '" + cells_[q][i].id +
                                     "' does not carry the alternating face boundary");
            }
    }
}

std::size_t WeightedCellComplex::num_cells(int q) const
{
    if (q < 0 || q > top_dim())
        return 0;
    return cells_[q].size();
}

std::size_t WeightedCellComplex::total_cells() const
{
    std::size_t n = 0;
    for (const auto& c : cells_)
        n += c.size();
    return n;
}

const std::vector<Cell>& WeightedCellComplex::cells(int q) const
{
    if (q < 0 || q > top_dim())
        throw InputError("degree " + std::to_string(q) + " out of range [0, " +
                         std::to_string(top_dim()) + "]");
    return cells_[q];
}

const SparseIntMatrix& WeightedCellComplex::boundary_matrix(int q) const
{
    if (q < 1 || q > top_dim())
        throw InputError("boundary degree " + std::to_string(q) + " out of range [1, " +
                         std::to_string(top_dim()) + "]");
    return boundaries_[q];
}

std::optional<std::size_t> WeightedCellComplex::find_cell(int q, std::string_view id) const
{
    if (q < 0 || q > top_dim())
        return std::nullopt;
    auto it = id_index_[q].find(std::string(id));
    if (it == id_index_[q].end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> WeightedCellComplex::find_simplex(const std::vector<int>& vertices) const
{
    auto it = simplex_index_.find(vertices);
    if (it == simplex_index_.end())
        return std::nullopt;
    return it->second;
}

bool WeightedCellComplex::has_factor_tags() const
{
    for (const auto& degree : cells_)
        for (const auto& c : degree)
            if (!c.factor)
                return false;
    return true;
}

WeightedCellComplex WeightedCellComplex::with_weights(
    const std::vector<std::vector<Rational>>& weights) const
{
    if (weights.size() != cells_.size())
        throw InputError("weight table has the wrong number of degrees");
    auto cells = cells_;
    for (std::size_t q = 0; q < cells.size(); ++q) {
        if (weights[q].size() != cells[q].size())
            throw InputError("weight table has the wrong length in degree " + std::to_string(q));
        for (std::size_t i = 0; i < cells[q].size(); ++i)
            cells[q][i].weight = weights[q][i];
    }
    return WeightedCellComplex(kind_, std::move(cells), boundaries_);
}

// ---------------------------------------------------------------------------
// ComplexBuilder

void ComplexBuilder::ensure_degree(int q)
{
    if (q < 0)
        throw InputError("negative cell degree");
    if (static_cast<int>(cells_.size()) <= q) {
        cells_.resize(q + 1);
        columns_.resize(q + 1);
    }
}

std::size_t ComplexBuilder::num_cells(int q) const
{
    if (q < 0 || q >= static_cast<int>(cells_.size()))
        return 0;
    return cells_[q].size();
}

std::size_t ComplexBuilder::add_cell(int q, std::string id, Rational weight,
                                     const std::vector<std::pair<std::size_t, long>>& boundary,
                                     std::vector<int> vertices, std::optional<FactorTag> factor)
{
    ensure_degree(q);
    if (q == 0 && !boundary.empty())
        throw InputError("vertices have no boundary");
    for (auto [row, value] : boundary)
        if (row >= num_cells(q - 1))
            throw InputError("cell '" + id + "' refers to a face that does not exist yet");
    if (!vertices.empty())
        simplices_.emplace(vertices, cells_[q].size());
    cells_[q].push_back(Cell{std::move(id), std::move(weight), std::move(vertices), factor});
    columns_[q].push_back(boundary);
    return cells_[q].size() - 1;
}

namespace {

std::string simplex_id(const std::vector<int>& v)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

}  // namespace

std::size_t ComplexBuilder::add_simplex(std::vector<int> vertices, Rational weight)
{
    std::sort(vertices.begin(), vertices.end());
    const int q = static_cast<int>(vertices.size()) - 1;
    if (q < 0)
        throw InputError("empty simplex");
    if (auto it = simplices_.find(vertices); it != simplices_.end())
        return it->second;
    bool missing = false;
    auto faces = alternating_faces(vertices, simplices_, missing);
    if (missing)
        throw InputError("simplex " + simplex_id(vertices) + " added before its faces");
    return add_cell(q, simplex_id(vertices), std::move(weight), faces, vertices);
}

std::size_t ComplexBuilder::add_simplex_closure(std::vector<int> vertices, Rational weight,
                                                const Rational& face_weight)
{
    std::sort(vertices.begin(), vertices.end());
    const std::size_t n = vertices.size();
    // Faces in order of dimension, lexicographic within a dimension.
    for (std::size_t size = 1; size < n; ++size) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + size, true);
        do {
            std::vector<int> face;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i])
                    face.push_back(vertices[i]);
            if (!simplices_.count(face))
                add_simplex(face, face_weight);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return add_simplex(std::move(vertices), std::move(weight));
}

WeightedCellComplex ComplexBuilder::build() &&
{
    std::vector<SparseIntMatrix> boundaries(cells_.size());
    for (std::size_t q = 1; q < cells_.size(); ++q) {
        SparseIntMatrix d(cells_[q - 1].size(), cells_[q].size());
        for (std::size_t j = 0; j < columns_[q].size(); ++j)
            for (auto [row, value] : columns_[q][j])
                d.add(row, j, value);
        boundaries[q] = std::move(d);
    }
    return WeightedCellComplex(kind_, std::move(cells_), std::move(boundaries));
}

// ---------------------------------------------------------------------------
// Chains

bool Chain::is_zero() const
{
    return std::all_of(coefficients.begin(), coefficients.end(),
                       [](const Rational& x) { return x == 0; });
}

bool Chain::is_integral() const
{
    return std::all_of(coefficients.begin(), coefficients.end(),
                       [](const Rational& x) { return is_integer(x); });
}

Chain& Chain::operator+=(const Chain& rhs)
{
    if (degree != rhs.degree || coefficients.size() != rhs.coefficients.size())
        throw InputError("adding chains of different shape");
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        coefficients[i] += rhs.coefficients[i];
    return *this;
}

Chain& Chain::operator-=(const Chain& rhs)
{
    if (degree != rhs.degree || coefficients.size() != rhs.coefficients.size())
        throw InputError("subtracting chains of different shape");
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        coefficients[i] -= rhs.coefficients[i];
    return *this;
}

Chain& Chain::operator*=(const Rational& s)
{
    for (auto& x : coefficients)
        x *= s;
    return *this;
}

Chain zero_chain(const WeightedCellComplex& k, int q)
{
    return Chain{q, std::vector<Rational>(k.cells(q).size())};
}

Chain cell_chain(const WeightedCellComplex& k, int q, std::size_t index, const Rational& coefficient)
{
    Chain c = zero_chain(k, q);
    c.coefficients.at(index) = coefficient;
    return c;
}

void validate_chain(const WeightedCellComplex& k, const Chain& c)
{
    if (c.degree < 0 || c.degree > k.top_dim())
        throw InputError("chain degree " + std::to_string(c.degree) + " out of range");
    if (c.coefficients.size() != k.num_cells(c.degree))
        throw InputError("chain has " + std::to_string(c.coefficients.size()) +
                         " coefficients, expected " + std::to_string(k.num_cells(c.degree)));
}

Chain boundary(const WeightedCellComplex& k, const Chain& c)
{
    validate_chain(k, c);
    if (c.degree == 0)
        return Chain{-1, {}};
    const auto& d = k.boundary_matrix(c.degree);
    Chain out{c.degree - 1, std::vector<Rational>(d.rows())};
    for (std::size_t j = 0; j < d.cols(); ++j) {
        if (c.coefficients[j] == 0)
            continue;
        for (const auto& e : d.column(j))
            out.coefficients[e.row] += c.coefficients[j] * e.value;
    }
    return out;
}

bool is_cycle(const WeightedCellComplex& k, const Chain& c)
{
    return boundary(k, c).is_zero();
}

Rational mass(const Chain& c, const WeightedCellComplex& k)
{
    validate_chain(k, c);
    Rational total = 0;
    for (std::size_t i = 0; i < c.coefficients.size(); ++i)
        if (c.coefficients[i] != 0)
            total += abs(c.coefficients[i]) * k.weight(c.degree, i);
    return total;
}

const SparseIntMatrix& boundary_matrix(const WeightedCellComplex& k, int q)
{
    return k.boundary_matrix(q);
}

// ---------------------------------------------------------------------------
// Products

namespace {

bool is_single_point(const WeightedCellComplex& k)
{
    return k.top_dim() == 0 && k.num_cells(0) == 1;
}

std::size_t block_offset(const WeightedCellComplex& k, const WeightedCellComplex& l, int q, int p)
{
    std::size_t offset = 0;
    const int lo = std::max(0, q - l.top_dim());
    for (int r = lo; r < p; ++r)
        offset += k.num_cells(r) * l.num_cells(q - r);
    return offset;
}

}  // namespace

std::size_t product_cell_index(const WeightedCellComplex& k, const WeightedCellComplex& l,
                               int deg_a, std::size_t a, int deg_b, std::size_t b)
{
    return block_offset(k, l, deg_a + deg_b, deg_a) + a * l.num_cells(deg_b) + b;
}

WeightedCellComplex product_complex(const WeightedCellComplex& k, const WeightedCellComplex& l)
{
    const int n = k.top_dim();
    const int m = l.top_dim();
    ComplexKind kind = (k.kind() == ComplexKind::Cubical && l.kind() == ComplexKind::Cubical)
                           ? ComplexKind::Cubical
                           : ComplexKind::General;
    const bool point_left = is_single_point(k);
    const bool point_right = is_single_point(l);
    if (point_left)
        kind = l.kind();
    else if (point_right)
        kind = k.kind();

    std::vector<std::vector<Cell>> cells(n + m + 1);
    std::vector<SparseIntMatrix> boundaries(n + m + 1);
    for (int q = 0; q <= n + m; ++q) {
        std::size_t count = 0;
        for (int p = std::max(0, q - m); p <= std::min(q, n); ++p)
            count += k.num_cells(p) * l.num_cells(q - p);
        cells[q].reserve(count);
        if (q > 0)
            boundaries[q] = SparseIntMatrix(cells[q - 1].size(), count);

        for (int p = std::max(0, q - m); p <= std::min(q, n); ++p) {
            const int r = q - p;
            for (std::size_t a = 0; a < k.num_cells(p); ++a) {
                for (std::size_t b = 0; b < l.num_cells(r); ++b) {
                    const Cell& ca = k.cell(p, a);
                    const Cell& cb = l.cell(r, b);
                    Cell c;
                    c.id = ca.id + "*" + cb.id;
                    c.weight = ca.weight * cb.weight;
                    c.factor = FactorTag{p, r};
                    if (point_left)
                        c.vertices = cb.vertices;
                    else if (point_right)
                        c.vertices = ca.vertices;
                    const std::size_t col = cells[q].size();
                    cells[q].push_back(std::move(c));
                    if (q == 0)
                        continue;
                    if (p > 0)
                        for (const auto& e : k.boundary_matrix(p).column(a))
                            boundaries[q].add(product_cell_index(k, l, p - 1, e.row, r, b), col, e.value);
                    if (r > 0) {
                        const long sign = (p % 2 == 0) ? 1 : -1;
                        for (const auto& e : l.boundary_matrix(r).column(b))
                            boundaries[q].add(product_cell_index(k, l, p, a, r - 1, e.row), col,
                                              sign * e.value);
                    }
                }
            }
        }
    }
    return WeightedCellComplex(kind, std::move(cells), std::move(boundaries));
}

Chain cross_product(const WeightedCellComplex& k, const WeightedCellComplex& l, const Chain& s,
                    const Chain& t)
{
    validate_chain(k, s);
    validate_chain(l, t);
    std::size_t size = 0;
    const int q = s.degree + t.degree;
    for (int p = std::max(0, q - l.top_dim()); p <= std::min(q, k.top_dim()); ++p)
        size += k.num_cells(p) * l.num_cells(q - p);
    Chain out{q, std::vector<Rational>(size)};
    for (std::size_t a = 0; a < s.coefficients.size(); ++a) {
        if (s.coefficients[a] == 0)
            continue;
        for (std::size_t b = 0; b < t.coefficients.size(); ++b)
            if (t.coefficients[b] != 0)
                out.coefficients[product_cell_index(k, l, s.degree, a, t.degree, b)] =
                    s.coefficients[a] * t.coefficients[b];
    }
    return out;
}

WeightedCellComplex rescale(const WeightedCellComplex& k, const Rational& t, RescaleMode mode)
{
    if (t <= 0)
        throw InputError("rescaling factor must be positive, got " + to_string(t));
    if (mode == RescaleMode::FirstFactor && !k.has_factor_tags())
        throw InputError("first-factor rescaling needs a product complex with factor tags");
    std::vector<std::vector<Rational>> weights(k.top_dim() + 1);
    for (int q = 0; q <= k.top_dim(); ++q) {
        weights[q].reserve(k.num_cells(q));
        const Rational uniform = pow(t, q);
        for (const auto& c : k.cells(q)) {
            const Rational factor = (mode == RescaleMode::Uniform) ? uniform : pow(t, c.factor->first);
            weights[q].push_back(c.weight * factor);
        }
    }
    return k.with_weights(weights);
}

DeformationFamily::DeformationFamily(WeightedCellComplex base) : base_(std::move(base))
{
    if (!base_.has_factor_tags())
        throw InputError("a deformation family needs a product complex with factor tags");
}

WeightedCellComplex DeformationFamily::at(const Rational& t) const
{
    return rescale(base_, t, RescaleMode::FirstFactor);
}

}  // namespace stsys
