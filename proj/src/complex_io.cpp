#include "stsys/complex_io.hpp"

#include "stsys/standard_complexes.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace stsys {

namespace {

using nlohmann::json;

Rational weight_from(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    throw InputError("cell weight must be an integer or a rational string");
}

WeightedCellComplex explicit_complex(const json& j)
{
    const ComplexKind kind = parse_complex_kind(j.value("kind", std::string("general")));
    const auto& degrees = j.at("cells");
    if (!degrees.is_array() || degrees.empty())
        throw InputError("'cells' must be a non-empty array of degrees");
    if (j.contains("top_dim") && j.at("top_dim").get<int>() + 1 != static_cast<int>(degrees.size()))
        throw InputError("'top_dim' disagrees with the number of cell degrees");

    ComplexBuilder builder(kind);
    std::vector<std::unordered_map<std::string, std::size_t>> ids(degrees.size());
    for (std::size_t q = 0; q < degrees.size(); ++q) {
        for (const auto& c : degrees[q]) {
            const std::string id = c.at("id").get<std::string>();
            if (ids[q].count(id))
                throw InputError("duplicate cell id '" + id + "' in degree " + std::to_string(q));
            std::vector<std::pair<std::size_t, long>> faces;
            if (c.contains("boundary")) {
                if (q == 0 && !c.at("boundary").empty())
                    throw InputError("vertex '" + id + "' cannot have a boundary");
                for (const auto& entry : c.at("boundary")) {
                    const std::string face = entry.at(0).get<std::string>();
                    const auto it = q > 0 ? ids[q - 1].find(face) : ids[0].end();
                    if (q == 0 || it == ids[q - 1].end())
                        throw InputError("cell '" + id + "' refers to unknown face '" + face + "'");
                    faces.emplace_back(it->second, entry.at(1).get<long>());
                }
            }
            std::vector<int> vertices;
            if (c.contains("vertices"))
                vertices = c.at("vertices").get<std::vector<int>>();
            std::optional<FactorTag> factor;
            if (c.contains("factor")) {
                const auto f = c.at("factor").get<std::vector<int>>();
                if (f.size() != 2)
                    throw InputError("factor tag of '" + id + "' must have two entries");
                factor = FactorTag{f[0], f[1]};
            }
            const Rational w = c.contains("weight") ? weight_from(c.at("weight")) : Rational(1);
            ids[q][id] = builder.add_cell(static_cast<int>(q), id, w, faces, std::move(vertices), factor);
        }
    }
    return std::move(builder).build();
}

WeightedCellComplex complex_from(const json& j)
{
    if (!j.is_object())
        throw InputError("complex must be a JSON object");
    if (j.contains("library")) {
        std::vector<std::string> args;
        for (const auto& a : j.value("args", json::array()))
            args.push_back(a.is_string() ? a.get<std::string>() : a.dump());
        return library::by_name(j.at("library").get<std::string>(), args);
    }
    if (j.contains("product")) {
        const auto& fs = j.at("product");
        if (!fs.is_array() || fs.size() < 2)
            throw InputError("'product' needs at least two complexes");
        WeightedCellComplex k = complex_from(fs.at(0));
        for (std::size_t i = 1; i < fs.size(); ++i)
            k = product_complex(k, complex_from(fs.at(i)));
        return k;
    }
    if (j.contains("rescale")) {
        const std::string mode = j.value("mode", std::string("uniform"));
        RescaleMode m;
        if (mode == "uniform")
            m = RescaleMode::Uniform;
        else if (mode == "first-factor")
            m = RescaleMode::FirstFactor;
        else
            throw InputError("unknown rescale mode '" + mode + "'");
        return rescale(complex_from(j.at("rescale")), weight_from(j.at("t")), m);
    }
    return explicit_complex(j);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

WeightedCellComplex complex_from_json(std::string_view text)
{
    try {
        return complex_from(json::parse(text));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed complex JSON: ") + e.what());
    }
}

std::string complex_to_json(const WeightedCellComplex& k)
{
    json degrees = json::array();
    for (int q = 0; q <= k.top_dim(); ++q) {
        json cells = json::array();
        for (std::size_t i = 0; i < k.num_cells(q); ++i) {
            const Cell& c = k.cell(q, i);
            json cell{{"id", c.id}, {"weight", to_string(c.weight)}};
            if (!c.vertices.empty())
                cell["vertices"] = c.vertices;
            if (c.factor)
                cell["factor"] = {c.factor->first, c.factor->second};
            if (q > 0) {
                json faces = json::array();
                for (const auto& e : k.boundary_matrix(q).column(i))
                    faces.push_back({k.cell(q - 1, e.row).id, e.value});
                cell["boundary"] = faces;
            }
            cells.push_back(cell);
        }
        degrees.push_back(cells);
    }
    json j{{"kind", std::string(to_string(k.kind()))}, {"top_dim", k.top_dim()}, {"cells", degrees}};
    return j.dump(1);
}

WeightedCellComplex load_complex(const std::string& source)
{
    if (source.rfind("lib:", 0) == 0) {
        std::vector<std::string> pieces;
        std::stringstream ss(source.substr(4));
        std::string piece;
        while (std::getline(ss, piece, ':'))
            pieces.push_back(piece);
        if (pieces.empty() || pieces[0].empty())
            throw InputError("library reference '" + source + "' names no complex");
        return library::by_name(pieces[0], std::vector<std::string>(pieces.begin() + 1, pieces.end()));
    }
    return complex_from_json(read_file(source));
}

void save_complex(const std::string& path, const WeightedCellComplex& k)
{
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << complex_to_json(k) << '\n';
}

}  // namespace stsys
