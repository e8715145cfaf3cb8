#include "cli.hpp"

#include "stsys/category.hpp"
#include "stsys/cohomology.hpp"
#include "stsys/complex_io.hpp"
#include "stsys/experiment.hpp"
#include "stsys/homology.hpp"
#include "stsys/profile.hpp"
#include "stsys/stable_norm.hpp"
#include "stsys/standard_complexes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace stsys::cli {

namespace {

/// Raised when a user-supplied expectation does not hold.
class AssertionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Printer {
    std::ostream& out;
    bool decimal = false;

    std::string value(const Rational& q) const
    {
        if (decimal && !is_integer(q))
            return to_string(q) + " (~" + to_decimal(q) + ")";
        return to_string(q);
    }
};

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string join(const std::vector<Integer>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].str();
    return s;
}

/// A source names a complex when it is a library reference or a complex JSON file.
bool names_complex(const std::string& source)
{
    if (source.rfind("lib:", 0) == 0)
        return true;
    std::ifstream in(source);
    if (!in)
        return false;
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto j = nlohmann::json::parse(buffer.str(), nullptr, false);
    return j.is_object() && (j.contains("cells") || j.contains("library") || j.contains("product") ||
                             j.contains("rescale"));
}

DimensionProfile load_profile_source(const std::string& source)
{
    if (std::ifstream(source))
        return load_profile(source);
    return parse_product_expression(source);
}

std::map<int, int> parse_vertex_map(const std::string& text)
{
    std::map<int, int> out;
    std::stringstream ss(text);
    std::string pair;
    while (std::getline(ss, pair, ',')) {
        const auto colon = pair.find(':');
        if (colon == std::string::npos)
            throw InputError("vertex map entries look like 'source:target', got '" + pair + "'");
        try {
            out[std::stoi(pair.substr(0, colon))] = std::stoi(pair.substr(colon + 1));
        } catch (const std::logic_error&) {
            throw InputError("vertex map entry '" + pair + "' is not a pair of integers");
        }
    }
    return out;
}

int report_law(const Printer& p, const LawReport& r)
{
    p.out << "law: " << r.law << '\n';
    for (const auto& [name, v] : r.values)
        p.out << "  " << name << " = " << p.value(v) << '\n';
    if (!r.note.empty())
        p.out << "  note: " << r.note << '\n';
    if (!r.applicable) {
        p.out << "INAPPLICABLE\n";
        return kInputError;
    }
    p.out << (r.holds ? "PASS" : "FAIL") << '\n';
    return r.holds ? kOk : kAssertionFailed;
}

void expect_value(const std::string& expected, const std::string& actual)
{
    if (expected.empty())
        return;
    const bool same = expected == actual || (actual != "trivial" && expected != "trivial" &&
                                             parse_rational(expected) == parse_rational(actual));
    if (!same)
        throw AssertionFailure("expected " + expected + ", got " + actual);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Stable systoles, cup length and stable systolic category of weighted cell complexes",
                 "stsys"};
    app.require_subcommand(1);
    bool decimal = false;
    app.add_flag("--decimal", decimal, "Append decimal approximations to fractions");

    int exit_code = kOk;
    std::function<void()> action;
    auto printer = [&] { return Printer{out, decimal}; };

    // homology
    std::string complex_path;
    auto* homology_cmd = app.add_subcommand("homology", "Betti numbers and torsion");
    homology_cmd->add_option("complex", complex_path, "Complex file or lib:<name>:<args>")->required();
    homology_cmd->callback([&] {
        action = [&] {
            const auto k = load_complex(complex_path);
            const auto h = homology(k);
            for (int q = 0; q <= h.top_dim(); ++q) {
                out << "H_" << q << ": betti " << h.betti(q);
                if (!h.torsion(q).empty())
                    out << ", torsion " << join(h.torsion(q));
                out << '\n';
            }
            out << "euler characteristic: " << h.euler_characteristic() << '\n';
        };
    });

    // systole
    int degree = 1;
    int radius = 5;
    std::string expect;
    auto* systole_cmd = app.add_subcommand("systole", "Stable q-systole");
    systole_cmd->add_option("complex", complex_path)->required();
    systole_cmd->add_option("-q,--degree", degree, "Degree")->required();
    systole_cmd->add_option("-R,--radius", radius, "Search radius for betti_q >= 2");
    systole_cmd->add_option("--expect", expect, "Exit 1 unless the value (or 'trivial') matches");
    systole_cmd->callback([&] {
        action = [&] {
            const auto s = stable_systole(load_complex(complex_path), degree, radius);
            const std::string status(to_string(s.status));
            if (s.is_trivial()) {
                out << "stsys_" << degree << ": trivial\n";
                expect_value(expect, "trivial");
                return;
            }
            out << "stsys_" << degree << " = " << printer().value(*s.value) << " (" << status << ")\n";
            out << "witness class: " << join(s.witness_class) << '\n';
            if (s.status == SearchStatus::BoundedSearch)
                out << "note: minimum over the box of radius " << s.search_radius << " only\n";
            expect_value(expect, to_string(*s.value));
        };
    });

    // stable-norm
    std::string class_text;
    auto* norm_cmd = app.add_subcommand("stable-norm", "Stable norm of a homology class");
    norm_cmd->add_option("complex", complex_path)->required();
    norm_cmd->add_option("-q,--degree", degree)->required();
    norm_cmd->add_option("--class", class_text, "Lattice coordinates, e.g. 1,-1/2")->required();
    norm_cmd->add_option("--expect", expect);
    norm_cmd->callback([&] {
        action = [&] {
            const auto k = load_complex(complex_path);
            const auto r = stable_norm(k, HomologyClass{degree, parse_rational_list(class_text), std::nullopt});
            out << "||" << class_text << "|| = " << printer().value(r.value) << " (" << to_string(r.certificate)
                << ")\n";
            expect_value(expect, to_string(r.value));
        };
    });

    // cup-length
    auto* cup_cmd = app.add_subcommand("cup-length", "Real cup length of a simplicial complex");
    cup_cmd->add_option("complex", complex_path)->required();
    cup_cmd->add_option("--expect", expect);
    cup_cmd->callback([&] {
        action = [&] {
            const auto r = ring_profile(load_complex(complex_path));
            out << "cup length: " << r.cup_length << '\n';
            out << "lpd: " << (r.lpd ? std::to_string(*r.lpd) : std::string("none")) << '\n';
            out << "maximal real cup length: " << (r.maximal_cup_length ? "yes" : "no") << '\n';
            if (r.maximal_cup_length)
                out << "witness degrees: " << join(r.witness_degrees) << '\n';
            expect_value(expect, std::to_string(r.cup_length));
        };
    });

    // lpd
    std::string source;
    auto* lpd_cmd = app.add_subcommand("lpd", "Least positive dimension of a complex or profile");
    lpd_cmd->add_option("source", source, "Complex, profile file or product expression")->required();
    lpd_cmd->add_option("--expect", expect);
    lpd_cmd->callback([&] {
        action = [&] {
            std::optional<int> l;
            if (names_complex(source))
                l = lpd(homology(load_complex(source)));
            else
                l = lpd(load_profile_source(source));
            const std::string text = l ? std::to_string(*l) : std::string("none");
            out << "lpd: " << text << '\n';
            if (!expect.empty() && expect != text)
                throw AssertionFailure("expected " + expect + ", got " + text);
        };
    });

    // catstsys
    bool show_partitions = false;
    int expect_exact = -1;
    auto* cat_cmd = app.add_subcommand("catstsys", "Bounds on the stable systolic category");
    cat_cmd->add_option("source", source, "Profile file or product expression such as 'S1 x S2 x S7'")
        ->required();
    cat_cmd->add_flag("--partitions", show_partitions, "List the verdict of every admissible partition");
    cat_cmd->add_option("--expect-exact", expect_exact, "Exit 1 unless the value is exactly this");
    cat_cmd->callback([&] {
        action = [&] {
            const auto p = load_profile_source(source);
            const auto v = catstsys_bounds(p);
            out << "profile: " << p.name << " (dimension " << p.dimension << ")\n";
            out << "lower = " << v.lower << ", upper = " << v.upper << '\n';
            if (v.exact)
                out << "catstsys = " << v.lower << " (exact)\n";
            else
                out << "catstsys undetermined in [" << v.lower << ", " << v.upper << "]\n";
            out << "provenance:";
            for (Rule r : v.provenance())
                out << ' ' << to_string(r);
            out << '\n';
            out << "bounds:\n";
            for (const auto& b : v.bounds) {
                const char* kind = b.kind == Bound::Kind::Lower ? ">=" : b.kind == Bound::Kind::Upper ? "<=" : "==";
                out << "  " << kind << ' ' << b.value << "  " << to_string(b.rule) << ": " << b.detail << '\n';
            }
            if (!v.inapplicable.empty()) {
                out << "inapplicable:\n";
                for (const auto& n : v.inapplicable)
                    out << "  " << to_string(n.rule) << ": " << n.reason << '\n';
            }
            if (show_partitions) {
                out << "partitions:\n";
                for (const auto& pv : v.partitions) {
                    out << "  " << pv.partition.to_string() << ' ' << to_string(pv.status);
                    if (!pv.reason.empty())
                        out << "  " << pv.reason;
                    out << '\n';
                }
                if (!v.partitions_complete)
                    out << "  (skipped: dimension above " << kPartitionDimensionLimit << ")\n";
            }
            if (expect_exact >= 0 && !(v.exact && v.lower == expect_exact))
                throw AssertionFailure("expected catstsys exactly " + std::to_string(expect_exact));
        };
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a systolic law on concrete complexes");
    verify_cmd->require_subcommand(1);
    std::string t_text = "2";
    std::string second_path;
    int first_degree = 1;
    std::string map_text;

    auto* rescale_cmd = verify_cmd->add_subcommand("rescale", "stsys_q(K_t) = t^q stsys_q(K)");
    rescale_cmd->add_option("complex", complex_path)->required();
    rescale_cmd->add_option("-q,--degree", degree)->required();
    rescale_cmd->add_option("--t", t_text, "Scale factor");
    rescale_cmd->callback([&] {
        action = [&] {
            exit_code = report_law(printer(), verify_rescaling(load_complex(complex_path), degree,
                                                               parse_rational(t_text)));
        };
    });

    auto* product_cmd = verify_cmd->add_subcommand("product", "stsys_{p+q}(K x L) <= stsys_p(K) stsys_q(L)");
    product_cmd->add_option("first", complex_path)->required();
    product_cmd->add_option("second", second_path)->required();
    product_cmd->add_option("-p", first_degree, "Degree on the first factor")->required();
    product_cmd->add_option("-q,--degree", degree, "Degree on the second factor")->required();
    product_cmd->callback([&] {
        action = [&] {
            exit_code = report_law(printer(), verify_product_inequality(load_complex(complex_path),
                                                                        load_complex(second_path), first_degree,
                                                                        degree));
        };
    });

    auto* projection_cmd = verify_cmd->add_subcommand("projection", "stsys_q(K x L) = stsys_q(K)");
    projection_cmd->add_option("first", complex_path)->required();
    projection_cmd->add_option("second", second_path)->required();
    projection_cmd->add_option("-q,--degree", degree)->required();
    projection_cmd->callback([&] {
        action = [&] {
            exit_code = report_law(printer(), verify_projection_equality(load_complex(complex_path),
                                                                         load_complex(second_path), degree));
        };
    });

    auto* sandwich_cmd =
        verify_cmd->add_subcommand("degree-sandwich", "stsys(L) <= stsys(K, g*G_L) <= D(g) stsys(L)");
    sandwich_cmd->add_option("source", complex_path)->required();
    sandwich_cmd->add_option("target", second_path)->required();
    sandwich_cmd->add_option("--map", map_text, "Vertex map, e.g. 0:0,1:1,2:2,3:0")->required();
    sandwich_cmd->add_option("-q,--degree", degree)->required();
    sandwich_cmd->callback([&] {
        action = [&] {
            const SimplicialMap g(load_complex(complex_path), load_complex(second_path), parse_vertex_map(map_text));
            exit_code = report_law(printer(), verify_degree_sandwich(g, degree));
        };
    });

    // deform
    std::string partition_text;
    std::string csv_path;
    std::string format = "text";
    int expect_exponent = 0;
    bool has_expected_exponent = false;
    auto* deform_cmd = app.add_subcommand("deform", "Ratio sweep over the family t^2 G_X + G_Y");
    deform_cmd->add_option("complex", complex_path, "Product complex with factor tags")->required();
    deform_cmd->add_option("--partition", partition_text, "Parts, e.g. 1,1,1")->required();
    t_text = "1,2,4,8";
    auto* t_option = deform_cmd->add_option("--t", t_text, "Strictly increasing samples >= 1");
    deform_cmd->add_option("-R,--radius", radius);
    deform_cmd->add_option("--csv", csv_path, "Also write the CSV report to this file");
    deform_cmd->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    auto* exponent_option = deform_cmd->add_option("--expect-exponent", expect_exponent);
    deform_cmd->callback([&] {
        has_expected_exponent = exponent_option->count() > 0;
        action = [&] {
            const auto samples = t_option->count() > 0 ? parse_rational_list(t_text) : default_t_samples();
            const auto r = deformation_sweep(DeformationFamily(load_complex(complex_path)),
                                             Partition::parse(partition_text), samples, radius);
            if (!csv_path.empty()) {
                std::ofstream file(csv_path);
                if (!file)
                    throw InputError("cannot write '" + csv_path + "'");
                file << to_csv(r);
            }
            if (format == "csv") {
                out << to_csv(r);
            } else {
                const Printer p = printer();
                out << "partition: " << r.partition.to_string() << '\n';
                for (const auto& row : r.rows)
                    out << "t = " << p.value(row.t) << ": product " << p.value(row.product) << ", volume "
                        << p.value(row.volume) << ", ratio " << p.value(row.ratio) << '\n';
                out << "exponent: " << (r.exponent ? std::to_string(*r.exponent) : std::string("none")) << '\n';
                out << "verdict: " << to_string(r.verdict) << '\n';
                out << "note: " << r.evidence_note() << '\n';
                if (!r.certified)
                    out << "note: some systoles come from a bounded search\n";
            }
            if (has_expected_exponent && r.exponent != expect_exponent)
                throw AssertionFailure("expected exponent " + std::to_string(expect_exponent) + ", got " +
                                       (r.exponent ? std::to_string(*r.exponent) : std::string("none")));
        };
    });

    // make
    std::string make_name;
    std::vector<std::string> make_args;
    std::string output_path;
    auto* make_cmd = app.add_subcommand("make", "Write a library complex or a product as a JSON file");
    make_cmd->add_option("name", make_name, "Library name, or 'product'")->required();
    make_cmd->add_option("args", make_args, "Library arguments, or two complex sources for 'product'");
    make_cmd->add_option("-o,--output", output_path, "Output file (default: standard output)");
    make_cmd->callback([&] {
        action = [&] {
            WeightedCellComplex k = [&] {
                if (make_name != "product")
                    return library::by_name(make_name, make_args);
                if (make_args.size() < 2)
                    throw InputError("'make product' needs at least two complexes");
                WeightedCellComplex acc = load_complex(make_args[0]);
                for (std::size_t i = 1; i < make_args.size(); ++i)
                    acc = product_complex(acc, load_complex(make_args[i]));
                return acc;
            }();
            if (output_path.empty())
                out << complex_to_json(k) << '\n';
            else
                save_complex(output_path, k);
        };
    });

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (action)
            action();
        return exit_code;
    } catch (const AssertionFailure& e) {
        out << "FAIL: " << e.what() << '\n';
        return kAssertionFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace stsys::cli
