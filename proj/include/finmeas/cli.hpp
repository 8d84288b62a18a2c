#ifndef FINMEAS_CLI_HPP
#define FINMEAS_CLI_HPP

// Command-line front end. Exit codes: 0 success, 1 law-suite failures,
// 2 parse or domain errors. Results go to stdout, diagnostics to stderr.
// All numeric output is exact rational text unless --decimal is given.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "finmeas/algebra.hpp"
#include "finmeas/document.hpp"
#include "finmeas/grid.hpp"
#include "finmeas/law_report.hpp"
#include "finmeas/monad.hpp"
#include "finmeas/pettis.hpp"

namespace finmeas {

namespace cli_detail {

inline std::string render_rational(const Rat& q, int decimal_digits) {
    if (decimal_digits >= 0) return decimal_string(q, static_cast<unsigned>(decimal_digits));
    return to_string(q);
}

inline std::string render_point(const Point& p, int decimal_digits) {
    switch (p.kind()) {
    case PointKind::Integer:
        return std::to_string(p.as_integer());
    case PointKind::Label:
        return p.as_label();
    case PointKind::Vector: {
        std::string out = "(";
        const auto& v = p.as_vector();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out += ", ";
            out += render_rational(v[i], decimal_digits);
        }
        return out + ")";
    }
    case PointKind::Measure:
        return serialize_measure_document(p.as_measure());
    }
    return "";
}

inline std::string read_all(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline SignedMeasure load_measure(const std::string& path, std::istream& in) {
    if (path == "-") return parse_measure_document(read_all(in));
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open file: " + path);
    return parse_measure_document(read_all(file));
}

// Named morphism catalog: id, embed, mod:<k>, affine:<a>:<b>, proj:<i>.
inline Morphism catalog_morphism(const std::string& name, const Space& domain) {
    if (name == "id") return identity(domain);
    if (name == "embed") return embed_integers();
    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    if (head == "mod" && colon != std::string::npos) {
        return mod_k(std::stoll(name.substr(colon + 1)));
    }
    if (head == "proj" && colon != std::string::npos) {
        return coordinate_projection(domain, std::stoi(name.substr(colon + 1)));
    }
    if (head == "affine" && colon != std::string::npos) {
        const std::string rest = name.substr(colon + 1);
        const auto second = rest.find(':');
        if (second == std::string::npos) {
            throw InvalidArgument("affine needs two coefficients, e.g. affine:2:-1/3");
        }
        return affine(parse_rational(rest.substr(0, second)), parse_rational(rest.substr(second + 1)));
    }
    throw InvalidArgument("unknown morphism '" + name +
                          "'; available: id, embed, mod:<k>, affine:<a>:<b>, proj:<i>");
}

// Carriers with a canonical algebra structure.
inline Algebra canonical_algebra(const Space& space) {
    if (space.kind() == CarrierKind::RationalVector) {
        if (space.dimension() == 1) return real_algebra();
        return vector_algebra(space.dimension());
    }
    if (space.kind() == CarrierKind::MeasureSpace) return free_algebra(space.base());
    throw InvalidArgument("no canonical algebra structure on " + to_string(space));
}

inline PlanePoint parse_plane_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw InvalidArgument("expected a point 'x,y', got '" + text + "'");
    }
    return PlanePoint{parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

// unit-square | triangle:x1,y1:x2,y2:x3,y3 | box:lx,ly:hx,hy
inline Region parse_region(const std::string& text) {
    if (text == "unit-square") return Region::unit_square();
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto colon = text.find(':', start);
        if (colon == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, colon - start));
        start = colon + 1;
    }
    if (parts.size() == 4 && parts[0] == "triangle") {
        return Region::triangle(parse_plane_point(parts[1]), parse_plane_point(parts[2]),
                                parse_plane_point(parts[3]));
    }
    if (parts.size() == 3 && parts[0] == "box") {
        return Region::box(parse_plane_point(parts[1]), parse_plane_point(parts[2]));
    }
    throw InvalidArgument("unknown region '" + text +
                          "'; available: unit-square, triangle:x1,y1:x2,y2:x3,y3, box:lx,ly:hx,hy");
}

} // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"exact signed measures of bounded support: monad, algebras, integration"};
    app.require_subcommand(1);
    int decimal = -1;
    app.add_option("--decimal", decimal, "render rationals with this many decimal digits");

    std::string tv_file = "-";
    auto* tv_cmd = app.add_subcommand("tv", "total variation of a measure document");
    tv_cmd->add_option("file", tv_file, "measure document path, or - for stdin");

    std::string jordan_file = "-";
    auto* jordan_cmd = app.add_subcommand("jordan", "minimal Jordan decomposition and Hahn split");
    jordan_cmd->add_option("file", jordan_file, "measure document path, or - for stdin");

    std::string push_file = "-";
    std::string push_name;
    auto* push_cmd = app.add_subcommand("push", "pushforward along a named morphism");
    push_cmd->add_option("file", push_file, "measure document path, or - for stdin");
    push_cmd->add_option("--morphism", push_name, "id, embed, mod:<k>, affine:<a>:<b>, proj:<i>")
        ->required();

    std::string kappa_file = "-";
    auto* kappa_cmd = app.add_subcommand("kappa", "flatten a measure of measures");
    kappa_cmd->add_option("file", kappa_file, "measure-of-measures document path, or - for stdin");

    std::string integrate_file = "-";
    std::string integrate_name = "id";
    auto* integrate_cmd =
        app.add_subcommand("integrate", "integrate a named morphism against a measure");
    integrate_cmd->add_option("file", integrate_file, "measure document path, or - for stdin");
    integrate_cmd->add_option("--morphism", integrate_name,
                              "integrand from the catalog (default id)");

    std::string bary_file = "-";
    auto* bary_cmd = app.add_subcommand("barycenter", "barycentre of a probability measure");
    bary_cmd->add_option("file", bary_file, "measure document path, or - for stdin");

    std::string pettis_file = "-";
    std::string pettis_name = "id";
    auto* pettis_cmd =
        app.add_subcommand("pettis", "coordinatewise weak integral of a vector-valued morphism");
    pettis_cmd->add_option("file", pettis_file, "measure document path, or - for stdin");
    pettis_cmd->add_option("--morphism", pettis_name, "integrand from the catalog (default id)");

    std::uint64_t seed = 42;
    std::uint64_t cases = 200;
    std::string suite = "all";
    auto* laws_cmd = app.add_subcommand("check-laws", "run the seeded law suites");
    laws_cmd->add_option("--seed", seed, "master seed (default 42)");
    laws_cmd->add_option("--cases", cases, "cases per suite (default 200)");
    laws_cmd->add_option("--suite", suite, "monad, delta, algebra, pettis or all");

    std::string region_text = "unit-square";
    long long resolution = 64;
    auto* demo_cmd = app.add_subcommand("demo-centroid",
                                        "barycentre of the uniform grid measure on a region");
    demo_cmd->add_option("--region", region_text,
                         "unit-square, triangle:x1,y1:x2,y2:x3,y3 or box:lx,ly:hx,hy");
    demo_cmd->add_option("--resolution", resolution, "grid resolution k (default 64)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("finmeas");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tv_cmd->parsed()) {
            const SignedMeasure mu = load_measure(tv_file, in);
            out << render_rational(total_variation(mu), decimal) << "\n";
            return 0;
        }
        if (jordan_cmd->parsed()) {
            const SignedMeasure mu = load_measure(jordan_file, in);
            const JordanDecomposition jd = jordan_hahn(mu);
            nlohmann::json hahn_pos = nlohmann::json::array();
            for (const Point& p : jd.hahn_positive) hahn_pos.push_back(point_to_json(p));
            nlohmann::json hahn_neg = nlohmann::json::array();
            for (const Point& p : jd.hahn_negative) hahn_neg.push_back(point_to_json(p));
            out << nlohmann::json{{"positive_part", measure_to_json(jd.positive_part)},
                                  {"negative_part", measure_to_json(jd.negative_part)},
                                  {"hahn_positive", hahn_pos},
                                  {"hahn_negative", hahn_neg}}
                       .dump(2)
                << "\n";
            return 0;
        }
        if (push_cmd->parsed()) {
            const SignedMeasure mu = load_measure(push_file, in);
            const Morphism f = catalog_morphism(push_name, mu.space());
            if (f.domain != mu.space()) {
                throw KindMismatch("morphism " + f.name + " expects measures on " +
                                   to_string(f.domain) + ", not " + to_string(mu.space()));
            }
            out << serialize_measure_document(pushforward(f, mu));
            return 0;
        }
        if (kappa_cmd->parsed()) {
            const SignedMeasure mm = load_measure(kappa_file, in);
            out << serialize_measure_document(kappa(mm));
            return 0;
        }
        if (integrate_cmd->parsed()) {
            const SignedMeasure mu = load_measure(integrate_file, in);
            const Morphism f = catalog_morphism(integrate_name, mu.space());
            if (f.domain != mu.space()) {
                throw KindMismatch("integrand " + f.name + " expects measures on " +
                                   to_string(f.domain) + ", not " + to_string(mu.space()));
            }
            const Algebra algebra = canonical_algebra(f.codomain);
            out << render_point(integrate(algebra, f, mu), decimal);
            if (f.codomain.kind() != CarrierKind::MeasureSpace) out << "\n";
            return 0;
        }
        if (bary_cmd->parsed()) {
            const SignedMeasure mu = load_measure(bary_file, in);
            const Algebra algebra = canonical_algebra(mu.space());
            out << render_point(barycenter(algebra, mu), decimal);
            if (mu.space().kind() != CarrierKind::MeasureSpace) out << "\n";
            return 0;
        }
        if (pettis_cmd->parsed()) {
            const SignedMeasure mu = load_measure(pettis_file, in);
            const Morphism f = catalog_morphism(pettis_name, mu.space());
            if (f.domain != mu.space()) {
                throw KindMismatch("integrand " + f.name + " expects measures on " +
                                   to_string(f.domain) + ", not " + to_string(mu.space()));
            }
            if (f.codomain.kind() != CarrierKind::RationalVector) {
                throw KindMismatch("weak integration needs a vector-valued integrand");
            }
            out << render_point(pettis_integral(f.codomain.dimension(), f, mu), decimal) << "\n";
            return 0;
        }
        if (laws_cmd->parsed()) {
            std::vector<LawReport> reports;
            const std::vector<Space> carriers{
                Space::finite_labeled({"a", "b", "c", "d", "e", "f"}), Space::integer_line(),
                Space::rational_vector(2)};
            bool known = false;
            if (suite == "monad" || suite == "all") {
                known = true;
                for (const Space& carrier : carriers) {
                    reports.push_back(check_monad_laws(carrier, seed, cases));
                }
            }
            if (suite == "delta" || suite == "all") {
                known = true;
                for (const Space& carrier : carriers) {
                    reports.push_back(check_delta_embedding(carrier, seed, cases));
                }
            }
            if (suite == "algebra" || suite == "all") {
                known = true;
                reports.push_back(check_algebra_laws(real_algebra(), seed, cases));
                reports.push_back(check_algebra_laws(vector_algebra(3), seed, cases));
                reports.push_back(check_algebra_laws(free_algebra(Space::integer_line()), seed, cases));
                reports.push_back(check_convexity(vector_algebra(2), seed, cases));
            }
            if (suite == "pettis" || suite == "all") {
                known = true;
                reports.push_back(enough_pettis_equivalence_check(2, seed, cases));
                reports.push_back(check_algebra_laws(pettis_algebra(2), seed, cases));
            }
            if (!known) {
                throw InvalidArgument("unknown suite '" + suite +
                                      "'; available: monad, delta, algebra, pettis, all");
            }
            bool all_passed = true;
            nlohmann::json arr = nlohmann::json::array();
            for (const LawReport& r : reports) {
                all_passed = all_passed && r.passed();
                arr.push_back(to_json(r));
                err << r.suite << ": " << r.checks << " checks, " << r.failures.size()
                    << " failures\n";
            }
            out << nlohmann::json{{"passed", all_passed}, {"reports", arr}}.dump(2) << "\n";
            err << (all_passed ? "all law suites passed" : "law failures detected") << "\n";
            return all_passed ? 0 : 1;
        }
        if (demo_cmd->parsed()) {
            const Region region = parse_region(region_text);
            const SignedMeasure g = grid_uniform(region, resolution);
            out << render_point(barycenter(vector_algebra(2), g), decimal) << "\n";
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command given\n";
    return 2;
}

} // namespace finmeas

#endif // FINMEAS_CLI_HPP
