#ifndef FINMEAS_DOCUMENT_HPP
#define FINMEAS_DOCUMENT_HPP

// Measure documents: a JSON schema carrying one signed measure, versioned
// with format_version 1. The space descriptor is explicit; measure-points
// nest the same atom schema recursively, so measures of measures are
// expressible. The serializer emits a canonical form (sorted keys, sorted
// atoms, reduced rationals) and round-trips bit-exactly with the parser.

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "finmeas/measure.hpp"

namespace finmeas {

inline nlohmann::json space_to_json(const Space& space) {
    switch (space.kind()) {
    case CarrierKind::FiniteLabeled:
        return nlohmann::json{{"kind", "finite_labeled"}, {"labels", space.labels()}};
    case CarrierKind::IntegerLine:
        return nlohmann::json{{"kind", "integer_line"}};
    case CarrierKind::RationalVector:
        return nlohmann::json{{"kind", "rational_vector"}, {"dimension", space.dimension()}};
    case CarrierKind::MeasureSpace:
        return nlohmann::json{{"kind", "measure_space"}, {"base", space_to_json(space.base())}};
    case CarrierKind::Subspace:
        break;
    }
    throw InvalidArgument("measures on subspaces have no document form");
}

inline nlohmann::json atoms_to_json(const SignedMeasure& mu);

inline nlohmann::json point_to_json(const Point& p) {
    switch (p.kind()) {
    case PointKind::Integer:
        return p.as_integer();
    case PointKind::Label:
        return p.as_label();
    case PointKind::Vector: {
        nlohmann::json arr = nlohmann::json::array();
        for (const Rat& c : p.as_vector()) arr.push_back(to_string(c));
        return arr;
    }
    case PointKind::Measure:
        return nlohmann::json{{"atoms", atoms_to_json(p.as_measure())}};
    }
    throw InvalidArgument("unsupported point kind");
}

inline nlohmann::json atoms_to_json(const SignedMeasure& mu) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& atom : mu.atoms()) {
        arr.push_back(nlohmann::json{{"point", point_to_json(atom.first)},
                                     {"weight", to_string(atom.second)}});
    }
    return arr;
}

inline nlohmann::json measure_to_json(const SignedMeasure& mu) {
    return nlohmann::json{{"format_version", 1},
                          {"space", space_to_json(mu.space())},
                          {"atoms", atoms_to_json(mu)}};
}

inline std::string serialize_measure_document(const SignedMeasure& mu) {
    return measure_to_json(mu).dump(2) + "\n";
}

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* name,
                                           const char* where) {
    if (!obj.is_object()) {
        throw ParseError(std::string(where) + " must be an object");
    }
    const auto it = obj.find(name);
    if (it == obj.end()) {
        throw ParseError(std::string(where) + " is missing the '" + name + "' field");
    }
    return *it;
}

inline Space space_from_json(const nlohmann::json& j) {
    const nlohmann::json& kind = require_field(j, "kind", "space descriptor");
    if (!kind.is_string()) throw ParseError("space 'kind' must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "finite_labeled") {
        const nlohmann::json& labels = require_field(j, "labels", "finite labeled space");
        if (!labels.is_array()) throw ParseError("'labels' must be an array of strings");
        std::vector<std::string> out;
        for (const auto& l : labels) {
            if (!l.is_string()) throw ParseError("'labels' must be an array of strings");
            out.push_back(l.get<std::string>());
        }
        return Space::finite_labeled(std::move(out));
    }
    if (k == "integer_line") return Space::integer_line();
    if (k == "rational_vector") {
        const nlohmann::json& dim = require_field(j, "dimension", "rational vector space");
        if (!dim.is_number_integer()) throw ParseError("'dimension' must be an integer");
        return Space::rational_vector(dim.get<int>());
    }
    if (k == "measure_space") {
        return Space::measure_space(space_from_json(require_field(j, "base", "measure space")));
    }
    throw ParseError("unknown space kind '" + k + "'");
}

inline Rat rational_from_json(const nlohmann::json& j, const char* what) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError(std::string(what) + " must be a rational literal (\"p/q\") or an integer");
}

inline std::vector<SignedMeasure::Atom> atoms_from_json(const nlohmann::json& arr, const Space& space);

inline Point point_from_json(const nlohmann::json& j, const Space& space) {
    switch (space.kind()) {
    case CarrierKind::FiniteLabeled: {
        if (!j.is_string()) {
            throw KindMismatch("point literal " + j.dump() + " is not a label of " + to_string(space));
        }
        Point p = Point::label(j.get<std::string>());
        if (!space.contains(p)) {
            throw KindMismatch("label '" + j.get<std::string>() + "' is not in " + to_string(space));
        }
        return p;
    }
    case CarrierKind::IntegerLine:
        if (j.is_number_integer()) return Point::integer(j.get<long long>());
        if (j.is_string()) {
            const Int value = parse_integer_literal(j.get<std::string>());
            if (value > Int(std::numeric_limits<long long>::max()) ||
                value < Int(std::numeric_limits<long long>::min())) {
                throw ParseError("integer point " + j.get<std::string>() + " is out of range");
            }
            return Point::integer(value.convert_to<long long>());
        }
        throw KindMismatch("point literal " + j.dump() + " is not an integer");
    case CarrierKind::RationalVector: {
        if (!j.is_array()) {
            throw KindMismatch("point literal " + j.dump() + " is not a vector");
        }
        if (static_cast<int>(j.size()) != space.dimension()) {
            throw KindMismatch("vector point of arity " + std::to_string(j.size()) +
                               " does not fit " + to_string(space));
        }
        std::vector<Rat> comps;
        comps.reserve(j.size());
        for (const auto& c : j) comps.push_back(rational_from_json(c, "vector component"));
        return Point::vector(std::move(comps));
    }
    case CarrierKind::MeasureSpace: {
        const nlohmann::json& atoms = require_field(j, "atoms", "measure point");
        return Point::measure(SignedMeasure::from_atoms(space.base(),
                                                        atoms_from_json(atoms, space.base())));
    }
    case CarrierKind::Subspace:
        break;
    }
    throw ParseError("unsupported space kind in document");
}

inline std::vector<SignedMeasure::Atom> atoms_from_json(const nlohmann::json& arr, const Space& space) {
    if (!arr.is_array()) throw ParseError("'atoms' must be an array");
    std::vector<SignedMeasure::Atom> atoms;
    atoms.reserve(arr.size());
    for (const auto& entry : arr) {
        const nlohmann::json& point = require_field(entry, "point", "atom");
        const nlohmann::json& weight = require_field(entry, "weight", "atom");
        atoms.emplace_back(point_from_json(point, space), rational_from_json(weight, "weight"));
    }
    return atoms;
}

} // namespace detail

inline SignedMeasure parse_measure_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what()); // includes the byte position
    }
    const nlohmann::json& version = detail::require_field(doc, "format_version", "document");
    if (!version.is_number_integer() || version.get<int>() != 1) {
        throw ParseError("unsupported format_version " + version.dump() + "; expected 1");
    }
    const Space space = detail::space_from_json(detail::require_field(doc, "space", "document"));
    return SignedMeasure::from_atoms(space,
                                     detail::atoms_from_json(
                                         detail::require_field(doc, "atoms", "document"), space));
}

} // namespace finmeas

#endif // FINMEAS_DOCUMENT_HPP
