#include "polyalg/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polyalg {

namespace {

using nlohmann::json;

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string rational_list(const Vector<Rational>& v) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += quoted(v(i).str());
    }
    return out + "]";
}

Rational rational_from_json(const json& j, const char* where) {
    try {
        if (j.is_string()) return Rational::parse(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long long>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string(where) + ": " + e.what());
    }
    throw FormatError(std::string(where) + ": expected a rational string such as \"3/4\"");
}

Vector<Rational> rational_vector(const json& j, const char* where) {
    if (!j.is_array()) throw FormatError(std::string(where) + ": expected an array");
    Vector<Rational> v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i], where);
    return v;
}

json tensor_block(const Vector<Rational>& coords, std::size_t offset, std::size_t n, std::size_t arity) {
    json out = json::array();
    std::size_t stride = 1;
    for (std::size_t s = 1; s < arity; ++s) stride *= n;
    for (std::size_t i = 0; i < n; ++i) {
        if (arity == 1) {
            out.push_back(coords(static_cast<Eigen::Index>(offset + i)).str());
        } else {
            out.push_back(tensor_block(coords, offset + i * stride, n, arity - 1));
        }
    }
    return out;
}

void flatten_tensor(const json& j, std::size_t n, std::size_t depth, std::vector<Rational>& out) {
    if (!j.is_array() || j.size() != n) throw FormatError("tensor: expected nested arrays of length " + std::to_string(n));
    for (const auto& item : j) {
        if (depth == 1) {
            out.push_back(rational_from_json(item, "tensor"));
        } else {
            flatten_tensor(item, n, depth - 1, out);
        }
    }
}

}  // namespace

std::string algebra_to_json(const RAlgebra& alg) {
    const std::size_t n = alg.dim();
    std::ostringstream os;
    os << "{\n  \"dim\": " << n << ",\n  \"basis\": [";
    for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << quoted(alg.basis_names()[i]);
    os << "],\n  \"unit\": " << rational_list(alg.unit()) << ",\n  \"table\": [\n";
    for (std::size_t i = 0; i < n; ++i) {
        os << "    [";
        for (std::size_t j = 0; j < n; ++j) {
            Vector<Rational> prod(static_cast<Eigen::Index>(n));
            for (std::size_t k = 0; k < n; ++k) prod(static_cast<Eigen::Index>(k)) = alg.constant(i, j, k);
            os << (j ? ", " : "") << rational_list(prod);
        }
        os << "]" << (i + 1 < n ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

RAlgebraPtr algebra_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("algebra file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("algebra file must be a JSON object");
    for (const char* key : {"dim", "unit", "table"}) {
        if (!doc.contains(key)) throw FormatError(std::string("algebra file is missing \"") + key + "\"");
    }
    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0) {
        throw FormatError("\"dim\" must be a positive integer");
    }
    const auto n = doc["dim"].get<std::size_t>();
    std::vector<std::string> names;
    if (doc.contains("basis")) {
        if (!doc["basis"].is_array()) throw FormatError("\"basis\" must be an array of strings");
        for (const auto& s : doc["basis"]) {
            if (!s.is_string()) throw FormatError("\"basis\" must be an array of strings");
            names.push_back(s.get<std::string>());
        }
    }
    const json& table = doc["table"];
    if (!table.is_array()) throw FormatError("\"table\" must be an array");
    std::vector<std::vector<Vector<Rational>>> rows;
    for (const auto& row : table) {
        if (!row.is_array()) throw FormatError("\"table\" rows must be arrays");
        std::vector<Vector<Rational>> r;
        for (const auto& cell : row) r.push_back(rational_vector(cell, "table"));
        rows.push_back(std::move(r));
    }
    return from_multiplication_table<Rational>(n, rows, rational_vector(doc["unit"], "unit"), std::move(names));
}

RAlgebraPtr load_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open algebra file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return algebra_from_json(buf.str());
}

std::string format_coords(const Vector<Rational>& v) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v(i).str();
    }
    return out + "]";
}

std::string format_element(const RElement& a) {
    std::string out;
    const auto& names = a.algebra()->basis_names();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Rational& c = a[i];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (names[i] == "1") {
            out += mag.str();
        } else if (mag.is_one()) {
            out += names[i];
        } else {
            out += mag.str() + "*" + names[i];
        }
    }
    return out.empty() ? "0" : out;
}

std::string format_polynomial(const RPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const RTensor& t = p.coeffs()[i];
        if (t.is_zero()) continue;
        if (!out.empty()) out += "\n";
        out += "degree " + std::to_string(i) + ": " + tensor_to_json(t).dump();
    }
    return out;
}

json element_to_json(const RElement& a) {
    json out = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a[i].str());
    return out;
}

json tensor_to_json(const RTensor& t) { return tensor_block(t.coords(), 0, t.dim(), t.arity()); }

json polynomial_to_json(const RPolynomial& p) {
    json out = json::array();
    for (const auto& t : p.coeffs()) out.push_back(tensor_to_json(t));
    return out;
}

RTensor tensor_from_json(const RAlgebraPtr& alg, const json& j) {
    std::size_t arity = 0;
    for (const json* cur = &j; cur->is_array(); cur = &(*cur)[0]) {
        ++arity;
        if (cur->empty()) throw FormatError("tensor: empty array");
    }
    if (arity == 0) throw FormatError("tensor: expected an array");
    std::vector<Rational> flat;
    flatten_tensor(j, alg->dim(), arity, flat);
    Vector<Rational> coords(static_cast<Eigen::Index>(flat.size()));
    for (std::size_t i = 0; i < flat.size(); ++i) coords(static_cast<Eigen::Index>(i)) = std::move(flat[i]);
    return RTensor(alg, arity, std::move(coords));
}

RPolynomial polynomial_from_json(const RAlgebraPtr& alg, const json& j) {
    if (!j.is_array()) throw FormatError("polynomial: expected an array of tensors");
    std::vector<RTensor> coeffs;
    for (const auto& t : j) coeffs.push_back(tensor_from_json(alg, t));
    return RPolynomial(alg, std::move(coeffs));
}

RElement parse_coords(const RAlgebraPtr& alg, std::string_view text) {
    Vector<Rational> v(static_cast<Eigen::Index>(alg->dim()));
    std::size_t count = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (count >= alg->dim()) throw ShapeMismatch("too many coordinates for a " + std::to_string(alg->dim()) + "-dimensional algebra");
        try {
            v(static_cast<Eigen::Index>(count++)) = Rational::parse(item);
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
        start = comma + 1;
    }
    if (count != alg->dim()) {
        throw ShapeMismatch("expected " + std::to_string(alg->dim()) + " coordinates, got " + std::to_string(count));
    }
    return RElement(alg, std::move(v));
}

}  // namespace polyalg
