#include "ybt/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace ybt::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

int int_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
    return v.get<int>();
}

Rational rational_entry(const Json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const ParseError& e) {
            fail(where, e.what());
        }
    }
    if (v.is_number_integer()) return Rational(v.get<long>());
    fail(where, "rational entries must be strings \"p/q\" or \"p\"");
}

Complex complex_entry(const Json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail(where, "complex entries must be [re, im] number pairs");
    return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

Json to_json(const Operator& op) {
    Json j;
    j["scalar"] = std::string(to_string(op.backend()));
    j["site_dim"] = op.site_dim();
    j["legs"] = op.legs();
    Json rows = Json::array();
    const std::size_t side = op.side();
    op.visit([&](const auto& data) {
        using T = typename std::decay_t<decltype(data)>::value_type;
        for (std::size_t i = 0; i < side; ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < side; ++k) {
                const T& v = data[i * side + k];
                if constexpr (std::is_same_v<T, Rational>)
                    row.push_back(format_rational(v));
                else
                    row.push_back(Json::array({v.real(), v.imag()}));
            }
            rows.push_back(std::move(row));
        }
    });
    j["rows"] = std::move(rows);
    return j;
}

Operator operator_from_json(const Json& j) {
    const std::string where = "operator";
    const Json& scalar = field(j, "scalar", where);
    if (!scalar.is_string()) fail(where + ".scalar", "expected a string");
    Backend backend;
    try {
        backend = backend_from_string(scalar.get<std::string>());
    } catch (const ParseError& e) {
        fail(where + ".scalar", e.what());
    }
    const int site_dim = int_field(j, "site_dim", where);
    const int legs = int_field(j, "legs", where);
    if (site_dim < 1) fail(where + ".site_dim", "must be positive");
    if (legs < 0) fail(where + ".legs", "must be non-negative");
    std::size_t side = 0;
    try {
        side = operator_side(site_dim, legs);
    } catch (const ShapeError& e) {
        fail(where, e.what());
    }
    const Json& rows = field(j, "rows", where);
    if (!rows.is_array() || rows.size() != side)
        fail(where + ".rows", "expected " + std::to_string(side) + " rows");
    for (std::size_t i = 0; i < side; ++i)
        if (!rows[i].is_array() || rows[i].size() != side)
            fail(where + ".rows[" + std::to_string(i) + "]",
                 "expected " + std::to_string(side) + " entries");

    auto at = [&](std::size_t i, std::size_t k) {
        return where + ".rows[" + std::to_string(i) + "][" + std::to_string(k) + "]";
    };
    if (backend == Backend::rational) {
        Operator::RationalData d(side * side);
        for (std::size_t i = 0; i < side; ++i)
            for (std::size_t k = 0; k < side; ++k) d[i * side + k] = rational_entry(rows[i][k], at(i, k));
        return {site_dim, legs, std::move(d)};
    }
    Operator::ComplexData d(side * side);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t k = 0; k < side; ++k) d[i * side + k] = complex_entry(rows[i][k], at(i, k));
    return {site_dim, legs, std::move(d)};
}

Json to_json(const TwistPair& pair) {
    Json j;
    j["f"] = to_json(pair.f());
    j["g"] = to_json(pair.g());
    return j;
}

TwistPair pair_from_json(const Json& j) {
    return TwistPair(operator_from_json(field(j, "f", "pair")),
                     operator_from_json(field(j, "g", "pair")));
}

Json to_json(const ComponentMap& components) {
    Json list = Json::array();
    for (const auto& [key, op] : components.entries()) {
        Json item;
        item["m"] = key.first;
        item["n"] = key.second;
        item["operator"] = to_json(op);
        list.push_back(std::move(item));
    }
    Json j;
    j["components"] = std::move(list);
    return j;
}

ComponentMap components_from_json(const Json& j) {
    const Json& list = field(j, "components", "components file");
    if (!list.is_array() || list.empty()) fail("components", "expected a non-empty array");
    std::optional<ComponentMap> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = "components[" + std::to_string(i) + "]";
        const int m = int_field(list[i], "m", where);
        const int n = int_field(list[i], "n", where);
        Operator op = operator_from_json(field(list[i], "operator", where));
        if (!out) out.emplace(op.site_dim(), op.backend());
        try {
            out->set(m, n, std::move(op));
        } catch (const Error& e) {
            fail(where, e.what());
        }
    }
    return std::move(*out);
}

Json to_json(const SubspaceBasis& basis) {
    Json j;
    j["dimension"] = basis.dimension();
    Json list = Json::array();
    for (const auto& b : basis.basis()) list.push_back(to_json(b));
    j["basis"] = std::move(list);
    return j;
}

SubspaceBasis subspace_from_json(const Json& j) {
    const int dimension = int_field(j, "dimension", "subspace");
    const Json& list = field(j, "basis", "subspace");
    if (!list.is_array() || list.size() != static_cast<std::size_t>(dimension))
        fail("subspace.basis", "length does not match dimension");
    if (list.empty()) fail("subspace.basis", "cannot infer the shape of an empty basis");
    std::vector<Operator> ops;
    for (const auto& item : list) ops.push_back(operator_from_json(item));
    const int site_dim = ops.front().site_dim();
    const int legs = ops.front().legs();
    return SubspaceBasis(site_dim, legs, std::move(ops));
}

Json certificate_to_json(const Certificate& certificate) {
    Json coeffs = Json::array();
    for (const auto& c : certificate.coefficients) coeffs.push_back(format_rational(c));
    Json j;
    j["coefficients"] = std::move(coeffs);
    return j;
}

Json parse_json(std::string_view text, std::string_view source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // e.byte is the 1-based offset of the failure
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(std::string(source) + ":" + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path.string());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(path.string() + ": cannot open for writing");
    out << dump(j);
    if (!out) throw Error(path.string() + ": write failed");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ybt::io
