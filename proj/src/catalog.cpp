#include "ybt/catalog.hpp"

#include "ybt/factorized.hpp"
#include "ybt/tensor.hpp"
#include "ybt/ybe.hpp"

#include <cstdlib>
#include <functional>

#ifndef YBT_CATALOG_DIR
#define YBT_CATALOG_DIR "catalog/v1"
#endif

namespace ybt::catalog {

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::none: return "none";
        case Regime::split_A: return "split_A";
        case Regime::split_B: return "split_B";
    }
    return "none";
}

Regime regime_from_string(std::string_view s) {
    if (s == "none") return Regime::none;
    if (s == "split_A") return Regime::split_A;
    if (s == "split_B") return Regime::split_B;
    throw ParseError("unknown regime \"" + std::string(s) + "\"");
}

// ---------------------------------------------------------------------------
// Closed forms, all on site_dim 2.

Operator six_vertex(const Rational& q) {
    if (sgn(q) == 0) throw Error("six_vertex: q must be nonzero");
    const Rational w = q - 1 / q;
    // basis order 11, 12, 21, 22; off-diagonal term is (q - 1/q) e12 (x) e21
    return Operator::from_rows(2, 2, {{q, 0, 0, 0},
                                      {0, 1, w, 0},
                                      {0, 0, 1, 0},
                                      {0, 0, 0, q}});
}

// I + xi E (x) H with E = e12, H = diag(1, -1).
Operator jordanian_f(const Rational& xi) {
    return Operator::from_rows(2, 2, {{1, 0, xi, 0},
                                      {0, 1, 0, -xi},
                                      {0, 0, 1, 0},
                                      {0, 0, 0, 1}});
}

namespace {

// Cartan-type split-A twist of the six-vertex matrix.
Operator cartan_f(const Rational& t) {
    const Rational d[] = {1, t, 1, 1};
    return Operator::diagonal(2, 2, d);
}

// Reshetikhin-type diagonal twist; also satisfies F12 F13 F23 = F23 F13 F12.
Operator reshetikhin_f(const Rational& s) {
    const Rational d[] = {1, s, 1 / s, 1};
    return Operator::diagonal(2, 2, d);
}

struct Recipe {
    Params defaults;
    std::function<Entry(const Params&)> build;
};

const Rational& param(const Params& p, const char* key) { return p.at(key); }

Rational nonzero(const Params& p, const char* key) {
    const Rational& v = param(p, key);
    if (sgn(v) == 0) throw Error(std::string("parameter ") + key + " must be nonzero");
    return v;
}

const std::map<std::string, Recipe>& recipes() {
    static const std::map<std::string, Recipe> table = {
        {"diag_twist",
         {{{"q", Rational(3, 2)}, {"s", Rational(3)}},
          [](const Params& p) {
              Operator r = six_vertex(nonzero(p, "q"));
              auto built = pair_from_split_B(r, reshetikhin_f(nonzero(p, "s")));
              return Entry{"diag_twist", std::move(r), std::move(built.pair), Regime::split_B, p};
          }}},
        {"identity",
         {{},
          [](const Params& p) {
              return Entry{"identity", Operator::identity(2, 2), TwistPair::identity(2),
                           Regime::none, p};
          }}},
        {"jordanian",
         {{{"xi", Rational(1)}},
          [](const Params& p) {
              Operator r = Operator::identity(2, 2);
              auto built = pair_from_split_B(r, jordanian_f(param(p, "xi")));
              return Entry{"jordanian", std::move(r), std::move(built.pair), Regime::split_B, p};
          }}},
        {"perm",
         {{},
          [](const Params& p) {
              return Entry{"perm", swap_operator(2), std::nullopt, Regime::none, p};
          }}},
        {"six_vertex",
         {{{"q", Rational(3, 2)}, {"t", Rational(2)}},
          [](const Params& p) {
              Operator r = six_vertex(nonzero(p, "q"));
              auto built = pair_from_split_A(r, cartan_f(nonzero(p, "t")));
              return Entry{"six_vertex", std::move(r), std::move(built.pair), Regime::split_A, p};
          }}},
    };
    return table;
}

const Recipe& recipe(const std::string& name) {
    auto it = recipes().find(name);
    if (it == recipes().end()) throw Error("unknown catalog entry \"" + name + "\"");
    return it->second;
}

Params resolve(const std::string& name, const Params& overrides) {
    Params p = recipe(name).defaults;
    for (const auto& [key, value] : overrides) {
        if (!p.contains(key))
            throw Error("catalog entry \"" + name + "\" has no parameter \"" + key + "\"");
        p[key] = value;
    }
    return p;
}

void require(const CheckReport& report, const std::string& what, const std::string& entry) {
    for (const auto& e : report.entries())
        if (e.gating && !e.value.passes(report.tolerance()))
            throw ValidationError("catalog entry \"" + entry + "\": " + what + " residual " +
                                  e.name + " = " + e.value.to_string());
}

}  // namespace

std::vector<std::string> list() {
    std::vector<std::string> names;
    for (const auto& [name, _] : recipes()) names.push_back(name);
    return names;
}

Params default_params(const std::string& name) { return recipe(name).defaults; }

void validate(const Entry& entry) {
    const Magnitude ybe = ybe_residual(entry.r);
    if (!ybe.passes())
        throw ValidationError("catalog entry \"" + entry.name + "\": ybe residual " + ybe.to_string());
    if (entry.twist) {
        const CheckReport report = check_pair(entry.r, *entry.twist);
        require(report, "twist pair", entry.name);
        if (!report.passes("ybe_twisted"))
            throw ValidationError("catalog entry \"" + entry.name + "\": twisted matrix residual " +
                                  report.at("ybe_twisted").to_string());
    }
    if (entry.regime != Regime::none) {
        if (!entry.twist)
            throw ValidationError("catalog entry \"" + entry.name + "\": regime without a twist");
        const Operator& f = entry.twist->f();
        if (entry.regime == Regime::split_A)
            require(check_split_A(entry.r, f), "split_A", entry.name);
        else
            require(check_split_B(entry.r, f), "split_B", entry.name);
    }
}

Entry build(const std::string& name, const Params& overrides) {
    Params p = resolve(name, overrides);
    try {
        return recipe(name).build(p);
    } catch (const NotInvertible& e) {
        throw Error("catalog entry \"" + name + "\": parameters make the twist singular (" +
                    e.what() + ")");
    }
}

Entry get(const std::string& name, const Params& overrides) {
    const Params p = resolve(name, overrides);
    Entry entry = p == recipe(name).defaults ? entry_from_json(io::read_json_file(data_file(name)))
                                             : build(name, overrides);
    if (entry.name != name)
        throw ValidationError("data file for \"" + name + "\" names entry \"" + entry.name + "\"");
    validate(entry);
    return entry;
}

io::Json to_json(const Entry& entry) {
    io::Json j;
    j["format"] = "ybt-catalog/1";
    j["name"] = entry.name;
    io::Json params = io::Json::object();
    for (const auto& [key, value] : entry.params) params[key] = format_rational(value);
    j["params"] = std::move(params);
    j["regime"] = std::string(to_string(entry.regime));
    j["r"] = io::to_json(entry.r);
    j["twist"] = entry.twist ? io::to_json(*entry.twist) : io::Json(nullptr);
    return j;
}

Entry entry_from_json(const io::Json& j) try {
    if (!j.is_object() || j.value("format", "") != "ybt-catalog/1")
        throw ParseError("catalog entry: expected format \"ybt-catalog/1\"");
    Entry e{j.at("name").get<std::string>(), io::operator_from_json(j.at("r")), std::nullopt,
            regime_from_string(j.at("regime").get<std::string>()), {}};
    for (const auto& [key, value] : j.at("params").items())
        e.params[key] = parse_rational(value.get<std::string>());
    if (!j.at("twist").is_null()) e.twist = io::pair_from_json(j.at("twist"));
    return e;
} catch (const io::Json::exception& e) {
    throw ParseError(std::string("catalog entry: ") + e.what());
}

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("YBT_CATALOG_DIR"); env != nullptr && *env != '\0')
        return env;
    return YBT_CATALOG_DIR;
}

std::filesystem::path data_file(const std::string& name) { return data_dir() / (name + ".json"); }

}  // namespace ybt::catalog
