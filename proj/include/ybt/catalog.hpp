#pragma once

#include "ybt/io.hpp"
#include "ybt/operator.hpp"
#include "ybt/twist.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ybt::catalog {

enum class Regime { none, split_A, split_B };

std::string_view to_string(Regime r);
Regime regime_from_string(std::string_view s);

using Params = std::map<std::string, Rational>;

struct Entry {
    std::string name;
    Operator r;
    std::optional<TwistPair> twist;
    Regime regime = Regime::none;
    Params params;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

/// Sorted entry names.
std::vector<std::string> list();

/// Default parameter values of an entry; throws Error for unknown names.
Params default_params(const std::string& name);

/// Validated entry. Default parameters load the checked-in data file; any
/// override rebuilds the matrices from their closed forms. Throws Error for
/// unknown names or parameters, ValidationError when a check fails.
Entry get(const std::string& name, const Params& overrides = {});

/// Builds an entry from its closed form without touching the data files.
Entry build(const std::string& name, const Params& overrides = {});

/// Re-runs every entry invariant; throws ValidationError with the failing residual.
void validate(const Entry& entry);

io::Json to_json(const Entry& entry);
Entry entry_from_json(const io::Json& j);

/// Directory of the versioned data files ($YBT_CATALOG_DIR overrides the built-in path).
std::filesystem::path data_dir();
std::filesystem::path data_file(const std::string& name);

// Closed forms used by the builders.
Operator six_vertex(const Rational& q);
Operator jordanian_f(const Rational& xi);

}  // namespace ybt::catalog
