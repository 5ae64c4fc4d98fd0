#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "repcontain/decision.hpp"

namespace repcontain {

using json = nlohmann::json;

struct LoadedRepresentation {
    Representation rep;
    std::vector<std::string> warnings;  // non-canonical or duplicated input terms
};

/// Wire format: {"n": 3, "terms": [{"partition": [2,1], "mult": 1}, ...]}.
/// The loader validates partitions, canonicalizes modulo the determinant and
/// merges duplicates, warning when the input was not already canonical.
/// Throws std::invalid_argument on schema violations.
LoadedRepresentation representation_from_json(const json& j);
LoadedRepresentation load_representation_file(const std::string& path);

/// Multiplicities are emitted as JSON numbers while they fit in 64 bits and
/// as decimal strings beyond that; term lists come out sorted.
json representation_to_json(const Representation& rep);

json bigint_to_json(const BigInt& v);
json torus_point_to_json(const TorusPoint& p);
json verdict_to_json(const Verdict& v);
json conditions_to_json(const ConditionsVerdict& v);

/// Comma-separated exact rationals, e.g. "2,1/2".
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace repcontain
