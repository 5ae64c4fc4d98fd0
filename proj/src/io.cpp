#include "repcontain/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace repcontain {

namespace {

BigInt bigint_from_json(const json& j) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

}  // namespace

json bigint_to_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
        return json(v.template convert_to<std::uint64_t>());
    }
    if (v < 0 && v >= BigInt(std::numeric_limits<std::int64_t>::min())) {
        return json(v.template convert_to<std::int64_t>());
    }
    return json(v.str());
}

LoadedRepresentation representation_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("representation must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw std::invalid_argument("representation needs an integer field \"n\"");
    }
    int n = j["n"].get<int>();
    if (n < 2) throw std::invalid_argument("representation needs n >= 2");
    if (!j.contains("terms") || !j["terms"].is_array()) {
        throw std::invalid_argument("representation needs an array field \"terms\"");
    }
    SchurElement element(n);
    std::vector<std::string> warnings;
    std::vector<Partition> seen;
    for (const json& term : j["terms"]) {
        if (!term.is_object() || !term.contains("partition") || !term.contains("mult")) {
            throw std::invalid_argument("each term needs \"partition\" and \"mult\"");
        }
        if (!term["partition"].is_array()) {
            throw std::invalid_argument("\"partition\" must be an array of integers");
        }
        std::vector<int> parts;
        for (const json& p : term["partition"]) {
            if (!p.is_number_integer()) {
                throw std::invalid_argument("partition entries must be integers");
            }
            parts.push_back(p.get<int>());
        }
        Partition lambda;
        try {
            lambda = Partition(parts);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("invalid partition: ") + e.what());
        }
        if (lambda.length() > n) {
            throw std::invalid_argument("partition " + lambda.to_string() +
                                        " has more than n rows");
        }
        BigInt mult = bigint_from_json(term["mult"]);
        if (mult < 1) throw std::invalid_argument("multiplicities must be positive");
        if (lambda.length() == n) {
            warnings.push_back("term " + lambda.to_string() +
                               " was not canonical; reduced modulo the determinant");
        }
        for (const Partition& s : seen) {
            if (s == lambda) {
                warnings.push_back("duplicate term " + lambda.to_string() + " merged");
                break;
            }
        }
        seen.push_back(lambda);
        element.add_term(lambda, mult);
    }
    return LoadedRepresentation{canonicalize(element), std::move(warnings)};
}

LoadedRepresentation load_representation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("cannot parse " + path + ": " + e.what());
    }
    return representation_from_json(j);
}

json representation_to_json(const Representation& rep) {
    json terms = json::array();
    for (const auto& [lambda, mult] : rep.element().terms()) {
        json t;
        t["partition"] = lambda.parts();
        t["mult"] = bigint_to_json(mult);
        terms.push_back(std::move(t));
    }
    json out;
    out["n"] = rep.group_rank();
    out["terms"] = std::move(terms);
    return out;
}

json torus_point_to_json(const TorusPoint& p) {
    json coords = json::array();
    for (const Rational& c : p.coords) coords.push_back(rational_to_string(c));
    return coords;
}

namespace {

json real_condition_to_json(const RealConditionOutcome& out) {
    json j;
    switch (out.status) {
        case RealConditionStatus::certified_strict: j["status"] = "certified_strict"; break;
        case RealConditionStatus::no_violation_found: j["status"] = "no_violation_found"; break;
        case RealConditionStatus::violated: j["status"] = "violated"; break;
    }
    j["witness"] = out.witness ? torus_point_to_json(*out.witness) : json();
    if (out.root_interval) {
        j["root_interval"] = json::array({rational_to_string(out.root_interval->first),
                                          rational_to_string(out.root_interval->second)});
    } else {
        j["root_interval"] = json();
    }
    if (out.gap_polynomial) {
        json coeffs = json::array();
        for (const BigInt& c : out.gap_polynomial->coefficients()) {
            coeffs.push_back(bigint_to_json(c));
        }
        j["gap_polynomial"] = std::move(coeffs);
    } else {
        j["gap_polynomial"] = json();
    }
    return j;
}

}  // namespace

json conditions_to_json(const ConditionsVerdict& v) {
    json j;
    j["n"] = v.n;
    j["dimension"] = {{"rho", bigint_to_json(v.dim_rho)},
                      {"sigma", bigint_to_json(v.dim_sigma)},
                      {"strict_less", v.dimension_strict_less}};
    j["condition_real"] = real_condition_to_json(v.condition_real);
    j["condition_tropical"] = v.condition_tropical;
    j["sigma_generic"] = v.sigma_generic;
    j["conditions_pass"] = v.both_pass();
    return j;
}

json verdict_to_json(const Verdict& v) {
    json j = conditions_to_json(v.conditions);
    if (v.asymptotic) {
        j["asymptotic"] = {{"minimal_exponent", v.asymptotic->minimal_exponent},
                           {"checked_up_to", v.asymptotic->checked_up_to},
                           {"all_from_minimal", v.asymptotic->all_from_minimal}};
    } else {
        j["asymptotic"] = json();
    }
    j["catalyst"] = v.catalyst ? representation_to_json(*v.catalyst) : json();
    if (v.converse) {
        j["converse"] = {{"wp_containment", v.converse->wp_contained},
                         {"points_checked", v.converse->points_checked},
                         {"failures", v.converse->failures}};
    } else {
        j["converse"] = json();
    }
    return j;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in rational list");
        out.push_back(rational_from_string(item));
    }
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
}

}  // namespace repcontain
