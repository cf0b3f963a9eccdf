#pragma once

// Configuration documents (JSON, integer-only numbers). Everything is parsed
// and validated into typed structs before any computation runs.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curves.hpp"
#include "errors.hpp"
#include "invariants.hpp"
#include "ledger.hpp"
#include "singularities.hpp"

namespace prymcheck::config {

using json = nlohmann::json;

struct ActionSpec {
    std::string name;
    DiagonalAction action;
    int degree_bound = 8;
    int relation_bound = 8;
    std::optional<CoordinateInvolution> involution;
    std::optional<long long> expect_generators, expect_relations, expect_fixed_generators;
};

struct GroupSpec {
    std::string name;
    std::vector<CyclicDiagonalElement> generators;
    std::optional<std::string> expect; // terminal | canonical_not_terminal | not_canonical
};

struct PlueckerSpec {
    long long d = 0, delta = 0, kappa = 0;
    std::optional<long long> g, stated_b;
};

struct CoverSpec {
    long long g_source = 0, g_target = 0, degree = 1;
    std::optional<long long> expect;
};

struct ThetaSpec {
    int g = 1;
    ThetaParity parity = ThetaParity::odd;
    std::optional<long long> expect;
};

struct PolystableCase {
    PolystableSpec spec;
    std::optional<std::vector<long long>> expect;
};

struct ProductSpec {
    std::vector<std::string> left, right; // summed class names
    std::optional<long long> expect;
    bool genus = false; // also report the adjunction genus of the product
};

struct IntersectionSpec {
    std::vector<std::string> labels;
    std::vector<std::vector<Integer>> pairing;
    std::map<std::string, std::vector<Integer>> classes;
    std::vector<ProductSpec> products;
};

struct LedgerSpec {
    Ledger ledger;
    std::optional<long long> expect_total;
};

struct ConfigDocument {
    std::vector<ActionSpec> actions;
    std::vector<GroupSpec> groups;
    std::vector<PlueckerSpec> pluecker;
    std::vector<CoverSpec> covers;
    std::vector<ThetaSpec> thetas;
    std::vector<PolystableCase> polystable;
    std::optional<IntersectionSpec> intersection;
    std::optional<int> lines27_degree;
    std::optional<LedgerSpec> ledger;
};

namespace detail {

inline const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object())
        throw schema_error(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw schema_error(where + ": missing field '" + key + "'");
    return *it;
}

inline long long integer(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw schema_error(where + ": expected an integer");
    return j.get<long long>();
}

inline std::string string(const json& j, const std::string& where) {
    if (!j.is_string())
        throw schema_error(where + ": expected a string");
    return j.get<std::string>();
}

inline std::optional<long long> opt_integer(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key))
        return std::nullopt;
    return integer(j.at(key), where + "." + key);
}

inline const json& array(const json& j, const std::string& where) {
    if (!j.is_array())
        throw schema_error(where + ": expected an array");
    return j;
}

template <class T = int>
std::vector<T> int_row(const json& j, const std::string& where) {
    std::vector<T> out;
    std::size_t i = 0;
    for (const auto& v : array(j, where))
        out.push_back(static_cast<T>(integer(v, where + "[" + std::to_string(i++) + "]")));
    return out;
}

template <class T = int>
std::vector<std::vector<T>> int_matrix(const json& j, const std::string& where) {
    std::vector<std::vector<T>> out;
    std::size_t i = 0;
    for (const auto& row : array(j, where))
        out.push_back(int_row<T>(row, where + "[" + std::to_string(i++) + "]"));
    return out;
}

inline std::vector<std::string> string_row(const json& j, const std::string& where) {
    std::vector<std::string> out;
    for (const auto& v : array(j, where))
        out.push_back(string(v, where));
    return out;
}

inline void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
            throw schema_error(where + ": unknown field '" + it.key() + "'");
}

inline ActionSpec parse_action(const json& j, const std::string& where) {
    only_keys(j,
              {"name", "ambient_dim", "torus_weights", "finite_factors", "sign_rows", "variable_names", "degree_bound",
               "relation_bound", "involution", "expect"},
              where);
    ActionSpec a;
    a.name = string(field(j, "name", where), where + ".name");
    a.action.ambient_dim = static_cast<std::size_t>(integer(field(j, "ambient_dim", where), where + ".ambient_dim"));
    if (j.contains("torus_weights"))
        a.action.torus_weights = int_matrix(j["torus_weights"], where + ".torus_weights");
    if (j.contains("finite_factors")) {
        std::size_t i = 0;
        for (const auto& f : array(j["finite_factors"], where + ".finite_factors")) {
            auto w = where + ".finite_factors[" + std::to_string(i++) + "]";
            only_keys(f, {"modulus", "weights"}, w);
            a.action.finite_factors.push_back(
                {static_cast<int>(integer(field(f, "modulus", w), w + ".modulus")), int_row(field(f, "weights", w), w + ".weights")});
        }
    }
    if (j.contains("sign_rows"))
        for (const auto& row : int_matrix(j["sign_rows"], where + ".sign_rows")) {
            FiniteFactor f{2, {}};
            for (int s : row) {
                if (s != 1 && s != -1)
                    throw schema_error(where + ".sign_rows: entries must be 1 or -1");
                f.weights.push_back(s == -1 ? 1 : 0);
            }
            a.action.finite_factors.push_back(std::move(f));
        }
    if (j.contains("variable_names"))
        a.action.variable_names = string_row(j["variable_names"], where + ".variable_names");
    a.degree_bound = static_cast<int>(opt_integer(j, "degree_bound", where).value_or(8));
    a.relation_bound = static_cast<int>(opt_integer(j, "relation_bound", where).value_or(8));
    if (a.degree_bound < 1 || a.relation_bound < 1)
        throw schema_error(where + ": bounds must be >= 1");
    if (j.contains("involution")) {
        const auto& inv = j["involution"];
        auto w = where + ".involution";
        only_keys(inv, {"image", "signs"}, w);
        CoordinateInvolution c;
        for (long long v : int_row<long long>(field(inv, "image", w), w + ".image")) {
            if (v < 0)
                throw schema_error(w + ".image: negative index");
            c.image.push_back(static_cast<std::size_t>(v));
        }
        if (inv.contains("signs"))
            c.signs = int_row(inv["signs"], w + ".signs");
        a.involution = std::move(c);
    }
    if (j.contains("expect")) {
        const auto& e = j["expect"];
        only_keys(e, {"generators", "relations", "fixed_generators"}, where + ".expect");
        a.expect_generators = opt_integer(e, "generators", where + ".expect");
        a.expect_relations = opt_integer(e, "relations", where + ".expect");
        a.expect_fixed_generators = opt_integer(e, "fixed_generators", where + ".expect");
    }
    try {
        a.action.validate();
        if (a.involution)
            a.involution->validate(a.action.ambient_dim);
    } catch (const error& ex) {
        throw schema_error(where + ": " + ex.what());
    }
    return a;
}

inline GroupSpec parse_group(const json& j, const std::string& where) {
    only_keys(j, {"name", "sign_vectors", "generators", "expect"}, where);
    GroupSpec g;
    g.name = string(field(j, "name", where), where + ".name");
    try {
        if (j.contains("sign_vectors"))
            for (const auto& row : int_matrix(j["sign_vectors"], where + ".sign_vectors"))
                g.generators.push_back(CyclicDiagonalElement::from_signs(row));
        if (j.contains("generators")) {
            std::size_t i = 0;
            for (const auto& e : array(j["generators"], where + ".generators")) {
                auto w = where + ".generators[" + std::to_string(i++) + "]";
                only_keys(e, {"order", "exponents"}, w);
                g.generators.emplace_back(static_cast<int>(integer(field(e, "order", w), w + ".order")),
                                          int_row(field(e, "exponents", w), w + ".exponents"));
            }
        }
    } catch (const schema_error&) {
        throw;
    } catch (const error& ex) {
        throw schema_error(where + ": " + ex.what());
    }
    if (g.generators.empty())
        throw schema_error(where + ": group needs sign_vectors or generators");
    if (j.contains("expect")) {
        g.expect = string(j["expect"], where + ".expect");
        if (*g.expect != "terminal" && *g.expect != "canonical_not_terminal" && *g.expect != "not_canonical")
            throw schema_error(where + ".expect: unknown classification '" + *g.expect + "'");
    }
    return g;
}

inline IntersectionSpec parse_intersection(const json& j, const std::string& where) {
    only_keys(j, {"labels", "pairing", "classes", "products"}, where);
    IntersectionSpec s;
    s.labels = string_row(field(j, "labels", where), where + ".labels");
    for (const auto& row : int_matrix<long long>(field(j, "pairing", where), where + ".pairing")) {
        s.pairing.emplace_back();
        for (long long v : row)
            s.pairing.back().emplace_back(v);
    }
    if (j.contains("classes")) {
        const auto& c = j["classes"];
        if (!c.is_object())
            throw schema_error(where + ".classes: expected an object");
        for (auto it = c.begin(); it != c.end(); ++it) {
            auto row = int_row<long long>(it.value(), where + ".classes." + it.key());
            if (row.size() != s.labels.size())
                throw schema_error(where + ".classes." + it.key() + ": length differs from labels");
            s.classes[it.key()] = std::vector<Integer>(row.begin(), row.end());
        }
    }
    if (j.contains("products")) {
        std::size_t i = 0;
        for (const auto& p : array(j["products"], where + ".products")) {
            auto w = where + ".products[" + std::to_string(i++) + "]";
            only_keys(p, {"left", "right", "expect", "genus"}, w);
            ProductSpec ps;
            ps.left = string_row(field(p, "left", w), w + ".left");
            ps.right = string_row(field(p, "right", w), w + ".right");
            for (const auto* side : {&ps.left, &ps.right})
                for (const auto& name : *side)
                    if (!s.classes.count(name) &&
                        std::find(s.labels.begin(), s.labels.end(), name) == s.labels.end())
                        throw schema_error(w + ": unknown class '" + name + "'");
            ps.expect = opt_integer(p, "expect", w);
            if (p.contains("genus")) {
                if (!p["genus"].is_boolean())
                    throw schema_error(w + ".genus: expected a boolean");
                ps.genus = p["genus"].get<bool>();
            }
            s.products.push_back(std::move(ps));
        }
    }
    if (s.pairing.size() != s.labels.size())
        throw schema_error(where + ".pairing: size differs from labels");
    return s;
}

inline LedgerSpec parse_ledger(const json& j, const std::string& where) {
    only_keys(j, {"schema", "entries", "expect_total"}, where);
    LedgerSpec s;
    const auto name = string(field(j, "schema", where), where + ".schema");
    if (name == "cubic")
        s.ledger.schema = cubic_schema();
    else if (name == "dp2")
        s.ledger.schema = dp2_schema();
    else
        throw schema_error(where + ".schema: unknown ledger schema '" + name + "'");
    std::size_t i = 0;
    for (const auto& e : array(field(j, "entries", where), where + ".entries")) {
        auto w = where + ".entries[" + std::to_string(i++) + "]";
        only_keys(e, {"label", "dimension", "chi_base", "chi_fiber", "provenance"}, w);
        StratumEntry st;
        st.label = string(field(e, "label", w), w + ".label");
        st.dimension = static_cast<int>(integer(field(e, "dimension", w), w + ".dimension"));
        if (e.contains("chi_base"))
            st.chi_base = Integer(integer(e["chi_base"], w + ".chi_base"));
        st.chi_fiber = integer(field(e, "chi_fiber", w), w + ".chi_fiber");
        if (e.contains("provenance"))
            st.base_provenance = st.fiber_provenance = provenance_from_string(string(e["provenance"], w + ".provenance"));
        s.ledger.entries.push_back(std::move(st));
    }
    s.expect_total = opt_integer(j, "expect_total", where);
    try {
        s.ledger.validate();
        for (const auto& e : s.ledger.entries)
            if (!e.contribution())
                throw incomplete_ledger("stratum '" + e.label + "' has nonzero fiber chi but no base chi");
    } catch (const incomplete_ledger& ex) {
        throw schema_error(where + ": " + ex.what());
    }
    return s;
}

} // namespace detail

inline ConfigDocument parse(const json& j) {
    using namespace detail;
    if (!j.is_object())
        throw schema_error("config: top level must be an object");
    only_keys(j, {"actions", "groups", "pluecker", "covers", "thetas", "polystable", "intersection", "lines27", "ledger"},
              "config");
    ConfigDocument doc;
    auto each = [&](const char* key, auto&& fn) {
        if (!j.contains(key))
            return;
        std::size_t i = 0;
        for (const auto& item : array(j[key], key))
            fn(item, std::string(key) + "[" + std::to_string(i++) + "]");
    };
    each("actions", [&](const json& a, const std::string& w) { doc.actions.push_back(parse_action(a, w)); });
    each("groups", [&](const json& a, const std::string& w) { doc.groups.push_back(parse_group(a, w)); });
    each("pluecker", [&](const json& a, const std::string& w) {
        only_keys(a, {"d", "delta", "kappa", "g", "stated_b"}, w);
        PlueckerSpec p;
        p.d = integer(field(a, "d", w), w + ".d");
        p.delta = opt_integer(a, "delta", w).value_or(0);
        p.kappa = opt_integer(a, "kappa", w).value_or(0);
        p.g = opt_integer(a, "g", w);
        p.stated_b = opt_integer(a, "stated_b", w);
        if (p.d < 0 || p.delta < 0 || p.kappa < 0 || (p.g && *p.g < 0))
            throw schema_error(w + ": Plücker inputs must be non-negative");
        doc.pluecker.push_back(p);
    });
    each("covers", [&](const json& a, const std::string& w) {
        only_keys(a, {"g_source", "g_target", "degree", "expect"}, w);
        doc.covers.push_back({integer(field(a, "g_source", w), w + ".g_source"),
                              integer(field(a, "g_target", w), w + ".g_target"),
                              integer(field(a, "degree", w), w + ".degree"), opt_integer(a, "expect", w)});
    });
    each("thetas", [&](const json& a, const std::string& w) {
        only_keys(a, {"g", "parity", "expect"}, w);
        ThetaSpec t;
        t.g = static_cast<int>(integer(field(a, "g", w), w + ".g"));
        auto p = string(field(a, "parity", w), w + ".parity");
        if (p != "odd" && p != "even")
            throw schema_error(w + ".parity: expected odd or even");
        t.parity = p == "odd" ? ThetaParity::odd : ThetaParity::even;
        t.expect = opt_integer(a, "expect", w);
        doc.thetas.push_back(t);
    });
    each("polystable", [&](const json& a, const std::string& w) {
        only_keys(a, {"genera", "intersections", "total_chi", "expect"}, w);
        PolystableCase c;
        c.spec.genera = int_row(field(a, "genera", w), w + ".genera");
        c.spec.intersections = int_matrix(field(a, "intersections", w), w + ".intersections");
        c.spec.total_chi = integer(field(a, "total_chi", w), w + ".total_chi");
        if (a.contains("expect"))
            c.expect = int_row<long long>(a["expect"], w + ".expect");
        try {
            c.spec.validate();
        } catch (const error& ex) {
            throw schema_error(w + ": " + ex.what());
        }
        doc.polystable.push_back(std::move(c));
    });
    if (j.contains("intersection"))
        doc.intersection = parse_intersection(j["intersection"], "intersection");
    if (j.contains("lines27")) {
        only_keys(j["lines27"], {"del_pezzo_degree"}, "lines27");
        doc.lines27_degree = static_cast<int>(opt_integer(j["lines27"], "del_pezzo_degree", "lines27").value_or(3));
    }
    if (j.contains("ledger"))
        doc.ledger = parse_ledger(j["ledger"], "ledger");
    return doc;
}

inline ConfigDocument load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw schema_error("cannot open config file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& ex) {
        throw schema_error("config '" + path + "' is not valid JSON: " + ex.what());
    }
    return parse(j);
}

} // namespace prymcheck::config
