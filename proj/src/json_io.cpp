#include "wreath/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "wreath/error.hpp"

namespace wreath {

using nlohmann::json;

namespace {

json require_field(const json& j, const char* key, const std::string& what) {
    if (!j.contains(key))
        throw InputError(what + ": missing field \"" + key + "\"");
    return j.at(key);
}

std::string require_string(const json& j, const char* key, const std::string& what) {
    json v = require_field(j, key, what);
    if (!v.is_string()) throw InputError(what + ": field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

long long require_int(const json& j, const char* key, const std::string& what) {
    json v = require_field(j, key, what);
    if (!v.is_number_integer())
        throw InputError(what + ": field \"" + key + "\" must be an integer");
    return v.get<long long>();
}

Int int_from_json(const json& v, const std::string& what) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
            throw InputError(what + ": malformed integer string \"" + v.get<std::string>() + "\"");
        }
    }
    throw InputError(what + ": expected an integer or integer string");
}

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

// [[s, t, h], ...] with plain integer exponents
BigradedPoly hodge_terms_from_json(const json& arr, const std::string& what) {
    if (!arr.is_array()) throw InputError(what + ": \"hodge\" must be an array of [s,t,h] triples");
    BigradedPoly p;
    for (const auto& triple : arr) {
        if (!triple.is_array() || triple.size() != 3)
            throw InputError(what + ": hodge entry must be an [s,t,h] triple");
        if (!triple[0].is_number_integer() || !triple[1].is_number_integer())
            throw InputError(what + ": hodge exponents must be integers");
        p.add_term(2 * triple[0].get<int>(), 2 * triple[1].get<int>(),
                   int_from_json(triple[2], what));
    }
    return p;
}

json hodge_terms_to_json(const BigradedPoly& p) {
    json arr = json::array();
    for (const auto& [k, c] : p.terms())
        arr.push_back({k.first / 2, k.second / 2, int_to_json(c)});
    return arr;
}

}  // namespace

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return j;
}

FiniteGroup group_from_json(const json& j) {
    std::string name = require_string(j, "name", "group");
    std::string what = "group '" + name + "'";
    long long order = require_int(j, "order", what);
    json mul = require_field(j, "mul", what);
    if (!mul.is_array() || static_cast<long long>(mul.size()) != order)
        throw InputError(what + ": \"mul\" must be an array of " + std::to_string(order) + " rows");
    std::vector<std::vector<int>> table;
    table.reserve(mul.size());
    for (const auto& row : mul) {
        if (!row.is_array()) throw InputError(what + ": \"mul\" rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw InputError(what + ": \"mul\" entries must be integers");
            r.push_back(v.get<int>());
        }
        table.push_back(std::move(r));
    }
    return FiniteGroup(name, table);
}

FiniteGroup load_group_file(const std::string& path) {
    try {
        return group_from_json(read_json_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

OrbifoldData orbifold_from_json(const json& j) {
    std::string name = require_string(j, "name", "orbifold");
    std::string what = "orbifold '" + name + "'";
    int dim = static_cast<int>(require_int(j, "dim", what));
    json secs = require_field(j, "sectors", what);
    if (!secs.is_array()) throw InputError(what + ": \"sectors\" must be an array");
    std::vector<Sector> sectors;
    for (const auto& js : secs) {
        Sector s;
        s.class_label = require_string(js, "class", what);
        json ident = require_field(js, "identity", what + " sector '" + s.class_label + "'");
        if (!ident.is_boolean())
            throw InputError(what + ": sector \"identity\" flag must be a boolean");
        s.identity = ident.get<bool>();
        json comps = require_field(js, "components", what + " sector '" + s.class_label + "'");
        if (!comps.is_array()) throw InputError(what + ": \"components\" must be an array");
        for (const auto& jc : comps) {
            SectorComponent c;
            c.label = require_string(jc, "label", what);
            c.shift = static_cast<int>(require_int(jc, "shift", what + " component '" + c.label + "'"));
            c.hodge = hodge_terms_from_json(require_field(jc, "hodge", what), what);
            s.components.push_back(std::move(c));
        }
        sectors.push_back(std::move(s));
    }
    return OrbifoldData(name, dim, std::move(sectors));
}

OrbifoldData load_orbifold_file(const std::string& path) {
    try {
        return orbifold_from_json(read_json_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

json orbifold_to_json(const OrbifoldData& o) {
    json secs = json::array();
    for (const auto& s : o.sectors()) {
        json comps = json::array();
        for (const auto& c : s.components)
            comps.push_back({{"label", c.label}, {"shift", c.shift},
                             {"hodge", hodge_terms_to_json(c.hodge)}});
        secs.push_back({{"class", s.class_label}, {"identity", s.identity}, {"components", comps}});
    }
    return {{"name", o.name()}, {"dim", o.dim()}, {"sectors", secs}};
}

SurfaceHodge surface_from_json(const json& j) {
    std::string name = require_string(j, "name", "surface");
    std::string what = "surface '" + name + "'";
    json compact = require_field(j, "compact", what);
    if (!compact.is_boolean()) throw InputError(what + ": \"compact\" must be a boolean");
    BigradedPoly hodge = hodge_terms_from_json(require_field(j, "hodge", what), what);
    return make_surface(name, compact.get<bool>(), std::move(hodge));
}

SurfaceHodge load_surface_file(const std::string& path) {
    try {
        return surface_from_json(read_json_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

json surface_to_json(const SurfaceHodge& X) {
    return {{"name", X.name}, {"compact", X.compact}, {"hodge", hodge_terms_to_json(X.hodge)}};
}

GenusTable genus_from_json(const json& j) {
    GenusTable T;
    T.name = require_string(j, "name", "genus table");
    std::string what = "genus table '" + T.name + "'";
    T.d = static_cast<int>(require_int(j, "d", what));
    if (T.d <= 0) throw InputError(what + ": dimension must be positive");
    json coeffs = require_field(j, "coeffs", what);
    if (!coeffs.is_array()) throw InputError(what + ": \"coeffs\" must be an array of [m,l2,c]");
    for (const auto& triple : coeffs) {
        if (!triple.is_array() || triple.size() != 3)
            throw InputError(what + ": coeffs entry must be an [m,l2,c] triple");
        if (!triple[0].is_number_integer() || !triple[1].is_number_integer())
            throw InputError(what + ": m and l2 must be integers");
        int m = triple[0].get<int>();
        if (m < 0) throw InputError(what + ": q-degree m must be >= 0");
        T.add(m, triple[1].get<int>(), int_from_json(triple[2], what));
    }
    if (j.contains("qmax_in")) {
        int declared = static_cast<int>(require_int(j, "qmax_in", what));
        if (declared < T.qmax_in)
            throw InputError(what + ": declared qmax_in " + std::to_string(declared) +
                             " below deepest provided row " + std::to_string(T.qmax_in));
        T.qmax_in = declared;
    }
    return T;
}

GenusTable load_genus_file(const std::string& path) {
    try {
        return genus_from_json(read_json_file(path));
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

json genus_to_json(const GenusTable& T) {
    json coeffs = json::array();
    for (const auto& [k, c] : T.coeffs) coeffs.push_back({k.first, k.second, int_to_json(c)});
    return {{"name", T.name}, {"d", T.d}, {"qmax_in", T.qmax_in}, {"coeffs", coeffs}};
}

json poly_to_json_terms(const BigradedPoly& p) {
    json arr = json::array();
    for (const auto& [k, c] : p.terms()) arr.push_back({k.first, k.second, int_to_json(c)});
    return arr;
}

json series_to_json(const SeriesQ& s) {
    json arr = json::array();
    for (const auto& [k, v] : s.coeffs()) {
        json entry = {{"q", k.first}, {"terms", poly_to_json_terms(v)}};
        if (s.pmax() > 0) entry["p"] = k.second;
        arr.push_back(std::move(entry));
    }
    return arr;
}

SeriesQ series_from_json(const json& j, int qmax, int pmax) {
    if (!j.is_array()) throw InputError("series: expected an array of coefficient records");
    SeriesQ s(qmax, pmax);
    for (const auto& rec : j) {
        int q = static_cast<int>(require_int(rec, "q", "series"));
        int p = rec.contains("p") ? static_cast<int>(require_int(rec, "p", "series")) : 0;
        json terms = require_field(rec, "terms", "series");
        BigradedPoly poly;
        for (const auto& triple : terms) {
            if (!triple.is_array() || triple.size() != 3)
                throw InputError("series: term must be an [s2,t2,coeff] triple");
            poly.add_term(triple[0].get<int>(), triple[1].get<int>(),
                          int_from_json(triple[2], "series"));
        }
        s.set(q, p, std::move(poly));
    }
    return s;
}

}  // namespace wreath
