#include "cla/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cla/error.hpp"

namespace cla::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw InputError(where + ": " + what);
}

Scalar scalar_from_json(const Field& f, const json& j, const std::string& where)
{
    try {
        if (j.is_string())
            return Scalar::parse(f, j.get<std::string>());
        if (j.is_number_integer())
            return Scalar(f, j.get<long>());
    } catch (const InputError& e) {
        fail(where, e.what());
    } catch (const FieldError& e) {
        fail(where, e.what());
    }
    fail(where, "expected an integer or a string like \"3/4\"");
}

std::size_t index_from_json(const json& j, std::size_t n, const std::string& where)
{
    if (!j.is_number_integer())
        fail(where, "expected a basis index");
    long v = j.get<long>();
    if (v < 1 || static_cast<std::size_t>(v) > n)
        fail(where, "basis index " + std::to_string(v) + " is outside 1.." + std::to_string(n));
    return static_cast<std::size_t>(v - 1);
}

void read_bracket(CompatibleLieAlgebra& g, Bracket w, const json& list, const std::string& name)
{
    if (!list.is_array())
        fail(name, "expected a list of [i, j, [[k, c], ...]] entries");
    std::size_t n = g.dim();
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < list.size(); ++e) {
        std::string where = name + "[" + std::to_string(e) + "]";
        const json& item = list[e];
        if (!item.is_array() || item.size() != 3 || !item[2].is_array())
            fail(where, "expected [i, j, [[k, c], ...]]");
        std::size_t i = index_from_json(item[0], n, where + "[0]");
        std::size_t j = index_from_json(item[1], n, where + "[1]");
        if (i == j)
            fail(where, "a bracket of a basis vector with itself is always zero");
        if (!seen.insert(std::minmax(i, j)).second)
            fail(where, "the pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is given twice");
        Vector value = zero_vector(g.field(), n);
        for (std::size_t t = 0; t < item[2].size(); ++t) {
            std::string at = where + "[2][" + std::to_string(t) + "]";
            const json& term = item[2][t];
            if (!term.is_array() || term.size() != 2)
                fail(at, "expected [k, coefficient]");
            std::size_t k = index_from_json(term[0], n, at + "[0]");
            value[k] += scalar_from_json(g.field(), term[1], at + "[1]");
        }
        g.set_product(w, i, j, value);
    }
}

json bracket_to_json(const CompatibleLieAlgebra& g, Bracket w)
{
    json out = json::array();
    std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            json terms = json::array();
            for (std::size_t k = 0; k < n; ++k) {
                Scalar c = g.coefficient(w, i, j, k);
                if (!c.is_zero())
                    terms.push_back({k + 1, c.to_string()});
            }
            if (!terms.empty())
                out.push_back({i + 1, j + 1, terms});
        }
    return out;
}

} // namespace

Field field_from_json(const json& j, bool allow_char_two)
{
    std::uint64_t p = 0;
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "Q")
            return Field::rationals();
        std::string digits = s.rfind("F_", 0) == 0 ? s.substr(2) : s;
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            fail("field", "expected \"Q\", \"F_p\" or {\"p\": p}, got \"" + s + "\"");
        p = std::stoull(digits);
    } else if (j.is_number_integer()) {
        p = j.get<std::uint64_t>();
    } else if (j.is_object() && j.contains("p") && j["p"].is_number_integer()) {
        p = j["p"].get<std::uint64_t>();
    } else {
        fail("field", "expected \"Q\", \"F_p\" or {\"p\": p}");
    }
    if (p > 0xFFFFFFFFull)
        fail("field", "characteristic too large");
    try {
        return Field::prime(static_cast<std::uint32_t>(p), allow_char_two);
    } catch (const Error& e) {
        fail("field", e.what());
    }
}

json field_to_json(const Field& f)
{
    if (f.is_rational())
        return "Q";
    return json{{"p", f.characteristic()}};
}

CompatibleLieAlgebra algebra_from_json(const json& j, bool allow_char_two)
{
    if (!j.is_object())
        fail("algebra", "expected a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() < 0)
        fail("dim", "expected a non-negative integer");
    if (!j.contains("field"))
        fail("field", "missing");
    Field f = field_from_json(j["field"], allow_char_two);
    std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
    CompatibleLieAlgebra g(f, j["dim"].get<std::size_t>(), label);
    read_bracket(g, Bracket::First, j.value("bracket1", json::array()), "bracket1");
    read_bracket(g, Bracket::Second, j.value("bracket2", json::array()), "bracket2");
    return g;
}

json algebra_to_json(const CompatibleLieAlgebra& g)
{
    json out;
    out["dim"] = g.dim();
    out["field"] = field_to_json(g.field());
    if (!g.label().empty())
        out["label"] = g.label();
    out["bracket1"] = bracket_to_json(g, Bracket::First);
    out["bracket2"] = bracket_to_json(g, Bracket::Second);
    return out;
}

ScalarCocycle cocycle_from_json(const Field& f, std::size_t n, const json& j)
{
    std::size_t m = pair_count(n);
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != m ||
        j[1].size() != m)
        fail("cocycle", "expected [under, tilde] with " + std::to_string(m) + " coefficients each");
    Vector coords = zero_vector(f, 2 * m);
    for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t t = 0; t < m; ++t)
            coords[b * m + t] =
                scalar_from_json(f, j[b][t], "cocycle[" + std::to_string(b) + "][" + std::to_string(t) + "]");
    return ScalarCocycle::from_coordinates(f, n, coords);
}

json cocycle_to_json(const ScalarCocycle& omega)
{
    Vector c = omega.coordinates();
    std::size_t m = c.size() / 2;
    json under = json::array(), tilde = json::array();
    for (std::size_t t = 0; t < m; ++t) {
        under.push_back(c[t].to_string());
        tilde.push_back(c[m + t].to_string());
    }
    return json::array({under, tilde});
}

ExtensionSpec extension_from_json(const json& j, bool allow_char_two)
{
    if (!j.is_object() || !j.contains("base") || !j.contains("cocycle") || !j["cocycle"].is_array())
        fail("extension", "expected {\"base\": algebra, \"cocycle\": [component, ...]}");
    ExtensionSpec spec{algebra_from_json(j["base"], allow_char_two), {}};
    for (const auto& c : j["cocycle"])
        spec.cocycle.components.push_back(cocycle_from_json(spec.base.field(), spec.base.dim(), c));
    return spec;
}

json extension_to_json(const ExtensionSpec& spec)
{
    json comps = json::array();
    for (const auto& c : spec.cocycle.components)
        comps.push_back(cocycle_to_json(c));
    return {{"base", algebra_to_json(spec.base)}, {"cocycle", comps}};
}

json matrix_to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).to_string());
        rows.push_back(row);
    }
    return rows;
}

json subspace_to_json(const Subspace& s)
{
    return matrix_to_json(s.basis());
}

json entry_to_json(const ClassificationEntry& e)
{
    json out;
    out["label"] = e.label;
    out["dim"] = e.algebra.dim();
    out["centre_dim"] = center(e.algebra).dim();
    out["relations"] = relations_string(e.algebra);
    out["algebra"] = algebra_to_json(e.algebra);
    if (!e.family.empty()) {
        out["family"] = e.family;
        json params = json::object();
        for (const auto& [name, value] : e.params)
            params[name] = value.to_string();
        out["params"] = params;
    }
    json prov;
    switch (e.provenance.kind) {
    case ProvenanceKind::Table:
        prov["kind"] = "table";
        break;
    case ProvenanceKind::CentralComponent:
        prov["kind"] = "central_component";
        prov["parent"] = e.provenance.parent;
        break;
    case ProvenanceKind::OrbitExtension:
        prov["kind"] = "orbit_extension";
        prov["base"] = e.provenance.parent;
        break;
    }
    if (e.provenance.orbit) {
        const auto& o = *e.provenance.orbit;
        json cocycle = json::array();
        for (const auto& c : o.representative_cocycle.components)
            cocycle.push_back(cocycle_to_json(c));
        prov["orbit"] = {{"s", o.s},
                         {"subspace", subspace_to_json(o.subspace)},
                         {"orbit_size", o.orbit_size},
                         {"cocycle", cocycle}};
    }
    out["provenance"] = prov;
    if (e.skew_partner)
        out["skew_partner"] = *e.skew_partner;
    if (e.match_witness)
        out["match_witness"] = matrix_to_json(*e.match_witness);
    if (!e.also_matches.empty())
        out["also_matches"] = e.also_matches;
    return out;
}

json entries_to_json(const std::vector<ClassificationEntry>& entries)
{
    json out = json::array();
    for (const auto& e : entries)
        out.push_back(entry_to_json(e));
    return out;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw InputError(path + ": cannot write file");
    out << text;
}

} // namespace cla::io
