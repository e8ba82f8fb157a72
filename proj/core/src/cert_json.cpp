#include "sl2a/cert_json.hpp"

#include "sl2a/text.hpp"

#include <json.hpp>

namespace sl2a {

namespace {

using nlohmann::json;

json matrix_json(const Mat2& m) {
    return json::array({json::array({format_elem(m.a11), format_elem(m.a12)}),
                        json::array({format_elem(m.a21), format_elem(m.a22)})});
}

Mat2 matrix_from(const json& j, const Rs& rs) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw SchemaError("matrix must be a 2x2 array of strings");
    auto e = [&](const json& v) {
        if (!v.is_string()) throw SchemaError("matrix entry must be a string");
        return parse_elem(v.get<std::string>(), rs);
    };
    return Mat2{e(j[0][0]), e(j[0][1]), e(j[1][0]), e(j[1][1])};
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw SchemaError(std::string("missing field \"") + name + "\"");
    return *it;
}

std::string str_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_string()) throw SchemaError(std::string("field \"") + name + "\" must be a string");
    return v.get<std::string>();
}

} // namespace

std::string emit_certificate(const WitnessCertificate& cert) {
    json j;
    j["schema"] = "sl2-witness-certificate/1";
    j["kind"] = witness_kind_name(cert.kind);
    j["rings"] = {{"base", format_ring_spec(*cert.base_ring)},
                  {"ambient", format_ring_spec(*cert.ambient_ring)},
                  {"localized", format_ring_spec(*cert.localized_ring)}};
    j["pi"] = format_elem(cert.pi);
    j["assumption_a"] = cert.assumption_a;
    json ing = json::object();
    if (cert.f) ing["f"] = format_elem(*cert.f);
    if (cert.f0) ing["f0"] = format_elem(*cert.f0);
    if (cert.g) ing["g"] = format_elem(*cert.g);
    if (cert.p) ing["p"] = format_elem(*cert.p);
    if (cert.x) ing["x"] = format_elem(*cert.x);
    if (cert.y) ing["y"] = format_elem(*cert.y);
    if (cert.b_prime) ing["b_prime"] = matrix_json(*cert.b_prime);
    j["ingredients"] = ing;
    j["matrices"] = {{"a", matrix_json(cert.a)},
                     {"b", matrix_json(cert.b)},
                     {"h", matrix_json(cert.h)}};
    json checks = json::array();
    for (const auto& c : cert.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    j["search_bound"] = {{"depth", cert.search.depth},
                         {"coeff_height_cap", cert.search.coeff_height_cap},
                         {"degree_cap", cert.search.degree_cap},
                         {"words_enumerated", cert.search.words_enumerated.str()},
                         {"found", cert.search.found},
                         {"menu_shape", cert.search.menu_shape}};
    j["claim_tier"] = claim_tier_name(cert.tier);
    return j.dump(2) + "\n";
}

WitnessCertificate load_certificate(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("bad JSON: ") + e.what());
    }
    WitnessCertificate cert;
    if (str_field(j, "schema") != "sl2-witness-certificate/1")
        throw SchemaError("unknown schema");
    std::string kind = str_field(j, "kind");
    if (kind == "mainstep")
        cert.kind = WitnessKind::Mainstep;
    else if (kind == "laurent")
        cert.kind = WitnessKind::Laurent;
    else if (kind == "more-examples")
        cert.kind = WitnessKind::MoreExamples;
    else
        throw SchemaError("unknown kind \"" + kind + "\"");
    const json& rings = field(j, "rings");
    try {
        cert.base_ring = parse_ring_spec(str_field(rings, "base"));
        cert.ambient_ring = parse_ring_spec(str_field(rings, "ambient"));
        cert.localized_ring = parse_ring_spec(str_field(rings, "localized"));
        cert.pi = parse_elem(str_field(j, "pi"), cert.ambient_ring);
        cert.assumption_a = str_field(j, "assumption_a");
        const json& ing = field(j, "ingredients");
        auto opt = [&](const char* name) -> std::optional<RingElem> {
            auto it = ing.find(name);
            if (it == ing.end()) return std::nullopt;
            if (!it->is_string()) throw SchemaError("ingredient must be a string");
            return parse_elem(it->get<std::string>(), cert.ambient_ring);
        };
        cert.f = opt("f");
        cert.f0 = opt("f0");
        cert.g = opt("g");
        cert.p = opt("p");
        if (cert.kind == WitnessKind::Laurent) {
            auto x = ing.find("x"), y = ing.find("y");
            if (x == ing.end() || y == ing.end())
                throw SchemaError("laurent certificate needs x and y");
            cert.x = parse_elem(x->get<std::string>(), cert.base_ring);
            cert.y = parse_elem(y->get<std::string>(), cert.base_ring);
        }
        if (auto it = ing.find("b_prime"); it != ing.end())
            cert.b_prime = matrix_from(*it, cert.ambient_ring);
        const json& mats = field(j, "matrices");
        cert.a = matrix_from(field(mats, "a"), cert.ambient_ring);
        cert.b = matrix_from(field(mats, "b"), cert.ambient_ring);
        cert.h = matrix_from(field(mats, "h"), cert.ambient_ring);
        const json& checks = field(j, "checks");
        if (!checks.is_array()) throw SchemaError("checks must be an array");
        for (const auto& c : checks) {
            CheckResult r;
            r.name = str_field(c, "name");
            const json& pass = field(c, "pass");
            if (!pass.is_boolean()) throw SchemaError("check pass must be a boolean");
            r.pass = pass.get<bool>();
            r.detail = str_field(c, "detail");
            cert.checks.push_back(std::move(r));
        }
        const json& sb = field(j, "search_bound");
        cert.search.depth = field(sb, "depth").get<int>();
        cert.search.coeff_height_cap = field(sb, "coeff_height_cap").get<long long>();
        cert.search.degree_cap = field(sb, "degree_cap").get<int>();
        cert.search.words_enumerated = Int(str_field(sb, "words_enumerated"));
        cert.search.found = field(sb, "found").get<bool>();
        cert.search.menu_shape = str_field(sb, "menu_shape");
        std::string tier = str_field(j, "claim_tier");
        if (tier == "TheoremBacked")
            cert.tier = ClaimTier::TheoremBacked;
        else if (tier == "SearchVerifiedAtBound")
            cert.tier = ClaimTier::SearchVerifiedAtBound;
        else
            throw SchemaError("unknown claim tier");
    } catch (const json::exception& e) {
        throw SchemaError(std::string("bad field type: ") + e.what());
    } catch (const SyntaxError& e) {
        throw SchemaError(std::string("bad expression: ") + e.what());
    }
    return cert;
}

std::string amalgam_word_json(const AmalgamWord& w) {
    json j;
    json fs = json::array();
    for (const auto& [side, m] : w.factors)
        fs.push_back({{"side", side == Side::A ? "A" : "B"}, {"matrix", matrix_json(m)}});
    j["factors"] = fs;
    j["trailing"] = matrix_json(w.trailing);
    return j.dump(2) + "\n";
}

std::string search_stats_json(const SearchStats& s) {
    json j;
    j["depth"] = s.depth;
    j["words_enumerated"] = s.words_enumerated.str();
    j["dedup_hits"] = s.dedup_hits.str();
    j["menu_size"] = s.menu_size;
    j["menu_shape"] = s.menu_shape;
    j["verdict"] = s.verdict;
    return j.dump(2) + "\n";
}

} // namespace sl2a
