#include "ihull/json_io.hpp"

#include <algorithm>

#include "json.hpp"

#include "ihull/errors.hpp"

namespace ihull {

namespace {

using nlohmann::json;

Int int_from(const json& j, const char* what) {
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s.empty()) throw InputError(std::string(what) + ": empty number string");
        std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (k == s.size() ||
            !std::all_of(s.begin() + static_cast<long>(k), s.end(),
                         [](unsigned char c) { return c >= '0' && c <= '9'; }))
            throw InputError(std::string(what) + ": not a decimal integer: " + s);
        return Int(s);
    }
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    throw InputError(std::string(what) + ": expected a decimal string or integer");
}

std::vector<Int> int_vector(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw InputError(std::string(what) + ": expected a nonempty array");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(int_from(e, what));
    return out;
}

json point_json(const std::vector<Int>& p) {
    json a = json::array();
    for (const auto& v : p) a.push_back(dec(v));
    return a;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("instance JSON parse failure: ") + e.what());
    }
}

} // namespace

ParsedInstance parse_instance(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw InputError("instance JSON needs a \"type\" field");
    std::string type = j["type"].get<std::string>();
    ParsedInstance out;
    try {
        if (type == "system") {
            if (!j.contains("A") || !j["A"].is_array() || j["A"].empty())
                throw InputError("system instance needs a nonempty matrix A");
            std::vector<std::vector<Int>> rows;
            for (const auto& r : j["A"]) rows.push_back(int_vector(r, "A row"));
            std::vector<Int> b = int_vector(j.at("b"), "b");
            out.system = LinearSystem(IntMatrix::from_rows(rows), std::move(b));
        } else if (type == "knapsack") {
            std::vector<Int> a = int_vector(j.at("a"), "a");
            Int a0 = int_from(j.at("a0"), "a0");
            bool relaxed = j.value("relaxed", false);
            out.knapsack = relaxed
                               ? KnapsackInstance::relaxed_instance(std::move(a), a0)
                               : KnapsackInstance(std::move(a), a0);
        } else if (type == "congruence") {
            std::vector<Int> a = int_vector(j.at("a"), "a");
            Int a0 = int_from(j.at("a0"), "a0");
            Int delta = int_from(j.at("delta"), "delta");
            out.congruence = CongruenceInstance(std::move(a), a0, delta);
        } else {
            throw InputError("unknown instance type: " + type);
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("instance JSON field failure: ") + e.what());
    } catch (const DomainError& e) {
        throw InputError(std::string("instance data rejected: ") + e.what());
    }
    return out;
}

std::string instance_to_json(const LinearSystem& sys) {
    json rows = json::array();
    for (std::size_t i = 0; i < sys.rows(); ++i) rows.push_back(point_json(sys.A.row(i)));
    json b = json::array();
    for (const auto& v : sys.b) b.push_back(dec(v));
    json j{{"type", "system"}, {"A", rows}, {"b", b}};
    return j.dump() + "\n";
}

std::string instance_to_json(const KnapsackInstance& k) {
    json j{{"type", "knapsack"}, {"a", point_json(k.a)}, {"a0", dec(k.a0)}};
    if (k.relaxed) j["relaxed"] = true;
    return j.dump() + "\n";
}

std::string instance_to_json(const CongruenceInstance& c) {
    json j{{"type", "congruence"},
           {"a", point_json(c.a)},
           {"a0", dec(c.a0)},
           {"delta", dec(c.delta)}};
    return j.dump() + "\n";
}

std::string hull_to_json(const IntegerHull& h) {
    json verts = json::array();
    for (const auto& v : h.vertices) verts.push_back(point_json(v));
    json gens = json::array();
    for (const auto& g : h.recession_generators) gens.push_back(point_json(g));
    json j{{"dim", h.dim},
           {"vertex_count", h.vertices.size()},
           {"vertices", verts},
           {"recession_generators", gens}};
    return j.dump(2) + "\n";
}

std::string bound_report_to_json(const BoundReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        const char* kind = c.bound.kind == BoundKind::upper         ? "upper"
                           : c.bound.kind == BoundKind::lower       ? "lower"
                                                                    : "informational";
        json params = json::object();
        for (const auto& [k, v] : c.bound.parameters) params[k] = v;
        json jc{{"name", c.bound.name},
                {"kind", kind},
                {"value", c.bound.value.str(30)},
                {"applicable", c.bound.applicable},
                {"holds", c.holds},
                {"parameters", params}};
        if (c.bound.vacuous) jc["vacuous"] = true;
        if (c.bound.caller_constant)
            jc["caller_constant"] = dec(*c.bound.caller_constant);
        checks.push_back(std::move(jc));
    }
    json j{{"instance", r.instance},
           {"n", r.n},
           {"m", r.m},
           {"vertex_count", dec(r.vertex_count)},
           {"checks", checks},
           {"violations", r.violations()}};
    if (r.facets) {
        j["facets"] = *r.facets;
        j["facet_limit"] = dec(*r.facet_limit);
        j["facet_limit_ok"] = *r.facet_limit_ok;
    }
    return j.dump(2) + "\n";
}

} // namespace ihull
