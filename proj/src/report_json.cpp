#include "schlicht/report_json.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace schlicht {

namespace {

// Non-finite values have no JSON spelling; they are reported as null.
Json num(double x)
{
    if (!std::isfinite(x))
        return nullptr;
    return x;
}

Json strings(const std::vector<std::string> &v)
{
    Json a = Json::array();
    for (const auto &s : v)
        a.push_back(s);
    return a;
}

} // namespace

Json to_json(cplx z) { return Json{{"re", num(z.real())}, {"im", num(z.imag())}}; }

Json to_json(const SamplingPlan &plan)
{
    return Json{{"radii_count", plan.radii.size()},
                {"r_max", plan.r_max()},
                {"angles", plan.angles_per_circle},
                {"tolerance", plan.tolerance}};
}

Json to_json(const MembershipReport &r)
{
    Json circles = Json::array();
    for (const CircleSup &c : r.per_circle_sup)
        circles.push_back(Json{{"r", c.r}, {"sup", num(c.sup)}, {"arg_max", to_json(c.arg_max)}});
    Json skipped = Json::array();
    for (cplx z : r.skipped_points)
        skipped.push_back(to_json(z));
    return Json{{"level", r.level},
                {"sup_estimate", num(r.sup_estimate)},
                {"arg_max", to_json(r.arg_max)},
                {"verdict", to_string(r.verdict)},
                {"margin", num(r.margin)},
                {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
                {"vanishing_order", r.vanishing_order},
                {"tail_estimate", num(r.tail_estimate)},
                {"per_circle_sup", circles},
                {"skipped_points", skipped},
                {"notes", strings(r.notes)}};
}

Json to_json(const ConvexityCertificate &c)
{
    return Json{{"gamma", c.gamma},
                {"status", to_string(c.status)},
                {"mu", c.mu},
                {"nu", c.nu},
                {"min_re", num(c.min_re)},
                {"re_p0", num(c.re_p0)},
                {"pairs_searched", c.pairs_searched},
                {"radii_count", c.radii_count},
                {"angles_per_circle", c.angles_per_circle},
                {"note", c.note}};
}

Json to_json(const SubordinationVerdict &v, std::size_t psi_terms)
{
    Json series = nullptr;
    if (v.schwarz_series) {
        series = Json::array();
        for (std::size_t n = 0; n < psi_terms && n <= v.schwarz_series->order(); ++n)
            series.push_back(to_json((*v.schwarz_series)[n]));
    }
    return Json{{"status", to_string(v.status)},
                {"witness", to_string(v.witness)},
                {"witness_point", to_json(v.witness_point)},
                {"witness_value", num(v.witness_value)},
                {"schwarz_series", series},
                {"max_modulus", num(v.max_modulus)},
                {"max_modulus_point", to_json(v.max_modulus_point)},
                {"max_residual", num(v.max_residual)},
                {"series_mismatch", num(v.series_mismatch)},
                {"tracking_failed", v.tracking_failed},
                {"rays", v.rays},
                {"steps_per_ray", v.steps_per_ray},
                {"diagnostics", strings(v.diagnostics)}};
}

Json to_json(const JuliaReport &r)
{
    Json est = Json::array();
    for (const JuliaEstimate &e : r.estimates)
        est.push_back(Json{{"r", e.r}, {"quotient", num(e.quotient)}});
    return Json{{"classification", to_string(r.classification)},
                {"limit", num(r.limit)},
                {"estimates", est}};
}

Json to_json(const HarmonicCertificate &c)
{
    return Json{{"theorem", to_string(c.theorem)},
                {"status", to_string(c.status)},
                {"bound_used", num(c.bound_used)},
                {"sup_dilatation", num(c.sup_dilatation)},
                {"grid_min_margin", num(c.grid_min_margin)},
                {"chain_min_margin", num(c.chain_min_margin)},
                {"min_jacobian", num(c.min_jacobian)},
                {"clamp_events", c.clamp_events},
                {"notes", strings(c.notes)}};
}

Json make_envelope(std::string_view command, Json result, const std::vector<std::string> &warnings,
                   long long wall_time_ms)
{
    return Json{{"schema", schema_id},
                {"tool_version", tool_version},
                {"command", command},
                {"wall_time_ms", wall_time_ms},
                {"result", std::move(result)},
                {"warnings", strings(warnings)}};
}

std::string default_schema_path() { return SCHLICHT_SCHEMA_PATH; }

Json load_schema(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open schema file " + path);
    return Json::parse(in);
}

namespace {

class Validator {
public:
    explicit Validator(const Json &root) : root_(root) {}

    void check(const Json &doc, const Json &schema, const std::string &where)
    {
        if (schema.is_boolean()) {
            if (!schema.get<bool>())
                fail(where, "schema false");
            return;
        }
        if (schema.contains("$ref")) {
            check(doc, resolve(schema["$ref"].get<std::string>()), where);
            return;
        }
        if (schema.contains("type") && !type_matches(doc, schema["type"]))
            fail(where, "expected type " + schema["type"].dump());
        if (schema.contains("const") && doc != schema["const"])
            fail(where, "expected " + schema["const"].dump());
        if (schema.contains("enum")) {
            bool found = false;
            for (const auto &e : schema["enum"])
                found = found || doc == e;
            if (!found)
                fail(where, "value " + doc.dump() + " not in enum");
        }
        if (schema.contains("minimum") && doc.is_number() &&
            doc.get<double>() < schema["minimum"].get<double>())
            fail(where, "below minimum");
        if (doc.is_object()) {
            if (schema.contains("required"))
                for (const auto &k : schema["required"])
                    if (!doc.contains(k.get<std::string>()))
                        fail(where, "missing key " + k.get<std::string>());
            const Json *props = schema.contains("properties") ? &schema["properties"] : nullptr;
            for (auto it = doc.begin(); it != doc.end(); ++it) {
                if (props && props->contains(it.key()))
                    check(it.value(), (*props)[it.key()], where + "/" + it.key());
                else if (schema.contains("additionalProperties") &&
                         schema["additionalProperties"].is_boolean() &&
                         !schema["additionalProperties"].get<bool>())
                    fail(where, "unexpected key " + it.key());
            }
        }
        if (doc.is_array()) {
            if (schema.contains("minItems") && doc.size() < schema["minItems"].get<std::size_t>())
                fail(where, "too few items");
            if (schema.contains("items"))
                for (std::size_t i = 0; i < doc.size(); ++i)
                    check(doc[i], schema["items"], where + "/" + std::to_string(i));
        }
        if (schema.contains("allOf"))
            for (const auto &sub : schema["allOf"])
                check(doc, sub, where);
        if (schema.contains("if")) {
            Validator probe(root_);
            probe.check(doc, schema["if"], where);
            if (probe.errors.empty() && schema.contains("then"))
                check(doc, schema["then"], where);
        }
    }

    std::vector<std::string> errors;

private:
    void fail(const std::string &where, const std::string &what)
    {
        errors.push_back((where.empty() ? "/" : where) + ": " + what);
    }

    const Json &resolve(const std::string &ref) const
    {
        const std::string prefix = "#/$defs/";
        if (ref.rfind(prefix, 0) != 0)
            throw std::runtime_error("unsupported $ref " + ref);
        return root_.at("$defs").at(ref.substr(prefix.size()));
    }

    static bool one_type(const Json &doc, const std::string &t)
    {
        if (t == "object") return doc.is_object();
        if (t == "array") return doc.is_array();
        if (t == "string") return doc.is_string();
        if (t == "number") return doc.is_number();
        if (t == "integer")
            return doc.is_number_integer() ||
                   (doc.is_number_float() && std::floor(doc.get<double>()) == doc.get<double>());
        if (t == "boolean") return doc.is_boolean();
        if (t == "null") return doc.is_null();
        throw std::runtime_error("unsupported type keyword " + t);
    }

    static bool type_matches(const Json &doc, const Json &type)
    {
        if (type.is_string())
            return one_type(doc, type.get<std::string>());
        for (const auto &t : type)
            if (one_type(doc, t.get<std::string>()))
                return true;
        return false;
    }

    const Json &root_;
};

} // namespace

std::vector<std::string> validate_json(const Json &doc, const Json &schema)
{
    Validator v(schema);
    v.check(doc, schema, "");
    return v.errors;
}

} // namespace schlicht
