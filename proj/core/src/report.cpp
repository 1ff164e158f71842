#include <circforce/report.hpp>

#include <nlohmann/json.hpp>

#include <iomanip>
#include <sstream>

namespace circforce {

namespace {

using Json = nlohmann::ordered_json;

Json interval_json(const Interval& z) { return Json{{"lower", z.lower}, {"upper", z.upper}}; }

Json prediction_json(const Prediction& p)
{
    Json params = Json::object();
    for (const auto& [key, value] : p.parameters)
        params[key] = value;
    Json out{
        {"family", to_string(p.family)},
        {"citation", p.citation},
        {"parameters", params},
        {"multiplier", p.multiplier},
        {"copies", p.copies},
        {"matched", p.matched ? Json(p.matched->to_string()) : Json(nullptr)},
        {"z", interval_json(p.z)},
        {"m_status", to_string(p.m_status)},
    };
    if (p.m_status == MStatus::LowerBound)
        out["m_lower"] = p.m_lower;
    return out;
}

Json report_json(const VerificationReport& r, bool include_timing)
{
    Json out;
    out["spec"] = r.spec.to_string();
    out["order"] = r.spec.order();
    out["complete"] = r.complete;
    if (!r.complete)
        out["incomplete_reason"] = r.incomplete_reason;

    Json predictions = Json::array();
    for (const auto& check : r.predictions) {
        Json p = prediction_json(check.prediction);
        p["method"] = check.method;
        p["verdict"] = to_string(check.verdict);
        predictions.push_back(std::move(p));
    }
    out["predictions"] = std::move(predictions);
    out["prediction_intersection"] =
        r.prediction_intersection ? interval_json(*r.prediction_intersection) : Json(nullptr);

    if (r.lower_bounds)
        out["lower_bounds"] = Json{
            {"value", r.lower_bounds->value},
            {"regular", r.lower_bounds->regular ? Json(*r.lower_bounds->regular) : Json(nullptr)},
            {"girth", r.lower_bounds->girth ? Json(*r.lower_bounds->girth) : Json(nullptr)},
        };
    else
        out["lower_bounds"] = nullptr;

    if (r.z_search)
        out["search"] = Json{{"z", *r.z_search}, {"witness", r.witness->vertices()}, {"replayed", r.witness_replayed}};
    else
        out["search"] = nullptr;

    Json matrices = Json::array();
    for (const auto& m : r.matrices)
        matrices.push_back(Json{
            {"name", m.name},
            {"family", to_string(m.family)},
            {"order", m.matrix.rows()},
            {"rank", m.rank},
            {"nullity", m.nullity},
            {"symmetric", m.symmetric},
            {"pattern_matches", m.pattern_matches},
            {"equality_claimed", m.equality_claimed},
            {"verdict", to_string(m.verdict)},
        });
    out["matrices"] = std::move(matrices);

    Json constructions = Json::array();
    for (const auto& c : r.constructions)
        constructions.push_back(Json{
            {"name", c.name},
            {"size", c.set.size()},
            {"set", c.set.vertices()},
            {"forcing", c.forcing},
            {"verdict", to_string(c.verdict)},
        });
    out["constructions"] = std::move(constructions);
    out["contradicted"] = r.contradicted();
    if (include_timing)
        out["timing"] = Json{{"search_seconds", r.search_seconds}, {"total_seconds", r.total_seconds}};
    return out;
}

std::string parameters_text(const Prediction& p)
{
    std::string out;
    for (const auto& [key, value] : p.parameters) {
        if (!out.empty())
            out += ' ';
        out += key + "=" + std::to_string(value);
    }
    if (p.multiplier != 1)
        out += (out.empty() ? "" : " ") + std::string("k=") + std::to_string(p.multiplier);
    if (p.copies != 1)
        out += (out.empty() ? "" : " ") + std::string("copies=") + std::to_string(p.copies);
    return out;
}

void prediction_rows(std::ostream& out, const std::vector<Prediction>& predictions,
                     const std::vector<PredictionCheck>* checks)
{
    out << std::left << std::setw(24) << "family" << std::setw(10) << "Z" << std::setw(14) << "M"
        << std::setw(28) << "parameters";
    if (checks)
        out << "verdict";
    out << '\n';
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const auto& p = predictions[i];
        out << std::setw(24) << to_string(p.family) << std::setw(10) << to_string(p.z) << std::setw(14)
            << to_string(p.m_status) << std::setw(28) << parameters_text(p);
        if (checks)
            out << to_string((*checks)[i].verdict);
        out << '\n';
    }
}

} // namespace

std::string to_string(const Interval& z)
{
    if (z.exact())
        return std::to_string(z.lower);
    return "[" + std::to_string(z.lower) + ", " + std::to_string(z.upper) + "]";
}

std::string predictions_to_json(const CirculantSpec& spec, const std::vector<Prediction>& predictions)
{
    Json list = Json::array();
    for (const auto& p : predictions)
        list.push_back(prediction_json(p));
    const auto meet = intersect(predictions);
    Json out{
        {"spec", spec.to_string()},
        {"order", spec.order()},
        {"predictions", std::move(list)},
        {"intersection", meet ? interval_json(*meet) : Json(nullptr)},
    };
    return out.dump(2) + "\n";
}

std::string predictions_to_table(const CirculantSpec& spec, const std::vector<Prediction>& predictions)
{
    std::ostringstream out;
    out << spec.to_string() << '\n';
    prediction_rows(out, predictions, nullptr);
    const auto meet = intersect(predictions);
    out << "combined: " << (meet ? to_string(*meet) : std::string("inconsistent")) << '\n';
    return out.str();
}

std::string report_to_json(const VerificationReport& report, bool include_timing)
{
    return report_json(report, include_timing).dump(2) + "\n";
}

std::string report_to_table(const VerificationReport& report)
{
    std::ostringstream out;
    out << report.spec.to_string() << (report.complete ? "" : "  (incomplete: " + report.incomplete_reason + ")")
        << '\n';
    std::vector<Prediction> predictions;
    for (const auto& check : report.predictions)
        predictions.push_back(check.prediction);
    prediction_rows(out, predictions, &report.predictions);
    if (report.lower_bounds)
        out << "lower bound: " << report.lower_bounds->value << '\n';
    if (report.z_search) {
        out << "search: Z = " << *report.z_search << ", witness {";
        const auto vertices = report.witness->vertices();
        for (std::size_t i = 0; i < vertices.size(); ++i)
            out << (i ? ", " : "") << vertices[i];
        out << "}" << (report.witness_replayed ? " (replayed)" : " (REPLAY FAILED)") << '\n';
    }
    for (const auto& m : report.matrices)
        out << "matrix " << m.name << ": rank " << m.rank << ", nullity " << m.nullity
            << (m.pattern_matches ? "" : ", PATTERN MISMATCH") << "  " << to_string(m.verdict) << '\n';
    for (const auto& c : report.constructions)
        out << "construction " << c.name << ": size " << c.set.size() << (c.forcing ? ", forcing" : ", NOT FORCING")
            << "  " << to_string(c.verdict) << '\n';
    out << (report.contradicted() ? "CONTRADICTED" : "consistent") << '\n';
    return out.str();
}

std::string sweep_to_json(const SweepSummary& summary, bool include_timing)
{
    Json specs = Json::array();
    Json detail = Json::array();
    for (const auto& r : summary.reports) {
        specs.push_back(Json{
            {"spec", r.spec.to_string()},
            {"z", r.z_search ? Json(*r.z_search) : Json(nullptr)},
            {"predicted", r.prediction_intersection ? interval_json(*r.prediction_intersection) : Json(nullptr)},
            {"complete", r.complete},
            {"contradicted", r.contradicted()},
        });
        if (r.contradicted() || !r.complete)
            detail.push_back(report_json(r, include_timing));
    }
    Json out{
        {"specs", summary.reports.size()},
        {"confirmed", summary.confirmed},
        {"bound_consistent", summary.bound_consistent},
        {"incomplete", summary.incomplete},
        {"contradictions", summary.contradictions},
        {"ok", summary.ok()},
        {"results", std::move(specs)},
        {"problems", std::move(detail)},
    };
    return out.dump(2) + "\n";
}

std::string sweep_to_table(const SweepSummary& summary)
{
    std::ostringstream out;
    out << std::left << std::setw(24) << "spec" << std::setw(6) << "Z" << std::setw(12) << "predicted"
        << "status\n";
    for (const auto& r : summary.reports) {
        out << std::setw(24) << r.spec.to_string() << std::setw(6)
            << (r.z_search ? std::to_string(*r.z_search) : std::string("-")) << std::setw(12)
            << (r.prediction_intersection ? to_string(*r.prediction_intersection) : std::string("none"))
            << (r.contradicted() ? "CONTRADICTED" : r.complete ? "ok" : "incomplete") << '\n';
    }
    out << summary.reports.size() << " circulants, " << summary.confirmed << " confirmed, " << summary.bound_consistent
        << " bound-consistent, " << summary.incomplete << " incomplete, " << summary.contradictions
        << " contradicted\n";
    return out.str();
}

} // namespace circforce
