#pragma once

// Job parsing and dispatch: a JobSpec names one of the supported operations
// and carries its payload; run_job produces a machine report, a human
// rendering, and the process exit code.

#include <algorithm>
#include <string>
#include <vector>

#include "tvar/examples.hpp"

namespace tvar {

struct JobSpec {
    std::string kind;
    Json payload;
};

struct Report {
    Json data;
    std::string text;
    int exit_code = 0;
};

inline int exit_code_for(ErrorFamily f) {
    switch (f) {
        case ErrorFamily::schema: return 2;
        case ErrorFamily::precondition: return 3;
        case ErrorFamily::undecided: return 4;
        default: return 1;
    }
}

inline JobSpec parse_job(const Json& j) {
    const Json& kind = require_member(j, "kind", "/");
    if (!kind.is_string()) throw schema_error("expected a string", "/kind");
    std::string k = kind.get<std::string>();
    static const std::vector<std::string> kinds = {"present",    "evaluate", "fixed-points",
                                                   "invariants", "classify", "example"};
    if (std::find(kinds.begin(), kinds.end(), k) == kinds.end())
        throw schema_error("unknown kind '" + k + "'", "/kind");
    const Json& payload = require_member(j, "payload", "/");
    if (!payload.is_object()) throw schema_error("expected an object", "/payload");
    return {std::move(k), payload};
}

namespace detail {

inline QVec parse_qvec(const Json& j, const std::string& where) {
    if (!j.is_array()) throw schema_error("expected an array", where);
    QVec out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_rat(j[i], where + "/" + std::to_string(i)));
    return out;
}

inline DivisorLabel parse_label(const Json& j, const std::string& where) {
    if (!j.is_string()) throw schema_error("expected a label string", where);
    std::string s = j.get<std::string>();
    if (s.empty()) throw schema_error("empty label", where);
    if ((s[0] == 'H' || s[0] == 'E') && s.size() > 1 &&
        s.find_first_not_of("0123456789", 1) == std::string::npos) {
        int idx = std::stoi(s.substr(1));
        return s[0] == 'H' ? axis_label(idx) : exceptional_label(idx);
    }
    return curve_label(s);
}

// presentation given directly as labeled coefficient polyhedra
inline AHPresentation parse_presentation(const Json& j, const std::string& where) {
    AHPresentation pres;
    int rank = parse_small_int(require_member(j, "lattice_rank", where), where + "/lattice_rank");
    if (rank < 1) throw schema_error("lattice rank must be positive", where + "/lattice_rank");
    pres.lattice_rank = static_cast<size_t>(rank);
    pres.tail = Cone{pres.lattice_rank, {}};
    const Json& terms = require_member(j, "terms", where);
    if (!terms.is_array() || terms.empty())
        throw schema_error("expected a nonempty array", where + "/terms");
    for (size_t i = 0; i < terms.size(); ++i) {
        std::string here = where + "/terms/" + std::to_string(i);
        PresentationTerm t;
        t.label = parse_label(require_member(terms[i], "label", here), here + "/label");
        t.ray = parse_ivec(require_member(terms[i], "ray", here), here + "/ray");
        if (t.ray.size() != 2) throw schema_error("rays live in the plane", here + "/ray");
        t.multiplicity = 1;
        if (terms[i].contains("multiplicity")) {
            int m = parse_small_int(terms[i]["multiplicity"], here + "/multiplicity");
            if (m < 1) throw schema_error("multiplicity must be positive", here + "/multiplicity");
            t.multiplicity = static_cast<size_t>(m);
        }
        const Json& verts = require_member(terms[i], "vertices", here);
        if (!verts.is_array()) throw schema_error("expected an array", here + "/vertices");
        std::vector<QVec> points;
        for (size_t v = 0; v < verts.size(); ++v) {
            QVec p = parse_qvec(verts[v], here + "/vertices/" + std::to_string(v));
            if (p.size() != pres.lattice_rank)
                throw schema_error("vertex dimension mismatch",
                                   here + "/vertices/" + std::to_string(v));
            points.push_back(std::move(p));
        }
        std::vector<IVec> rays;
        if (terms[i].contains("rays")) {
            const Json& rj = terms[i]["rays"];
            if (!rj.is_array()) throw schema_error("expected an array", here + "/rays");
            for (size_t r = 0; r < rj.size(); ++r) {
                IVec rv = parse_ivec(rj[r], here + "/rays/" + std::to_string(r));
                if (rv.size() != pres.lattice_rank)
                    throw schema_error("ray dimension mismatch", here + "/rays/" + std::to_string(r));
                rays.push_back(std::move(rv));
            }
        }
        t.coefficient = points.empty() && rays.empty()
                            ? Polyhedron::empty(pres.lattice_rank)
                            : hull(pres.lattice_rank, std::move(points), std::move(rays));
        pres.terms.push_back(std::move(t));
    }
    return pres;
}

inline ExactSequenceData sequence_from_payload(const Json& p) {
    IntMatrix f = parse_matrix(require_member(p, "weights", "/payload"), "/payload/weights");
    bool has_p = p.contains("p"), has_s = p.contains("s");
    if (has_p != has_s)
        throw schema_error("members 'p' and 's' must be given together", "/payload");
    if (has_p) {
        ExactSequenceData data;
        data.f = std::move(f);
        data.p = parse_matrix(p["p"], "/payload/p");
        data.s = parse_matrix(p["s"], "/payload/s");
        return data;
    }
    return exact_sequence(f);
}

inline Json split_json(const std::optional<std::pair<std::vector<size_t>, std::vector<size_t>>>& s) {
    if (!s) return nullptr;
    Json first = Json::array(), second = Json::array();
    for (size_t i : s->first) first.push_back(i);
    for (size_t i : s->second) second.push_back(i);
    return Json{{"first", std::move(first)}, {"second", std::move(second)}};
}

inline Report run_present(const Json& p) {
    ExactSequenceData data = sequence_from_payload(p);
    AHPresentation pres = ah_presentation(data);
    Json out{{"weights", matrix_json(pres.data.f)},
             {"quotient_map", matrix_json(pres.data.p)},
             {"section", matrix_json(pres.data.s)},
             {"presentation", presentation_json(pres)}};
    return {std::move(out), presentation_text(pres), 0};
}

inline Report run_evaluate(const Json& p) {
    ExactSequenceData data = sequence_from_payload(p);
    AHPresentation pres = ah_presentation(data);
    IVec u = parse_ivec(require_member(p, "u", "/payload"), "/payload/u");
    QDivisor d = evaluate(pres, u);
    Json out{{"u", ivec_json(u)}, {"divisor", divisor_json(d)}};
    return {std::move(out), "D(" + to_string(u) + ") = " + divisor_text(d), 0};
}

inline Report run_fixed_points(const Json& p) {
    ExactSequenceData data = sequence_from_payload(p);
    AHPresentation pres = ah_presentation(data);
    int height = parse_small_int(require_member(p, "height", "/payload"), "/payload/height");
    std::vector<FixedLocusReport> survey = fixed_locus_survey(pres, height);
    Json reports = Json::array();
    std::string text = "fixed components by direction (height <= " + std::to_string(height) + "):";
    for (const FixedLocusReport& r : survey) {
        reports.push_back(fixed_report_json(r));
        text += "\n  " + to_string(r.direction.l) + ":";
        if (r.fixed_labels.empty()) text += " none";
        for (const DivisorLabel& l : r.fixed_labels) text += " " + to_string(l);
    }
    Json out{{"height", height}, {"reports", std::move(reports)}};
    return {std::move(out), std::move(text), 0};
}

inline Report run_invariants(const Json& p) {
    IntMatrix f = parse_matrix(require_member(p, "weights", "/payload"), "/payload/weights");
    int bound = parse_small_int(require_member(p, "bound", "/payload"), "/payload/bound");
    InvariantGenerators gens = invariant_ring_generators(f, bound);
    Json out{{"bound", bound}, {"invariants", invariants_json(gens)}};
    std::string text = "invariant monomial exponents up to total degree " + std::to_string(bound) + ":";
    if (gens.generators.empty()) text += " none";
    for (const IVec& g : gens.generators) text += " " + to_string(g);
    if (gens.bound_warning) text += "\nwarning: generation may be incomplete at this bound";
    return {std::move(out), std::move(text), 0};
}

inline CurveSpec parse_curve(const Json& j, const std::string& where) {
    Poly f = parse_poly2(require_member(j, "f", where), where + "/f");
    if (!j.contains("parametrization")) return curve_spec(f);
    const Json& pj = j["parametrization"];
    Poly p = parse_poly1(require_member(pj, "p", where + "/parametrization"),
                         where + "/parametrization/p");
    Poly q = parse_poly1(require_member(pj, "q", where + "/parametrization"),
                         where + "/parametrization/q");
    return curve_spec(f, p, q);
}

inline Report run_classify(const Json& p) {
    Json out = Json::object();
    std::string text;
    bool undecided = false;

    std::optional<AHPresentation> pres;
    if (p.contains("weights")) {
        IntMatrix f = parse_matrix(p["weights"], "/payload/weights");
        pres = ah_presentation(f);
        out["product_split"] = split_json(product_split(f));
    } else if (p.contains("presentation")) {
        pres = parse_presentation(p["presentation"], "/payload/presentation");
    } else {
        throw schema_error("need member 'weights' or 'presentation'", "/payload");
    }
    Verdict v = linearization_verdict(*pres);
    out["verdict"] = verdict_json(v);
    if (v.outcome == Outcome::undecided) undecided = true;
    text = std::string("verdict: ") + outcome_text(v.outcome);
    for (const std::string& e : v.evidence) text += "\n  " + e;

    std::optional<MuAction> mu;
    if (p.contains("mu")) {
        const Json& mj = p["mu"];
        Int order = parse_int(require_member(mj, "order", "/payload/mu"), "/payload/mu/order");
        IVec w = parse_ivec(require_member(mj, "weights", "/payload/mu"), "/payload/mu/weights");
        if (w.size() != 2) throw schema_error("expected two weights", "/payload/mu/weights");
        mu = mu_action(order, w[0], w[1]);
    }

    std::vector<CurveSpec> curves;
    if (p.contains("curves")) {
        const Json& cj = p["curves"];
        if (!cj.is_array()) throw schema_error("expected an array", "/payload/curves");
        if (cj.size() > 2) throw schema_error("at most two curves", "/payload/curves");
        Json curve_reports = Json::array();
        static const std::vector<std::string> names = {"u", "v"};
        for (size_t i = 0; i < cj.size(); ++i) {
            CurveSpec c = parse_curve(cj[i], "/payload/curves/" + std::to_string(i));
            TriBool line = a1_check(c);
            if (line == TriBool::undecided) undecided = true;
            Json r{{"f", to_string(c.f, names)}, {"affine_line", tri_text(line)}};
            text += "\ncurve " + to_string(c.f, names) + ": affine line " + tri_text(line);
            if (mu) {
                MuInvariance inv = mu_invariance_check(c, *mu);
                r["mu_invariant"] = inv.invariant;
                r["contains_origin"] = inv.contains_origin;
                text += inv.invariant ? ", mu-invariant" : ", not mu-invariant";
            }
            curve_reports.push_back(std::move(r));
            curves.push_back(std::move(c));
        }
        out["curves"] = std::move(curve_reports);
        if (curves.size() == 2) {
            SncReport snc = snc_check(curves[0], curves[1]);
            if (snc.all_transverse == TriBool::undecided) undecided = true;
            out["snc"] = snc_json(snc);
            text += "\ncrossings: " + std::to_string(snc.points.size()) +
                    " rational point(s), all transverse: " + tri_text(snc.all_transverse);
        }
    }
    return {std::move(out), std::move(text), undecided ? 4 : 0};
}

inline Report run_example_job(const Json& p) {
    const Json& name = require_member(p, "name", "/payload");
    if (!name.is_string()) throw schema_error("expected a string", "/payload/name");
    ExampleReport r = run_example(name.get<std::string>());
    return {std::move(r.data), std::move(r.text), 0};
}

}  // namespace detail

inline Report run_job(const JobSpec& job) {
    if (job.kind == "present") return detail::run_present(job.payload);
    if (job.kind == "evaluate") return detail::run_evaluate(job.payload);
    if (job.kind == "fixed-points") return detail::run_fixed_points(job.payload);
    if (job.kind == "invariants") return detail::run_invariants(job.payload);
    if (job.kind == "classify") return detail::run_classify(job.payload);
    if (job.kind == "example") return detail::run_example_job(job.payload);
    throw schema_error("unknown kind '" + job.kind + "'", "/kind");
}

inline std::vector<JobSpec> builtin_examples() {
    std::vector<JobSpec> out;
    for (const std::string& name : builtin_example_names())
        out.push_back({"example", Json{{"name", name}}});
    return out;
}

}  // namespace tvar
