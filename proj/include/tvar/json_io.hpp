#pragma once

// JSON serialization of the library types plus exact-number parsing with
// JSON-pointer error locations.  Integers become JSON numbers when they fit
// into 64 bits and decimal strings otherwise; rationals are always "p/q"
// strings so nothing is rounded.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "tvar/classify.hpp"
#include "tvar/divisor.hpp"
#include "tvar/fixed_points.hpp"

namespace tvar {

using Json = nlohmann::json;

inline Json int_json(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x >= lo && x <= hi) return Json(x.convert_to<std::int64_t>());
    return Json(to_string(x));
}

inline Json rat_json(const Rat& q) { return Json(to_string(q)); }

inline Json ivec_json(const IVec& v) {
    Json out = Json::array();
    for (const Int& x : v) out.push_back(int_json(x));
    return out;
}

inline Json qvec_json(const QVec& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(rat_json(x));
    return out;
}

inline Json matrix_json(const IntMatrix& m) {
    Json out = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(int_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

inline Json polyhedron_json(const Polyhedron& d) {
    if (d.is_empty()) return Json{{"empty", true}};
    Json out{{"vertices", Json::array()}, {"rays", Json::array()}};
    for (const QVec& v : d.vertices) out["vertices"].push_back(qvec_json(v));
    for (const IVec& r : d.rays) out["rays"].push_back(ivec_json(r));
    return out;
}

inline Json poly_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms) {
        Json exps = Json::array();
        for (int x : e) exps.push_back(x);
        terms.push_back(Json{{"exponents", std::move(exps)}, {"coefficient", rat_json(c)}});
    }
    return Json{{"variables", p.nvars}, {"terms", std::move(terms)}};
}

inline Json surface_json(const SurfaceInfo& s) {
    Json out{{"quotient_order", int_json(s.quotient_order)},
             {"boundary_rays", Json::array()},
             {"exceptional_rays", Json::array()},
             {"cone_orders", Json::array()}};
    for (const IVec& r : s.boundary_rays) out["boundary_rays"].push_back(ivec_json(r));
    for (const IVec& r : s.exceptional_rays) out["exceptional_rays"].push_back(ivec_json(r));
    for (const Int& d : s.smooth_flags) out["cone_orders"].push_back(int_json(d));
    return out;
}

inline Json presentation_json(const AHPresentation& pres) {
    Json terms = Json::array();
    for (const PresentationTerm& t : pres.terms)
        terms.push_back(Json{{"label", to_string(t.label)},
                             {"ray", ivec_json(t.ray)},
                             {"multiplicity", t.multiplicity},
                             {"coefficient", polyhedron_json(t.coefficient)}});
    Json tail = Json::array();
    for (const IVec& g : pres.tail.generators) tail.push_back(ivec_json(g));
    return Json{{"lattice_rank", pres.lattice_rank},
                {"surface", surface_json(pres.surface)},
                {"terms", std::move(terms)},
                {"tail_rays", std::move(tail)}};
}

inline Json divisor_json(const QDivisor& d) {
    Json out = Json::array();
    for (const auto& [label, c] : d.coefficients)
        out.push_back(Json{{"label", to_string(label)}, {"coefficient", rat_json(c)}});
    return out;
}

inline Json fixed_report_json(const FixedLocusReport& r) {
    Json fixed = Json::array();
    for (const DivisorLabel& l : r.fixed_labels) fixed.push_back(to_string(l));
    Json iso = Json::object();
    for (const auto& [label, i] : r.isotropy)
        iso[to_string(label)] = i == Isotropy::infinite ? "infinite" : "finite";
    return Json{{"direction", ivec_json(r.direction.l)},
                {"fixed_labels", std::move(fixed)},
                {"isotropy", std::move(iso)}};
}

inline Json invariants_json(const InvariantGenerators& g) {
    Json gens = Json::array();
    for (const IVec& v : g.generators) gens.push_back(ivec_json(v));
    return Json{{"generators", std::move(gens)}, {"bound_warning", g.bound_warning}};
}

inline Json algebra_json(const AlgebraPresentation& a) {
    static const std::vector<std::string> names = {"u", "v", "x1", "x2", "x3", "x4"};
    Json gens = Json::array();
    for (const auto& [name, weight] : a.generators)
        gens.push_back(Json{{"name", name}, {"weight", ivec_json(weight)}});
    Json rels = Json::array();
    for (const Poly& r : a.relations)
        rels.push_back(Json{{"display", to_string(r, names)}, {"poly", poly_json(r)}});
    return Json{{"generators", std::move(gens)},
                {"relations", std::move(rels)},
                {"degree_bound", a.degree_bound}};
}

inline const char* tri_text(TriBool t) {
    return t == TriBool::yes ? "yes" : t == TriBool::no ? "no" : "undecided";
}

inline Json snc_json(const SncReport& r) {
    Json pts = Json::array();
    for (const QVec& p : r.points) pts.push_back(qvec_json(p));
    return Json{{"points", std::move(pts)}, {"all_transverse", tri_text(r.all_transverse)}};
}

inline const char* outcome_text(Outcome o) {
    switch (o) {
        case Outcome::linear: return "Linear";
        case Outcome::product_of_complexity_one: return "ProductOfComplexityOne";
        case Outcome::bi_cyclic_cover: return "BiCyclicCover";
        case Outcome::cyclic_cover: return "CyclicCover";
        default: return "Undecided";
    }
}

inline Json verdict_json(const Verdict& v) {
    return Json{{"outcome", outcome_text(v.outcome)}, {"evidence", v.evidence}};
}

// ---- human-readable rendering ----------------------------------------

inline std::string polyhedron_text(const Polyhedron& d) {
    if (d.is_empty()) return "empty";
    std::string s = "conv{";
    for (size_t i = 0; i < d.vertices.size(); ++i) {
        if (i) s += ", ";
        s += to_string(d.vertices[i]);
    }
    s += "}";
    if (!d.rays.empty()) {
        s += " + cone{";
        for (size_t i = 0; i < d.rays.size(); ++i) {
            if (i) s += ", ";
            s += to_string(d.rays[i]);
        }
        s += "}";
    }
    return s;
}

inline std::string surface_text(const SurfaceInfo& s) {
    std::string out = "surface: boundary rays";
    for (const IVec& r : s.boundary_rays) out += " " + to_string(r);
    if (s.exceptional_rays.empty()) out += ", no exceptional rays";
    else {
        out += ", exceptional rays";
        for (const IVec& r : s.exceptional_rays) out += " " + to_string(r);
    }
    out += ", quotient order " + to_string(s.quotient_order);
    return out;
}

inline std::string presentation_text(const AHPresentation& pres) {
    std::string out = surface_text(pres.surface) + "\nD =";
    bool first = true;
    for (const PresentationTerm& t : pres.terms) {
        out += first ? " " : " + ";
        first = false;
        out += polyhedron_text(t.coefficient) + " * " + to_string(t.label) +
               " [ray " + to_string(t.ray) + ", mult " + std::to_string(t.multiplicity) + "]";
    }
    return out;
}

inline std::string divisor_text(const QDivisor& d) {
    if (d.coefficients.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [label, c] : d.coefficients) {
        out += first ? "" : " + ";
        first = false;
        out += to_string(c) + " * " + to_string(label);
    }
    return out;
}

// ---- parsing with JSON-pointer locations ------------------------------

inline const Json& require_member(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) throw schema_error("expected an object", where);
    auto it = j.find(key);
    if (it == j.end()) throw schema_error("missing member '" + key + "'", where);
    return *it;
}

inline Int parse_int(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw schema_error("not an integer", where);
        }
    }
    throw schema_error("expected an integer", where);
}

inline int parse_small_int(const Json& j, const std::string& where) {
    Int x = parse_int(j, where);
    if (x < -1000000 || x > 1000000) throw schema_error("integer out of range", where);
    return x.convert_to<int>();
}

inline Rat parse_rat(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Rat(j.get<std::string>());
        } catch (const std::exception&) {
            throw schema_error("not a rational", where);
        }
    }
    throw schema_error("expected a rational", where);
}

inline IVec parse_ivec(const Json& j, const std::string& where) {
    if (!j.is_array()) throw schema_error("expected an array", where);
    IVec out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_int(j[i], where + "/" + std::to_string(i)));
    return out;
}

inline IntMatrix parse_matrix(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw schema_error("expected a nonempty array of rows", where);
    size_t cols = 0;
    std::vector<IVec> rows;
    for (size_t i = 0; i < j.size(); ++i) {
        IVec row = parse_ivec(j[i], where + "/" + std::to_string(i));
        if (i == 0) cols = row.size();
        else if (row.size() != cols)
            throw schema_error("ragged matrix row", where + "/" + std::to_string(i));
        rows.push_back(std::move(row));
    }
    if (cols == 0) throw schema_error("rows must be nonempty", where + "/0");
    IntMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t c = 0; c < cols; ++c) m(i, c) = rows[i][c];
    return m;
}

// bivariate polynomial as {"terms": [{"exponents": [a,b], "coefficient": c}]}
inline Poly parse_poly2(const Json& j, const std::string& where) {
    const Json& terms = require_member(j, "terms", where);
    if (!terms.is_array()) throw schema_error("expected an array", where + "/terms");
    Poly out = poly_zero(2);
    for (size_t i = 0; i < terms.size(); ++i) {
        std::string here = where + "/terms/" + std::to_string(i);
        const Json& exps = require_member(terms[i], "exponents", here);
        if (!exps.is_array() || exps.size() != 2)
            throw schema_error("expected two exponents", here + "/exponents");
        std::vector<int> e;
        for (size_t k = 0; k < 2; ++k) {
            int x = parse_small_int(exps[k], here + "/exponents/" + std::to_string(k));
            if (x < 0) throw schema_error("negative exponent", here + "/exponents/" + std::to_string(k));
            e.push_back(x);
        }
        Rat c = parse_rat(require_member(terms[i], "coefficient", here), here + "/coefficient");
        out = add(out, poly_monomial(2, e, c));
    }
    return out;
}

// univariate polynomial as an ascending coefficient array
inline Poly parse_poly1(const Json& j, const std::string& where) {
    if (!j.is_array()) throw schema_error("expected a coefficient array", where);
    Poly out = poly_zero(1);
    for (size_t i = 0; i < j.size(); ++i)
        out = add(out, poly_monomial(1, {static_cast<int>(i)},
                                     parse_rat(j[i], where + "/" + std::to_string(i))));
    return out;
}

}  // namespace tvar
