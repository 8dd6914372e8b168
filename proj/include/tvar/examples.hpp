#pragma once

// Built-in worked examples, runnable by name: the standard weight matrices
// and curve choices used across the documentation and tests.

#include <cctype>
#include <string>
#include <vector>

#include "tvar/json_io.hpp"

namespace tvar {

struct ExampleReport {
    Json data;
    std::string text;
};

inline std::vector<std::string> builtin_example_names() {
    return {"example-3i",  "example-3ii(4)", "example-3iii(5)",
            "example-10",  "example-11",     "example-12",
            "example-12b", "example-13",     "example-15-hypersurface"};
}

namespace detail {

inline IntMatrix split_weights() { return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}; }

inline IntMatrix blowup_weights() { return {{1, 1}, {1, 1}, {-1, 0}, {0, -1}}; }

inline IntMatrix mixed_weights() { return {{1, 1}, {-1, -1}, {-1, 0}, {0, -1}}; }

inline IntMatrix five_weights() { return {{6, 0}, {-6, 2}, {0, -1}, {3, 0}, {2, 0}}; }

// one-parameter families: two rows of ones over -I, and the staircase variant
inline IntMatrix ones_over_minus_identity(int n) {
    IntMatrix f(static_cast<size_t>(n), static_cast<size_t>(n - 2));
    for (size_t j = 0; j + 2 < static_cast<size_t>(n); ++j) {
        f(0, j) = 1;
        f(1, j) = 1;
        f(j + 2, j) = -1;
    }
    return f;
}

inline IntMatrix staircase_weights(int n) {
    IntMatrix f = ones_over_minus_identity(n);
    for (size_t j = 0; j + 2 < static_cast<size_t>(n); ++j) f(0, j) = Int(n - 2) - Int(j);
    return f;
}

inline std::string monomial_text(const IVec& e, const std::vector<std::string>& names) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e[i] != 1) out += "^" + to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

inline ExampleReport present_example(const std::string& name, const IntMatrix& f) {
    AHPresentation pres = ah_presentation(f);
    Json data{{"name", name},
              {"weights", matrix_json(f)},
              {"quotient_map", matrix_json(pres.data.p)},
              {"presentation", presentation_json(pres)}};
    return {std::move(data), name + "\n" + presentation_text(pres)};
}

inline int family_parameter(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() + 1 || name.back() != ')') return -1;
    std::string inner = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    if (inner.empty()) return -1;
    for (char c : inner)
        if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
    if (inner.size() > 4) return -1;
    return std::stoi(inner);
}

inline int checked_family_parameter(const std::string& name, const std::string& prefix) {
    int n = family_parameter(name, prefix);
    if (n < 0) return -1;
    if (n < 3 || n > 12)
        throw precondition_error("ParameterOutOfRange", "family parameter must be between 3 and 12");
    return n;
}

inline ExampleReport split_example() {
    IntMatrix f = split_weights();
    AHPresentation pres = ah_presentation(f);
    auto split = product_split(f);
    Verdict v = linearization_verdict(pres);
    Json split_json;
    if (split) {
        Json first = Json::array(), second = Json::array();
        for (size_t i : split->first) first.push_back(i);
        for (size_t i : split->second) second.push_back(i);
        split_json = Json{{"first", std::move(first)}, {"second", std::move(second)}};
    } else {
        split_json = nullptr;
    }
    Json data{{"name", "example-10"},
              {"weights", matrix_json(f)},
              {"presentation", presentation_json(pres)},
              {"product_split", std::move(split_json)},
              {"verdict", verdict_json(v)}};
    std::string text = "example-10\n" + presentation_text(pres);
    if (split) {
        text += "\nsplits into coordinate blocks {";
        for (size_t i = 0; i < split->first.size(); ++i)
            text += (i ? "," : "") + std::to_string(split->first[i]);
        text += "} and {";
        for (size_t i = 0; i < split->second.size(); ++i)
            text += (i ? "," : "") + std::to_string(split->second[i]);
        text += "}";
    }
    text += std::string("\nverdict: ") + outcome_text(v.outcome);
    return {std::move(data), std::move(text)};
}

inline ExampleReport algebra_example() {
    AHPresentation pres = ah_presentation(split_weights());
    Poly u = poly_var(2, 0), v = poly_var(2, 1);
    Poly curved = add(add(u, v), mul(v, v));
    AlgebraPresentation linear = presentation_bounded(pres, u, v, 4);
    AlgebraPresentation general = presentation_bounded(pres, u, curved, 6);
    Json data{{"name", "example-11"},
              {"presentation", presentation_json(pres)},
              {"linear_curves", algebra_json(linear)},
              {"general_curves", algebra_json(general)}};
    static const std::vector<std::string> names = {"u", "v", "x1", "x2", "x3", "x4"};
    std::string text = "example-11\ncurves (u, v):";
    for (const Poly& r : linear.relations) text += "\n  " + to_string(r, names) + " = 0";
    text += "\ncurves (u, u+v+v^2):";
    for (const Poly& r : general.relations) text += "\n  " + to_string(r, names) + " = 0";
    return {std::move(data), std::move(text)};
}

inline ExampleReport blowup_section_example() {
    ExactSequenceData data;
    data.f = blowup_weights();
    data.p = IntMatrix{{1, 0, 1, 1}, {0, 1, 1, 1}};
    data.s = IntMatrix{{0, 0, -1, 0}, {0, 0, 0, -1}};
    AHPresentation pres = ah_presentation(data);
    Verdict v = linearization_verdict(pres);
    Json out{{"name", "example-12"},
             {"weights", matrix_json(data.f)},
             {"quotient_map", matrix_json(data.p)},
             {"section", matrix_json(data.s)},
             {"presentation", presentation_json(pres)},
             {"verdict", verdict_json(v)}};
    std::string text = "example-12\n" + presentation_text(pres) +
                       "\nverdict: " + outcome_text(v.outcome);
    return {std::move(out), std::move(text)};
}

inline ExampleReport mixed_example() {
    IntMatrix f = mixed_weights();
    AHPresentation pres = ah_presentation(f);
    Verdict v = linearization_verdict(pres);
    Json data{{"name", "example-12b"},
              {"weights", matrix_json(f)},
              {"presentation", presentation_json(pres)},
              {"verdict", verdict_json(v)}};
    std::string text = "example-12b\n" + presentation_text(pres) +
                       "\nverdict: " + outcome_text(v.outcome);
    return {std::move(data), std::move(text)};
}

inline ExampleReport five_space_example() {
    IntMatrix f = five_weights();
    IntMatrix p{{1, 1, 2, 0, 0}, {0, 1, 2, 2, 0}, {0, 1, 2, 0, 3}};
    IntMatrix prod = p * f;
    bool annihilates = true;
    for (size_t i = 0; i < prod.rows(); ++i)
        for (size_t j = 0; j < prod.cols(); ++j)
            if (prod(i, j) != 0) annihilates = false;
    InvariantGenerators gens = invariant_ring_generators(f, 6);
    static const std::vector<std::string> names = {"x", "y1", "y2", "z", "t"};
    Json gen_names = Json::array();
    for (const IVec& g : gens.generators) gen_names.push_back(monomial_text(g, names));
    Json data{{"name", "example-13"},
              {"weights", matrix_json(f)},
              {"quotient_map", matrix_json(p)},
              {"quotient_map_annihilates_weights", annihilates},
              {"invariants", invariants_json(gens)},
              {"invariant_monomials", std::move(gen_names)}};
    std::string text = "example-13\ninvariant ring generators up to degree 6:";
    for (const IVec& g : gens.generators) text += " " + monomial_text(g, names);
    return {std::move(data), std::move(text)};
}

inline ExampleReport hypersurface_example() {
    IntMatrix f = five_weights();
    Poly g = add(add(add(poly_monomial(5, {1, 0, 0, 0, 0}, Rat(1)),
                         poly_monomial(5, {2, 1, 2, 0, 0}, Rat(1))),
                     poly_monomial(5, {0, 0, 0, 2, 0}, Rat(1))),
                 poly_monomial(5, {0, 0, 0, 0, 3}, Rat(1)));
    IVec w = check_equivariant_hypersurface(f, g);
    static const std::vector<std::string> names = {"x", "y1", "y2", "z", "t"};
    Json data{{"name", "example-15-hypersurface"},
              {"weights", matrix_json(f)},
              {"polynomial", to_string(g, names)},
              {"hypersurface_weight", ivec_json(w)}};
    std::string text = "example-15-hypersurface\n" + to_string(g, names) +
                       " = 0 is equivariant of weight " + to_string(w);
    return {std::move(data), std::move(text)};
}

}  // namespace detail

inline ExampleReport run_example(const std::string& name) {
    if (name == "example-3i") return detail::present_example(name, detail::split_weights());
    if (name == "example-10") return detail::split_example();
    if (name == "example-11") return detail::algebra_example();
    if (name == "example-12") return detail::blowup_section_example();
    if (name == "example-12b") return detail::mixed_example();
    if (name == "example-13") return detail::five_space_example();
    if (name == "example-15-hypersurface") return detail::hypersurface_example();
    if (name.rfind("example-3ii(", 0) == 0) {
        int n = detail::checked_family_parameter(name, "example-3ii(");
        if (n > 0) return detail::present_example(name, detail::ones_over_minus_identity(n));
    }
    if (name.rfind("example-3iii(", 0) == 0) {
        int n = detail::checked_family_parameter(name, "example-3iii(");
        if (n > 0) return detail::present_example(name, detail::staircase_weights(n));
    }
    throw precondition_error("NotFound", "unknown example '" + name + "'");
}

}  // namespace tvar
