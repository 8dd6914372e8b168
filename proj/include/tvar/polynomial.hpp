#pragma once

// Exact multivariate polynomials over the rationals, plus the univariate
// and bivariate machinery the curve checks need: resultants, rational
// roots, coprimality, and linear-factor search.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "tvar/numeric.hpp"
#include "tvar/qlinalg.hpp"

namespace tvar {

struct Poly {
    size_t nvars = 0;
    std::map<std::vector<int>, Rat> terms;  // exponent vector -> nonzero coefficient

    bool operator==(const Poly& o) const { return nvars == o.nvars && terms == o.terms; }
};

inline Poly poly_zero(size_t nvars) { return {nvars, {}}; }

inline Poly poly_const(size_t nvars, const Rat& c) {
    Poly p{nvars, {}};
    if (c != 0) p.terms[std::vector<int>(nvars, 0)] = c;
    return p;
}

inline Poly poly_var(size_t nvars, size_t i) {
    if (i >= nvars) throw precondition_error("DimensionMismatch", "variable index out of range");
    Poly p{nvars, {}};
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.terms[e] = 1;
    return p;
}

inline Poly poly_monomial(size_t nvars, const std::vector<int>& exps, const Rat& c) {
    if (exps.size() != nvars)
        throw precondition_error("DimensionMismatch", "exponent vector length mismatch");
    for (int e : exps)
        if (e < 0) throw precondition_error("NegativeExponent", "exponents must be nonnegative");
    Poly p{nvars, {}};
    if (c != 0) p.terms[exps] = c;
    return p;
}

inline bool is_zero(const Poly& p) { return p.terms.empty(); }

inline Poly add(const Poly& a, const Poly& b) {
    if (a.nvars != b.nvars)
        throw precondition_error("DimensionMismatch", "polynomials in different variable counts");
    Poly out = a;
    for (const auto& [e, c] : b.terms) {
        Rat& slot = out.terms[e];
        slot += c;
        if (slot == 0) out.terms.erase(e);
    }
    return out;
}

inline Poly neg(const Poly& a) {
    Poly out = a;
    for (auto& [e, c] : out.terms) c = -c;
    return out;
}

inline Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.nvars != b.nvars)
        throw precondition_error("DimensionMismatch", "polynomials in different variable counts");
    Poly out{a.nvars, {}};
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e(a.nvars);
            for (size_t i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            Rat& slot = out.terms[e];
            slot += ca * cb;
            if (slot == 0) out.terms.erase(e);
        }
    return out;
}

inline Poly scale(const Poly& a, const Rat& c) {
    Poly out{a.nvars, {}};
    if (c == 0) return out;
    for (const auto& [e, coef] : a.terms) out.terms[e] = coef * c;
    return out;
}

inline Poly poly_pow(const Poly& a, int k) {
    if (k < 0) throw precondition_error("NegativeExponent", "polynomial powers must be nonnegative");
    Poly out = poly_const(a.nvars, 1);
    for (int i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

inline int total_degree(const Poly& p) {
    int d = 0;
    for (const auto& [e, c] : p.terms) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

inline int degree_in(const Poly& p, size_t var) {
    int d = 0;
    for (const auto& [e, c] : p.terms) d = std::max(d, e[var]);
    return d;
}

inline Rat evaluate(const Poly& p, const QVec& x) {
    if (x.size() != p.nvars)
        throw precondition_error("DimensionMismatch", "evaluation point has wrong length");
    Rat out = 0;
    for (const auto& [e, c] : p.terms) {
        Rat t = c;
        for (size_t i = 0; i < p.nvars; ++i)
            for (int j = 0; j < e[i]; ++j) t *= x[i];
        out += t;
    }
    return out;
}

inline Poly substitute(const Poly& p, const std::vector<Poly>& images) {
    if (images.size() != p.nvars)
        throw precondition_error("DimensionMismatch", "one image polynomial per variable required");
    size_t m = images.empty() ? 0 : images[0].nvars;
    for (const Poly& q : images)
        if (q.nvars != m)
            throw precondition_error("DimensionMismatch", "image polynomials in different variable counts");
    // cache powers of each image as they are needed
    std::vector<std::vector<Poly>> pow(p.nvars, {poly_const(m, 1)});
    Poly out = poly_zero(m);
    for (const auto& [e, c] : p.terms) {
        Poly t = poly_const(m, c);
        for (size_t i = 0; i < p.nvars; ++i) {
            while (static_cast<int>(pow[i].size()) <= e[i])
                pow[i].push_back(mul(pow[i].back(), images[i]));
            t = mul(t, pow[i][e[i]]);
        }
        out = add(out, t);
    }
    return out;
}

inline Poly derivative(const Poly& p, size_t var) {
    Poly out{p.nvars, {}};
    for (const auto& [e, c] : p.terms) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        d[var] -= 1;
        out.terms[d] = c * e[var];
    }
    return out;
}

// coefficient polynomials with respect to one variable; index = its exponent
inline std::vector<Poly> coefficients_in(const Poly& p, size_t var) {
    std::vector<Poly> out(static_cast<size_t>(degree_in(p, var)) + 1, poly_zero(p.nvars));
    for (const auto& [e, c] : p.terms) {
        std::vector<int> r = e;
        int k = r[var];
        r[var] = 0;
        out[k].terms[r] = c;
    }
    return out;
}

// top homogeneous part
inline Poly leading_form(const Poly& p) {
    int d = total_degree(p);
    Poly out{p.nvars, {}};
    for (const auto& [e, c] : p.terms) {
        int s = 0;
        for (int x : e) s += x;
        if (s == d) out.terms[e] = c;
    }
    return out;
}

inline std::string to_string(const Poly& p, const std::vector<std::string>& names) {
    if (names.size() != p.nvars)
        throw precondition_error("DimensionMismatch", "one name per variable required");
    if (p.terms.empty()) return "0";
    // highest-degree-first reading order
    std::vector<std::pair<std::vector<int>, Rat>> ts(p.terms.begin(), p.terms.end());
    std::reverse(ts.begin(), ts.end());
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Rat a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (size_t i = 0; i < p.nvars; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) out += to_string(a);
        else if (a == 1) out += vars;
        else out += to_string(a) + "*" + vars;
    }
    return out;
}

// Dense univariate polynomials over the rationals.
using UPoly = std::vector<Rat>;

inline void up_normalize(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int up_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline bool up_is_zero(const UPoly& p) { return p.empty(); }

inline Rat up_eval(const UPoly& p, const Rat& x) {
    Rat out = 0;
    for (size_t i = p.size(); i-- > 0;) out = out * x + p[i];
    return out;
}

inline UPoly up_from(const Poly& p, size_t var) {
    for (const auto& [e, c] : p.terms)
        for (size_t i = 0; i < p.nvars; ++i)
            if (i != var && e[i] != 0)
                throw precondition_error("DimensionMismatch", "polynomial is not univariate in the chosen variable");
    UPoly out(static_cast<size_t>(degree_in(p, var)) + 1, Rat(0));
    for (const auto& [e, c] : p.terms) out[e[var]] = c;
    up_normalize(out);
    return out;
}

// quotient and remainder over the rationals; divisor must be nonzero
inline std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b) {
    if (up_is_zero(b)) throw precondition_error("ZeroDivisor", "division by the zero polynomial");
    UPoly r = a, q;
    int db = up_deg(b);
    if (up_deg(a) >= db) q.assign(a.size() - b.size() + 1, Rat(0));
    while (up_deg(r) >= db) {
        Rat f = r.back() / b.back();
        int shift = up_deg(r) - db;
        q[shift] = f;
        for (int i = 0; i <= db; ++i) r[shift + i] -= f * b[i];
        up_normalize(r);
    }
    return {q, r};
}

inline UPoly up_gcd(UPoly a, UPoly b) {
    up_normalize(a);
    up_normalize(b);
    while (!up_is_zero(b)) {
        UPoly r = up_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!up_is_zero(a)) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

namespace detail {

inline std::vector<Int> divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> out;
    for (Int i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            out.push_back(i);
            out.push_back(n / i);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots;  // root with multiplicity
    int residual_degree = 0;                 // degree left after removing them
};

// all rational roots with multiplicity, via the rational root theorem
inline RationalRoots rational_roots(UPoly p) {
    up_normalize(p);
    if (up_is_zero(p)) throw precondition_error("ZeroVector", "zero polynomial has every root");
    RationalRoots out;
    // clear denominators
    Int den = 1;
    for (const Rat& c : p) den = den / gcd(den, denominator(c)) * denominator(c);
    std::vector<Int> a(p.size());
    for (size_t i = 0; i < p.size(); ++i) a[i] = numerator(p[i]) * (den / denominator(p[i]));
    // factor out powers of the variable
    size_t val = 0;
    while (val < a.size() && a[val] == 0) ++val;
    if (val > 0) {
        out.roots.push_back({Rat(0), static_cast<int>(val)});
        a.erase(a.begin(), a.begin() + val);
    }
    if (a.size() <= 1) {
        out.residual_degree = 0;
        return out;
    }
    UPoly q(a.size());
    for (size_t i = 0; i < a.size(); ++i) q[i] = Rat(a[i]);
    for (const Int& num : detail::divisors(a.front()))
        for (const Int& dn : detail::divisors(a.back()))
            for (int sign : {1, -1}) {
                Rat r = Rat(num * sign, dn);
                int mult = 0;
                while (up_deg(q) >= 1 && up_eval(q, r) == 0) {
                    UPoly lin{-r, Rat(1)};
                    q = up_divmod(q, lin).first;
                    ++mult;
                }
                if (mult > 0) out.roots.push_back({r, mult});
            }
    out.residual_degree = std::max(up_deg(q), 0);
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

namespace detail {

// Sylvester resultant of two bivariate polynomials, eliminating `var`;
// returned as a univariate polynomial in the other variable.  Entries are
// evaluated at interpolation nodes so only rational determinants arise.
inline UPoly resultant_eliminating(const Poly& f, const Poly& g, size_t var) {
    if (f.nvars != 2 || g.nvars != 2)
        throw precondition_error("DimensionMismatch", "resultant expects bivariate polynomials");
    if (is_zero(f) || is_zero(g))
        throw precondition_error("ZeroVector", "resultant of the zero polynomial");
    size_t keep = 1 - var;
    int d1 = degree_in(f, var), d2 = degree_in(g, var);
    if (d1 == 0 && d2 == 0) return UPoly{Rat(1)};
    std::vector<UPoly> fc, gc;
    for (const Poly& c : coefficients_in(f, var)) fc.push_back(up_from(c, keep));
    for (const Poly& c : coefficients_in(g, var)) gc.push_back(up_from(c, keep));
    int du1 = 0, du2 = 0;
    for (const UPoly& c : fc) du1 = std::max(du1, up_deg(c));
    for (const UPoly& c : gc) du2 = std::max(du2, up_deg(c));
    int bound = d2 * du1 + d1 * du2;  // degree bound for the determinant
    size_t m = static_cast<size_t>(d1 + d2);
    std::vector<Rat> nodes, values;
    for (int t = 0; t <= bound; ++t) {
        Rat x(t);
        std::vector<QVec> s(m, QVec(m, Rat(0)));
        for (int r = 0; r < d2; ++r)
            for (int c = 0; c <= d1; ++c) s[r][r + c] = up_eval(fc[d1 - c], x);
        for (int r = 0; r < d1; ++r)
            for (int c = 0; c <= d2; ++c) s[d2 + r][r + c] = up_eval(gc[d2 - c], x);
        nodes.push_back(x);
        values.push_back(q_determinant(s));
    }
    // Lagrange interpolation through the sampled determinant values
    UPoly acc;
    for (size_t i = 0; i < nodes.size(); ++i) {
        UPoly term{Rat(1)};
        Rat denom = 1;
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (i == j) continue;
            UPoly next(term.size() + 1, Rat(0));
            for (size_t k = 0; k < term.size(); ++k) {
                next[k + 1] += term[k];
                next[k] -= term[k] * nodes[j];
            }
            term = std::move(next);
            denom *= nodes[i] - nodes[j];
        }
        Rat w = values[i] / denom;
        if (acc.size() < term.size()) acc.resize(term.size(), Rat(0));
        for (size_t k = 0; k < term.size(); ++k) acc[k] += term[k] * w;
    }
    up_normalize(acc);
    return acc;
}

}  // namespace detail

inline UPoly resultant_v(const Poly& f, const Poly& g) { return detail::resultant_eliminating(f, g, 1); }

// content with respect to the second variable: gcd of the coefficient polys
inline UPoly content_v(const Poly& f) {
    UPoly c;
    for (const Poly& coef : coefficients_in(f, 1)) c = up_gcd(c, up_from(coef, 0));
    return c;
}

// no common factor in Q[u,v]
inline bool coprime_bivariate(const Poly& f, const Poly& g) {
    if (f.nvars != 2 || g.nvars != 2)
        throw precondition_error("DimensionMismatch", "coprimality expects bivariate polynomials");
    if (is_zero(f) || is_zero(g)) return false;
    int d1 = degree_in(f, 1), d2 = degree_in(g, 1);
    if (d1 == 0 && d2 == 0) return up_deg(up_gcd(up_from(f, 0), up_from(g, 0))) == 0;
    if (d1 == 0) return up_deg(up_gcd(up_from(f, 0), content_v(g))) == 0;
    if (d2 == 0) return up_deg(up_gcd(up_from(g, 0), content_v(f))) == 0;
    // positive-degree common factor shows up in the resultant, purely
    // u-dependent ones in the contents
    if (up_is_zero(resultant_v(f, g))) return false;
    return up_deg(up_gcd(content_v(f), content_v(g))) == 0;
}

// rational lines au + bv + c contained in {f = 0}
inline std::vector<Poly> linear_factors(const Poly& f) {
    if (f.nvars != 2)
        throw precondition_error("DimensionMismatch", "linear factor search expects bivariate polynomials");
    if (is_zero(f) || total_degree(f) == 0) return {};
    std::vector<Poly> out;
    // candidate directions (a, b) divide the leading form
    Poly lead = leading_form(f);
    std::vector<std::pair<Int, Int>> dirs;
    UPoly lw = up_from(substitute(lead, {poly_var(1, 0), poly_const(1, Rat(1))}), 0);
    if (up_deg(lw) < total_degree(f)) dirs.push_back({0, 1});  // factor v possible
    if (!up_is_zero(lw))
        for (const auto& [w, mult] : rational_roots(lw).roots)
            dirs.push_back({denominator(w), -numerator(w)});  // root -b/a of the leading form
    for (auto& [a, b] : dirs) {
        Int g = gcd(a < 0 ? Int(-a) : a, b < 0 ? Int(-b) : b);
        if (g > 1) { a /= g; b /= g; }
        // parametrize the pencil of lines a*u + b*v + gamma = 0 and find the
        // gamma values along which f vanishes identically
        Poly t2 = poly_var(2, 0), c2 = poly_var(2, 1);  // parameters (T, C)
        Poly uu, vv;
        if (b != 0) {
            uu = scale(t2, Rat(b));
            vv = sub(scale(t2, Rat(-a)), c2);  // gamma = b * C
        } else {
            uu = neg(c2);  // gamma = a * C, line u = -C
            vv = t2;
        }
        Poly resf = substitute(f, {uu, vv});
        UPoly common;
        for (const Poly& coef : coefficients_in(resf, 0)) common = up_gcd(common, up_from(coef, 1));
        if (up_is_zero(common) || up_deg(common) == 0) continue;
        for (const auto& [c0, mult] : rational_roots(common).roots) {
            Rat gamma = (b != 0 ? Rat(b) : Rat(a)) * c0;
            Poly line = add(add(scale(poly_var(2, 0), Rat(a)), scale(poly_var(2, 1), Rat(b))),
                            poly_const(2, gamma));
            out.push_back(line);
        }
    }
    std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) { return x.terms < y.terms; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// complete for total degree <= 3; beyond that a clean report means only
// that no rational line divides f
inline bool has_linear_factor(const Poly& f) { return !linear_factors(f).empty(); }

}  // namespace tvar
