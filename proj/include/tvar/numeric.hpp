#pragma once

// Exact arithmetic primitives shared by every module: arbitrary precision
// integers and rationals, small vector helpers, and the error type carrying
// a machine-readable failure kind.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvar {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Failure families map to distinct process exit codes in the CLI.
enum class ErrorFamily { schema, precondition, undecided, internal };

class Error : public std::runtime_error {
public:
    Error(ErrorFamily family, std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message),
          family_(family),
          name_(std::move(name)) {}

    ErrorFamily family() const { return family_; }
    const std::string& name() const { return name_; }

private:
    ErrorFamily family_;
    std::string name_;
};

inline Error precondition_error(const std::string& name, const std::string& msg) {
    return Error(ErrorFamily::precondition, name, msg);
}

inline Error schema_error(const std::string& msg, const std::string& location) {
    return Error(ErrorFamily::schema, "SchemaError", msg + " at " + location);
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

// Floor of a rational, exact.
inline Int rat_floor(const Rat& q) {
    Int n = numerator(q), d = denominator(q);  // d > 0 by normalization
    Int quo = n / d;
    if (n % d != 0 && n < 0) quo -= 1;
    return quo;
}

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline QVec to_qvec(const IVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

inline Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size())
        throw precondition_error("DimensionMismatch", "dot product of unequal lengths");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IVec& a, const QVec& b) { return dot(to_qvec(a), b); }

inline Int dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size())
        throw precondition_error("DimensionMismatch", "dot product of unequal lengths");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec add(const QVec& a, const QVec& b) {
    if (a.size() != b.size())
        throw precondition_error("DimensionMismatch", "vector sum of unequal lengths");
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline QVec sub(const QVec& a, const QVec& b) {
    if (a.size() != b.size())
        throw precondition_error("DimensionMismatch", "vector difference of unequal lengths");
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline QVec scale(const Rat& c, const QVec& a) {
    QVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

inline bool is_zero(const QVec& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const IVec& a) {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

// Scales a rational vector to the unique primitive integer vector pointing
// the same way: multiply by the lcm of denominators, divide by the gcd.
inline IVec primitive(const QVec& v) {
    if (is_zero(v)) throw precondition_error("ZeroVector", "primitive of zero vector");
    Int den = 1;
    for (const Rat& x : v) den = lcm(den, denominator(x));
    IVec scaled(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        scaled[i] = numerator(v[i]) * (den / denominator(v[i]));
        g = gcd(g, scaled[i]);
    }
    for (Int& x : scaled) x /= g;  // g > 0, so direction is preserved
    return scaled;
}

inline IVec primitive(const IVec& v) { return primitive(to_qvec(v)); }

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

inline std::string to_string(const QVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace tvar
