#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rssep/field.hpp"

namespace rssep {

/// Dense univariate polynomial over a Field. Coefficients are stored
/// low-degree first with no trailing zeros; the zero polynomial has an
/// empty coefficient vector and degree() == -1 (standing in for -infinity
/// in every degree comparison used here).
class Poly {
public:
    static Poly zero(FieldPtr field);
    static Poly constant(FieldPtr field, FieldElement c);
    static Poly from_coefficients(FieldPtr field, std::vector<FieldElement> coeffs);
    /// The monomial x.
    static Poly identity(FieldPtr field);

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;

    FieldElement coefficient(std::size_t i) const;
    const std::vector<FieldElement>& coefficients() const { return coeffs_; }
    FieldElement leading() const;

    FieldElement eval(FieldElement point) const;

    Poly scaled(FieldElement c) const;
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    void trim();

    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

struct DivModResult {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division: a = q*b + r with deg(r) < deg(b). b must be nonzero.
DivModResult divmod(const Poly& a, const Poly& b);

/// Monic product of (x - r) over the given roots; roots must be pairwise
/// distinct. An empty root set yields the constant 1.
Poly from_roots(const FieldPtr& field, const std::vector<FieldElement>& roots);

/// Unique polynomial of degree < #points through all points (Newton form).
/// Abscissae must be pairwise distinct; at least one point required.
Poly interpolate(const FieldPtr& field,
                 const std::vector<std::pair<FieldElement, FieldElement>>& points);

/// Monic gcd; inputs must not both be zero.
Poly poly_gcd(const Poly& u, const Poly& v);

struct BezoutPair {
    Poly a;
    Poly b;
};

/// Minimal-degree solution of a*u - b*v = 1 for coprime non-constant u, v:
/// deg(a) < deg(v) and deg(b) < deg(u). Deterministic (a is the residue of
/// the extended-Euclid coefficient mod v).
BezoutPair bezout_min(const Poly& u, const Poly& v);

/// Solution of a*u - b*v = z with deg(a) < deg(v), deg(b) < deg(u), for
/// coprime non-constant u, v and deg(z) < deg(u) + deg(v). Both degree
/// bounds are re-checked after construction; a failure there is a bug, not
/// an input error.
BezoutPair bezout_target(const Poly& u, const Poly& v, const Poly& z);

/// Text form "c0 + c1*x + c2*x^2 + ..." with zero terms omitted, unit
/// coefficients of positive-degree terms elided, zero polynomial as "0".
std::string to_text(const Poly& f);

/// Inverse of to_text; rejects malformed input and unreduced coefficients.
Poly parse_poly(const FieldPtr& field, std::string_view text);

}  // namespace rssep
