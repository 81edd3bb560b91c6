#include "rssep/poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace rssep {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (a.field().get() != b.field().get())
        throw Error(errc::invalid_input, "polynomial field contexts differ");
}

}  // namespace

Poly Poly::zero(FieldPtr field) {
    return Poly(std::move(field));
}

Poly Poly::constant(FieldPtr field, FieldElement c) {
    Poly f(std::move(field));
    if (c.field != f.field_.get())
        throw Error(errc::invalid_input, "constant from a different field context");
    if (c.value != 0) f.coeffs_.push_back(c);
    return f;
}

Poly Poly::from_coefficients(FieldPtr field, std::vector<FieldElement> coeffs) {
    Poly f(std::move(field));
    for (const auto& c : coeffs)
        if (c.field != f.field_.get())
            throw Error(errc::invalid_input, "coefficient from a different field context");
    f.coeffs_ = std::move(coeffs);
    f.trim();
    return f;
}

Poly Poly::identity(FieldPtr field) {
    Poly f(field);
    f.coeffs_ = {field->zero(), field->one()};
    return f;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

bool Poly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().value == 1;
}

FieldElement Poly::coefficient(std::size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return field_->zero();
}

FieldElement Poly::leading() const {
    if (coeffs_.empty()) return field_->zero();
    return coeffs_.back();
}

FieldElement Poly::eval(FieldElement point) const {
    if (point.field != field_.get())
        throw Error(errc::invalid_input, "evaluation point from a different field context");
    FieldElement acc = field_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = field_->add(field_->mul(acc, point), coeffs_[i]);
    return acc;
}

Poly Poly::scaled(FieldElement c) const {
    if (c.field != field_.get())
        throw Error(errc::invalid_input, "scalar from a different field context");
    Poly out(field_);
    if (c.value == 0) return out;
    out.coeffs_.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.coeffs_.push_back(field_->mul(a, c));
    return out;
}

Poly Poly::monic() const {
    if (is_zero()) throw Error(errc::invalid_input, "monic scaling of the zero polynomial");
    return scaled(field_->inv(leading()));
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& f = a.field_;
    Poly out(f);
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), f->zero());
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = f->add(a.coefficient(i), b.coefficient(i));
    out.trim();
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& f = a.field_;
    Poly out(f);
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), f->zero());
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = f->sub(a.coefficient(i), b.coefficient(i));
    out.trim();
    return out;
}

Poly operator-(const Poly& a) {
    return a.scaled(a.field_->neg(a.field_->one()));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const auto& f = a.field_;
    Poly out(f);
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, f->zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].value == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] =
                f->add(out.coeffs_[i + j], f->mul(a.coeffs_[i], b.coeffs_[j]));
    }
    out.trim();
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i].value != b.coeffs_[i].value) return false;
    return true;
}

DivModResult divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(errc::invalid_input, "division by the zero polynomial");
    const auto& f = a.field();
    if (a.degree() < b.degree()) return {Poly::zero(f), a};

    std::vector<FieldElement> rem(a.coefficients());
    const std::size_t bs = b.coefficients().size();
    std::vector<FieldElement> quot(rem.size() - bs + 1, f->zero());
    const FieldElement lead_inv = f->inv(b.leading());
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        const FieldElement c = f->mul(rem[shift + bs - 1], lead_inv);
        quot[shift] = c;
        if (c.value != 0)
            for (std::size_t j = 0; j < bs; ++j)
                rem[shift + j] = f->sub(rem[shift + j], f->mul(c, b.coefficients()[j]));
    }
    rem.resize(bs - 1, f->zero());
    return {Poly::from_coefficients(f, std::move(quot)),
            Poly::from_coefficients(f, std::move(rem))};
}

Poly from_roots(const FieldPtr& field, const std::vector<FieldElement>& roots) {
    std::set<std::uint32_t> seen;
    for (const auto& r : roots) {
        if (r.field != field.get())
            throw Error(errc::invalid_input, "root from a different field context");
        if (!seen.insert(r.value).second)
            throw Error(errc::invalid_input, "duplicate root");
    }
    Poly acc = Poly::constant(field, field->one());
    for (const auto& r : roots) {
        Poly lin = Poly::from_coefficients(field, {field->neg(r), field->one()});
        acc = acc * lin;
    }
    return acc;
}

Poly interpolate(const FieldPtr& field,
                 const std::vector<std::pair<FieldElement, FieldElement>>& points) {
    if (points.empty()) throw Error(errc::invalid_input, "interpolation needs at least one point");
    std::set<std::uint32_t> seen;
    for (const auto& [x, y] : points) {
        if (x.field != field.get() || y.field != field.get())
            throw Error(errc::invalid_input, "interpolation point from a different field context");
        if (!seen.insert(x.value).second)
            throw Error(errc::invalid_input, "repeated abscissa in interpolation");
    }
    // Newton form, expanded incrementally: result += c_i * prod_{j<i}(x - x_j)
    Poly result = Poly::zero(field);
    Poly basis = Poly::constant(field, field->one());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& [xi, yi] = points[i];
        FieldElement denom = basis.eval(xi);
        FieldElement num = field->sub(yi, result.eval(xi));
        FieldElement ci = field->div(num, denom);
        result = result + basis.scaled(ci);
        basis = basis * Poly::from_coefficients(field, {field->neg(xi), field->one()});
    }
    return result;
}

Poly poly_gcd(const Poly& u, const Poly& v) {
    require_same_field(u, v);
    if (u.is_zero() && v.is_zero())
        throw Error(errc::invalid_input, "gcd of two zero polynomials");
    Poly a = u, b = v;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = b;
        b = r;
    }
    return a.monic();
}

namespace {

// Extended Euclid on (u, v): returns (g, x, y) with x*u + y*v = g, g monic.
struct Xgcd {
    Poly g, x, y;
};

Xgcd xgcd(const Poly& u, const Poly& v) {
    const auto& f = u.field();
    Poly r0 = u, r1 = v;
    Poly x0 = Poly::constant(f, f->one()), x1 = Poly::zero(f);
    Poly y0 = Poly::zero(f), y1 = Poly::constant(f, f->one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly x2 = x0 - q * x1;
        Poly y2 = y0 - q * y1;
        r0 = r1; r1 = r;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    const FieldElement scale = f->inv(r0.leading());
    return {r0.scaled(scale), x0.scaled(scale), y0.scaled(scale)};
}

void require_bezout_inputs(const Poly& u, const Poly& v) {
    require_same_field(u, v);
    if (u.degree() < 1 || v.degree() < 1)
        throw Error(errc::invalid_input, "Bezout inputs must be non-constant polynomials");
    if (poly_gcd(u, v).degree() != 0)
        throw Error(errc::invalid_input, "Bezout inputs are not coprime");
}

}  // namespace

BezoutPair bezout_min(const Poly& u, const Poly& v) {
    require_bezout_inputs(u, v);
    const auto& f = u.field();
    const Xgcd e = xgcd(u, v);  // e.g == 1 here
    // a*u - b*v = 1 with a = x mod v, b recomputed from the identity.
    Poly a = divmod(e.x, v).remainder;
    Poly one = Poly::constant(f, f->one());
    auto [b, rem] = divmod(a * u - one, v);
    if (!rem.is_zero())
        throw Error(errc::internal, "Bezout back-substitution is not exact");
    if (!(a * u - b * v == one))
        throw Error(errc::internal, "Bezout identity failed re-expansion");
    if (a.degree() >= v.degree() || b.degree() >= u.degree())
        throw Error(errc::internal, "Bezout degree bounds violated");
    return {a, b};
}

BezoutPair bezout_target(const Poly& u, const Poly& v, const Poly& z) {
    require_bezout_inputs(u, v);
    if (z.field().get() != u.field().get())
        throw Error(errc::invalid_input, "target polynomial from a different field context");
    if (z.degree() >= u.degree() + v.degree())
        throw Error(errc::invalid_input,
                    "target degree must be below deg(u) + deg(v)");
    const BezoutPair unit = bezout_min(u, v);
    Poly a = divmod(unit.a * z, v).remainder;
    auto [b, rem] = divmod(a * u - z, v);
    if (!rem.is_zero())
        throw Error(errc::internal, "Bezout back-substitution is not exact");
    if (!(a * u - b * v == z))
        throw Error(errc::internal, "Bezout identity failed re-expansion");
    if (a.degree() >= v.degree() || b.degree() >= u.degree())
        throw Error(errc::internal, "Bezout degree bounds violated");
    return {a, b};
}

std::string to_text(const Poly& f) {
    if (f.is_zero()) return "0";
    const auto& field = f.field();
    std::string out;
    for (int d = 0; d <= f.degree(); ++d) {
        const FieldElement c = f.coefficient(static_cast<std::size_t>(d));
        if (c.value == 0) continue;
        if (!out.empty()) out += " + ";
        const bool unit = c.value == field->one().value;
        if (d == 0) {
            out += field->to_text(c);
        } else {
            if (!unit) {
                out += field->to_text(c);
                out += '*';
            }
            out += 'x';
            if (d > 1) out += '^' + std::to_string(d);
        }
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::uint64_t number() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw Error(errc::parse, "expected a number in polynomial text");
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (v > (1ull << 40)) throw Error(errc::parse, "number too large in polynomial text");
            ++pos;
        }
        return v;
    }
};

FieldElement parse_element(const FieldPtr& field, Cursor& cur) {
    cur.skip_ws();
    if (cur.accept('[')) {
        std::vector<std::uint32_t> digits;
        if (!cur.accept(']')) {
            do {
                const std::uint64_t d = cur.number();
                if (d >= field->characteristic())
                    throw Error(errc::parse, "coefficient digit not reduced mod p");
                digits.push_back(static_cast<std::uint32_t>(d));
            } while (cur.accept(','));
            if (!cur.accept(']')) throw Error(errc::parse, "unterminated coefficient vector");
        }
        return field->from_coeffs(digits);
    }
    // bare residue: a prime-subfield constant, valid in any field
    const std::uint64_t v = cur.number();
    if (v >= field->characteristic()) throw Error(errc::parse, "residue not reduced mod p");
    return field->from_coeffs({static_cast<std::uint32_t>(v)});
}

}  // namespace

Poly parse_poly(const FieldPtr& field, std::string_view text) {
    Cursor cur{text};
    if (cur.done()) throw Error(errc::parse, "empty polynomial text");
    std::vector<FieldElement> coeffs;
    std::vector<bool> seen;
    bool first = true;
    while (true) {
        if (!first && !cur.accept('+')) break;
        first = false;
        cur.skip_ws();
        FieldElement c = field->one();
        bool have_coeff = false;
        if (cur.pos < cur.text.size() && cur.text[cur.pos] != 'x') {
            c = parse_element(field, cur);
            have_coeff = true;
        }
        std::uint64_t deg = 0;
        bool have_x = false;
        if (have_coeff && cur.accept('*')) {
            if (!cur.accept('x')) throw Error(errc::parse, "expected x after *");
            have_x = true;
        } else if (!have_coeff) {
            if (!cur.accept('x')) throw Error(errc::parse, "expected a term");
            have_x = true;
        }
        if (have_x) {
            deg = 1;
            if (cur.accept('^')) {
                deg = cur.number();
                if (deg < 1) throw Error(errc::parse, "exponent must be >= 1");
                if (deg > 100000) throw Error(errc::parse, "exponent too large");
            }
        }
        if (coeffs.size() <= deg) {
            coeffs.resize(deg + 1, field->zero());
            seen.resize(deg + 1, false);
        }
        if (seen[deg]) throw Error(errc::parse, "duplicate degree in polynomial text");
        seen[deg] = true;
        coeffs[deg] = c;
        if (cur.done()) break;
    }
    if (!cur.done()) throw Error(errc::parse, "trailing characters in polynomial text");
    // "0" parses to the zero constant; strip it like any other zero.
    return Poly::from_coefficients(field, std::move(coeffs));
}

}  // namespace rssep
