#include "rssep/field.hpp"

#include <algorithm>
#include <array>

namespace rssep {

namespace {

constexpr std::size_t kMaxDegree = 16;  // q <= 2^16 forces s <= 16

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

using Digits = std::array<std::uint32_t, kMaxDegree>;

void unpack(std::uint32_t v, std::uint32_t p, std::uint32_t s, Digits& d) {
    for (std::uint32_t i = 0; i < s; ++i) {
        d[i] = v % p;
        v /= p;
    }
}

std::uint32_t pack(const Digits& d, std::uint32_t p, std::uint32_t s) {
    std::uint32_t v = 0;
    for (std::uint32_t i = s; i-- > 0;) v = v * p + d[i];
    return v;
}

// --- dense GF(p)[x] helpers on plain digit vectors (low-first, trimmed) ---

void trim(std::vector<std::uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    // Fermat; p prime, a != 0.
    std::uint64_t r = 1, b = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Remainder of a / b over GF(p); b nonzero.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
    const std::uint32_t lead_inv = mod_inverse(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        if (c != 0) {
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t t = a[shift + i] + static_cast<std::uint64_t>(p) * p -
                                  c * b[i] % p;
                a[shift + i] = static_cast<std::uint32_t>(t % p);
            }
        }
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Enumerates monic degree-s candidates in low-degree-first lexicographic
// order and returns the first irreducible one (trial division by every
// monic polynomial of degree 1..s/2).
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t s) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < s; ++i) total *= p;

    for (std::uint64_t rank = 0; rank < total; ++rank) {
        std::vector<std::uint32_t> cand(s + 1, 0);
        cand[s] = 1;
        std::uint64_t r = rank;
        for (std::uint32_t i = s; i-- > 1;) {  // c0 varies slowest
            cand[i] = static_cast<std::uint32_t>(r % p);
            r /= p;
        }
        cand[0] = static_cast<std::uint32_t>(r % p);

        bool reducible = false;
        for (std::uint32_t d = 1; d <= s / 2 && !reducible; ++d) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < d; ++i) count *= p;
            for (std::uint64_t dr = 0; dr < count && !reducible; ++dr) {
                std::vector<std::uint32_t> div(d + 1, 0);
                div[d] = 1;
                std::uint64_t t = dr;
                for (std::uint32_t i = 0; i < d; ++i) {
                    div[i] = static_cast<std::uint32_t>(t % p);
                    t /= p;
                }
                if (poly_mod(cand, div, p).empty()) reducible = true;
            }
        }
        if (!reducible) return cand;
    }
    throw Error(errc::internal, "no irreducible polynomial found");
}

}  // namespace

bool operator==(FieldElement a, FieldElement b) {
    if (a.field != b.field)
        throw Error(errc::invalid_input, "field context mismatch in element comparison");
    return a.value == b.value;
}

FieldElement operator+(FieldElement a, FieldElement b) {
    if (!a.field) throw Error(errc::invalid_input, "element without field context");
    return a.field->add(a, b);
}
FieldElement operator-(FieldElement a, FieldElement b) {
    if (!a.field) throw Error(errc::invalid_input, "element without field context");
    return a.field->sub(a, b);
}
FieldElement operator*(FieldElement a, FieldElement b) {
    if (!a.field) throw Error(errc::invalid_input, "element without field context");
    return a.field->mul(a, b);
}
FieldElement operator/(FieldElement a, FieldElement b) {
    if (!a.field) throw Error(errc::invalid_input, "element without field context");
    return a.field->div(a, b);
}
FieldElement operator-(FieldElement a) {
    if (!a.field) throw Error(errc::invalid_input, "element without field context");
    return a.field->neg(a);
}

const char* point_mode_name(PointMode mode) {
    return mode == PointMode::Full ? "full" : "nonextended";
}

PointMode point_mode_from_name(const std::string& name) {
    if (name == "full") return PointMode::Full;
    if (name == "nonextended") return PointMode::NonExtended;
    throw Error(errc::parse, "unknown point mode: " + name);
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t s) {
    if (!is_prime(p)) throw Error(errc::invalid_input, "p = " + std::to_string(p) + " is not prime");
    if (s < 1) throw Error(errc::invalid_input, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        q *= p;
        if (q > kMaxSize)
            throw Error(errc::invalid_input,
                        "field size p^s exceeds cap of " + std::to_string(kMaxSize));
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->s_ = s;
    f->q_ = static_cast<std::uint32_t>(q);
    if (s > 1) f->modulus_ = smallest_irreducible(p, s);
    f->prime_factors_ = distinct_prime_factors(f->q_ - 1);

    // Smallest element in canonical order whose order is exactly q-1.
    // For q = 2 the group is trivial and 1 qualifies.
    for (std::uint32_t v = 1; v < f->q_; ++v) {
        FieldElement a{v, f.get()};
        bool ok = true;
        for (std::uint32_t pf : f->prime_factors_) {
            if (f->pow(a, (f->q_ - 1) / pf).value == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            f->primitive_ = v;
            break;
        }
    }
    if (f->primitive_ == 0 && f->q_ > 2)
        throw Error(errc::internal, "no primitive element found");
    if (f->q_ == 2) f->primitive_ = 1;
    return f;
}

FieldElement Field::element(std::uint32_t packed) const {
    if (packed >= q_)
        throw Error(errc::invalid_input, "element value out of range for field of size " +
                                             std::to_string(q_));
    return {packed, this};
}

FieldElement Field::from_coeffs(const std::vector<std::uint32_t>& digits) const {
    if (digits.size() > s_)
        throw Error(errc::invalid_input, "too many coefficients for extension degree");
    std::uint32_t v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= p_) throw Error(errc::invalid_input, "coefficient not reduced mod p");
        v = v * p_ + digits[i];
    }
    return {v, this};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
    check(a);
    std::vector<std::uint32_t> out(s_);
    std::uint32_t v = a.value;
    for (std::uint32_t i = 0; i < s_; ++i) {
        out[i] = v % p_;
        v /= p_;
    }
    return out;
}

FieldElement Field::check(FieldElement a) const {
    if (a.field != this)
        throw Error(errc::invalid_input, "element does not belong to this field context");
    return a;
}

void Field::check_pair(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    check_pair(a, b);
    if (s_ == 1) {
        std::uint32_t v = a.value + b.value;
        if (v >= q_) v -= q_;
        return {v, this};
    }
    if (p_ == 2) return {a.value ^ b.value, this};
    Digits da{}, db{};
    unpack(a.value, p_, s_, da);
    unpack(b.value, p_, s_, db);
    for (std::uint32_t i = 0; i < s_; ++i) {
        da[i] += db[i];
        if (da[i] >= p_) da[i] -= p_;
    }
    return {pack(da, p_, s_), this};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
    check_pair(a, b);
    if (s_ == 1) {
        std::uint32_t v = a.value >= b.value ? a.value - b.value : a.value + q_ - b.value;
        return {v, this};
    }
    if (p_ == 2) return {a.value ^ b.value, this};
    Digits da{}, db{};
    unpack(a.value, p_, s_, da);
    unpack(b.value, p_, s_, db);
    for (std::uint32_t i = 0; i < s_; ++i)
        da[i] = da[i] >= db[i] ? da[i] - db[i] : da[i] + p_ - db[i];
    return {pack(da, p_, s_), this};
}

FieldElement Field::neg(FieldElement a) const {
    return sub(zero(), a);
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    check_pair(a, b);
    if (s_ == 1)
        return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % q_),
                this};
    Digits da{}, db{};
    unpack(a.value, p_, s_, da);
    unpack(b.value, p_, s_, db);
    std::array<std::uint64_t, 2 * kMaxDegree> conv{};
    for (std::uint32_t i = 0; i < s_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < s_; ++j)
            conv[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
    // reduce modulo the monic modulus, top down
    for (std::uint32_t d = 2 * s_ - 2; d >= s_; --d) {
        const std::uint64_t c = conv[d] % p_;
        if (c != 0) {
            for (std::uint32_t i = 0; i < s_; ++i)
                conv[d - s_ + i] += c * (p_ - modulus_[i]);
        }
        conv[d] = 0;
        if (d == s_) break;
    }
    Digits out{};
    for (std::uint32_t i = 0; i < s_; ++i) out[i] = static_cast<std::uint32_t>(conv[i] % p_);
    return {pack(out, p_, s_), this};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    check(a);
    FieldElement r = one();
    FieldElement base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElement Field::pow_signed(FieldElement a, std::int64_t e) const {
    check(a);
    if (a.value == 0) throw Error(errc::invalid_input, "signed power of zero");
    const std::int64_t m = q_ - 1;
    std::int64_t r = m == 0 ? 0 : e % m;
    if (r < 0) r += m;
    return pow(a, static_cast<std::uint64_t>(r));
}

FieldElement Field::inv(FieldElement a) const {
    check(a);
    if (a.value == 0) throw Error(errc::invalid_input, "inversion of zero");
    return pow(a, q_ - 2);
}

FieldElement Field::div(FieldElement a, FieldElement b) const {
    return mul(a, inv(b));
}

std::uint64_t Field::multiplicative_order(FieldElement a) const {
    check(a);
    if (a.value == 0) throw Error(errc::invalid_input, "order of zero is undefined");
    std::uint64_t order = q_ - 1;
    for (std::uint32_t pf : prime_factors_) {
        while (order % pf == 0 && pow(a, order / pf).value == 1) order /= pf;
    }
    return order;
}

std::vector<FieldElement> Field::canonical_order() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint32_t v = 0; v < q_; ++v) out.push_back({v, this});
    return out;
}

std::vector<FieldElement> Field::eval_points(PointMode mode) const {
    std::vector<FieldElement> out;
    out.reserve(mode == PointMode::Full ? q_ : q_ - 1);
    if (mode == PointMode::Full) out.push_back(zero());
    FieldElement x = one();
    const FieldElement alpha = primitive();
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        out.push_back(x);
        x = mul(x, alpha);
    }
    return out;
}

std::string Field::to_text(FieldElement a) const {
    check(a);
    if (s_ == 1) return std::to_string(a.value);
    const auto digits = coeffs(a);
    std::string out = "[";
    for (std::uint32_t i = 0; i < s_; ++i) {
        if (i) out += ',';
        out += std::to_string(digits[i]);
    }
    out += ']';
    return out;
}

}  // namespace rssep
