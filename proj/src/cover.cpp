#include "rssep/cover.hpp"

namespace rssep {

std::uint64_t floor_two_q34(std::uint64_t q) {
    const std::uint64_t target = 16ull * q * q * q;
    std::uint64_t b = 0;
    while ((b + 1) * (b + 1) * (b + 1) * (b + 1) <= target) ++b;
    return b;
}

std::uint64_t ceil_two_q34(std::uint64_t q) {
    const std::uint64_t target = 16ull * q * q * q;
    std::uint64_t c = 0;
    while (c * c * c * c < target) ++c;
    return c;
}

bool is_prime_power(std::uint32_t q, std::uint32_t* p_out, std::uint32_t* s_out) {
    if (q < 2) return false;
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q;  // q itself is prime
    std::uint32_t s = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++s;
    }
    if (rest != 1) return false;
    if (p_out) *p_out = p;
    if (s_out) *s_out = s;
    return true;
}

CoverRow min_cover_bound(const FieldPtr& field) {
    CoverRow row;
    row.q = field->size();
    row.p = field->characteristic();
    row.s = field->extension_degree();
    row.stated_bound = floor_two_q34(row.q);

    const std::uint32_t q = row.q;
    if (q == 2) {
        // the only power of the primitive element is 1, so the difference
        // set is stuck at {0}
        row.min_bound = std::nullopt;
        row.within_stated = false;
        return row;
    }

    const FieldElement alpha = field->primitive();
    std::vector<FieldElement> powers;  // alpha^0 .. alpha^B as B grows
    powers.push_back(field->one());
    std::vector<std::uint8_t> covered(q, 0);
    covered[0] = 1;  // i = j
    std::uint32_t count = 1;

    std::uint32_t B = 0;
    while (count < q) {
        ++B;
        if (B >= q)  // cycle exhausted without covering; cannot happen for q > 2
            throw Error(errc::internal, "difference cover did not close over the field");
        const FieldElement an = field->mul(powers.back(), alpha);
        powers.push_back(an);
        for (std::uint32_t i = 0; i + 1 < powers.size(); ++i) {
            const std::uint32_t d1 = field->sub(an, powers[i]).value;
            if (!covered[d1]) {
                covered[d1] = 1;
                ++count;
            }
            const std::uint32_t d2 = field->sub(powers[i], an).value;
            if (!covered[d2]) {
                covered[d2] = 1;
                ++count;
            }
        }
    }
    row.min_bound = B;
    // exact test of B <= 2*q^{3/4}: B^4 <= 16 q^3
    const std::uint64_t b64 = B;
    row.within_stated = b64 * b64 * b64 * b64 <= 16ull * q * q * q;
    return row;
}

std::vector<CoverRow> cover_sweep(std::uint32_t qmax, bool primes_only, ScanMode mode) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ps;  // (p, s) by q
    for (std::uint32_t q = 2; q <= qmax; ++q) {
        std::uint32_t p = 0, s = 0;
        if (!is_prime_power(q, &p, &s)) continue;
        if (primes_only && s != 1) continue;
        ps.push_back({p, s});
    }
    std::vector<CoverRow> rows(ps.size());
    if (mode == ScanMode::Serial) {
        for (std::size_t i = 0; i < ps.size(); ++i)
            rows[i] = min_cover_bound(Field::make(ps[i].first, ps[i].second));
    } else {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(ps.size()); ++i)
            rows[i] = min_cover_bound(
                Field::make(ps[i].first, ps[i].second));
    }
    return rows;
}

}  // namespace rssep
