#include "rssep/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rssep {

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::FpBlock: return "fp_block";
        case TheoremId::Q11C2: return "q11_c2";
        case TheoremId::C2Third: return "c2_third";
        case TheoremId::C3Eighth: return "c3_eighth";
        case TheoremId::Gen2cm1: return "gen_2cm1";
        case TheoremId::M2Div: return "m2_div";
        case TheoremId::LinCilleruelo: return "lin_cilleruelo";
        case TheoremId::LinFactor: return "lin_factor";
    }
    throw Error(errc::internal, "unknown theorem id");
}

TheoremId theorem_from_name(const std::string& name) {
    if (name == "fp_block") return TheoremId::FpBlock;
    if (name == "q11_c2") return TheoremId::Q11C2;
    if (name == "c2_third") return TheoremId::C2Third;
    if (name == "c3_eighth") return TheoremId::C3Eighth;
    if (name == "gen_2cm1") return TheoremId::Gen2cm1;
    if (name == "m2_div") return TheoremId::M2Div;
    if (name == "lin_cilleruelo") return TheoremId::LinCilleruelo;
    if (name == "lin_factor") return TheoremId::LinFactor;
    throw Error(errc::parse, "unknown theorem id: " + name);
}

CodeParams witness_code(const WitnessPair& w) {
    return make_code(w.field, w.mode, w.max_degree + 1);
}

namespace {

// Consecutive slices of the canonical order, larger blocks first:
// `big` blocks of size l+1 followed by the rest of size l.
std::vector<std::vector<FieldElement>> consecutive_blocks(const FieldPtr& field,
                                                          std::uint32_t count,
                                                          std::uint32_t l,
                                                          std::uint32_t big) {
    const auto order = field->canonical_order();
    std::vector<std::vector<FieldElement>> blocks;
    blocks.reserve(count);
    std::size_t at = 0;
    for (std::uint32_t i = 0; i < count; ++i) {
        const std::uint32_t size = i < big ? l + 1 : l;
        blocks.emplace_back(order.begin() + at, order.begin() + at + size);
        at += size;
    }
    return blocks;
}

std::uint32_t finalize_degrees(WitnessPair& w) {
    int max_deg = 0;
    for (const auto& f : w.U) max_deg = std::max(max_deg, f.degree());
    for (const auto& g : w.V) max_deg = std::max(max_deg, g.degree());
    w.max_degree = static_cast<std::uint32_t>(max_deg);
    const std::uint32_t n =
        w.mode == PointMode::Full ? w.field->size() : w.field->size() - 1;
    w.claimed_d = n - w.max_degree;
    if (w.points.empty()) w.points = w.field->eval_points(w.mode);
    return w.max_degree;
}

// Small-block instances can make distinct indices produce the same
// polynomial (e.g. singleton blocks turn every difference p_{c+i} - p_i into
// the same constant). Multiplicity never affects column sets, so dropping
// repeats keeps the coalition pair non-separated while restoring the
// pairwise-distinct invariant. Cross-family collisions are not repairable
// this way and stay fatal.
std::size_t dedup_family(std::vector<Poly>& polys) {
    std::vector<Poly> kept;
    for (const auto& f : polys) {
        bool seen = false;
        for (const auto& g : kept) seen = seen || f == g;
        if (!seen) kept.push_back(f);
    }
    const std::size_t removed = polys.size() - kept.size();
    polys = std::move(kept);
    return removed;
}

void require_families_distinct(const WitnessPair& w, const char* who) {
    auto all = w.U;
    all.insert(all.end(), w.V.begin(), w.V.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j])
                throw Error(errc::internal,
                            std::string(who) + ": generated polynomials collide (" +
                                to_text(all[i]) + ")");
}

void assert_budget(const WitnessPair& w, std::uint32_t bound, const char* who) {
    if (w.max_degree > bound)
        throw Error(errc::internal, std::string(who) + ": degree budget exceeded (" +
                                        std::to_string(w.max_degree) + " > " +
                                        std::to_string(bound) + ")");
}

}  // namespace

WitnessPair construct_fp_block(const FieldPtr& field, std::uint32_t c,
                               const std::vector<Poly>* seeds) {
    const std::uint32_t q = field->size();
    if (c < 2) throw Error(errc::hypothesis, "c must be at least 2");
    if (q % c == 0)
        throw Error(errc::hypothesis,
                    "c divides q: that regime has its own (additive) construction and is "
                    "rejected here");
    const std::uint32_t l = q / c;
    const std::uint32_t r = q % c;  // > 0 here
    const std::uint32_t degree_cap = l + 1;  // = ceil(q/c)

    std::vector<Poly> f;
    if (seeds) {
        f = *seeds;
        if (f.size() != c)
            throw Error(errc::invalid_input, "expected exactly c seed polynomials");
        for (const auto& s : f) {
            if (s.field().get() != field.get())
                throw Error(errc::invalid_input, "seed from a different field context");
            if (s.degree() > static_cast<int>(degree_cap))
                throw Error(errc::invalid_input, "seed degree exceeds ceil(q/c)");
        }
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                if (f[i] == f[j]) throw Error(errc::invalid_input, "seeds are not distinct");
    } else {
        if (c > q)
            throw Error(errc::hypothesis,
                        "default constant seeds require c <= q");
        for (std::uint32_t i = 0; i < c; ++i)
            f.push_back(Poly::constant(field, field->element(i)));
    }

    WitnessPair w;
    w.theorem = TheoremId::FpBlock;
    w.field = field;
    w.mode = PointMode::Full;
    w.c = c;
    w.partition = consecutive_blocks(field, c, l, r);
    w.U = f;
    for (std::uint32_t i = 0; i < c; ++i)
        w.V.push_back(f[i] + from_roots(field, w.partition[i]));
    const std::size_t dropped = dedup_family(w.V);
    finalize_degrees(w);
    assert_budget(w, degree_cap, "fp_block");
    require_families_distinct(w, "fp_block");
    if (dropped) w.params["deduplicated"] = dropped;
    w.params["l"] = l;
    w.params["r"] = r;
    w.params["stated_d"] = q - degree_cap;
    return w;
}

WitnessPair construct_q11_c2(const FieldPtr& field,
                             const std::vector<FieldElement>* points,
                             std::optional<FieldElement> gamma1) {
    if (field->size() != 11 || field->extension_degree() != 1)
        throw Error(errc::hypothesis, "this construction is specific to GF(11)");

    std::vector<FieldElement> pts;
    if (points) {
        pts = *points;
    } else {
        for (std::uint32_t v = 1; v <= 10; ++v) pts.push_back(field->element(v));
        pts.push_back(field->zero());
    }
    if (pts.size() != 11)
        throw Error(errc::invalid_input, "exactly eleven points are required");
    std::set<std::uint32_t> seen;
    for (const auto& pt : pts) {
        if (pt.field != field.get())
            throw Error(errc::invalid_input, "point from a different field context");
        if (!seen.insert(pt.value).second)
            throw Error(errc::invalid_input, "points must be a permutation of GF(11)");
    }
    const FieldElement g1_scale = gamma1.value_or(field->one());
    if (g1_scale.field != field.get() || g1_scale.value == 0)
        throw Error(errc::invalid_input, "gamma1 must be a nonzero element of GF(11)");

    const Poly g1 =
        from_roots(field, {pts[0], pts[1], pts[2]}).scaled(g1_scale);
    std::vector<std::pair<FieldElement, FieldElement>> interp_pts;
    for (int i = 3; i < 6; ++i) interp_pts.push_back({pts[i], g1.eval(pts[i])});
    const Poly L = interpolate(field, interp_pts);
    const Poly A = from_roots(field, {pts[3], pts[4], pts[5]});
    const Poly B = from_roots(field, {pts[6], pts[7], pts[8]});

    const FieldElement a10 = pts[9], a11 = pts[10];
    const FieldElement A10 = A.eval(a10), A11 = A.eval(a11);
    const FieldElement B10 = B.eval(a10), B11 = B.eval(a11);
    const FieldElement det_lhs = field->mul(B10, A11);
    const FieldElement det_rhs = field->mul(B11, A10);
    if (det_lhs == det_rhs)
        throw Error(errc::degenerate,
                    "the two matching products coincide; the 2x2 system for (phi2, gamma2) "
                    "is singular for this point assignment");
    const FieldElement det = field->sub(det_lhs, det_rhs);
    const FieldElement L10 = L.eval(a10), L11 = L.eval(a11);
    const FieldElement phi2 =
        field->div(field->sub(field->mul(L10, B11), field->mul(L11, B10)), det);
    const FieldElement gamma2 =
        field->div(field->sub(field->mul(A11, L10), field->mul(A10, L11)), det);

    const Poly f1 = Poly::zero(field);
    const Poly f2 = L + A.scaled(phi2);
    const Poly g2 = B.scaled(gamma2);
    if (f2.eval(a10) != g2.eval(a10) || f2.eval(a11) != g2.eval(a11))
        throw Error(errc::internal, "q11_c2: matching conditions failed after solving");
    if (gamma2.value == 0)
        throw Error(errc::degenerate, "gamma2 = 0 collapses g2 onto the zero polynomial");

    WitnessPair w;
    w.theorem = TheoremId::Q11C2;
    w.field = field;
    w.mode = PointMode::Full;
    w.c = 2;
    w.U = {f1, f2};
    w.V = {g1, g2};
    w.points = pts;
    w.partition = {{pts[0], pts[1], pts[2]},
                   {pts[3], pts[4], pts[5]},
                   {pts[6], pts[7], pts[8]},
                   {a10, a11}};
    finalize_degrees(w);
    assert_budget(w, 3, "q11_c2");
    require_families_distinct(w, "q11_c2");
    w.params["gamma1"] = field->to_text(g1_scale);
    w.params["phi2"] = field->to_text(phi2);
    w.params["gamma2"] = field->to_text(gamma2);
    w.params["det_lhs"] = field->to_text(det_lhs);
    w.params["det_rhs"] = field->to_text(det_rhs);
    w.params["stated_d"] = 8;
    return w;
}

WitnessPair construct_c2_third(const FieldPtr& field) {
    const std::uint32_t q = field->size();
    if (q < 3) throw Error(errc::hypothesis, "q must be at least 3");
    const std::uint32_t l = q / 3;
    const std::uint32_t r = q % 3;

    WitnessPair w;
    w.theorem = TheoremId::C2Third;
    w.field = field;
    w.mode = PointMode::Full;
    w.c = 2;
    w.partition = consecutive_blocks(field, 3, l, r);  // A11, A12, A21
    const Poly p11 = from_roots(field, w.partition[0]);
    const Poly p12 = from_roots(field, w.partition[1]);
    const Poly p21 = from_roots(field, w.partition[2]);
    w.U = {Poly::zero(field), p21 - p11};
    w.V = {-p11, -p12};
    finalize_degrees(w);
    assert_budget(w, l + 1, "c2_third");
    require_families_distinct(w, "c2_third");
    w.params["l"] = l;
    w.params["r"] = r;
    w.params["stated_d"] = q - l;
    return w;
}

WitnessPair construct_c3_eighth(const FieldPtr& field) {
    const std::uint32_t q = field->size();
    if (q < 8) throw Error(errc::hypothesis, "q must be at least 8");
    const std::uint32_t l = q / 8;
    const std::uint32_t r = q % 8;

    // Slices are consecutive with the r larger ones first; roles are filled
    // in an order that keeps deg(u31) + deg(u21) at least as large as the
    // degree of the cross Bezout target, so both target calls stay inside
    // their degree preconditions for every r.
    enum Role { U31, U21, U32, U22, U33, U23, U12, U13 };
    static constexpr const char* role_names[8] = {"u31", "u21", "u32", "u22",
                                                  "u33", "u23", "u12", "u13"};
    const auto slices = consecutive_blocks(field, 8, l, r);
    std::vector<std::vector<FieldElement>> block(8);
    for (int t = 0; t < 8; ++t) block[t] = slices[t];  // slice t -> Role(t)

    auto u = [&](Role role) { return from_roots(field, block[role]); };
    const Poly u31 = u(U31), u21 = u(U21), u32 = u(U32), u22 = u(U22);
    const Poly u33 = u(U33), u23 = u(U23), u12 = u(U12), u13 = u(U13);

    const BezoutPair b33 = bezout_min(u33, u32);  // v33*u33 - v32*u32 = 1
    const Poly v33 = b33.a, v32 = b33.b;
    const BezoutPair b23 = bezout_min(u23, u22);  // v23*u23 - v22*u22 = 1
    const Poly v23 = b23.a, v22 = b23.b;

    const Poly z1 = v33 * u33 - v23 * u23;
    const BezoutPair b31 = bezout_target(u31, u21, z1);  // v31*u31 - v21*u21 = z1
    const Poly v31 = b31.a, v21 = b31.b;

    const Poly z2 = v33 * u33 - v32 * u32;  // equals 1 by the first equation
    const BezoutPair b13 = bezout_target(u13, u12, z2);  // v13*u13 - v12*u12 = z2
    const Poly v13 = b13.a, v12 = b13.b;

    const Poly v11 = v33 * u33 - v31 * u31 - v13 * u13;
    const Poly u11 = -Poly::constant(field, field->one());

    const Poly g1 = -(v31 * u31);
    const Poly g2 = -(v32 * u32);
    const Poly g3 = -(v33 * u33);
    const Poly f1 = g1 + v11 * u11;
    const Poly f2 = g2 + v22 * u22;
    const Poly f3 = g3 + v33 * u33;  // the zero polynomial

    WitnessPair w;
    w.theorem = TheoremId::C3Eighth;
    w.field = field;
    w.mode = PointMode::Full;
    w.c = 3;
    w.U = {f1, f2, f3};
    w.V = {g1, g2, g3};
    w.partition = block;
    finalize_degrees(w);
    assert_budget(w, 2 * l + 1, "c3_eighth");
    require_families_distinct(w, "c3_eighth");

    // every field point must be a root of some f_i - g_j
    for (const auto& alpha : field->canonical_order()) {
        bool hit = false;
        for (const auto& fi : w.U) {
            for (const auto& gj : w.V)
                if (fi.eval(alpha) == gj.eval(alpha)) {
                    hit = true;
                    break;
                }
            if (hit) break;
        }
        if (!hit)
            throw Error(errc::internal,
                        "c3_eighth: point " + field->to_text(alpha) +
                            " is not covered by any f_i - g_j");
    }

    w.params["l"] = l;
    w.params["r"] = r;
    for (int t = 0; t < 8; ++t) w.params["block_roles"].push_back(role_names[t]);
    w.params["stated_d"] = q - 2 * l;  // the regime bound d < q - 2*floor(q/8) is strict
    return w;
}

WitnessPair construct_gen_2cm1(const FieldPtr& field, std::uint32_t c) {
    const std::uint32_t q = field->size();
    if (c < 2) throw Error(errc::hypothesis, "c must be at least 2");
    if (q < 2 * c - 1)
        throw Error(errc::hypothesis,
                    "q < 2c-1: not enough field elements for the block partition");
    const std::uint32_t blocks = 2 * c - 1;
    const std::uint32_t l = q / blocks;
    const std::uint32_t r = q % blocks;

    WitnessPair w;
    w.theorem = TheoremId::Gen2cm1;
    w.field = field;
    w.mode = PointMode::Full;
    w.c = c;
    w.partition = consecutive_blocks(field, blocks, l, r);
    std::vector<Poly> p;
    p.reserve(blocks);
    for (const auto& blk : w.partition) p.push_back(from_roots(field, blk));

    w.U.push_back(Poly::zero(field));
    for (std::uint32_t i = 1; i <= c - 1; ++i) w.U.push_back(p[c + i - 1] - p[i - 1]);
    for (std::uint32_t i = 1; i <= c; ++i) w.V.push_back(-p[i - 1]);
    const std::size_t dropped = dedup_family(w.U);
    finalize_degrees(w);
    assert_budget(w, l + 1, "gen_2cm1");
    require_families_distinct(w, "gen_2cm1");
    if (dropped) w.params["deduplicated"] = dropped;
    w.params["l"] = l;
    w.params["r"] = r;
    w.params["stated_d"] = q - l;  // the regime bound d < q - floor(q/(2c-1)) is strict
    return w;
}

WitnessPair construct_m2_div(const FieldPtr& field, std::uint32_t m, std::uint32_t c) {
    const std::uint32_t q = field->size();
    if (m < 2) throw Error(errc::hypothesis, "m must be at least 2");
    if ((q - 1) % (m * m) != 0)
        throw Error(errc::hypothesis, "m^2 does not divide q-1");
    if (c < m) throw Error(errc::hypothesis, "c must be at least m");

    const std::uint32_t e2 = (q - 1) / (m * m);  // degree of the monomials
    const std::uint32_t e1 = (q - 1) / m;
    const FieldElement alpha = field->primitive();

    WitnessPair w;
    w.theorem = TheoremId::M2Div;
    w.field = field;
    w.mode = PointMode::NonExtended;
    w.c = c;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::vector<FieldElement> mono(e2 + 1, field->zero());
        mono[e2] = field->pow_signed(alpha, -static_cast<std::int64_t>(i) * e1);
        w.U.push_back(Poly::from_coefficients(field, std::move(mono)));
        w.V.push_back(Poly::constant(
            field, field->pow(alpha, static_cast<std::uint64_t>(i) * e2)));
    }
    finalize_degrees(w);
    if (w.max_degree != e2)
        throw Error(errc::internal, "m2_div: expected monomial degree (q-1)/m^2");
    require_families_distinct(w, "m2_div");
    w.params["m"] = m;
    w.params["exponent"] = e2;
    w.params["stated_d"] = q - e2;  // the source regime counts one above n - max_degree here
    return w;
}

WitnessPair construct_lin_cilleruelo(const FieldPtr& field) {
    const std::uint32_t q = field->size();
    // c = ceil(2*q^{3/4}) computed exactly: smallest c with c^4 >= 16 q^3.
    const std::uint64_t q3 = 16ull * q * q * q;
    std::uint64_t c = 1;
    while (c * c * c * c < q3) ++c;
    if (c > q - 1)
        throw Error(errc::hypothesis,
                    "2*q^(3/4) exceeds q-1; the hypothesis cannot be met at this field size");

    const FieldElement alpha = field->primitive();
    std::vector<FieldElement> powers;  // alpha^1 .. alpha^c
    powers.reserve(c);
    FieldElement x = alpha;
    for (std::uint64_t i = 0; i < c; ++i) {
        powers.push_back(x);
        x = field->mul(x, alpha);
    }

    // The difference cover is verified outright; a gap here would contradict
    // the cover theorem and must surface loudly.
    std::vector<std::uint8_t> covered(q, 0);
    std::uint32_t count = 0;
    for (std::uint64_t i = 0; i < c && count < q; ++i)
        for (std::uint64_t j = 0; j < c; ++j) {
            const std::uint32_t d = field->sub(powers[i], powers[j]).value;
            if (!covered[d]) {
                covered[d] = 1;
                if (++count == q) break;
            }
        }
    if (count != q)
        throw Error(errc::coverage,
                    "difference cover of primitive-element powers misses " +
                        std::to_string(q - count) + " field values; this contradicts the "
                        "cover theorem for this range");

    WitnessPair w;
    w.theorem = TheoremId::LinCilleruelo;
    w.field = field;
    w.mode = PointMode::Full;
    w.c = static_cast<std::uint32_t>(c);
    for (const auto& a : powers) {
        w.U.push_back(Poly::from_coefficients(field, {field->neg(a), field->one()}));
        w.V.push_back(Poly::constant(field, field->neg(a)));
    }
    finalize_degrees(w);
    assert_budget(w, 1, "lin_cilleruelo");
    require_families_distinct(w, "lin_cilleruelo");
    w.params["exponent_lo"] = 1;
    w.params["exponent_hi"] = c;
    w.params["stated_d"] = q - 1;
    return w;
}

WitnessPair construct_lin_factor(const FieldPtr& field, std::uint32_t r, std::uint32_t s) {
    const std::uint32_t q = field->size();
    if (r < 1 || s < 1) throw Error(errc::hypothesis, "r and s must be positive");
    if (static_cast<std::uint64_t>(r) * s != q - 1)
        throw Error(errc::hypothesis, "r*s must equal q-1");
    if (std::gcd(r, s) != 1) throw Error(errc::hypothesis, "r and s must be coprime");

    const FieldElement alpha = field->primitive();
    WitnessPair w;
    w.theorem = TheoremId::LinFactor;
    w.field = field;
    w.mode = PointMode::Full;
    w.c = std::max(s, r + 1);
    for (std::uint32_t i = 0; i < s; ++i) {
        const FieldElement scale = field->pow(alpha, static_cast<std::uint64_t>(r) * i);
        w.U.push_back(Poly::from_coefficients(field, {field->zero(), scale}));
    }
    for (std::uint32_t j = 0; j < r; ++j)
        w.V.push_back(Poly::constant(field, field->pow(alpha, static_cast<std::uint64_t>(s) * j)));
    w.V.push_back(Poly::zero(field));  // covers the point 0: every f_i(0) = 0

    // the q-1 roots alpha^{s j - r i} of f_i - g_j must be pairwise distinct
    std::set<std::uint32_t> roots;
    for (std::uint32_t i = 0; i < s; ++i)
        for (std::uint32_t j = 0; j < r; ++j) {
            const std::int64_t e = static_cast<std::int64_t>(s) * j -
                                   static_cast<std::int64_t>(r) * i;
            roots.insert(field->pow_signed(alpha, e).value);
        }
    if (roots.size() != q - 1)
        throw Error(errc::internal, "lin_factor: quotient roots are not pairwise distinct");

    finalize_degrees(w);
    assert_budget(w, 1, "lin_factor");
    require_families_distinct(w, "lin_factor");
    w.params["r"] = r;
    w.params["s"] = s;
    w.params["stated_d"] = q - 1;
    return w;
}

std::pair<std::uint32_t, std::uint32_t> even_power_factor_split(const FieldPtr& field) {
    const std::uint32_t q = field->size();
    if (field->extension_degree() % 2 != 0)
        throw Error(errc::hypothesis, "the factor-split rule needs q to be an even power");
    std::uint32_t h = 1;
    while (h * h < q) ++h;
    if (h * h != q) throw Error(errc::internal, "even power field size is not a square");

    std::uint32_t r, s;
    if (field->characteristic() == 2) {
        r = h - 1;
        s = h + 1;
    } else if (((h - 1) / 2) % 2 == 1) {
        r = (h - 1) / 2;
        s = 2 * (h + 1);
    } else {
        r = (h + 1) / 2;
        s = 2 * (h - 1);
    }
    if (static_cast<std::uint64_t>(r) * s != q - 1 || std::gcd(r, s) != 1)
        throw Error(errc::internal, "even-power split is not a coprime factorization");
    return {r, s};
}

WitnessPair pad_witness(WitnessPair w, std::uint32_t target_c) {
    if (target_c < w.U.size() || target_c < w.V.size())
        throw Error(errc::invalid_input, "cannot pad below the current coalition sizes");
    auto used = [&](const Poly& cand) {
        for (const auto& f : w.U)
            if (f == cand) return true;
        for (const auto& g : w.V)
            if (g == cand) return true;
        return false;
    };
    std::uint32_t next = 0;
    auto fresh_constant = [&]() {
        while (next < w.field->size()) {
            Poly cand = Poly::constant(w.field, w.field->element(next));
            ++next;
            if (!used(cand)) return cand;
        }
        throw Error(errc::invalid_input, "not enough fresh constants to pad the coalitions");
    };
    while (w.U.size() < target_c) w.U.push_back(fresh_constant());
    while (w.V.size() < target_c) w.V.push_back(fresh_constant());
    w.c = target_c;
    w.params["padded_to"] = target_c;
    return w;
}

FrameproofDemo construct_frameproof_demo(const FieldPtr& field, std::uint32_t c) {
    const std::uint32_t q = field->size();
    if (c < 2) throw Error(errc::hypothesis, "c must be at least 2");
    if (q % c == 0)
        throw Error(errc::hypothesis,
                    "c divides q: that regime has its own (additive) construction and is "
                    "rejected here");
    const std::uint32_t l = q / c;
    const std::uint32_t r = q % c;

    FrameproofDemo demo{Poly::identity(field), {}, consecutive_blocks(field, c, l, r)};
    for (std::uint32_t i = 0; i < c; ++i)
        demo.framers.push_back(demo.framed + from_roots(field, demo.partition[i]));
    return demo;
}

VerifyReport verify_witness(const WitnessPair& input, bool pad_to_c) {
    const WitnessPair w = pad_to_c ? pad_witness(input, input.c) : input;

    VerifyReport rep;
    rep.n = w.mode == PointMode::Full ? w.field->size() : w.field->size() - 1;
    rep.ta_thresh = ta_threshold(rep.n, std::max<std::uint32_t>(w.c, 2));
    rep.fp_thresh = fp_threshold(rep.n, std::max<std::uint32_t>(w.c, 2));

    bool dead = false;  // once a clause fails, dependent clauses are not evaluated
    auto clause = [&](const char* name, auto&& body) {
        ClauseResult cl;
        cl.name = name;
        if (dead) {
            cl.pass = false;
            cl.detail = "not evaluated: an earlier clause failed";
        } else {
            try {
                std::string detail = body();
                cl.pass = true;
                cl.detail = std::move(detail);
            } catch (const Error& e) {
                cl.pass = false;
                cl.detail = e.what();
                dead = true;
            }
        }
        rep.clauses.push_back(std::move(cl));
    };
    auto fail = [](const std::string& msg) { throw Error(errc::invalid_input, msg); };

    clause("coalition_sizes", [&]() -> std::string {
        if (w.U.empty() || w.V.empty()) fail("a coalition is empty");
        if (w.U.size() > w.c || w.V.size() > w.c)
            fail("coalition size exceeds the declared c");
        return "sizes " + std::to_string(w.U.size()) + " and " + std::to_string(w.V.size());
    });

    clause("distinct_polynomials", [&]() -> std::string {
        auto all = w.U;
        all.insert(all.end(), w.V.begin(), w.V.end());
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (all[i] == all[j])
                    fail("polynomials " + std::to_string(i) + " and " + std::to_string(j) +
                         " coincide: " + to_text(all[i]));
        return {};
    });

    clause("degree_budget", [&]() -> std::string {
        for (const auto& f : w.U)
            if (f.degree() > static_cast<int>(w.max_degree))
                fail("U polynomial exceeds max_degree: " + to_text(f));
        for (const auto& g : w.V)
            if (g.degree() > static_cast<int>(w.max_degree))
                fail("V polynomial exceeds max_degree: " + to_text(g));
        if (w.claimed_d != rep.n - w.max_degree)
            fail("claimed_d is not n - max_degree");
        return "max degree " + std::to_string(w.max_degree);
    });

    Coalition U, V;
    clause("points_valid", [&]() -> std::string {
        if (w.points.size() != rep.n) fail("point sequence length does not match the mode");
        if (w.mode == PointMode::NonExtended)
            for (const auto& pt : w.points)
                if (pt.value == 0) fail("non-extended mode cannot evaluate at 0");
        const CodeParams code = witness_code(w);
        for (const auto& f : w.U) U.members.push_back(encode_at(code, f, w.points));
        for (const auto& g : w.V) V.members.push_back(encode_at(code, g, w.points));
        return {};
    });

    clause("disjoint_coalitions", [&]() -> std::string {
        for (const auto& u : U.members)
            for (const auto& v : V.members)
                if (hamming(u, v) == 0) fail("a codeword appears in both coalitions");
        return {};
    });

    SeparationCheck sep;
    clause("not_separated", [&]() -> std::string {
        sep = are_separated(U, V);
        if (sep.separated)
            fail("coalitions are separated at position " +
                 std::to_string(sep.witness_position + 1));
        return "every position shares a symbol";
    });

    clause("pirate_membership", [&]() -> std::string {
        rep.pirate = forge_pirate(U, V);
        if (!in_descendant(rep.pirate, U)) fail("pirate word is not a descendant of U");
        if (!in_descendant(rep.pirate, V)) fail("pirate word is not a descendant of V");
        return {};
    });

    clause("ipp_certificate", [&]() -> std::string {
        const IppCheckResult ipp = ipp_violation_check(U, V, rep.pirate);
        if (!ipp.violated) fail("certificate did not validate");
        return "two disjoint coalitions of size <= " + std::to_string(ipp.c) +
               " share a descendant";
    });

    rep.U_words = U.members;
    rep.V_words = V.members;
    rep.pass = true;
    for (const auto& cl : rep.clauses) rep.pass = rep.pass && cl.pass;
    return rep;
}

}  // namespace rssep
