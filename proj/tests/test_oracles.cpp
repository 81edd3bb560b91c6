#include <doctest.h>

#include <random>
#include <set>

#include "rssep/oracles.hpp"

using namespace rssep;

namespace {

Poly make(const FieldPtr& f, std::initializer_list<std::uint32_t> coeffs) {
    std::vector<FieldElement> v;
    for (std::uint32_t c : coeffs) v.push_back(f->element(c));
    return Poly::from_coefficients(f, std::move(v));
}

struct Q11Fixture {
    FieldPtr f = Field::make(11, 1);
    CodeParams code = make_code(f, PointMode::Full, 4);
    std::vector<FieldElement> pts;
    Coalition U, V;

    Q11Fixture() {
        for (std::uint32_t v = 1; v <= 10; ++v) pts.push_back(f->element(v));
        pts.push_back(f->zero());
        U.members = {encode_at(code, Poly::zero(f), pts),
                     encode_at(code, make(f, {9, 10, 0, 5}), pts)};
        V.members = {encode_at(code, make(f, {5, 0, 5, 1}), pts),
                     encode_at(code, make(f, {9, 7, 2, 10}), pts)};
    }

    PirateWord paper_z() const {
        PirateWord z;
        for (std::uint32_t v : {0u, 0u, 0u, 6u, 2u, 5u, 0u, 0u, 0u, 5u, 9u})
            z.symbols.push_back(f->element(v));
        return z;
    }
};

std::vector<std::uint32_t> values(const std::vector<FieldElement>& es) {
    std::vector<std::uint32_t> out;
    for (const auto& e : es) out.push_back(e.value);
    return out;
}

}  // namespace

TEST_CASE("column sets") {
    Q11Fixture fx;
    const ColumnSets cols = column_sets(fx.U);
    CHECK(values(cols[0]) == std::vector<std::uint32_t>{0, 2});

    Coalition single{{fx.U.members[1]}};
    for (const auto& col : column_sets(single)) CHECK(col.size() == 1);

    // two words equal in one position collapse that column to one symbol
    Coalition both{{encode_at(fx.code, make(fx.f, {0, 1}), fx.pts),
                    encode_at(fx.code, make(fx.f, {0, 2}), fx.pts)}};
    const ColumnSets cols2 = column_sets(both);
    CHECK(cols2[10].size() == 1);  // both vanish at the point 0
    CHECK(cols2[0].size() == 2);

    CHECK_THROWS_AS(column_sets(Coalition{}), Error);
}

TEST_CASE("descendant membership") {
    Q11Fixture fx;
    // a parent is its own descendant
    CHECK(in_descendant(PirateWord{fx.U.members[0].symbols}, fx.U));
    const PirateWord z = fx.paper_z();
    CHECK(in_descendant(z, fx.U));
    CHECK(in_descendant(z, fx.V));
    // flip one symbol to a value absent from both columns at position 1
    PirateWord bad = z;
    bad.symbols[0] = fx.f->element(4);  // U|_1 = {0,2}, V|_1 = {0,6}
    CHECK(!in_descendant(bad, fx.U));
    CHECK(!in_descendant(bad, fx.V));
    PirateWord short_z = z;
    short_z.symbols.pop_back();
    CHECK_THROWS_AS(in_descendant(short_z, fx.U), Error);
}

TEST_CASE("separation verdicts") {
    Q11Fixture fx;
    const SeparationCheck res = are_separated(fx.U, fx.V);
    CHECK(!res.separated);
    REQUIRE(res.shared.size() == 11);
    std::vector<std::uint32_t> firsts;
    for (const auto& col : res.shared) firsts.push_back(col.front().value);
    CHECK(firsts == std::vector<std::uint32_t>{0, 0, 0, 6, 2, 5, 0, 0, 0, 5, 9});

    const CodeParams k1 = make_code(fx.f, PointMode::Full, 1);
    Coalition zeros{{encode(k1, Poly::zero(fx.f))}};
    Coalition ones{{encode(k1, Poly::constant(fx.f, fx.f->one()))}};
    const SeparationCheck sep = are_separated(zeros, ones);
    CHECK(sep.separated);
    CHECK(sep.witness_position == 0);

    Coalition overlap{{fx.U.members[0], fx.V.members[0]}};
    CHECK_THROWS_AS(are_separated(fx.U, overlap), Error);
}

TEST_CASE("pirate forging") {
    Q11Fixture fx;
    const PirateWord z = forge_pirate(fx.U, fx.V);
    CHECK(values(z.symbols) ==
          std::vector<std::uint32_t>{0, 0, 0, 6, 2, 5, 0, 0, 0, 5, 9});
    CHECK(in_descendant(z, fx.U));
    CHECK(in_descendant(z, fx.V));

    const CodeParams k1 = make_code(fx.f, PointMode::Full, 1);
    Coalition zeros{{encode(k1, Poly::zero(fx.f))}};
    Coalition ones{{encode(k1, Poly::constant(fx.f, fx.f->one()))}};
    CHECK_THROWS_AS(forge_pirate(zeros, ones), Error);
}

TEST_CASE("exhaustive separation scan at tiny scale") {
    const auto f5 = Field::make(5, 1);
    // constant words: distinct constants have disjoint columns everywhere
    const SepScanResult k1 = exhaustive_sep_check(make_code(f5, PointMode::Full, 1), 2);
    CHECK(k1.all_separated);
    // d = 4 > 5 - 5/4, so the threshold promises separation; the scan agrees
    const SepScanResult k2 = exhaustive_sep_check(make_code(f5, PointMode::Full, 2), 2);
    CHECK(k2.all_separated);
    // q^k = 343 exceeds the default codeword budget
    const auto f7 = Field::make(7, 1);
    CHECK_THROWS_AS(exhaustive_sep_check(make_code(f7, PointMode::Full, 3), 2), Error);
}

TEST_CASE("serial and parallel scans agree") {
    struct Case {
        std::uint32_t q, k, c;
    };
    for (const Case tc : {Case{3, 2, 2}, Case{3, 3, 2}, Case{4, 2, 2}, Case{5, 2, 2},
                          Case{5, 1, 3}, Case{7, 2, 2}}) {
        std::uint32_t p = tc.q == 4 ? 2 : tc.q;
        std::uint32_t s = tc.q == 4 ? 2 : 1;
        const auto f = Field::make(p, s);
        const CodeParams code = make_code(f, PointMode::Full, tc.k);
        const SepScanResult a = exhaustive_sep_check(code, tc.c, {}, ScanMode::Serial);
        const SepScanResult b = exhaustive_sep_check(code, tc.c, {}, ScanMode::Parallel);
        REQUIRE(a.all_separated == b.all_separated);
        REQUIRE(a.U.size() == b.U.size());
        for (std::size_t i = 0; i < a.U.size(); ++i) REQUIRE(a.U[i] == b.U[i]);
        for (std::size_t i = 0; i < a.V.size(); ++i) REQUIRE(a.V[i] == b.V[i]);
    }
}

TEST_CASE("frameproof instance checks") {
    Q11Fixture fx;
    // an outsider differing from every member at every position stays safe
    const Codeword outsider = encode_at(fx.code, make(fx.f, {3}), fx.pts);
    CHECK(frameproof_check(outsider, fx.V));
    // a member of the coalition is rejected as input
    CHECK_THROWS_AS(frameproof_check(fx.V.members[0], fx.V), Error);
}

TEST_CASE("traceability violation scan on the [11,4,8] witness") {
    Q11Fixture fx;
    const PirateWord z = fx.paper_z();
    const TaCheckResult res = ta_violation_check(fx.U, z, fx.code);
    CHECK(res.violated);
    CHECK(res.insider_distance == 5);       // distance to f2's vector is 6, to 0 is 5
    CHECK(res.outsider_distance <= 5);      // g1 already ties at 5
    CHECK(res.nearest_outsider.has_value());

    // serial agrees with parallel
    const TaCheckResult ser = ta_violation_check(fx.U, z, fx.code, {}, ScanMode::Serial);
    CHECK(ser.violated == res.violated);
    CHECK(ser.outsider_distance == res.outsider_distance);
    CHECK(ser.outsider_index == res.outsider_index);

    // a single-member coalition with its own word as pirate is unbeatable
    const auto f5 = Field::make(5, 1);
    const CodeParams k1 = make_code(f5, PointMode::Full, 1);
    Coalition solo{{encode(k1, Poly::constant(f5, f5->element(2)))}};
    const TaCheckResult ok =
        ta_violation_check(solo, PirateWord{solo.members[0].symbols}, k1);
    CHECK(!ok.violated);
    CHECK(ok.insider_distance == 0);

    // pirate must be a descendant
    PirateWord not_desc = z;
    not_desc.symbols[0] = fx.f->element(4);
    CHECK_THROWS_AS(ta_violation_check(fx.U, not_desc, fx.code), Error);
}

TEST_CASE("identifiable-parent certificate") {
    Q11Fixture fx;
    const PirateWord z = forge_pirate(fx.U, fx.V);
    const IppCheckResult res = ipp_violation_check(fx.U, fx.V, z);
    CHECK(res.violated);
    CHECK(res.c == 2);

    Coalition overlap{{fx.U.members[0], fx.V.members[0]}};
    CHECK_THROWS_AS(ipp_violation_check(fx.U, overlap, z), Error);

    // z in desc(U) only is a malformed certificate
    PirateWord only_u{fx.U.members[1].symbols};
    only_u.symbols[0] = fx.f->element(0);  // still in U's columns (f1 = 0)
    if (in_descendant(only_u, fx.V) == false)
        CHECK_THROWS_AS(ipp_violation_check(fx.U, fx.V, only_u), Error);
}

TEST_CASE("separation verdicts agree with an independent set-based check") {
    // second route: plain std::set intersection per position, no shared code
    auto naive_separated = [](const Coalition& U, const Coalition& V) {
        const std::size_t n = U.members.front().symbols.size();
        for (std::size_t i = 0; i < n; ++i) {
            std::set<std::uint32_t> a, b;
            for (const auto& w : U.members) a.insert(w.symbols[i].value);
            for (const auto& w : V.members) b.insert(w.symbols[i].value);
            bool meet = false;
            for (std::uint32_t v : a) meet = meet || b.count(v);
            if (!meet) return true;
        }
        return false;
    };

    std::mt19937_64 rng(41);
    for (auto [p, s] : {std::pair<std::uint32_t, std::uint32_t>{5, 1}, {2, 3}, {7, 1}}) {
        const auto f = Field::make(p, s);
        const CodeParams code = make_code(f, PointMode::Full, 2);
        std::uniform_int_distribution<std::uint32_t> val(0, f->size() - 1);
        auto rand_word = [&]() {
            return encode(code, Poly::from_coefficients(
                                    f, {f->element(val(rng)), f->element(val(rng))}));
        };
        int compared = 0;
        while (compared < 200) {
            Coalition U{{rand_word(), rand_word()}};
            Coalition V{{rand_word(), rand_word()}};
            // regenerate until all four words are pairwise distinct
            bool ok = true;
            std::vector<const Codeword*> all = {&U.members[0], &U.members[1],
                                                &V.members[0], &V.members[1]};
            for (std::size_t i = 0; i < all.size() && ok; ++i)
                for (std::size_t j = i + 1; j < all.size() && ok; ++j)
                    ok = hamming(*all[i], *all[j]) > 0;
            if (!ok) continue;
            ++compared;
            REQUIRE(are_separated(U, V).separated == naive_separated(U, V));
        }
    }
}

TEST_CASE("non-separation is monotone under disjoint augmentation") {
    Q11Fixture fx;
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::uint32_t> val(0, 10);
    for (int round = 0; round < 25; ++round) {
        Coalition bigU = fx.U, bigV = fx.V;
        // add a random fresh cubic to each side, keeping them disjoint
        for (int tries = 0; tries < 100; ++tries) {
            const Codeword w = encode_at(
                fx.code, make(fx.f, {val(rng), val(rng), val(rng), val(rng)}), fx.pts);
            bool fresh = true;
            for (const auto& m : bigU.members) fresh = fresh && hamming(m, w) > 0;
            for (const auto& m : bigV.members) fresh = fresh && hamming(m, w) > 0;
            if (!fresh) continue;
            if (bigU.members.size() <= bigV.members.size())
                bigU.members.push_back(w);
            else
                bigV.members.push_back(w);
            if (bigU.members.size() >= 4 && bigV.members.size() >= 4) break;
        }
        CHECK(!are_separated(bigU, bigV).separated);
    }
}

TEST_CASE("exhaustive frameproof and traceability sweeps") {
    const auto f5 = Field::make(5, 1);
    const CodeParams k1 = make_code(f5, PointMode::Full, 1);
    // constants: every column set is the coalition's own values, so no
    // outsider can ever be framed and tracing always works
    CHECK(exhaustive_fp_check(k1, 2).all_frameproof);
    CHECK(exhaustive_ta_check(k1, 2).all_traceable);
    CHECK(exhaustive_fp_check(k1, 2, {}, ScanMode::Serial).all_frameproof);

    // the [3,3,1] code sits below the n - n/2 threshold, so a coalition of
    // two can frame an outsider; the sweep must find one
    const auto f3 = Field::make(3, 1);
    const CodeParams k3 = make_code(f3, PointMode::Full, 3);
    const FpScanResult framed = exhaustive_fp_check(k3, 2);
    CHECK(!framed.all_frameproof);
    const FpScanResult framed_ser = exhaustive_fp_check(k3, 2, {}, ScanMode::Serial);
    CHECK(!framed_ser.all_frameproof);
    REQUIRE(framed.framed.has_value());
    REQUIRE(framed_ser.framed.has_value());
    CHECK(*framed.framed == *framed_ser.framed);
    // and that code cannot be 2-TA either
    const TaScanResult traced = exhaustive_ta_check(k3, 2);
    CHECK(!traced.all_traceable);

    // tiny budget forces a refusal
    ScanBudget tiny;
    tiny.max_work = 10;
    CHECK_THROWS_AS(exhaustive_fp_check(k3, 2, tiny), Error);
    CHECK_THROWS_AS(exhaustive_ta_check(k3, 2, tiny), Error);
}
