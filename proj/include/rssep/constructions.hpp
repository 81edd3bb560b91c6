#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rssep/oracles.hpp"
#include "rssep/rs_code.hpp"

namespace rssep {

enum class TheoremId {
    FpBlock,        // block partition, coalition sizes c, d = floor(q - q/c)
    Q11C2,          // the hand-solved [11,4,8] pair over GF(11)
    C2Third,        // three-block construction, c = 2, degree <= floor(q/3)+1
    C3Eighth,       // Bezout construction, c = 3, degree <= 2*floor(q/8)+1
    Gen2cm1,        // (2c-1)-block construction, degree <= floor(q/(2c-1))+1
    M2Div,          // multiplicative cosets, m^2 | q-1, non-extended code
    LinCilleruelo,  // linear polynomials via difference cover of powers
    LinFactor,      // linear polynomials via coprime factorization of q-1
};

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);

/// Two disjoint coalitions of polynomials whose encodings are not separated,
/// plus the data needed to re-verify that claim from scratch.
struct WitnessPair {
    TheoremId theorem = TheoremId::FpBlock;
    FieldPtr field;
    PointMode mode = PointMode::Full;
    std::uint32_t c = 0;
    std::vector<Poly> U, V;
    std::uint32_t max_degree = 0;  // achieved max degree over U and V
    std::uint32_t claimed_d = 0;   // n - max_degree for the containing code
    std::vector<std::vector<FieldElement>> partition;  // block data where used
    std::vector<FieldElement> points;  // evaluation order for the encodings
    nlohmann::json params;             // generator-specific extras
};

/// Smallest code containing the witness: k = max_degree + 1.
CodeParams witness_code(const WitnessPair& w);

/// Block construction for any c >= 2 with c not dividing q: the i-th seed
/// plus the vanishing polynomial of the i-th block of consecutive canonical
/// elements. Seeds default to the constants 0..c-1 and must be pairwise
/// distinct of degree <= ceil(q/c).
WitnessPair construct_fp_block(const FieldPtr& field, std::uint32_t c,
                               const std::vector<Poly>* seeds = nullptr);

/// Hand-solved pair over GF(11) in the [11,4,8] code. The eleven points
/// must be a permutation of GF(11) (default 1..10, 0); gamma1 nonzero scales
/// the first cubic. Fails when the 2x2 matching system at the last two
/// points is singular.
WitnessPair construct_q11_c2(const FieldPtr& field,
                             const std::vector<FieldElement>* points = nullptr,
                             std::optional<FieldElement> gamma1 = std::nullopt);

/// Three-block construction for c = 2, any q >= 3.
WitnessPair construct_c2_third(const FieldPtr& field);

/// Eight-block Bezout construction for c = 3, any q >= 8.
WitnessPair construct_c3_eighth(const FieldPtr& field);

/// (2c-1)-block construction for any c >= 2 with q >= 2c-1.
WitnessPair construct_gen_2cm1(const FieldPtr& field, std::uint32_t c);

/// Multiplicative construction for m^2 | q-1, c >= m, on the non-extended
/// code: constants against scaled monomials of degree (q-1)/m^2. Emits the
/// minimal witness of m polynomials per side.
WitnessPair construct_m2_div(const FieldPtr& field, std::uint32_t m, std::uint32_t c);

/// Linear construction with c = ceil(2*q^{3/4}) from the difference cover of
/// primitive-element powers; the cover is verified directly, never assumed.
WitnessPair construct_lin_cilleruelo(const FieldPtr& field);

/// Linear construction from a coprime factorization q-1 = r*s; coalition
/// sizes s and r+1, zero polynomial covering the point 0.
WitnessPair construct_lin_factor(const FieldPtr& field, std::uint32_t r, std::uint32_t s);

/// The factor split (r, s) selected for square q = h^2: the odd one of
/// (h-1)/2, (h+1)/2 paired with twice the other (for odd h), or the
/// consecutive odd pair (h-1, h+1) in characteristic 2. Keeps
/// c = max(s, r+1) within 2*(sqrt(q)+1).
std::pair<std::uint32_t, std::uint32_t> even_power_factor_split(const FieldPtr& field);

/// Extends both coalitions to exactly target_c members using fresh constant
/// polynomials (non-separation is monotone under disjoint augmentation).
WitnessPair pad_witness(WitnessPair w, std::uint32_t target_c);

/// Framing demonstration on the block construction: every seed is the
/// monomial x, so the coalition of block polynomials forges the codeword of
/// x positionwise. Not a witness pair (the seeds coincide by design).
struct FrameproofDemo {
    Poly framed;
    std::vector<Poly> framers;
    std::vector<std::vector<FieldElement>> partition;
};
FrameproofDemo construct_frameproof_demo(const FieldPtr& field, std::uint32_t c);

struct ClauseResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    bool pass = false;
    std::vector<ClauseResult> clauses;
    std::uint32_t n = 0;
    Rational ta_thresh{0, 1}, fp_thresh{0, 1};
    std::vector<Codeword> U_words, V_words;
    PirateWord pirate;

    const ClauseResult* first_failure() const {
        for (const auto& cl : clauses)
            if (!cl.pass) return &cl;
        return nullptr;
    }
};

/// Re-derives everything a witness asserts: distinct polynomials, disjoint
/// coalitions, degree budget, non-separation, pirate double membership and
/// the identifiable-parent certificate. With pad_to_c the coalitions are
/// first padded to exactly c members.
VerifyReport verify_witness(const WitnessPair& w, bool pad_to_c = false);

}  // namespace rssep
