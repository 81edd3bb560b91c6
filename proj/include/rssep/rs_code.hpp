#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rssep/field.hpp"
#include "rssep/poly.hpp"
#include "rssep/rational.hpp"

namespace rssep {

/// Parameters of an [n, k, d] Reed-Solomon code: evaluations of all
/// polynomials of degree < k at the fixed point sequence of the mode.
/// MDS, so d = n - k + 1 always.
struct CodeParams {
    FieldPtr field;
    PointMode mode = PointMode::Full;
    std::uint32_t k = 0;
    std::uint32_t n = 0;
    std::uint32_t d = 0;
};

CodeParams make_code(const FieldPtr& field, PointMode mode, std::uint32_t k);

/// Largest code with the requested minimum distance: k = n - d + 1.
CodeParams params_for_distance(const FieldPtr& field, PointMode mode, std::uint32_t d);

/// Codeword plus, when known, the polynomial it evaluates.
struct Codeword {
    std::vector<FieldElement> symbols;
    std::optional<Poly> source;
};

/// Evaluation at the mode's standard point sequence; deg(f) <= k - 1.
Codeword encode(const CodeParams& params, const Poly& f);

/// Same, at an explicit point sequence (length n, distinct points). Used to
/// reproduce vectors whose published evaluation order differs from the
/// standard one.
Codeword encode_at(const CodeParams& params, const Poly& f,
                   const std::vector<FieldElement>& points);

std::uint32_t hamming(const Codeword& a, const Codeword& b);

/// n - n/c^2: distances strictly above it give a c-TA code (for q > c).
Rational ta_threshold(std::uint32_t n, std::uint32_t c);
/// n - n/c: distances strictly above it give a c-frameproof code.
Rational fp_threshold(std::uint32_t n, std::uint32_t c);

}  // namespace rssep
