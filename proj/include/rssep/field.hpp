#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rssep/error.hpp"

namespace rssep {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Element of GF(p^s). The value packs the coefficient vector
/// (c0, c1, ..., c_{s-1}) base p, low-degree digit least significant; for
/// s = 1 it is the residue itself. Packed values double as the canonical
/// element order, so comparing values compares canonical positions.
///
/// Elements are tied to the Field that created them; mixing elements from
/// different Field instances in one operation throws.
struct FieldElement {
    std::uint32_t value = 0;
    const Field* field = nullptr;
};

bool operator==(FieldElement a, FieldElement b);
inline bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }
FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a, FieldElement b);
FieldElement operator*(FieldElement a, FieldElement b);
FieldElement operator/(FieldElement a, FieldElement b);
FieldElement operator-(FieldElement a);

/// Evaluation point sequences: Full is (0, 1, a, a^2, ..., a^{q-2}) of
/// length q; NonExtended drops the zero, length q-1.
enum class PointMode { Full, NonExtended };

const char* point_mode_name(PointMode mode);
PointMode point_mode_from_name(const std::string& name);

/// Immutable GF(p^s) context: modulus, primitive element, arithmetic.
/// Construction is deterministic for a given (p, s): the modulus is the
/// first monic irreducible of degree s in low-degree-first lexicographic
/// order, and the primitive element is the first element in canonical order
/// with multiplicative order q-1. Safe to share across threads.
class Field : public std::enable_shared_from_this<Field> {
public:
    static constexpr std::uint64_t kMaxSize = 1ull << 16;

    static FieldPtr make(std::uint32_t p, std::uint32_t s);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t extension_degree() const { return s_; }
    std::uint32_t size() const { return q_; }

    /// Modulus coefficients, constant term first, monic of degree s.
    /// Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {0, this}; }
    FieldElement one() const { return {1 % q_, this}; }
    FieldElement primitive() const { return {primitive_, this}; }

    FieldElement element(std::uint32_t packed) const;
    FieldElement from_coeffs(const std::vector<std::uint32_t>& digits) const;
    std::vector<std::uint32_t> coeffs(FieldElement a) const;

    bool is_zero(FieldElement a) const { return check(a).value == 0; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    /// a^e for signed e, reducing e mod (q-1); requires a != 0.
    FieldElement pow_signed(FieldElement a, std::int64_t e) const;

    std::uint64_t multiplicative_order(FieldElement a) const;

    /// All q elements in canonical (packed-value) order.
    std::vector<FieldElement> canonical_order() const;
    std::vector<FieldElement> eval_points(PointMode mode) const;

    /// "7" for prime fields, "[c0,c1,...]" for extensions.
    std::string to_text(FieldElement a) const;

private:
    Field() = default;

    FieldElement check(FieldElement a) const;
    void check_pair(FieldElement a, FieldElement b) const;

    std::uint32_t p_ = 0;
    std::uint32_t s_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t primitive_ = 0;
    std::vector<std::uint32_t> modulus_;          // low-first, size s+1; empty for s == 1
    std::vector<std::uint32_t> prime_factors_;    // distinct prime factors of q-1
};

}  // namespace rssep
