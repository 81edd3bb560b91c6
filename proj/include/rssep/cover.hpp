#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rssep/field.hpp"
#include "rssep/oracles.hpp"

namespace rssep {

/// floor(2*q^{3/4}) and ceil(2*q^{3/4}) without floating point:
/// the largest b with b^4 <= 16 q^3, resp. the smallest c with c^4 >= 16 q^3.
std::uint64_t floor_two_q34(std::uint64_t q);
std::uint64_t ceil_two_q34(std::uint64_t q);

/// True iff q = p^s for a prime p and s >= 1; outputs the decomposition.
bool is_prime_power(std::uint32_t q, std::uint32_t* p_out, std::uint32_t* s_out);

struct CoverRow {
    std::uint32_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t s = 0;
    /// Smallest B such that {a^i - a^j : 0 <= i,j <= B} = F_q, for the
    /// field's canonical primitive element a. Empty for q = 2, where the
    /// difference set never leaves {0}.
    std::optional<std::uint32_t> min_bound;
    std::uint64_t stated_bound = 0;  // floor(2*q^{3/4})
    bool within_stated = false;      // min_bound <= 2*q^{3/4}, exact comparison
};

CoverRow min_cover_bound(const FieldPtr& field);

/// Rows for every prime power (or prime, if primes_only) q in [2, qmax].
/// Rows are independent, so the parallel kernel just splits them; output
/// order is by q either way.
std::vector<CoverRow> cover_sweep(std::uint32_t qmax, bool primes_only,
                                  ScanMode mode = ScanMode::Parallel);

}  // namespace rssep
