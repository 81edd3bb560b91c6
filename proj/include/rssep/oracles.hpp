#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rssep/rs_code.hpp"

namespace rssep {

/// Coalition of pairwise-distinct codewords of one code.
struct Coalition {
    std::vector<Codeword> members;
};

/// Word claimed to lie in a descendant set; checked positionwise.
struct PirateWord {
    std::vector<FieldElement> symbols;
};

/// Per-position symbol sets T|_i, each sorted in canonical order.
using ColumnSets = std::vector<std::vector<FieldElement>>;

ColumnSets column_sets(const Coalition& T);

/// True iff every position of z draws its symbol from T's column set.
bool in_descendant(const PirateWord& z, const Coalition& T);

/// Outcome of the positionwise separation test. Two coalitions are
/// separated iff some position has disjoint column sets; when they are not,
/// every position's intersection is returned as evidence.
struct SeparationCheck {
    bool separated = false;
    std::size_t witness_position = 0;  // meaningful when separated
    ColumnSets shared;                 // meaningful when not separated
};

/// Requires U, V disjoint as codeword sets (an overlap is an input error,
/// not a verdict).
SeparationCheck are_separated(const Coalition& U, const Coalition& V);

/// Common descendant of two non-separated coalitions: per position the
/// smallest shared symbol in canonical order. Errors on separated inputs.
PirateWord forge_pirate(const Coalition& U, const Coalition& V);

enum class ScanMode { Serial, Parallel };

/// Enumeration budgets for the exhaustive scans. Refusal is loud; nothing
/// is ever silently truncated or sampled.
struct ScanBudget {
    std::uint64_t max_codewords = 200;          // q^k cap for coalition-pair scans
    std::uint64_t max_pairs = 10'000'000;       // coalition-pair combination cap
    std::uint64_t max_work = 10'000'000;        // unit cap for fp/ta sweeps
    std::uint64_t max_scan_codewords = 100'000; // q^k cap for nearest-codeword scans
};

struct SepScanResult {
    bool all_separated = true;
    std::vector<Poly> U, V;       // first non-separated disjoint pair, if any
    std::uint64_t subsets = 0;    // coalitions enumerated
    std::uint64_t pairs = 0;      // pairs within budget
};

/// Enumerates every pair of disjoint coalitions of sizes 1..c over all q^k
/// codewords, in a fixed lexicographic order (size-major subsets, then pair
/// rank). Returns the first non-separated pair or all_separated. The
/// parallel kernel reduces on minimal pair rank, so its verdict and witness
/// match the serial reference regardless of thread schedule.
SepScanResult exhaustive_sep_check(const CodeParams& params, std::uint32_t c,
                                   const ScanBudget& budget = {},
                                   ScanMode mode = ScanMode::Parallel);

/// One frameproof instance: true iff u is NOT a descendant of V (i.e. some
/// position of u avoids V's column set). u must not be a member of V.
bool frameproof_check(const Codeword& u, const Coalition& V);

struct TaCheckResult {
    bool violated = false;
    std::uint32_t insider_distance = 0;
    std::uint32_t outsider_distance = 0;
    std::uint64_t outsider_index = 0;
    std::optional<Poly> nearest_outsider;
};

/// Scans the whole code for the nearest codeword outside U to the pirate z.
/// Reports VIOLATED when that outsider ties or beats the best member of U
/// (a tie already defeats "closest is guilty"). z must lie in desc(U).
TaCheckResult ta_violation_check(const Coalition& U, const PirateWord& z,
                                 const CodeParams& params,
                                 const ScanBudget& budget = {},
                                 ScanMode mode = ScanMode::Parallel);

struct IppCheckResult {
    bool violated = false;
    std::uint32_t c = 0;  // max coalition size certified
};

/// Certificate check of an identifiable-parent failure: two disjoint
/// coalitions that both produce z leave the candidate intersection empty.
/// Errors when the certificate is malformed.
IppCheckResult ipp_violation_check(const Coalition& U, const Coalition& V,
                                   const PirateWord& z);

struct FpScanResult {
    bool all_frameproof = true;
    std::vector<Poly> framers;      // first framing coalition, if any
    std::optional<Poly> framed;     // the outsider whose word it forges
    std::uint64_t checks = 0;
};

/// Exhaustive frameproof sweep: every coalition of sizes 1..c against every
/// outside codeword.
FpScanResult exhaustive_fp_check(const CodeParams& params, std::uint32_t c,
                                 const ScanBudget& budget = {},
                                 ScanMode mode = ScanMode::Parallel);

struct TaScanResult {
    bool all_traceable = true;
    std::vector<Poly> coalition;    // first violating coalition, if any
    std::vector<FieldElement> pirate;
    std::uint32_t insider_distance = 0;
    std::uint32_t outsider_distance = 0;
    std::optional<Poly> outsider;
    std::uint64_t descendants_checked = 0;
};

/// Exhaustive traceability sweep: every coalition of sizes 1..c, every
/// descendant word, nearest-codeword comparison with tie = violation.
TaScanResult exhaustive_ta_check(const CodeParams& params, std::uint32_t c,
                                 const ScanBudget& budget = {});

/// Polynomial whose coefficient tuple is the base-q expansion of index
/// (canonical element order, low coefficient least significant). The scans
/// above enumerate codewords in this order.
Poly poly_from_index(const CodeParams& params, std::uint64_t index);

}  // namespace rssep
