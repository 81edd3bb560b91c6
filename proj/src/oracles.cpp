#include "rssep/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <set>

namespace rssep {

namespace {

const Field* coalition_field(const Coalition& T) {
    if (T.members.empty()) throw Error(errc::invalid_input, "empty coalition");
    const Field* f = nullptr;
    const std::size_t n = T.members.front().symbols.size();
    for (const auto& w : T.members) {
        if (w.symbols.size() != n)
            throw Error(errc::invalid_input, "coalition members have mismatched lengths");
        for (const auto& s : w.symbols) {
            if (!f) f = s.field;
            if (s.field != f)
                throw Error(errc::invalid_input, "coalition members mix field contexts");
        }
    }
    if (!f) throw Error(errc::invalid_input, "coalition of zero-length words");
    // members must be pairwise distinct as vectors
    for (std::size_t i = 0; i < T.members.size(); ++i)
        for (std::size_t j = i + 1; j < T.members.size(); ++j) {
            bool equal = true;
            for (std::size_t t = 0; t < n && equal; ++t)
                equal = T.members[i].symbols[t].value == T.members[j].symbols[t].value;
            if (equal) throw Error(errc::invalid_input, "coalition members are not distinct");
        }
    return f;
}

void require_disjoint(const Coalition& U, const Coalition& V) {
    const std::size_t n = U.members.front().symbols.size();
    for (const auto& u : U.members)
        for (const auto& v : V.members) {
            bool equal = true;
            for (std::size_t t = 0; t < n && equal; ++t)
                equal = u.symbols[t].value == v.symbols[t].value;
            if (equal)
                throw Error(errc::invalid_input, "coalitions overlap: a codeword appears in both");
        }
}

}  // namespace

ColumnSets column_sets(const Coalition& T) {
    const Field* f = coalition_field(T);
    const std::size_t n = T.members.front().symbols.size();
    ColumnSets out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::set<std::uint32_t> values;
        for (const auto& w : T.members) values.insert(w.symbols[i].value);
        out[i].reserve(values.size());
        for (std::uint32_t v : values) out[i].push_back({v, f});
    }
    return out;
}

bool in_descendant(const PirateWord& z, const Coalition& T) {
    const Field* f = coalition_field(T);
    const std::size_t n = T.members.front().symbols.size();
    if (z.symbols.size() != n)
        throw Error(errc::invalid_input, "pirate word length does not match coalition");
    for (const auto& s : z.symbols)
        if (s.field != f)
            throw Error(errc::invalid_input, "pirate word from a different field context");
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& w : T.members)
            if (w.symbols[i].value == z.symbols[i].value) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

SeparationCheck are_separated(const Coalition& U, const Coalition& V) {
    const Field* fu = coalition_field(U);
    const Field* fv = coalition_field(V);
    if (fu != fv) throw Error(errc::invalid_input, "coalitions from different field contexts");
    const std::size_t n = U.members.front().symbols.size();
    if (V.members.front().symbols.size() != n)
        throw Error(errc::invalid_input, "coalition length mismatch");
    require_disjoint(U, V);

    const std::uint32_t q = fu->size();
    std::vector<std::uint8_t> mark(q);
    SeparationCheck res;
    res.shared.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(mark.begin(), mark.end(), 0);
        for (const auto& u : U.members) mark[u.symbols[i].value] = 1;
        std::vector<FieldElement>& inter = res.shared[i];
        for (const auto& v : V.members) {
            const std::uint32_t s = v.symbols[i].value;
            if (mark[s] == 1) {
                mark[s] = 2;  // dedupe
                inter.push_back({s, fu});
            }
        }
        if (inter.empty()) {
            res.separated = true;
            res.witness_position = i;
            res.shared.clear();
            return res;
        }
        std::sort(inter.begin(), inter.end(),
                  [](FieldElement a, FieldElement b) { return a.value < b.value; });
    }
    res.separated = false;
    return res;
}

PirateWord forge_pirate(const Coalition& U, const Coalition& V) {
    const SeparationCheck check = are_separated(U, V);
    if (check.separated)
        throw Error(errc::invalid_input,
                    "coalitions are separated (disjoint columns at position " +
                        std::to_string(check.witness_position + 1) + "); nothing to forge");
    PirateWord z;
    z.symbols.reserve(check.shared.size());
    for (const auto& inter : check.shared) z.symbols.push_back(inter.front());
    return z;
}

bool frameproof_check(const Codeword& u, const Coalition& V) {
    coalition_field(V);
    const std::size_t n = V.members.front().symbols.size();
    if (u.symbols.size() != n) throw Error(errc::invalid_input, "codeword length mismatch");
    for (const auto& v : V.members) {
        bool equal = true;
        for (std::size_t t = 0; t < n && equal; ++t)
            equal = u.symbols[t].value == v.symbols[t].value;
        if (equal)
            throw Error(errc::invalid_input, "the word to protect is a member of the coalition");
    }
    PirateWord z{u.symbols};
    return !in_descendant(z, V);
}

IppCheckResult ipp_violation_check(const Coalition& U, const Coalition& V,
                                   const PirateWord& z) {
    const Field* fu = coalition_field(U);
    const Field* fv = coalition_field(V);
    if (fu != fv)
        throw Error(errc::invalid_input, "certificate malformed: mixed field contexts");
    require_disjoint(U, V);
    if (!in_descendant(z, U))
        throw Error(errc::invalid_input, "certificate malformed: z is not a descendant of U");
    if (!in_descendant(z, V))
        throw Error(errc::invalid_input, "certificate malformed: z is not a descendant of V");
    IppCheckResult res;
    res.violated = true;
    res.c = static_cast<std::uint32_t>(std::max(U.members.size(), V.members.size()));
    return res;
}

// ---------------------------------------------------------------------------
// Exhaustive scans. A code table caches all q^k codewords as raw symbol rows;
// coalition subsets are enumerated size-major and addressed by rank so the
// parallel kernels can reduce on "first in enumeration order" exactly.
// ---------------------------------------------------------------------------

Poly poly_from_index(const CodeParams& params, std::uint64_t index) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(params.k);
    const std::uint64_t q = params.field->size();
    for (std::uint32_t i = 0; i < params.k; ++i) {
        coeffs.push_back(params.field->element(static_cast<std::uint32_t>(index % q)));
        index /= q;
    }
    return Poly::from_coefficients(params.field, std::move(coeffs));
}

namespace {

std::uint64_t code_size(const CodeParams& params) {
    std::uint64_t m = 1;
    for (std::uint32_t i = 0; i < params.k; ++i) {
        m *= params.field->size();
        if (m > (1ull << 40)) throw Error(errc::budget, "code size overflows any sane budget");
    }
    return m;
}

struct CodeTable {
    std::uint64_t M = 0;
    std::size_t n = 0;
    std::vector<std::uint16_t> symbols;  // M rows of n symbols

    const std::uint16_t* row(std::uint64_t i) const { return symbols.data() + i * n; }
};

CodeTable build_code_table(const CodeParams& params) {
    CodeTable t;
    t.M = code_size(params);
    t.n = params.n;
    const auto points = params.field->eval_points(params.mode);
    t.symbols.resize(t.M * t.n);
    const std::uint32_t q = params.field->size();
    for (std::uint64_t idx = 0; idx < t.M; ++idx) {
        // Horner evaluation straight from the base-q digits of idx.
        std::uint64_t digits = idx;
        std::vector<std::uint32_t> coeff(params.k);
        for (std::uint32_t i = 0; i < params.k; ++i) {
            coeff[i] = static_cast<std::uint32_t>(digits % q);
            digits /= q;
        }
        for (std::size_t j = 0; j < t.n; ++j) {
            FieldElement acc = params.field->zero();
            for (std::uint32_t i = params.k; i-- > 0;)
                acc = params.field->add(params.field->mul(acc, points[j]),
                                        params.field->element(coeff[i]));
            t.symbols[idx * t.n + j] = static_cast<std::uint16_t>(acc.value);
        }
    }
    return t;
}

// Flat list of all subsets of {0..M-1} of sizes 1..c, size-major, each size
// in lexicographic member order.
struct SubsetList {
    std::uint32_t c = 0;
    std::vector<std::uint32_t> members;  // concatenated
    std::vector<std::uint32_t> offsets;  // offsets.size() == count + 1
    std::vector<std::uint8_t> sizes;

    std::size_t count() const { return sizes.size(); }
    const std::uint32_t* begin_of(std::size_t i) const { return members.data() + offsets[i]; }
    std::uint8_t size_of(std::size_t i) const { return sizes[i]; }
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (1ull << 62)) throw Error(errc::budget, "combination count overflow");
    }
    return r;
}

SubsetList enumerate_subsets(std::uint64_t M, std::uint32_t c) {
    SubsetList list;
    list.c = c;
    std::uint64_t total = 0;
    for (std::uint32_t a = 1; a <= c; ++a) total += binomial(M, a);
    list.offsets.reserve(total + 1);
    list.sizes.reserve(total);
    list.offsets.push_back(0);
    std::vector<std::uint32_t> idx;
    for (std::uint32_t a = 1; a <= c && a <= M; ++a) {
        idx.resize(a);
        for (std::uint32_t i = 0; i < a; ++i) idx[i] = i;
        while (true) {
            list.members.insert(list.members.end(), idx.begin(), idx.end());
            list.offsets.push_back(static_cast<std::uint32_t>(list.members.size()));
            list.sizes.push_back(static_cast<std::uint8_t>(a));
            // next combination
            int pos = static_cast<int>(a) - 1;
            while (pos >= 0 && idx[pos] == M - a + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::uint32_t i = static_cast<std::uint32_t>(pos) + 1; i < a; ++i)
                idx[i] = idx[i - 1] + 1;
        }
    }
    return list;
}

// Per-subset bitmasks: member-index mask (for O(1) disjointness) and one
// symbol mask per position (for O(1) column intersection).
struct SubsetMasks {
    std::size_t idx_words = 0;
    std::size_t sym_words = 0;
    std::size_t n = 0;
    std::vector<std::uint64_t> idx_mask;  // count * idx_words
    std::vector<std::uint64_t> sym_mask;  // count * n * sym_words

    const std::uint64_t* idx_of(std::size_t i) const { return idx_mask.data() + i * idx_words; }
    const std::uint64_t* sym_of(std::size_t i, std::size_t pos) const {
        return sym_mask.data() + (i * n + pos) * sym_words;
    }
};

SubsetMasks build_masks(const CodeTable& table, const SubsetList& subsets, std::uint32_t q) {
    SubsetMasks m;
    m.idx_words = (table.M + 63) / 64;
    m.sym_words = (q + 63) / 64;
    m.n = table.n;
    m.idx_mask.assign(subsets.count() * m.idx_words, 0);
    m.sym_mask.assign(subsets.count() * m.n * m.sym_words, 0);
    for (std::size_t i = 0; i < subsets.count(); ++i) {
        std::uint64_t* im = m.idx_mask.data() + i * m.idx_words;
        for (std::uint8_t t = 0; t < subsets.size_of(i); ++t) {
            const std::uint32_t w = subsets.begin_of(i)[t];
            im[w / 64] |= 1ull << (w % 64);
            const std::uint16_t* row = table.row(w);
            for (std::size_t pos = 0; pos < m.n; ++pos) {
                std::uint64_t* sm = m.sym_mask.data() + (i * m.n + pos) * m.sym_words;
                sm[row[pos] / 64] |= 1ull << (row[pos] % 64);
            }
        }
    }
    return m;
}

inline bool masks_intersect(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

std::vector<Poly> subset_polys(const CodeParams& params, const SubsetList& subsets,
                               std::size_t i) {
    std::vector<Poly> out;
    for (std::uint8_t t = 0; t < subsets.size_of(i); ++t)
        out.push_back(poly_from_index(params, subsets.begin_of(i)[t]));
    return out;
}

}  // namespace

SepScanResult exhaustive_sep_check(const CodeParams& params, std::uint32_t c,
                                   const ScanBudget& budget, ScanMode mode) {
    if (c < 1) throw Error(errc::invalid_input, "coalition bound c must be >= 1");
    const std::uint64_t M = code_size(params);
    if (M > budget.max_codewords)
        throw Error(errc::budget, "refusing separation scan: q^k = " + std::to_string(M) +
                                      " codewords exceeds the budget of " +
                                      std::to_string(budget.max_codewords));
    const SubsetList subsets = enumerate_subsets(M, c);
    const std::uint64_t N = subsets.count();
    const std::uint64_t pairs = N * (N - 1) / 2;
    if (pairs > budget.max_pairs)
        throw Error(errc::budget, "refusing separation scan: " + std::to_string(pairs) +
                                      " coalition pairs exceed the budget of " +
                                      std::to_string(budget.max_pairs));

    const CodeTable table = build_code_table(params);
    const SubsetMasks masks = build_masks(table, subsets, params.field->size());

    const std::uint64_t kNone = ~0ull;
    std::atomic<std::uint64_t> best{kNone};

    auto check_pair = [&](std::uint64_t i, std::uint64_t j) -> bool {
        if (masks_intersect(masks.idx_of(i), masks.idx_of(j), masks.idx_words)) return false;
        for (std::size_t pos = 0; pos < masks.n; ++pos)
            if (!masks_intersect(masks.sym_of(i, pos), masks.sym_of(j, pos), masks.sym_words))
                return false;  // a disjoint column separates the pair
        return true;  // every column intersects: not separated
    };

    if (mode == ScanMode::Serial) {
        for (std::uint64_t i = 0; i < N && best.load() == kNone; ++i)
            for (std::uint64_t j = i + 1; j < N; ++j)
                if (check_pair(i, j)) {
                    best.store(i * N + j);
                    break;
                }
    } else {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(N); ++i) {
            const std::uint64_t ui = static_cast<std::uint64_t>(i);
            if (ui * N >= best.load(std::memory_order_relaxed)) continue;
            for (std::uint64_t j = ui + 1; j < N; ++j) {
                const std::uint64_t rank = ui * N + j;
                if (rank >= best.load(std::memory_order_relaxed)) break;
                if (check_pair(ui, j)) {
                    std::uint64_t cur = best.load();
                    while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
                    }
                    break;
                }
            }
        }
    }

    SepScanResult res;
    res.subsets = N;
    res.pairs = pairs;
    const std::uint64_t found = best.load();
    if (found != kNone) {
        res.all_separated = false;
        res.U = subset_polys(params, subsets, found / N);
        res.V = subset_polys(params, subsets, found % N);
    }
    return res;
}

TaCheckResult ta_violation_check(const Coalition& U, const PirateWord& z,
                                 const CodeParams& params, const ScanBudget& budget,
                                 ScanMode mode) {
    coalition_field(U);
    if (!in_descendant(z, U))
        throw Error(errc::invalid_input, "pirate word is not a descendant of the coalition");
    const std::uint64_t M = code_size(params);
    if (M > budget.max_scan_codewords)
        throw Error(errc::budget, "refusing nearest-codeword scan: q^k = " + std::to_string(M) +
                                      " exceeds the budget of " +
                                      std::to_string(budget.max_scan_codewords));
    const std::size_t n = params.n;
    if (z.symbols.size() != n)
        throw Error(errc::invalid_input, "pirate word length does not match the code");

    std::uint32_t insider = ~0u;
    for (const auto& t : U.members) {
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (t.symbols[i].value != z.symbols[i].value) ++d;
        insider = std::min(insider, d);
    }

    const CodeTable table = build_code_table(params);
    std::vector<std::uint16_t> zs(n);
    for (std::size_t i = 0; i < n; ++i) zs[i] = static_cast<std::uint16_t>(z.symbols[i].value);

    auto is_member = [&](std::uint64_t idx) {
        const std::uint16_t* row = table.row(idx);
        for (const auto& t : U.members) {
            bool eq = true;
            for (std::size_t i = 0; i < n && eq; ++i) eq = t.symbols[i].value == row[i];
            if (eq) return true;
        }
        return false;
    };

    // min over outsiders of (distance, index); ties by index keep the scan
    // deterministic under any schedule
    std::uint64_t best = ~0ull;  // (dist << 40) | idx
    auto pack_best = [](std::uint32_t d, std::uint64_t idx) {
        return (static_cast<std::uint64_t>(d) << 40) | idx;
    };

    if (mode == ScanMode::Serial) {
        for (std::uint64_t idx = 0; idx < table.M; ++idx) {
            if (is_member(idx)) continue;
            const std::uint16_t* row = table.row(idx);
            std::uint32_t d = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (row[i] != zs[i]) ++d;
            best = std::min(best, pack_best(d, idx));
        }
    } else {
        std::atomic<std::uint64_t> shared_best{~0ull};
#pragma omp parallel
        {
            std::uint64_t local = ~0ull;
#pragma omp for schedule(static)
            for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(table.M); ++idx) {
                const std::uint64_t u = static_cast<std::uint64_t>(idx);
                if (is_member(u)) continue;
                const std::uint16_t* row = table.row(u);
                std::uint32_t d = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (row[i] != zs[i]) ++d;
                local = std::min(local, pack_best(d, u));
            }
            std::uint64_t cur = shared_best.load();
            while (local < cur && !shared_best.compare_exchange_weak(cur, local)) {
            }
        }
        best = shared_best.load();
    }

    TaCheckResult res;
    if (best == ~0ull)
        throw Error(errc::invalid_input, "the coalition covers the whole code; no outsiders");
    res.insider_distance = insider;
    res.outsider_distance = static_cast<std::uint32_t>(best >> 40);
    res.outsider_index = best & ((1ull << 40) - 1);
    res.nearest_outsider = poly_from_index(params, res.outsider_index);
    res.violated = res.outsider_distance <= insider;
    return res;
}

FpScanResult exhaustive_fp_check(const CodeParams& params, std::uint32_t c,
                                 const ScanBudget& budget, ScanMode mode) {
    if (c < 1) throw Error(errc::invalid_input, "coalition bound c must be >= 1");
    const std::uint64_t M = code_size(params);
    if (M > budget.max_codewords)
        throw Error(errc::budget, "refusing frameproof scan: q^k = " + std::to_string(M) +
                                      " codewords exceeds the budget of " +
                                      std::to_string(budget.max_codewords));
    const SubsetList subsets = enumerate_subsets(M, c);
    const std::uint64_t N = subsets.count();
    const std::uint64_t work = N * M;
    if (work > budget.max_work)
        throw Error(errc::budget, "refusing frameproof scan: " + std::to_string(work) +
                                      " membership checks exceed the budget of " +
                                      std::to_string(budget.max_work));

    const CodeTable table = build_code_table(params);
    const SubsetMasks masks = build_masks(table, subsets, params.field->size());

    const std::uint64_t kNone = ~0ull;
    std::atomic<std::uint64_t> best{kNone};  // rank = subset * M + word

    auto scan_subset = [&](std::uint64_t si) -> std::uint64_t {
        // word u is framed iff every position's symbol lies in the column set
        const std::uint64_t* im = masks.idx_of(si);
        for (std::uint64_t w = 0; w < M; ++w) {
            if (im[w / 64] & (1ull << (w % 64))) continue;  // member, not an outsider
            const std::uint16_t* row = table.row(w);
            bool framed = true;
            for (std::size_t pos = 0; pos < masks.n && framed; ++pos) {
                const std::uint64_t* sm = masks.sym_of(si, pos);
                framed = (sm[row[pos] / 64] >> (row[pos] % 64)) & 1;
            }
            if (framed) return si * M + w;
        }
        return kNone;
    };

    if (mode == ScanMode::Serial) {
        for (std::uint64_t si = 0; si < N && best.load() == kNone; ++si) {
            const std::uint64_t r = scan_subset(si);
            if (r != kNone) best.store(r);
        }
    } else {
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t si = 0; si < static_cast<std::int64_t>(N); ++si) {
            const std::uint64_t u = static_cast<std::uint64_t>(si);
            if (u * M >= best.load(std::memory_order_relaxed)) continue;
            const std::uint64_t r = scan_subset(u);
            if (r != kNone) {
                std::uint64_t cur = best.load();
                while (r < cur && !best.compare_exchange_weak(cur, r)) {
                }
            }
        }
    }

    FpScanResult res;
    res.checks = work;
    const std::uint64_t found = best.load();
    if (found != kNone) {
        res.all_frameproof = false;
        res.framers = subset_polys(params, subsets, found / M);
        res.framed = poly_from_index(params, found % M);
    }
    return res;
}

TaScanResult exhaustive_ta_check(const CodeParams& params, std::uint32_t c,
                                 const ScanBudget& budget) {
    if (c < 1) throw Error(errc::invalid_input, "coalition bound c must be >= 1");
    const std::uint64_t M = code_size(params);
    if (M > budget.max_codewords)
        throw Error(errc::budget, "refusing traceability scan: q^k = " + std::to_string(M) +
                                      " codewords exceeds the budget of " +
                                      std::to_string(budget.max_codewords));
    const SubsetList subsets = enumerate_subsets(M, c);
    const CodeTable table = build_code_table(params);
    const std::size_t n = table.n;

    // budget: sum over coalitions of |desc| * M * n distance updates
    std::uint64_t work = 0;
    std::vector<std::vector<std::uint16_t>> cols(n);
    TaScanResult res;

    for (std::uint64_t si = 0; si < subsets.count(); ++si) {
        const std::uint8_t a = subsets.size_of(si);
        std::uint64_t desc_count = 1;
        for (std::size_t pos = 0; pos < n; ++pos) {
            cols[pos].clear();
            for (std::uint8_t t = 0; t < a; ++t) {
                const std::uint16_t s = table.row(subsets.begin_of(si)[t])[pos];
                if (std::find(cols[pos].begin(), cols[pos].end(), s) == cols[pos].end())
                    cols[pos].push_back(s);
            }
            std::sort(cols[pos].begin(), cols[pos].end());
            desc_count *= cols[pos].size();
            if (desc_count > budget.max_work)
                throw Error(errc::budget, "refusing traceability scan: descendant set too large");
        }
        work += desc_count * M * n;
        if (work > budget.max_work)
            throw Error(errc::budget,
                        "refusing traceability scan: " + std::to_string(work) +
                            " distance updates exceed the budget of " +
                            std::to_string(budget.max_work));

        std::vector<std::size_t> odo(n, 0);
        std::vector<std::uint16_t> z(n);
        for (std::size_t pos = 0; pos < n; ++pos) z[pos] = cols[pos][0];
        while (true) {
            ++res.descendants_checked;
            std::uint32_t insider = ~0u;
            std::uint32_t outsider = ~0u;
            std::uint64_t out_idx = 0;
            for (std::uint64_t w = 0; w < M; ++w) {
                const std::uint16_t* row = table.row(w);
                std::uint32_t d = 0;
                for (std::size_t i = 0; i < n; ++i)
                    if (row[i] != z[i]) ++d;
                bool member = false;
                for (std::uint8_t t = 0; t < a && !member; ++t)
                    member = subsets.begin_of(si)[t] == w;
                if (member) {
                    insider = std::min(insider, d);
                } else if (d < outsider) {
                    outsider = d;
                    out_idx = w;
                }
            }
            if (outsider <= insider) {
                res.all_traceable = false;
                res.coalition = subset_polys(params, subsets, si);
                res.insider_distance = insider;
                res.outsider_distance = outsider;
                res.outsider = poly_from_index(params, out_idx);
                res.pirate.reserve(n);
                for (std::size_t i = 0; i < n; ++i)
                    res.pirate.push_back(params.field->element(z[i]));
                return res;
            }
            // next descendant (odometer)
            std::size_t pos = 0;
            while (pos < n && ++odo[pos] == cols[pos].size()) {
                odo[pos] = 0;
                z[pos] = cols[pos][0];
                ++pos;
            }
            if (pos == n) break;
            z[pos] = cols[pos][odo[pos]];
        }
    }
    return res;
}

}  // namespace rssep
