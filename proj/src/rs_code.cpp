#include "rssep/rs_code.hpp"

#include <set>

namespace rssep {

CodeParams make_code(const FieldPtr& field, PointMode mode, std::uint32_t k) {
    const std::uint32_t n = mode == PointMode::Full ? field->size() : field->size() - 1;
    if (k < 1 || k > n)
        throw Error(errc::invalid_input, "dimension k must satisfy 1 <= k <= n");
    return {field, mode, k, n, n - k + 1};
}

CodeParams params_for_distance(const FieldPtr& field, PointMode mode, std::uint32_t d) {
    const std::uint32_t n = mode == PointMode::Full ? field->size() : field->size() - 1;
    if (d < 1 || d > n)
        throw Error(errc::invalid_input, "distance d must satisfy 1 <= d <= n");
    return make_code(field, mode, n - d + 1);
}

Codeword encode(const CodeParams& params, const Poly& f) {
    return encode_at(params, f, params.field->eval_points(params.mode));
}

Codeword encode_at(const CodeParams& params, const Poly& f,
                   const std::vector<FieldElement>& points) {
    if (f.field().get() != params.field.get())
        throw Error(errc::invalid_input, "polynomial field does not match code field");
    if (f.degree() >= static_cast<int>(params.k))
        throw Error(errc::invalid_input, "polynomial degree too high for the code dimension");
    if (points.size() != params.n)
        throw Error(errc::invalid_input, "point sequence length does not match code length");
    std::set<std::uint32_t> seen;
    for (const auto& pt : points) {
        if (pt.field != params.field.get())
            throw Error(errc::invalid_input, "evaluation point from a different field context");
        if (!seen.insert(pt.value).second)
            throw Error(errc::invalid_input, "repeated evaluation point");
    }
    Codeword w;
    w.symbols.reserve(points.size());
    for (const auto& pt : points) w.symbols.push_back(f.eval(pt));
    w.source = f;
    return w;
}

std::uint32_t hamming(const Codeword& a, const Codeword& b) {
    if (a.symbols.size() != b.symbols.size())
        throw Error(errc::invalid_input, "codeword length mismatch");
    std::uint32_t count = 0;
    for (std::size_t i = 0; i < a.symbols.size(); ++i) {
        if (a.symbols[i].field != b.symbols[i].field)
            throw Error(errc::invalid_input, "codeword field context mismatch");
        if (a.symbols[i].value != b.symbols[i].value) ++count;
    }
    return count;
}

Rational ta_threshold(std::uint32_t n, std::uint32_t c) {
    if (c < 2 || n < 1) throw Error(errc::invalid_input, "ta_threshold needs c >= 2, n >= 1");
    return Rational::of(n) - Rational::of(n, static_cast<std::int64_t>(c) * c);
}

Rational fp_threshold(std::uint32_t n, std::uint32_t c) {
    if (c < 2 || n < 1) throw Error(errc::invalid_input, "fp_threshold needs c >= 2, n >= 1");
    return Rational::of(n) - Rational::of(n, c);
}

}  // namespace rssep
