#include "rssep/witness_io.hpp"

namespace rssep {

using nlohmann::json;

json element_to_json(const Field& field, FieldElement a) {
    if (field.extension_degree() == 1) return std::to_string(a.value);
    return json(field.coeffs(a));
}

FieldElement element_from_json(const FieldPtr& field, const json& j) {
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw Error(errc::parse, "element string must be a decimal residue");
        const unsigned long v = std::stoul(s);
        if (v >= field->size()) throw Error(errc::parse, "element residue out of range");
        return field->element(static_cast<std::uint32_t>(v));
    }
    if (j.is_array()) {
        std::vector<std::uint32_t> digits;
        for (const auto& d : j) {
            if (!d.is_number_integer() || d.get<std::int64_t>() < 0)
                throw Error(errc::parse, "element coefficients must be non-negative integers");
            digits.push_back(d.get<std::uint32_t>());
        }
        return field->from_coeffs(digits);
    }
    throw Error(errc::parse, "element must be a decimal string or a coefficient array");
}

json witness_to_json(const WitnessPair& w) {
    const VerifyReport rep = verify_witness(w);
    if (!rep.pass) {
        const ClauseResult* cl = rep.first_failure();
        throw Error(errc::internal, "cannot serialize an invalid witness (clause " +
                                        (cl ? cl->name : std::string("?")) + ")");
    }
    const Field& f = *w.field;
    json j;
    j["theorem"] = theorem_name(w.theorem);
    j["p"] = f.characteristic();
    j["s"] = f.extension_degree();
    j["q"] = f.size();
    j["mode"] = point_mode_name(w.mode);
    j["c"] = w.c;
    j["claimed_d"] = w.claimed_d;
    j["max_degree"] = w.max_degree;
    j["U"] = json::array();
    for (const auto& poly : w.U) j["U"].push_back(to_text(poly));
    j["V"] = json::array();
    for (const auto& poly : w.V) j["V"].push_back(to_text(poly));
    j["partition"] = json::array();
    for (const auto& block : w.partition) {
        json b = json::array();
        for (const auto& e : block) b.push_back(element_to_json(f, e));
        j["partition"].push_back(std::move(b));
    }
    j["points"] = json::array();
    for (const auto& pt : w.points) j["points"].push_back(element_to_json(f, pt));
    auto words = [&](const std::vector<Codeword>& ws) {
        json out = json::array();
        for (const auto& word : ws) {
            json v = json::array();
            for (const auto& s : word.symbols) v.push_back(element_to_json(f, s));
            out.push_back(std::move(v));
        }
        return out;
    };
    j["U_vectors"] = words(rep.U_words);
    j["V_vectors"] = words(rep.V_words);
    j["pirate"] = json::array();
    for (const auto& s : rep.pirate.symbols) j["pirate"].push_back(element_to_json(f, s));
    j["params"] = w.params.is_null() ? json::object() : w.params;
    return j;
}

WitnessPair witness_from_json(const json& j) {
    try {
        WitnessPair w;
        const auto p = j.at("p").get<std::uint32_t>();
        const auto s = j.at("s").get<std::uint32_t>();
        w.field = Field::make(p, s);
        if (j.at("q").get<std::uint32_t>() != w.field->size())
            throw Error(errc::parse, "q does not match p^s");
        w.theorem = theorem_from_name(j.at("theorem").get<std::string>());
        w.mode = point_mode_from_name(j.at("mode").get<std::string>());
        w.c = j.at("c").get<std::uint32_t>();
        w.claimed_d = j.at("claimed_d").get<std::uint32_t>();
        w.max_degree = j.at("max_degree").get<std::uint32_t>();
        for (const auto& t : j.at("U")) w.U.push_back(parse_poly(w.field, t.get<std::string>()));
        for (const auto& t : j.at("V")) w.V.push_back(parse_poly(w.field, t.get<std::string>()));
        for (const auto& blk : j.at("partition")) {
            std::vector<FieldElement> block;
            for (const auto& e : blk) block.push_back(element_from_json(w.field, e));
            w.partition.push_back(std::move(block));
        }
        for (const auto& e : j.at("points")) w.points.push_back(element_from_json(w.field, e));
        w.params = j.value("params", json::object());
        return w;
    } catch (const json::exception& e) {
        throw Error(errc::parse, std::string("malformed witness document: ") + e.what());
    }
}

json report_to_json(const VerifyReport& rep) {
    json j;
    j["verdict"] = rep.pass ? "PASS" : "FAIL";
    j["n"] = rep.n;
    j["ta_threshold"] = rep.ta_thresh.str();
    j["fp_threshold"] = rep.fp_thresh.str();
    j["clauses"] = json::array();
    for (const auto& cl : rep.clauses) {
        json c;
        c["name"] = cl.name;
        c["pass"] = cl.pass;
        if (!cl.detail.empty()) c["detail"] = cl.detail;
        j["clauses"].push_back(std::move(c));
    }
    if (const ClauseResult* cl = rep.first_failure()) j["failed_clause"] = cl->name;
    return j;
}

std::string canonical_dump(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace rssep
