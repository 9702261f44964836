#pragma once

#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "waring/apolarity.hpp"
#include "waring/canonical.hpp"
#include "waring/errors.hpp"
#include "waring/oracle.hpp"
#include "waring/rank.hpp"
#include "waring/rational.hpp"

namespace waring {

using nlohmann::json;

enum class Convention { monomial, binomial };

inline BinaryForm form_from_coefficients(const std::vector<Rational>& coeffs, Convention conv) {
    if (coeffs.empty()) throw parse_error("no coefficients given");
    if (coeffs.size() < 2) throw parse_error("a binary form needs at least two coefficients");
    return conv == Convention::monomial ? BinaryForm::from_monomial(coeffs)
                                        : BinaryForm::from_binomial(coeffs);
}

namespace detail {

inline std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

/* "p/q" exactly; decimal and scientific literals only when floats are allowed */
inline Rational parse_coefficient(const std::string& token, bool allow_float) {
    std::string t = trimmed(token);
    if (t.empty()) throw parse_error("empty coefficient");
    if (t.find_first_of(".eE") == std::string::npos || t.find('/') != std::string::npos)
        return parse_rational(t);
    if (!allow_float)
        throw parse_error("floating literal '" + t + "' rejected in exact mode (pass --float)");
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end == nullptr || *end != '\0') throw parse_error("malformed number '" + t + "'");
    return rational_from_double(v);
}

}  // namespace detail

/*
 * Accepts either a bare comma-separated coefficient list or a JSON document
 * {degree?, convention?, coefficients, label?}.  A document's own convention
 * field overrides the caller's default; a declared degree that disagrees with
 * the coefficient count is an error, never silently reconciled.
 */
inline BinaryForm parse_form(const std::string& text, Convention default_conv,
                             bool allow_float = false) {
    std::string body = detail::trimmed(text);
    if (body.empty()) throw parse_error("empty input");

    std::vector<Rational> coeffs;
    Convention conv = default_conv;

    if (body.front() == '{') {
        json doc;
        try {
            doc = json::parse(body);
        } catch (const json::exception& e) {
            throw parse_error(std::string("invalid JSON form document: ") + e.what());
        }
        if (!doc.contains("coefficients") || !doc["coefficients"].is_array())
            throw parse_error("form document needs a 'coefficients' array");
        if (doc.contains("convention")) {
            std::string c = doc["convention"].get<std::string>();
            if (c == "monomial")
                conv = Convention::monomial;
            else if (c == "binomial")
                conv = Convention::binomial;
            else
                throw parse_error("unknown convention '" + c + "'");
        }
        for (const auto& entry : doc["coefficients"]) {
            if (entry.is_string())
                coeffs.push_back(detail::parse_coefficient(entry.get<std::string>(), allow_float));
            else if (entry.is_number_integer())
                coeffs.push_back(Rational(static_cast<long>(entry.get<long long>())));
            else if (entry.is_number())
                coeffs.push_back(detail::parse_coefficient(std::to_string(entry.get<double>()), allow_float));
            else
                throw parse_error("coefficient entries must be strings or numbers");
        }
        if (doc.contains("degree")) {
            long declared = doc["degree"].get<long>();
            if (declared != static_cast<long>(coeffs.size()) - 1)
                throw parse_error("declared degree " + std::to_string(declared) + " conflicts with " +
                                  std::to_string(coeffs.size()) + " coefficients");
        }
    } else {
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t comma = body.find(',', pos);
            std::string token =
                comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos);
            coeffs.push_back(detail::parse_coefficient(token, allow_float));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return form_from_coefficients(coeffs, conv);
}

/* ---- serialization ------------------------------------------------------ */

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const GaussianRational& g) {
    return json{{"re", to_string(g.re)}, {"im", to_string(g.im)}};
}

inline json to_json(const std::complex<double>& z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

inline json to_json(const DecompositionTerm& t) {
    json out;
    out["exact"] = t.exact;
    if (t.exact) {
        out["c"] = to_json(t.c_exact);
        out["l"] = json::array({to_json(t.l0_exact), to_json(t.l1_exact)});
    } else {
        out["c"] = to_json(t.c);
        out["l"] = json::array({to_json(t.l0), to_json(t.l1)});
    }
    return out;
}

inline json to_json(const Decomposition& dec) {
    json terms = json::array();
    for (const auto& t : dec.terms) terms.push_back(to_json(t));
    return json{{"field", field_name(dec.field)},
                {"rank", dec.rank()},
                {"exact", dec.exact},
                {"residual", dec.residual},
                {"terms", terms}};
}

inline json to_json(const RankResult& r) {
    json out;
    switch (r.status) {
        case RankStatus::classified: out["status"] = "classified"; break;
        case RankStatus::boundary: out["status"] = "boundary"; break;
        case RankStatus::unclassified: out["status"] = "unclassified"; break;
    }
    if (r.real_rank) out["real_rank"] = *r.real_rank;
    if (r.complex_rank) out["complex_rank"] = *r.complex_rank;
    if (!r.certificate.empty()) out["certificate"] = r.certificate;
    if (!r.note.empty()) out["note"] = r.note;
    if (r.lower_bound) out["lower_bound"] = *r.lower_bound;
    if (r.upper_bound) out["upper_bound"] = *r.upper_bound;
    if (r.witness) out["witness"] = to_json(*r.witness);
    return out;
}

inline json to_json(const MobiusTransform& m) {
    return json::array({json::array({to_string(m.p), to_string(m.q)}),
                        json::array({to_string(m.r), to_string(m.s)})});
}

inline json to_json(const CanonicalForm& c) {
    json out;
    out["family"] = family_name(c.family);
    out["a"] = c.a;
    if (c.family == CanonicalFamily::q5_complex || c.family == CanonicalFamily::q5_real)
        out["b"] = c.b;
    out["transform"] = to_json(c.transform);
    out["residual"] = c.residual;
    return out;
}

inline json to_json(const OracleResult& o) {
    return json{{"achieved", o.achieved}, {"best_residual", o.best_residual}};
}

inline json error_json(const std::string& code, const std::string& message) {
    return json{{"error", code}, {"message", message}};
}

}  // namespace waring
