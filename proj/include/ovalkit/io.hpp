#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ovalkit/support_fourier.hpp"

namespace ovalkit {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error("curve spec: " + what) {}
};

/// Parses the curve-spec JSON object
///   { "a0": number, "terms": [ {"n": int, "a": number, "b": number}, ... ] }
/// and validates the resulting support function. "terms" may be omitted
/// (a circle); "a" and "b" default to 0 inside a term.
inline FourierSupport parse_curve_spec(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object() || !j.contains("a0") || !j["a0"].is_number())
        throw ParseError("expected an object with a numeric \"a0\"");
    std::vector<HarmonicTerm> terms;
    if (j.contains("terms")) {
        if (!j["terms"].is_array())
            throw ParseError("\"terms\" must be an array");
        for (const auto& t : j["terms"]) {
            if (!t.is_object() || !t.contains("n") || !t["n"].is_number_integer())
                throw ParseError("each term needs an integer \"n\"");
            HarmonicTerm h;
            h.n = t["n"].get<int>();
            try {
                h.a = t.value("a", 0.0);
                h.b = t.value("b", 0.0);
            } catch (const nlohmann::json::exception&) {
                throw ParseError("term coefficients \"a\" and \"b\" must be numbers");
            }
            terms.push_back(h);
        }
    }
    try {
        return FourierSupport(j["a0"].get<double>(), std::move(terms));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline FourierSupport load_curve_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_spec(buf.str());
}

inline std::string curve_spec_json(const FourierSupport& support) {
    nlohmann::ordered_json j;
    j["a0"] = support.a0();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : support.terms())
        j["terms"].push_back({{"n", t.n}, {"a", t.a}, {"b", t.b}});
    return j.dump(2) + "\n";
}

}  // namespace ovalkit
