#pragma once

// Renderings of a FactoredHypersum: plain text, LaTeX, and a JSON document
// that parses back into the same object. All numbers in JSON are strings.

#include "hypersum/hypersums.hpp"
#include "hypersum/rational.hpp"

#include "json.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypersum {

using Json = nlohmann::json;

namespace detail {

inline Json rat_json(const Rat& v) { return Json{{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}}; }

inline Rat rat_from_json(const Json& j) {
    const Int num(j.at("num").get<std::string>());
    const Int den(j.at("den").get<std::string>());
    if (den == 0) throw std::invalid_argument("zero denominator in document");
    return make_rat(num, den);
}

// Shared pieces of the text and LaTeX forms.
struct DisplayParts {
    Int ratio_num_arg;  // k
    Int ratio_den_arg;  // L+k+1
    Rat constant;       // what remains after the factorial ratio
    bool radical = false;
    long radical_const = 0;  // (L+1)^2
    bool expanded_square = false;  // A = 2 kept as 4y+(L+1)^2
    std::vector<long> offsets;
    Poly core;
};

inline DisplayParts display_parts(const FactoredHypersum& f, bool fold_square) {
    DisplayParts d;
    d.ratio_num_arg = f.k;
    d.ratio_den_arg = f.level + f.k + 1;
    const Rat ratio = make_rat(factorial(f.k), factorial(f.level + f.k + 1));
    d.constant = f.prefactor * f.core_scale / ratio;
    d.radical_const = static_cast<long>(f.level + 1) * (f.level + 1);
    d.offsets = f.linear_offsets;
    d.core = f.core.poly();
    if (f.sqrt_exponent == 1) {
        d.radical = true;
    } else if (f.sqrt_exponent == 2) {
        // (L+1)^2 is a multiple of 4 here because A = 2 forces odd L.
        if (fold_square && d.radical_const % 4 == 0) {
            d.constant *= 4;
            d.offsets.push_back(d.radical_const / 4);
            std::sort(d.offsets.begin(), d.offsets.end());
        } else {
            d.expanded_square = true;
        }
    }
    return d;
}

inline std::string linear_factor(long o) {
    if (o == 0) return "y";
    return "(y" + std::string(o > 0 ? "+" : "") + std::to_string(o) + ")";
}

inline std::string latexify_poly(const Poly& p) {
    std::string s = p.to_string("y");
    s.erase(std::remove(s.begin(), s.end(), '*'), s.end());
    return std::regex_replace(s, std::regex(R"(\^(\d+))"), "^{$1}");
}

inline std::string latex_rat(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    const std::string sign = v < 0 ? "-" : "";
    Int num = v.get_num();
    if (num < 0) num = -num;
    return sign + "\\frac{" + num.get_str() + "}{" + v.get_den().get_str() + "}";
}

}  // namespace detail

/// e.g. `6!/10! * y*(y+3)*(y+4) * (y^2-2*y-1)`.
inline std::string render_text(const FactoredHypersum& f) {
    const auto d = detail::display_parts(f, true);
    std::vector<std::string> parts;
    parts.push_back(d.ratio_num_arg.get_str() + "!/" + d.ratio_den_arg.get_str() + "!");
    if (d.constant != 1) parts.push_back(d.constant.get_str());
    if (d.radical) parts.push_back("sqrt(4*y+" + std::to_string(d.radical_const) + ")");
    if (d.expanded_square) parts.push_back("(4*y+" + std::to_string(d.radical_const) + ")");
    std::string lin;
    for (std::size_t i = 0; i < d.offsets.size(); ++i) lin += (i ? "*" : "") + detail::linear_factor(d.offsets[i]);
    if (!lin.empty()) parts.push_back(lin);
    if (!(d.core == Poly(Rat(1)))) parts.push_back("(" + d.core.to_string("y") + ")");
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " * " : "") + parts[i];
    return out;
}

inline std::string render_latex(const FactoredHypersum& f) {
    const auto d = detail::display_parts(f, false);
    std::ostringstream os;
    os << "S_{" << f.k << "}^{(" << f.level << ")}(y) = \\frac{" << d.ratio_num_arg.get_str() << "!}{"
       << d.ratio_den_arg.get_str() << "!}";
    if (d.constant != 1) os << "\\," << detail::latex_rat(d.constant);
    if (d.radical) os << "\\,\\sqrt{4y+" << d.radical_const << "}";
    if (d.expanded_square) os << "\\,(4y+" << d.radical_const << ")";
    os << "\\,";
    for (long o : d.offsets) os << detail::linear_factor(o);
    if (!(d.core == Poly(Rat(1)))) os << " \\times \\left(" << detail::latexify_poly(d.core) << "\\right)";
    return os.str();
}

inline Json to_document(const FactoredHypersum& f, const std::string& method = "theorem3") {
    Json core = Json::array();
    for (const auto& c : f.core.poly().coeffs()) core.push_back(c.get_num().get_str());
    return Json{{"L", f.level},
                {"k", f.k},
                {"method", method},
                {"prefactor", detail::rat_json(f.prefactor)},
                {"sqrt_exponent", f.sqrt_exponent},
                {"linear_offsets", f.linear_offsets},
                {"core_coeffs", core},
                {"core_scale", detail::rat_json(f.core_scale)},
                {"n", f.n},
                {"m", f.m},
                {"A", f.sqrt_exponent}};
}

/// Inverse of to_document; throws std::invalid_argument on malformed input.
inline FactoredHypersum from_document(const Json& j) {
    try {
        FactoredHypersum f;
        f.level = j.at("L").get<int>();
        f.k = j.at("k").get<long>();
        f.prefactor = detail::rat_from_json(j.at("prefactor"));
        f.sqrt_exponent = j.at("sqrt_exponent").get<int>();
        if (j.contains("A") && j.at("A").get<int>() != f.sqrt_exponent)
            throw std::invalid_argument("A and sqrt_exponent disagree");
        f.linear_offsets = j.at("linear_offsets").get<std::vector<long>>();
        std::vector<Rat> core;
        for (const auto& c : j.at("core_coeffs")) core.emplace_back(Int(c.get<std::string>()));
        const Poly core_poly(std::move(core));
        f.core = PolyY(core_poly, f.level);
        f.core_scale = detail::rat_from_json(j.at("core_scale"));
        f.n = j.at("n").get<long>();
        f.m = j.at("m").get<long>();
        f.degenerate_core = core_poly.degree() != f.n - 1;
        return f;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed factored-form document: ") + e.what());
    }
}

inline FactoredHypersum parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    return from_document(j);
}

}  // namespace hypersum
