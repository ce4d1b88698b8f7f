#pragma once

#include "lcs/form.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace lcs {

// Form literal syntax: terms joined by '+' or '-', each term an optional
// rational coefficient followed by '^'-separated generator names, e.g.
// "3/2 a^b^g + 2 h" or "a^b - g^h". "1" alone is the degree-0 unit.

namespace detail {

inline std::string trim(const std::string& s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

inline int generator_index(const std::vector<std::string>& names, const std::string& name)
{
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
        throw ParseError("unknown generator '" + name + "'");
    return static_cast<int>(it - names.begin());
}

}  // namespace detail

inline Form parse_form(const std::vector<std::string>& names, const std::string& literal)
{
    const int dim = static_cast<int>(names.size());
    Form result(dim);
    std::string text = detail::trim(literal);
    if (text.empty() || text == "0")
        return result;

    // Split into signed terms at top-level '+'/'-' (a leading '-' binds to
    // the first term; '-' inside a coefficient like "1/-2" is not valid).
    std::vector<std::pair<int, std::string>> raw;
    int sign = 1;
    std::string cur;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if ((ch == '+' || ch == '-') && !detail::trim(cur).empty()) {
            raw.emplace_back(sign, detail::trim(cur));
            cur.clear();
            sign = (ch == '-') ? -1 : 1;
        } else if (ch == '-' && detail::trim(cur).empty()) {
            sign = -sign;
        } else if (ch == '+' && detail::trim(cur).empty()) {
            // no-op
        } else {
            cur += ch;
        }
    }
    if (detail::trim(cur).empty())
        throw ParseError("dangling sign in form literal '" + literal + "'");
    raw.emplace_back(sign, detail::trim(cur));

    for (const auto& [s, term] : raw) {
        std::istringstream in(term);
        std::string first;
        in >> first;
        Rational coeff(1);
        std::string gens;
        const bool starts_numeric =
            !first.empty()
            && (std::isdigit(static_cast<unsigned char>(first[0])) || first[0] == '/'
                || (first.size() > 1 && first[0] == '-'));
        if (starts_numeric && first.find('^') == std::string::npos
            && std::find(names.begin(), names.end(), first) == names.end()) {
            coeff = Rational::parse(first);
            in >> gens;
        } else {
            gens = first;
            std::string rest;
            if (in >> rest)
                throw ParseError("unexpected token '" + rest + "' in form literal");
        }
        if (s < 0)
            coeff = -coeff;
        std::uint32_t mask = 0;
        int wsign = 1;
        if (!gens.empty()) {
            std::stringstream gs(gens);
            std::string name;
            std::uint32_t acc = 0;
            while (std::getline(gs, name, '^')) {
                const int idx = detail::generator_index(names, detail::trim(name));
                const std::uint32_t bit = 1u << idx;
                if (acc & bit)
                    throw ParseError("repeated generator '" + name + "' in a wedge term");
                wsign *= wedge_sign(acc, bit);
                acc |= bit;
            }
            mask = acc;
        }
        result.add_term(mask, (wsign == 1) ? coeff : -coeff);
    }
    return result;
}

inline std::string form_to_string(const std::vector<std::string>& names, const Form& f)
{
    if (f.is_zero())
        return "0";
    // Print by ascending degree, lexicographic tuples within a degree.
    ExteriorBasis basis(f.dim());
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= f.dim(); ++k)
        for (std::size_t i = 0; i < basis.count(k); ++i) {
            const std::uint32_t mask = basis.mask_at(k, i);
            Rational c = f.coeff(mask);
            if (c.is_zero())
                continue;
            if (first) {
                if (c.sign() < 0) {
                    out << "-";
                    c = -c;
                }
                first = false;
            } else if (c.sign() < 0) {
                out << " - ";
                c = -c;
            } else {
                out << " + ";
            }
            std::string name;
            for (std::uint32_t m = mask; m; m &= m - 1) {
                if (!name.empty())
                    name += "^";
                name += names[std::countr_zero(m)];
            }
            if (name.empty())
                out << c.str();
            else if (c == Rational(1))
                out << name;
            else
                out << c.str() << " " << name;
        }
    return out.str();
}

}  // namespace lcs
