#include "eulerlab/complex.hpp"
#include "eulerlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace eulerlab {

namespace {

std::string real_to_string(const Real& x, unsigned digits) {
    std::string s = x.str(digits, std::ios_base::fmtflags(0));
    return s;
}

// One signed real literal: decimal (possibly with exponent) or "p/q".
Real parse_part(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Real(text);
        Real num(text.substr(0, slash));
        Real den(text.substr(slash + 1));
        if (den == 0) throw DomainError("parse: zero denominator in '" + text + "'");
        return num / den;
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw DomainError("parse: malformed number '" + text + "'");
    }
}

} // namespace

std::string to_string(const Complex& z, unsigned digits) {
    if (z.im == 0) return real_to_string(z.re, digits);
    std::string im_part = real_to_string(abs(z.im), digits);
    return real_to_string(z.re, digits) + (z.im < 0 ? "-" : "+") + im_part + "i";
}

Real parse_real(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw DomainError("parse: empty number");
    return parse_part(s);
}

Complex parse_complex(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw DomainError("parse: empty number");

    // Split at the last top-level +/- that is not an exponent sign and not
    // the leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        char c = s[i];
        if (c != '+' && c != '-') continue;
        char prev = s[i - 1];
        if (prev == 'e' || prev == 'E') continue;
        split = i;
        break;
    }

    bool has_i = !s.empty() && (s.back() == 'i' || s.back() == 'I');
    if (!has_i) {
        return {parse_part(s), Real(0)};
    }
    std::string body = s.substr(0, s.size() - 1);
    if (split == std::string::npos || split >= body.size()) {
        // Pure imaginary: "i", "-i", "2.5i", "1/3i".
        if (body.empty() || body == "+") return {Real(0), Real(1)};
        if (body == "-") return {Real(0), Real(-1)};
        return {Real(0), parse_part(body)};
    }
    std::string re_part = body.substr(0, split);
    std::string im_part = body.substr(split); // keeps the sign
    if (im_part == "+") im_part = "1";
    else if (im_part == "-") im_part = "-1";
    return {parse_part(re_part), parse_part(im_part)};
}

} // namespace eulerlab
