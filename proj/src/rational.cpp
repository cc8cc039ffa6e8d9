#include "okbody/rational.hpp"

#include <cctype>

namespace okb {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

Int parse_int(std::string_view s, std::string_view whole) {
    if (!is_integer_literal(s)) {
        fail_config("malformed rational literal: '" + std::string(whole) + "'");
    }
    return Int(std::string(s));
}

} // namespace

Rat rat_parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) fail_config("empty rational literal");
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_int(s, text));
    }
    Int num = parse_int(trim(s.substr(0, slash)), text);
    Int den = parse_int(trim(s.substr(slash + 1)), text);
    if (den == 0) fail_config("zero denominator in rational literal: '" + std::string(text) + "'");
    // Division of mpq values canonicalizes (reduces, normalizes sign).
    return Rat(num) / Rat(den);
}

std::string rat_to_string(const Rat& r) {
    return r.str();
}

std::string rat_to_decimal(const Rat& r, int digits) {
    if (digits < 0) fail_config("negative digit count for decimal rendering");
    bool neg = r < 0;
    Rat a = neg ? Rat(-r) : r;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int scaled = rat_num(a) * scale / rat_den(a); // truncating division, a >= 0
    Int ip = scaled / scale;
    Int fp = scaled % scale;
    std::string out = neg && scaled != 0 ? "-" : "";
    out += ip.str();
    if (digits > 0) {
        std::string frac = fp.str();
        out += "." + std::string(static_cast<size_t>(digits) - frac.size(), '0') + frac;
    }
    return out;
}

Int rat_floor(const Rat& r) {
    Int num = rat_num(r);
    Int den = rat_den(r); // positive in canonical form
    Int q = num / den;
    if (num % den != 0 && num < 0) q -= 1;
    return q;
}

bool rat_is_integer(const Rat& r) {
    return rat_den(r) == 1;
}

} // namespace okb
