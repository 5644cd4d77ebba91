#include "icx/rational.hpp"

#include <charconv>

#include "icx/errors.hpp"

namespace icx {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("rational", "malformed rational '" + text + "'");
        return v;
    };
    const std::string_view sv(text);
    const auto slash = sv.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(sv));
    const std::int64_t den = parse_int(sv.substr(slash + 1));
    if (den == 0) throw ParseError("rational", "zero denominator in '" + text + "'");
    return Rational(parse_int(sv.substr(0, slash)), den);
}

}  // namespace icx
