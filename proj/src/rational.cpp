#include "curv/rational.hpp"

#include "curv/error.hpp"

namespace curv {

Rational make_rational(long long num, long long den) {
    return make_rational(Integer(num), Integer(den));
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorCode::param_out_of_range, "rational with zero denominator");
    return Rational(num) / Rational(den);
}

std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(std::string_view s) {
    auto bad = [&] { return ParseError("malformed rational '" + std::string(s) + "'", 1); };
    if (s.empty()) throw bad();
    std::string num, den = "1";
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        num = std::string(s);
    } else {
        num = std::string(s.substr(0, slash));
        den = std::string(s.substr(slash + 1));
    }
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = t[0] == '-' ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!is_int(num) || !is_int(den)) throw bad();
    Integer d(den);
    if (d == 0) throw bad();
    return make_rational(Integer(num), d);
}

}  // namespace curv
