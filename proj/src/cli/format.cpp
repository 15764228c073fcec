#include "qdensity/cli/format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qdensity::cli {

namespace {

double parse_real(std::string_view s, std::string_view whole) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    std::string buf(s);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(buf, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != buf.size() || buf.find_first_of("eE") == 0) {
        throw std::invalid_argument("not a complex number: '" + std::string(whole) + "'");
    }
    return v;
}

} // namespace

numeric::Complex parse_complex(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("empty complex number");
    if (s.back() != 'i') return {parse_real(s, text), 0.0};

    s.pop_back();
    // Split at the last sign that is not the leading one or part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, parse_real(s, text)};
    const auto re = std::string_view(s).substr(0, split);
    const auto im = std::string_view(s).substr(split);
    if (re.empty()) throw std::invalid_argument("not a complex number: '" + std::string(text) + "'");
    return {parse_real(re, text), parse_real(im, text)};
}

std::string truncate_decimal(double value, int digits) {
    if (!std::isfinite(value)) return value != value ? "nan" : (value > 0 ? "inf" : "-inf");
    // Render with guard digits, then cut: truncation toward zero.
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", digits + 4, value);
    std::string s(buf);
    s.resize(s.size() - 4);
    if (digits == 0) s.pop_back();  // trailing '.'
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
    return s;
}

std::string rational_decimal(const subsets::Rational& value, int digits) {
    using boost::multiprecision::cpp_int;
    if (value < 0) throw std::invalid_argument("rational_decimal expects a non-negative value");
    const cpp_int num = boost::multiprecision::numerator(value);
    const cpp_int den = boost::multiprecision::denominator(value);
    std::string out = cpp_int(num / den).str();
    cpp_int rem = num % den;
    std::string frac;
    for (int i = 0; i < digits && rem != 0; ++i) {
        rem *= 10;
        frac.push_back(static_cast<char>('0' + static_cast<int>(rem / den)));
        rem %= den;
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return frac.empty() ? out : out + "." + frac;
}

std::string format_complex(numeric::Complex z, int digits) {
    std::string im = truncate_decimal(z.imag(), digits);
    if (im.front() != '-') im.insert(im.begin(), '+');
    return truncate_decimal(z.real(), digits) + im + "i";
}

nlohmann::json complex_json(numeric::Complex z, int digits) {
    return {{"re", truncate_decimal(z.real(), digits)}, {"im", truncate_decimal(z.imag(), digits)}};
}

nlohmann::json eval_result_json(const numeric::EvalResult& r, int digits) {
    return {{"value", complex_json(r.value, digits)},
            {"bound", r.bound},
            {"terms", r.terms_used},
            {"precision_bits", r.precision_bits}};
}

bool matches_printed(double value, std::string_view printed) {
    std::string p(printed);
    while (!p.empty() && p.back() == '.') p.pop_back();
    const auto dot = p.find('.');
    const int digits = dot == std::string::npos ? 0 : static_cast<int>(p.size() - dot - 1);
    return truncate_decimal(value, digits) == p;
}

} // namespace qdensity::cli
