#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <string>
#include <string_view>

#include "qcmerge/errors.hpp"

namespace qcmerge {

/// An exact rotation angle: (num/den)*pi plus a signed integer combination of
/// named parameters. The constant part is kept reduced and normalized to [0, 2pi).
///
/// Predicates answer "provably true for every parameter valuation"; any angle
/// with live parameters therefore fails all congruence tests.
class Angle {
public:
    Angle() = default;

    static Angle zero() { return Angle(); }

    /// num/den * pi.
    static Angle rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw UsageError("Angle: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Angle a;
        a.num_ = num;
        a.den_ = den;
        a.normalize();
        return a;
    }

    static Angle pi() { return rational(1, 1); }
    static Angle pi_over(std::int64_t den) { return rational(1, den); }

    static Angle parameter(std::string name, std::int32_t coeff = 1) {
        Angle a;
        if (coeff != 0) a.params_.emplace(std::move(name), coeff);
        return a;
    }

    std::int64_t const_num() const { return num_; }
    std::int64_t const_den() const { return den_; }
    const std::map<std::string, std::int32_t>& params() const { return params_; }

    bool is_constant() const { return params_.empty(); }

    friend Angle add(const Angle& a, const Angle& b) {
        Angle r;
        const __int128 num = static_cast<__int128>(a.num_) * b.den_ +
                             static_cast<__int128>(b.num_) * a.den_;
        const __int128 den = static_cast<__int128>(a.den_) * b.den_;
        r.assign_reduced(num, den);
        r.params_ = a.params_;
        for (const auto& [name, coeff] : b.params_) {
            auto it = r.params_.find(name);
            if (it == r.params_.end()) {
                r.params_.emplace(name, coeff);
            } else if ((it->second += coeff) == 0) {
                r.params_.erase(it);
            }
        }
        return r;
    }

    friend Angle negate(const Angle& a) {
        Angle r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        r.normalize();
        for (const auto& [name, coeff] : a.params_) r.params_.emplace(name, -coeff);
        return r;
    }

    friend Angle operator+(const Angle& a, const Angle& b) { return add(a, b); }
    friend Angle operator-(const Angle& a) { return negate(a); }
    friend Angle operator-(const Angle& a, const Angle& b) { return add(a, negate(b)); }

    bool operator==(const Angle& other) const {
        return num_ == other.num_ && den_ == other.den_ && params_ == other.params_;
    }

    bool is_zero() const { return params_.empty() && num_ == 0; }

    /// Provably k*pi/2 for some integer k.
    bool is_half_pi_multiple() const { return params_.empty() && (den_ == 1 || den_ == 2); }

    bool is_pi_mod_2pi() const { return params_.empty() && num_ == 1 && den_ == 1; }

    /// k with angle == k*pi/2 mod 2pi; requires is_half_pi_multiple().
    int quarter_turns() const {
        if (!is_half_pi_multiple()) throw UsageError("quarter_turns: not a pi/2 multiple");
        return static_cast<int>((num_ * 2 / den_) & 3);
    }

    /// Value in radians, reduced to [0, 2pi). Every parameter must be assigned.
    double evaluate(const std::map<std::string, double>& assignment) const {
        double v = std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
        for (const auto& [name, coeff] : params_) {
            auto it = assignment.find(name);
            if (it == assignment.end()) throw UsageError("evaluate: missing parameter " + name);
            v += coeff * it->second;
        }
        v = std::fmod(v, 2 * std::numbers::pi);
        if (v < 0) v += 2 * std::numbers::pi;
        return v;
    }

    /// Text form such as "pi/4", "3pi/2", "a3+pi/4", "a1+a1-b0", "0".
    std::string to_string() const {
        std::string out;
        for (const auto& [name, coeff] : params_) {
            const char sgn = coeff > 0 ? '+' : '-';
            for (std::int32_t i = 0; i < std::abs(coeff); ++i) {
                if (!out.empty() || sgn == '-') out += sgn;
                out += name;
            }
        }
        if (num_ != 0) {
            if (!out.empty()) out += '+';
            if (num_ != 1) out += std::to_string(num_);
            out += "pi";
            if (den_ != 1) out += "/" + std::to_string(den_);
        }
        if (out.empty()) out = "0";
        return out;
    }

    /// Parses the grammar: [sign] term (('+'|'-') term)*, where a term is
    /// "pi", "<int>pi", "pi/<int>", "<int>pi/<int>", an identifier, or a
    /// numeric literal in radians. Numeric literals snap to k*pi/2^d (d <= 20)
    /// within 1e-9; otherwise `fresh_symbol` is consulted for an opaque
    /// parameter name, and a ParseError is raised if none is provided.
    static Angle parse(std::string_view text,
                       const std::function<std::string()>& fresh_symbol = nullptr) {
        Parser p{text, 0, fresh_symbol};
        Angle result = p.parse_sum();
        p.skip_ws();
        if (p.pos != text.size()) throw ParseError("angle: trailing input in '" + std::string(text) + "'");
        return result;
    }

    /// Radians -> exact angle via the dyadic snapping rule.
    static Angle snap_radians(double radians, const std::function<std::string()>& fresh_symbol) {
        constexpr double kTol = 1e-9;
        for (int d = 0; d <= 20; ++d) {
            const double scaled = radians * static_cast<double>(std::int64_t{1} << d) / std::numbers::pi;
            const double k = std::round(scaled);
            if (std::abs(k) > 1e15) break;
            const double back = k * std::numbers::pi / static_cast<double>(std::int64_t{1} << d);
            if (std::abs(radians - back) <= kTol)
                return rational(static_cast<std::int64_t>(k), std::int64_t{1} << d);
        }
        if (!fresh_symbol) throw ParseError("angle: numeric literal is not a dyadic pi fraction");
        return parameter(fresh_symbol());
    }

private:
    void normalize() {
        assign_reduced(num_, den_);
    }

    void assign_reduced(__int128 num, __int128 den) {
        // Reduce, then take the constant mod 2pi into [0, 2pi).
        __int128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        num %= 2 * den;
        if (num < 0) num += 2 * den;
        g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num > INT64_MAX || den > INT64_MAX) throw ArithmeticError("angle denominator overflow");
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    struct Parser {
        std::string_view text;
        std::size_t pos;
        const std::function<std::string()>& fresh_symbol;

        void skip_ws() {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        }

        static std::int64_t to_int64(const std::string& digits) {
            try {
                return std::stoll(digits);
            } catch (const std::exception&) {
                throw ParseError("angle: integer '" + digits + "' out of range");
            }
        }

        Angle parse_sum() {
            skip_ws();
            bool neg = false;
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
                neg = text[pos] == '-';
                ++pos;
            }
            Angle total = parse_term(neg);
            for (;;) {
                skip_ws();
                if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-')) break;
                neg = text[pos] == '-';
                ++pos;
                total = add(total, parse_term(neg));
            }
            return total;
        }

        Angle parse_term(bool neg) {
            skip_ws();
            if (pos >= text.size()) throw ParseError("angle: expected a term");
            const char c = text[pos];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number(neg);
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_symbolic(neg);
            throw ParseError("angle: unexpected character '" + std::string(1, c) + "'");
        }

        // "pi[/int]" or an identifier.
        Angle parse_symbolic(bool neg) {
            const std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            const std::string_view word = text.substr(start, pos - start);
            if (word == "pi") return finish_pi(neg ? -1 : 1);
            return Angle::parameter(std::string(word), neg ? -1 : 1);
        }

        // "<int>pi[/int]", "<int>*pi[/int]", or a numeric radian literal.
        Angle parse_number(bool neg) {
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            bool is_float = false;
            if (pos < text.size() && text[pos] == '.') {
                is_float = true;
                ++pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
                    ++pos;
                    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                }
            }
            const std::string token(text.substr(start, pos - start));
            std::size_t save = pos;
            skip_ws();
            if (!is_float && pos < text.size() && (text[pos] == 'p' || text[pos] == '*')) {
                if (text[pos] == '*') {
                    ++pos;
                    skip_ws();
                }
                if (text.substr(pos, 2) == "pi") {
                    pos += 2;
                    const std::int64_t k = to_int64(token);
                    return finish_pi(neg ? -k : k);
                }
            }
            pos = save;
            double radians = 0.0;
            try {
                radians = std::stod(token);
            } catch (const std::exception&) {
                throw ParseError("angle: numeric literal '" + token + "' out of range");
            }
            return Angle::snap_radians(neg ? -radians : radians, fresh_symbol);
        }

        Angle finish_pi(std::int64_t numerator) {
            skip_ws();
            std::int64_t den = 1;
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip_ws();
                const std::size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                if (start == pos) throw ParseError("angle: expected denominator after '/'");
                den = to_int64(std::string(text.substr(start, pos - start)));
            }
            return Angle::rational(numerator, den);
        }
    };

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::map<std::string, std::int32_t> params_;
};

}  // namespace qcmerge
