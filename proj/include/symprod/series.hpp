#pragma once

// Truncated multivariate power/Laurent series with exact rational
// coefficients and exponents in ½ℤ.
//
// One variable (q or p) is the counting variable: its exponents are
// nonnegative integers and terms above `order` are dropped. All other
// variables are exact and may carry negative or half-integer exponents.

#include <symprod/errors.hpp>
#include <symprod/half.hpp>
#include <symprod/rational.hpp>

#include <array>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symprod {

enum class Var : std::uint8_t { q = 0, p = 1, t = 2, x = 3, y = 4 };

inline constexpr std::array<Var, 5> kAllVars{Var::q, Var::p, Var::t, Var::x, Var::y};

inline char var_name(Var v) {
    constexpr char names[] = {'q', 'p', 't', 'x', 'y'};
    return names[static_cast<int>(v)];
}

/// Exponent vector over {q, p, t, x, y}.
class Monomial {
public:
    Monomial() = default;

    static Monomial of(Var v, Half e = Half::from_int(1)) {
        Monomial m;
        m.set(v, e);
        return m;
    }
    static Monomial of(std::initializer_list<std::pair<Var, Half>> exps) {
        Monomial m;
        for (auto [v, e] : exps) m.set(v, e);
        return m;
    }

    Half operator[](Var v) const { return exps_[static_cast<int>(v)]; }
    void set(Var v, Half e) { exps_[static_cast<int>(v)] = e; }

    bool is_one() const {
        for (Half e : exps_)
            if (e != Half{}) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        return r;
    }

    Monomial pow(std::int64_t k) const {
        Monomial r;
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] * k;
        return r;
    }

    bool operator==(const Monomial&) const = default;

private:
    std::array<Half, 5> exps_{};
};

/// Canonical term order: counting exponent ascending, then (t, x, y, other)
/// ascending, where "other" is whichever of q/p is not the counting variable.
struct TermOrder {
    Var trunc = Var::q;

    static std::array<Var, 5> layout(Var trunc) {
        return {trunc, Var::t, Var::x, Var::y, trunc == Var::q ? Var::p : Var::q};
    }

    bool operator()(const Monomial& a, const Monomial& b) const {
        for (Var v : layout(trunc)) {
            if (a[v] != b[v]) return a[v] < b[v];
        }
        return false;
    }
};

class Series {
public:
    using TermMap = std::map<Monomial, Rational, TermOrder>;

    /// Sentinel order for exact polynomials in the counting variable.
    static constexpr int kExact = INT_MAX;

    Series(Var trunc, int order) : trunc_(trunc), order_(order), terms_(TermOrder{trunc}) {
        if (trunc != Var::q && trunc != Var::p)
            throw UsageError("counting variable must be q or p");
        if (order < 0) throw UsageError("negative truncation order");
    }

    static Series zero(Var trunc, int order) { return Series(trunc, order); }
    static Series one(Var trunc, int order) { return constant(Rational(1), trunc, order); }
    static Series constant(const Rational& c, Var trunc, int order) {
        Series s(trunc, order);
        s.add_term(Monomial{}, c);
        return s;
    }
    static Series term(const Monomial& m, const Rational& c, Var trunc, int order) {
        Series s(trunc, order);
        s.add_term(m, c);
        return s;
    }

    Var trunc_var() const { return trunc_; }
    int order() const { return order_; }
    bool exact() const { return order_ == kExact; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_integral() const {
        for (const auto& [m, c] : terms_)
            if (!is_integer(c)) return false;
        return true;
    }

    /// Adds c·m in place; drops the term if above the truncation order.
    void add_term(const Monomial& m, const Rational& c) {
        const Half e = m[trunc_];
        if (!e.is_integer() || e < Half{})
            throw UsageError(std::string("exponent of counting variable ") + var_name(trunc_) +
                             " must be a nonnegative integer, got " + e.str());
        if (e.as_integer() > order_ || sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (inserted) {
            it->second.canonicalize();  // Rational(n, d) is not reduced on construction
        } else {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    /// The coefficient of trunc^n as an exact polynomial in the remaining variables.
    Series slice(int n) const {
        Series out(trunc_, kExact);
        for (const auto& [m, c] : terms_) {
            if (m[trunc_] == Half::from_int(n)) {
                Monomial rest = m;
                rest.set(trunc_, Half{});
                out.add_term(rest, c);
            }
        }
        return out;
    }

    Series truncated(int order) const {
        Series out(trunc_, std::min(order, order_));
        for (const auto& [m, c] : terms_) out.add_term(m, c);
        return out;
    }

    Series operator-() const {
        Series out(trunc_, order_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    Series scaled(const Rational& k) const {
        Series out(trunc_, order_);
        if (sgn(k) == 0) return out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * k);
        return out;
    }

    /// Canonical rendering, e.g. "1 + 2*q + t^(3/2)*q^2".
    std::string str() const;

    friend bool operator==(const Series& a, const Series& b) {
        return a.trunc_ == b.trunc_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

private:
    Var trunc_;
    int order_;
    TermMap terms_;
};

inline void require_same_trunc(const Series& a, const Series& b, const char* op) {
    if (a.trunc_var() != b.trunc_var())
        throw UsageError(std::string(op) + ": mismatched counting variables " +
                         var_name(a.trunc_var()) + " and " + var_name(b.trunc_var()));
}

inline Series add(const Series& a, const Series& b) {
    require_same_trunc(a, b, "add");
    Series out(a.trunc_var(), std::min(a.order(), b.order()));
    for (const auto& [m, c] : a.terms()) out.add_term(m, c);
    for (const auto& [m, c] : b.terms()) out.add_term(m, c);
    return out;
}

inline Series mul(const Series& a, const Series& b) {
    require_same_trunc(a, b, "mul");
    const Var tv = a.trunc_var();
    const int order = std::min(a.order(), b.order());
    Series out(tv, order);
    for (const auto& [ma, ca] : a.terms()) {
        const std::int64_t ea = ma[tv].as_integer();
        if (ea > order) break;
        for (const auto& [mb, cb] : b.terms()) {
            // terms are sorted by counting exponent first
            if (ea + mb[tv].as_integer() > order) break;
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return add(a, -b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

/// Generalized binomial (1 + sign·m)^alpha, expanded to `order` in `trunc`.
inline Series binom_pow(int sign, const Monomial& m, const Rational& alpha, Var trunc, int order) {
    if (sign != 1 && sign != -1) throw UsageError("binom_pow: sign must be +1 or -1");
    const Half step = m[trunc];
    if (!step.is_integer() || step <= Half{})
        throw UsageError("binom_pow: monomial must have positive integer exponent in the counting variable");
    if (order == Series::kExact && !(is_integer(alpha) && sgn(alpha) >= 0))
        throw UsageError("binom_pow: infinite expansion needs a finite order");
    Series out(trunc, order);
    Rational binom(1);
    Monomial power;
    for (std::int64_t j = 0; j * step.as_integer() <= order; ++j) {
        if (sgn(binom) == 0) break;
        out.add_term(power, (sign < 0 && j % 2 == 1) ? Rational(-binom) : binom);
        binom *= (alpha - Rational(j)) / Rational(j + 1);
        power = power * m;
    }
    return out;
}

/// log(1 − m) = −Σ_{j≥1} m^j / j.
inline Series log1m(const Monomial& m, Var trunc, int order) {
    const Half step = m[trunc];
    if (!step.is_integer() || step <= Half{})
        throw UsageError("log1m: monomial must have positive integer exponent in the counting variable");
    if (order == Series::kExact) throw UsageError("log1m: needs a finite order");
    Series out(trunc, order);
    Monomial power = m;
    for (std::int64_t j = 1; j * step.as_integer() <= order; ++j) {
        out.add_term(power, Rational(-1, j));
        power = power * m;
    }
    return out;
}

inline Series exp_series(const Series& a) {
    const Var tv = a.trunc_var();
    for (const auto& [m, c] : a.terms()) {
        if (m[tv] == Half{})
            throw UsageError("exp_series: argument has a nonzero constant term in the counting variable");
    }
    if (a.exact() && !a.is_zero()) throw UsageError("exp_series: needs a finite order");
    const int order = a.exact() ? 0 : a.order();
    Series out = Series::one(tv, a.order());
    Series power = Series::one(tv, a.order());
    for (int k = 1; k <= order; ++k) {
        power = (power * a).scaled(Rational(1, k));
        if (power.is_zero()) break;
        out = out + power;
    }
    return out;
}

/// ∏_{l=1}^{order} factor(l). Each factor must be 1 + O(trunc).
inline Series product_over_levels(const std::function<Series(int)>& factor, Var trunc, int order) {
    Series out = Series::one(trunc, order);
    for (int l = 1; l <= order; ++l) {
        Series f = factor(l);
        if (f.trunc_var() != trunc) throw UsageError("product_over_levels: factor has wrong counting variable");
        if (!(f.slice(0) == Series::one(trunc, Series::kExact)))
            throw UsageError("product_over_levels: factor " + std::to_string(l) + " has a nonunit constant term");
        out = out * f;
    }
    return out;
}

namespace detail {

inline Half scale_half(Half a, Half b, const char* who) {
    const std::int64_t num = a.twice() * b.twice();
    if (num % 2 != 0)
        throw UsageError(std::string(who) + ": exponent " + a.str() + "*" + b.str() + " leaves ½ℤ");
    return Half::from_twice(num / 2);
}

} // namespace detail

/// Replaces `var^e` by `replacement^e` in every term. When `var` is the
/// counting variable the replacement must contain the new counting variable
/// (default: the same one) with a positive integer exponent.
inline Series substitute(const Series& a, Var var, const Monomial& replacement,
                         std::optional<Var> new_trunc = std::nullopt) {
    const Var old_tv = a.trunc_var();
    Var tv = old_tv;
    int order = a.order();

    if (var == old_tv) {
        tv = new_trunc.value_or(old_tv);
        const Half step = replacement[tv];
        if (!step.is_integer() || step <= Half{})
            throw UsageError(std::string("substitute: replacement for the counting variable must contain ") +
                             var_name(tv) + " with a positive integer exponent");
        if (tv != old_tv) {
            for (const auto& [m, c] : a.terms())
                if (m[tv] != Half{})
                    throw UsageError(std::string("substitute: input already depends on ") + var_name(tv));
        }
        if (order != Series::kExact) {
            const std::int64_t scaled = static_cast<std::int64_t>(order) * step.as_integer();
            order = scaled >= Series::kExact ? Series::kExact - 1 : static_cast<int>(scaled);
        }
    } else {
        if (new_trunc && *new_trunc != old_tv)
            throw UsageError("substitute: cannot change the counting variable when substituting another variable");
        if (replacement[old_tv] < Half{})
            throw UsageError("substitute: replacement lowers the counting exponent without bound");
    }

    Series out(tv, order);
    for (const auto& [m, c] : a.terms()) {
        const Half e = m[var];
        Monomial rest = m;
        rest.set(var, Half{});
        Monomial image;
        for (Var w : kAllVars) image.set(w, detail::scale_half(replacement[w], e, "substitute"));
        if (var != old_tv && image[old_tv] < Half{})
            throw UsageError("substitute: negative exponent pushes terms below the counting order");
        out.add_term(rest * image, c);
    }
    return out;
}

/// Evaluates the assigned (non-counting) variables at exact rationals.
inline Series specialize(const Series& a, const std::map<Var, Rational>& assignments) {
    for (const auto& [v, val] : assignments)
        if (v == a.trunc_var()) throw UsageError("specialize: cannot assign the counting variable");

    Series out(a.trunc_var(), a.order());
    for (const auto& [m, c] : a.terms()) {
        Monomial rest = m;
        Rational coeff = c;
        for (const auto& [v, val] : assignments) {
            const Half e = m[v];
            rest.set(v, Half{});
            if (e == Half{}) continue;
            if (sgn(val) == 0) {
                if (e < Half{}) throw DomainError("specialize: zero raised to a negative power");
                coeff = 0;
                continue;
            }
            if (e.is_integer()) {
                coeff *= pow(val, e.as_integer());
                continue;
            }
            auto root = exact_sqrt(val);
            if (!root)
                throw DomainError(std::string("specialize: ") + var_name(v) + "=" + to_string(val) +
                                  " raised to half-integer power " + e.str() + " is not an exact rational");
            coeff *= pow(*root, e.twice());
        }
        out.add_term(rest, coeff);
    }
    return out;
}

/// First monomial (in canonical order) where a and b differ after both are
/// truncated to the smaller order.
inline std::optional<Monomial> first_difference(const Series& a, const Series& b) {
    require_same_trunc(a, b, "compare");
    const int order = std::min(a.order(), b.order());
    Series diff = a.truncated(order) - b.truncated(order);
    if (diff.is_zero()) return std::nullopt;
    return diff.terms().begin()->first;
}

namespace detail {

inline std::string exponent_str(Half e) {
    if (e.is_integer()) return std::to_string(e.as_integer());
    return "(" + e.str() + ")";
}

inline std::string monomial_str(const Monomial& m, Var trunc) {
    std::string out;
    const std::array<Var, 5> order = {Var::t, Var::x, Var::y, trunc == Var::q ? Var::p : Var::q, trunc};
    for (Var v : order) {
        const Half e = m[v];
        if (e == Half{}) continue;
        if (!out.empty()) out += '*';
        out += var_name(v);
        if (e != Half::from_int(1)) out += "^" + exponent_str(e);
    }
    return out;
}

} // namespace detail

inline std::string Series::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = sgn(c) < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const std::string mono = detail::monomial_str(m, trunc_);
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out;
}

inline std::string to_string(const Monomial& m, Var trunc = Var::q) {
    const std::string s = detail::monomial_str(m, trunc);
    return s.empty() ? "1" : s;
}

} // namespace symprod
