#pragma once

// Cohomology of the symmetric-product orbifold (X^n, S_n), assembled sector
// by sector from cycle types, together with the closed product/exponential
// generating functions it is compared against.
//
// Every SeriesKind has two independent routes:
//   brute_series  sums an invariant of the n-th symmetric product (or of
//                  the orbifold, twisted sectors included) over n;
//   closed_series expands the corresponding product/exp formula.

#include <symprod/errors.hpp>
#include <symprod/gvs.hpp>
#include <symprod/manifold.hpp>
#include <symprod/series.hpp>
#include <symprod/symgrp.hpp>

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symprod {

// ---------------------------------------------------------------------------
// genera of bigraded spaces

enum class Genus { chi_y, signature, arithmetic, euler };

/// χ_{−y}(W) = Σ (−1)^{s+t} h^{s,t} y^s. Well defined on half-integer
/// bidegrees because s + t is always an integer.
inline Series chi_minus_y(const BigradedDims& w, Var trunc = Var::q) {
    Series s(trunc, Series::kExact);
    for (const auto& [pq, n] : w.dims()) {
        const bool odd = is_odd(pq);
        s.add_term(Monomial::of(Var::y, pq.first), Rational(odd ? -n : n));
    }
    return s;
}

/// Hirzebruch χ_y(W) = Σ (−1)^t h^{s,t} y^s; needs integral t.
inline Series chi_y(const BigradedDims& w, Var trunc = Var::q) {
    Series s(trunc, Series::kExact);
    for (const auto& [pq, n] : w.dims()) {
        if (!pq.second.is_integer())
            throw DomainError("chi_y: (-1)^t undefined for half-integer t = " + pq.second.str());
        s.add_term(Monomial::of(Var::y, pq.first), Rational(pq.second.is_odd_integer() ? -n : n));
    }
    return s;
}

/// χ_y (as a polynomial in y), or the numbers χ_1, χ_0, χ_{−1} as constants.
inline Series genus(const BigradedDims& w, Genus which, Var trunc = Var::q) {
    switch (which) {
    case Genus::chi_y:
        return chi_y(w, trunc);
    case Genus::signature:
        return specialize(chi_y(w, trunc), {{Var::y, Rational(1)}});
    case Genus::arithmetic:
        return specialize(chi_y(w, trunc), {{Var::y, Rational(0)}});
    case Genus::euler:
        return specialize(chi_minus_y(w, trunc), {{Var::y, Rational(1)}});
    }
    throw UsageError("genus: unknown genus");
}

inline Rational genus_value(const BigradedDims& w, Genus which) {
    if (which == Genus::chi_y) throw UsageError("genus_value: chi_y is a polynomial");
    return genus(w, which).coeff(Monomial{});
}

// ---------------------------------------------------------------------------
// series kinds

enum class SeriesKind {
    euler_sym,
    euler_orb,
    poincare_sym,
    poincare_orb,
    hodge_sym,
    hodge_orb,
    chiy_sym,
    arith_sym,
    sign_sym,
    chiy_orb,
    arith_orb,
    sign_orb,
    hodge_sym_B,
    chiy_sym_B,
    hodge_orb_B,
    chiy_orb_B,
    gottsche_poincare,
    gottsche_hodge,
    dmvv_q0,
    dmvv_q0_B,
};

struct KindInfo {
    SeriesKind kind;
    std::string_view name;
    std::string_view lhs;      ///< what brute_series sums
    std::string_view formula;  ///< what closed_series expands
};

/// The public mapping from kind tags to generating functions.
inline constexpr std::array<KindInfo, 20> kKinds{{
    {SeriesKind::euler_sym, "euler_sym", "sum_n chi(X^(n)) q^n", "(1-q)^(-chi(X))"},
    {SeriesKind::euler_orb, "euler_orb", "sum_n chi(X^n,S_n) q^n = sum_n sum_c chi(prod_l X^(N_l)) q^n",
     "prod_l (1-q^l)^(-chi(X))"},
    {SeriesKind::poincare_sym, "poincare_sym", "sum_n P_t(X^(n)) q^n, H*(X^(n)) = S^n(H*(X))",
     "prod_{d odd}(1+t^d q)^{b_d} / prod_{d even}(1-t^d q)^{b_d}"},
    {SeriesKind::poincare_orb, "poincare_orb", "sum_n P_t(X^n,S_n) q^n, sectors (+)_c (x)_l S^{N_l}(H*(X)[m(l-1)])",
     "prod_l prod_{d odd}(1+t^d q^l)^{b_{d-m(l-1)}} / prod_{d even}(1-t^d q^l)^{b_{d-m(l-1)}}"},
    {SeriesKind::hodge_sym, "hodge_sym", "sum_n h_{x,y}(X^(n)) q^n",
     "prod_{s+t odd}(1+x^s y^t q)^{h^{s,t}} / prod_{s+t even}(1-x^s y^t q)^{h^{s,t}}"},
    {SeriesKind::hodge_orb, "hodge_orb", "sum_n h_{x,y}(X^n,S_n) q^n, sectors (x)_l S^{N_l}(H**(X)[k(l-1),k(l-1)])",
     "prod_l prod_{s,t} (1 -/+ x^{s+k(l-1)} y^{t+k(l-1)} q^l)^{-/+ h^{s,t}}, sign by parity of the shifted total degree"},
    {SeriesKind::chiy_sym, "chiy_sym", "sum_n chi_{-y}(X^(n)) q^n", "exp(sum_{m>=1} chi_{-y^m}(X) q^m / m)"},
    {SeriesKind::arith_sym, "arith_sym", "sum_n p_a(X^(n)) q^n", "(1-q)^(-p_a(X))"},
    {SeriesKind::sign_sym, "sign_sym", "sum_n sign(X^(n)) q^n", "(1-q^2)^(-chi/2) ((1+q)/(1-q))^(sign/2)"},
    {SeriesKind::chiy_orb, "chiy_orb", "sum_n chi_{-y}(X^n,S_n) q^n = sum_c y^{F_c} chi_{-y}(sector)",
     "exp(sum_{n>=1} q^n/n chi_{-y^n}(X) / (1-(y^k q)^n))"},
    {SeriesKind::arith_orb, "arith_orb", "sum_n p_a(X^n,S_n) q^n = chi_orb at y=0", "(1-q)^(-p_a(X))"},
    {SeriesKind::sign_orb, "sign_orb", "sum_n sum_c (-1)^{F_c} sign(sector) q^n",
     "prod_m (1-q^{2m})^(-chi/2) ((1+q^m)/(1-q^m))^((-1)^{k(m+1)} sign/2)"},
    {SeriesKind::hodge_sym_B, "hodge_sym_B", "sum_n hhat_{x,y}(X^(n)) q^n", "hodge_sym product with h^{-s,t}"},
    {SeriesKind::chiy_sym_B, "chiy_sym_B", "sum_n chihat_{-y}(X^(n)) q^n",
     "exp(sum_{m>=1} chihat_{-y^m}(X) q^m / m)"},
    {SeriesKind::hodge_orb_B, "hodge_orb_B", "sum_n hhat_{x,y}(X^n,S_n) q^n", "hodge_orb product with h^{-s,t}"},
    {SeriesKind::chiy_orb_B, "chiy_orb_B", "sum_n chihat_{-y}(X^n,S_n) q^n = sum_c y^{F_c} chihat_{-y}(sector)",
     "exp(sum_{n>=1} q^n/n chihat_{-y^n}(X) / (1-(y^k q)^n))"},
    {SeriesKind::gottsche_poincare, "gottsche_poincare", "poincare_orb sector assembly (surfaces)",
     "prod_l (1+t^{2l-1}q^l)^{b1}(1+t^{2l+1}q^l)^{b3} / ((1-t^{2l-2}q^l)^{b0}(1-t^{2l}q^l)^{b2}(1-t^{2l+2}q^l)^{b4})"},
    {SeriesKind::gottsche_hodge, "gottsche_hodge", "hodge_orb sector assembly (surfaces)",
     "prod_l prod_{s,t}(1 -/+ x^{s+l-1} y^{t+l-1} q^l)^{-/+ h^{s,t}}"},
    {SeriesKind::dmvv_q0, "dmvv_q0", "sum_n p^n y^{-kn} chi_{-y}(X^n,S_n)",
     "exp(sum_{m>=1} chi(X;0,y^m)/m p^m/(1-p^m)), chi(X;0,y) = y^{-k} chi_{-y}(X)"},
    {SeriesKind::dmvv_q0_B, "dmvv_q0_B", "sum_n p^n y^{-kn} chihat_{-y}(X^n,S_n)",
     "exp(sum_{m>=1} chihat(X;0,y^m)/m p^m/(1-p^m))"},
}};

inline const KindInfo& kind_info(SeriesKind k) {
    for (const auto& info : kKinds)
        if (info.kind == k) return info;
    throw UsageError("unknown series kind");
}

inline std::string_view kind_name(SeriesKind k) { return kind_info(k).name; }

inline std::optional<SeriesKind> parse_kind(std::string_view name) {
    for (const auto& info : kKinds)
        if (info.name == name) return info.kind;
    return std::nullopt;
}

inline Var counting_var(SeriesKind k) {
    return (k == SeriesKind::dmvv_q0 || k == SeriesKind::dmvv_q0_B) ? Var::p : Var::q;
}

inline bool is_b_kind(SeriesKind k) {
    switch (k) {
    case SeriesKind::hodge_sym_B:
    case SeriesKind::chiy_sym_B:
    case SeriesKind::hodge_orb_B:
    case SeriesKind::chiy_orb_B:
    case SeriesKind::dmvv_q0_B:
        return true;
    default:
        return false;
    }
}

/// Why `kind` cannot be computed for `x`, or nullopt when it can.
inline std::optional<std::string> inapplicable_reason(SeriesKind kind, const ManifoldData& x) {
    switch (kind) {
    case SeriesKind::euler_sym:
    case SeriesKind::euler_orb:
    case SeriesKind::poincare_sym:
    case SeriesKind::poincare_orb:
        return std::nullopt;
    case SeriesKind::gottsche_poincare:
        if (!x.is_complex() || x.dim_c != 2) return "needs a complex surface (dim_c = 2)";
        return std::nullopt;
    case SeriesKind::gottsche_hodge:
        if (!x.is_complex() || x.dim_c != 2) return "needs a complex surface (dim_c = 2)";
        if (!x.hodge) return "needs a Hodge table";
        return std::nullopt;
    case SeriesKind::sign_orb:
        if (!x.hodge) return "needs a Hodge table";
        if (*x.dim_c % 2 != 0) return "orbifold signature needs integral sector shifts (even dim_c)";
        return std::nullopt;
    case SeriesKind::arith_orb:
        if (!x.hodge) return "needs a Hodge table";
        if (*x.dim_c == 0) return "closed formula assumes dim_c > 0 (twisted sectors vanish at y = 0)";
        return std::nullopt;
    default:
        break;
    }
    if (is_b_kind(kind)) {
        if (!x.hodgeB) return "needs a B-table (h^{-p,q})";
        return std::nullopt;
    }
    if (!x.hodge) return "needs a Hodge table";
    return std::nullopt;
}

inline void require_applicable(SeriesKind kind, const ManifoldData& x) {
    if (auto why = inapplicable_reason(kind, x))
        throw InputError(std::string(kind_name(kind)) + " on " + x.name + ": " + *why);
}

// ---------------------------------------------------------------------------
// sector assembly

namespace detail {

/// Σ_{c ⊢ n} weight(c, ∏_l piece(l, N_l)).
template <class T, class Piece, class Mul, class Add, class Weight>
T sector_sum(int n, const T& unit, const T& zero, Piece&& piece, Mul&& mul, Add&& add, Weight&& weight) {
    T total = zero;
    for (const auto& c : cycle_types(n)) {
        T prod = unit;
        for (const auto& [l, count] : c.mult()) prod = mul(prod, piece(l, count));
        total = add(total, weight(c, prod));
    }
    return total;
}

template <class T>
class PieceCache {
public:
    explicit PieceCache(std::function<T(int, int)> make) : make_(std::move(make)) {}
    const T& operator()(int l, int count) {
        auto key = std::make_pair(l, count);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, make_(l, count)).first;
        return it->second;
    }

private:
    std::function<T(int, int)> make_;
    std::map<std::pair<int, int>, T> cache_;
};

inline const BigradedDims& table_for(const ManifoldData& x, bool b_version) {
    const auto& table = b_version ? x.hodgeB : x.hodge;
    if (!table) throw InputError(x.name + (b_version ? ": missing B-table" : ": missing Hodge table"));
    return *table;
}

inline GradedDims unit_graded() { return GradedDims{{Half{}, 1}}; }
inline BigradedDims unit_bigraded() { return BigradedDims{{{Half{}, Half{}}, 1}}; }

inline BigradedDims sector_hodge_impl(const ManifoldData& x, int n, bool b_version) {
    const BigradedDims& table = table_for(x, b_version);
    const Half k = x.k();
    auto piece = [&](int l, int count) { return sym_power2(shift2(table, k * (l - 1), k * (l - 1)), count); };
    return sector_sum<BigradedDims>(
        n, unit_bigraded(), BigradedDims{}, piece,
        [](const BigradedDims& a, const BigradedDims& b) { return tensor(a, b); },
        [](const BigradedDims& a, const BigradedDims& b) { return dsum(a, b); },
        [](const CycleType&, const BigradedDims& v) { return v; });
}

} // namespace detail

/// H*(X^n, S_n) with each sector shifted by half its real codimension:
/// ⊕_c ⊗_l S^{N_l}(H*(X)[m(l−1)]).
inline GradedDims sector_dims(const ManifoldData& x, int n) {
    const int m = x.m();
    auto piece = [&](int l, int count) {
        return sym_power(shift(x.betti, Half::from_int(static_cast<std::int64_t>(m) * (l - 1))), count);
    };
    return detail::sector_sum<GradedDims>(
        n, detail::unit_graded(), GradedDims{}, piece,
        [](const GradedDims& a, const GradedDims& b) { return tensor(a, b); },
        [](const GradedDims& a, const GradedDims& b) { return dsum(a, b); },
        [](const CycleType&, const GradedDims& v) { return v; });
}

/// ⊕_c ⊗_l S^{N_l}(H^{*,*}(X)[k(l−1), k(l−1)]).
inline BigradedDims sector_hodge(const ManifoldData& x, int n) { return detail::sector_hodge_impl(x, n, false); }

/// Same assembly on the B-table h^{−p,q}.
inline BigradedDims sector_hodge_B(const ManifoldData& x, int n) { return detail::sector_hodge_impl(x, n, true); }

/// Untwisted cohomology of X^(n) = S^n(H*(X)).
inline GradedDims symprod_dims(const ManifoldData& x, int n) { return sym_power(x.betti, n); }

inline BigradedDims symprod_hodge(const ManifoldData& x, int n) {
    return sym_power2(detail::table_for(x, false), n);
}

// ---------------------------------------------------------------------------
// brute-force side

namespace detail {

inline Series counting_monomial(Var tv, int n, int order) {
    return Series::term(Monomial::of(tv, Half::from_int(n)), Rational(1), tv, order);
}

// Σ_c y^{F_c} ∏_l χ_{−y}(X^{(N_l)}): the twisted sectors enter with their
// own (unshifted) cohomology, weighted by the shift factor.
inline Series orbifold_chi_minus_y(const ManifoldData& x, int n, bool b_version, Var tv) {
    const BigradedDims& table = table_for(x, b_version);
    PieceCache<Series> cache([&](int, int count) { return chi_minus_y(sym_power2(table, count), tv); });
    const int dim_real = x.dim_real;
    return sector_sum<Series>(
        n, Series::one(tv, Series::kExact), Series::zero(tv, Series::kExact),
        [&](int l, int count) { return cache(l, count); },
        [](const Series& a, const Series& b) { return a * b; }, [](const Series& a, const Series& b) { return a + b; },
        [&](const CycleType& c, const Series& v) {
            const Half F = shift_of(c, dim_real).F;
            return v * Series::term(Monomial::of(Var::y, F), Rational(1), tv, Series::kExact);
        });
}

} // namespace detail

inline Series brute_series(SeriesKind kind, const ManifoldData& x, int order) {
    require_applicable(kind, x);
    const Var tv = counting_var(kind);
    Series out(tv, order);
    auto add_level = [&](int n, const Series& coefficient) {
        out = out + coefficient * detail::counting_monomial(tv, n, order);
    };
    auto constant = [&](const Rational& r) { return Series::constant(r, tv, Series::kExact); };

    switch (kind) {
    case SeriesKind::euler_sym:
        for (int n = 0; n <= order; ++n) add_level(n, constant(sym_power(x.betti, n).euler()));
        break;
    case SeriesKind::euler_orb: {
        detail::PieceCache<std::int64_t> cache([&](int, int count) { return sym_power(x.betti, count).euler(); });
        for (int n = 0; n <= order; ++n) {
            const std::int64_t chi = detail::sector_sum<std::int64_t>(
                n, 1, 0, [&](int l, int count) { return cache(l, count); },
                [](std::int64_t a, std::int64_t b) { return a * b; }, [](std::int64_t a, std::int64_t b) { return a + b; },
                [](const CycleType&, std::int64_t v) { return v; });
            add_level(n, constant(chi));
        }
        break;
    }
    case SeriesKind::poincare_sym:
        for (int n = 0; n <= order; ++n) add_level(n, poincare_poly(symprod_dims(x, n), tv));
        break;
    case SeriesKind::poincare_orb:
    case SeriesKind::gottsche_poincare:
        for (int n = 0; n <= order; ++n) add_level(n, poincare_poly(sector_dims(x, n), tv));
        break;
    case SeriesKind::hodge_sym:
    case SeriesKind::hodge_sym_B: {
        const BigradedDims& table = detail::table_for(x, is_b_kind(kind));
        for (int n = 0; n <= order; ++n) add_level(n, hodge_poly(sym_power2(table, n), tv));
        break;
    }
    case SeriesKind::hodge_orb:
    case SeriesKind::gottsche_hodge:
        for (int n = 0; n <= order; ++n) add_level(n, hodge_poly(sector_hodge(x, n), tv));
        break;
    case SeriesKind::hodge_orb_B:
        for (int n = 0; n <= order; ++n) add_level(n, hodge_poly(sector_hodge_B(x, n), tv));
        break;
    case SeriesKind::chiy_sym:
    case SeriesKind::chiy_sym_B: {
        const BigradedDims& table = detail::table_for(x, is_b_kind(kind));
        for (int n = 0; n <= order; ++n) add_level(n, chi_minus_y(sym_power2(table, n), tv));
        break;
    }
    case SeriesKind::arith_sym:
        for (int n = 0; n <= order; ++n)
            add_level(n, constant(genus_value(symprod_hodge(x, n), Genus::arithmetic)));
        break;
    case SeriesKind::sign_sym:
        for (int n = 0; n <= order; ++n)
            add_level(n, constant(genus_value(symprod_hodge(x, n), Genus::signature)));
        break;
    case SeriesKind::chiy_orb:
    case SeriesKind::chiy_orb_B:
        for (int n = 0; n <= order; ++n) add_level(n, detail::orbifold_chi_minus_y(x, n, is_b_kind(kind), tv));
        break;
    case SeriesKind::arith_orb:
        // p_a = χ_0, i.e. χ_{−y} at y = 0
        for (int n = 0; n <= order; ++n)
            add_level(n, specialize(detail::orbifold_chi_minus_y(x, n, false, tv), {{Var::y, Rational(0)}}));
        break;
    case SeriesKind::sign_orb: {
        detail::PieceCache<Rational> cache(
            [&](int, int count) { return genus_value(symprod_hodge(x, count), Genus::signature); });
        const int dim_real = x.dim_real;
        for (int n = 0; n <= order; ++n) {
            const Rational s = detail::sector_sum<Rational>(
                n, Rational(1), Rational(0), [&](int l, int count) { return cache(l, count); },
                [](const Rational& a, const Rational& b) { return Rational(a * b); },
                [](const Rational& a, const Rational& b) { return Rational(a + b); },
                [&](const CycleType& c, const Rational& v) {
                    const Half F = shift_of(c, dim_real).F;
                    return F.is_odd_integer() ? Rational(-v) : v;
                });
            add_level(n, constant(s));
        }
        break;
    }
    case SeriesKind::dmvv_q0:
    case SeriesKind::dmvv_q0_B: {
        const Half k = x.k();
        for (int n = 0; n <= order; ++n) {
            const Series chi = detail::orbifold_chi_minus_y(x, n, is_b_kind(kind), tv);
            add_level(n, chi * Series::term(Monomial::of(Var::y, -(k * n)), Rational(1), tv, Series::kExact));
        }
        break;
    }
    }
    return out;
}

// ---------------------------------------------------------------------------
// closed-form side

namespace detail {

/// (1 + m)^h for an odd class, (1 − m)^{−h} for an even one.
inline Series class_factor(bool odd, const Monomial& m, std::int64_t h, Var tv, int order) {
    return odd ? binom_pow(+1, m, Rational(h), tv, order) : binom_pow(-1, m, Rational(-h), tv, order);
}

inline Monomial xyq(Half s, Half t, Var tv, int level) {
    return Monomial::of({{Var::x, s}, {Var::y, t}, {tv, Half::from_int(level)}});
}

// ∏_l ∏_{(s,t)} over `table` shifted by (shift(l), shift(l)); parity is
// that of the shifted total degree.
inline Series shifted_hodge_product(const BigradedDims& table, const std::function<Half(int)>& shift, Var tv,
                                    int order) {
    return product_over_levels(
        [&](int l) {
            Series f = Series::one(tv, order);
            const Half a = shift(l);
            for (const auto& [pq, h] : table.dims()) {
                const Bidegree shifted{pq.first + a, pq.second + a};
                f = f * class_factor(is_odd(shifted), xyq(shifted.first, shifted.second, tv, l), h, tv, order);
            }
            return f;
        },
        tv, order);
}

// exp(Σ_{m≥1} w(m) · χ_{−y^m}(table) · q^m/m · g(m)).
inline Series chi_exp(const BigradedDims& table, Var tv, int order, const std::function<Series(int)>& extra) {
    const Series chi = chi_minus_y(table, tv);
    Series arg(tv, order);
    for (int m = 1; m <= order; ++m) {
        Series chi_m = substitute(chi, Var::y, Monomial::of(Var::y, Half::from_int(m)));
        Series term = chi_m * counting_monomial(tv, m, order) * extra(m);
        arg = arg + term.scaled(Rational(1, m));
    }
    return exp_series(arg);
}

} // namespace detail

inline Series closed_series(SeriesKind kind, const ManifoldData& x, int order) {
    require_applicable(kind, x);
    const Var tv = counting_var(kind);
    const Monomial q1 = Monomial::of(tv);
    auto q_pow = [&](int l) { return Monomial::of(tv, Half::from_int(l)); };

    switch (kind) {
    case SeriesKind::euler_sym:
        return binom_pow(-1, q1, Rational(-x.euler()), tv, order);
    case SeriesKind::euler_orb:
        return product_over_levels([&](int l) { return binom_pow(-1, q_pow(l), Rational(-x.euler()), tv, order); },
                                   tv, order);
    case SeriesKind::poincare_sym: {
        Series out = Series::one(tv, order);
        for (const auto& [d, b] : x.betti.dims())
            out = out * detail::class_factor(is_odd(d), Monomial::of(Var::t, d) * q1, b, tv, order);
        return out;
    }
    case SeriesKind::poincare_orb: {
        const int m = x.m();
        return product_over_levels(
            [&](int l) {
                Series f = Series::one(tv, order);
                for (const auto& [d0, b] : x.betti.dims()) {
                    const Half d = d0 + Half::from_int(static_cast<std::int64_t>(m) * (l - 1));
                    f = f * detail::class_factor(is_odd(d), Monomial::of(Var::t, d) * q_pow(l), b, tv, order);
                }
                return f;
            },
            tv, order);
    }
    case SeriesKind::hodge_sym:
    case SeriesKind::hodge_sym_B: {
        const BigradedDims& table = detail::table_for(x, is_b_kind(kind));
        Series out = Series::one(tv, order);
        for (const auto& [pq, h] : table.dims())
            out = out * detail::class_factor(is_odd(pq), detail::xyq(pq.first, pq.second, tv, 1), h, tv, order);
        return out;
    }
    case SeriesKind::hodge_orb:
    case SeriesKind::hodge_orb_B: {
        const Half k = x.k();
        return detail::shifted_hodge_product(detail::table_for(x, is_b_kind(kind)),
                                             [k](int l) { return k * (l - 1); }, tv, order);
    }
    case SeriesKind::gottsche_hodge:
        return detail::shifted_hodge_product(*x.hodge, [](int l) { return Half::from_int(l - 1); }, tv, order);
    case SeriesKind::gottsche_poincare: {
        auto b = [&](int d) { return x.betti.at(Half::from_int(d)); };
        return product_over_levels(
            [&](int l) {
                auto tq = [&](int tdeg) { return Monomial::of(Var::t, Half::from_int(tdeg)) * q_pow(l); };
                return binom_pow(+1, tq(2 * l - 1), Rational(b(1)), tv, order) *
                       binom_pow(+1, tq(2 * l + 1), Rational(b(3)), tv, order) *
                       binom_pow(-1, tq(2 * l - 2), Rational(-b(0)), tv, order) *
                       binom_pow(-1, tq(2 * l), Rational(-b(2)), tv, order) *
                       binom_pow(-1, tq(2 * l + 2), Rational(-b(4)), tv, order);
            },
            tv, order);
    }
    case SeriesKind::chiy_sym:
    case SeriesKind::chiy_sym_B:
        return detail::chi_exp(detail::table_for(x, is_b_kind(kind)), tv, order,
                               [&](int) { return Series::one(tv, Series::kExact); });
    case SeriesKind::chiy_orb:
    case SeriesKind::chiy_orb_B: {
        const Half k = x.k();
        // 1 / (1 − (y^k q)^n)
        return detail::chi_exp(detail::table_for(x, is_b_kind(kind)), tv, order, [&](int n) {
            return binom_pow(-1, Monomial::of(Var::y, k * n) * q_pow(n), Rational(-1), tv, order);
        });
    }
    case SeriesKind::arith_sym:
    case SeriesKind::arith_orb: {
        const Rational pa = genus_value(*x.hodge, Genus::arithmetic);
        return binom_pow(-1, q1, -pa, tv, order);
    }
    case SeriesKind::sign_sym: {
        const Rational chi(x.euler());
        const Rational sig = genus_value(*x.hodge, Genus::signature);
        return binom_pow(-1, q_pow(2), -chi / 2, tv, order) * binom_pow(+1, q1, sig / 2, tv, order) *
               binom_pow(-1, q1, -sig / 2, tv, order);
    }
    case SeriesKind::sign_orb: {
        const Rational chi(x.euler());
        const Rational sig = genus_value(*x.hodge, Genus::signature);
        const std::int64_t k = x.k().as_integer();
        return product_over_levels(
            [&](int m) {
                const bool flip = (k * (m + 1)) % 2 != 0;
                const Rational e = flip ? Rational(-sig / 2) : Rational(sig / 2);
                return binom_pow(-1, q_pow(2 * m), -chi / 2, tv, order) * binom_pow(+1, q_pow(m), e, tv, order) *
                       binom_pow(-1, q_pow(m), -e, tv, order);
            },
            tv, order);
    }
    case SeriesKind::dmvv_q0:
    case SeriesKind::dmvv_q0_B: {
        const Half k = x.k();
        // χ(X; 0, y^m) = y^{−km} χ_{−y^m}(X); extra factor y^{−km} / (1 − p^m)
        return detail::chi_exp(detail::table_for(x, is_b_kind(kind)), tv, order, [&](int m) {
            return Series::term(Monomial::of(Var::y, -(k * m)), Rational(1), tv, Series::kExact) *
                   binom_pow(-1, q_pow(m), Rational(-1), tv, order);
        });
    }
    }
    throw UsageError("closed_series: unknown kind");
}

/// Re-indexed Theorem-4.1 product with the shift moved into the t-exponent;
/// only valid when m is even (the parity of d + m(l−1) is that of d).
inline Series closed_poincare_orb_reindexed(const ManifoldData& x, int order) {
    const int m = x.m();
    if (m % 2 != 0) throw InputError(x.name + ": re-indexed Poincare product needs even m");
    return product_over_levels(
        [&](int l) {
            Series f = Series::one(Var::q, order);
            for (const auto& [d, b] : x.betti.dims()) {
                const Half td = d + Half::from_int(static_cast<std::int64_t>(m) * (l - 1));
                f = f * detail::class_factor(is_odd(d), Monomial::of({{Var::t, td}, {Var::q, Half::from_int(l)}}), b,
                                             Var::q, order);
            }
            return f;
        },
        Var::q, order);
}

// ---------------------------------------------------------------------------
// verification

struct VerifyResult {
    SeriesKind kind;
    Series brute;
    Series closed;
    bool equal = false;
    bool integral = false;
    std::optional<Monomial> first_difference;

    bool passed() const { return equal && integral; }
};

inline VerifyResult verify(SeriesKind kind, const ManifoldData& x, int order) {
    VerifyResult r{kind, brute_series(kind, x, order), closed_series(kind, x, order)};
    r.first_difference = symprod::first_difference(r.brute, r.closed);
    r.equal = !r.first_difference.has_value();
    r.integral = r.brute.is_integral() && r.closed.is_integral();
    return r;
}

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skip;
    std::string detail;
};

inline std::string status_str(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass:
        return "PASS";
    case CheckStatus::fail:
        return "FAIL";
    case CheckStatus::skip:
        return "SKIP";
    }
    return "?";
}

inline CheckResult compare_series(std::string name, const Series& lhs, const Series& rhs) {
    CheckResult r{std::move(name), CheckStatus::pass, {}};
    if (auto diff = first_difference(lhs, rhs)) {
        r.status = CheckStatus::fail;
        r.detail = "first mismatch at " + to_string(*diff, lhs.trunc_var()) + ": " +
                   to_string(lhs.coeff(*diff)) + " vs " + to_string(rhs.coeff(*diff));
    }
    return r;
}

/// Orders used when none is requested: 6 for the bigraded kinds of
/// surfaces, 8 otherwise.
inline int default_order(SeriesKind kind, const ManifoldData& x) {
    const bool bigraded = kind == SeriesKind::hodge_sym || kind == SeriesKind::hodge_orb ||
                          kind == SeriesKind::hodge_sym_B || kind == SeriesKind::hodge_orb_B ||
                          kind == SeriesKind::gottsche_hodge;
    return (bigraded && x.dim_c == 2) ? 6 : 8;
}

/// h_{x,y} at x = y = t.
inline Series hodge_to_poincare(const Series& s) {
    return substitute(substitute(s, Var::x, Monomial::of(Var::t)), Var::y, Monomial::of(Var::t));
}

/// χ̂_{−y}(X) against (−y)^d χ_{−y^{−1}}(X), as Laurent polynomials in y.
inline CheckResult check_serre_duality(const ManifoldData& x) {
    if (!x.hodge || !x.hodgeB || !x.dim_c) return {"serre_duality", CheckStatus::skip, "needs Hodge and B-tables"};
    const int d = *x.dim_c;
    const Series chi_hat = chi_minus_y(*x.hodgeB);
    const Series chi_inv = substitute(chi_minus_y(*x.hodge), Var::y, Monomial::of(Var::y, Half::from_int(-1)));
    const Series rhs = chi_inv * Series::term(Monomial::of(Var::y, Half::from_int(d)),
                                              Rational(d % 2 == 0 ? 1 : -1), Var::q, Series::kExact);
    return compare_series("serre_duality", chi_hat, rhs);
}

/// All checks applicable to `x`, in a fixed order. `order` overrides the
/// per-kind defaults.
inline std::vector<CheckResult> verify_all(const ManifoldData& x, std::optional<int> order = std::nullopt) {
    std::vector<CheckResult> out;
    auto ord = [&](SeriesKind k) { return order.value_or(default_order(k, x)); };

    for (const auto& info : kKinds) {
        const std::string name(info.name);
        if (auto why = inapplicable_reason(info.kind, x)) {
            out.push_back({name, CheckStatus::skip, *why});
            continue;
        }
        const VerifyResult r = verify(info.kind, x, ord(info.kind));
        CheckResult c{name, r.passed() ? CheckStatus::pass : CheckStatus::fail,
                      "order " + std::to_string(ord(info.kind))};
        if (!r.equal)
            c.detail += ", first mismatch at " + to_string(*r.first_difference, r.brute.trunc_var());
        else if (!r.integral)
            c.detail += ", non-integral coefficients";
        out.push_back(std::move(c));
    }

    // cross-checks between kinds
    if (x.hodge) {
        const int o = order.value_or(default_order(SeriesKind::hodge_orb, x));
        out.push_back(compare_series("hodge_orb(x=y=t) = poincare_orb",
                                     hodge_to_poincare(closed_series(SeriesKind::hodge_orb, x, o)),
                                     brute_series(SeriesKind::poincare_orb, x, o)));
    } else {
        out.push_back({"hodge_orb(x=y=t) = poincare_orb", CheckStatus::skip, "needs a Hodge table"});
    }

    if (x.m() % 2 == 0) {
        const int o = ord(SeriesKind::poincare_orb);
        out.push_back(compare_series("poincare_orb(t=-1) = euler_orb",
                                     specialize(brute_series(SeriesKind::poincare_orb, x, o), {{Var::t, Rational(-1)}}),
                                     brute_series(SeriesKind::euler_orb, x, o)));
        out.push_back(compare_series("poincare_orb re-indexed product", closed_poincare_orb_reindexed(x, o),
                                     closed_series(SeriesKind::poincare_orb, x, o)));
    } else {
        out.push_back({"poincare_orb(t=-1) = euler_orb", CheckStatus::skip, "odd m flips twisted-sector parities"});
        out.push_back({"poincare_orb re-indexed product", CheckStatus::skip, "needs even m"});
    }

    if (!inapplicable_reason(SeriesKind::sign_orb, x)) {
        const int o = ord(SeriesKind::chiy_orb);
        out.push_back(compare_series("chiy_orb(y=-1) = sign_orb",
                                     specialize(brute_series(SeriesKind::chiy_orb, x, o), {{Var::y, Rational(-1)}}),
                                     brute_series(SeriesKind::sign_orb, x, o)));
    } else {
        out.push_back({"chiy_orb(y=-1) = sign_orb", CheckStatus::skip, "needs even dim_c"});
    }

    if (x.hodge) {
        const int o = ord(SeriesKind::dmvv_q0);
        out.push_back(compare_series(
            "chiy_orb(q=y^-k p) = dmvv_q0",
            substitute(closed_series(SeriesKind::chiy_orb, x, o), Var::q,
                       Monomial::of({{Var::y, -x.k()}, {Var::p, Half::from_int(1)}}), Var::p),
            closed_series(SeriesKind::dmvv_q0, x, o)));
    } else {
        out.push_back({"chiy_orb(q=y^-k p) = dmvv_q0", CheckStatus::skip, "needs a Hodge table"});
    }

    if (x.calabi_yau)
        out.push_back(check_serre_duality(x));
    else
        out.push_back({"serre_duality", CheckStatus::skip, "not Calabi-Yau"});

    if (!inapplicable_reason(SeriesKind::gottsche_hodge, x)) {
        const int o = ord(SeriesKind::gottsche_hodge);
        out.push_back(compare_series("gottsche_hodge = hodge_orb (closed)", closed_series(SeriesKind::gottsche_hodge, x, o),
                                     closed_series(SeriesKind::hodge_orb, x, o)));
    } else {
        out.push_back({"gottsche_hodge = hodge_orb (closed)", CheckStatus::skip, "needs a complex surface"});
    }
    return out;
}

} // namespace symprod
