#pragma once

#include <symprod/symprod.hpp>

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace symprod::testing {

inline Half h(std::int64_t n) { return Half::from_int(n); }
inline Half hh(std::int64_t twice) { return Half::from_twice(twice); }

inline Monomial mono(std::initializer_list<std::pair<Var, Half>> exps) { return Monomial::of(exps); }

inline Monomial qn(int n) { return Monomial::of(Var::q, h(n)); }

/// Σ c·m truncated at `order` in q.
inline Series series(int order, std::initializer_list<std::pair<Rational, Monomial>> terms, Var tv = Var::q) {
    Series s(tv, order);
    for (const auto& [c, m] : terms) s.add_term(m, c);
    return s;
}

/// Coefficients of 1, q, ..., q^order of a series with no other variables.
inline std::vector<Rational> q_coeffs(const Series& s) {
    std::vector<Rational> out;
    for (int n = 0; n <= s.order(); ++n) out.push_back(s.coeff(Monomial::of(s.trunc_var(), h(n))));
    return out;
}

inline std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

/// Random series in q, t, y with small rational coefficients; y exponents may
/// be negative half-integers.
inline Series random_series(std::mt19937& rng, int order, int terms = 6) {
    std::uniform_int_distribution<int> qe(0, order), te(0, 3), ye(-2, 4), num(-5, 5), den(1, 3);
    Series s(Var::q, order);
    for (int i = 0; i < terms; ++i)
        s.add_term(mono({{Var::q, h(qe(rng))}, {Var::t, h(te(rng))}, {Var::y, hh(ye(rng))}}), Rational(num(rng), den(rng)));
    return s;
}

inline ManifoldData catalog(const char* name) { return load_catalog(name); }

inline const std::vector<std::string>& catalog_list() {
    static const std::vector<std::string> names{"abelian_surface", "elliptic", "genus2", "k3",
                                                "p1",              "p1xp1",    "p2",     "point"};
    return names;
}

} // namespace symprod::testing
