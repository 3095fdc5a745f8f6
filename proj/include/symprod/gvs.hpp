#pragma once

// Graded and bigraded vector spaces, represented by their dimension
// functions, with shift / direct sum / tensor and graded (super)
// symmetric powers.

#include <symprod/errors.hpp>
#include <symprod/half.hpp>
#include <symprod/series.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace symprod {

using Bidegree = std::pair<Half, Half>;

inline Bidegree operator+(Bidegree a, Bidegree b) { return {a.first + b.first, a.second + b.second}; }

namespace detail {

template <class Key>
class DimensionFunction {
public:
    using Map = std::map<Key, std::int64_t>;

    const Map& dims() const { return dims_; }
    bool empty() const { return dims_.empty(); }

    std::int64_t at(const Key& k) const {
        auto it = dims_.find(k);
        return it == dims_.end() ? 0 : it->second;
    }

    std::int64_t total() const {
        std::int64_t s = 0;
        for (const auto& [k, n] : dims_) s += n;
        return s;
    }

    bool operator==(const DimensionFunction&) const = default;

protected:
    void add_raw(const Key& k, std::int64_t n) {
        if (n < 0) throw UsageError("negative dimension");
        if (n == 0) return;
        dims_[k] += n;
    }

    Map dims_;
};

} // namespace detail

/// Finitely supported dimension function on ½ℤ.
class GradedDims : public detail::DimensionFunction<Half> {
public:
    GradedDims() = default;
    GradedDims(std::initializer_list<std::pair<const Half, std::int64_t>> init) {
        for (const auto& [d, n] : init) add(d, n);
    }

    /// Betti-style constructor: entry i is the dimension in degree i.
    static GradedDims from_betti(const std::vector<std::int64_t>& betti) {
        GradedDims v;
        for (std::size_t i = 0; i < betti.size(); ++i) v.add(Half::from_int(static_cast<std::int64_t>(i)), betti[i]);
        return v;
    }

    void add(Half degree, std::int64_t n) { add_raw(degree, n); }

    /// Σ (−1)^d dim V_d; degrees must be integers.
    std::int64_t euler() const {
        std::int64_t s = 0;
        for (const auto& [d, n] : dims_) {
            if (!d.is_integer()) throw UsageError("euler characteristic of a half-integer graded space");
            s += d.is_odd_integer() ? -n : n;
        }
        return s;
    }
};

/// Finitely supported dimension function on ½ℤ × ½ℤ, supported where p + q ∈ ℤ.
class BigradedDims : public detail::DimensionFunction<Bidegree> {
public:
    BigradedDims() = default;
    BigradedDims(std::initializer_list<std::pair<const Bidegree, std::int64_t>> init) {
        for (const auto& [pq, n] : init) add(pq.first, pq.second, n);
    }

    /// Hodge-table constructor: table[p][q] = h^{p,q}.
    static BigradedDims from_table(const std::vector<std::vector<std::int64_t>>& table) {
        BigradedDims w;
        for (std::size_t p = 0; p < table.size(); ++p)
            for (std::size_t q = 0; q < table[p].size(); ++q)
                w.add(Half::from_int(static_cast<std::int64_t>(p)), Half::from_int(static_cast<std::int64_t>(q)),
                      table[p][q]);
        return w;
    }

    void add(Half p, Half q, std::int64_t n) {
        if (!(p + q).is_integer())
            throw UsageError("bidegree (" + p.str() + "," + q.str() + ") has non-integral total degree");
        add_raw({p, q}, n);
    }
    void add(Bidegree pq, std::int64_t n) { add(pq.first, pq.second, n); }

    /// Collapse to total degree p + q.
    GradedDims total_degree() const {
        GradedDims v;
        for (const auto& [pq, n] : dims_) v.add(pq.first + pq.second, n);
        return v;
    }
};

// ---------------------------------------------------------------------------
// shift, direct sum, tensor

inline GradedDims shift(const GradedDims& v, Half s) {
    GradedDims out;
    for (const auto& [d, n] : v.dims()) out.add(d + s, n);
    return out;
}

inline BigradedDims shift2(const BigradedDims& w, Half l, Half m) {
    BigradedDims out;
    for (const auto& [pq, n] : w.dims()) out.add(pq.first + l, pq.second + m, n);
    return out;
}

inline GradedDims dsum(const GradedDims& a, const GradedDims& b) {
    GradedDims out = a;
    for (const auto& [d, n] : b.dims()) out.add(d, n);
    return out;
}

inline BigradedDims dsum(const BigradedDims& a, const BigradedDims& b) {
    BigradedDims out = a;
    for (const auto& [pq, n] : b.dims()) out.add(pq, n);
    return out;
}

inline GradedDims tensor(const GradedDims& a, const GradedDims& b) {
    GradedDims out;
    for (const auto& [da, na] : a.dims())
        for (const auto& [db, nb] : b.dims()) out.add(da + db, na * nb);
    return out;
}

inline BigradedDims tensor(const BigradedDims& a, const BigradedDims& b) {
    BigradedDims out;
    for (const auto& [pa, na] : a.dims())
        for (const auto& [pb, nb] : b.dims()) out.add(pa + pb, na * nb);
    return out;
}

// ---------------------------------------------------------------------------
// super parity

/// Odd iff the degree is an odd integer; strict half-integers have no parity.
inline bool is_odd(Half degree) {
    if (!degree.is_integer())
        throw UsageError("graded class in half-integer degree " + degree.str() + " has no parity");
    return degree.is_odd_integer();
}

/// Odd iff p + q is odd.
inline bool is_odd(Bidegree pq) { return (pq.first + pq.second).is_odd_integer(); }

// ---------------------------------------------------------------------------
// graded symmetric powers

namespace detail {

// Sequential per-generator convolution. table[c] holds the dimension
// function of the part of S^c spanned by the generators seen so far.
template <class Space>
Space sym_power_convolve(const Space& v, int n) {
    using Key = typename Space::Map::key_type;
    if (n < 0) throw UsageError("sym_power: negative power");
    std::vector<std::map<Key, std::int64_t>> table(n + 1);
    table[0][Key{}] = 1;

    for (const auto& [key, mult] : v.dims()) {
        const bool odd = is_odd(key);
        for (std::int64_t copy = 0; copy < mult; ++copy) {
            std::vector<std::map<Key, std::int64_t>> next(n + 1);
            for (int c = 0; c <= n; ++c) {
                for (const auto& [k, d] : table[c]) {
                    Key shifted = k;
                    const int max_j = odd ? 1 : n - c;
                    for (int j = 0; j <= max_j && c + j <= n; ++j) {
                        next[c + j][shifted] += d;
                        shifted = shifted + key;
                    }
                }
            }
            table = std::move(next);
        }
    }

    Space out;
    for (const auto& [k, d] : table[n]) out.add(k, d);
    return out;
}

} // namespace detail

/// n-th graded symmetric power: symmetric on even classes, exterior on odd ones.
inline GradedDims sym_power(const GradedDims& v, int n) { return detail::sym_power_convolve(v, n); }
inline BigradedDims sym_power2(const BigradedDims& w, int n) { return detail::sym_power_convolve(w, n); }

namespace detail {

// Enumerates explicit monomial bases v_{i1} ⊙ ... ⊙ v_{in}, i1 ≤ ... ≤ in,
// with strict inequality between odd generators.
template <class Space>
Space sym_power_enumerate(const Space& v, int n) {
    using Key = typename Space::Map::key_type;
    struct Gen {
        Key degree;
        bool odd;
    };
    std::vector<Gen> gens;
    for (const auto& [key, mult] : v.dims())
        for (std::int64_t i = 0; i < mult; ++i) gens.push_back({key, is_odd(key)});

    Space out;
    std::function<void(std::size_t, int, Key)> visit = [&](std::size_t start, int remaining, Key degree) {
        if (remaining == 0) {
            out.add(degree, 1);
            return;
        }
        for (std::size_t i = start; i < gens.size(); ++i) {
            const std::size_t next = gens[i].odd ? i + 1 : i;
            visit(next, remaining - 1, degree + gens[i].degree);
        }
    };
    visit(0, n, Key{});
    return out;
}

} // namespace detail

/// Basis-enumeration oracle for sym_power. Exponential in n.
inline GradedDims sym_power_oracle(const GradedDims& v, int n) { return detail::sym_power_enumerate(v, n); }
inline BigradedDims sym_power_oracle(const BigradedDims& w, int n) { return detail::sym_power_enumerate(w, n); }

// ---------------------------------------------------------------------------
// generating polynomials

inline Series poincare_poly(const GradedDims& v, Var trunc = Var::q) {
    Series s(trunc, Series::kExact);
    for (const auto& [d, n] : v.dims()) s.add_term(Monomial::of(Var::t, d), Rational(n));
    return s;
}

inline Series hodge_poly(const BigradedDims& w, Var trunc = Var::q) {
    Series s(trunc, Series::kExact);
    for (const auto& [pq, n] : w.dims())
        s.add_term(Monomial::of({{Var::x, pq.first}, {Var::y, pq.second}}), Rational(n));
    return s;
}

} // namespace symprod
