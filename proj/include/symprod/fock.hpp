#pragma once

// Truncated Fock space S*(⊕_{l≥1} t^{−l} 𝔥), 𝔥 = H*(X)[−d], with the
// Heisenberg superalgebra acting by creation (negative modes) and
// contraction (positive modes). Central charge is 1.

#include <symprod/errors.hpp>
#include <symprod/manifold.hpp>
#include <symprod/orbifold.hpp>
#include <symprod/rational.hpp>
#include <symprod/series.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symprod {

struct Generator {
    int id = 0;
    int degree_shifted = 0;  ///< original degree − d
    bool odd = false;
};

/// Homogeneous basis of H*(X)[−d] in degree order. Requires d even.
inline std::vector<Generator> fock_generators(const ManifoldData& x) {
    const int d = x.m();
    if (d % 2 != 0)
        throw InputError(x.name + ": Fock space needs real dimension 2d with d even (d = " + std::to_string(d) + ")");
    std::vector<Generator> gens;
    for (const auto& [deg, b] : x.betti.dims()) {
        const auto degree = static_cast<int>(deg.as_integer());
        for (std::int64_t i = 0; i < b; ++i)
            gens.push_back({static_cast<int>(gens.size()), degree - d, degree % 2 != 0});
    }
    return gens;
}

// ---------------------------------------------------------------------------
// pairing

/// η as a dense matrix over the generator basis; nonzero only between
/// shifted degrees j and −j.
class PairingMatrix {
public:
    PairingMatrix() = default;
    explicit PairingMatrix(std::vector<Generator> gens)
        : gens_(std::move(gens)), eta_(gens_.size(), std::vector<Rational>(gens_.size())) {}

    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    const Rational& operator()(int a, int b) const { return eta_[a][b]; }
    void set(int a, int b, const Rational& v) { eta_[a][b] = v; }

    /// Throws InputError if η pairs degrees other than (j, −j), is not
    /// graded symmetric, or is degenerate.
    void validate() const {
        const std::size_t n = gens_.size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Rational& v = eta_[a][b];
                if (v != 0 && gens_[a].degree_shifted + gens_[b].degree_shifted != 0)
                    throw InputError("pairing: nonzero entry between shifted degrees " +
                                     std::to_string(gens_[a].degree_shifted) + " and " +
                                     std::to_string(gens_[b].degree_shifted));
                const int sign = (gens_[a].odd && gens_[b].odd) ? -1 : 1;
                if (v != sign * eta_[b][a]) throw InputError("pairing: graded symmetry violated");
            }
        if (rank() != n) throw InputError("pairing: degenerate");
    }

private:
    std::size_t rank() const {
        auto m = eta_;
        std::size_t r = 0;
        const std::size_t n = m.size();
        for (std::size_t col = 0; col < n && r < n; ++col) {
            std::size_t pivot = r;
            while (pivot < n && m[pivot][col] == 0) ++pivot;
            if (pivot == n) continue;
            std::swap(m[pivot], m[r]);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == r || m[i][col] == 0) continue;
                const Rational f = m[i][col] / m[r][col];
                for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[r][j];
            }
            ++r;
        }
        return r;
    }

    std::vector<Generator> gens_;
    std::vector<std::vector<Rational>> eta_;
};

namespace detail {

inline std::map<int, std::vector<int>> generators_by_degree(const std::vector<Generator>& gens) {
    std::map<int, std::vector<int>> out;
    for (const auto& g : gens) out[g.degree_shifted].push_back(g.id);
    return out;
}

} // namespace detail

/// Identity blocks between H^j and H^{2d−j}, the reverse block fixed by
/// graded symmetry; a standard symplectic form on an odd middle block.
inline PairingMatrix default_pairing(const ManifoldData& x) {
    if (!x.satisfies_poincare_duality()) throw InputError(x.name + ": Betti numbers violate Poincare duality");
    PairingMatrix eta(fock_generators(x));
    const auto by_degree = detail::generators_by_degree(eta.generators());
    for (const auto& [j, ids] : by_degree) {
        if (j < 0) continue;
        const auto& dual = by_degree.at(-j);
        const bool odd = eta.generators()[ids.front()].odd;
        if (j > 0) {
            for (std::size_t i = 0; i < ids.size(); ++i) {
                eta.set(dual[i], ids[i], Rational(1));
                eta.set(ids[i], dual[i], Rational(odd ? -1 : 1));
            }
        } else if (!odd) {
            for (int id : ids) eta.set(id, id, Rational(1));
        } else {
            if (ids.size() % 2 != 0)
                throw InputError(x.name + ": odd middle cohomology of odd dimension admits no symplectic pairing");
            const std::size_t half = ids.size() / 2;
            for (std::size_t i = 0; i < half; ++i) {
                eta.set(ids[i], ids[half + i], Rational(1));
                eta.set(ids[half + i], ids[i], Rational(-1));
            }
        }
    }
    eta.validate();
    return eta;
}

/// η from user blocks (rows: basis of H^degree, columns: basis of
/// H^{dim_real − degree}); a missing reverse block is filled by symmetry.
inline PairingMatrix pairing_from_blocks(const ManifoldData& x, const std::vector<PairingBlock>& blocks) {
    PairingMatrix eta(fock_generators(x));
    const int d = x.m();
    const auto by_degree = detail::generators_by_degree(eta.generators());
    auto ids_at = [&](int degree) -> const std::vector<int>& {
        static const std::vector<int> none;
        auto it = by_degree.find(degree - d);
        return it == by_degree.end() ? none : it->second;
    };
    std::map<std::pair<int, int>, bool> given;
    for (const auto& block : blocks) {
        const auto& rows = ids_at(block.degree);
        const auto& cols = ids_at(x.dim_real - block.degree);
        if (block.matrix.size() != rows.size())
            throw InputError("pairing block for degree " + std::to_string(block.degree) + " has wrong row count");
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (block.matrix[r].size() != cols.size())
                throw InputError("pairing block for degree " + std::to_string(block.degree) + " has wrong column count");
            for (std::size_t c = 0; c < cols.size(); ++c) {
                eta.set(rows[r], cols[c], block.matrix[r][c]);
                given[{rows[r], cols[c]}] = true;
            }
        }
    }
    for (const auto& [rc, unused] : given) {
        const auto [r, c] = rc;
        if (given.count({c, r})) continue;
        const bool odd = eta.generators()[r].odd && eta.generators()[c].odd;
        eta.set(c, r, odd ? Rational(-eta(r, c)) : eta(r, c));
    }
    eta.validate();
    return eta;
}

inline PairingMatrix manifold_pairing(const ManifoldData& x) {
    return x.pairing ? pairing_from_blocks(x, *x.pairing) : default_pairing(x);
}

// ---------------------------------------------------------------------------
// states

struct Factor {
    int level = 1;
    int gen = 0;
    auto operator<=>(const Factor&) const = default;
};

/// A canonical monomial: factors sorted by (level, generator), no odd
/// generator repeated at one level. Generator ids are in degree order, so
/// this is also the (level, degree, id) order.
using FockState = std::vector<Factor>;

/// Formal rational combination of canonical states.
using FockVector = std::map<FockState, Rational>;

inline void add_to(FockVector& v, const FockState& s, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = v.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) v.erase(it);
    }
}

class FockSpace {
public:
    FockSpace(const ManifoldData& x, PairingMatrix eta) : d_(x.m()), eta_(std::move(eta)) {
        if (d_ % 2 != 0) throw InputError(x.name + ": Fock space needs d even");
    }
    explicit FockSpace(const ManifoldData& x) : FockSpace(x, manifold_pairing(x)) {}

    int d() const { return d_; }
    const PairingMatrix& pairing() const { return eta_; }
    const std::vector<Generator>& generators() const { return eta_.generators(); }
    const Generator& generator(int id) const { return eta_.generators()[id]; }

    bool odd(const Factor& f) const { return generator(f.gen).odd; }
    int factor_degree(const Factor& f) const { return generator(f.gen).degree_shifted + f.level * d_; }

    int charge(const FockState& s) const {
        int n = 0;
        for (const auto& f : s) n += f.level;
        return n;
    }
    int degree(const FockState& s) const {
        int n = 0;
        for (const auto& f : s) n += factor_degree(f);
        return n;
    }
    bool odd(const FockState& s) const {
        bool p = false;
        for (const auto& f : s) p ^= odd(f);
        return p;
    }

    /// Sorts `factors` with Koszul signs. nullopt when an odd factor
    /// repeats (the product vanishes); otherwise the sign.
    std::optional<int> canonicalize(FockState& factors) const {
        int sign = 1;
        for (std::size_t i = 1; i < factors.size(); ++i) {
            for (std::size_t j = i; j > 0 && factors[j] < factors[j - 1]; --j) {
                if (odd(factors[j]) && odd(factors[j - 1])) sign = -sign;
                std::swap(factors[j], factors[j - 1]);
            }
        }
        for (std::size_t i = 1; i < factors.size(); ++i)
            if (factors[i] == factors[i - 1] && odd(factors[i])) return std::nullopt;
        return sign;
    }

    /// All canonical states of charge ≤ max_charge, ordered by charge, then
    /// lexicographically by factor list.
    std::vector<FockState> basis(int max_charge) const {
        if (max_charge < 0) throw UsageError("fock_basis: negative charge");
        std::vector<Factor> slots;
        for (int l = 1; l <= max_charge; ++l)
            for (const auto& g : generators()) slots.push_back({l, g.id});

        std::vector<FockState> out;
        FockState current;
        std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
            out.push_back(current);
            for (std::size_t i = start; i < slots.size(); ++i) {
                if (slots[i].level > remaining) break;
                current.push_back(slots[i]);
                rec(odd(slots[i]) ? i + 1 : i, remaining - slots[i].level);
                current.pop_back();
            }
        };
        rec(0, max_charge);
        std::stable_sort(out.begin(), out.end(),
                         [&](const FockState& a, const FockState& b) { return charge(a) < charge(b); });
        return out;
    }

    // --- Hopf structure on S*

    FockVector product(const FockState& a, const FockState& b) const {
        FockState merged = a;
        merged.insert(merged.end(), b.begin(), b.end());
        FockVector out;
        if (auto sign = canonicalize(merged)) add_to(out, merged, Rational(*sign));
        return out;
    }

    FockVector product(const FockVector& a, const FockVector& b) const {
        FockVector out;
        for (const auto& [sa, ca] : a)
            for (const auto& [sb, cb] : b)
                for (const auto& [s, c] : product(sa, sb)) add_to(out, s, ca * cb * c);
        return out;
    }

    /// Σ over splittings of the factor list into (left, right), each
    /// canonical, with the shuffle sign.
    std::map<std::pair<FockState, FockState>, Rational> coproduct(const FockState& s) const {
        std::map<std::pair<FockState, FockState>, Rational> out;
        const std::size_t n = s.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            FockState left, right;
            int sign = 1;
            bool right_odd = false;  // parity of right factors passed so far
            for (std::size_t i = 0; i < n; ++i) {
                if (mask >> i & 1) {
                    if (right_odd && odd(s[i])) sign = -sign;
                    left.push_back(s[i]);
                } else {
                    right.push_back(s[i]);
                    right_odd ^= odd(s[i]);
                }
            }
            auto key = std::make_pair(std::move(left), std::move(right));
            auto [it, inserted] = out.emplace(key, Rational(sign));
            if (!inserted) {
                it->second += sign;
                if (it->second == 0) out.erase(it);
            }
        }
        return out;
    }

    // --- Heisenberg modes

    /// Creation t^{−m} ⊗ a acting on a state: left multiplication.
    FockVector create(int m, int a, const FockState& s) const {
        check_level(m);
        return product(FockState{{m, a}}, s);
    }

    /// Annihilation t^{m} ⊗ a: m · Σ_i (Koszul sign) η(a, f_i) · (s without f_i)
    /// over the factors f_i at level m.
    FockVector annihilate(int m, int a, const FockState& s) const {
        check_level(m);
        FockVector out;
        bool passed_odd = false;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Factor& f = s[i];
            if (f.level == m && eta_(a, f.gen) != 0) {
                FockState rest = s;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
                const int sign = (passed_odd && generator(a).odd) ? -1 : 1;
                add_to(out, rest, Rational(m * sign) * eta_(a, f.gen));
            }
            passed_odd ^= odd(f);
        }
        return out;
    }

private:
    static void check_level(int m) {
        if (m < 1) throw UsageError("Heisenberg mode level must be >= 1");
    }

    int d_;
    PairingMatrix eta_;
};

// ---------------------------------------------------------------------------
// operators on the truncated basis

/// Linear operator with a declared (charge, degree) shift, given by its
/// action on basis states.
struct FockOperator {
    int charge = 0;
    int degree = 0;
    std::function<FockVector(const FockState&)> apply;

    FockVector operator()(const FockVector& v) const {
        FockVector out;
        for (const auto& [s, c] : v)
            for (const auto& [t, ct] : apply(s)) add_to(out, t, c * ct);
        return out;
    }
};

namespace detail {

// Linear combination of generators, all of one shifted degree.
inline int combo_degree(const FockSpace& F, const std::map<int, Rational>& alpha) {
    if (alpha.empty()) throw UsageError("empty generator combination");
    const int deg = F.generator(alpha.begin()->first).degree_shifted;
    for (const auto& [id, c] : alpha)
        if (F.generator(id).degree_shifted != deg) throw UsageError("generator combination is not homogeneous");
    return deg;
}

} // namespace detail

inline FockOperator create(const FockSpace& F, int m, const std::map<int, Rational>& alpha) {
    const int deg = detail::combo_degree(F, alpha);
    return {m, deg + m * F.d(), [&F, m, alpha](const FockState& s) {
                FockVector out;
                for (const auto& [id, c] : alpha)
                    for (const auto& [t, ct] : F.create(m, id, s)) add_to(out, t, c * ct);
                return out;
            }};
}

inline FockOperator annihilate(const FockSpace& F, int m, const std::map<int, Rational>& alpha) {
    const int deg = detail::combo_degree(F, alpha);
    // removes a factor of shifted degree −deg
    return {-m, deg - m * F.d(), [&F, m, alpha](const FockState& s) {
                FockVector out;
                for (const auto& [id, c] : alpha)
                    for (const auto& [t, ct] : F.annihilate(m, id, s)) add_to(out, t, c * ct);
                return out;
            }};
}

inline FockOperator create(const FockSpace& F, int m, int a) { return create(F, m, {{a, Rational(1)}}); }
inline FockOperator annihilate(const FockSpace& F, int m, int a) { return annihilate(F, m, {{a, Rational(1)}}); }

/// Sparse matrix of an operator on the basis of charge ≤ L: column j is the
/// image of basis[j] with components above charge L dropped.
class TruncatedMatrix {
public:
    using Column = std::vector<std::pair<int, Rational>>;

    TruncatedMatrix(const std::vector<FockState>& basis, const std::map<FockState, int>& index, const FockOperator& op)
        : columns_(basis.size()) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            for (const auto& [t, c] : op.apply(basis[j])) {
                auto it = index.find(t);
                if (it != index.end()) columns_[j].emplace_back(it->second, c);
            }
        }
    }

    const Column& column(int j) const { return columns_[j]; }

    /// (A·B) e_j with the truncated matrices.
    static std::map<int, Rational> compose(const TruncatedMatrix& a, const TruncatedMatrix& b, int j) {
        std::map<int, Rational> out;
        for (const auto& [k, cb] : b.column(j))
            for (const auto& [i, ca] : a.column(k)) {
                Rational& slot = out[i];
                slot += ca * cb;
            }
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
        return out;
    }

private:
    std::vector<Column> columns_;
};

// ---------------------------------------------------------------------------
// relation checks

/// Σ_{states of charge ≤ L} q^{charge} t^{degree}.
inline Series fock_character(const FockSpace& F, int max_charge) {
    Series s(Var::q, max_charge);
    for (const auto& st : F.basis(max_charge))
        s.add_term(Monomial::of({{Var::t, Half::from_int(F.degree(st))}, {Var::q, Half::from_int(F.charge(st))}}),
                   Rational(1));
    return s;
}

namespace detail {

struct Tally {
    std::string name;
    std::int64_t checked = 0;
    std::int64_t failed = 0;
    std::string first_failure;

    void record(bool ok, const std::function<std::string()>& describe) {
        ++checked;
        if (!ok && failed++ == 0) first_failure = describe();
    }
    CheckResult result() const {
        if (failed == 0) return {name, CheckStatus::pass, std::to_string(checked) + " checked"};
        return {name, CheckStatus::fail,
                std::to_string(failed) + "/" + std::to_string(checked) + " failed, first: " + first_failure};
    }
};

inline std::string mode_str(const char* kind, int m, int a) {
    return std::string(kind) + "(" + std::to_string(m) + ",e" + std::to_string(a) + ")";
}

} // namespace detail

/// Heisenberg relations, Hopf compatibility and the character identity on
/// the charge ≤ max_charge truncation. A super-commutator is compared only on
/// states whose images under the creation modes involved stay within the
/// truncation.
inline std::vector<CheckResult> check_relations(const ManifoldData& x, int max_charge) {
    const FockSpace F(x);
    const int L = max_charge;
    const auto basis = F.basis(L);
    std::map<FockState, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    const auto& gens = F.generators();
    const int ng = static_cast<int>(gens.size());

    // matrices per (level, generator)
    std::vector<std::vector<TruncatedMatrix>> C(L + 1), A(L + 1);
    for (int m = 1; m <= L; ++m)
        for (int a = 0; a < ng; ++a) {
            C[m].emplace_back(basis, index, create(F, m, a));
            A[m].emplace_back(basis, index, annihilate(F, m, a));
        }

    auto sign_of = [&](int a, int b) { return (gens[a].odd && gens[b].odd) ? -1 : 1; };
    auto supercommutator = [&](const TruncatedMatrix& X, const TruncatedMatrix& Y, int sign, int j) {
        auto xy = TruncatedMatrix::compose(X, Y, j);
        for (const auto& [i, c] : TruncatedMatrix::compose(Y, X, j)) {
            Rational& slot = xy[i];
            slot -= sign * c;
        }
        std::erase_if(xy, [](const auto& kv) { return kv.second == 0; });
        return xy;
    };

    detail::Tally ac{"[annihilate, create] = m eta delta"}, cc{"[create, create] = 0"}, aa{"[annihilate, annihilate] = 0"};
    for (int m = 1; m <= L; ++m)
        for (int n = 1; n <= L; ++n)
            for (int a = 0; a < ng; ++a)
                for (int b = 0; b < ng; ++b) {
                    const int sign = sign_of(a, b);
                    const Rational expected = m == n ? Rational(m) * F.pairing()(a, b) : Rational(0);
                    for (std::size_t j = 0; j < basis.size(); ++j) {
                        const int charge = F.charge(basis[j]);
                        const int jj = static_cast<int>(j);
                        if (charge + n <= L) {
                            auto r = supercommutator(A[m][a], C[n][b], sign, jj);
                            const bool ok = expected == 0 ? r.empty()
                                                          : (r.size() == 1 && r.begin()->first == jj &&
                                                             r.begin()->second == expected);
                            ac.record(ok, [&] {
                                return "[" + detail::mode_str("a", m, a) + "," + detail::mode_str("c", n, b) + "] on state " +
                                       std::to_string(j);
                            });
                        }
                        if (charge + m + n <= L) {
                            cc.record(supercommutator(C[m][a], C[n][b], sign, jj).empty(), [&] {
                                return "[" + detail::mode_str("c", m, a) + "," + detail::mode_str("c", n, b) + "] on state " +
                                       std::to_string(j);
                            });
                        }
                        if (m + n <= L) {
                            aa.record(supercommutator(A[m][a], A[n][b], sign, jj).empty(), [&] {
                                return "[" + detail::mode_str("a", m, a) + "," + detail::mode_str("a", n, b) + "] on state " +
                                       std::to_string(j);
                            });
                        }
                    }
                }

    // declared (charge, degree) shifts on every output term
    detail::Tally decl{"operator degree/charge declarations"};
    for (int m = 1; m <= L; ++m)
        for (int a = 0; a < ng; ++a)
            for (const auto& op : {create(F, m, a), annihilate(F, m, a)})
                for (const auto& s : basis)
                    for (const auto& [t, c] : op.apply(s)) {
                        const bool ok = F.charge(t) - F.charge(s) == op.charge && F.degree(t) - F.degree(s) == op.degree;
                        decl.record(ok, [&] { return "mode level " + std::to_string(m) + " on e" + std::to_string(a); });
                    }

    // q_m(a) = multiplication by the one-factor state; p_m(a) = m · contraction
    // of the primitive part of the coproduct
    detail::Tally qm{"compositional create = create"}, pm{"compositional annihilate = annihilate"};
    for (int m = 1; m <= L; ++m)
        for (int a = 0; a < ng; ++a)
            for (const auto& s : basis) {
                if (F.charge(s) + m <= L)
                    qm.record(F.product(FockVector{{FockState{{m, a}}, Rational(1)}}, FockVector{{s, Rational(1)}}) ==
                                  F.create(m, a, s),
                              [&] { return detail::mode_str("c", m, a); });
                FockVector via_coproduct;
                for (const auto& [split, c] : F.coproduct(s)) {
                    const auto& [left, right] = split;
                    if (left.size() != 1 || left.front().level != m) continue;
                    add_to(via_coproduct, right, Rational(m) * c * F.pairing()(a, left.front().gen));
                }
                pm.record(via_coproduct == F.annihilate(m, a, s), [&] { return detail::mode_str("a", m, a); });
            }

    std::vector<CheckResult> out{ac.result(), cc.result(), aa.result(), decl.result(), qm.result(), pm.result()};
    out.push_back(compare_series("character = poincare_orb", fock_character(F, L),
                                 closed_series(SeriesKind::poincare_orb, x, L)));
    return out;
}

} // namespace symprod
