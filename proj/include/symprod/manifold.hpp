#pragma once

#include <symprod/errors.hpp>
#include <symprod/gvs.hpp>
#include <symprod/half.hpp>
#include <symprod/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace symprod {

enum class ManifoldKind { real, complex };

/// One block of a user-supplied intersection pairing: rows index the basis
/// of H^degree, columns the basis of H^{dim_real − degree}.
struct PairingBlock {
    int degree = 0;
    std::vector<std::vector<Rational>> matrix;
};

/// Cohomological description of a closed manifold X.
struct ManifoldData {
    std::string name;
    ManifoldKind kind = ManifoldKind::real;
    int dim_real = 0;
    std::optional<int> dim_c;
    GradedDims betti;
    std::optional<BigradedDims> hodge;
    std::optional<BigradedDims> hodgeB;  ///< (p, q) ↦ h^{−p,q}
    bool calabi_yau = false;
    std::optional<std::vector<PairingBlock>> pairing;

    bool is_complex() const { return kind == ManifoldKind::complex; }

    /// Half the real dimension.
    int m() const { return dim_real / 2; }

    /// k with dim_C X = 2k.
    Half k() const {
        if (!dim_c) throw InputError(name + ": complex dimension required");
        return Half::from_twice(*dim_c);
    }

    std::int64_t euler() const { return betti.euler(); }

    /// Throws InputError naming the violated invariant.
    void validate() const {
        if (dim_real < 0 || dim_real % 2 != 0) throw InputError(name + ": real dimension must be even and nonnegative");
        if (dim_c && 2 * *dim_c != dim_real) throw InputError(name + ": dim_real must equal 2*dim_c");
        if (is_complex() && !dim_c) throw InputError(name + ": complex manifold without dim_c");
        for (const auto& [d, n] : betti.dims()) {
            if (!d.is_integer() || d < Half{} || d > Half::from_int(dim_real))
                throw InputError(name + ": Betti number outside degrees 0.." + std::to_string(dim_real));
        }
        auto check_table = [&](const BigradedDims& w, const char* what) {
            for (const auto& [pq, n] : w.dims()) {
                const Half top = Half::from_int(dim_c.value_or(0));
                if (!pq.first.is_integer() || !pq.second.is_integer() || pq.first < Half{} || pq.second < Half{} ||
                    pq.first > top || pq.second > top)
                    throw InputError(name + ": " + what + " entry outside 0.." + top.str());
            }
        };
        if (hodge) {
            check_table(*hodge, "hodge");
            if (!(hodge->total_degree() == betti))
                throw InputError(name + ": betti consistency violated (b_d != sum_{p+q=d} h^{p,q})");
        }
        if (hodgeB) check_table(*hodgeB, "hodgeB");
    }

    /// b_d = b_{2m−d} for all d.
    bool satisfies_poincare_duality() const {
        for (const auto& [d, n] : betti.dims())
            if (betti.at(Half::from_int(dim_real) - d) != n) return false;
        return true;
    }
};

/// Serre duality on a Calabi–Yau d-fold: h^{−p,q} = h^{d−p,q}.
inline BigradedDims derive_B_table(const ManifoldData& x) {
    if (!x.hodge || !x.dim_c) throw InputError(x.name + ": B-table derivation needs a Hodge table");
    const Half d = Half::from_int(*x.dim_c);
    BigradedDims out;
    for (const auto& [pq, n] : x.hodge->dims()) out.add(d - pq.first, pq.second, n);
    return out;
}

} // namespace symprod
