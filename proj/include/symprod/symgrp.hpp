#pragma once

// Cycle types of S_n and the per-sector data of the symmetric-product
// orbifold X^n / S_n.

#include <symprod/errors.hpp>
#include <symprod/half.hpp>
#include <symprod/rational.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace symprod {

/// Partition of n recorded as multiplicities l ↦ N_l (number of l-cycles).
class CycleType {
public:
    CycleType() = default;

    /// From a list of parts (cycle lengths), in any order.
    static CycleType from_parts(const std::vector<int>& parts) {
        CycleType c;
        for (int l : parts) {
            if (l < 1) throw UsageError("cycle length must be positive");
            ++c.mult_[l];
            c.n_ += l;
        }
        return c;
    }

    int n() const { return n_; }
    const std::map<int, int>& mult() const { return mult_; }
    int count(int l) const {
        auto it = mult_.find(l);
        return it == mult_.end() ? 0 : it->second;
    }

    /// Cycle lengths in descending order.
    std::vector<int> parts() const {
        std::vector<int> out;
        for (auto it = mult_.rbegin(); it != mult_.rend(); ++it)
            out.insert(out.end(), it->second, it->first);
        return out;
    }

    /// Σ_l (l − 1)·N_l: n minus the number of cycles.
    int rank() const {
        int r = 0;
        for (const auto& [l, k] : mult_) r += (l - 1) * k;
        return r;
    }

    std::string str() const {
        std::string s = "[";
        for (int l : parts()) s += (s.size() > 1 ? "," : "") + std::to_string(l);
        return s + "]";
    }

    bool operator==(const CycleType&) const = default;

private:
    int n_ = 0;
    std::map<int, int> mult_;
};

/// All partitions of n, ordered as descending part lists in descending
/// lexicographic order: [n], [n-1,1], ..., [1,...,1].
inline std::vector<CycleType> cycle_types(int n) {
    if (n < 0) throw UsageError("cycle_types: negative n");
    std::vector<CycleType> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(CycleType::from_parts(parts));
            return;
        }
        for (int l = std::min(remaining, max_part); l >= 1; --l) {
            parts.push_back(l);
            rec(remaining - l, l);
            parts.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// |Z_g| = ∏_l N_l! · l^{N_l}.
inline Integer centralizer_order(const CycleType& c) {
    Integer z = 1;
    for (const auto& [l, k] : c.mult()) {
        z *= factorial(static_cast<unsigned long>(k));
        Integer lk;
        mpz_ui_pow_ui(lk.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(k));
        z *= lk;
    }
    return z;
}

/// Fixed locus (X^n)^g ≅ ∏_l X^{N_l}; its Z_g-quotient is ∏_l X^{(N_l)}.
inline std::map<int, int> fixed_locus_factors(const CycleType& c) { return c.mult(); }

struct ShiftData {
    Half F;                   ///< bigrading shift (F, F) of the sector
    std::int64_t codim_real;  ///< real codimension of the fixed locus in X^n

    /// Shift of the total cohomological degree, 2F.
    Half degree_shift() const { return F * 2; }
};

/// Sector shift for a manifold of real dimension dim_real: F is half the
/// complex codimension of the fixed locus, i.e. a quarter of the real one.
inline ShiftData shift_of(const CycleType& c, int dim_real) {
    if (dim_real < 0 || dim_real % 2 != 0) throw UsageError("shift_of: real dimension must be even and nonnegative");
    const std::int64_t codim = static_cast<std::int64_t>(dim_real) * c.rank();
    return ShiftData{Half::from_twice(codim / 2), codim};
}

} // namespace symprod
