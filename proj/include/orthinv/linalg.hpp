#ifndef ORTHINV_LINALG_HPP
#define ORTHINV_LINALG_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "orthinv/errors.hpp"
#include "orthinv/fields.hpp"
#include "orthinv/poly.hpp"

namespace orthinv {

enum class VarMask : unsigned { All = 0b1111, XOnly = 0b0011 };

inline bool mask_allows(VarMask m, int var) {
    return (static_cast<unsigned>(m) >> var) & 1u;
}

/// The monomials of one degree (grlex-descending) with index lookup.
/// Columns of all coefficient rows at this degree refer to this list.
class DegreeFrame {
public:
    DegreeFrame() = default;

    DegreeFrame(std::uint32_t degree, VarMask mask = VarMask::All) : degree_(degree) {
        Monomial m;
        enumerate(m, 0, degree, mask);
        std::sort(monomials_.begin(), monomials_.end(), MonoGrlexDesc{});
        for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
    }

    std::uint32_t degree() const { return degree_; }
    std::size_t size() const { return monomials_.size(); }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    std::size_t index_of(const Monomial& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) throw Error("monomial outside frame");
        return it->second;
    }

    std::vector<std::uint32_t> row_of(const Polynomial& f) const {
        std::vector<std::uint32_t> row(size(), 0);
        for (const auto& [m, c] : f.terms()) row[index_of(m)] = c;
        return row;
    }

    Polynomial poly_of(const std::vector<std::uint32_t>& row, std::uint32_t p) const {
        Polynomial f(p);
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i]) f.add_term(monomials_[i], row[i]);
        return f;
    }

private:
    void enumerate(Monomial& m, int var, std::uint32_t rem, VarMask mask) {
        if (var == 4) {
            if (rem == 0) monomials_.push_back(m);
            return;
        }
        std::uint32_t hi = mask_allows(mask, var) ? rem : 0;
        for (std::uint32_t e = 0; e <= hi; ++e) {
            m.e[var] = e;
            enumerate(m, var + 1, rem - e, mask);
        }
        m.e[var] = 0;
    }

    std::uint32_t degree_ = 0;
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t, MonoGrlexDesc> index_;
};

/// Incremental reduced row echelon basis over F_p. Pivot policy: leftmost
/// column (largest monomial in grlex order).
class RowSpace {
public:
    RowSpace(std::uint32_t p, std::size_t ncols) : p_(p), ncols_(ncols) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }

    /// Reduces r against the basis; keeps it if independent. Returns whether
    /// the dimension grew.
    bool insert(std::vector<std::uint32_t> r) {
        std::size_t c = reduce(r);
        if (c == ncols_) return false;
        std::uint32_t inv = fp_inv(r[c], p_);
        for (std::size_t j = c; j < ncols_; ++j) r[j] = fp_mul(r[j], inv, p_);
        for (auto& row : rows_)
            if (row[c]) axpy(row, r, fp_neg(row[c], p_), c);
        pivots_[c] = rows_.size();
        rows_.push_back(std::move(r));
        return true;
    }

    /// True iff r lies in the current span.
    bool contains(std::vector<std::uint32_t> r) const { return reduce(r) == ncols_; }

private:
    // returns pivot column of the reduced row, or ncols_ when reduced to zero
    std::size_t reduce(std::vector<std::uint32_t>& r) const {
        std::size_t c = 0;
        while (c < ncols_) {
            if (r[c] == 0) { ++c; continue; }
            auto it = pivots_.find(c);
            if (it == pivots_.end()) return c;
            axpy(r, rows_[it->second], fp_neg(r[c], p_), c);
            ++c;
        }
        return ncols_;
    }

    void axpy(std::vector<std::uint32_t>& dst, const std::vector<std::uint32_t>& src,
              std::uint32_t coef, std::size_t from) const {
        for (std::size_t j = from; j < ncols_; ++j)
            if (src[j])
                dst[j] = static_cast<std::uint32_t>(
                    (dst[j] + static_cast<std::uint64_t>(coef) * src[j]) % p_);
    }

    std::uint32_t p_;
    std::size_t ncols_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::map<std::size_t, std::size_t> pivots_;
};

/// Left null space combinations: all c with sum_i c_i * rows[i] = 0,
/// via forward elimination on [rows | I].
inline std::vector<std::vector<std::uint32_t>> nullspace_combinations(
    std::vector<std::vector<std::uint32_t>> rows, std::size_t ncols, std::uint32_t p) {
    std::size_t k = rows.size();
    for (std::size_t i = 0; i < k; ++i) {
        rows[i].resize(ncols + k, 0);
        rows[i][ncols + i] = 1;
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < k; ++c) {
        std::size_t piv = k;
        for (std::size_t r = rank; r < k; ++r)
            if (rows[r][c]) { piv = r; break; }
        if (piv == k) continue;
        std::swap(rows[rank], rows[piv]);
        std::uint32_t inv = fp_inv(rows[rank][c], p);
        for (std::size_t j = c; j < ncols + k; ++j)
            rows[rank][j] = fp_mul(rows[rank][j], inv, p);
        for (std::size_t r = rank + 1; r < k; ++r) {
            std::uint32_t f = rows[r][c];
            if (!f) continue;
            std::uint32_t nf = fp_neg(f, p);
            for (std::size_t j = c; j < ncols + k; ++j)
                if (rows[rank][j])
                    rows[r][j] = static_cast<std::uint32_t>(
                        (rows[r][j] + static_cast<std::uint64_t>(nf) * rows[rank][j]) % p);
        }
        ++rank;
    }
    std::vector<std::vector<std::uint32_t>> combos;
    for (std::size_t r = rank; r < k; ++r)
        combos.emplace_back(rows[r].begin() + ncols, rows[r].end());
    return combos;
}

} // namespace orthinv

#endif
