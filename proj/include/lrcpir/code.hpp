#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lrcpir/matrix.hpp"

namespace lrcpir {

/// Enumeration guard for q^k codeword sweeps.
inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t(1) << 24;

/// Length-n erasure indicator; ones mark erased coordinates.
class ErasurePattern {
  public:
    explicit ErasurePattern(std::size_t n) : bits_(n, 0) {}

    static ErasurePattern from_support(std::size_t n, const IndexSet& support) {
        ErasurePattern e(n);
        for (std::size_t i : support) {
            if (i < 1 || i > n) throw IndexOutOfRange("support index out of range");
            e.bits_[i - 1] = 1;
        }
        return e;
    }

    std::size_t length() const { return bits_.size(); }
    bool erased(std::size_t i) const { return bits_[i - 1] != 0; }  // 1-based
    void set_erased(std::size_t i, bool v) { bits_[i - 1] = v ? 1 : 0; }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto b : bits_) w += b;
        return w;
    }

    IndexSet support() const {
        IndexSet s;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) s.push_back(i + 1);
        return s;
    }

    bool operator==(const ErasurePattern& o) const { return bits_ == o.bits_; }

  private:
    std::vector<std::uint8_t> bits_;
};

/// An [n,k] linear code held by a generator matrix and, for k < n, a
/// parity-check matrix. Invariants: rank(G) = k, rank(H) = n-k, G H^T = 0.
class LinearCode {
  public:
    LinearCode(Matrix g, std::optional<Matrix> h) : g_(std::move(g)), h_(std::move(h)) {
        if (rank(g_) != g_.rows()) throw Error("generator matrix is not full rank");
        if (g_.rows() > g_.cols()) throw DimensionMismatch("k exceeds n");
        if (k() < n()) {
            if (!h_) throw Error("parity-check matrix required for k < n");
            if (h_->cols() != n() || h_->rows() != n() - k())
                throw DimensionMismatch("parity-check dimensions");
            if (rank(*h_) != h_->rows()) throw RankDeficientH("parity-check not full rank");
            if (!is_zero(g_ * transpose(*h_))) throw Error("G H^T != 0");
        } else {
            h_.reset();
        }
    }

    const FieldPtr& field() const { return g_.field(); }
    std::size_t n() const { return g_.cols(); }
    std::size_t k() const { return g_.rows(); }

    const Matrix& generator() const { return g_; }
    bool has_parity_check() const { return h_.has_value(); }
    const Matrix& parity_check() const {
        if (!h_) throw Error("full-space code has no parity-check rows");
        return *h_;
    }

  private:
    Matrix g_;
    std::optional<Matrix> h_;
};

/// Code defined by a full-row-rank parity-check matrix; G spans its kernel
/// (canonical RREF basis, systematic on the pivot-free coordinates).
inline LinearCode from_parity_check(const Matrix& h) {
    if (rank(h) != h.rows()) throw RankDeficientH("parity-check matrix has dependent rows");
    if (h.rows() >= h.cols()) throw RankDeficientH("code dimension would be zero");
    return LinearCode(rref(kernel_basis(h)), h);
}

inline LinearCode from_generator(const Matrix& g) {
    Matrix canon = rref(g);
    if (rank(canon) != canon.rows()) throw Error("generator matrix is not full rank");
    if (g.rows() == g.cols()) return LinearCode(canon, std::nullopt);
    return LinearCode(canon, kernel_basis(canon));
}

inline std::vector<FieldElement> encode(const LinearCode& c, const std::vector<FieldElement>& u) {
    if (u.size() != c.k()) throw DimensionMismatch("message length != k");
    const Field& f = *c.field();
    std::vector<unsigned> w(c.n(), 0);
    for (std::size_t i = 0; i < c.k(); ++i)
        for (std::size_t j = 0; j < c.n(); ++j)
            w[j] = f.add(w[j], f.mul(u[i].value(), c.generator().raw(i, j)));
    std::vector<FieldElement> out;
    out.reserve(c.n());
    for (unsigned v : w) out.push_back(FieldElement(c.field().get(), v));
    return out;
}

/// Minimum Hamming weight over all q^k - 1 nonzero codewords. Guarded to
/// q^k <= 2^24; the sweep walks a base-q odometer and applies one scaled
/// row update per step.
inline std::size_t dmin_bruteforce(const LinearCode& c) {
    const Field& f = *c.field();
    const std::uint64_t q = f.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.k(); ++i) {
        total *= q;
        if (total > kEnumerationGuard) throw TooLarge("q^k exceeds the enumeration guard");
    }
    const Matrix& g = c.generator();
    std::vector<unsigned> digits(c.k(), 0), word(c.n(), 0);
    std::size_t best = c.n() + 1;
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t d = 0;
        while (digits[d] == q - 1) {
            unsigned diff = f.sub(0, digits[d]);
            for (std::size_t j = 0; j < c.n(); ++j)
                word[j] = f.add(word[j], f.mul(diff, g.raw(d, j)));
            digits[d] = 0;
            ++d;
        }
        unsigned diff = f.sub(digits[d] + 1, digits[d]);
        for (std::size_t j = 0; j < c.n(); ++j)
            word[j] = f.add(word[j], f.mul(diff, g.raw(d, j)));
        ++digits[d];
        std::size_t w = 0;
        for (unsigned v : word) w += v != 0;
        best = std::min(best, w);
        if (best == 1) break;
    }
    return best;
}

namespace detail {

// Lexicographic r-combinations of {1..n}, 1-based, passed as an IndexSet.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
    if (r > n) return true;
    IndexSet idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i + 1;
    while (true) {
        if (!fn(static_cast<const IndexSet&>(idx))) return false;
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

inline bool is_mds_by_dmin(const LinearCode& c) {
    if (c.k() == c.n()) return true;
    return dmin_bruteforce(c) == c.n() - c.k() + 1;
}

/// MDS test through the rank criterion: every (n-k)-column submatrix of H
/// is invertible.
inline bool is_mds_by_subset_rank(const LinearCode& c) {
    if (c.k() == c.n()) return true;
    const std::size_t nk = c.n() - c.k();
    return detail::for_each_combination(c.n(), nk, [&](const IndexSet& cols) {
        return rank(restrict_cols(c.parity_check(), cols)) == nk;
    });
}

inline bool is_mds(const LinearCode& c) {
    if (c.k() == c.n()) return true;
    // enumeration only while the codebook stays small; the rank criterion
    // costs a polynomial number of small eliminations
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.k(); ++i) {
        total *= c.field()->size();
        if (total > (std::uint64_t(1) << 16)) return is_mds_by_subset_rank(c);
    }
    return is_mds_by_dmin(c);
}

/// J (size k, distinct coordinates) is an information set iff G restricted
/// to J is invertible.
inline bool is_information_set(const LinearCode& c, IndexSet j) {
    std::sort(j.begin(), j.end());
    if (j.size() != c.k() || std::adjacent_find(j.begin(), j.end()) != j.end())
        throw WrongSize("index set must hold k distinct coordinates");
    if (j.front() < 1 || j.back() > c.n()) throw WrongSize("coordinate out of range");
    return rank(restrict_cols(c.generator(), j)) == c.k();
}

/// Punctured code: the row space of G restricted to S, with recomputed
/// dimension and a fresh parity check.
inline LinearCode puncture(const LinearCode& c, const IndexSet& s) {
    Matrix g = restrict_cols(c.generator(), s);
    std::size_t kk = detail::rref_in_place(g).size();
    if (kk == 0) throw Error("punctured code has dimension zero");
    Matrix basis(g.field(), kk, g.cols());
    for (std::size_t i = 0; i < kk; ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) basis.set_raw(i, j, g.raw(i, j));
    if (kk == g.cols()) return LinearCode(basis, std::nullopt);
    return LinearCode(basis, kernel_basis(basis));
}

/// Rank criterion for erasure correctability: the erased columns of H must
/// be linearly independent.
inline bool is_correctable(const LinearCode& c, const ErasurePattern& e) {
    if (e.length() != c.n()) throw LengthMismatch("pattern length != code length");
    IndexSet supp = e.support();
    if (supp.empty()) return true;
    if (!c.has_parity_check() || supp.size() > c.n() - c.k()) return false;
    return rank(restrict_cols(c.parity_check(), supp)) == supp.size();
}

}  // namespace lrcpir
