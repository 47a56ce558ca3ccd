#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lrcpir/gf.hpp"

namespace lrcpir {

/// 1-based coordinate set, kept in increasing order.
using IndexSet = std::vector<std::size_t>;

/// Dense matrix over a finite field, row-major. Value type: copy freely,
/// mutate by replacement.
class Matrix {
  public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
        if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
    }

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m.set_raw(i, i, 1);
        return m;
    }

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    unsigned raw(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set_raw(std::size_t i, std::size_t j, unsigned v) { a_[i * cols_ + j] = v; }

    FieldElement at(std::size_t i, std::size_t j) const {
        return FieldElement(field_.get(), raw(i, j));
    }
    void set(std::size_t i, std::size_t j, const FieldElement& e) {
        if (e.field() != field_.get()) throw FieldMismatch("entry from a different field");
        set_raw(i, j, e.value());
    }

    bool operator==(const Matrix& o) const {
        return field_->size() == o.field_->size() && field_->poly() == o.field_->poly() &&
               rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

  private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<unsigned> a_;
};

/// Binary matrix used for erasure-pattern bookkeeping. Deliberately a
/// separate type from Matrix over GF(2): entries are indicators, not code
/// symbols.
class BinaryMatrix {
  public:
    BinaryMatrix() : rows_(0), cols_(0) {}
    BinaryMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, int v) { a_[i * cols_ + j] = v ? 1 : 0; }

    std::size_t row_weight(std::size_t i) const {
        std::size_t w = 0;
        for (std::size_t j = 0; j < cols_; ++j) w += a_[i * cols_ + j];
        return w;
    }
    std::size_t col_weight(std::size_t j) const {
        std::size_t w = 0;
        for (std::size_t i = 0; i < rows_; ++i) w += a_[i * cols_ + j];
        return w;
    }

    bool operator==(const BinaryMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const BinaryMatrix& o) const { return !(*this == o); }

  private:
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> a_;
};

namespace detail {

// In-place reduced row echelon form. Pivot selection: first nonzero entry in
// column order, lowest row index on ties. Returns pivot column indices.
inline std::vector<std::size_t> rref_in_place(Matrix& m) {
    const Field& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < m.rows() && m.raw(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                unsigned t = m.raw(pr, j);
                m.set_raw(pr, j, m.raw(sel, j));
                m.set_raw(sel, j, t);
            }
        unsigned inv = f.inv(m.raw(pr, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.set_raw(pr, j, f.mul(m.raw(pr, j), inv));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pr) continue;
            unsigned factor = m.raw(r, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                m.set_raw(r, j, f.sub(m.raw(r, j), f.mul(factor, m.raw(pr, j))));
        }
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

}  // namespace detail

inline Matrix rref(Matrix m) {
    detail::rref_in_place(m);
    return m;
}

inline std::size_t rank(Matrix m) { return detail::rref_in_place(m).size(); }

inline Matrix transpose(const Matrix& m) {
    Matrix t(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t.set_raw(j, i, m.raw(i, j));
    return t;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.field().get() != b.field().get()) throw FieldMismatch("matrix product across fields");
    if (a.cols() != b.rows()) throw DimensionMismatch("inner dimensions differ");
    const Field& f = *a.field();
    Matrix c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            unsigned v = a.raw(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.set_raw(i, j, f.add(c.raw(i, j), f.mul(v, b.raw(k, j))));
        }
    return c;
}

inline bool is_zero(const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.raw(i, j)) return false;
    return true;
}

/// Column-restricted submatrix. `cols` is 1-based, nonempty, strictly
/// increasing; original column order is preserved.
inline Matrix restrict_cols(const Matrix& m, const IndexSet& cols) {
    if (cols.empty()) throw IndexOutOfRange("column set must be nonempty");
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] < 1 || cols[i] > m.cols()) throw IndexOutOfRange("column index out of range");
        if (i && cols[i] <= cols[i - 1]) throw IndexOutOfRange("column set must be increasing");
    }
    Matrix r(m.field(), m.rows(), cols.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r.set_raw(i, j, m.raw(i, cols[j] - 1));
    return r;
}

inline Matrix hconcat(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw DimensionMismatch("nothing to concatenate");
    std::size_t total = 0;
    for (const Matrix& b : blocks) {
        if (b.rows() != blocks.front().rows()) throw DimensionMismatch("row counts differ");
        if (b.field().get() != blocks.front().field().get())
            throw FieldMismatch("blocks from different fields");
        total += b.cols();
    }
    Matrix r(blocks.front().field(), blocks.front().rows(), total);
    std::size_t off = 0;
    for (const Matrix& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r.set_raw(i, off + j, b.raw(i, j));
        off += b.cols();
    }
    return r;
}

inline Matrix vconcat(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw DimensionMismatch("nothing to concatenate");
    std::size_t total = 0;
    for (const Matrix& b : blocks) {
        if (b.cols() != blocks.front().cols()) throw DimensionMismatch("column counts differ");
        if (b.field().get() != blocks.front().field().get())
            throw FieldMismatch("blocks from different fields");
        total += b.rows();
    }
    Matrix r(blocks.front().field(), total, blocks.front().cols());
    std::size_t off = 0;
    for (const Matrix& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r.set_raw(off + i, j, b.raw(i, j));
        off += b.rows();
    }
    return r;
}

/// Rows spanning {x : M x^T = 0}; (cols - rank) rows, canonical (from RREF).
inline Matrix kernel_basis(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots = detail::rref_in_place(r);
    const Field& f = *m.field();
    std::size_t n = m.cols(), k = n - pivots.size();
    if (k == 0) throw RankDeficientH("kernel is trivial");
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Matrix basis(m.field(), k, n);
    std::size_t bi = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        basis.set_raw(bi, c, 1);
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            basis.set_raw(bi, pivots[pi], f.neg(r.raw(pi, c)));
        ++bi;
    }
    return basis;
}

inline bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Recovers the erased symbols of a codeword of the code with parity-check
/// matrix H. `received` must carry the true symbols at the non-erased
/// coordinates (erased entries ignored). Returns the erased symbols in the
/// order of `erased`, or nullopt when the pattern is not uniquely solvable.
inline std::optional<std::vector<FieldElement>> solve_erasures(const Matrix& h,
                                                               const IndexSet& erased,
                                                               const std::vector<FieldElement>& received) {
    if (received.size() != h.cols()) throw DimensionMismatch("received length != code length");
    if (erased.empty()) return std::vector<FieldElement>{};
    if (erased.size() > h.cols()) throw IndexOutOfRange("more erasures than coordinates");
    const Field& f = *h.field();

    std::vector<bool> is_erased(h.cols(), false);
    for (std::size_t i = 0; i < erased.size(); ++i) {
        if (erased[i] < 1 || erased[i] > h.cols()) throw IndexOutOfRange("erasure index out of range");
        if (i && erased[i] <= erased[i - 1]) throw IndexOutOfRange("erasure set must be increasing");
        is_erased[erased[i] - 1] = true;
    }

    // H|_E x = -sum_{j known} H_j c_j, solved on the augmented system
    Matrix aug(h.field(), h.rows(), erased.size() + 1);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t j = 0; j < erased.size(); ++j) aug.set_raw(r, j, h.raw(r, erased[j] - 1));
        unsigned s = 0;
        for (std::size_t c = 0; c < h.cols(); ++c) {
            if (is_erased[c]) continue;
            s = f.add(s, f.mul(h.raw(r, c), received[c].value()));
        }
        aug.set_raw(r, erased.size(), f.neg(s));
    }
    std::vector<std::size_t> pivots = detail::rref_in_place(aug);
    // unique solution iff every unknown column holds a pivot and none falls
    // in the augmented column
    if (!pivots.empty() && pivots.back() == erased.size()) return std::nullopt;  // inconsistent
    if (pivots.size() != erased.size()) return std::nullopt;                     // rank deficit
    std::vector<FieldElement> out;
    out.reserve(erased.size());
    for (std::size_t j = 0; j < erased.size(); ++j)
        out.push_back(FieldElement(h.field().get(), aug.raw(j, erased.size())));
    return out;
}

// --- text formats ----------------------------------------------------------

/// Field literal on the first line, then one row per line with entries as
/// "z^i", "1" or "0", space separated.
inline std::string write_matrix_text(const Matrix& m) {
    std::string s = field_literal(*m.field()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += " ";
            s += to_string(m.at(i, j));
        }
        s += "\n";
    }
    return s;
}

inline Matrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw ParseError("empty matrix file");
    FieldPtr f = parse_field_literal(header);
    std::vector<std::vector<FieldElement>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<FieldElement> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_element(f, tok));
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("ragged matrix rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix has no rows");
    Matrix m(f, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
    return m;
}

/// Rows of 0/1 characters, one row per line.
inline std::string write_binary_matrix_text(const BinaryMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) ? '1' : '0';
        s += "\n";
    }
    return s;
}

inline BinaryMatrix parse_binary_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::string bits;
        for (char c : line) {
            if (c == '0' || c == '1') bits += c;
            else if (c != ' ' && c != '\t' && c != '\r')
                throw ParseError("binary matrix rows must be 0/1");
        }
        if (bits.empty()) continue;
        if (!rows.empty() && bits.size() != rows.front().size())
            throw ParseError("ragged binary matrix rows");
        rows.push_back(bits);
    }
    if (rows.empty()) throw ParseError("binary matrix has no rows");
    BinaryMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j] == '1');
    return m;
}

}  // namespace lrcpir
