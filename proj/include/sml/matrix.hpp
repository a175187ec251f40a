#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sml/errors.hpp"
#include "sml/rational.hpp"

namespace sml {

/// A finite truncation of a sequence of vectors: column n is the n-th
/// vector, row k is the k-th coordinate. Through the row measures
/// mu_k({n}) = x_n(k) the same matrix is a finite family of measures.
class VectorSequence {
public:
    VectorSequence() : rows_(0), cols_(0), signed_allowed_(false) {}
    VectorSequence(uint32_t rows, uint32_t cols, bool signed_allowed = false)
        : rows_(rows), cols_(cols), signed_allowed_(signed_allowed),
          e_(static_cast<size_t>(rows) * cols, Rat(0)) {
        if (rows == 0 || cols == 0) throw ParseError("matrix needs at least one row and column");
    }

    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    bool signed_allowed() const { return signed_allowed_; }

    Rat& at(uint32_t row, uint32_t col) { return e_[idx(row, col)]; }
    const Rat& at(uint32_t row, uint32_t col) const { return e_[idx(row, col)]; }

    void set(uint32_t row, uint32_t col, Rat v) {
        if (!signed_allowed_ && v.sgn() < 0)
            throw SignedInput("negative entry in an unsigned matrix");
        e_[idx(row, col)] = std::move(v);
    }

    bool has_negative() const {
        for (const Rat& x : e_)
            if (x.sgn() < 0) return true;
        return false;
    }

    Rat max_abs() const {
        Rat best(0);
        for (const Rat& x : e_) best = max(best, abs(x));
        return best;
    }

    /// ell-infinity norm of column n.
    Rat column_norm(uint32_t col) const {
        Rat best(0);
        for (uint32_t k = 0; k < rows_; ++k) best = max(best, abs(at(k, col)));
        return best;
    }

    VectorSequence scaled(const Rat& factor) const {
        VectorSequence out(rows_, cols_, signed_allowed_);
        for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * factor;
        return out;
    }

    friend bool operator==(const VectorSequence& a, const VectorSequence& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.signed_allowed_ == b.signed_allowed_ && a.e_ == b.e_;
    }

private:
    size_t idx(uint32_t row, uint32_t col) const {
        if (row >= rows_ || col >= cols_) throw Error("matrix index out of range");
        return static_cast<size_t>(row) * cols_ + col;
    }

    uint32_t rows_, cols_;
    bool signed_allowed_;
    std::vector<Rat> e_;
};

} // namespace sml
