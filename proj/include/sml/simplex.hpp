#pragma once

#include <cstdint>
#include <vector>

#include "sml/errors.hpp"
#include "sml/rational.hpp"

namespace sml {

/// Exact rational simplex for: maximize c.x subject to Ax <= b, x >= 0,
/// with b >= 0 (the all-zero point is feasible, so no phase 1 is needed).
/// Bland's anti-cycling rule throughout: the entering variable is the
/// eligible one with the smallest id, ties in the ratio test go to the
/// smallest basic id. Deterministic and guaranteed to terminate.
class SimplexMax {
public:
    enum class Status { Optimal, Unbounded };

    struct Result {
        Status status;
        Rat value;            // objective at the optimum
        std::vector<Rat> x;   // structural variable values
        uint64_t pivots = 0;
    };

    static Result solve(const std::vector<std::vector<Rat>>& a,
                        const std::vector<Rat>& b,
                        const std::vector<Rat>& c) {
        SimplexMax s(a, b, c);
        return s.run();
    }

private:
    SimplexMax(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
               const std::vector<Rat>& c)
        : m_(static_cast<uint32_t>(b.size())), n_(static_cast<uint32_t>(c.size())),
          a_(a), b_(b), c_(c), z0_(0) {
        basic_.resize(m_);
        nonbasic_.resize(n_);
        for (uint32_t i = 0; i < m_; ++i) {
            if (b_[i].sgn() < 0) throw Error("simplex requires b >= 0");
            if (a_[i].size() != n_) throw Error("simplex constraint width mismatch");
            basic_[i] = n_ + i;
        }
        for (uint32_t j = 0; j < n_; ++j) nonbasic_[j] = j;
    }

    Result run() {
        Result res;
        for (;;) {
            // entering: positive reduced cost, smallest variable id
            int32_t s = -1;
            for (uint32_t j = 0; j < n_; ++j) {
                if (c_[j].sgn() > 0 && (s < 0 || nonbasic_[j] < nonbasic_[s]))
                    s = static_cast<int32_t>(j);
            }
            if (s < 0) break;

            // leaving: min ratio b_i / a_is over a_is > 0, ties to smallest basic id
            int32_t r = -1;
            Rat best_ratio(0);
            for (uint32_t i = 0; i < m_; ++i) {
                if (a_[i][s].sgn() <= 0) continue;
                Rat ratio = b_[i] / a_[i][s];
                if (r < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basic_[i] < basic_[r])) {
                    r = static_cast<int32_t>(i);
                    best_ratio = ratio;
                }
            }
            if (r < 0) {
                res.status = Status::Unbounded;
                return res;
            }
            pivot(static_cast<uint32_t>(r), static_cast<uint32_t>(s));
            ++res.pivots;
        }
        res.status = Status::Optimal;
        res.value = z0_;
        res.x.assign(n_, Rat(0));
        for (uint32_t i = 0; i < m_; ++i)
            if (basic_[i] < n_) res.x[basic_[i]] = b_[i];
        return res;
    }

    // dictionary pivot: row r's basic leaves, nonbasic column s enters
    void pivot(uint32_t r, uint32_t s) {
        const Rat piv = a_[r][s];
        const Rat inv = Rat(1) / piv;
        b_[r] *= inv;
        for (uint32_t j = 0; j < n_; ++j)
            if (j != s) a_[r][j] *= inv;
        a_[r][s] = inv;

        for (uint32_t i = 0; i < m_; ++i) {
            if (i == r || a_[i][s].is_zero()) continue;
            const Rat f = a_[i][s];
            b_[i] -= f * b_[r];
            for (uint32_t j = 0; j < n_; ++j) {
                if (j == s) continue;
                if (!a_[r][j].is_zero()) a_[i][j] -= f * a_[r][j];
            }
            a_[i][s] = -f * inv;
        }
        if (!c_[s].is_zero()) {
            const Rat f = c_[s];
            z0_ += f * b_[r];
            for (uint32_t j = 0; j < n_; ++j) {
                if (j == s) continue;
                if (!a_[r][j].is_zero()) c_[j] -= f * a_[r][j];
            }
            c_[s] = -f * inv;
        }
        std::swap(basic_[r], nonbasic_[s]);
    }

    uint32_t m_, n_;
    std::vector<std::vector<Rat>> a_;
    std::vector<Rat> b_;
    std::vector<Rat> c_;
    Rat z0_;
    std::vector<uint32_t> basic_, nonbasic_;
};

} // namespace sml
