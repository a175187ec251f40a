#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sml/errors.hpp"
#include "sml/matrix.hpp"
#include "sml/measure.hpp"
#include "sml/pointset.hpp"
#include "sml/rational.hpp"
#include "sml/submeasure.hpp"

namespace sml {

/// The submeasure of a nonnegative vector sequence: the sup over finite
/// partial sums of the sup norm. For nonnegative entries the sup over
/// F subset of A is attained at F = A coordinatewise, so this is exactly
/// the sup of the row measures.
inline Submeasure phi_of_sequence(const VectorSequence& x) {
    if (x.has_negative())
        throw SignedInput("phi_of_sequence needs nonnegative entries; abs_normalize first");
    Ground g(x.cols());
    std::vector<Measure> rows;
    rows.reserve(x.rows());
    for (uint32_t k = 0; k < x.rows(); ++k) {
        std::vector<Rat> w(x.cols());
        for (uint32_t n = 0; n < x.cols(); ++n) w[n] = x.at(k, n);
        rows.emplace_back(g, std::move(w));
    }
    return Submeasure::sup(std::move(rows));
}

/// The converse direction: columns x_n = (mu_0({n}), ..., mu_K({n})).
inline VectorSequence sequence_of_phi(const Submeasure& phi) {
    if (phi.kind() != ReprKind::SupMeasures)
        throw ReprMismatch("sequence_of_phi requires a sup-of-measures submeasure");
    const auto& ms = phi.sup_repr().measures;
    VectorSequence x(static_cast<uint32_t>(ms.size()), phi.ground().size(), false);
    for (uint32_t k = 0; k < ms.size(); ++k)
        for (uint32_t n = 0; n < phi.ground().size(); ++n)
            x.at(k, n) = ms[k].weight(n);
    return x;
}

/// Entrywise absolute value; the induced perfectly-bounded ideal is
/// unchanged.
inline VectorSequence abs_normalize(const VectorSequence& x) {
    VectorSequence out(x.rows(), x.cols(), false);
    for (uint32_t k = 0; k < x.rows(); ++k)
        for (uint32_t n = 0; n < x.cols(); ++n) out.at(k, n) = abs(x.at(k, n));
    return out;
}

struct BoundednessReport {
    Rat primal_max;              // max over F subset of A of the sup-norm of the partial sum
    uint32_t argmax_row = 0;
    bool bounded_at_k = false;   // primal_max <= k
    std::vector<Rat> dual_sums;  // per coordinate row: sum over A of |x_n(row)|
    std::string dual_note;
};

/// Primal check of perfect boundedness on A at threshold k, plus the
/// coordinate-functional shadow of the dual characterization. For signed
/// input the primal max is computed exactly by per-row sign selection:
/// max over F of |row sum| = max(sum of positives, -(sum of negatives)).
inline BoundednessReport boundedness_report(const VectorSequence& x, const PointSet& a, const Rat& k) {
    if (a.universe() != x.cols()) throw GroundMismatch("boundedness_report: set universe mismatch");
    BoundednessReport rep;
    rep.dual_sums.reserve(x.rows());
    for (uint32_t row = 0; row < x.rows(); ++row) {
        Rat pos(0), neg(0), absum(0);
        a.for_each([&](uint32_t n) {
            const Rat& v = x.at(row, n);
            if (v.sgn() > 0) pos += v;
            else neg += v;
            absum += abs(v);
        });
        Rat row_max = max(pos, -neg);
        if (row_max > rep.primal_max) {
            rep.primal_max = row_max;
            rep.argmax_row = row;
        }
        rep.dual_sums.push_back(absum);
    }
    rep.bounded_at_k = rep.primal_max <= k;
    rep.dual_note = "coordinate functionals only: a necessary-condition shadow of the "
                    "dual characterization, not a check over the whole dual space";
    return rep;
}

struct NullityReport {
    std::vector<Rat> thresholds;        // 1, 1/2, ..., 2^-depth
    std::vector<int64_t> row_vanishing; // per threshold: last row k with an entry above it
    std::vector<int64_t> col_vanishing; // per threshold: last column n with an entry above it
    Rat sup_col_norm;                   // sup over n of phi({n}) = column sup-norm
    std::vector<Rat> col_norms;
    std::string label;
};

/// Truncation trends for the two vanishing hypotheses and the singleton
/// supremum. Reports last indices above each dyadic threshold; never an
/// infinite-limit claim.
inline NullityReport nullity_diagnostics(const VectorSequence& x, uint32_t depth = 10) {
    NullityReport rep;
    for (uint32_t t = 0; t <= depth; ++t) rep.thresholds.push_back(pow2(-static_cast<long>(t)));
    rep.row_vanishing.assign(depth + 1, -1);
    rep.col_vanishing.assign(depth + 1, -1);
    for (uint32_t k = 0; k < x.rows(); ++k)
        for (uint32_t n = 0; n < x.cols(); ++n) {
            const Rat v = abs(x.at(k, n));
            for (uint32_t t = 0; t <= depth; ++t) {
                if (v > rep.thresholds[t]) {
                    rep.row_vanishing[t] = std::max<int64_t>(rep.row_vanishing[t], k);
                    rep.col_vanishing[t] = std::max<int64_t>(rep.col_vanishing[t], n);
                }
            }
        }
    for (uint32_t n = 0; n < x.cols(); ++n) {
        rep.col_norms.push_back(x.column_norm(n));
        rep.sup_col_norm = max(rep.sup_col_norm, rep.col_norms.back());
    }
    rep.label = "truncation diagnostic: finite trends only, no limit statement";
    return rep;
}

/// sup over n of the column sup-norm; the scaling constant of the tallness
/// characterization.
inline Rat sup_column_norm(const VectorSequence& x) {
    Rat best(0);
    for (uint32_t n = 0; n < x.cols(); ++n) best = max(best, x.column_norm(n));
    return best;
}

/// Divides every entry by M = sup column norm so all entries land in [0,1].
inline VectorSequence scale_to_unit(const VectorSequence& x) {
    const Rat m = sup_column_norm(x);
    if (m.is_zero()) throw ParseError("scale_to_unit: the matrix is zero");
    return x.scaled(Rat(1) / m);
}

} // namespace sml
