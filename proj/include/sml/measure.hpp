#pragma once

#include <utility>
#include <vector>

#include "sml/errors.hpp"
#include "sml/ground.hpp"
#include "sml/pointset.hpp"
#include "sml/rational.hpp"

namespace sml {

/// Finitely supported measure: a nonnegative weight per ground point.
/// Additive by construction; never takes the value infinity.
class Measure {
public:
    Measure(Ground ground, std::vector<Rat> weights)
        : ground_(std::move(ground)), w_(std::move(weights)) {
        if (w_.size() != ground_.size())
            throw GroundMismatch("measure weights do not match ground size");
        for (const Rat& x : w_)
            if (x.sgn() < 0) throw ParseError("measure weight is negative");
    }

    static Measure zero(const Ground& g) {
        return Measure(g, std::vector<Rat>(g.size(), Rat(0)));
    }
    /// Counting measure of a support set.
    static Measure counting(const Ground& g, const PointSet& support) {
        std::vector<Rat> w(g.size(), Rat(0));
        support.for_each([&](uint32_t p) { w[p] = Rat(1); });
        return Measure(g, std::move(w));
    }

    const Ground& ground() const { return ground_; }
    const std::vector<Rat>& weights() const { return w_; }
    const Rat& weight(uint32_t p) const { return w_[p]; }

    Rat mass(const PointSet& a) const {
        if (a.universe() != ground_.size()) throw GroundMismatch("mass: set universe mismatch");
        Rat s(0);
        a.for_each([&](uint32_t p) { s += w_[p]; });
        return s;
    }
    Rat total() const {
        Rat s(0);
        for (const Rat& x : w_) s += x;
        return s;
    }
    bool is_probability() const { return total() == Rat(1); }

    Measure scaled(const Rat& c) const {
        if (c.sgn() < 0) throw ParseError("negative scaling of a measure");
        std::vector<Rat> w(w_);
        for (Rat& x : w) x *= c;
        return Measure(ground_, std::move(w));
    }
    /// Zeroes every weight outside `support`; same ground.
    Measure restricted_to(const PointSet& support) const {
        std::vector<Rat> w(ground_.size(), Rat(0));
        support.for_each([&](uint32_t p) { w[p] = w_[p]; });
        return Measure(ground_, std::move(w));
    }

    PointSet support() const {
        PointSet s(ground_.size());
        for (uint32_t p = 0; p < w_.size(); ++p)
            if (!w_[p].is_zero()) s.add(p);
        return s;
    }

private:
    Ground ground_;
    std::vector<Rat> w_;
};

} // namespace sml
