#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sml/cover.hpp"
#include "sml/deadline.hpp"
#include "sml/errors.hpp"
#include "sml/ground.hpp"
#include "sml/measure.hpp"
#include "sml/pointset.hpp"
#include "sml/rational.hpp"
#include "sml/rng.hpp"

namespace sml {

enum class ReprKind { Table, SupMeasures, MinCover, MazurChain };

inline std::string repr_kind_name(ReprKind k) {
    switch (k) {
        case ReprKind::Table: return "table";
        case ReprKind::SupMeasures: return "sup_measures";
        case ReprKind::MinCover: return "min_cover";
        case ReprKind::MazurChain: return "mazur_chain";
    }
    return "?";
}

/// Arity schedule a(n) for n >= 2 of a Mazur chain: level n+1 consists of
/// unions of a(n+1) many level-n sets. Two shapes cover the constructions
/// used here: a constant arity (default 2) and a(n) = n.
class AritySchedule {
public:
    static AritySchedule constant(uint64_t c) {
        if (c < 2) throw ParseError("arity schedule must be >= 2");
        AritySchedule a;
        a.level_ = false;
        a.c_ = c;
        return a;
    }
    static AritySchedule level() {
        AritySchedule a;
        a.level_ = true;
        return a;
    }

    bool is_level() const { return level_; }
    uint64_t constant_value() const { return c_; }

    uint64_t arity(uint32_t n) const { return level_ ? n : c_; }

    /// Least level n with capacity P(n) = a(2)...a(n) >= count, or nullopt
    /// if that exceeds `cap`. P(1) = 1.
    std::optional<uint32_t> level_for_cover_count(uint64_t count, uint32_t cap) const {
        if (count == 0) return 0;
        uint64_t capacity = 1;
        uint32_t n = 1;
        while (capacity < count) {
            ++n;
            if (n > cap) return std::nullopt;
            uint64_t a = arity(n);
            capacity = capacity > (UINT64_MAX / a) ? UINT64_MAX : capacity * a;
        }
        return n;
    }

    friend bool operator==(const AritySchedule& a, const AritySchedule& b) {
        return a.level_ == b.level_ && (a.level_ || a.c_ == b.c_);
    }

private:
    bool level_ = false;
    uint64_t c_ = 2;
};

/// A submeasure on a finite ground in one of four representations:
/// an explicit value table, a supremum of measures, a minimum-cover count
/// over a family, or a Mazur chain given by its level-1 generators.
class Submeasure {
public:
    struct Table {
        std::vector<std::pair<uint64_t, RatX>> entries; // sorted by mask
        bool complete = false;

        std::optional<RatX> lookup(uint64_t mask) const {
            auto it = std::lower_bound(entries.begin(), entries.end(), mask,
                                       [](const auto& e, uint64_t m) { return e.first < m; });
            if (it == entries.end() || it->first != mask) return std::nullopt;
            return it->second;
        }
    };
    struct SupMeasures {
        std::vector<Measure> measures;
    };
    struct MinCover {
        std::vector<PointSet> family;
    };
    struct MazurChain {
        std::vector<PointSet> generators; // maximal level-1 sets, size-lex sorted
        AritySchedule arity;
        uint32_t level_cap = 64;
    };

    static Submeasure table(Ground ground, std::vector<std::pair<PointSet, RatX>> entries) {
        if (ground.size() > 20) throw SizeGuard("table representation above 20 ground points");
        Table t;
        t.entries.reserve(entries.size());
        for (auto& [s, v] : entries) {
            if (s.universe() != ground.size()) throw GroundMismatch("table entry set universe mismatch");
            if (v.is_finite() && v.finite().sgn() < 0) throw ParseError("table value is negative");
            if (s.empty() && v != RatX(0)) throw ParseError("table value of the empty set must be 0");
            t.entries.emplace_back(s.mask64(), v);
        }
        std::sort(t.entries.begin(), t.entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t i = 1; i < t.entries.size(); ++i)
            if (t.entries[i].first == t.entries[i - 1].first)
                throw ParseError("table lists a set twice");
        t.complete = t.entries.size() == (size_t(1) << ground.size());
        return Submeasure(std::move(ground), std::move(t));
    }

    static Submeasure sup(std::vector<Measure> measures) {
        if (measures.empty()) throw ParseError("sup_measures requires a nonempty list");
        for (size_t i = 1; i < measures.size(); ++i)
            if (measures[i].ground() != measures[0].ground())
                throw GroundMismatch("sup_measures over different grounds");
        Ground g = measures[0].ground();
        return Submeasure(std::move(g), SupMeasures{std::move(measures)});
    }

    static Submeasure min_cover_repr(Ground ground, std::vector<PointSet> family) {
        for (const PointSet& s : family)
            if (s.universe() != ground.size()) throw GroundMismatch("min_cover family universe mismatch");
        return Submeasure(std::move(ground), MinCover{std::move(family)});
    }

    /// Level-1 generators are closed hereditarily and joined with all
    /// singletons; only the maximal sets are kept (they determine the chain).
    static Submeasure mazur_chain(Ground ground, std::vector<PointSet> level1,
                                  AritySchedule arity, uint32_t level_cap = 64) {
        std::vector<PointSet> gens;
        for (uint32_t p = 0; p < ground.size(); ++p) {
            PointSet s(ground.size());
            s.add(p);
            gens.push_back(std::move(s));
        }
        for (PointSet& s : level1) {
            if (s.universe() != ground.size()) throw GroundMismatch("mazur_chain level-1 set universe mismatch");
            if (!s.empty()) gens.push_back(std::move(s));
        }
        // keep maximal sets only
        std::sort(gens.begin(), gens.end(), size_lex_less);
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<PointSet> maximal;
        for (const PointSet& s : gens) {
            bool dominated = false;
            for (const PointSet& t : gens)
                if (s != t && s.subset_of(t)) {
                    dominated = true;
                    break;
                }
            if (!dominated) maximal.push_back(s);
        }
        return Submeasure(std::move(ground), MazurChain{std::move(maximal), arity, level_cap});
    }

    const Ground& ground() const { return ground_; }

    ReprKind kind() const {
        if (std::holds_alternative<Table>(repr_)) return ReprKind::Table;
        if (std::holds_alternative<SupMeasures>(repr_)) return ReprKind::SupMeasures;
        if (std::holds_alternative<MinCover>(repr_)) return ReprKind::MinCover;
        return ReprKind::MazurChain;
    }

    const Table& table_repr() const { return repr<Table>("table"); }
    const SupMeasures& sup_repr() const { return repr<SupMeasures>("sup_measures"); }
    const MinCover& cover_repr() const { return repr<MinCover>("min_cover"); }
    const MazurChain& chain_repr() const { return repr<MazurChain>("mazur_chain"); }

    RatX eval(const PointSet& a) const {
        if (a.universe() != ground_.size()) throw GroundMismatch("eval: set universe mismatch");
        if (a.empty()) return RatX(0);
        if (const auto* t = std::get_if<Table>(&repr_)) {
            auto v = t->lookup(a.mask64());
            if (!v) throw MissingTableEntry("table has no entry for " + a.str());
            return *v;
        }
        if (const auto* s = std::get_if<SupMeasures>(&repr_)) {
            Rat best = s->measures[0].mass(a);
            for (size_t i = 1; i < s->measures.size(); ++i)
                best = max(best, s->measures[i].mass(a));
            return RatX(best);
        }
        if (const auto* c = std::get_if<MinCover>(&repr_)) {
            CoverResult r = min_cover(c->family, a);
            return r.coverable ? RatX(long(r.count)) : RatX::inf();
        }
        const auto& ch = std::get<MazurChain>(repr_);
        CoverResult r = min_cover(ch.generators, a);
        if (!r.coverable) return RatX::inf();
        auto lvl = ch.arity.level_for_cover_count(r.count, ch.level_cap);
        if (!lvl)
            throw LevelCapExceeded("chain value >= level cap " + std::to_string(ch.level_cap) +
                                   " for " + a.str() + "; raise the cap to certify");
        return RatX(long(*lvl));
    }
    RatX operator()(const PointSet& a) const { return eval(a); }

    /// All values on subsets of `within`, indexed by the mask over the
    /// ascending points of `within`. Capped at 20 points.
    std::vector<RatX> eval_table(const PointSet& within) const {
        if (within.universe() != ground_.size()) throw GroundMismatch("eval_table: set universe mismatch");
        const std::vector<uint32_t> pts = within.points();
        const uint32_t a = static_cast<uint32_t>(pts.size());
        if (a > 20) throw SizeGuard("eval_table above 20 points");
        const size_t total = size_t(1) << a;
        std::vector<RatX> out(total, RatX(0));

        if (const auto* t = std::get_if<Table>(&repr_)) {
            std::vector<uint64_t> fullmask(total, 0);
            for (size_t m = 1; m < total; ++m) {
                uint32_t low = static_cast<uint32_t>(__builtin_ctzll(m));
                fullmask[m] = fullmask[m & (m - 1)] | (uint64_t(1) << pts[low]);
                auto v = t->lookup(fullmask[m]);
                if (!v) throw MissingTableEntry("table has no entry for mask");
                out[m] = *v;
            }
            return out;
        }
        if (const auto* s = std::get_if<SupMeasures>(&repr_)) {
            std::vector<Rat> best(total, Rat(0));
            std::vector<Rat> mass(total, Rat(0));
            bool first = true;
            for (const Measure& mu : s->measures) {
                for (size_t m = 1; m < total; ++m) {
                    uint32_t low = static_cast<uint32_t>(__builtin_ctzll(m));
                    mass[m] = mass[m & (m - 1)] + mu.weight(pts[low]);
                }
                if (first) {
                    best = mass;
                    first = false;
                } else {
                    for (size_t m = 1; m < total; ++m)
                        if (best[m] < mass[m]) best[m] = mass[m];
                }
            }
            for (size_t m = 1; m < total; ++m) out[m] = RatX(best[m]);
            return out;
        }

        // both cover-based kinds: relabel the family into the sub-universe
        const std::vector<PointSet>* family = nullptr;
        const MazurChain* chain = nullptr;
        if (const auto* c = std::get_if<MinCover>(&repr_)) family = &c->family;
        else {
            chain = &std::get<MazurChain>(repr_);
            family = &chain->generators;
        }
        std::vector<int32_t> pos(ground_.size(), -1);
        for (uint32_t i = 0; i < a; ++i) pos[pts[i]] = static_cast<int32_t>(i);
        std::vector<PointSet> sub;
        sub.reserve(family->size());
        for (const PointSet& f : *family) {
            PointSet g(a);
            f.for_each([&](uint32_t p) {
                if (pos[p] >= 0) g.add(static_cast<uint32_t>(pos[p]));
            });
            sub.push_back(std::move(g));
        }
        std::vector<int32_t> counts = cover_table(sub, a);
        for (size_t m = 1; m < total; ++m) {
            if (counts[m] < 0) {
                out[m] = RatX::inf();
                continue;
            }
            if (!chain) {
                out[m] = RatX(long(counts[m]));
                continue;
            }
            auto lvl = chain->arity.level_for_cover_count(static_cast<uint64_t>(counts[m]), chain->level_cap);
            if (!lvl)
                throw LevelCapExceeded("chain value >= level cap " + std::to_string(chain->level_cap));
            out[m] = RatX(long(*lvl));
        }
        return out;
    }

private:
    template <typename R>
    const R& repr(const char* name) const {
        if (const auto* r = std::get_if<R>(&repr_)) return *r;
        throw ReprMismatch(std::string("operation requires the ") + name + " representation");
    }

    template <typename R>
    Submeasure(Ground g, R r) : ground_(std::move(g)), repr_(std::move(r)) {}

    Ground ground_;
    std::variant<Table, SupMeasures, MinCover, MazurChain> repr_;
};

inline Submeasure sup_of_measures(std::vector<Measure> measures) {
    return Submeasure::sup(std::move(measures));
}

inline Submeasure mazur_from_chain(Ground ground, std::vector<PointSet> level1,
                                   AritySchedule arity = AritySchedule::constant(2),
                                   uint32_t level_cap = 64) {
    return Submeasure::mazur_chain(std::move(ground), std::move(level1), arity, level_cap);
}

/// d(A,B) = phi(A triangle B); the group metric induced by a submeasure.
inline RatX group_metric(const Submeasure& phi, const PointSet& a, const PointSet& b) {
    return phi.eval(a ^ b);
}

/// phi1 (+) phi2 on the disjoint, relabeled union of the two grounds.
/// Kind-preserving where a representation identity exists; otherwise an
/// explicit table (guarded at 16 combined points).
inline Submeasure direct_sum(const Submeasure& phi1, const Submeasure& phi2) {
    const uint32_t n1 = phi1.ground().size(), n2 = phi2.ground().size();
    Ground g(n1 + n2);

    auto lift1 = [&](const PointSet& s) {
        PointSet t(n1 + n2);
        s.for_each([&](uint32_t p) { t.add(p); });
        return t;
    };
    auto lift2 = [&](const PointSet& s) {
        PointSet t(n1 + n2);
        s.for_each([&](uint32_t p) { t.add(p + n1); });
        return t;
    };

    if (phi1.kind() == ReprKind::SupMeasures && phi2.kind() == ReprKind::SupMeasures) {
        const auto& m1 = phi1.sup_repr().measures;
        const auto& m2 = phi2.sup_repr().measures;
        if (m1.size() * m2.size() <= 4096) {
            std::vector<Measure> out;
            out.reserve(m1.size() * m2.size());
            for (const Measure& a : m1)
                for (const Measure& b : m2) {
                    std::vector<Rat> w;
                    w.reserve(n1 + n2);
                    w.insert(w.end(), a.weights().begin(), a.weights().end());
                    w.insert(w.end(), b.weights().begin(), b.weights().end());
                    out.emplace_back(g, std::move(w));
                }
            return Submeasure::sup(std::move(out));
        }
    }
    if (phi1.kind() == ReprKind::MinCover && phi2.kind() == ReprKind::MinCover) {
        std::vector<PointSet> family;
        for (const PointSet& s : phi1.cover_repr().family) family.push_back(lift1(s));
        for (const PointSet& s : phi2.cover_repr().family) family.push_back(lift2(s));
        return Submeasure::min_cover_repr(g, std::move(family));
    }

    if (n1 + n2 > 16) throw SizeGuard("direct_sum table above 2^16 entries");
    std::vector<RatX> t1 = phi1.eval_table(phi1.ground().full_set());
    std::vector<RatX> t2 = phi2.eval_table(phi2.ground().full_set());
    std::vector<std::pair<PointSet, RatX>> entries;
    entries.reserve(size_t(1) << (n1 + n2));
    const uint64_t total = uint64_t(1) << (n1 + n2);
    const uint64_t low = (uint64_t(1) << n1) - 1;
    for (uint64_t m = 0; m < total; ++m) {
        RatX v = t1[m & low] + t2[m >> n1];
        entries.emplace_back(PointSet::from_mask(n1 + n2, m), v);
    }
    return Submeasure::table(g, std::move(entries));
}

/// phi restricted to X, on the relabeled ground {0..|X|-1}. Every
/// representation restricts natively.
inline Submeasure restrict_to(const Submeasure& phi, const PointSet& x) {
    if (x.universe() != phi.ground().size()) throw GroundMismatch("restrict: set universe mismatch");
    if (x.empty()) throw EmptyRestriction("restriction to the empty set");
    const std::vector<uint32_t> pts = x.points();
    const uint32_t a = static_cast<uint32_t>(pts.size());

    std::vector<std::string> labels;
    if (phi.ground().has_labels())
        for (uint32_t p : pts) labels.push_back(phi.ground().label(p));
    Ground g = labels.empty() ? Ground(a) : Ground(a, std::move(labels));

    std::vector<int32_t> pos(phi.ground().size(), -1);
    for (uint32_t i = 0; i < a; ++i) pos[pts[i]] = static_cast<int32_t>(i);
    auto relabel = [&](const PointSet& s) {
        PointSet t(a);
        s.for_each([&](uint32_t p) {
            if (pos[p] >= 0) t.add(static_cast<uint32_t>(pos[p]));
        });
        return t;
    };

    switch (phi.kind()) {
        case ReprKind::Table: {
            std::vector<std::pair<PointSet, RatX>> entries;
            for (const auto& [mask, v] : phi.table_repr().entries) {
                PointSet s = PointSet::from_mask(phi.ground().size(), mask);
                if (s.subset_of(x)) entries.emplace_back(relabel(s), v);
            }
            return Submeasure::table(g, std::move(entries));
        }
        case ReprKind::SupMeasures: {
            std::vector<Measure> ms;
            for (const Measure& m : phi.sup_repr().measures) {
                std::vector<Rat> w;
                w.reserve(a);
                for (uint32_t p : pts) w.push_back(m.weight(p));
                ms.emplace_back(g, std::move(w));
            }
            return Submeasure::sup(std::move(ms));
        }
        case ReprKind::MinCover: {
            std::vector<PointSet> family;
            for (const PointSet& s : phi.cover_repr().family) {
                PointSet t = relabel(s);
                if (!t.empty()) family.push_back(std::move(t));
            }
            return Submeasure::min_cover_repr(g, std::move(family));
        }
        case ReprKind::MazurChain: {
            const auto& ch = phi.chain_repr();
            std::vector<PointSet> level1;
            for (const PointSet& s : ch.generators) {
                PointSet t = relabel(s);
                if (!t.empty()) level1.push_back(std::move(t));
            }
            return Submeasure::mazur_chain(g, std::move(level1), ch.arity, ch.level_cap);
        }
    }
    throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// axiom checking

struct AxiomViolation {
    enum class Kind { EmptyValue, Monotonicity, Subadditivity };
    Kind kind;
    PointSet a, b;
    RatX va, vb, vu;

    std::string str() const {
        switch (kind) {
            case Kind::EmptyValue:
                return "phi(empty) = " + va.str() + " != 0";
            case Kind::Monotonicity:
                return "phi(" + a.str() + ") = " + va.str() + " > phi(" + b.str() + ") = " + vb.str();
            case Kind::Subadditivity:
                return "phi(" + a.str() + " u " + b.str() + ") = " + vu.str() + " > " + va.str() + " + " + vb.str();
        }
        return "?";
    }
};

struct AxiomOptions {
    uint32_t max_exhaustive_ground = 16;
    uint32_t samples = 10000;
    uint64_t seed = 1;
    uint64_t deadline_ms = 0; // 0: no deadline; else stop and report partial progress
};

struct AxiomReport {
    bool exhaustive = false;
    std::string scope;        // "exhaustive" | "sampled" | "table-entries"
    uint64_t checks = 0;
    bool timed_out = false;   // deadline expired; `checks` reports the progress made
    std::vector<AxiomViolation> violations;

    bool pass() const { return violations.empty() && !timed_out; }
};

/// Verifies phi(empty)=0, monotonicity and subadditivity. Exhaustive on
/// grounds up to the configured limit, sampled above it; partial tables are
/// checked on their listed entries.
inline AxiomReport check_axioms(const Submeasure& phi, const AxiomOptions& opts = {}) {
    AxiomReport rep;
    const uint32_t n = phi.ground().size();

    if (phi.kind() == ReprKind::Table && !phi.table_repr().complete) {
        rep.scope = "table-entries";
        const auto& entries = phi.table_repr().entries;
        if (entries.size() > 4096)
            throw SizeGuard("partial-table axiom check above 4096 entries");
        auto set_of = [&](uint64_t m) { return PointSet::from_mask(n, m); };
        for (const auto& [ma, va] : entries) {
            if (ma == 0 && va != RatX(0))
                rep.violations.push_back({AxiomViolation::Kind::EmptyValue, set_of(0), set_of(0), va, RatX(0), RatX(0)});
            for (const auto& [mb, vb] : entries) {
                if ((ma & mb) == ma && ma != mb) { // a subset of b
                    ++rep.checks;
                    if (va > vb)
                        rep.violations.push_back({AxiomViolation::Kind::Monotonicity, set_of(ma), set_of(mb), va, vb, vb});
                }
                auto vu = phi.table_repr().lookup(ma | mb);
                if (vu) {
                    ++rep.checks;
                    if (*vu > va + vb)
                        rep.violations.push_back({AxiomViolation::Kind::Subadditivity, set_of(ma), set_of(mb), va, vb, *vu});
                }
            }
        }
        return rep;
    }

    Deadline deadline(opts.deadline_ms);

    if (n <= opts.max_exhaustive_ground && n <= 20) {
        rep.exhaustive = true;
        rep.scope = "exhaustive";
        const std::vector<RatX> v = phi.eval_table(phi.ground().full_set());
        auto set_of = [&](uint64_t m) { return PointSet::from_mask(n, m); };
        if (v[0] != RatX(0))
            rep.violations.push_back({AxiomViolation::Kind::EmptyValue, set_of(0), set_of(0), v[0], RatX(0), RatX(0)});
        const uint64_t total = uint64_t(1) << n;
        for (uint64_t m = 0; m < total; ++m) {
            if (deadline.expired()) {
                rep.timed_out = true;
                return rep;
            }
            for (uint32_t p = 0; p < n; ++p) {
                if (m & (uint64_t(1) << p)) continue;
                ++rep.checks;
                uint64_t mm = m | (uint64_t(1) << p);
                if (v[m] > v[mm])
                    rep.violations.push_back({AxiomViolation::Kind::Monotonicity, set_of(m), set_of(mm), v[m], v[mm], v[mm]});
            }
        }
        const uint64_t full = total - 1;
        for (uint64_t m = 0; m < total; ++m) {
            if (deadline.expired()) {
                rep.timed_out = true;
                return rep;
            }
            const uint64_t comp = full & ~m;
            uint64_t b = comp;
            for (;;) {
                ++rep.checks;
                if (v[m | b] > v[m] + v[b])
                    rep.violations.push_back({AxiomViolation::Kind::Subadditivity, set_of(m), set_of(b), v[m], v[b], v[m | b]});
                if (b == 0) break;
                b = (b - 1) & comp;
            }
        }
        return rep;
    }

    rep.scope = "sampled";
    SplitMix64 rng(opts.seed);
    auto random_set = [&]() {
        PointSet s(n);
        for (uint32_t p = 0; p < n; ++p)
            if (rng.coin()) s.add(p);
        return s;
    };
    if (phi.eval(PointSet(n)) != RatX(0)) {
        rep.violations.push_back({AxiomViolation::Kind::EmptyValue, PointSet(n), PointSet(n),
                                  phi.eval(PointSet(n)), RatX(0), RatX(0)});
    }
    for (uint32_t i = 0; i < opts.samples; ++i) {
        if (deadline.expired()) {
            rep.timed_out = true;
            return rep;
        }
        PointSet a = random_set(), b = random_set();
        PointSet u = a | b;
        RatX va = phi.eval(a), vb = phi.eval(b), vu = phi.eval(u);
        rep.checks += 3;
        if (va > vu)
            rep.violations.push_back({AxiomViolation::Kind::Monotonicity, a, u, va, vu, vu});
        if (vb > vu)
            rep.violations.push_back({AxiomViolation::Kind::Monotonicity, b, u, vb, vu, vu});
        if (vu > va + vb)
            rep.violations.push_back({AxiomViolation::Kind::Subadditivity, a, b, va, vb, vu});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// integer-valued probe

struct ProbeOptions {
    uint32_t max_ground = 16;
};

struct ProbeResult {
    bool attained = false;
    PointSet witness;
    std::vector<std::pair<uint32_t, RatX>> deletions; // x -> phi(witness minus x)
    std::string note;
};

/// Smallest (size, then lex) set B with phi(B) = k whose one-point deletions
/// all have value < k. A finite ground cannot certify that k is missing from
/// the full range; a NotAttained result says so.
inline ProbeResult integer_valued_probe(const Submeasure& phi, uint64_t k,
                                        const ProbeOptions& opts = {}) {
    const uint32_t n = phi.ground().size();
    if (n > opts.max_ground || n > 20)
        throw SizeGuard("integer_valued_probe ground above " + std::to_string(opts.max_ground));
    const std::vector<RatX> v = phi.eval_table(phi.ground().full_set());
    for (const RatX& x : v)
        if (x.is_finite() && !x.is_integer())
            throw NonIntegerValue("integer_valued_probe met value " + x.str());

    const RatX target(static_cast<long>(k));
    ProbeResult res;
    res.witness = PointSet(n);
    for_each_subset_size_lex(phi.ground().full_set(), 1, n, [&](const PointSet& b) {
        uint64_t m = b.mask64();
        if (v[m] != target) return false;
        std::vector<std::pair<uint32_t, RatX>> dels;
        bool minimal = true;
        b.for_each([&](uint32_t x) {
            RatX d = v[m & ~(uint64_t(1) << x)];
            dels.emplace_back(x, d);
            if (!(d < target)) minimal = false;
        });
        if (!minimal) return false;
        res.attained = true;
        res.witness = b;
        res.deletions = std::move(dels);
        return true;
    });
    if (!res.attained)
        res.note = "value " + std::to_string(k) +
                   " not attained minimally on this finite ground; the infinite-range "
                   "statement is neither confirmed nor refuted";
    return res;
}

} // namespace sml
