#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sml/coloring.hpp"
#include "sml/errors.hpp"
#include "sml/ground.hpp"
#include "sml/matrix.hpp"
#include "sml/measure.hpp"
#include "sml/pathology.hpp"
#include "sml/pointset.hpp"
#include "sml/rational.hpp"
#include "sml/reduction.hpp"
#include "sml/submeasure.hpp"

namespace sml {

/// Key order is part of the format, so everything uses ordered JSON.
using Json = nlohmann::ordered_json;

namespace io_detail {

inline const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
    return *it;
}

inline uint32_t uint_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_number_unsigned()) throw ParseError(std::string("field \"") + name + "\" must be a nonnegative integer");
    return f.get<uint32_t>();
}

inline std::string string_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_string()) throw ParseError(std::string("field \"") + name + "\" must be a string");
    return f.get<std::string>();
}

} // namespace io_detail

inline Json set_to_json(const PointSet& s) {
    Json a = Json::array();
    for (uint32_t p : s.points()) a.push_back(p);
    return a;
}

inline PointSet set_from_json(const Json& j, uint32_t universe, const char* name) {
    if (!j.is_array()) throw ParseError(std::string("field \"") + name + "\" must be an array of points");
    PointSet s(universe);
    for (const Json& e : j) {
        if (!e.is_number_unsigned()) throw ParseError(std::string("field \"") + name + "\" holds a non-point");
        uint32_t p = e.get<uint32_t>();
        if (p >= universe)
            throw ParseError(std::string("field \"") + name + "\": point " + std::to_string(p) +
                             " outside ground of size " + std::to_string(universe));
        s.add(p);
    }
    return s;
}

inline Ground ground_from_json(const Json& j, const char* size_field = "ground") {
    const uint32_t n = io_detail::uint_field(j, size_field);
    if (n == 0) throw ParseError(std::string("field \"") + size_field + "\" must be positive");
    if (auto it = j.find("labels"); it != j.end()) {
        if (!it->is_array()) throw ParseError("field \"labels\" must be an array");
        std::vector<std::string> labels;
        for (const Json& l : *it) {
            if (!l.is_string()) throw ParseError("field \"labels\" holds a non-string");
            labels.push_back(l.get<std::string>());
        }
        return Ground(n, std::move(labels));
    }
    return Ground(n);
}

inline void ground_to_json(const Ground& g, Json& out, const char* size_field = "ground") {
    out[size_field] = g.size();
    if (g.has_labels()) {
        Json labels = Json::array();
        for (const std::string& l : g.labels()) labels.push_back(l);
        out["labels"] = std::move(labels);
    }
}

// ---------------------------------------------------------------------------
// submeasure files

inline Json submeasure_to_json(const Submeasure& phi) {
    Json out;
    ground_to_json(phi.ground(), out);
    Json repr;
    switch (phi.kind()) {
        case ReprKind::Table: {
            repr["kind"] = "table";
            std::vector<PointSet> sets;
            for (const auto& [mask, v] : phi.table_repr().entries)
                sets.push_back(PointSet::from_mask(phi.ground().size(), mask));
            std::sort(sets.begin(), sets.end(), size_lex_less);
            Json values = Json::array();
            for (const PointSet& s : sets) {
                auto v = phi.table_repr().lookup(s.mask64());
                values.push_back(Json::array({set_to_json(s), v->str()}));
            }
            repr["values"] = std::move(values);
            break;
        }
        case ReprKind::SupMeasures: {
            repr["kind"] = "sup_measures";
            Json measures = Json::array();
            for (const Measure& m : phi.sup_repr().measures) {
                Json row = Json::array();
                for (const Rat& w : m.weights()) row.push_back(w.str());
                measures.push_back(std::move(row));
            }
            repr["measures"] = std::move(measures);
            break;
        }
        case ReprKind::MinCover: {
            repr["kind"] = "min_cover";
            Json family = Json::array();
            for (const PointSet& s : phi.cover_repr().family) family.push_back(set_to_json(s));
            repr["family"] = std::move(family);
            break;
        }
        case ReprKind::MazurChain: {
            const auto& ch = phi.chain_repr();
            repr["kind"] = "mazur_chain";
            Json level1 = Json::array();
            for (const PointSet& s : ch.generators) level1.push_back(set_to_json(s));
            repr["level1"] = std::move(level1);
            if (ch.arity.is_level()) repr["arity"] = "n";
            else repr["arity"] = ch.arity.constant_value();
            repr["level_cap"] = ch.level_cap;
            break;
        }
    }
    out["repr"] = std::move(repr);
    return out;
}

inline Submeasure submeasure_from_json(const Json& j) {
    Ground g = ground_from_json(j);
    const Json& repr = io_detail::field(j, "repr");
    const std::string kind = io_detail::string_field(repr, "kind");
    if (kind == "table") {
        const Json& values = io_detail::field(repr, "values");
        if (!values.is_array()) throw ParseError("field \"values\" must be an array");
        std::vector<std::pair<PointSet, RatX>> entries;
        for (const Json& e : values) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("field \"values\" entries must be [set, value] pairs");
            PointSet s = set_from_json(e[0], g.size(), "values");
            if (!e[1].is_string()) throw ParseError("field \"values\" holds a non-string value");
            entries.emplace_back(std::move(s), RatX::from_string(e[1].get<std::string>()));
        }
        return Submeasure::table(std::move(g), std::move(entries));
    }
    if (kind == "sup_measures") {
        const Json& measures = io_detail::field(repr, "measures");
        if (!measures.is_array()) throw ParseError("field \"measures\" must be an array");
        std::vector<Measure> ms;
        for (const Json& row : measures) {
            if (!row.is_array() || row.size() != g.size())
                throw ParseError("field \"measures\": each row needs one weight per point");
            std::vector<Rat> w;
            for (const Json& x : row) {
                if (!x.is_string()) throw ParseError("field \"measures\" holds a non-string weight");
                w.push_back(Rat::from_string(x.get<std::string>()));
            }
            ms.emplace_back(g, std::move(w));
        }
        return Submeasure::sup(std::move(ms));
    }
    if (kind == "min_cover") {
        const Json& family = io_detail::field(repr, "family");
        if (!family.is_array()) throw ParseError("field \"family\" must be an array");
        std::vector<PointSet> fam;
        for (const Json& s : family) fam.push_back(set_from_json(s, g.size(), "family"));
        return Submeasure::min_cover_repr(std::move(g), std::move(fam));
    }
    if (kind == "mazur_chain") {
        const Json& level1 = io_detail::field(repr, "level1");
        if (!level1.is_array()) throw ParseError("field \"level1\" must be an array");
        std::vector<PointSet> gens;
        for (const Json& s : level1) gens.push_back(set_from_json(s, g.size(), "level1"));
        AritySchedule arity = AritySchedule::constant(2);
        if (auto it = repr.find("arity"); it != repr.end()) {
            if (it->is_string()) {
                if (it->get<std::string>() != "n") throw ParseError("field \"arity\" must be an integer or \"n\"");
                arity = AritySchedule::level();
            } else if (it->is_number_unsigned()) {
                arity = AritySchedule::constant(it->get<uint64_t>());
            } else {
                throw ParseError("field \"arity\" must be an integer or \"n\"");
            }
        }
        uint32_t cap = 64;
        if (auto it = repr.find("level_cap"); it != repr.end()) {
            if (!it->is_number_unsigned()) throw ParseError("field \"level_cap\" must be an integer");
            cap = it->get<uint32_t>();
        }
        return Submeasure::mazur_chain(std::move(g), std::move(gens), arity, cap);
    }
    throw ParseError("field \"kind\": unknown representation \"" + kind + "\"");
}

// ---------------------------------------------------------------------------
// covering, matrix, coloring and map files

inline Json covering_to_json(const CoveringInstance& inst) {
    Json out;
    ground_to_json(inst.ground, out);
    Json family = Json::array();
    for (const PointSet& s : inst.family) family.push_back(set_to_json(s));
    out["family"] = std::move(family);
    return out;
}

inline CoveringInstance covering_from_json(const Json& j) {
    Ground g = ground_from_json(j);
    const Json& family = io_detail::field(j, "family");
    if (!family.is_array()) throw ParseError("field \"family\" must be an array");
    std::vector<PointSet> fam;
    for (const Json& s : family) fam.push_back(set_from_json(s, g.size(), "family"));
    return CoveringInstance{std::move(g), std::move(fam)};
}

inline Json matrix_to_json(const VectorSequence& x) {
    Json out;
    out["rows"] = x.rows();
    out["cols"] = x.cols();
    if (x.signed_allowed()) out["signed"] = true;
    Json entries = Json::array();
    for (uint32_t k = 0; k < x.rows(); ++k) {
        Json row = Json::array();
        for (uint32_t n = 0; n < x.cols(); ++n) row.push_back(x.at(k, n).str());
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

inline VectorSequence matrix_from_json(const Json& j) {
    const uint32_t rows = io_detail::uint_field(j, "rows");
    const uint32_t cols = io_detail::uint_field(j, "cols");
    bool signed_allowed = false;
    if (auto it = j.find("signed"); it != j.end()) {
        if (!it->is_boolean()) throw ParseError("field \"signed\" must be a boolean");
        signed_allowed = it->get<bool>();
    }
    VectorSequence x(rows, cols, signed_allowed);
    const Json& entries = io_detail::field(j, "entries");
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError("field \"entries\" must hold one row per matrix row");
    for (uint32_t k = 0; k < rows; ++k) {
        const Json& row = entries[k];
        if (!row.is_array() || row.size() != cols)
            throw ParseError("field \"entries\": row " + std::to_string(k) + " has the wrong width");
        for (uint32_t n = 0; n < cols; ++n) {
            if (!row[n].is_string()) throw ParseError("field \"entries\" holds a non-string value");
            x.set(k, n, Rat::from_string(row[n].get<std::string>()));
        }
    }
    return x;
}

inline Json coloring_to_json(const PairColoring& c) {
    Json out;
    ground_to_json(c.ground(), out);
    Json pairs = Json::array();
    for (auto [a, b] : c.pairs1()) pairs.push_back(Json::array({a, b}));
    out["pairs1"] = std::move(pairs);
    return out;
}

inline PairColoring coloring_from_json(const Json& j) {
    Ground g = ground_from_json(j);
    const Json& pairs = io_detail::field(j, "pairs1");
    if (!pairs.is_array()) throw ParseError("field \"pairs1\" must be an array");
    PairColoring c{std::move(g)};
    for (const Json& e : pairs) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw ParseError("field \"pairs1\" entries must be point pairs");
        uint32_t a = e[0].get<uint32_t>(), b = e[1].get<uint32_t>();
        if (a == b || a >= c.ground().size() || b >= c.ground().size())
            throw ParseError("field \"pairs1\" holds an invalid pair");
        c.set_color(a, b, 1);
    }
    return c;
}

inline Json map_to_json(const PointMap& f) {
    Json out;
    out["source"] = f.source.size();
    out["target"] = f.target.size();
    Json arr = Json::array();
    for (uint32_t v : f.map) arr.push_back(v);
    out["map"] = std::move(arr);
    return out;
}

inline PointMap map_from_json(const Json& j) {
    const uint32_t src = io_detail::uint_field(j, "source");
    const uint32_t tgt = io_detail::uint_field(j, "target");
    const Json& arr = io_detail::field(j, "map");
    if (!arr.is_array() || arr.size() != src)
        throw ParseError("field \"map\" must list one image per source point");
    std::vector<uint32_t> f;
    for (const Json& e : arr) {
        if (!e.is_number_unsigned()) throw ParseError("field \"map\" holds a non-point");
        f.push_back(e.get<uint32_t>());
    }
    return PointMap(Ground(src), Ground(tgt), std::move(f));
}

/// Barrier colorings are serialized by threshold and matrix reference.
inline Json barrier_to_json(uint32_t p, const std::string& matrix_ref) {
    Json out;
    out["p"] = p;
    out["matrix_ref"] = matrix_ref;
    return out;
}

/// FNV-1a 64-bit; used for generator manifests.
inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

} // namespace sml
