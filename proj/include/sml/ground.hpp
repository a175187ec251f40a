#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sml/errors.hpp"
#include "sml/pointset.hpp"

namespace sml {

/// Finite ground set: points 0..N-1, with optional distinct labels for
/// grounds whose points encode structured objects (functions, clopen codes).
class Ground {
public:
    explicit Ground(uint32_t size) : size_(size) {
        if (size == 0) throw EmptyGround("ground must have at least one point");
    }
    Ground(uint32_t size, std::vector<std::string> labels) : size_(size), labels_(std::move(labels)) {
        if (size == 0) throw EmptyGround("ground must have at least one point");
        if (!labels_.empty()) {
            if (labels_.size() != size_) throw ParseError("labels: expected " + std::to_string(size_) + " entries");
            std::unordered_set<std::string> seen;
            for (const auto& l : labels_)
                if (!seen.insert(l).second) throw ParseError("labels: duplicate \"" + l + "\"");
        }
    }

    uint32_t size() const { return size_; }
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(uint32_t p) const {
        return labels_.empty() ? std::to_string(p) : labels_[p];
    }

    PointSet full_set() const { return PointSet::full(size_); }
    PointSet empty_set() const { return PointSet(size_); }

    friend bool operator==(const Ground& a, const Ground& b) {
        return a.size_ == b.size_ && a.labels_ == b.labels_;
    }
    friend bool operator!=(const Ground& a, const Ground& b) { return !(a == b); }

private:
    uint32_t size_;
    std::vector<std::string> labels_;
};

} // namespace sml
