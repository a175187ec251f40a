#pragma once

#include <chrono>
#include <cstdint>

namespace sml {

/// Optional wall-clock budget for long enumerations; zero means unlimited.
/// Callers poll once per outer iteration and return partial progress on
/// expiry.
class Deadline {
public:
    explicit Deadline(uint64_t millis)
        : enabled_(millis > 0),
          end_(std::chrono::steady_clock::now() + std::chrono::milliseconds(millis)) {}

    bool expired() const {
        return enabled_ && std::chrono::steady_clock::now() >= end_;
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point end_;
};

} // namespace sml
