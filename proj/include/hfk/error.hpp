#pragma once

#include <stdexcept>
#include <string>

namespace hfk {

// Every failure carries a short machine-readable tag (e.g. "NoDomain") plus a detail line.
class Error : public std::runtime_error {
public:
    Error(std::string tag, const std::string& detail)
        : std::runtime_error(tag + ": " + detail), tag_(std::move(tag)) {}

    const std::string& tag() const noexcept { return tag_; }

private:
    std::string tag_;
};

[[noreturn]] inline void fail(const std::string& tag, const std::string& detail) {
    throw Error(tag, detail);
}

// Half-integers are stored doubled throughout.
inline std::string half_to_string(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

inline double half_to_double(int twice) { return twice / 2.0; }

}  // namespace hfk
