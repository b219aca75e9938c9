#pragma once

// Hand-transcribed reference values for the built-in trefoil cover.

#include <string>
#include <vector>

namespace hfk::ref {

struct GradingEntry {
    std::string name;
    long long a1_2;  // doubled, up to one overall shift per axis
    long long a2_2;
};

// Every generator of the trefoil cover with its doubled Alexander bigrading.
inline const std::vector<GradingEntry> trefoil_cover_gradings = {
    {"h^1h^2", -7, 3},
    {"g^1g^2", -7, 1},
    {"h^1i^2", -5, 3},
    {"i^1h^2", -5, 3},
    {"g^1j^2", -5, 1},
    {"j^1g^2", -5, 1},
    {"g^1f^2", -5, 1},
    {"f^1g^2", -5, 1},
    {"h^1e^2", -5, 1},
    {"e^1h^2", -5, 1},
    {"f^1f^2", -3, 1},
    {"j^1j^2", -3, 1},
    {"e^1i^2", -3, 1},
    {"i^1e^2", -3, 1},
    {"f^1j^2", -3, 1},
    {"j^1f^2", -3, 1},
    {"g^1k^2", -3, 1},
    {"k^1g^2", -3, 1},
    {"h^1c^2", -3, 1},
    {"c^1h^2", -3, 1},
    {"h^1l^2", -3, 1},
    {"l^1h^2", -3, 1},
    {"i^1i^2", -3, 3},
    {"e^1c^2", -1, -1},
    {"c^1e^2", -1, -1},
    {"e^1l^2", -1, -1},
    {"l^1e^2", -1, -1},
    {"b^1f^2", -1, -1},
    {"f^1b^2", -1, -1},
    {"b^1j^2", -1, -1},
    {"j^1b^2", -1, -1},
    {"a^1g^2", -1, -1},
    {"g^1a^2", -1, -1},
    {"e^1e^2", -3, -1},
    {"b^1g^2", -3, -1},
    {"g^1b^2", -3, -1},
    {"f^1k^2", -1, 1},
    {"k^1f^2", -1, 1},
    {"j^1k^2", -1, 1},
    {"k^1j^2", -1, 1},
    {"i^1l^2", -1, 1},
    {"l^1i^2", -1, 1},
    {"c^1i^2", -1, 1},
    {"i^1c^2", -1, 1},
    {"h^1m^2", -1, 1},
    {"m^1h^2", -1, 1},
    {"m^1m^2", 5, -1},
    {"k^1k^2", 1, 1},
    {"i^1m^2", 1, 1},
    {"m^1i^2", 1, 1},
    {"c^1m^2", 3, -1},
    {"m^1c^2", 3, -1},
    {"l^1m^2", 3, -1},
    {"m^1l^2", 3, -1},
    {"a^1k^2", 3, -1},
    {"k^1a^2", 3, -1},
    {"a^1a^2", 5, -3},
    {"a^1b^2", 3, -3},
    {"b^1a^2", 3, -3},
    {"b^1b^2", 1, -3},
    {"b^1k^2", 1, -1},
    {"k^1b^2", 1, -1},
    {"a^1f^2", 1, -1},
    {"f^1a^2", 1, -1},
    {"c^1c^2", 1, -1},
    {"l^1l^2", 1, -1},
    {"c^1l^2", 1, -1},
    {"l^1c^2", 1, -1},
    {"e^1m^2", 1, -1},
    {"m^1e^2", 1, -1},
    {"a^1j^2", 1, -1},
    {"j^1a^2", 1, -1},
};

struct Arrow {
    std::string from;
    std::string to;
    bool knot_only;  // crosses a z basepoint of the axis
};

// Every empty embedded disk of the trefoil cover; a repeated entry is a second disk.
inline const std::vector<Arrow> trefoil_cover_arrows = {
    {"h^1h^2", "g^1g^2", true},
    {"h^1i^2", "g^1j^2", true},
    {"h^1i^2", "f^1g^2", true},
    {"g^1j^2", "e^1h^2", false},
    {"f^1g^2", "e^1h^2", false},
    {"i^1h^2", "g^1f^2", true},
    {"i^1h^2", "j^1g^2", true},
    {"g^1f^2", "h^1e^2", false},
    {"j^1g^2", "h^1e^2", false},
    {"i^1i^2", "k^1g^2", true},
    {"i^1i^2", "g^1k^2", true},
    {"i^1i^2", "f^1f^2", true},
    {"i^1i^2", "j^1j^2", true},
    {"f^1f^2", "e^1e^2", true},
    {"f^1f^2", "h^1c^2", false},
    {"f^1f^2", "c^1h^2", false},
    {"j^1j^2", "e^1e^2", true},
    {"j^1j^2", "l^1h^2", false},
    {"j^1j^2", "h^1l^2", false},
    {"k^1g^2", "h^1c^2", false},
    {"k^1g^2", "l^1h^2", false},
    {"g^1k^2", "c^1h^2", false},
    {"g^1k^2", "h^1l^2", false},
    {"e^1e^2", "g^1b^2", false},
    {"e^1e^2", "b^1g^2", false},
    {"h^1c^2", "g^1b^2", true},
    {"c^1h^2", "b^1g^2", true},
    {"l^1h^2", "g^1b^2", true},
    {"h^1l^2", "b^1g^2", true},
    {"f^1j^2", "e^1i^2", false},
    {"j^1f^2", "i^1e^2", false},
    {"k^1j^2", "l^1i^2", false},
    {"k^1j^2", "e^1c^2", true},
    {"k^1j^2", "h^1m^2", false},
    {"f^1k^2", "h^1m^2", false},
    {"f^1k^2", "c^1i^2", false},
    {"f^1k^2", "e^1l^2", true},
    {"k^1f^2", "l^1e^2", true},
    {"k^1f^2", "i^1c^2", false},
    {"k^1f^2", "m^1h^2", false},
    {"j^1k^2", "m^1h^2", false},
    {"j^1k^2", "c^1e^2", true},
    {"j^1k^2", "i^1l^2", false},
    {"l^1i^2", "f^1b^2", true},
    {"l^1i^2", "g^1a^2", true},
    {"e^1c^2", "f^1b^2", false},
    {"e^1c^2", "a^1g^2", false},
    {"h^1m^2", "a^1g^2", true},
    {"h^1m^2", "g^1a^2", true},
    {"c^1i^2", "a^1g^2", true},
    {"c^1i^2", "b^1j^2", true},
    {"l^1e^2", "a^1g^2", false},
    {"l^1e^2", "j^1b^2", false},
    {"e^1l^2", "b^1j^2", false},
    {"e^1l^2", "g^1a^2", false},
    {"i^1c^2", "j^1b^2", true},
    {"i^1c^2", "g^1a^2", true},
    {"m^1h^2", "a^1g^2", true},
    {"m^1h^2", "g^1a^2", true},
    {"i^1l^2", "a^1g^2", true},
    {"i^1l^2", "b^1f^2", true},
    {"c^1e^2", "b^1f^2", false},
    {"c^1e^2", "g^1a^2", false},
    {"k^1k^2", "i^1m^2", false},
    {"k^1k^2", "m^1i^2", false},
    {"k^1k^2", "c^1c^2", true},
    {"k^1k^2", "l^1l^2", true},
    {"c^1c^2", "b^1b^2", true},
    {"c^1c^2", "a^1f^2", false},
    {"c^1c^2", "f^1a^2", false},
    {"l^1l^2", "b^1b^2", true},
    {"l^1l^2", "a^1j^2", false},
    {"l^1l^2", "j^1a^2", false},
    {"e^1m^2", "f^1a^2", false},
    {"e^1m^2", "a^1j^2", false},
    {"m^1e^2", "a^1f^2", false},
    {"m^1e^2", "j^1a^2", false},
    {"i^1m^2", "a^1f^2", true},
    {"i^1m^2", "j^1a^2", true},
    {"m^1i^2", "f^1a^2", true},
    {"m^1i^2", "a^1j^2", true},
    {"c^1l^2", "b^1k^2", false},
    {"l^1c^2", "k^1b^2", false},
    {"l^1m^2", "a^1b^2", true},
    {"m^1c^2", "k^1a^2", false},
    {"c^1m^2", "a^1k^2", false},
    {"m^1l^2", "b^1a^2", true},
    {"l^1m^2", "k^1a^2", false},
    {"m^1c^2", "a^1b^2", true},
    {"c^1m^2", "b^1a^2", true},
    {"m^1l^2", "a^1k^2", false},
    {"m^1m^2", "a^1a^2", true},
    {"m^1m^2", "a^1a^2", true},
};

}  // namespace hfk::ref
