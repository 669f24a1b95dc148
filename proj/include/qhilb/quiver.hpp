#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qhilb/matrix.hpp"

namespace qhilb {

/// Arrow tail -> head. Vertices are 0-based internally; the text format and all
/// user-facing output use 1-based labels.
struct Arrow {
    std::string name;
    std::size_t tail = 0;
    std::size_t head = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite, connected, acyclic quiver. Construction validates all three.
class Quiver {
public:
    Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

    /// Line-oriented text: `vertices <r>`, then `arrow <name> <tail> <head>`
    /// lines; `#` starts a comment, blank lines are ignored.
    static Quiver parse(std::string_view text);
    static Quiver load(const std::string& path);

    std::size_t vertex_count() const { return r_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    /// [V]_{ij} = number of arrows i -> j.
    IntMatrix arrow_matrix() const;
    /// C = [V] + [V]^t, the adjacency matrix of the double quiver.
    IntMatrix adjacency() const;

    /// Same quiver with arrow `index` reversed.
    Quiver with_reversed(std::size_t index) const;
    std::string to_text() const;

private:
    std::size_t r_;
    std::vector<Arrow> arrows_;
};

/// An arrow of the double quiver. For an original arrow `a`, its partner is
/// the reversed arrow `a*` (starred == true), and vice versa.
struct DoubleArrow {
    std::string name;
    std::size_t tail = 0;
    std::size_t head = 0;
    std::size_t partner = 0;
    bool starred = false;
};

struct DoubleQuiver {
    std::size_t vertex_count = 0;
    /// Original arrows in input order, followed by their starred partners.
    std::vector<DoubleArrow> arrows;
    IntMatrix arrow_matrix;
    IntMatrix adjacency;
};

DoubleQuiver double_quiver(const Quiver& q);

}  // namespace qhilb
