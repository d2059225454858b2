#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stairgrid/perm.hpp"

namespace stairgrid {

/// A mesh pattern: a classical pattern of size k plus a set of shaded unit
/// boxes of the (k+1) x (k+1) grid around it.  Box (x, y), 0 <= x, y <= k,
/// is the open region strictly between positions x and x+1 and strictly
/// between values y and y+1 of an occurrence (0 and k+1 meaning the outside).
class MeshPattern {
public:
    MeshPattern(Perm pattern, std::vector<std::pair<int, int>> shading);

    /// Parses "x,y;x,y;..." (empty string = no shading).
    static MeshPattern parse(const Perm& pattern, const std::string& shading_text);

    const Perm& pattern() const { return pat_; }
    const std::vector<std::pair<int, int>>& shading() const { return shading_; }

    std::string shading_str() const;

private:
    Perm pat_;
    std::vector<std::pair<int, int>> shading_; // sorted, deduplicated
};

/// True when `text` has an occurrence of the underlying classical pattern
/// for which every shaded box is free of other points of `text`.
bool contains_mesh(const Perm& text, const MeshPattern& mp);

} // namespace stairgrid
