#include "stairgrid/mesh.hpp"

#include <algorithm>
#include <sstream>

namespace stairgrid {

MeshPattern::MeshPattern(Perm pattern, std::vector<std::pair<int, int>> shading)
    : pat_(std::move(pattern)), shading_(std::move(shading)) {
    const int k = pat_.size();
    for (auto [x, y] : shading_)
        if (x < 0 || x > k || y < 0 || y > k)
            throw invalid_input("mesh shading box outside the (k+1)x(k+1) grid");
    std::sort(shading_.begin(), shading_.end());
    shading_.erase(std::unique(shading_.begin(), shading_.end()), shading_.end());
}

MeshPattern MeshPattern::parse(const Perm& pattern, const std::string& shading_text) {
    std::vector<std::pair<int, int>> boxes;
    if (!shading_text.empty()) {
        std::stringstream ss(shading_text);
        std::string tok;
        while (std::getline(ss, tok, ';')) {
            size_t comma = tok.find(',');
            if (comma == std::string::npos)
                throw invalid_input("bad shading text (want \"x,y;x,y\"): " + shading_text);
            try {
                size_t ua = 0, ub = 0;
                int x = std::stoi(tok.substr(0, comma), &ua);
                int y = std::stoi(tok.substr(comma + 1), &ub);
                if (ua != comma || ub != tok.size() - comma - 1)
                    throw invalid_input("bad shading text: " + shading_text);
                boxes.emplace_back(x, y);
            } catch (const std::logic_error&) {
                throw invalid_input("bad shading text: " + shading_text);
            }
        }
    }
    return MeshPattern(pattern, std::move(boxes));
}

std::string MeshPattern::shading_str() const {
    std::ostringstream os;
    for (size_t i = 0; i < shading_.size(); ++i) {
        if (i) os << ';';
        os << shading_[i].first << ',' << shading_[i].second;
    }
    return os.str();
}

namespace {

// Occurrences are enumerated by choosing positions increasingly; the value
// condition is checked via the pattern, and the shading condition on the
// completed occurrence.
bool shading_clean(const Perm& text, const MeshPattern& mp, const std::vector<int>& occ_pos) {
    const int k = mp.pattern().size();
    const int n = text.size();
    // Horizontal strip x: positions strictly between occ_pos[x-1] and occ_pos[x]
    // (0-based sentinels 0 and n+1).  Vertical strip y likewise in values.
    std::vector<int> occ_val(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t) occ_val[static_cast<size_t>(t)] = text.at(occ_pos[static_cast<size_t>(t)]);
    std::vector<int> val_sorted = occ_val;
    std::sort(val_sorted.begin(), val_sorted.end());
    for (auto [x, y] : mp.shading()) {
        int plo = (x == 0) ? 0 : occ_pos[static_cast<size_t>(x - 1)];
        int phi = (x == k) ? n + 1 : occ_pos[static_cast<size_t>(x)];
        int vlo = (y == 0) ? 0 : val_sorted[static_cast<size_t>(y - 1)];
        int vhi = (y == k) ? n + 1 : val_sorted[static_cast<size_t>(y)];
        for (int p = plo + 1; p < phi; ++p) {
            int v = text.at(p);
            if (v > vlo && v < vhi) return false;
        }
    }
    return true;
}

bool search(const Perm& text, const MeshPattern& mp, std::vector<int>& occ_pos, int t) {
    const Perm& pat = mp.pattern();
    const int k = pat.size();
    const int n = text.size();
    if (t == k) return shading_clean(text, mp, occ_pos);
    int from = (t == 0) ? 1 : occ_pos[static_cast<size_t>(t - 1)] + 1;
    for (int p = from; p <= n - (k - t - 1); ++p) {
        bool ok = true;
        for (int s = 0; s < t && ok; ++s) {
            bool pat_less = pat.at(s + 1) < pat.at(t + 1);
            bool txt_less = text.at(occ_pos[static_cast<size_t>(s)]) < text.at(p);
            ok = (pat_less == txt_less);
        }
        if (!ok) continue;
        occ_pos[static_cast<size_t>(t)] = p;
        if (search(text, mp, occ_pos, t + 1)) return true;
    }
    return false;
}

} // namespace

bool contains_mesh(const Perm& text, const MeshPattern& mp) {
    if (mp.pattern().empty()) {
        // The empty mesh pattern occurs unless a shaded box (necessarily the
        // whole plane box (0,0)) is inhabited.
        return mp.shading().empty() || text.empty();
    }
    if (mp.pattern().size() > text.size()) return false;
    std::vector<int> occ_pos(static_cast<size_t>(mp.pattern().size()));
    return search(text, mp, occ_pos, 0);
}

} // namespace stairgrid
