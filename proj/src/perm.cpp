#include "stairgrid/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace stairgrid {

namespace {

bool is_permutation_word(const std::vector<int>& v) {
    std::vector<char> seen(v.size(), 0);
    for (int x : v) {
        if (x < 1 || x > static_cast<int>(v.size())) return false;
        if (seen[static_cast<size_t>(x - 1)]) return false;
        seen[static_cast<size_t>(x - 1)] = 1;
    }
    return true;
}

} // namespace

Perm::Perm(std::vector<int> one_line) : v_(std::move(one_line)) {
    if (!is_permutation_word(v_))
        throw invalid_input("not a permutation of 1..n: " +
                            [&] {
                                std::ostringstream os;
                                for (int x : v_) os << x << ' ';
                                return os.str();
                            }());
}

Perm Perm::standardize(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<int> idx(word.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return word[static_cast<size_t>(a)] < word[static_cast<size_t>(b)]; });
    std::vector<int> out(word.size());
    for (int r = 0; r < n; ++r) {
        if (r > 0 && word[static_cast<size_t>(idx[static_cast<size_t>(r)])] ==
                          word[static_cast<size_t>(idx[static_cast<size_t>(r - 1)])])
            throw invalid_input("standardize: repeated letter");
        out[static_cast<size_t>(idx[static_cast<size_t>(r)])] = r + 1;
    }
    Perm p;
    p.v_ = std::move(out);
    return p;
}

Perm Perm::parse(const std::string& text) {
    if (text.empty()) throw invalid_input("empty permutation text");
    std::vector<int> vals;
    if (text.find('.') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, '.')) {
            if (tok.empty()) throw invalid_input("bad permutation text: " + text);
            size_t used = 0;
            int x;
            try {
                x = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw invalid_input("bad permutation text: " + text);
            }
            if (used != tok.size()) throw invalid_input("bad permutation text: " + text);
            vals.push_back(x);
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw invalid_input("bad permutation text: " + text);
            vals.push_back(c - '0');
        }
    }
    return Perm(std::move(vals));
}

int Perm::position_of(int val) const {
    for (int i = 0; i < size(); ++i)
        if (v_[static_cast<size_t>(i)] == val) return i + 1;
    throw invalid_input("position_of: value out of range");
}

std::string Perm::str() const {
    std::ostringstream os;
    if (size() <= 9) {
        for (int x : v_) os << x;
    } else {
        for (int i = 0; i < size(); ++i) {
            if (i) os << '.';
            os << v_[static_cast<size_t>(i)];
        }
    }
    return os.str();
}

bool Perm::operator<(const Perm& o) const {
    if (size() != o.size()) return size() < o.size();
    return v_ < o.v_;
}

namespace {

// Backtracking occurrence search.  Pattern positions are matched left to
// right; for each pattern position t the candidate text value must fall
// strictly between the values already chosen for the pattern's closest
// smaller and closest larger letters, which `fence` precomputes.
struct Fences {
    std::vector<int> below; // index of pattern position holding the next smaller letter seen so far, or -1
    std::vector<int> above; // likewise next larger, or -1
};

Fences make_fences(const Perm& pat) {
    const int k = pat.size();
    Fences f;
    f.below.assign(static_cast<size_t>(k), -1);
    f.above.assign(static_cast<size_t>(k), -1);
    for (int t = 0; t < k; ++t) {
        int best_lo = 0, best_hi = k + 1;
        for (int s = 0; s < t; ++s) {
            int vs = pat.at(s + 1), vt = pat.at(t + 1);
            if (vs < vt && vs > best_lo) {
                best_lo = vs;
                f.below[static_cast<size_t>(t)] = s;
            }
            if (vs > vt && vs < best_hi) {
                best_hi = vs;
                f.above[static_cast<size_t>(t)] = s;
            }
        }
    }
    return f;
}

// `pin_pos`/`pin_role`: when pin_role >= 0, pattern position pin_role must
// be matched to text position pin_pos (both 0-based here).
bool occurs(const std::vector<int>& text, const Perm& pat, const Fences& f,
            int pin_role, int pin_pos) {
    const int n = static_cast<int>(text.size());
    const int k = pat.size();
    if (k > n) return false;
    std::vector<int> chosen(static_cast<size_t>(k), -1); // text indices per pattern position

    // Depth-first over pattern positions.
    std::vector<int> start(static_cast<size_t>(k), 0);
    int t = 0;
    while (t >= 0) {
        if (t == k) return true;
        bool advanced = false;
        int from = start[static_cast<size_t>(t)];
        if (t > 0) from = std::max(from, chosen[static_cast<size_t>(t - 1)] + 1);
        int hi_excl = n - (k - t - 1); // leave room for the rest
        if (pin_role >= 0) {
            if (t < pin_role)
                hi_excl = std::min(hi_excl, pin_pos - (pin_role - t - 1));
            else if (t == pin_role)
                from = std::max(from, pin_pos), hi_excl = std::min(hi_excl, pin_pos + 1);
            else
                from = std::max(from, pin_pos + 1);
        }
        for (int i = from; i < hi_excl; ++i) {
            int val = text[static_cast<size_t>(i)];
            int b = f.below[static_cast<size_t>(t)];
            if (b >= 0 && val <= text[static_cast<size_t>(chosen[static_cast<size_t>(b)])]) continue;
            int a = f.above[static_cast<size_t>(t)];
            if (a >= 0 && val >= text[static_cast<size_t>(chosen[static_cast<size_t>(a)])]) continue;
            chosen[static_cast<size_t>(t)] = i;
            start[static_cast<size_t>(t)] = i + 1;
            advanced = true;
            break;
        }
        if (advanced) {
            ++t;
            if (t < k) start[static_cast<size_t>(t)] = 0;
        } else {
            start[static_cast<size_t>(t)] = 0;
            --t;
        }
    }
    return false;
}

} // namespace

bool Perm::contains(const Perm& pattern) const {
    if (pattern.empty()) return true;
    Fences f = make_fences(pattern);
    return occurs(v_, pattern, f, -1, -1);
}

bool Perm::contains_with_max_at(const Perm& pattern, int pos) const {
    if (pattern.empty()) return true;
    int max_role = pattern.position_of(pattern.size()) - 1;
    Fences f = make_fences(pattern);
    return occurs(v_, pattern, f, max_role, pos - 1);
}

std::vector<int> Perm::left_to_right_minima() const {
    std::vector<int> out;
    int cur = size() + 1;
    for (int i = 1; i <= size(); ++i) {
        if (at(i) < cur) {
            cur = at(i);
            out.push_back(i);
        }
    }
    return out;
}

Perm Perm::reversed() const {
    std::vector<int> w(v_.rbegin(), v_.rend());
    Perm p;
    p.v_ = std::move(w);
    return p;
}

Perm Perm::complemented() const {
    std::vector<int> w(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) w[i] = static_cast<int>(v_.size()) + 1 - v_[i];
    Perm p;
    p.v_ = std::move(w);
    return p;
}

Perm Perm::inverted() const {
    std::vector<int> w(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) w[static_cast<size_t>(v_[i] - 1)] = static_cast<int>(i) + 1;
    Perm p;
    p.v_ = std::move(w);
    return p;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << p.str(); }

Perm direct_sum(const Perm& a, const Perm& b) {
    std::vector<int> w = a.values();
    for (int x : b.values()) w.push_back(x + a.size());
    Perm p;
    return Perm(std::move(w));
}

Perm skew_sum(const Perm& a, const Perm& b) {
    std::vector<int> w;
    w.reserve(static_cast<size_t>(a.size() + b.size()));
    for (int x : a.values()) w.push_back(x + b.size());
    for (int x : b.values()) w.push_back(x);
    return Perm(std::move(w));
}

namespace {

std::vector<Perm> components(const Perm& p, bool direct) {
    std::vector<Perm> out;
    const int n = p.size();
    int start = 0;              // 0-based start of the current component
    int lo = n + 1, hi = 0;     // min/max of the current component
    for (int i = 0; i < n; ++i) {
        lo = std::min(lo, p.at(i + 1));
        hi = std::max(hi, p.at(i + 1));
        // A prefix block is complete when it occupies a value interval of
        // its own length anchored at the proper end.
        bool cut = direct ? (hi == i + 1) : (lo == n - i);
        if (cut) {
            std::vector<int> w;
            w.reserve(static_cast<size_t>(i - start + 1));
            int offset = direct ? start : n - (i + 1);
            for (int j = start; j <= i; ++j) w.push_back(p.at(j + 1) - offset);
            out.emplace_back(std::move(w));
            start = i + 1;
            lo = n + 1;
            hi = 0;
        }
    }
    return out;
}

} // namespace

std::vector<Perm> sum_components(const Perm& p) { return components(p, true); }
std::vector<Perm> skew_components(const Perm& p) { return components(p, false); }

bool sum_indecomposable(const Perm& p) { return !p.empty() && sum_components(p).size() == 1; }
bool skew_indecomposable(const Perm& p) { return !p.empty() && skew_components(p).size() == 1; }

Perm bstrip(const Perm& p) {
    if (p.empty() || p.at(p.size()) != p.size()) return p;
    std::vector<int> w(p.values().begin(), p.values().end() - 1);
    return Perm(std::move(w));
}

Perm apply_symmetry(int sym, const Perm& p) {
    if (sym < 0 || sym >= kNumSymmetries) throw invalid_input("symmetry index out of range");
    Perm q = p;
    if (sym & 1) q = q.reversed();
    if (sym & 2) q = q.complemented();
    if (sym & 4) q = q.inverted();
    return q;
}

const char* symmetry_name(int sym) {
    switch (sym) {
        case 0: return "identity";
        case 1: return "reverse";
        case 2: return "complement";
        case 3: return "reverse-complement";
        case 4: return "inverse";
        case 5: return "inverse-reverse";
        case 6: return "inverse-complement";
        case 7: return "inverse-reverse-complement";
        default: throw invalid_input("symmetry index out of range");
    }
}

Basis::Basis(std::vector<Perm> patterns) {
    if (patterns.empty()) throw invalid_input("basis must contain at least one pattern");
    for (const Perm& p : patterns)
        if (p.empty()) throw invalid_input("basis patterns must be nonempty");
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    // A pattern properly containing another member is redundant: the smaller
    // one is hit first in any occurrence of the bigger one.
    for (size_t i = 0; i < patterns.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < patterns.size() && !redundant; ++j)
            if (i != j && patterns[j].size() < patterns[i].size() &&
                patterns[i].contains(patterns[j]))
                redundant = true;
        (redundant ? stripped_ : pats_).push_back(patterns[i]);
    }
}

Basis Basis::parse(const std::string& text) {
    std::vector<Perm> pats;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // Trim surrounding spaces.
        size_t a = tok.find_first_not_of(' ');
        size_t b = tok.find_last_not_of(' ');
        if (a == std::string::npos) throw invalid_input("empty pattern in basis text: " + text);
        pats.push_back(Perm::parse(tok.substr(a, b - a + 1)));
    }
    return Basis(std::move(pats));
}

std::string Basis::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < pats_.size(); ++i) {
        if (i) os << ',';
        os << pats_[i].str();
    }
    return os.str();
}

bool Basis::operator<(const Basis& o) const { return pats_ < o.pats_; }

bool Basis::avoided_by(const Perm& p) const {
    for (const Perm& pat : pats_)
        if (p.contains(pat)) return false;
    return true;
}

bool Basis::contains_pattern(const Perm& p) const {
    return std::binary_search(pats_.begin(), pats_.end(), p);
}

Basis Basis::image(int sym) const {
    std::vector<Perm> pats;
    pats.reserve(pats_.size());
    for (const Perm& p : pats_) pats.push_back(apply_symmetry(sym, p));
    return Basis(std::move(pats));
}

std::vector<std::pair<Basis, int>> Basis::symmetry_orbit() const {
    std::vector<std::pair<Basis, int>> out;
    for (int s = 0; s < kNumSymmetries; ++s) {
        Basis b = image(s);
        bool fresh = true;
        for (const auto& [seen, _] : out)
            if (seen == b) {
                fresh = false;
                break;
            }
        if (fresh) out.emplace_back(std::move(b), s);
    }
    return out;
}

Basis Basis::canonical() const {
    Basis best = *this;
    for (int s = 1; s < kNumSymmetries; ++s) {
        Basis b = image(s);
        if (b < best) best = b;
    }
    return best;
}

std::ostream& operator<<(std::ostream& os, const Basis& b) { return os << b.str(); }

std::vector<std::vector<Perm>> enumerate_class_levels(const Basis& b, int n) {
    if (n < 0) throw invalid_input("enumerate_class: negative size");
    std::vector<std::vector<Perm>> levels;
    levels.reserve(static_cast<size_t>(n) + 1);
    levels.push_back({Perm()});
    for (int m = 1; m <= n; ++m) {
        std::vector<Perm> cur;
        for (const Perm& parent : levels.back()) {
            // Insert the new maximum m at every position.  Deleting the
            // maximum is the inverse map, so distinct (parent, slot) pairs
            // give distinct children and no deduplication is needed.  Any
            // new occurrence of a basis pattern must use the new maximum
            // for the pattern's largest letter, so only pinned occurrences
            // are checked.
            std::vector<int> w(parent.values());
            w.insert(w.begin(), m);
            for (int slot = 1; slot <= m; ++slot) {
                if (slot > 1) std::swap(w[static_cast<size_t>(slot - 2)], w[static_cast<size_t>(slot - 1)]);
                Perm child(w);
                bool ok = true;
                for (const Perm& pat : b.patterns())
                    if (child.contains_with_max_at(pat, slot)) {
                        ok = false;
                        break;
                    }
                if (ok) cur.push_back(std::move(child));
            }
        }
        std::sort(cur.begin(), cur.end());
        levels.push_back(std::move(cur));
    }
    return levels;
}

std::vector<Perm> enumerate_class(const Basis& b, int n) {
    return enumerate_class_levels(b, n).back();
}

} // namespace stairgrid
