#include "stairgrid/sampler.hpp"

#include <algorithm>
#include <utility>

#include "stairgrid/bijection.hpp"
#include "stairgrid/gf.hpp"
#include "stairgrid/staircase.hpp"

namespace stairgrid {

namespace {

const char* kSupportedRows[] = {"base_123", "base_132", "gf_upcore", "gf_downcore"};

TheoremMatch find_supported_match(const Basis& basis) {
    for (const TheoremMatch& m : detect(basis))
        for (const char* row : kSupportedRows)
            if (m.theorem == row) return m;
    throw invalid_input("sampling supports bases matching base_123, base_132, "
                        "gf_upcore or gf_downcore (under symmetry); Av(" +
                        basis.str() + ") matches none of them");
}

/// The symmetry undoing `sym`: checked on all of S_4, where the eight
/// symmetries act faithfully.
int inverse_symmetry(int sym) {
    std::vector<int> word{1, 2, 3, 4};
    std::vector<Perm> s4;
    do {
        s4.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    for (int t = 0; t < kNumSymmetries; ++t) {
        bool ok = true;
        for (const Perm& p : s4)
            if (apply_symmetry(t, apply_symmetry(sym, p)) != p) {
                ok = false;
                break;
            }
        if (ok) return t;
    }
    throw internal_consistency_error("no inverse found for symmetry index " +
                                     std::to_string(sym));
}

/// Uniform BigInt in [0, bound) by masked-word rejection; consumes whole
/// 64-bit words from the generator so draws are reproducible from the seed
/// alone (no distribution objects, whose output is implementation-defined).
BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
    if (bound <= 0)
        throw internal_consistency_error("uniform_below: empty range");
    if (bound == 1) return BigInt(0);
    const unsigned bits = boost::multiprecision::msb(BigInt(bound - 1)) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (words - 1); // in 1..64
    const std::uint64_t top_mask =
        top_bits == 64 ? ~0ull : ((std::uint64_t{1} << top_bits) - 1);
    for (;;) { // bound > 2^(bits-1), so each round accepts with p > 1/2
        BigInt v = 0;
        for (unsigned w = 0; w < words; ++w) {
            std::uint64_t word = rng();
            if (w == words - 1) word &= top_mask;
            v |= BigInt(word) << (64 * w);
        }
        if (v < bound) return v;
    }
}

std::string kv(int g, int k) {
    return "(g=" + std::to_string(g) + ", k=" + std::to_string(k) + ")";
}

} // namespace

Sampler::Sampler(const Basis& basis, int max_n)
    : Sampler(basis, max_n, find_supported_match(basis)) {}

Sampler::Sampler(const Basis& basis, int max_n, const TheoremMatch& match)
    : basis_(basis),
      image_(match.image),
      weight_basis_(bijection_weight_class(match.theorem, match.image, CellLabel::y)),
      theorem_(match.theorem),
      sym_(match.symmetry),
      inv_sym_(inverse_symmetry(match.symmetry)),
      max_n_(max_n) {
    if (max_n < 0) throw invalid_input("sampler: max_n must be >= 0");
    const BijectionScheme& sch = bijection_scheme(theorem_);
    kind_ = sch.kind;
    rows_ = sch.rows;
    cols_ = sch.cols;
    self_recursive_ = (weight_basis_ == image_);

    // --- independent-set counts m_[g][k], two independent routes ---------
    // Route one: the enumeration formula.  [x^g y^k] is recovered by
    // evaluating the y slot at the integers 0..2*max_n-1 and interpolating:
    // for fixed g the evaluations are a polynomial in y of degree at most
    // 2g-1 (the largest independent set of either core on B_g).
    m_.assign(static_cast<size_t>(max_n_) + 1, {});
    m_[0] = {BigInt(1)};
    if (max_n_ >= 1) {
        const int nodes = 2 * max_n_;
        std::vector<Series> evals;
        evals.reserve(static_cast<size_t>(nodes));
        for (int t = 0; t < nodes; ++t)
            evals.push_back(eval_U(Series::constant(BigRat(t), max_n_), max_n_));
        for (int g = 1; g <= max_n_; ++g) {
            std::vector<BigRat> vals(static_cast<size_t>(nodes));
            for (int t = 0; t < nodes; ++t)
                vals[static_cast<size_t>(t)] = evals[static_cast<size_t>(t)].coeff(g);
            const std::vector<BigRat> poly = interpolate_on_integer_nodes(vals);
            auto& row = m_[static_cast<size_t>(g)];
            row.assign(static_cast<size_t>(2 * g), BigInt(0));
            for (int k = 0; k < nodes; ++k) {
                const BigRat& c = poly[static_cast<size_t>(k)];
                if (k >= 2 * g) {
                    if (c != 0)
                        throw internal_consistency_error(
                            "independent-set polynomial for B_" + std::to_string(g) +
                            " has degree beyond 2g-1");
                    continue;
                }
                if (!is_integer(c) || c < 0)
                    throw internal_consistency_error(
                        "independent-set count " + kv(g, k) + " is not a natural number");
                row[static_cast<size_t>(k)] = rat_numerator(c);
            }
        }
    }
    // Route two: count the actual graph by DFS.  Capped at g <= 8 (the set
    // counts grow tenfold per grid size); above the cap the formula route
    // stands on the g <= 8 agreement plus its own degree/integrality checks.
    for (int g = 1; g <= std::min(max_n_, 8); ++g) {
        const std::vector<long long> dfs =
            CoreGraph::build(kind_, g).independent_set_counts();
        for (int k = 0; k < 2 * g; ++k) {
            const long long direct =
                k < static_cast<int>(dfs.size()) ? dfs[static_cast<size_t>(k)] : 0;
            if (BigInt(direct) != m_[static_cast<size_t>(g)][static_cast<size_t>(k)])
                throw internal_consistency_error(
                    "independent-set count mismatch at " + kv(g, k) + ": formula " +
                    m_[static_cast<size_t>(g)][static_cast<size_t>(k)].str() +
                    ", graph DFS " + std::to_string(direct));
        }
    }

    // --- weight counts, weighted compositions, class counts --------------
    // comp_[r][k] = sum over compositions of r into k positive parts of the
    // product of per-part weight counts; filled progressively so the
    // self-recursive case (weights drawn from the class itself) can feed
    // counts_ back in as weight counts for strictly smaller sizes.
    const int kmax = std::max(0, 2 * max_n_ - 1);
    counts_.assign(static_cast<size_t>(max_n_) + 1, BigInt(0));
    counts_[0] = 1;
    weight_counts_.assign(static_cast<size_t>(std::max(1, max_n_)), BigInt(0));
    weight_counts_[0] = 1; // never used: cell weights are nonempty
    comp_.assign(static_cast<size_t>(std::max(1, max_n_)),
                 std::vector<BigInt>(static_cast<size_t>(kmax) + 1, BigInt(0)));
    comp_[0][0] = 1;

    std::vector<std::vector<Perm>> levels;
    if (!self_recursive_ && max_n_ >= 1)
        levels = enumerate_class_levels(weight_basis_, max_n_ - 1);

    for (int n = 1; n <= max_n_; ++n) {
        BigInt c = 0;
        for (int g = 1; g <= n; ++g) {
            const auto& mg = m_[static_cast<size_t>(g)];
            const auto& cr = comp_[static_cast<size_t>(n - g)];
            const int ktop = std::min<int>(static_cast<int>(mg.size()), kmax + 1);
            for (int k = 0; k < ktop; ++k)
                if (mg[static_cast<size_t>(k)] != 0 && cr[static_cast<size_t>(k)] != 0)
                    c += mg[static_cast<size_t>(k)] * cr[static_cast<size_t>(k)];
        }
        counts_[static_cast<size_t>(n)] = c;
        if (n <= max_n_ - 1) {
            weight_counts_[static_cast<size_t>(n)] =
                self_recursive_ ? c : BigInt(levels[static_cast<size_t>(n)].size());
            auto& row = comp_[static_cast<size_t>(n)];
            for (int k = 1; k <= std::min(n, kmax); ++k) {
                BigInt s = 0;
                for (int j = 1; j <= n; ++j) {
                    const BigInt& rest =
                        comp_[static_cast<size_t>(n - j)][static_cast<size_t>(k - 1)];
                    if (rest != 0 && weight_counts_[static_cast<size_t>(j)] != 0)
                        s += weight_counts_[static_cast<size_t>(j)] * rest;
                }
                row[static_cast<size_t>(k)] = s;
            }
        }
    }

    if (!self_recursive_)
        for (size_t j = 0; j < levels.size(); ++j)
            weight_lists_.emplace(static_cast<int>(j),
                                  std::move(levels[j])); // counts already taken

    // --- the decomposition must reproduce the class counts ---------------
    ClassGfOptions opts;
    opts.oracle_ceiling = std::max(opts.oracle_ceiling, max_n_);
    const std::vector<BigInt> expect =
        class_gf(image_, max_n_, opts).series.integer_coeffs();
    for (int n = 0; n <= max_n_; ++n)
        if (counts_[static_cast<size_t>(n)] != expect[static_cast<size_t>(n)])
            throw internal_consistency_error(
                "decomposition count c_" + std::to_string(n) + " = " +
                counts_[static_cast<size_t>(n)].str() + " but the class gf has " +
                expect[static_cast<size_t>(n)].str());
}

const char* Sampler::symmetry() const { return symmetry_name(sym_); }

const BigInt& Sampler::count(int n) const {
    if (n < 0 || n > max_n_)
        throw invalid_input("count: size " + std::to_string(n) +
                            " outside the built range 0.." + std::to_string(max_n_));
    return counts_[static_cast<size_t>(n)];
}

BigInt Sampler::set_count(int g, int k) const {
    if (g < 0 || g > max_n_)
        throw invalid_input("set_count: grid size " + std::to_string(g) +
                            " outside the built range 0.." + std::to_string(max_n_));
    const auto& row = m_[static_cast<size_t>(g)];
    if (k < 0 || k >= static_cast<int>(row.size())) return BigInt(0);
    return row[static_cast<size_t>(k)];
}

const std::vector<std::vector<Cell>>& Sampler::set_list(int g, int k) const {
    const std::pair<int, int> key{g, k};
    {
        std::lock_guard<std::mutex> lock(mu_);
        const auto it = set_lists_.find(key);
        if (it != set_lists_.end()) return it->second;
    }
    std::vector<std::vector<Cell>> lists;
    CoreGraph::build(kind_, g).for_each_independent_set(
        k, [&](const std::vector<Cell>& cells) {
            if (static_cast<int>(cells.size()) == k) lists.push_back(cells);
        });
    if (BigInt(lists.size()) != set_count(g, k))
        throw internal_consistency_error("independent-set list at " + kv(g, k) +
                                         " disagrees with the count table");
    std::lock_guard<std::mutex> lock(mu_);
    return set_lists_.emplace(key, std::move(lists)).first->second;
}

const std::vector<Perm>& Sampler::weight_list(int j) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        const auto it = weight_lists_.find(j);
        if (it != weight_lists_.end()) return it->second;
    }
    std::vector<Perm> members = enumerate_class(weight_basis_, j);
    if (j <= max_n_ - 1 && BigInt(members.size()) != weight_counts_[static_cast<size_t>(j)])
        throw internal_consistency_error("weight list at size " + std::to_string(j) +
                                         " disagrees with the count table");
    std::lock_guard<std::mutex> lock(mu_);
    return weight_lists_.emplace(j, std::move(members)).first->second;
}

Perm Sampler::sample(int n, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    return sample_with_rng(n, rng);
}

Perm Sampler::sample_with_rng(int n, std::mt19937_64& rng) const {
    if (n < 0 || n > max_n_)
        throw invalid_input("sample: size " + std::to_string(n) +
                            " outside the built range 0.." + std::to_string(max_n_));
    return apply_symmetry(inv_sym_, sample_image(n, rng));
}

Perm Sampler::sample_image(int n, std::mt19937_64& rng) const {
    if (n == 0) return Perm();
    BigInt target = uniform_below(rng, counts_[static_cast<size_t>(n)]);

    // Locate the (grid size, set size) block this index falls in.
    int g = 0, k = -1;
    for (g = 1; g <= n && k < 0; ++g) {
        const auto& mg = m_[static_cast<size_t>(g)];
        const auto& cr = comp_[static_cast<size_t>(n - g)];
        for (int kk = 0; kk < static_cast<int>(mg.size()); ++kk) {
            if (mg[static_cast<size_t>(kk)] == 0 || cr[static_cast<size_t>(kk)] == 0)
                continue;
            const BigInt block = mg[static_cast<size_t>(kk)] * cr[static_cast<size_t>(kk)];
            if (target < block) {
                k = kk;
                break;
            }
            target -= block;
        }
        if (k >= 0) break;
    }
    if (k < 0) throw internal_consistency_error("sample index beyond all blocks");

    // Inside the block, the index factors as set choice x composition
    // choice (the composition table still carries the per-part weight
    // multiplicities; their quotients are discarded and the weights drawn
    // fresh below — both factors of a uniform index are uniform).
    int r = n - g;
    const BigInt& comp_rk = comp_[static_cast<size_t>(r)][static_cast<size_t>(k)];
    const BigInt set_idx = target / comp_rk;
    BigInt rem = target % comp_rk;

    const std::vector<Cell>& cells =
        set_list(g, k)[set_idx.convert_to<std::size_t>()];

    std::vector<int> parts(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        const int remaining = k - 1 - i; // parts still to choose after this one
        bool chosen = false;
        for (int j = 1; j <= r - remaining && !chosen; ++j) {
            const BigInt& wj = weight_counts_[static_cast<size_t>(j)];
            const BigInt& rest =
                comp_[static_cast<size_t>(r - j)][static_cast<size_t>(remaining)];
            if (wj == 0 || rest == 0) continue;
            const BigInt block = wj * rest;
            if (rem < block) {
                parts[static_cast<size_t>(i)] = j;
                rem %= rest;
                r -= j;
                chosen = true;
            } else {
                rem -= block;
            }
        }
        if (!chosen)
            throw internal_consistency_error("composition unranking ran off its row");
    }
    if (r != 0 || rem != 0)
        throw internal_consistency_error("composition unranking left a remainder");

    std::map<Cell, Perm> weighted;
    for (int i = 0; i < k; ++i) {
        const int j = parts[static_cast<size_t>(i)];
        Perm w = self_recursive_
                     ? sample_image(j, rng)
                     : weight_list(j)[uniform_below(
                                          rng, weight_counts_[static_cast<size_t>(j)])
                                          .convert_to<std::size_t>()];
        weighted.emplace(cells[static_cast<size_t>(i)], std::move(w));
    }
    return grid_realize(StaircaseEncoding(g, std::move(weighted)), rows_, cols_);
}

} // namespace stairgrid
