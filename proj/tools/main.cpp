// Command-line surface over the staircase-grid permutation-class library:
// theorem detection, class generating functions, brute-force counts,
// gf-vs-oracle verification, bijection checks, exact uniform sampling,
// Wilf-equivalence comparison and mesh-pattern containment.
//
// Exit codes: 0 success / equal / pass / true, 1 mismatch / fail / false,
// 2 malformed flags or inputs.

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stairgrid/bijection.hpp"
#include "stairgrid/classgf.hpp"
#include "stairgrid/mesh.hpp"
#include "stairgrid/perm.hpp"
#include "stairgrid/sampler.hpp"

namespace {

using nlohmann::ordered_json;
using namespace stairgrid;

std::string join_bigints(const std::vector<BigInt>& v, bool positive) {
    std::string out;
    for (size_t i = positive ? 1 : 0; i < v.size(); ++i) {
        if (!out.empty()) out += ',';
        out += v[i].str();
    }
    return out;
}

std::string p_set_str(const std::vector<Perm>& P) {
    if (P.empty()) return "∅";
    std::string out = "{";
    for (size_t i = 0; i < P.size(); ++i) {
        if (i) out += ',';
        out += P[i].str();
    }
    return out + "}";
}

std::string match_str(const TheoremMatch& m) {
    return m.theorem + " (symmetry: " + symmetry_name(m.symmetry) +
           ", P=" + p_set_str(m.P) + ")";
}

std::vector<BigInt> oracle_counts(const Basis& b, int max_size) {
    std::vector<BigInt> out;
    for (const auto& level : enumerate_class_levels(b, max_size))
        out.emplace_back(level.size());
    return out;
}

int run_detect(const Basis& basis, const ClassGfOptions& opts) {
    const std::vector<TheoremMatch> ms = detect(basis, opts);
    if (ms.empty()) {
        std::cout << "no theorem matches Av(" << basis.str() << ")\n";
        return 1;
    }
    for (const TheoremMatch& m : ms) std::cout << match_str(m) << "\n";
    return 0;
}

int run_gf(const Basis& basis, int terms, bool positive, bool as_json,
           const ClassGfOptions& opts) {
    const ClassGf r = class_gf(basis, terms, opts);
    const std::vector<BigInt> coeffs = r.series.integer_coeffs();
    if (as_json) {
        ordered_json j;
        j["basis"] = basis.str();
        j["order"] = terms;
        j["positive"] = positive;
        auto arr = ordered_json::array();
        for (size_t i = positive ? 1 : 0; i < coeffs.size(); ++i)
            arr.push_back(coeffs[i].str());
        j["coefficients"] = std::move(arr);
        j["oracle_backed"] = r.trace.oracle_backed;
        j["trace"] = ordered_json::parse(r.trace.json());
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << join_bigints(coeffs, positive) << "\n";
    std::cout << "route: " << r.trace.theorem;
    if (!r.trace.symmetry.empty())
        std::cout << " (symmetry: " << r.trace.symmetry << ")";
    std::cout << "\n";
    std::cout << "oracle_backed: " << (r.trace.oracle_backed ? "true" : "false")
              << "\n";
    return 0;
}

int run_count(const Basis& basis, int max_size, bool positive) {
    std::cout << join_bigints(oracle_counts(basis, max_size), positive) << "\n";
    return 0;
}

int run_verify(const Basis& basis, int max_size, const ClassGfOptions& opts) {
    const ClassGf r = class_gf(basis, max_size, opts);
    const std::vector<BigInt> gf = r.series.integer_coeffs();
    const std::vector<BigInt> oracle = oracle_counts(basis, max_size);
    std::cout << "gf:     " << join_bigints(gf, false) << "\n";
    std::cout << "oracle: " << join_bigints(oracle, false) << "\n";
    for (int n = 0; n <= max_size; ++n)
        if (gf[static_cast<size_t>(n)] != oracle[static_cast<size_t>(n)]) {
            std::cout << "mismatch at size " << n << ": gf "
                      << gf[static_cast<size_t>(n)] << ", oracle "
                      << oracle[static_cast<size_t>(n)] << "\n";
            return 1;
        }
    std::cout << "gf matches the brute-force counts up to size " << max_size
              << "\n";
    return 0;
}

int run_verify_bijection(const std::string& theorem, const Basis& basis,
                         int max_size) {
    const BijectionReport rep = verify_bijection(theorem, basis, max_size);
    std::cout << rep.summary() << "\n";
    return rep.pass ? 0 : 1;
}

int run_sample(const Basis& basis, int size, int count, std::uint64_t seed) {
    const Sampler sampler(basis, size);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        const Perm p = sampler.sample_with_rng(size, rng);
        if (!basis.avoided_by(p))
            throw internal_consistency_error("sampled " + p.str() +
                                             " is not in Av(" + basis.str() + ")");
        std::cout << p.str() << "\n";
    }
    return 0;
}

int run_wilf(const Basis& b1, const Basis& b2, int terms,
             const ClassGfOptions& opts) {
    const WilfReport r = wilf_check(b1, b2, terms, opts);
    std::cout << "Av(" << b1.str() << "): "
              << join_bigints(r.gf1.integer_coeffs(), false) << "\n";
    std::cout << "Av(" << b2.str() << "): "
              << join_bigints(r.gf2.integer_coeffs(), false) << "\n";
    std::cout << r.str() << "\n";
    return r.equal ? 0 : 1;
}

int run_mesh(const std::string& perm_text, const std::string& pattern_text,
             const std::string& shading_text) {
    const Perm sigma = Perm::parse(perm_text);
    const MeshPattern mp = MeshPattern::parse(Perm::parse(pattern_text), shading_text);
    const bool hit = contains_mesh(sigma, mp);
    std::cout << (hit ? "true" : "false") << "\n";
    return hit ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"staircase-grid permutation class toolkit"};
    app.require_subcommand(1);

    bool trust_mesh = false;
    app.add_flag("--trust-mesh-conditions", trust_mesh,
                 "treat the mesh side conditions of the rd_2134 / ru_2143 rows "
                 "as satisfied for every parameter pattern");

    std::string basis_text, basis1_text, basis2_text, theorem, perm_text,
        pattern_text, shading_text;
    int terms = 0, max_size = 0, size = 0, count = 1;
    std::uint64_t seed = 0;
    bool positive = false, as_json = false;

    CLI::App* detect_cmd = app.add_subcommand("detect", "list matching theorem rows");
    detect_cmd->add_option("--basis", basis_text, "comma-joined patterns")->required();

    CLI::App* gf_cmd = app.add_subcommand("gf", "class generating function");
    gf_cmd->add_option("--basis", basis_text, "comma-joined patterns")->required();
    gf_cmd->add_option("--terms", terms, "highest coefficient order")->required();
    gf_cmd->add_flag("--json", as_json, "machine-readable output with trace");
    gf_cmd->add_flag("--positive", positive, "start at c_1 instead of c_0");

    CLI::App* count_cmd = app.add_subcommand("count", "brute-force class counts");
    count_cmd->add_option("--basis", basis_text, "comma-joined patterns")->required();
    count_cmd->add_option("--max-size", max_size, "largest size to count")->required();
    count_cmd->add_flag("--positive", positive, "start at c_1 instead of c_0");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "compare the gf against brute force");
    verify_cmd->add_option("--basis", basis_text, "comma-joined patterns")->required();
    verify_cmd->add_option("--max-size", max_size, "largest size to compare")->required();

    CLI::App* vb_cmd = app.add_subcommand(
        "verify-bijection", "check a bijection theorem exhaustively");
    vb_cmd->add_option("--theorem", theorem, "bijection theorem id")->required();
    vb_cmd->add_option("--basis", basis_text, "comma-joined patterns")->required();
    vb_cmd->add_option("--max-size", max_size, "largest realized size")->required();

    CLI::App* sample_cmd = app.add_subcommand("sample", "uniform class members");
    sample_cmd->add_option("--basis", basis_text, "comma-joined patterns")->required();
    sample_cmd->add_option("--size", size, "size of each sample")->required();
    sample_cmd->add_option("--count", count, "number of samples");
    sample_cmd->add_option("--seed", seed, "RNG seed")->required();

    CLI::App* wilf_cmd = app.add_subcommand("wilf", "compare two class gfs");
    wilf_cmd->add_option("--basis1", basis1_text, "first basis")->required();
    wilf_cmd->add_option("--basis2", basis2_text, "second basis")->required();
    wilf_cmd->add_option("--terms", terms, "comparison order")->required();

    CLI::App* mesh_cmd = app.add_subcommand("mesh", "mesh-pattern containment");
    mesh_cmd->add_option("--perm", perm_text, "host permutation")->required();
    mesh_cmd->add_option("--pattern", pattern_text, "classical pattern")->required();
    mesh_cmd->add_option("--shading", shading_text, "shaded boxes \"x,y;x,y\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // 0 is --help; anything else is usage
    }

    ClassGfOptions opts;
    if (trust_mesh) {
        opts.rd_2134_mesh_ok = [](const Perm&) { return true; };
        opts.ru_2143_mesh_ok = [](const Perm&) { return true; };
    }

    try {
        if (*detect_cmd) return run_detect(Basis::parse(basis_text), opts);
        if (*gf_cmd)
            return run_gf(Basis::parse(basis_text), terms, positive, as_json, opts);
        if (*count_cmd)
            return run_count(Basis::parse(basis_text), max_size, positive);
        if (*verify_cmd) return run_verify(Basis::parse(basis_text), max_size, opts);
        if (*vb_cmd)
            return run_verify_bijection(theorem, Basis::parse(basis_text), max_size);
        if (*sample_cmd)
            return run_sample(Basis::parse(basis_text), size, count, seed);
        if (*wilf_cmd)
            return run_wilf(Basis::parse(basis1_text), Basis::parse(basis2_text),
                            terms, opts);
        if (*mesh_cmd) return run_mesh(perm_text, pattern_text, shading_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand selected\n";
    return 2;
}
