#include <algorithm>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flagbott/bott.hpp"
#include "flagbott/cohomology.hpp"
#include "flagbott/json_io.hpp"
#include "flagbott/lr.hpp"
#include "flagbott/oracle.hpp"
#include "flagbott/partition.hpp"
#include "flagbott/vanishing.hpp"

namespace {

using namespace flagbott;

void emit(const Json& payload) { std::cout << payload.dump() << "\n"; }

Json with_schema() {
    Json j;
    j["schema"] = kSchemaTag;
    return j;
}

std::string bracket(std::span<const int> parts) {
    std::size_t n = parts.size();
    while (n > 0 && parts[n - 1] == 0) --n;
    return "[" + format_int_list(parts.subspan(0, n)) + "]";
}

void print_decomposition(const SchurDecomposition& dec) {
    if (dec.empty()) {
        std::cout << "  (zero)\n";
        return;
    }
    for (const auto& [parts, mult] : dec.terms())
        std::cout << "  " << bracket(parts) << "  x" << mult << "\n";
}

void print_table(const CohomologyTable& table, bool dims_only) {
    if (table.entries().empty()) {
        std::cout << "  (all groups vanish)\n";
        return;
    }
    for (const auto& [bidegree, dec] : table.entries()) {
        BigInt dim = 0;
        for (const auto& [psi, mult] : dec.terms()) dim += mult * dim_schur(psi, table.d());
        std::cout << "  h^{" << bidegree.p << "," << bidegree.q << "} = " << dim;
        if (!dims_only) {
            std::cout << "   ";
            bool first = true;
            for (const auto& [psi, mult] : dec.terms()) {
                if (!first) std::cout << " + ";
                first = false;
                if (mult != 1) std::cout << mult << "*";
                std::cout << "S" << bracket(psi);
            }
        }
        std::cout << "\n";
    }
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

struct LrOptions {
    int r = 1;
    std::string u, v;
    bool json = false;
};

int run_lr(const LrOptions& o) {
    GeneralizedPartition u = parse_generalized(o.u, static_cast<std::size_t>(o.r));
    Partition v = parse_partition(o.v);
    SchurDecomposition dec = lr_product(u, v);
    if (o.json) {
        Json j = with_schema();
        j["terms"] = terms_json(dec);
        j["r"] = o.r;
        emit(j);
    } else {
        std::cout << "S" << bracket(u.parts()) << " (x) S" << bracket(v.parts()) << " at r=" << o.r
                  << ":\n";
        print_decomposition(dec);
    }
    return 0;
}

struct BottOptions {
    int d = 1;
    std::string a;
    bool json = false;
};

int run_bott(const BottOptions& o) {
    std::vector<int> a = o.a.empty() ? std::vector<int>{} : parse_int_list(o.a);
    if (static_cast<int>(a.size()) != o.d)
        throw std::invalid_argument("dimension-mismatch: need exactly d entries");
    auto res = bott(a);
    if (o.json) {
        Json j = with_schema();
        j["admissible"] = res.has_value();
        if (res) {
            j["i"] = res->degree;
            j["psi"] = parts_json(res->psi);
        }
        emit(j);
    } else if (res) {
        std::cout << "cohomology in degree " << res->degree << ", weight " << bracket(res->psi)
                  << "\n";
    } else {
        std::cout << "not admissible: every group vanishes\n";
    }
    return 0;
}

struct SplitOptions {
    std::string w, u;
    int d = 1;
    bool json = false;
};

int run_split(const SplitOptions& o) {
    GeneralizedPartition w(parse_int_list(o.w));
    Partition u = parse_partition(o.u);
    auto counts = grassmann_bott_by_counts(w, u, o.d);

    std::optional<SplitDiagram> split;
    bool skew = true;
    try {
        split = split_diagram(w, u);
    } catch (const std::invalid_argument&) {
        skew = false;
    }

    Partition tu = transpose(u);
    GeneralizedPartition chi_u =
        static_cast<int>(u.length()) <= static_cast<int>(w.length())
            ? chi_reversal(GeneralizedPartition::extend(u, w.length()))
            : GeneralizedPartition{};

    if (o.json) {
        Json j = with_schema();
        j["admissible"] = counts.has_value();
        j["u_transpose"] = parts_json(tu.parts());
        j["chi_u"] = Json(chi_u.parts());
        if (counts) {
            j["alpha"] = Json(counts->alpha);
            j["beta"] = Json(counts->beta);
            j["gamma_rows"] = Json(counts->gamma_rows);
            j["gamma_cols"] = Json(counts->gamma_cols);
            j["s_plus"] = parts_json(counts->s_plus);
            j["s_minus"] = parts_json(counts->s_minus);
            j["i"] = counts->degree;
            j["psi"] = parts_json(counts->psi);
        }
        if (skew && split) {
            j["cells_plus"] = static_cast<long long>(split->sigma_plus.size());
            j["cells_minus"] = static_cast<long long>(split->sigma_minus.size());
        }
        emit(j);
    } else if (!counts) {
        std::cout << "not admissible: every group vanishes\n";
    } else {
        std::cout << "u~      = " << bracket(tu.parts()) << "\n";
        std::cout << "chi(u)  = [" << format_int_list(chi_u.parts()) << "]\n";
        std::cout << "alpha   = [" << format_int_list(counts->alpha) << "]\n";
        std::cout << "beta    = [" << format_int_list(counts->beta) << "]\n";
        std::cout << "[gamma] = [" << format_int_list(counts->gamma_rows) << "]\n";
        std::cout << "<gamma> = [" << format_int_list(counts->gamma_cols) << "]\n";
        std::cout << "s_plus  = " << bracket(counts->s_plus) << "\n";
        std::cout << "s_minus = " << bracket(counts->s_minus) << "\n";
        std::cout << "i       = " << counts->degree << "\n";
        std::cout << "psi     = " << bracket(counts->psi) << "\n";
        if (skew && split)
            std::cout << "cells   = " << split->sigma_plus.size() << " plus, "
                      << split->sigma_minus.size() << " minus\n";
    }
    return 0;
}

struct GrassOptions {
    int r = 1, d = 1;
    std::string v;
    bool json = false, dims_only = false;
};

int run_grass(const GrassOptions& o) {
    GeneralizedPartition v = parse_generalized(o.v, static_cast<std::size_t>(o.r));
    CohomologyTable table = grassmann_cohomology(o.r, o.d, v);
    if (o.json) {
        Json j = with_schema();
        j["space"] = space_json(table.space());
        j["v"] = parts_json(v.parts());
        j["entries"] = table_entries_json(table, o.dims_only);
        emit(j);
    } else {
        std::cout << "Dolbeault table of S" << bracket(v.parts()) << "(Q) on G_" << o.r << "(C^"
                  << o.d << "):\n";
        print_table(table, o.dims_only);
    }
    return 0;
}

struct FlagOptions {
    int d = 1, P = 0;
    std::string s, a;
    bool json = false, dims_only = false;
};

int run_flag(const FlagOptions& o) {
    FlagShape flag(o.d, parse_int_list(o.s));
    std::vector<int> a = parse_int_list(o.a);
    CohomologyTable slice = flag_cohomology(flag, a, o.P);
    if (o.json) {
        Json j = with_schema();
        j["space"] = space_json(slice.space());
        j["a"] = Json(a);
        j["P"] = o.P;
        if (flag.levels() >= 2) j["differentials_assumed_degenerate"] = true;
        j["entries"] = table_entries_json(slice, o.dims_only);
        emit(j);
    } else {
        std::cout << "H^{" << o.P << ",q} on the flag of steps [" << format_int_list(flag.steps)
                  << "] in C^" << o.d << " twisted by [" << format_int_list(a) << "]:\n";
        print_table(slice, o.dims_only);
    }
    return 0;
}

struct HodgeOptions {
    int r = 1, d = 2;
    bool json = false;
};

int run_hodge(const HodgeOptions& o) {
    CohomologyTable table = grassmann_cohomology(o.r, o.d, Partition{});
    if (o.json) {
        Json j = with_schema();
        j["space"] = space_json(table.space());
        j["entries"] = table_entries_json(table, true);
        emit(j);
    } else {
        std::cout << "Hodge numbers of G_" << o.r << "(C^" << o.d << "):\n";
        print_table(table, true);
    }
    return 0;
}

Bundle parse_bundle(const std::string& text) {
    std::vector<std::string> segments;
    std::size_t pos = 0;
    while (true) {
        std::size_t colon = text.find(':', pos);
        if (colon == std::string::npos) {
            segments.push_back(text.substr(pos));
            break;
        }
        segments.push_back(text.substr(pos, colon - pos));
        pos = colon + 1;
    }
    const std::string& kind = segments[0];
    auto arg = [&](std::size_t i) -> std::string {
        return i < segments.size() ? segments[i] : std::string{};
    };
    auto need_int = [&](std::size_t i) {
        std::vector<int> v = parse_int_list(arg(i));
        if (v.size() != 1) throw std::invalid_argument("bad-bundle: a single integer is required");
        return v[0];
    };

    if (kind == "schur") return SchurWedge{parse_partition(arg(1))};
    if (kind == "wedge") return WedgePower{need_int(1)};
    if (kind == "symdet") return SymDet{need_int(1)};
    if (kind == "schurdet") return SchurDet{parse_partition(arg(1)), need_int(2)};
    if (kind == "hook") return HookBundle{need_int(1), need_int(2)};
    if (kind == "mix") {
        TensorMix mix;
        if (!arg(1).empty()) mix.sym = parse_int_list(arg(1));
        if (!arg(2).empty()) mix.wedge = parse_int_list(arg(2));
        return mix;
    }
    throw std::invalid_argument("bad-bundle: unknown kind '" + kind + "'");
}

struct VanishOptions {
    int n = 1, d = 1, p = 0, q = 0;
    std::string bundle;
    bool json = false, audit = false;
};

int run_vanish(const VanishOptions& o) {
    VanishingQuery query{o.n, o.d, o.p, o.q, parse_bundle(o.bundle)};
    Certificate cert = evaluate_query(query);

    Json audit_json;
    bool have_audit = false;
    if (o.audit) {
        const auto* mix = std::get_if<TensorMix>(&query.bundle);
        if (!mix)
            throw std::invalid_argument("bad-bundle: the optimality audit applies to mix bundles");
        OptimalityAudit audit = audit_mixed_optimality(*mix, o.d);
        audit_json["lambda"] = parts_json(audit.lambda.parts());
        audit_json["lambda_threshold"] = audit.lambda_threshold;
        audit_json["lambda_present"] = audit.lambda_present;
        audit_json["optimal"] = audit.optimal;
        Json list = Json::array();
        for (const auto& [mu, t] : audit.summands) {
            Json item;
            item["partition"] = parts_json(mu);
            item["threshold"] = t;
            list.push_back(std::move(item));
        }
        audit_json["summands"] = std::move(list);
        have_audit = true;
    }

    if (o.json) {
        Json j = with_schema();
        Json body = certificate_json(cert, o.bundle);
        for (auto& [key, value] : body.items()) j[key] = std::move(value);
        if (have_audit) j["audit"] = std::move(audit_json);
        emit(j);
    } else {
        for (const Verdict& v : cert.verdicts) {
            std::cout << "  [" << (v.satisfied ? "x" : " ") << "] " << v.theorem << ": " << v.condition
                      << " (requires ample: " << v.ample_hypothesis << ")";
            if (!v.detail.empty()) std::cout << " -- " << v.detail;
            std::cout << "\n";
        }
        std::cout << (cert.certified() ? "certified: vanishing guaranteed\n"
                                       : "not certified by any listed statement\n");
        if (have_audit)
            std::cout << "audit: lambda " << (audit_json["optimal"].get<bool>() ? "carries" : "MISSES")
                      << " the governing threshold " << audit_json["lambda_threshold"] << "\n";
    }
    return cert.certified() ? 0 : 3;
}

struct OracleOptions {
    int k = 1;
    std::string u, v;
    bool json = false, slow = false;
};

int run_oracle_product(const OracleOptions& o) {
    if (!o.slow)
        throw std::invalid_argument("slow-required: pass --slow to run the exponential oracle");
    Partition u = parse_partition(o.u);
    Partition v = parse_partition(o.v);
    SchurDecomposition dec =
        expand_in_schur_basis(schur_polynomial(u, o.k) * schur_polynomial(v, o.k), o.k);
    if (o.json) {
        Json j = with_schema();
        j["terms"] = terms_json(dec);
        j["r"] = o.k;
        emit(j);
    } else {
        std::cout << "oracle product in " << o.k << " variables:\n";
        print_decomposition(dec);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// selftest: small-scale cross-module oracles
// ---------------------------------------------------------------------------

bool selftest_lr_vs_oracle() {
    const int k = 3;
    std::vector<Partition> all;
    for (int w = 0; w <= 6; ++w)
        for (Partition& u : partitions_of(w, k, 6)) all.push_back(std::move(u));
    for (const Partition& u : all)
        for (const Partition& v : all) {
            if (u.weight() + v.weight() > 6) continue;
            SchurDecomposition fast = lr_product(GeneralizedPartition::extend(u, k), v);
            SchurDecomposition slow =
                expand_in_schur_basis(schur_polynomial(u, k) * schur_polynomial(v, k), k);
            if (!(fast == slow)) return false;
        }
    return true;
}

bool selftest_counts_vs_sort(unsigned seed) {
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 2000; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 5);
        const int d = r + 1 + static_cast<int>(rng() % (10 - r));
        std::vector<int> w(static_cast<std::size_t>(r));
        for (int& x : w) x = static_cast<int>(rng() % 13) - 6;
        std::sort(w.rbegin(), w.rend());
        const int cap = std::min(6, d - r);
        std::vector<int> up;
        int prev = cap;
        const int len = static_cast<int>(rng() % 7);
        for (int i = 0; i < len && prev > 0; ++i) {
            prev = static_cast<int>(rng() % static_cast<unsigned>(prev + 1));
            if (prev == 0) break;
            up.push_back(prev);
        }
        Partition u(up);
        GeneralizedPartition wg(w);
        auto by_counts = grassmann_bott_by_counts(wg, u, d);
        auto by_sort = grassmann_bott(
            wg, GeneralizedPartition::extend(transpose(u), static_cast<std::size_t>(d - r)));
        if (by_counts.has_value() != by_sort.has_value()) return false;
        if (by_counts && (by_counts->degree != by_sort->degree || by_counts->psi != by_sort->psi))
            return false;
    }
    return true;
}

bool selftest_eight_equivalence() {
    LRScratch scratch;
    for (const SkewShape& shape : reduced_skew_shapes(5)) {
        ShapeIndex idx = make_shape_index(shape);
        const int n = static_cast<int>(idx.cells.size());
        for (const Partition& v : partitions_of(n, n, n)) {
            std::vector<int> slot(static_cast<std::size_t>(n));
            std::vector<int> c1(static_cast<std::size_t>(n)), c2(static_cast<std::size_t>(n));
            std::iota(slot.begin(), slot.end(), 0);
            std::vector<std::pair<int, int>> ycells;
            for (std::size_t row = 0; row < v.length(); ++row)
                for (int c = 1; c <= v.part(row); ++c)
                    ycells.push_back({static_cast<int>(row) + 1, c});
            do {
                for (int t = 0; t < n; ++t) {
                    c1[static_cast<std::size_t>(t)] = ycells[static_cast<std::size_t>(slot[static_cast<std::size_t>(t)])].first;
                    c2[static_cast<std::size_t>(t)] = ycells[static_cast<std::size_t>(slot[static_cast<std::size_t>(t)])].second;
                }
                bool classical = check_classical(idx, c1, v.parts(), scratch) &&
                                 condition_young(idx, c1, c2, v.parts(), scratch);
                bool eight = check_eight(idx, c1, c2, v.parts(), scratch);
                if (classical != eight) return false;
            } while (std::next_permutation(slot.begin(), slot.end()));
        }
    }
    return true;
}

bool selftest_decreasing_bott() {
    for (int d = 1; d <= 4; ++d) {
        std::vector<int> a(static_cast<std::size_t>(d));
        auto rec = [&](auto&& self, int i, int hi) -> bool {
            if (i == d) {
                auto res = bott(a);
                return res && res->degree == 0 && res->psi == a;
            }
            for (int x = hi; x >= -3; --x) {
                a[static_cast<std::size_t>(i)] = x;
                if (!self(self, i + 1, x)) return false;
            }
            return true;
        };
        if (!rec(rec, 0, 3)) return false;
    }
    return true;
}

struct SelftestOptions {
    unsigned seed = 12345;
};

int run_selftest(const SelftestOptions& o) {
    struct Check {
        const char* name;
        bool ok;
    };
    std::vector<Check> checks;
    checks.push_back({"products match the polynomial oracle", selftest_lr_vs_oracle()});
    checks.push_back({"count-based evaluation matches sorting", selftest_counts_vs_sort(o.seed)});
    checks.push_back({"eight conditions match the classical rules", selftest_eight_equivalence()});
    checks.push_back({"decreasing weights land in degree zero", selftest_decreasing_bott()});
    int failures = 0;
    for (const Check& c : checks) {
        std::cout << (c.ok ? "ok   " : "FAIL ") << c.name << "\n";
        if (!c.ok) ++failures;
    }
    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Littlewood-Richardson, Bott cohomology and vanishing certificates"};
    app.require_subcommand(1);
    int exit_code = 0;

    LrOptions lr_opts;
    auto* lr_cmd = app.add_subcommand("lr", "tensor-product decomposition of Schur bundles");
    lr_cmd->add_option("--r", lr_opts.r, "declared length")->required()->check(CLI::PositiveNumber);
    lr_cmd->add_option("--u", lr_opts.u, "first factor, comma separated");
    lr_cmd->add_option("--v", lr_opts.v, "second factor, a partition");
    lr_cmd->add_flag("--json", lr_opts.json, "machine readable output");
    lr_cmd->callback([&] { exit_code = run_lr(lr_opts); });

    BottOptions bott_opts;
    auto* bott_cmd = app.add_subcommand("bott", "complete-flag line bundle cohomology");
    bott_cmd->add_option("--d", bott_opts.d, "dimension")->required()->check(CLI::PositiveNumber);
    bott_cmd->add_option("--a", bott_opts.a, "weight, d comma separated entries")->required();
    bott_cmd->add_flag("--json", bott_opts.json, "machine readable output");
    bott_cmd->callback([&] { exit_code = run_bott(bott_opts); });

    SplitOptions split_opts;
    auto* split_cmd = app.add_subcommand("split", "count-based Grassmannian evaluation with the sign splitting");
    split_cmd->add_option("--w", split_opts.w, "quotient-side weight")->required();
    split_cmd->add_option("--u", split_opts.u, "subbundle-side partition")->required();
    split_cmd->add_option("--d", split_opts.d, "ambient dimension")->required()->check(CLI::PositiveNumber);
    split_cmd->add_flag("--json", split_opts.json, "machine readable output");
    split_cmd->callback([&] { exit_code = run_split(split_opts); });

    GrassOptions grass_opts;
    auto* grass_cmd = app.add_subcommand("grass", "Dolbeault table of a Schur bundle on a Grassmannian");
    grass_cmd->add_option("--r", grass_opts.r, "quotient rank")->required()->check(CLI::PositiveNumber);
    grass_cmd->add_option("--d", grass_opts.d, "ambient dimension")->required()->check(CLI::PositiveNumber);
    grass_cmd->add_option("--v", grass_opts.v, "bundle weight, up to r parts");
    grass_cmd->add_flag("--json", grass_opts.json, "machine readable output");
    grass_cmd->add_flag("--dims-only", grass_opts.dims_only, "omit the term lists");
    grass_cmd->callback([&] { exit_code = run_grass(grass_opts); });

    FlagOptions flag_opts;
    auto* flag_cmd = app.add_subcommand("flag", "one form-degree slice over a partial flag variety");
    flag_cmd->add_option("--d", flag_opts.d, "ambient dimension")->required()->check(CLI::PositiveNumber);
    flag_cmd->add_option("--s", flag_opts.s, "flag steps, strictly increasing")->required();
    flag_cmd->add_option("--a", flag_opts.a, "exponents, strictly decreasing")->required();
    flag_cmd->add_option("--P", flag_opts.P, "form degree")->required();
    flag_cmd->add_flag("--json", flag_opts.json, "machine readable output");
    flag_cmd->add_flag("--dims-only", flag_opts.dims_only, "omit the term lists");
    flag_cmd->callback([&] { exit_code = run_flag(flag_opts); });

    HodgeOptions hodge_opts;
    auto* hodge_cmd = app.add_subcommand("hodge", "Hodge numbers of a Grassmannian");
    hodge_cmd->add_option("--r", hodge_opts.r, "quotient rank")->required()->check(CLI::PositiveNumber);
    hodge_cmd->add_option("--d", hodge_opts.d, "ambient dimension")->required()->check(CLI::PositiveNumber);
    hodge_cmd->add_flag("--json", hodge_opts.json, "machine readable output");
    hodge_cmd->callback([&] { exit_code = run_hodge(hodge_opts); });

    VanishOptions vanish_opts;
    auto* vanish_cmd = app.add_subcommand("vanish", "vanishing certificate for an ample Schur bundle");
    vanish_cmd->add_option("--n", vanish_opts.n, "base dimension")->required()->check(CLI::PositiveNumber);
    vanish_cmd->add_option("--d", vanish_opts.d, "bundle rank")->required()->check(CLI::PositiveNumber);
    vanish_cmd->add_option("--p", vanish_opts.p, "form degree")->required();
    vanish_cmd->add_option("--q", vanish_opts.q, "cohomology degree")->required();
    vanish_cmd->add_option("--bundle", vanish_opts.bundle,
                           "schur:R | wedge:r | symdet:r | schurdet:R:m | hook:alpha:k | mix:K:S")
        ->required();
    vanish_cmd->add_flag("--json", vanish_opts.json, "machine readable output");
    vanish_cmd->add_flag("--audit-optimal", vanish_opts.audit,
                         "enumerate mix summands and audit the governing threshold");
    vanish_cmd->callback([&] { exit_code = run_vanish(vanish_opts); });

    OracleOptions oracle_opts;
    auto* oracle_cmd = app.add_subcommand("oracle-product", "tableau-polynomial product, exponential");
    oracle_cmd->add_option("--k", oracle_opts.k, "number of variables")->required()->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--u", oracle_opts.u, "first partition");
    oracle_cmd->add_option("--v", oracle_opts.v, "second partition");
    oracle_cmd->add_flag("--json", oracle_opts.json, "machine readable output");
    oracle_cmd->add_flag("--slow", oracle_opts.slow, "acknowledge the exponential cost");
    oracle_cmd->callback([&] { exit_code = run_oracle_product(oracle_opts); });

    SelftestOptions selftest_opts;
    auto* selftest_cmd = app.add_subcommand("selftest", "small-scale cross-module consistency checks");
    selftest_cmd->add_option("--seed", selftest_opts.seed, "seed for the randomized checks");
    selftest_cmd->callback([&] { exit_code = run_selftest(selftest_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
