// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "flagbott/bott.hpp"
#include "flagbott/cohomology.hpp"
#include "flagbott/lr.hpp"
#include "flagbott/oracle.hpp"
#include "flagbott/parallel.hpp"
#include "flagbott/partition.hpp"
#include "flagbott/vanishing.hpp"

using namespace flagbott;

namespace {

std::vector<Partition> partitions_up_to(int max_weight, int max_len) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w)
        for (Partition& u : partitions_of(w, max_len, max_weight)) out.push_back(std::move(u));
    return out;
}

long long binomial_ref(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long num = 1;
    for (int i = 1; i <= k; ++i) num = num * (n - k + i) / i;
    return num;
}

// ---------------------------------------------------------------------------
// 1. product decompositions against the tableau-polynomial oracle
// ---------------------------------------------------------------------------
bool criterion_lr_oracle(std::string& note) {
    const int k = 4;
    std::vector<Partition> all = partitions_up_to(8, 4);
    std::vector<std::pair<const Partition*, const Partition*>> pairs;
    for (const Partition& u : all)
        for (const Partition& v : all)
            if (u.weight() + v.weight() <= 8) pairs.push_back({&u, &v});

    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic) num_threads(max_threads())
    for (long long i = 0; i < static_cast<long long>(pairs.size()); ++i) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        const auto& [u, v] = pairs[static_cast<std::size_t>(i)];
        SchurDecomposition fast = lr_product_serial(GeneralizedPartition::extend(*u, k), *v);
        SchurDecomposition slow =
            expand_in_schur_basis(schur_polynomial(*u, k) * schur_polynomial(*v, k), k);
        if (!(fast == slow)) ok.store(false, std::memory_order_relaxed);
    }
    note = std::to_string(pairs.size()) + " pairs, 4 variables";
    return ok.load();
}

// ---------------------------------------------------------------------------
// 2. the eight symmetric conditions against the classical rules plus the
//    diagram condition, every numbering of every skew shape of up to 7 cells
//    (one representative per translation class), every content
// ---------------------------------------------------------------------------
bool criterion_eight_equivalence(std::string& note) {
    std::vector<SkewShape> shapes = reduced_skew_shapes(7);
    std::atomic<bool> ok{true};
    std::atomic<long long> numberings{0};

#pragma omp parallel num_threads(max_threads())
    {
        LRScratch scratch;
        long long local = 0;
#pragma omp for schedule(dynamic)
        for (long long si = 0; si < static_cast<long long>(shapes.size()); ++si) {
            if (!ok.load(std::memory_order_relaxed)) continue;
            const SkewShape& shape = shapes[static_cast<std::size_t>(si)];
            ShapeIndex idx = make_shape_index(shape);
            const int n = static_cast<int>(idx.cells.size());
            std::vector<int> c1(static_cast<std::size_t>(n)), c2(static_cast<std::size_t>(n));
            for (const Partition& v : partitions_of(n, n, n)) {
                std::vector<std::pair<int, int>> ycells;
                for (std::size_t row = 0; row < v.length(); ++row)
                    for (int c = 1; c <= v.part(row); ++c)
                        ycells.push_back({static_cast<int>(row) + 1, c});
                std::vector<int> slot(static_cast<std::size_t>(n));
                std::iota(slot.begin(), slot.end(), 0);
                do {
                    for (int t = 0; t < n; ++t) {
                        const auto& y = ycells[static_cast<std::size_t>(slot[static_cast<std::size_t>(t)])];
                        c1[static_cast<std::size_t>(t)] = y.first;
                        c2[static_cast<std::size_t>(t)] = y.second;
                    }
                    const bool classical = check_classical(idx, c1, v.parts(), scratch);
                    const bool young = condition_young(idx, c1, c2, v.parts(), scratch);
                    const bool eight = check_eight(idx, c1, c2, v.parts(), scratch);
                    ++local;
                    if ((classical && young) != eight) {
                        ok.store(false, std::memory_order_relaxed);
                        break;
                    }
                    if (classical && young) {
                        // second coordinates are forced to occurrence indices
                        std::vector<int> counts(v.length(), 0);
                        bool canonical = true;
                        for (int t = 0; t < n && canonical; ++t)
                            canonical =
                                c2[static_cast<std::size_t>(t)] ==
                                ++counts[static_cast<std::size_t>(c1[static_cast<std::size_t>(t)] - 1)];
                        if (!canonical) ok.store(false, std::memory_order_relaxed);
                    }
                } while (std::next_permutation(slot.begin(), slot.end()));
            }
        }
        numberings += local;
    }
    note = std::to_string(shapes.size()) + " shapes, " + std::to_string(numberings.load()) +
           " numberings";
    return ok.load();
}

// ---------------------------------------------------------------------------
// 3. count-based Grassmannian evaluation against plain sorting, 10^4 seeded
//    admissible draws
// ---------------------------------------------------------------------------
bool criterion_counts_vs_sort(std::string& note) {
    std::mt19937 rng(20240809);
    long long admissible = 0, draws = 0;
    while (admissible < 10000) {
        ++draws;
        const int r = 1 + static_cast<int>(rng() % 6);
        const int d = r + 1 + static_cast<int>(rng() % (12 - r));
        std::vector<int> w(static_cast<std::size_t>(r));
        for (int& x : w) x = static_cast<int>(rng() % 17) - 8;
        std::sort(w.rbegin(), w.rend());
        std::vector<int> up;
        int prev = std::min(8, d - r);
        for (int i = 0; i < 8 && prev > 0; ++i) {
            prev = static_cast<int>(rng() % static_cast<unsigned>(prev + 1));
            if (prev == 0) break;
            up.push_back(prev);
        }
        GeneralizedPartition wg(w);
        Partition u(up);
        auto fast = grassmann_bott_by_counts(wg, u, d);
        auto slow = grassmann_bott(
            wg, GeneralizedPartition::extend(transpose(u), static_cast<std::size_t>(d - r)));
        if (fast.has_value() != slow.has_value()) return false;
        if (!fast) continue;
        ++admissible;
        if (fast->degree != slow->degree || fast->psi != slow->psi) return false;
    }
    note = "10000 admissible draws out of " + std::to_string(draws);
    return true;
}

// ---------------------------------------------------------------------------
// 4. the worked six-row example, printed values and corrected values
// ---------------------------------------------------------------------------
bool criterion_worked_example(std::string& note) {
    GeneralizedPartition w({5, 4, 3, 2, -1, -2});
    Partition u{7, 7, 4, 3, 3, 1};
    note = "six-row quotient weight against the seven-column subbundle partition";

    if (transpose(u) != Partition{6, 5, 5, 3, 2, 2, 2}) return false;
    if (chi_reversal(GeneralizedPartition::extend(u, 6)) !=
        GeneralizedPartition({-1, -3, -3, -4, -7, -7}))
        return false;

    auto counts = grassmann_bott_by_counts(w, u, 13);
    if (!counts) return false;
    if (counts->alpha != std::vector<int>{4, 2, 0, -2, -6, -8}) return false;
    if (counts->beta != std::vector<int>{-1, -3, -4, -7, -9, -10, -11}) return false;
    if (counts->s_plus != std::vector<int>{5, 4, 3, 3, 2, 2}) return false;
    if (counts->gamma_rows != std::vector<int>{0, 0, 0, 1, 3, 4}) return false;
    if (counts->gamma_cols != std::vector<int>{3, 2, 2, 1, 0, 0, 0}) return false;
    if (counts->s_minus != std::vector<int>{3, 3, 3, 2, 2, 2, 2}) return false;
    if (counts->degree != 8) return false;

    auto split = split_diagram(w, u);
    if (!split) return false;
    if (split->sigma_plus.size() != 19 || split->sigma_minus.size() != 17) return false;
    if (split->degree() != 8) return false;

    auto direct = grassmann_bott(w, GeneralizedPartition::extend(transpose(u), 7));
    if (!direct || direct->degree != 8 || direct->psi != counts->psi) return false;
    return is_height_increasing(split_young_bijection(*split));
}

// ---------------------------------------------------------------------------
// 5. trivial-bundle tables: diagonal box counts, Euler characteristic,
//    arithmetic genus, every Grassmannian with d <= 6
// ---------------------------------------------------------------------------
long long box_count_ref(int r, int c, int p) {
    long long count = 0;
    auto rec = [&](auto&& self, int remaining, int rows_left, int hi) -> void {
        if (remaining == 0) {
            ++count;
            return;
        }
        if (rows_left == 0) return;
        for (int x = std::min(hi, remaining); x >= 1; --x)
            self(self, remaining - x, rows_left - 1, x);
    };
    rec(rec, p, r, c);
    return count;
}

bool criterion_hodge(std::string& note) {
    int spaces = 0;
    for (int d = 2; d <= 6; ++d)
        for (int r = 1; r < d; ++r) {
            ++spaces;
            auto dims = table_dimensions(grassmann_cohomology(r, d, Partition{}));
            long long euler = 0, genus = 0;
            std::vector<long long> diag(static_cast<std::size_t>(r * (d - r)) + 1, 0);
            for (const auto& [bidegree, dim] : dims) {
                if (bidegree.p != bidegree.q) return false;
                diag[static_cast<std::size_t>(bidegree.p)] = dim.convert_to<long long>();
                euler += (((bidegree.p + bidegree.q) % 2) ? -1 : 1) * dim.convert_to<long long>();
                if (bidegree.p == 0) genus += ((bidegree.q % 2) ? -1 : 1) * dim.convert_to<long long>();
            }
            for (int p = 0; p <= r * (d - r); ++p)
                if (diag[static_cast<std::size_t>(p)] != box_count_ref(r, d - r, p)) return false;
            if (euler != binomial_ref(d, r)) return false;
            if (genus != 1) return false;
        }
    note = std::to_string(spaces) + " spaces, diagonal + Euler + genus";
    return true;
}

// ---------------------------------------------------------------------------
// 6. twisted forms on projective space against the classical closed form
// ---------------------------------------------------------------------------
long long projective_forms_ref(int n, int p, int q, int k) {
    if (k == 0) return p == q ? 1 : 0;
    if (q == 0 && k > p) return binomial_ref(k + n - p, k) * binomial_ref(k - 1, p);
    if (q == n && k < p - n) return binomial_ref(-k + p, -k) * binomial_ref(-k - 1, n - p);
    return 0;
}

bool criterion_projective_space(std::string& note) {
    int tables = 0;
    for (int n = 1; n <= 4; ++n)
        for (int k = -6; k <= 6; ++k) {
            ++tables;
            auto dims = table_dimensions(grassmann_cohomology(1, n + 1, GeneralizedPartition({k})));
            for (int p = 0; p <= n; ++p)
                for (int q = 0; q <= n; ++q) {
                    long long expected = projective_forms_ref(n, p, q, k);
                    auto it = dims.find(Bidegree{p, q});
                    long long got = it == dims.end() ? 0 : it->second.convert_to<long long>();
                    if (got != expected) return false;
                }
        }
    note = std::to_string(tables) + " twisted form tables";
    return true;
}

// ---------------------------------------------------------------------------
// 7. the determinant of the quotient concentrates at the origin
// ---------------------------------------------------------------------------
bool criterion_determinant(std::string& note) {
    int tables = 0;
    for (int d = 1; d <= 6; ++d)
        for (int r = 1; r <= d; ++r) {
            ++tables;
            Partition det(std::vector<int>(static_cast<std::size_t>(r), 1));
            CohomologyTable table = grassmann_cohomology(r, d, det);
            if (table.entries().size() != 1) return false;
            const auto& [bidegree, dec] = *table.entries().begin();
            if (!(bidegree == Bidegree{0, 0})) return false;
            if (dec.term_count() != 1) return false;
            if (dec.multiplicity(det.padded(static_cast<std::size_t>(d))) != 1) return false;
            if (table_dimensions(table).at(Bidegree{0, 0}) != binomial_ref(d, r)) return false;
        }
    note = std::to_string(tables) + " determinant tables";
    return true;
}

// ---------------------------------------------------------------------------
// 8. flag tables: strict dominance and the norm gap on every term of every
//    run with d <= 5 and strictly decreasing exponents in [0,3]; on runs
//    whose last exponent is zero the degree-zero row is checked instead
//    (the strict statements require a positive bottom exponent)
// ---------------------------------------------------------------------------
bool criterion_flag_properties(std::string& note) {
    long long runs = 0, terms = 0;
    for (int d = 2; d <= 5; ++d) {
        for (int mask = 1; mask < (1 << d); ++mask) {
            std::vector<int> steps;
            for (int bit = 0; bit < d; ++bit)
                if (mask & (1 << bit)) steps.push_back(bit + 1);
            const int l = static_cast<int>(steps.size());
            if (l > 4) continue;  // no strictly decreasing sequence in [0,3] is longer
            FlagShape flag(d, steps);

            // all strictly decreasing exponent sequences in [0,3]
            std::vector<std::vector<int>> exponents;
            for (int emask = 0; emask < 16; ++emask) {
                if (__builtin_popcount(static_cast<unsigned>(emask)) != l) continue;
                std::vector<int> a;
                for (int value = 3; value >= 0; --value)
                    if (emask & (1 << value)) a.push_back(value);
                exponents.push_back(std::move(a));
            }

            for (const auto& a : exponents) {
                ++runs;
                CohomologyTable table = flag_cohomology_table(flag, a);
                Partition a_s(flag.block_expand(a));
                const bool positive = a.back() >= 1;
                for (const auto& [bidegree, dec] : table.entries()) {
                    if (bidegree.p == 0) {
                        if (bidegree.q != 0) return false;
                        if (dec.term_count() != 1) return false;
                        if (dec.multiplicity(a_s.padded(static_cast<std::size_t>(d))) != 1)
                            return false;
                        continue;
                    }
                    if (!positive) continue;
                    for (const auto& [psi, mult] : dec.terms()) {
                        (void)mult;
                        ++terms;
                        Partition rho = GeneralizedPartition(psi).as_partition();
                        if (rho == a_s) return false;
                        if (!dominates(a_s, rho)) return false;
                        if (bidegree.p + bidegree.q + 1 + squared_norm(a_s) > squared_norm(rho))
                            return false;
                    }
                }
            }
        }
    }
    note = std::to_string(runs) + " runs, " + std::to_string(terms) + " strict terms";
    return true;
}

// ---------------------------------------------------------------------------
// 9. the norm-gap dichotomy over every product term, weights up to 8
// ---------------------------------------------------------------------------
bool criterion_norm_gap_sweep(std::string& note) {
    long long checked = 0;
    for (int r = 1; r <= 4; ++r) {
        // contents of length exactly r with positive bottom part
        std::vector<Partition> contents;
        for (int wv = r; wv <= 8; ++wv)
            for (const Partition& v : partitions_of(wv, r, 8))
                if (static_cast<int>(v.length()) == r) contents.push_back(v);
        for (const Partition& v : contents) {
            std::vector<Partition> uppers = partitions_up_to(8 - static_cast<int>(v.weight()), r);
            for (const Partition& u : uppers) {
                GeneralizedPartition inner =
                    chi_reversal(GeneralizedPartition::extend(u, static_cast<std::size_t>(r)));
                const int d = r + std::max(1, u.first());
                for (const LRTerm& term : lr_terms(inner, v, false)) {
                    auto counts = grassmann_bott_by_counts(term.outer, u, d);
                    if (!counts) continue;
                    ++checked;
                    Partition rho = GeneralizedPartition(counts->psi).as_partition();
                    if (u.is_zero()) {
                        if (rho != v) return false;
                        continue;
                    }
                    if (u.weight() + counts->degree + 1 + squared_norm(v) > squared_norm(rho))
                        return false;
                }
            }
        }
    }
    note = std::to_string(checked) + " admissible product terms";
    return true;
}

// ---------------------------------------------------------------------------
// 10. vanishing reductions: single-part agreement on the full grid, and the
//     hook threshold collapsing to zero at the top corner
// ---------------------------------------------------------------------------
bool criterion_vanishing_reductions(std::string& note) {
    long long checked = 0;
    for (int n = 1; n <= 10; ++n)
        for (int d = 1; d <= 10; ++d)
            for (int r = 1; r <= 10; ++r)
                for (int p = 0; p <= n; ++p)
                    for (int q = 0; q <= n; ++q) {
                        Verdict left =
                            schur_vanishing(VanishingQuery{n, d, p, q, SchurWedge{Partition{r}}});
                        const Verdict* right = nullptr;
                        Certificate cert =
                            evaluate_query(VanishingQuery{n, d, p, q, WedgePower{r}});
                        for (const Verdict& v : cert.verdicts)
                            if (v.theorem == "le-potier") right = &v;
                        if (!right) return false;
                        if (left.satisfied != right->satisfied) return false;
                        if (left.vacuous != right->vacuous) return false;
                        if (!left.vacuous && left.threshold != right->threshold) return false;
                        ++checked;
                    }

    for (int n = 1; n <= 10; ++n)
        for (int d = 1; d <= 10; ++d)
            for (int k = d; k <= 12; ++k) {
                Verdict v = hook_vanishing(VanishingQuery{n, d, n, 0, HookBundle{k - d, k}});
                if (v.threshold != 0) return false;
                Verdict top = hook_vanishing(VanishingQuery{n, d, n, 1, HookBundle{k - d, k}});
                if (!top.satisfied) return false;
                ++checked;
            }
    note = std::to_string(checked) + " comparisons";
    return true;
}

struct Criterion {
    const char* label;
    bool (*run)(std::string&);
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"product decompositions match the tableau-polynomial oracle", criterion_lr_oracle},
        {"eight symmetric conditions match the classical rules", criterion_eight_equivalence},
        {"count-based evaluation matches inversion sorting", criterion_counts_vs_sort},
        {"the worked six-row example reproduces exactly", criterion_worked_example},
        {"trivial-bundle tables: box diagonal, Euler number, genus", criterion_hodge},
        {"projective-space form tables match the closed formula", criterion_projective_space},
        {"determinant tables concentrate at the origin", criterion_determinant},
        {"flag tables obey strict dominance and the norm gap", criterion_flag_properties},
        {"norm-gap dichotomy over all product terms to weight 8", criterion_norm_gap_sweep},
        {"vanishing reductions: single part grid and hook corner", criterion_vanishing_reductions},
    };

    int failures = 0;
    int id = 0;
    for (const Criterion& c : criteria) {
        ++id;
        std::string info;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(info);
        } catch (const std::exception& e) {
            ok = false;
            info = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  [%2d/10] %s (%s; %.1fs)\n", ok ? "PASS" : "FAIL", id, c.label,
                    info.c_str(), seconds);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
