#include "flagbott/cohomology.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "flagbott/parallel.hpp"

namespace flagbott {

CohomologyTable::CohomologyTable(Space space, int d) : space_(std::move(space)), d_(d) {
    if (d_ < 1) throw std::invalid_argument("dimension-mismatch: ambient dimension must be positive");
}

void CohomologyTable::add(int p, int q, const std::vector<int>& psi, long long mult) {
    if (static_cast<int>(psi.size()) != d_)
        throw std::invalid_argument("dimension-mismatch: weight length differs from dimension");
    auto it = entries_.find(Bidegree{p, q});
    if (it == entries_.end())
        it = entries_.emplace(Bidegree{p, q}, SchurDecomposition(static_cast<std::size_t>(d_))).first;
    it->second.add(psi, mult);
}

std::vector<Partition> omega_decomposition(int r, int rank_s, int p) {
    if (p < 0) throw std::invalid_argument("bad-bidegree: negative form degree");
    return partitions_of(p, r, rank_s);
}

namespace {

struct GrassmannContribution {
    int p;
    long long q;
    std::vector<int> psi;
    long long mult;
};

// Contributions of a single p-form row label u: expand the product of the
// reversal of u with v0, twist back, and evaluate each outer shape.
void evaluate_row(int r, int d, const Partition& u, const Partition& v0, int twist,
                  std::vector<GrassmannContribution>& out, int p) {
    GeneralizedPartition inner = chi_reversal(GeneralizedPartition::extend(u, static_cast<std::size_t>(r)));
    GeneralizedPartition sub = GeneralizedPartition::extend(transpose(u), static_cast<std::size_t>(d - r));
    for (const LRTerm& term : lr_terms(inner, v0, false)) {
        GeneralizedPartition w = term.outer.shifted(twist);
        if (auto res = grassmann_bott(w, sub)) {
            out.push_back({p, res->degree, std::move(res->psi), term.multiplicity});
        }
    }
}

void check_term_against(const GeneralizedPartition& v, int p, long long q,
                        const std::vector<int>& psi) {
    // weight preservation holds for every term; the dominance statements
    // below only make sense for plain partitions
    long long weight = 0;
    for (int x : psi) weight += x;
    if (weight != v.weight())
        throw std::logic_error("cohomology-internal: term weight differs from bundle weight");
    if (!v.is_partition()) return;
    if (!psi.empty() && psi.back() < 0)
        throw std::logic_error("cohomology-internal: negative term for a polynomial bundle");
    Partition rho = GeneralizedPartition(psi).as_partition();
    Partition vp = v.as_partition();
    if (!(rho == vp)) {
        if (!dominates(vp, rho))
            throw std::logic_error("cohomology-internal: term not dominated by the bundle weight");
    } else if ((p != 0 || q != 0) && v.length() > 0 && v.last() > 0) {
        // with a full-length positive weight the bundle weight can only
        // reappear at the origin; weights with zero tail do revisit it
        // (e.g. the quotient bundle itself in one step down)
        throw std::logic_error("cohomology-internal: bundle weight reappears off the origin");
    }
}

std::pair<Partition, int> split_twist(const GeneralizedPartition& v) {
    int twist = v.length() && v.last() < 0 ? v.last() : 0;
    return {v.shifted(-twist).as_partition(), twist};
}

CohomologyTable grassmann_cohomology_impl(int r, int d, const GeneralizedPartition& v,
                                          bool parallel) {
    if (r < 1 || r > d) throw std::invalid_argument("dimension-mismatch: need 1 <= r <= d");
    if (v.length() != static_cast<std::size_t>(r))
        throw std::invalid_argument("dimension-mismatch: bundle weight must have length r");
    auto [v0, twist] = split_twist(v);

    std::vector<std::pair<int, Partition>> rows;
    const int dim = r * (d - r);
    for (int p = 0; p <= dim; ++p)
        for (Partition& u : omega_decomposition(r, d - r, p)) rows.push_back({p, std::move(u)});

    std::vector<std::vector<GrassmannContribution>> local(rows.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(max_threads())
        for (long long i = 0; i < static_cast<long long>(rows.size()); ++i) {
            const auto& [p, u] = rows[static_cast<std::size_t>(i)];
            evaluate_row(r, d, u, v0, twist, local[static_cast<std::size_t>(i)], p);
        }
    } else {
        for (std::size_t i = 0; i < rows.size(); ++i)
            evaluate_row(r, d, rows[i].second, v0, twist, local[i], rows[i].first);
    }

    CohomologyTable table(GrassmannianSpace{r, d}, d);
    for (const auto& contributions : local)
        for (const auto& c : contributions) {
            check_term_against(v, c.p, c.q, c.psi);
            table.add(c.p, static_cast<int>(c.q), c.psi, c.mult);
        }
    return table;
}

std::map<std::tuple<int, int, std::vector<int>>, CohomologyTable>& grassmann_memo() {
    static std::map<std::tuple<int, int, std::vector<int>>, CohomologyTable> memo;
    return memo;
}

std::mutex& grassmann_memo_mutex() {
    static std::mutex m;
    return m;
}

CohomologyTable grassmann_cohomology_memo(int r, int d, const GeneralizedPartition& v) {
    auto key = std::make_tuple(r, d, v.parts());
    {
        std::lock_guard<std::mutex> lock(grassmann_memo_mutex());
        auto it = grassmann_memo().find(key);
        if (it != grassmann_memo().end()) return it->second;
    }
    CohomologyTable table = grassmann_cohomology_impl(r, d, v, true);
    std::lock_guard<std::mutex> lock(grassmann_memo_mutex());
    return grassmann_memo().emplace(std::move(key), std::move(table)).first->second;
}

}  // namespace

CohomologyTable grassmann_cohomology(int r, int d, const Partition& v) {
    if (static_cast<int>(v.length()) > r)
        throw std::invalid_argument("dimension-mismatch: bundle weight exceeds r rows");
    return grassmann_cohomology_memo(r, d, GeneralizedPartition::extend(v, static_cast<std::size_t>(r)));
}

CohomologyTable grassmann_cohomology(int r, int d, const GeneralizedPartition& v) {
    return grassmann_cohomology_memo(r, d, v);
}

CohomologyTable grassmann_cohomology_serial(int r, int d, const GeneralizedPartition& v) {
    return grassmann_cohomology_impl(r, d, v, false);
}

CohomologyTable flag_cohomology_table(const FlagShape& flag, std::span<const int> a) {
    if (a.size() != flag.levels())
        throw std::invalid_argument("dimension-mismatch: one exponent per flag step required");
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i - 1] <= a[i])
            throw std::invalid_argument("bad-exponents: must be strictly decreasing");

    const int top = flag.steps.back();
    if (flag.levels() == 1) {
        GeneralizedPartition v(std::vector<int>(static_cast<std::size_t>(top), a[0]));
        CohomologyTable inner = grassmann_cohomology_memo(top, flag.d, v);
        CohomologyTable out(flag, flag.d);
        for (const auto& [bidegree, dec] : inner.entries())
            for (const auto& [psi, mult] : dec.terms()) out.add(bidegree.p, bidegree.q, psi, mult);
        return out;
    }

    FlagShape inner_flag(top, std::vector<int>(flag.steps.begin(), flag.steps.end() - 1));
    const int a_top = a.back();
    std::vector<int> a_rel(a.begin(), a.end() - 1);
    for (int& x : a_rel) x -= a_top;
    CohomologyTable inner = flag_cohomology_table(inner_flag, a_rel);

    CohomologyTable out(flag, flag.d);
    for (const auto& [inner_bidegree, dec] : inner.entries()) {
        for (const auto& [rho, mult] : dec.terms()) {
            GeneralizedPartition twisted = GeneralizedPartition(rho).shifted(a_top);
            CohomologyTable outer = grassmann_cohomology_memo(top, flag.d, twisted);
            for (const auto& [outer_bidegree, outer_dec] : outer.entries())
                for (const auto& [psi, outer_mult] : outer_dec.terms())
                    out.add(outer_bidegree.p + inner_bidegree.p, outer_bidegree.q + inner_bidegree.q,
                            psi, mult * outer_mult);
        }
    }
    return out;
}

CohomologyTable flag_cohomology(const FlagShape& flag, std::span<const int> a, int P) {
    if (P < 0 || P > flag.dim())
        throw std::invalid_argument("bad-bidegree: form degree outside the space dimension");
    CohomologyTable full = flag_cohomology_table(flag, a);
    CohomologyTable out(flag, flag.d);
    for (const auto& [bidegree, dec] : full.entries()) {
        if (bidegree.p != P) continue;
        for (const auto& [psi, mult] : dec.terms()) out.add(bidegree.p, bidegree.q, psi, mult);
    }
    return out;
}

BigInt dim_schur(std::span<const int> lam, int d) {
    if (static_cast<int>(lam.size()) != d)
        throw std::invalid_argument("dimension-mismatch: weight length must equal d");
    for (std::size_t i = 1; i < lam.size(); ++i)
        if (lam[i - 1] < lam[i])
            throw std::invalid_argument("bad-partition: parts must be weakly decreasing");
    BigInt num = 1, den = 1;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            num *= lam[static_cast<std::size_t>(i)] - lam[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    return num / den;
}

BigInt dim_schur(const Partition& lam, int d) {
    if (static_cast<int>(lam.length()) > d) return 0;
    return dim_schur(lam.padded(static_cast<std::size_t>(d)), d);
}

std::map<Bidegree, BigInt> table_dimensions(const CohomologyTable& table) {
    std::map<Bidegree, BigInt> out;
    for (const auto& [bidegree, dec] : table.entries()) {
        BigInt total = 0;
        for (const auto& [psi, mult] : dec.terms()) total += mult * dim_schur(psi, table.d());
        out[bidegree] = total;
    }
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

}  // namespace flagbott
