#include "flagbott/vanishing.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagbott {

namespace {

long long wedge_threshold(const Partition& R, int d) {
    long long total = 0;
    for (int r : R.parts()) total += static_cast<long long>(r) * (d - r);
    return total;
}

std::string bracketed(const Partition& u) {
    std::string out = "[";
    out += format_int_list(u.parts());
    out += "]";
    return out;
}

Verdict vacuous_verdict(std::string theorem, std::string why) {
    Verdict v;
    v.theorem = std::move(theorem);
    v.ample_hypothesis = "none";
    v.condition = "bundle is zero";
    v.satisfied = true;
    v.vacuous = true;
    v.detail = std::move(why);
    return v;
}

Verdict excess_verdict(std::string theorem, std::string hypothesis, long long threshold,
                       const VanishingQuery& query) {
    Verdict v;
    v.theorem = std::move(theorem);
    v.ample_hypothesis = std::move(hypothesis);
    v.threshold = threshold;
    v.condition = "p+q-n > " + std::to_string(threshold);
    v.satisfied = query.p + query.q - query.n > threshold;
    return v;
}

Verdict top_degree_verdict(std::string theorem, std::string hypothesis, long long threshold,
                           const VanishingQuery& query) {
    Verdict v;
    v.theorem = std::move(theorem);
    v.ample_hypothesis = std::move(hypothesis);
    v.threshold = threshold;
    v.condition = "p = n and q > " + std::to_string(threshold);
    v.satisfied = query.p == query.n && query.q > threshold;
    return v;
}

Partition hook_partition(const HookBundle& hook) {
    std::vector<int> parts;
    parts.push_back(hook.alpha + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(hook.k - hook.alpha - 1), 1);
    return Partition(std::move(parts));
}

/// Rank of the queried bundle; 0 when the bundle is identically zero.
BigInt bundle_rank(const Bundle& bundle, int d) {
    return std::visit(
        [&](const auto& b) -> BigInt {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, SchurWedge>) {
                return dim_schur(transpose(b.R), d);
            } else if constexpr (std::is_same_v<T, WedgePower>) {
                return binomial(d, b.r);
            } else if constexpr (std::is_same_v<T, SymDet>) {
                return binomial(d + b.r - 1, b.r);
            } else if constexpr (std::is_same_v<T, SchurDet>) {
                return dim_schur(b.R, d);
            } else if constexpr (std::is_same_v<T, HookBundle>) {
                return dim_schur(hook_partition(b), d);
            } else {
                BigInt rank = 1;
                for (int k : b.sym) rank *= binomial(d + k - 1, k);
                for (int s : b.wedge) rank *= binomial(d, s);
                return rank;
            }
        },
        bundle);
}

}  // namespace

bool Certificate::certified() const {
    return std::any_of(verdicts.begin(), verdicts.end(),
                       [](const Verdict& v) { return v.satisfied; });
}

int delta(long long x) {
    if (x < 0) throw std::invalid_argument("bad-argument: delta is defined on nonnegative input");
    int t = 1;
    while (static_cast<long long>(t + 1) * t / 2 <= x) ++t;
    return t;
}

Verdict schur_vanishing(const VanishingQuery& query) {
    const auto* bundle = std::get_if<SchurWedge>(&query.bundle);
    if (!bundle) throw std::invalid_argument("bad-bundle: a wedge-type Schur bundle is required");
    const Partition& R = bundle->R;
    if (static_cast<int>(R.length()) > query.d)
        throw std::invalid_argument("bad-bundle: R has more parts than the rank");
    if (R.first() > query.d)
        return vacuous_verdict("schur-vanishing", "a part of R exceeds the rank");
    return excess_verdict("schur-vanishing", "wedge" + bracketed(R) + "(E)",
                          wedge_threshold(R, query.d), query);
}

Verdict mixed_tensor_vanishing(const VanishingQuery& query) {
    const auto* mix = std::get_if<TensorMix>(&query.bundle);
    if (!mix) throw std::invalid_argument("bad-bundle: a mixed tensor bundle is required");
    for (int k : mix->sym)
        if (k < 1) throw std::invalid_argument("bad-bundle: symmetric powers must be positive");
    long long wedge_part = 0, sym_total = 0;
    for (int s : mix->wedge) {
        if (s < 1) throw std::invalid_argument("bad-bundle: wedge powers must be positive");
        if (s > query.d)
            return vacuous_verdict("mixed-tensor-vanishing", "a wedge power exceeds the rank");
        wedge_part += static_cast<long long>(s) * (query.d - s);
    }
    for (int k : mix->sym) sym_total += k;

    Verdict v = excess_verdict("mixed-tensor-vanishing", "the tensor bundle itself",
                               wedge_part + (query.d - 1) * sym_total, query);

    // the tensor bundle is ample exactly when this single Schur summand is
    std::vector<int> tl(mix->wedge.begin(), mix->wedge.end());
    std::sort(tl.rbegin(), tl.rend());
    tl.insert(tl.end(), static_cast<std::size_t>(sym_total), 1);
    Partition lambda = transpose(Partition(std::move(tl)));
    v.detail = "equivalent Schur summand " + bracketed(lambda);
    return v;
}

Verdict hook_vanishing(const VanishingQuery& query) {
    const auto* hook = std::get_if<HookBundle>(&query.bundle);
    if (!hook) throw std::invalid_argument("bad-bundle: a hook bundle is required");
    if (hook->k < 1 || hook->alpha < 0 || hook->alpha >= hook->k)
        throw std::invalid_argument("bad-bundle: hook parameters need 0 <= alpha < k");
    if (query.d - hook->k + hook->alpha < 0)
        return vacuous_verdict("hook-vanishing", "the hook does not fit in the rank");
    const long long a = hook->alpha;
    const long long threshold =
        (delta(query.n - query.p) + a) * (query.d - hook->k + 2 * a) - a * (a + 1);
    return excess_verdict("hook-vanishing", "E", threshold, query);
}

std::vector<Verdict> classical_vanishing(const VanishingQuery& query) {
    std::vector<Verdict> out;
    const int d = query.d;

    BigInt rank = bundle_rank(query.bundle, d);
    if (rank == 1) {
        Verdict kan;
        kan.theorem = "kodaira-akizuki-nakano";
        kan.ample_hypothesis = "the line bundle itself";
        kan.threshold = query.n;
        kan.condition = "p+q > n";
        kan.satisfied = query.p + query.q > query.n;
        out.push_back(std::move(kan));
    }

    auto wedge_statements = [&](int r) {
        if (r > d) {
            out.push_back(vacuous_verdict("le-potier-top-degree", "the wedge power exceeds the rank"));
            out.push_back(vacuous_verdict("le-potier", "the wedge power exceeds the rank"));
            return;
        }
        out.push_back(top_degree_verdict("le-potier-top-degree", "E", d - r, query));
        out.push_back(excess_verdict("le-potier", "wedge^" + std::to_string(r) + "(E)",
                                     static_cast<long long>(r) * (d - r), query));
    };

    if (const auto* w = std::get_if<WedgePower>(&query.bundle)) {
        wedge_statements(w->r);
    } else if (const auto* sw = std::get_if<SchurWedge>(&query.bundle)) {
        if (sw->R.length() == 1) wedge_statements(sw->R.first());
    } else if (const auto* mix = std::get_if<TensorMix>(&query.bundle)) {
        if (mix->sym.empty()) {
            bool zero = false;
            long long threshold = 0;
            for (int s : mix->wedge) {
                if (s > d) zero = true;
                threshold += static_cast<long long>(s) * (d - s);
            }
            if (zero)
                out.push_back(vacuous_verdict("sommese", "a wedge power exceeds the rank"));
            else
                out.push_back(excess_verdict("sommese", "E", threshold, query));
        }
    } else if (std::get_if<SymDet>(&query.bundle)) {
        out.push_back(top_degree_verdict("griffiths", "E", 0, query));
    } else if (const auto* sd = std::get_if<SchurDet>(&query.bundle)) {
        if (sd->m == static_cast<int>(sd->R.length()))
            out.push_back(top_degree_verdict("demailly", "E", 0, query));
    }
    return out;
}

bool ampleness_implication(const Partition& I, const Partition& J) {
    if (I.is_zero() || J.is_zero())
        throw std::invalid_argument("bad-partition: ampleness transfer needs nonzero partitions");
    return dominates(I, J);
}

Certificate evaluate_query(const VanishingQuery& query) {
    if (query.n < 1 || query.d < 1)
        throw std::invalid_argument("bad-query: dimension and rank must be positive");
    if (query.p < 0 || query.p > query.n || query.q < 0 || query.q > query.n)
        throw std::invalid_argument("bad-query: bidegree outside [0,n]");

    Certificate cert{query, {}};
    if (std::get_if<SchurWedge>(&query.bundle)) {
        cert.verdicts.push_back(schur_vanishing(query));
    } else if (std::get_if<TensorMix>(&query.bundle)) {
        cert.verdicts.push_back(mixed_tensor_vanishing(query));
    } else if (std::get_if<HookBundle>(&query.bundle)) {
        cert.verdicts.push_back(hook_vanishing(query));
    }
    for (Verdict& v : classical_vanishing(query)) cert.verdicts.push_back(std::move(v));
    return cert;
}

OptimalityAudit audit_mixed_optimality(const TensorMix& mix, int d) {
    if (d < 1) throw std::invalid_argument("bad-query: rank must be positive");
    for (int s : mix.wedge)
        if (s < 1 || s > d)
            throw std::invalid_argument("bad-bundle: wedge powers must lie in [1,d] for the audit");
    for (int k : mix.sym)
        if (k < 1) throw std::invalid_argument("bad-bundle: symmetric powers must be positive");

    // expand the full tensor product, one factor at a time
    SchurDecomposition dec(static_cast<std::size_t>(d));
    dec.add(std::vector<int>(static_cast<std::size_t>(d), 0), 1);
    auto fold = [&](const Partition& factor) {
        SchurDecomposition next(static_cast<std::size_t>(d));
        for (const auto& [term, mult] : dec.terms()) {
            SchurDecomposition prod = lr_product(GeneralizedPartition(term), factor);
            for (const auto& [w, m] : prod.terms()) next.add(w, m * mult);
        }
        dec = std::move(next);
    };
    for (int k : mix.sym) fold(Partition{k});
    for (int s : mix.wedge) fold(Partition(std::vector<int>(static_cast<std::size_t>(s), 1)));

    long long sym_total = 0;
    for (int k : mix.sym) sym_total += k;
    std::vector<int> tl(mix.wedge.begin(), mix.wedge.end());
    std::sort(tl.rbegin(), tl.rend());
    tl.insert(tl.end(), static_cast<std::size_t>(sym_total), 1);
    Partition lambda_tilde(std::move(tl));

    OptimalityAudit audit;
    audit.lambda = transpose(lambda_tilde);
    audit.lambda_threshold = wedge_threshold(lambda_tilde, d);

    long long max_threshold = 0;
    for (const auto& [term, mult] : dec.terms()) {
        Partition mu = GeneralizedPartition(term).as_partition();
        long long t = wedge_threshold(transpose(mu), d);
        audit.summands.push_back({term, t});
        max_threshold = std::max(max_threshold, t);
        if (mu == audit.lambda) audit.lambda_present = true;
    }
    // the stated condition covers every summand exactly when the
    // distinguished summand carries the largest per-summand threshold
    audit.optimal = audit.lambda_present && audit.lambda_threshold == max_threshold;
    return audit;
}

}  // namespace flagbott
