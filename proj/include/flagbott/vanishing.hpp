#pragma once

#include <string>
#include <variant>
#include <vector>

#include "flagbott/cohomology.hpp"
#include "flagbott/partition.hpp"

namespace flagbott {

// Bundle kinds a query may name. All are Schur-functor expressions in a
// single ample input bundle of rank d.
struct SchurWedge {
    Partition R;  // the bundle is the Schur functor of the transpose of R
};
struct TensorMix {
    std::vector<int> sym;    // symmetric powers, each >= 1
    std::vector<int> wedge;  // wedge powers, each >= 1
};
struct HookBundle {
    int alpha = 0;  // 0 <= alpha < k
    int k = 1;
};
struct SymDet {
    int r = 1;  // r-th symmetric power tensor the determinant
};
struct WedgePower {
    int r = 1;
};
struct SchurDet {
    Partition R;
    int m = 1;  // Schur functor of R tensor the m-th determinant power
};

using Bundle = std::variant<SchurWedge, TensorMix, HookBundle, SymDet, WedgePower, SchurDet>;

struct VanishingQuery {
    int n = 1;  // dimension of the base space
    int d = 1;  // rank of the input bundle
    int p = 0;
    int q = 0;
    Bundle bundle;
};

/// One theorem's view of a query. "vacuous" flags an identically zero
/// bundle, whose cohomology vanishes with no hypothesis at all.
struct Verdict {
    std::string theorem;
    std::string ample_hypothesis;  // which bundle the theorem requires ample
    std::string condition;         // the numeric hypothesis, human readable
    long long threshold = 0;
    bool satisfied = false;
    bool vacuous = false;
    std::string detail;
};

struct Certificate {
    VanishingQuery query;
    std::vector<Verdict> verdicts;

    bool certified() const;
};

/// Unique t >= 1 with t(t-1)/2 <= x < t(t+1)/2.
int delta(long long x);

/// Vanishing from the wedge-type Schur bundle of R: threshold is the sum of
/// R_i (d - R_i).
Verdict schur_vanishing(const VanishingQuery& query);

/// Vanishing for a mixed tensor of symmetric and wedge powers: threshold
/// sum s_j (d - s_j) + (d-1) sum k_i, via the equivalent single Schur bundle.
Verdict mixed_tensor_vanishing(const VanishingQuery& query);

/// Hook-functor vanishing with the delta-indexed threshold.
Verdict hook_vanishing(const VanishingQuery& query);

/// The classical one-bundle statements applicable to the query's kind;
/// non-matching statements are skipped, not failed.
std::vector<Verdict> classical_vanishing(const VanishingQuery& query);

/// Dominance-order transfer: ampleness of the Schur bundle of I certifies
/// ampleness of the Schur bundle of J. Zero partitions are rejected.
bool ampleness_implication(const Partition& I, const Partition& J);

/// Every applicable verdict for the query, deterministic order.
Certificate evaluate_query(const VanishingQuery& query);

/// Empirical optimality check for the mixed-tensor threshold: decomposes the
/// tensor bundle into Schur summands and compares per-summand thresholds
/// against the distinguished summand. Exponential in the total weight.
struct OptimalityAudit {
    Partition lambda;                                        // distinguished summand
    long long lambda_threshold = 0;
    std::vector<std::pair<std::vector<int>, long long>> summands;  // (mu, threshold)
    bool lambda_present = false;
    bool optimal = false;
};

OptimalityAudit audit_mixed_optimality(const TensorMix& mix, int d);

}  // namespace flagbott
