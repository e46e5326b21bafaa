#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "flagbott/bott.hpp"
#include "flagbott/lr.hpp"
#include "flagbott/partition.hpp"

namespace flagbott {

using BigInt = boost::multiprecision::cpp_int;

struct Bidegree {
    int p = 0;
    int q = 0;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

struct GrassmannianSpace {
    int r = 0;
    int d = 0;
    friend bool operator==(const GrassmannianSpace&, const GrassmannianSpace&) = default;
};

using Space = std::variant<GrassmannianSpace, FlagShape>;

/// Map from bidegree to a decomposition of the cohomology there. Empty
/// bidegrees are never stored. Terms have length d (the ambient dimension).
class CohomologyTable {
public:
    CohomologyTable(Space space, int d);

    void add(int p, int q, const std::vector<int>& psi, long long mult);

    const std::map<Bidegree, SchurDecomposition>& entries() const { return entries_; }
    const Space& space() const { return space_; }
    int d() const { return d_; }

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

private:
    Space space_;
    int d_;
    std::map<Bidegree, SchurDecomposition> entries_;
};

/// Row labels of the p-forms on the Grassmannian with quotient rank r and
/// subbundle rank rank_s: partitions of weight p inside the r x rank_s box.
std::vector<Partition> omega_decomposition(int r, int rank_s, int p);

/// Full Dolbeault table of the Schur bundle of v on the quotient side of the
/// Grassmannian of quotient rank r in dimension d. OpenMP kernel; results are
/// memoized for the flag recursion. The generalized overload twists by a
/// power of the determinant when the last part is negative.
CohomologyTable grassmann_cohomology(int r, int d, const Partition& v);
CohomologyTable grassmann_cohomology(int r, int d, const GeneralizedPartition& v);
/// Reference implementation, single pass, no parallelism, no memo.
CohomologyTable grassmann_cohomology_serial(int r, int d, const GeneralizedPartition& v);

/// Full table over the partial flag variety for the line bundle with
/// strictly decreasing exponent sequence a, assembled by recursion over the
/// top Grassmannian quotient.
CohomologyTable flag_cohomology_table(const FlagShape& flag, std::span<const int> a);
/// The slice {(P, q)}_q of the full table.
CohomologyTable flag_cohomology(const FlagShape& flag, std::span<const int> a, int P);

/// Dimension of the irreducible with highest weight lam on GL(d); lam must
/// be weakly decreasing of length exactly d (negative parts allowed, the
/// determinant twist does not change the dimension).
BigInt dim_schur(std::span<const int> lam, int d);
BigInt dim_schur(const Partition& lam, int d);

std::map<Bidegree, BigInt> table_dimensions(const CohomologyTable& table);

long long binomial(int n, int k);

}  // namespace flagbott
