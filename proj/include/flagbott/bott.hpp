#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flagbott/partition.hpp"

namespace flagbott {

/// Nonzero cohomology datum of a weight sequence: the single degree carrying
/// cohomology and the dominant weight there. An empty optional anywhere in
/// this module means all cohomology vanishes.
struct BottData {
    long long degree = 0;     // the only q with nonzero cohomology
    std::vector<int> psi;     // weakly decreasing weight, length d

    friend bool operator==(const BottData&, const BottData&) = default;
};

/// True iff the entries of a - (1,...,d) are pairwise distinct.
bool is_admissible(std::span<const int> a);

/// Complete-flag evaluation: degree = strict inversions of a - (1,...,d),
/// psi = decreasing rearrangement of a - (1,...,d) plus (1,...,d).
std::optional<BottData> bott(std::span<const int> a);

/// Partial flag 0 < s_1 < ... < s_l <= d with quotient ranks s_i - s_{i-1}.
struct FlagShape {
    int d = 0;
    std::vector<int> steps;

    FlagShape(int d, std::vector<int> steps);

    friend bool operator==(const FlagShape&, const FlagShape&) = default;

    std::size_t levels() const { return steps.size(); }
    long long dim() const;
    /// Block expansion of an exponent per level, one entry per coordinate of
    /// the top step, padded with zeros to length d.
    std::vector<int> block_expand(std::span<const int> a) const;
};

/// Partial-flag evaluation: block-expand a, then delegate to bott.
std::optional<BottData> bott_partial(const FlagShape& flag, std::span<const int> a);

/// Quotient/sub pair on the Grassmannian: concatenate and delegate to bott.
/// Dimension is u.length() + v.length().
std::optional<BottData> grassmann_bott(const GeneralizedPartition& u,
                                       const GeneralizedPartition& v);

/// Bott data computed without sorting the full weight: row and column
/// comparison counts against alpha_i = w_i - i and beta_j = tu_j - (r+j),
/// where tu is the transpose of u padded to d - r entries. Fails the length
/// check when the transpose does not fit in d - r entries.
struct CountsBottData {
    std::vector<int> alpha;       // length r
    std::vector<int> beta;        // length d - r
    std::vector<int> gamma_rows;  // per i: card{j : alpha_i < beta_j}
    std::vector<int> gamma_cols;  // per j: card{i : alpha_i < beta_j}
    std::vector<int> s_plus;      // w + gamma_rows
    std::vector<int> s_minus;     // tu - gamma_cols
    long long degree = 0;         // |s_plus| - |w|
    std::vector<int> psi;         // merge of s_plus and s_minus

    friend bool operator==(const CountsBottData&, const CountsBottData&) = default;
};

std::optional<CountsBottData> grassmann_bott_by_counts(const GeneralizedPartition& w,
                                                       const Partition& u, int d);

/// Sign splitting of the strip between w and the reversal of u: a cell (i,j)
/// compares beta at width 1-j against alpha at its row; widths j > 0 always
/// land on the plus side. An empty optional means some cell ties, i.e. the
/// pair is not admissible.
struct SplitDiagram {
    SkewShape shape;                     // w over the reversal of u
    std::vector<Cell> sigma_plus;
    std::vector<Cell> sigma_minus;
    std::vector<int> row_counts;         // plus-side cells per row, length r
    std::vector<int> col_counts;         // minus-side cells per reflected column, length u_1
    long long minus_weight = 0;          // card of the minus side

    long long degree() const;            // |u| - minus_weight
    /// Stable decreasing merge of row_counts and col_counts.
    std::vector<int> psi() const;
};

std::optional<SplitDiagram> split_diagram(const GeneralizedPartition& w, const Partition& u);

/// Cell-level bijection from both sides of the splitting onto the Young
/// diagram of psi, assembled by the stable merge; height increasing.
std::vector<std::pair<Cell, Cell>> split_young_bijection(const SplitDiagram& split);

}  // namespace flagbott
