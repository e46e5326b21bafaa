#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flagbott {

/// Cell of a diagram. Height (row) grows downwards, width (col) to the right.
/// Widths may be zero or negative inside generalized diagrams.
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of nonnegative integers. Canonical form stores
/// no trailing zeros; the empty sequence is the zero partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool is_zero() const { return parts_.empty(); }
    long long weight() const;

    /// Part at 0-based index; 0 beyond the stored length.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int first() const { return part(0); }

    std::vector<int> padded(std::size_t n) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Weakly decreasing integer sequence of explicit declared length; negative
/// parts allowed. Two values with equal parts but different length differ.
/// Length 0 (the empty sequence) is tolerated as a degenerate value.
class GeneralizedPartition {
public:
    GeneralizedPartition() = default;
    explicit GeneralizedPartition(std::vector<int> parts);

    /// Partition extended to declared length r by trailing zeros.
    static GeneralizedPartition extend(const Partition& u, std::size_t r);
    static GeneralizedPartition zero(std::size_t r);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    long long weight() const;
    int part(std::size_t i) const { return parts_[i]; }
    int last() const { return parts_.back(); }

    /// Adds a constant to every part (determinant twist bookkeeping).
    GeneralizedPartition shifted(int m) const;
    /// True when all parts are nonnegative.
    bool is_partition() const;
    /// Drops trailing zeros, keeping the nonnegative prefix as a Partition.
    Partition as_partition() const;

    friend bool operator==(const GeneralizedPartition&, const GeneralizedPartition&) = default;
    friend auto operator<=>(const GeneralizedPartition&, const GeneralizedPartition&) = default;

private:
    std::vector<int> parts_;
};

/// Skew shape outer/inner of a common declared length. The cell set
/// {(i,j) : inner_i < j <= outer_i} is the finite strip of the two infinite
/// diagrams; it is what every operation here works with.
struct SkewShape {
    GeneralizedPartition outer;
    GeneralizedPartition inner;

    SkewShape(GeneralizedPartition outer, GeneralizedPartition inner);

    std::size_t rows() const { return outer.length(); }
    long long cell_count() const { return outer.weight() - inner.weight(); }
};

Partition transpose(const Partition& u);

/// Sum of the squared parts of the transpose.
long long squared_norm(const Partition& u);

/// (u_1,...,u_r) -> (-u_r,...,-u_1). Involution matching dualization.
GeneralizedPartition chi_reversal(const GeneralizedPartition& u);

/// Dominance order I >= J: prefix sums of I dominate those of J when the
/// weights agree; for unequal weights the comparison is |J|*I against |I|*J,
/// in integers. Comparing a zero partition across unequal weights is
/// rejected as undefined.
bool dominates(const Partition& I, const Partition& J);
bool dominance_equivalent(const Partition& I, const Partition& J);

struct Reordering {
    std::vector<int> sorted;      // weakly decreasing rearrangement
    long long inversions = 0;     // card{(i,j) : i<j, a[i] < a[j]}
    std::vector<int> placement;   // placement[i] = index of element i in sorted
};

/// Stable decreasing rearrangement: equal entries keep their relative order,
/// which realizes the shortest permutation.
Reordering reorder_decreasing(std::span<const int> a);

/// Block expansion: value a_k repeated s_k - s_{k-1} times (s_0 = 0).
/// Requires a strictly decreasing and s strictly increasing positive, of
/// equal length. Result has length s.back().
std::vector<int> reconstruct_blocks(std::span<const int> a, std::span<const int> s);

/// Distinct values of a weakly monotone sequence, decreasing / increasing.
std::vector<int> distinct_desc(std::span<const int> weakly_decreasing);
std::vector<int> distinct_asc(std::span<const int> values);

/// Cells (i,j) with inner_i < j <= outer_i, rows top to bottom, columns left
/// to right. Row indices are 1-based.
std::vector<Cell> skew_cells(const SkewShape& shape);

/// All partitions of the given weight with at most max_length rows and parts
/// at most max_part, in lexicographically decreasing order.
std::vector<Partition> partitions_of(long long weight, int max_length, int max_part);

/// Canonical text form: comma-separated parts, e.g. "5,4,3,2,-1,-2".
/// The empty string and "0" both denote the zero partition.
Partition parse_partition(std::string_view text);
GeneralizedPartition parse_generalized(std::string_view text, std::size_t r);
std::vector<int> parse_int_list(std::string_view text);
std::string format_int_list(std::span<const int> values);

}  // namespace flagbott
