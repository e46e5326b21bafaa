#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "flagbott/partition.hpp"

namespace flagbott {

/// Reading order on skew-strip cells: by height, and right to left within a
/// row. x strictly before y.
bool lr_order_less(Cell x, Cell y);

/// Skew strip with per-row offsets for O(1) cell lookup. Cells are stored in
/// reading order.
struct ShapeIndex {
    std::vector<int> outer, inner;  // length r
    std::vector<int> start;         // index of the first cell of each row
    std::vector<Cell> cells;

    /// Index into cells, or -1 when (row, col) is not in the strip. row 1-based.
    int index_of(int row, int col) const {
        if (row < 1 || row > static_cast<int>(outer.size())) return -1;
        std::size_t i = static_cast<std::size_t>(row - 1);
        if (col <= inner[i] || col > outer[i]) return -1;
        return start[i] + (outer[i] - col);
    }
};

ShapeIndex make_shape_index(const SkewShape& shape);

/// Reusable workspace for the numbering checks.
struct LRScratch {
    std::vector<int> counts;
    std::vector<int> row_len;
    std::vector<int> b_of;
};

/// Column-strict, row-weak and prefix-count conditions on c1 alone.
bool check_classical(const ShapeIndex& idx, std::span<const int> c1,
                     std::span<const int> content, LRScratch& scratch);

/// Every reading-order prefix of c-images forms a Young diagram.
bool condition_young(const ShapeIndex& idx, std::span<const int> c1, std::span<const int> c2,
                     std::span<const int> content, LRScratch& scratch);

/// The eight symmetric order conditions on c = (c1,c2) and its inverse.
/// Requires (c1,c2) bijective onto the content's Young diagram; a
/// non-bijective numbering fails.
bool check_eight(const ShapeIndex& idx, std::span<const int> c1, std::span<const int> c2,
                 std::span<const int> content, LRScratch& scratch);

/// Content-respecting numbering of a skew strip. c1/c2 run parallel to the
/// reading-order cell list. canonical() derives c2 as the running occurrence
/// index of each value; the plain constructor accepts any candidate c2.
class LRFilling {
public:
    LRFilling(SkewShape shape, Partition content, std::vector<int> c1, std::vector<int> c2);
    static LRFilling canonical(const SkewShape& shape, const Partition& content,
                               std::vector<int> c1);

    const SkewShape& shape() const { return shape_; }
    const Partition& content() const { return content_; }
    const ShapeIndex& index() const { return index_; }
    const std::vector<Cell>& cells() const { return index_.cells; }
    const std::vector<int>& c1() const { return c1_; }
    const std::vector<int>& c2() const { return c2_; }

    /// Inverse of (c1,c2) as an explicit map Y(content) -> cells.
    std::vector<std::pair<Cell, Cell>> inverse_map() const;

private:
    SkewShape shape_;
    Partition content_;
    ShapeIndex index_;
    std::vector<int> c1_, c2_;
};

bool check_classical(const LRFilling& f);
bool condition_young(const LRFilling& f);
bool check_eight(const LRFilling& f);

/// Number of numberings of the strip with the given content satisfying the
/// LR rules. Cell count must equal the content weight.
long long count_fillings(const SkewShape& shape, const Partition& content);

/// All LR fillings, deterministic order (c1 reading words, lexicographic).
std::vector<LRFilling> enumerate_fillings(const SkewShape& shape, const Partition& content);

/// Multiset of generalized partitions of a common declared length, terms
/// sorted lexicographically descending.
class SchurDecomposition {
public:
    using TermMap = std::map<std::vector<int>, long long, std::greater<std::vector<int>>>;

    explicit SchurDecomposition(std::size_t r) : r_(r) {}

    std::size_t r() const { return r_; }
    void add(const std::vector<int>& parts, long long mult);
    const TermMap& terms() const { return terms_; }
    long long multiplicity(const std::vector<int>& parts) const;
    long long term_count() const { return static_cast<long long>(terms_.size()); }
    bool empty() const { return terms_.empty(); }

    friend bool operator==(const SchurDecomposition&, const SchurDecomposition&) = default;

private:
    std::size_t r_;
    TermMap terms_;
};

struct LRTerm {
    GeneralizedPartition outer;
    long long multiplicity = 0;
    std::vector<LRFilling> fillings;  // populated on request only
};

/// Expansion of the strip extensions of u by content u': all outer shapes w
/// containing u with the filling count of w/u as multiplicity.
std::vector<LRTerm> lr_terms(const GeneralizedPartition& u, const Partition& uprime,
                             bool keep_fillings);

/// Tensor-product decomposition at declared length u.length(). OpenMP kernel.
SchurDecomposition lr_product(const GeneralizedPartition& u, const Partition& uprime);
/// Reference implementation, single pass, no parallelism.
SchurDecomposition lr_product_serial(const GeneralizedPartition& u, const Partition& uprime);

/// True when every target height is at least the source height.
bool is_height_increasing(std::span<const std::pair<Cell, Cell>> mapping);

/// One representative per translation class of skew shapes with 1..max_cells
/// cells: every row nonempty, bottom row starting at column 1, no uncovered
/// column. The numbering conditions only see relative order of heights and
/// widths, so these representatives exhaust all skew-shape behaviour.
std::vector<SkewShape> reduced_skew_shapes(int max_cells);

}  // namespace flagbott
