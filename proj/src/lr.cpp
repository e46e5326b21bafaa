#include "flagbott/lr.hpp"

#include <algorithm>
#include <stdexcept>

#include "flagbott/parallel.hpp"

namespace flagbott {

bool lr_order_less(Cell x, Cell y) {
    if (x.row != y.row) return x.row < y.row;
    return x.col > y.col;
}

ShapeIndex make_shape_index(const SkewShape& shape) {
    ShapeIndex idx;
    idx.outer = shape.outer.parts();
    idx.inner = shape.inner.parts();
    idx.start.resize(idx.outer.size());
    int offset = 0;
    for (std::size_t i = 0; i < idx.outer.size(); ++i) {
        idx.start[i] = offset;
        offset += idx.outer[i] - idx.inner[i];
    }
    idx.cells.reserve(static_cast<std::size_t>(offset));
    for (std::size_t i = 0; i < idx.outer.size(); ++i)
        for (int j = idx.outer[i]; j > idx.inner[i]; --j)
            idx.cells.push_back({static_cast<int>(i) + 1, j});
    return idx;
}

bool check_classical(const ShapeIndex& idx, std::span<const int> c1,
                     std::span<const int> content, LRScratch& scratch) {
    const std::size_t n = idx.cells.size();
    const int m = static_cast<int>(content.size());
    scratch.counts.assign(content.size(), 0);
    for (std::size_t t = 0; t < n; ++t) {
        const Cell x = idx.cells[t];
        const int k = c1[t];
        if (k < 1 || k > m) return false;
        // row-weak: right neighbour precedes x in reading order
        if (x.col < idx.outer[static_cast<std::size_t>(x.row - 1)] && c1[t] > c1[t - 1])
            return false;
        // column-strict
        int above = idx.index_of(x.row - 1, x.col);
        if (above >= 0 && c1[static_cast<std::size_t>(above)] >= k) return false;
        // prefix counts stay weakly decreasing in the value
        int& cnt = scratch.counts[static_cast<std::size_t>(k - 1)];
        ++cnt;
        if (cnt > content[static_cast<std::size_t>(k - 1)]) return false;
        if (k >= 2 && cnt > scratch.counts[static_cast<std::size_t>(k - 2)]) return false;
    }
    return true;
}

bool condition_young(const ShapeIndex& idx, std::span<const int> c1, std::span<const int> c2,
                     std::span<const int> content, LRScratch& scratch) {
    const std::size_t n = idx.cells.size();
    const int m = static_cast<int>(content.size());
    scratch.row_len.assign(content.size(), 0);
    for (std::size_t t = 0; t < n; ++t) {
        const int k = c1[t];
        const int c = c2[t];
        if (k < 1 || k > m) return false;
        // growing one cell at a time, the prefix stays a Young diagram iff
        // the new cell extends its row by one and does not overtake the row above
        if (c != scratch.row_len[static_cast<std::size_t>(k - 1)] + 1) return false;
        if (k >= 2 && scratch.row_len[static_cast<std::size_t>(k - 2)] < c) return false;
        scratch.row_len[static_cast<std::size_t>(k - 1)] = c;
    }
    return true;
}

bool check_eight(const ShapeIndex& idx, std::span<const int> c1, std::span<const int> c2,
                 std::span<const int> content, LRScratch& scratch) {
    const std::size_t n = idx.cells.size();
    const int m = static_cast<int>(content.size());

    // offsets of the content diagram's rows
    scratch.counts.assign(content.size() + 1, 0);
    for (std::size_t k = 1; k <= content.size(); ++k)
        scratch.counts[k] = scratch.counts[k - 1] + content[k - 1];
    const std::vector<int>& off = scratch.counts;

    scratch.b_of.assign(n, -1);
    for (std::size_t t = 0; t < n; ++t) {
        const int k = c1[t];
        const int c = c2[t];
        if (k < 1 || k > m) return false;
        if (c < 1 || c > content[static_cast<std::size_t>(k - 1)]) return false;
        int& slot = scratch.b_of[static_cast<std::size_t>(off[static_cast<std::size_t>(k - 1)] + c - 1)];
        if (slot >= 0) return false;
        slot = static_cast<int>(t);
    }

    // strip-side conditions, adjacent cells suffice on contiguous rows/columns
    for (std::size_t t = 0; t < n; ++t) {
        const Cell x = idx.cells[t];
        if (x.col < idx.outer[static_cast<std::size_t>(x.row - 1)]) {
            const std::size_t right = t - 1;
            if (c1[t] > c1[right]) return false;   // c1 weakly follows widths
            if (c2[t] <= c2[right]) return false;  // c2 strictly reverses widths
        }
        int above = idx.index_of(x.row - 1, x.col);
        if (above >= 0) {
            const std::size_t a = static_cast<std::size_t>(above);
            if (c1[a] >= c1[t]) return false;  // c1 strictly follows heights
            if (c2[a] < c2[t]) return false;   // c2 weakly reverses heights
        }
    }

    // inverse-side conditions on the content diagram
    for (int k = 1; k <= m; ++k) {
        for (int c = 1; c <= content[static_cast<std::size_t>(k - 1)]; ++c) {
            const Cell b = idx.cells[static_cast<std::size_t>(
                scratch.b_of[static_cast<std::size_t>(off[static_cast<std::size_t>(k - 1)] + c - 1)])];
            if (c < content[static_cast<std::size_t>(k - 1)]) {
                const Cell br = idx.cells[static_cast<std::size_t>(
                    scratch.b_of[static_cast<std::size_t>(off[static_cast<std::size_t>(k - 1)] + c)])];
                if (b.row > br.row) return false;   // b1 weakly follows widths
                if (b.col <= br.col) return false;  // b2 strictly reverses widths
            }
            if (k < m && c <= content[static_cast<std::size_t>(k)]) {
                const Cell bd = idx.cells[static_cast<std::size_t>(
                    scratch.b_of[static_cast<std::size_t>(off[static_cast<std::size_t>(k)] + c - 1)])];
                if (b.row >= bd.row) return false;  // b1 strictly follows heights
                if (b.col < bd.col) return false;   // b2 weakly reverses heights
            }
        }
    }
    return true;
}

LRFilling::LRFilling(SkewShape shape, Partition content, std::vector<int> c1, std::vector<int> c2)
    : shape_(std::move(shape)),
      content_(std::move(content)),
      index_(make_shape_index(shape_)),
      c1_(std::move(c1)),
      c2_(std::move(c2)) {
    const std::size_t n = index_.cells.size();
    if (c1_.size() != n || c2_.size() != n)
        throw std::invalid_argument("bad-filling: numbering length mismatch");
    if (static_cast<long long>(n) != content_.weight())
        throw std::invalid_argument("bad-filling: cell count differs from content weight");
    std::vector<int> counts(content_.length(), 0);
    for (int k : c1_) {
        if (k < 1 || k > static_cast<int>(content_.length()))
            throw std::invalid_argument("bad-filling: value out of range");
        ++counts[static_cast<std::size_t>(k - 1)];
    }
    for (std::size_t k = 0; k < counts.size(); ++k)
        if (counts[k] != content_.part(k))
            throw std::invalid_argument("bad-filling: content condition violated");
}

LRFilling LRFilling::canonical(const SkewShape& shape, const Partition& content,
                               std::vector<int> c1) {
    std::vector<int> counts(content.length(), 0);
    std::vector<int> c2(c1.size(), 0);
    for (std::size_t t = 0; t < c1.size(); ++t) {
        if (c1[t] < 1 || c1[t] > static_cast<int>(content.length()))
            throw std::invalid_argument("bad-filling: value out of range");
        c2[t] = ++counts[static_cast<std::size_t>(c1[t] - 1)];
    }
    return LRFilling(shape, content, std::move(c1), std::move(c2));
}

std::vector<std::pair<Cell, Cell>> LRFilling::inverse_map() const {
    std::vector<std::pair<Cell, Cell>> out;
    out.reserve(cells().size());
    for (std::size_t t = 0; t < cells().size(); ++t)
        out.push_back({Cell{c1_[t], c2_[t]}, cells()[t]});
    std::sort(out.begin(), out.end());
    return out;
}

bool check_classical(const LRFilling& f) {
    LRScratch s;
    return check_classical(f.index(), f.c1(), f.content().parts(), s);
}

bool condition_young(const LRFilling& f) {
    LRScratch s;
    return condition_young(f.index(), f.c1(), f.c2(), f.content().parts(), s);
}

bool check_eight(const LRFilling& f) {
    LRScratch s;
    return check_eight(f.index(), f.c1(), f.c2(), f.content().parts(), s);
}

namespace {

// Fills cells in reading order. Prefix pruning is sound here: the row-weak
// bound reads the right neighbour, the column-strict bound the cell above,
// and the running value counts realize the prefix condition exactly.
template <typename Emit>
void enumerate_numberings(const ShapeIndex& idx, std::span<const int> content, Emit&& emit) {
    const std::size_t n = idx.cells.size();
    const int m = static_cast<int>(content.size());
    std::vector<int> c1(n), c2(n), counts(content.size(), 0);

    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == n) {
            emit(std::span<const int>(c1), std::span<const int>(c2));
            return;
        }
        const Cell x = idx.cells[t];
        int lo = 1;
        int hi = m;
        if (x.col < idx.outer[static_cast<std::size_t>(x.row - 1)]) hi = c1[t - 1];
        int above = idx.index_of(x.row - 1, x.col);
        if (above >= 0) lo = c1[static_cast<std::size_t>(above)] + 1;
        for (int k = lo; k <= hi; ++k) {
            int& cnt = counts[static_cast<std::size_t>(k - 1)];
            if (cnt >= content[static_cast<std::size_t>(k - 1)]) continue;
            if (k >= 2 && cnt >= counts[static_cast<std::size_t>(k - 2)]) continue;
            ++cnt;
            c1[t] = k;
            c2[t] = cnt;
            self(self, t + 1);
            --cnt;
        }
    };
    rec(rec, 0);
}

}  // namespace

long long count_fillings(const SkewShape& shape, const Partition& content) {
    if (shape.cell_count() != content.weight())
        throw std::invalid_argument("bad-filling: cell count differs from content weight");
    ShapeIndex idx = make_shape_index(shape);
    long long count = 0;
    enumerate_numberings(idx, content.parts(),
                         [&](std::span<const int>, std::span<const int>) { ++count; });
    return count;
}

std::vector<LRFilling> enumerate_fillings(const SkewShape& shape, const Partition& content) {
    if (shape.cell_count() != content.weight())
        throw std::invalid_argument("bad-filling: cell count differs from content weight");
    ShapeIndex idx = make_shape_index(shape);
    std::vector<LRFilling> out;
    enumerate_numberings(idx, content.parts(), [&](std::span<const int> c1, std::span<const int> c2) {
        out.push_back(LRFilling(shape, content, std::vector<int>(c1.begin(), c1.end()),
                                std::vector<int>(c2.begin(), c2.end())));
    });
    return out;
}

void SchurDecomposition::add(const std::vector<int>& parts, long long mult) {
    if (parts.size() != r_)
        throw std::invalid_argument("bad-decomposition: term length differs from declared length");
    if (mult <= 0) throw std::invalid_argument("bad-decomposition: multiplicity must be positive");
    terms_[parts] += mult;
}

long long SchurDecomposition::multiplicity(const std::vector<int>& parts) const {
    auto it = terms_.find(parts);
    return it == terms_.end() ? 0 : it->second;
}

namespace {

// Outer shapes w >= u, weakly decreasing, |w| = |u| + add, in lexicographically
// decreasing order. The per-row overhang is only bounded by the remaining
// weight and the weak decrease of w.
std::vector<std::vector<int>> outer_candidates(const std::vector<int>& u, long long add) {
    std::vector<std::vector<int>> out;
    const std::size_t r = u.size();
    std::vector<int> w(u);
    auto rec = [&](auto&& self, std::size_t i, long long remaining) -> void {
        if (i == r) {
            if (remaining == 0) out.push_back(w);
            return;
        }
        long long cap = remaining;
        if (i > 0) cap = std::min<long long>(cap, w[i - 1] - u[i]);
        for (long long o = cap; o >= 0; --o) {
            w[i] = u[i] + static_cast<int>(o);
            self(self, i + 1, remaining - o);
        }
        w[i] = u[i];
    };
    rec(rec, 0, add);
    return out;
}

}  // namespace

std::vector<LRTerm> lr_terms(const GeneralizedPartition& u, const Partition& uprime,
                             bool keep_fillings) {
    std::vector<LRTerm> out;
    auto cands = outer_candidates(u.parts(), uprime.weight());
    for (auto& wparts : cands) {
        SkewShape shape{GeneralizedPartition(wparts), u};
        if (keep_fillings) {
            auto fillings = enumerate_fillings(shape, uprime);
            if (fillings.empty()) continue;
            LRTerm term;
            term.outer = GeneralizedPartition(wparts);
            term.multiplicity = static_cast<long long>(fillings.size());
            term.fillings = std::move(fillings);
            out.push_back(std::move(term));
        } else {
            long long c = count_fillings(shape, uprime);
            if (c == 0) continue;
            out.push_back({GeneralizedPartition(wparts), c, {}});
        }
    }
    return out;
}

SchurDecomposition lr_product(const GeneralizedPartition& u, const Partition& uprime) {
    auto cands = outer_candidates(u.parts(), uprime.weight());
    std::vector<long long> mult(cands.size(), 0);
#pragma omp parallel for schedule(dynamic) num_threads(max_threads())
    for (long long i = 0; i < static_cast<long long>(cands.size()); ++i) {
        SkewShape shape{GeneralizedPartition(cands[static_cast<std::size_t>(i)]), u};
        mult[static_cast<std::size_t>(i)] = count_fillings(shape, uprime);
    }
    SchurDecomposition dec(u.length());
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (mult[i] > 0) dec.add(cands[i], mult[i]);
    return dec;
}

SchurDecomposition lr_product_serial(const GeneralizedPartition& u, const Partition& uprime) {
    SchurDecomposition dec(u.length());
    for (const auto& wparts : outer_candidates(u.parts(), uprime.weight())) {
        SkewShape shape{GeneralizedPartition(wparts), u};
        long long c = count_fillings(shape, uprime);
        if (c > 0) dec.add(wparts, c);
    }
    return dec;
}

bool is_height_increasing(std::span<const std::pair<Cell, Cell>> mapping) {
    for (const auto& [from, to] : mapping)
        if (to.row < from.row) return false;
    return true;
}

std::vector<SkewShape> reduced_skew_shapes(int max_cells) {
    std::vector<SkewShape> out;
    std::vector<int> inner, outer;
    // rows grow downwards; consecutive rows must touch or overlap in columns
    // (inner_i <= outer_{i+1}) so that no column stays uncovered
    auto rec = [&](auto&& self, int used) -> void {
        const std::size_t i = outer.size();
        const int budget = max_cells - used;
        if (budget == 0) {
            return;
        }
        const int outer_hi = i == 0 ? max_cells : outer[i - 1];
        const int outer_lo = i == 0 ? 1 : std::max(1, inner[i - 1]);
        for (int o = outer_hi; o >= outer_lo; --o) {
            const int inner_hi = std::min(i == 0 ? o - 1 : inner[i - 1], o - 1);
            for (int in = inner_hi; in >= 0; --in) {
                if (o - in > budget) continue;
                outer.push_back(o);
                inner.push_back(in);
                if (in == 0)
                    out.push_back(SkewShape{GeneralizedPartition(outer), GeneralizedPartition(inner)});
                self(self, used + o - in);
                outer.pop_back();
                inner.pop_back();
            }
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace flagbott
