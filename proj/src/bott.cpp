#include "flagbott/bott.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flagbott {

namespace {

std::vector<int> shifted_by_index(std::span<const int> a) {
    std::vector<int> b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = a[i] - static_cast<int>(i + 1);
    return b;
}

}  // namespace

bool is_admissible(std::span<const int> a) {
    std::vector<int> b = shifted_by_index(a);
    std::sort(b.begin(), b.end());
    return std::adjacent_find(b.begin(), b.end()) == b.end();
}

std::optional<BottData> bott(std::span<const int> a) {
    std::vector<int> b = shifted_by_index(a);
    Reordering re = reorder_decreasing(b);
    for (std::size_t i = 1; i < re.sorted.size(); ++i)
        if (re.sorted[i - 1] == re.sorted[i]) return std::nullopt;
    BottData out;
    out.degree = re.inversions;
    out.psi.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.psi[i] = re.sorted[i] + static_cast<int>(i + 1);
    return out;
}

FlagShape::FlagShape(int d_, std::vector<int> steps_) : d(d_), steps(std::move(steps_)) {
    if (d < 1) throw std::invalid_argument("bad-flag-shape: dimension must be positive");
    if (steps.empty()) throw std::invalid_argument("bad-flag-shape: no steps");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] < 1 || steps[i] > d)
            throw std::invalid_argument("bad-flag-shape: step out of range");
        if (i > 0 && steps[i - 1] >= steps[i])
            throw std::invalid_argument("bad-flag-shape: steps must be strictly increasing");
    }
}

long long FlagShape::dim() const {
    long long total = 0;
    int prev = 0;
    for (int s : steps) {
        total += static_cast<long long>(s - prev) * (d - s);
        prev = s;
    }
    return total;
}

std::vector<int> FlagShape::block_expand(std::span<const int> a) const {
    if (a.size() != steps.size())
        throw std::invalid_argument("dimension-mismatch: one exponent per flag step required");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(d));
    int prev = 0;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        out.insert(out.end(), static_cast<std::size_t>(steps[k] - prev), a[k]);
        prev = steps[k];
    }
    out.resize(static_cast<std::size_t>(d), 0);
    return out;
}

std::optional<BottData> bott_partial(const FlagShape& flag, std::span<const int> a) {
    return bott(flag.block_expand(a));
}

std::optional<BottData> grassmann_bott(const GeneralizedPartition& u,
                                       const GeneralizedPartition& v) {
    std::vector<int> a = u.parts();
    a.insert(a.end(), v.parts().begin(), v.parts().end());
    return bott(a);
}

std::optional<CountsBottData> grassmann_bott_by_counts(const GeneralizedPartition& w,
                                                       const Partition& u, int d) {
    const int r = static_cast<int>(w.length());
    if (d <= r) throw std::invalid_argument("dimension-mismatch: need d > length of w");
    Partition tu = transpose(u);
    if (static_cast<int>(tu.length()) > d - r)
        throw std::invalid_argument("dimension-mismatch: transpose of u exceeds d - r entries");

    CountsBottData out;
    out.alpha.resize(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) out.alpha[static_cast<std::size_t>(i)] = w.part(static_cast<std::size_t>(i)) - (i + 1);
    out.beta.resize(static_cast<std::size_t>(d - r));
    for (int j = 0; j < d - r; ++j)
        out.beta[static_cast<std::size_t>(j)] = tu.part(static_cast<std::size_t>(j)) - (r + j + 1);

    out.gamma_rows.assign(static_cast<std::size_t>(r), 0);
    out.gamma_cols.assign(static_cast<std::size_t>(d - r), 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < d - r; ++j) {
            int ai = out.alpha[static_cast<std::size_t>(i)];
            int bj = out.beta[static_cast<std::size_t>(j)];
            if (ai == bj) return std::nullopt;
            if (ai < bj) {
                ++out.gamma_rows[static_cast<std::size_t>(i)];
                ++out.gamma_cols[static_cast<std::size_t>(j)];
            }
        }

    out.s_plus.resize(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        out.s_plus[static_cast<std::size_t>(i)] =
            w.part(static_cast<std::size_t>(i)) + out.gamma_rows[static_cast<std::size_t>(i)];
    out.s_minus.resize(static_cast<std::size_t>(d - r));
    for (int j = 0; j < d - r; ++j)
        out.s_minus[static_cast<std::size_t>(j)] =
            tu.part(static_cast<std::size_t>(j)) - out.gamma_cols[static_cast<std::size_t>(j)];

    out.degree = std::accumulate(out.s_plus.begin(), out.s_plus.end(), 0LL) - w.weight();

    // both sides are weakly decreasing for admissible input, so a plain
    // two-way merge realizes the decreasing rearrangement
    out.psi.resize(static_cast<std::size_t>(d));
    std::merge(out.s_plus.begin(), out.s_plus.end(), out.s_minus.begin(), out.s_minus.end(),
               out.psi.begin(), std::greater<int>());
    return out;
}

long long SplitDiagram::degree() const {
    // the inner shape is the reversal of u, so |u| is its negated weight
    return -shape.inner.weight() - minus_weight;
}

std::vector<int> SplitDiagram::psi() const {
    std::vector<int> out(row_counts.size() + col_counts.size());
    std::merge(row_counts.begin(), row_counts.end(), col_counts.begin(), col_counts.end(),
               out.begin(), std::greater<int>());
    return out;
}

std::optional<SplitDiagram> split_diagram(const GeneralizedPartition& w, const Partition& u) {
    const int r = static_cast<int>(w.length());
    if (static_cast<int>(u.length()) > r)
        throw std::invalid_argument("dimension-mismatch: u has more rows than w");
    GeneralizedPartition inner = chi_reversal(GeneralizedPartition::extend(u, static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i)
        if (inner.part(static_cast<std::size_t>(i)) > w.part(static_cast<std::size_t>(i)))
            throw std::invalid_argument("bad-skew-shape: reversal of u not contained in w");

    Partition tu = transpose(u);
    SplitDiagram split{SkewShape{w, inner}, {}, {}, {}, {}, 0};
    split.row_counts.assign(static_cast<std::size_t>(r), 0);
    split.col_counts.assign(static_cast<std::size_t>(u.first()), 0);

    for (int i = 1; i <= r; ++i) {
        const int alpha = w.part(static_cast<std::size_t>(i - 1)) - i;
        for (int j = inner.part(static_cast<std::size_t>(i - 1)) + 1;
             j <= w.part(static_cast<std::size_t>(i - 1)); ++j) {
            bool plus;
            if (j > 0) {
                plus = true;  // beta at non-positive width is +infinity
            } else {
                const int beta = tu.part(static_cast<std::size_t>(-j)) - (r + 1 - j);
                if (beta == alpha) return std::nullopt;
                plus = beta > alpha;
            }
            if (plus) {
                split.sigma_plus.push_back({i, j});
                ++split.row_counts[static_cast<std::size_t>(i - 1)];
            } else {
                split.sigma_minus.push_back({i, j});
                ++split.col_counts[static_cast<std::size_t>(-j)];  // reflected width 1 - j
                ++split.minus_weight;
            }
        }
    }
    return split;
}

std::vector<std::pair<Cell, Cell>> split_young_bijection(const SplitDiagram& split) {
    const std::size_t r = split.row_counts.size();
    const std::size_t c = split.col_counts.size();

    // stable decreasing order over rows first, then reflected columns
    std::vector<std::size_t> order(r + c);
    std::iota(order.begin(), order.end(), 0);
    auto value = [&](std::size_t s) {
        return s < r ? split.row_counts[s] : split.col_counts[s - r];
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value(a) > value(b); });

    // group the cells by source row / source column
    std::vector<std::vector<Cell>> by_row(r), by_col(c);
    for (const Cell& x : split.sigma_plus) by_row[static_cast<std::size_t>(x.row - 1)].push_back(x);
    for (const Cell& x : split.sigma_minus) by_col[static_cast<std::size_t>(-x.col)].push_back(x);
    for (auto& v : by_row) std::sort(v.begin(), v.end(), [](Cell a, Cell b) { return a.col < b.col; });
    for (auto& v : by_col) std::sort(v.begin(), v.end(), [](Cell a, Cell b) { return a.row < b.row; });

    std::vector<std::pair<Cell, Cell>> out;
    out.reserve(split.sigma_plus.size() + split.sigma_minus.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& group = order[k] < r ? by_row[order[k]] : by_col[order[k] - r];
        int width = 0;
        for (const Cell& x : group) out.push_back({x, Cell{static_cast<int>(k) + 1, ++width}});
    }
    return out;
}

}  // namespace flagbott
