#include "flagbott/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace flagbott {

namespace {

bool weakly_decreasing(std::span<const int> v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!weakly_decreasing(parts_))
        throw std::invalid_argument("bad-partition: parts must be weakly decreasing");
    if (!parts_.empty() && parts_.back() < 0)
        throw std::invalid_argument("bad-partition: parts must be nonnegative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::vector<int> Partition::padded(std::size_t n) const {
    if (n < parts_.size())
        throw std::invalid_argument("bad-partition: cannot pad below stored length");
    std::vector<int> out = parts_;
    out.resize(n, 0);
    return out;
}

GeneralizedPartition::GeneralizedPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!weakly_decreasing(parts_))
        throw std::invalid_argument("bad-partition: parts must be weakly decreasing");
}

GeneralizedPartition GeneralizedPartition::extend(const Partition& u, std::size_t r) {
    if (u.length() > r)
        throw std::invalid_argument("bad-partition: partition longer than declared length");
    return GeneralizedPartition(u.padded(r));
}

GeneralizedPartition GeneralizedPartition::zero(std::size_t r) {
    return GeneralizedPartition(std::vector<int>(r, 0));
}

long long GeneralizedPartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

GeneralizedPartition GeneralizedPartition::shifted(int m) const {
    std::vector<int> out = parts_;
    for (int& x : out) x += m;
    return GeneralizedPartition(std::move(out));
}

bool GeneralizedPartition::is_partition() const {
    return parts_.empty() || parts_.back() >= 0;
}

Partition GeneralizedPartition::as_partition() const {
    if (!is_partition())
        throw std::invalid_argument("bad-partition: negative parts");
    return Partition(parts_);
}

SkewShape::SkewShape(GeneralizedPartition o, GeneralizedPartition i)
    : outer(std::move(o)), inner(std::move(i)) {
    if (outer.length() != inner.length())
        throw std::invalid_argument("bad-skew-shape: lengths differ");
    for (std::size_t k = 0; k < outer.length(); ++k)
        if (inner.part(k) > outer.part(k))
            throw std::invalid_argument("bad-skew-shape: inner not contained in outer");
}

Partition transpose(const Partition& u) {
    std::vector<int> t(static_cast<std::size_t>(u.first()), 0);
    for (int p : u.parts())
        for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
    return Partition(std::move(t));
}

long long squared_norm(const Partition& u) {
    Partition t = transpose(u);
    long long s = 0;
    for (int x : t.parts()) s += static_cast<long long>(x) * x;
    return s;
}

GeneralizedPartition chi_reversal(const GeneralizedPartition& u) {
    std::vector<int> out(u.parts().rbegin(), u.parts().rend());
    for (int& x : out) x = -x;
    return GeneralizedPartition(std::move(out));
}

namespace {

// Prefix-sum comparison of cI against cJ, padded with zeros.
bool prefix_dominates(long long c_i, const Partition& I, long long c_j, const Partition& J) {
    std::size_t n = std::max(I.length(), J.length());
    long long si = 0, sj = 0;
    for (std::size_t k = 0; k < n; ++k) {
        si += c_i * I.part(k);
        sj += c_j * J.part(k);
        if (si < sj) return false;
    }
    return true;
}

}  // namespace

bool dominates(const Partition& I, const Partition& J) {
    if (I.weight() == J.weight()) return prefix_dominates(1, I, 1, J);
    if (I.is_zero() || J.is_zero())
        throw std::invalid_argument(
            "bad-dominance: zero partition has no order against unequal weight");
    return prefix_dominates(J.weight(), I, I.weight(), J);
}

bool dominance_equivalent(const Partition& I, const Partition& J) {
    return dominates(I, J) && dominates(J, I);
}

Reordering reorder_decreasing(std::span<const int> a) {
    std::size_t n = a.size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(j)]; });
    Reordering out;
    out.sorted.resize(n);
    out.placement.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.sorted[k] = a[static_cast<std::size_t>(order[k])];
        out.placement[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a[i] < a[j]) ++out.inversions;
    return out;
}

std::vector<int> reconstruct_blocks(std::span<const int> a, std::span<const int> s) {
    if (a.size() != s.size())
        throw std::invalid_argument("bad-blocks: value and boundary sequences differ in length");
    for (std::size_t k = 1; k < a.size(); ++k)
        if (a[k - 1] <= a[k])
            throw std::invalid_argument("bad-blocks: values must be strictly decreasing");
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] <= 0) throw std::invalid_argument("bad-blocks: boundaries must be positive");
        if (k > 0 && s[k - 1] >= s[k])
            throw std::invalid_argument("bad-blocks: boundaries must be strictly increasing");
    }
    std::vector<int> out;
    if (!s.empty()) out.reserve(static_cast<std::size_t>(s.back()));
    int prev = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        out.insert(out.end(), static_cast<std::size_t>(s[k] - prev), a[k]);
        prev = s[k];
    }
    return out;
}

std::vector<int> distinct_desc(std::span<const int> v) {
    std::vector<int> out;
    for (int x : v)
        if (out.empty() || out.back() != x) out.push_back(x);
    return out;
}

std::vector<int> distinct_asc(std::span<const int> v) {
    std::vector<int> out(v.begin(), v.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Cell> skew_cells(const SkewShape& shape) {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(std::max(0LL, shape.cell_count())));
    for (std::size_t i = 0; i < shape.rows(); ++i)
        for (int j = shape.inner.part(i) + 1; j <= shape.outer.part(i); ++j)
            cells.push_back({static_cast<int>(i) + 1, j});
    return cells;
}

namespace {

void collect_partitions(long long remaining, int max_len, int max_part, std::vector<int>& cur,
                        std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    if (max_len == 0) return;
    int hi = static_cast<int>(std::min<long long>(max_part, remaining));
    for (int p = hi; p >= 1; --p) {
        cur.push_back(p);
        collect_partitions(remaining - p, max_len - 1, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(long long weight, int max_length, int max_part) {
    std::vector<Partition> out;
    if (weight < 0) return out;
    std::vector<int> cur;
    collect_partitions(weight, max_length, max_part, cur, out);
    return out;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty()) throw std::invalid_argument("bad-int-list: empty entry");
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad-int-list: not an integer: " + std::string(tok));
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    if (text.empty()) return Partition{};
    return Partition(parse_int_list(text));
}

GeneralizedPartition parse_generalized(std::string_view text, std::size_t r) {
    std::vector<int> parts = text.empty() ? std::vector<int>{} : parse_int_list(text);
    if (parts.size() > r)
        throw std::invalid_argument("bad-partition: more parts than declared length");
    if (parts.size() < r && !parts.empty() && parts.back() < 0)
        throw std::invalid_argument("bad-partition: cannot pad negative tail with zeros");
    parts.resize(r, 0);
    return GeneralizedPartition(std::move(parts));
}

std::string format_int_list(std::span<const int> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace flagbott
