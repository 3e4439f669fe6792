#include "pg/qpt.hpp"

#include <bit>

namespace pg {

int qpt_width(int n) { return n <= 0 ? 0 : static_cast<int>(std::bit_width(static_cast<unsigned>(n))); }

QptOps::QptOps(const ParityGame& g, const VertexSet& sub, Player alpha) : alpha_(alpha), shift_(index(alpha))
{
    int count = 0, d = -1;
    sub.for_each([&](int v) {
        d = std::max(d, g.priority(v));
        if (parity(g.priority(v)) == alpha) ++count;
    });
    k_ = qpt_width(count);
    top_level_ = level(d + shift_);
    count_.assign(static_cast<std::size_t>(std::max(0, top_level_ + 1)), 0);
    sub.for_each([&](int v) {
        const int x = g.priority(v) + shift_;
        if ((x & 1) == 0) ++count_[x];
    });
}

bool QptOps::on_top(int p)
{
    const int x = p + shift_;
    if ((x & 1) || x >= static_cast<int>(count_.size()) || count_[x] == 0) return false;
    return --count_[x] < k_;
}

QptOps::QptOps(Player alpha, int k, int max_priority)
    : alpha_(alpha), k_(k), shift_(index(alpha)), top_level_(level(max_priority + index(alpha)))
{
}

void QptOps::fill_zeros(std::span<int> out, int from, int lv) const
{
    const int k = k_;
    for (; lv >= 0 && from < k; lv -= 2)
        for (int n = cap(lv); n > 0 && from < k; --n) out[from++] = lv + 1;
    for (; from < k; ++from) out[from] = kBottom;
}

bool QptOps::prog(std::span<const int> m, int p, std::span<int> out) const
{
    const int k = k_;
    p += shift_;

    if (p & 1) {
        // Not counted: keep the part above p, then the least continuation below it.
        int q = 0;
        while (q < k && m[q] != kBottom && level(m[q]) > p) out[q] = m[q], ++q;
        if (q == 0) {
            std::fill(out.begin(), out.end(), kBottom);
            return false;
        }
        fill_zeros(out, q, p - 1);
        return false;
    }

    for (int lv = p;; lv += 2) {
        if (lv > top_level_) return true;
        int q = 0;
        while (q < k && m[q] != kBottom && level(m[q]) > lv) ++q;
        int e = q;
        while (e < k && m[e] != kBottom && level(m[e]) == lv) ++e;
        const int room = std::min(k - q, cap(lv));
        const int len = e - q;
        for (int i = 0; i < q; ++i) out[i] = m[i];
        if (len < room) {
            // Append a 1 and pad with 0s: the least string above s at this level.
            for (int i = q; i < e; ++i) out[i] = m[i];
            out[e] = lv;
            int i = e + 1;
            for (; i < q + room; ++i) out[i] = lv + 1;
            fill_zeros(out, i, lv - 2);
            return false;
        }
        // No room: the least larger string is the longest prefix followed by a 0
        // in s that fits. A bound lowered since s was written can cut s short.
        int t = std::min(len, room + 1);
        while (t > 0 && (m[q + t - 1] & 1) == 0) --t;
        if (t == 0) continue;
        const int keep = q + t - 1;
        for (int i = q; i < keep; ++i) out[i] = m[i];
        fill_zeros(out, keep, lv - 2);
        return false;
    }
}

int QptOps::compare(std::span<const int> a, std::span<const int> b) const
{
    for (int i = 0; i < k_; ++i) {
        const int x = rank(a[i]), y = rank(b[i]);
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint64_t> qpt_stretches(const QptMeasure& m)
{
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < m.entry.size(); ++i)
        if (m.entry[i] != QptOps::kBottom) out.push_back(std::uint64_t{1} << i);
    return out;
}

QptMeasure qpt_measure(const QptTable& t, int v)
{
    QptMeasure m;
    m.top = t.is_top(v);
    if (m.top) return m;
    auto raw = t.measure(v);
    const int k = static_cast<int>(raw.size());
    const int shift = index(t.alpha());
    m.entry.resize(k);
    for (int i = 0; i < k; ++i) {
        const int x = raw[k - 1 - i];
        m.entry[i] = x == QptOps::kBottom ? x : x - shift;
    }
    return m;
}

int qpt_compare(const QptMeasure& a, const QptMeasure& b)
{
    if (a.top || b.top) return (a.top ? 1 : 0) - (b.top ? 1 : 0);
    const std::size_t k = std::max(a.entry.size(), b.entry.size());
    auto at = [](const QptMeasure& m, std::size_t i) {
        return i < m.entry.size() ? m.entry[i] : QptOps::kBottom;
    };
    for (std::size_t i = k; i-- > 0;) {
        const int x = QptOps::rank(at(a, i)), y = QptOps::rank(at(b, i));
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

Solution qpt_solve(const ParityGame& game, const VertexSet& subgame, const LiftingOptions& opts)
{
    return solve_dual(game, subgame, [&](const VertexSet& sub, Player alpha) { return QptOps(game, sub, alpha); }, opts);
}

}  // namespace pg
