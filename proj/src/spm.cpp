#include "pg/spm.hpp"

#include <sstream>

namespace pg {

SpmOps::SpmOps(const ParityGame& g, const VertexSet& sub, Player alpha, bool lower_caps)
    : alpha_(alpha), lower_caps_(lower_caps)
{
    int d = -1;
    sub.for_each([&](int v) { d = std::max(d, g.priority(v)); });
    const int a = index(alpha);
    caps_.assign(d >= a ? static_cast<std::size_t>((d - a) / 2 + 1) : 0, 0);
    sub.for_each([&](int v) {
        if (parity(g.priority(v)) == alpha) ++caps_[slot(g.priority(v))];
    });
}

SpmOps::SpmOps(Player alpha, int max_priority, std::span<const int> caps_by_priority) : alpha_(alpha)
{
    const int a = index(alpha);
    caps_.assign(max_priority >= a ? static_cast<std::size_t>((max_priority - a) / 2 + 1) : 0, 0);
    for (std::size_t j = 0; j < caps_.size(); ++j) caps_[j] = caps_by_priority[a + 2 * j];
}

bool SpmOps::prog(std::span<const int> m, int p, std::span<int> out) const
{
    const int L = width();
    int j = std::min(lowest_slot(p), L);
    for (int i = 0; i < j; ++i) out[i] = 0;
    for (int i = j; i < L; ++i) out[i] = m[i];
    if (parity(p) != alpha_) return false;
    for (;; ++j) {
        if (j >= L) return true;
        if (++out[j] <= caps_[j]) return false;
        out[j] = 0;
    }
}

int SpmOps::compare(std::span<const int> a, std::span<const int> b, int p) const
{
    const int lo = lowest_slot(p);
    for (int i = width() - 1; i >= lo; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool SpmOps::on_top(int p)
{
    if (!lower_caps_ || parity(p) != alpha_) return false;
    int& c = caps_[slot(p)];
    if (c == 0) return false;
    --c;
    return true;
}

std::string to_string(const SpmMeasure& m, Player alpha)
{
    if (m.top) return "T";
    std::ostringstream os;
    os << '{';
    for (std::size_t q = 0; q < m.value.size(); ++q) {
        if (q) os << ' ';
        if (parity(static_cast<int>(q)) != alpha) os << '_';
        else os << m.value[q];
    }
    os << '}';
    return os.str();
}

SpmMeasure spm_from_slots(std::span<const int> slots, bool top, int max_priority, Player alpha)
{
    SpmMeasure m;
    m.top = top;
    m.value.assign(static_cast<std::size_t>(max_priority + 1), 0);
    if (top) return m;
    for (std::size_t j = 0; j < slots.size(); ++j) m.value[index(alpha) + 2 * j] = slots[j];
    return m;
}

std::vector<int> spm_to_slots(const SpmMeasure& m, Player alpha)
{
    std::vector<int> s;
    for (std::size_t q = index(alpha); q < m.value.size(); q += 2) s.push_back(m.value[q]);
    return s;
}

SpmMeasure spm_measure(const SpmTable& t, int v, int max_priority)
{
    return spm_from_slots(t.measure(v), t.is_top(v), max_priority, t.alpha());
}

int spm_compare(const SpmMeasure& a, const SpmMeasure& b, int p, Player alpha)
{
    if (a.top || b.top) return (a.top ? 1 : 0) - (b.top ? 1 : 0);
    const int d = static_cast<int>(std::max(a.value.size(), b.value.size())) - 1;
    for (int q = d; q >= p; --q) {
        if (parity(q) != alpha) continue;
        const int x = q < static_cast<int>(a.value.size()) ? a.value[q] : 0;
        const int y = q < static_cast<int>(b.value.size()) ? b.value[q] : 0;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

SpmMeasure spm_play_summary(std::span<const int> priorities, int max_priority, Player alpha)
{
    SpmMeasure m;
    m.value.assign(static_cast<std::size_t>(max_priority + 1), 0);
    for (int q = index(alpha); q <= max_priority; q += 2) {
        int count = 0;
        for (int p : priorities) {
            if (p > q) break;
            if (p == q) ++count;
        }
        m.value[q] = count;
    }
    return m;
}

Solution spm_solve(const ParityGame& game, const VertexSet& subgame, const SpmOptions& opts)
{
    return solve_dual(
        game, subgame, [&](const VertexSet& sub, Player alpha) { return SpmOps(game, sub, alpha, opts.lower_caps); },
        opts.lifting);
}

}  // namespace pg
