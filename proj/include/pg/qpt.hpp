#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pg/game.hpp"
#include "pg/progress_measure.hpp"

namespace pg {

/*
 * Quasi-polynomial progress measures. A measure is a k-tuple, k the least
 * integer with (number of alpha-parity vertices) < 2^k. Entry i summarises a
 * dominated stretch of up to 2^i alpha-parity vertices by the priority of its
 * first dominating vertex, or is empty (bottom).
 *
 * Internally tuples are kept most significant entry first and read as one bit
 * string per level (alpha-parity priority q): value q is a 1 at level q and
 * value q+1 a 0 at level q. Levels are listed from high to low, which makes the
 * set of tuples a universal tree of height d/2 and width 2^k - 1; Prog is the
 * least leaf above the successor's leaf in that tree. The string at a level is
 * also no longer than the number of vertices with that priority that are not
 * yet top, the branching bound small progress measures rely on.
 */
class QptOps {
  public:
    static constexpr int kBottom = -1;

    QptOps(const ParityGame& g, const VertexSet& sub, Player alpha);
    /// Tuple width k and largest priority given directly.
    QptOps(Player alpha, int k, int max_priority);

    Player alpha() const { return alpha_; }
    int width() const { return k_; }
    void bottom(std::span<int> m) const { std::fill(m.begin(), m.end(), kBottom); }
    bool prog(std::span<const int> m, int p, std::span<int> out) const;
    int compare(std::span<const int> a, std::span<const int> b) const;
    /// Lowers the string bound of p's level when a vertex of priority p reaches top.
    bool on_top(int p);

    /// Rank of one entry: bottom is 0, 1-bits positive and growing with the level, 0-bits negative.
    static int rank(int x) { return x == kBottom ? 0 : ((x & 1) == 0 ? x + 1 : -x); }

  private:
    static int level(int x) { return x - (x & 1); }
    int cap(int lv) const { return lv < static_cast<int>(count_.size()) ? std::min(count_[lv], k_) : k_; }
    /// Least continuation: 0s from level lv downwards, starting at out[from].
    void fill_zeros(std::span<int> out, int from, int lv) const;

    Player alpha_;
    int k_ = 0;
    int shift_ = 0;    // 1 for Odd: priorities are shifted so the measured parity is even
    int top_level_ = -1;
    std::vector<int> count_;  // vertices below top per level; empty means only the width bounds the strings
};

using QptTable = MeasureTable<QptOps>;

/// Tuple width for n vertices of the measured parity.
int qpt_width(int n);

/// A measure with entry i standing for a stretch of 2^i vertices; kBottom marks empty entries.
struct QptMeasure {
    bool top = false;
    std::vector<int> entry;
    friend bool operator==(const QptMeasure&, const QptMeasure&) = default;
};

/// Stretch lengths 2^i for every non-empty entry i, lowest index first.
std::vector<std::uint64_t> qpt_stretches(const QptMeasure& m);

/// Table entry v as a QptMeasure (entry values in the game's own priorities).
QptMeasure qpt_measure(const QptTable& t, int v);

int qpt_compare(const QptMeasure& a, const QptMeasure& b);

Solution qpt_solve(const ParityGame& game, const VertexSet& subgame, const LiftingOptions& opts = {});

}  // namespace pg
