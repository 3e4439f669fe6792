#pragma once

#include <span>
#include <string>
#include <vector>

#include "pg/game.hpp"
#include "pg/progress_measure.hpp"
#include "pg/stats.hpp"

namespace pg {

/**
 * Small progress measures for player alpha. A measure counts, per priority of
 * alpha's parity, how often it was seen; slot j stands for priority alpha+2j.
 * Counters are capped by the number of vertices with that priority and carry
 * into the next slot; carrying out of the last slot gives top.
 */
class SpmOps {
  public:
    SpmOps(const ParityGame& g, const VertexSet& sub, Player alpha, bool lower_caps = true);
    /// Explicit caps, indexed by priority (entries of the other parity are ignored).
    SpmOps(Player alpha, int max_priority, std::span<const int> caps_by_priority);

    Player alpha() const { return alpha_; }
    int width() const { return static_cast<int>(caps_.size()); }
    void bottom(std::span<int> m) const { std::fill(m.begin(), m.end(), 0); }
    bool prog(std::span<const int> m, int p, std::span<int> out) const;
    int compare(std::span<const int> a, std::span<const int> b, int p = 0) const;
    bool on_top(int p);

    int cap(int priority) const { return caps_[slot(priority)]; }
    int slot(int priority) const { return (priority - index(alpha_)) / 2; }
    int lowest_slot(int priority) const
    {
        return priority <= index(alpha_) ? 0 : (priority - index(alpha_) + 1) / 2;
    }

  private:
    Player alpha_;
    std::vector<int> caps_;
    bool lower_caps_ = true;
};

using SpmTable = MeasureTable<SpmOps>;

/// A measure written by priority: value[q] for every q <= d, zero at the other parity.
struct SpmMeasure {
    bool top = false;
    std::vector<int> value;
    friend bool operator==(const SpmMeasure&, const SpmMeasure&) = default;
};

std::string to_string(const SpmMeasure& m, Player alpha = Player::Even);

/// Ordering under the comparison restricted to priorities >= p: -1, 0 or 1.
int spm_compare(const SpmMeasure& a, const SpmMeasure& b, int p, Player alpha = Player::Even);

/// Converts between priority-indexed measures and table slots.
SpmMeasure spm_from_slots(std::span<const int> slots, bool top, int max_priority, Player alpha);
std::vector<int> spm_to_slots(const SpmMeasure& m, Player alpha);

/// Measure of table entry v, priority-indexed.
SpmMeasure spm_measure(const SpmTable& t, int v, int max_priority);

/**
 * Summary of a finite play: for each priority q of alpha's parity, the number
 * of times q occurs in the longest prefix whose priorities are all <= q.
 */
SpmMeasure spm_play_summary(std::span<const int> priorities, int max_priority, Player alpha = Player::Even);

struct SpmOptions {
    /// Lower the cap of a priority whenever a vertex of that priority reaches top.
    bool lower_caps = true;
    LiftingOptions lifting;
};

Solution spm_solve(const ParityGame& game, const VertexSet& subgame, const SpmOptions& opts = {});

}  // namespace pg
