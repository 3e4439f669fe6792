#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "pg/attractor.hpp"
#include "pg/game.hpp"
#include "pg/stats.hpp"

namespace pg {

enum class PromotionVariant { PP, PPPlus, RR, DP, RRDP };

const char* name(PromotionVariant v);
std::optional<PromotionVariant> parse_promotion_variant(std::string_view s);

struct RegionStatus {
    enum Kind { Open, Escapes, Dominion };
    Kind kind = Open;
    /// For Escapes: the lowest higher region the opponent can reach.
    int target = -1;
};

/**
 * Region decomposition for priority promotion. Every unsolved vertex is free
 * or belongs to the region named by its measure; a region of measure p is an
 * attractor for parity(p) inside the vertices whose region is at most p.
 *
 * Reset policies after a promotion to q:
 *   PP     every region below q is dissolved.
 *   PP+    regions below q of the opponent of q's player are dissolved, q's player's are kept.
 *   RR     like PP+, but opponent regions are kept when they are still intact on revisit.
 *   DP     PP+ resets; a promotion is postponed while it would dissolve an opponent
 *          region between the promoted region and its target. Postponed promotions
 *          run, lowest target first, when the descent finds nothing else to do.
 *   RRDP   RR resets with DP postponement.
 * A kept region is re-validated when the descent reaches it: members that the
 * owner can no longer hold inside the region (other than its top-priority
 * vertices) are released before it is re-attracted.
 */
class PromotionState {
  public:
    static constexpr int kSolved = -2;
    static constexpr int kFree = -1;

    PromotionState(const ParityGame& game, const VertexSet& subgame, PromotionVariant variant,
                   SolveStats* stats = nullptr);

    /// Measure of v, kFree, or kSolved (solved or outside the subgame).
    int region(int v) const { return region_[v]; }
    int region_size(int p) const { return count_[p]; }
    /// Highest measure below `below` holding a region or a free vertex, -1 if none.
    int next_measure(int below) const;
    int top_measure() const { return next_measure(max_priority_ + 1); }

    /// (Re)computes the region of measure p from its kept members and free p-vertices.
    void build_region(int p);
    /// Builds regions top-down for every measure at or below from.
    void decompose(int from);
    RegionStatus status(int p);
    /// Moves region p into region q and applies the variant's reset policy below q.
    void promote(int p, int q);
    /// Solves the attractor of dominion p for its player; returns the number of vertices solved.
    int extract_dominion(int p);

    /// Runs the promotion loop to completion.
    Solution solve();

    const Solution& solution() const { return solution_; }
    int strategy(int v) const { return strategy_[v]; }

  private:
    struct AttrCtx;
    struct DominionCtx;
    enum class Keep : char { No, Prune, IfIntact };

    void set_region(int v, int x);
    void reset(int p);
    bool prune(int p, bool all_or_nothing);
    bool has_candidates(int p) const;
    bool should_delay(int p, int q) const;
    bool unsolved(int v) const { return region_[v] != kSolved; }

    const ParityGame& g_;
    PromotionVariant variant_;
    SolveStats* stats_;
    int max_priority_ = -1;
    int unsolved_ = 0;
    std::vector<int> region_;
    std::vector<int> strategy_;
    std::vector<std::vector<int>> members_;
    std::vector<int> count_;
    std::vector<std::vector<int>> by_priority_;
    std::vector<Keep> keep_;
    std::vector<std::pair<int, int>> delayed_;
    std::vector<int> queue_;
    std::vector<char> mark_;
    EscapeCounters esc_;
    Solution solution_;
};

Solution pp_solve(const ParityGame& game, const VertexSet& subgame, PromotionVariant variant,
                  SolveStats* stats = nullptr);

}  // namespace pg
