#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "pg/game.hpp"
#include "pg/stats.hpp"
#include "pg/verifier.hpp"

namespace pg {

/*
 * Lifting engine shared by the progress measure solvers. A measure policy Ops
 * provides
 *   Player alpha() const                      player whose wins are measured (top)
 *   int width() const                         ints per measure
 *   void bottom(std::span<int>) const         least measure
 *   bool prog(std::span<const int> m, int p, std::span<int> out) const
 *                                             least measure above m for priority p; true means top
 *   int compare(std::span<const int>, std::span<const int>) const
 *   bool on_top(int p)                        a vertex of priority p reached top; true if prog changed
 */

template <class Ops>
class MeasureTable {
  public:
    MeasureTable(const ParityGame& g, const VertexSet& sub, Ops ops)
        : g_(g), sub_(sub), ops_(std::move(ops)), w_(static_cast<std::size_t>(ops_.width())),
          data_(static_cast<std::size_t>(g.size()) * w_), top_(g.size(), 0), frozen_(g.size(), 0),
          cause_(g.size(), -1), queued_(g.size(), 0), best_(w_), cand_(w_)
    {
        for (int v = 0; v < g.size(); ++v) ops_.bottom(slot(v));
    }

    const Ops& ops() const { return ops_; }
    Player alpha() const { return ops_.alpha(); }
    bool is_top(int v) const { return top_[v] != 0; }
    std::span<const int> measure(int v) const { return {data_.data() + v * w_, w_}; }

    void set(int v, std::span<const int> m) { std::copy(m.begin(), m.end(), slot(v).begin()); }

    /// Marks v as won by alpha without lifting; used when the dual table proves it.
    void force_top(int v, int cause = -1)
    {
        if (top_[v]) return;
        make_top(v);
        cause_[v] = cause;
        touch_predecessors(v);
    }

    /**
     * Replaces v, known to be won by the other player, by a sink that player
     * wins: its measure drops to bottom and is never lifted again.
     */
    void freeze(int v)
    {
        if (top_[v] || frozen_[v]) return;
        frozen_[v] = 1;
        ops_.bottom(slot(v));
        pending_.push_back(g_.priority(v));
    }

    /**
     * Lowers the bounds for vertices frozen since the last call. Measures
     * lifted under the old bounds may overshoot the new ones, so everything
     * below top restarts from bottom. Returns true if that happened.
     */
    bool apply_frozen()
    {
        bool lowered = false;
        for (int p : pending_) lowered |= ops_.on_top(p);
        pending_.clear();
        if (!lowered) return false;
        sub_.for_each([&](int v) {
            if (!top_[v]) ops_.bottom(slot(v));
        });
        stale_ = false;
        sub_.for_each([&](int v) { enqueue(v); });
        return true;
    }
    bool frozen(int v) const { return frozen_[v] != 0; }

    /// For top vertices of alpha: the successor that made v top, or -1.
    int cause(int v) const { return cause_[v]; }
    int top_count() const { return top_count_; }

    /// Compares the measures of a and b, top largest.
    int compare(std::span<const int> a, bool at, std::span<const int> b, bool bt) const
    {
        if (at || bt) return (at ? 1 : 0) - (bt ? 1 : 0);
        return ops_.compare(a, b);
    }

    /// Progress of w's measure at v's priority into out; returns true for top.
    bool prog(int v, int w, std::span<int> out) const
    {
        if (top_[w]) return true;
        return ops_.prog(measure(w), g_.priority(v), out);
    }

    /// True when some successor's progress would raise v; leaves it in best_.
    bool liftable(int v)
    {
        if (top_[v] || frozen_[v]) return false;
        const bool maximize = g_.owner(v) == alpha();
        const auto cur = measure(v);
        bool have = false;
        best_top_ = false;
        for (int w : g_.successors(v)) {
            if (!sub_.contains(w)) continue;
            const bool t = prog(v, w, cand_);
            if (!have) {
                have = true;
                best_top_ = t;
                best_w_ = w;
                if (!t) std::copy(cand_.begin(), cand_.end(), best_.begin());
            } else {
                const int c = compare(cand_, t, best_, best_top_);
                if (maximize ? c > 0 : c < 0) {
                    best_top_ = t;
                    best_w_ = w;
                    if (!t) std::copy(cand_.begin(), cand_.end(), best_.begin());
                }
            }
            if (maximize && best_top_) break;
            if (!maximize && compare(best_, best_top_, cur, false) <= 0) return false;
        }
        return have && compare(best_, best_top_, cur, false) > 0;
    }

    /// Raises v to the best progress over its successors. Returns true when v changed.
    bool lift(int v)
    {
        if (!liftable(v)) return false;
        if (best_top_) {
            make_top(v);
            if (g_.owner(v) == alpha()) cause_[v] = best_w_;
        } else {
            set(v, best_);
        }
        return true;
    }

    /// Successor of v with the least progress, first in edge order on ties.
    int argmin_prog(int v)
    {
        int arg = -1;
        bool best_top = false;
        for (int w : g_.successors(v)) {
            if (!sub_.contains(w)) continue;
            const bool t = prog(v, w, cand_);
            if (arg < 0 || compare(cand_, t, best_, best_top) < 0) {
                arg = w;
                best_top = t;
                if (!t) std::copy(cand_.begin(), cand_.end(), best_.begin());
            }
        }
        return arg;
    }

    // Work queue.
    bool queue_empty() const { return head_ == queue_.size(); }
    bool queued(int v) const { return queued_[v] != 0; }
    void enqueue(int v)
    {
        if (queued_[v] || top_[v] || frozen_[v] || !sub_.contains(v)) return;
        queued_[v] = 1;
        queue_.push_back(v);
    }
    int dequeue()
    {
        const int v = queue_[head_++];
        queued_[v] = 0;
        if (head_ > 4096 && head_ * 2 > queue_.size()) {
            queue_.erase(queue_.begin(), queue_.begin() + static_cast<std::ptrdiff_t>(head_));
            head_ = 0;
        }
        return v;
    }
    void touch_predecessors(int v)
    {
        for (int u : g_.predecessors(v)) enqueue(u);
    }

    /// True when a lowered bound may have made stable vertices liftable again.
    bool stale() const { return stale_; }
    void requeue_all()
    {
        stale_ = false;
        sub_.for_each([&](int v) { enqueue(v); });
    }

  private:
    std::span<int> slot(int v) { return {data_.data() + v * w_, w_}; }

    void make_top(int v)
    {
        top_[v] = 1;
        ++top_count_;
        if (ops_.on_top(g_.priority(v))) stale_ = true;
    }

    const ParityGame& g_;
    const VertexSet& sub_;
    Ops ops_;
    std::size_t w_;
    std::vector<int> data_;
    std::vector<char> top_;
    std::vector<char> frozen_;
    std::vector<int> pending_;
    std::vector<int> cause_;
    int top_count_ = 0;
    std::vector<char> queued_;
    std::vector<int> queue_;
    std::size_t head_ = 0;
    std::vector<int> best_, cand_;
    bool best_top_ = false;
    int best_w_ = -1;
    bool stale_ = false;
};

struct LiftingOptions {
    /// Periodically proves stable vertices lost and marks them top in the dual table.
    bool attractor_check = true;
    /**
     * Freeze vertices decided in one table in the other, and once every vertex
     * is decided try the successors that made them top as strategies. A player
     * whose moves the verifier rejects gets them recomputed by a plain lift on
     * its own winning region.
     */
    bool early_strategies = true;
    /// Seed the work queue in a shuffled order instead of priority order.
    bool shuffle = false;
    std::uint64_t seed = 0;
    SolveStats* stats = nullptr;
};

namespace detail {

/// Vertices of t that alpha cannot force into liftable or top vertices.
template <class Ops>
std::vector<int> stable_losing_region(const ParityGame& g, const VertexSet& sub, MeasureTable<Ops>& t)
{
    const int n = g.size();
    const Player alpha = t.alpha();
    std::vector<char> in(n, 0);
    std::vector<int> left(n, 0);
    std::vector<int> queue;
    std::vector<int> scratch(static_cast<std::size_t>(t.ops().width()));

    auto witness = [&](int v, int w) {
        if (t.prog(v, w, scratch)) return false;
        return t.compare(scratch, false, t.measure(v), false) <= 0;
    };

    sub.for_each([&](int v) {
        if (t.is_top(v) || (t.queued(v) && t.liftable(v))) {
            in[v] = 1;
            queue.push_back(v);
        }
    });
    sub.for_each([&](int v) {
        if (in[v] || g.owner(v) == alpha) return;
        int c = 0;
        for (int w : g.successors(v))
            if (sub.contains(w) && witness(v, w)) ++c;
        left[v] = c;
        if (c == 0) {
            in[v] = 1;
            queue.push_back(v);
        }
    });
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const int u = queue[h];
        for (int v : g.predecessors(u)) {
            if (!sub.contains(v) || in[v]) continue;
            if (g.owner(v) != alpha) {
                if (!witness(v, u) || --left[v] > 0) continue;
            }
            in[v] = 1;
            queue.push_back(v);
        }
    }
    std::vector<int> out;
    sub.for_each([&](int v) {
        if (!in[v]) out.push_back(v);
    });
    return out;
}

/// Lifts every vertex of t until nothing changes. Returns false if a vertex reached top.
template <class Ops>
bool lift_to_fixpoint(MeasureTable<Ops>& t, SolveStats* stats)
{
    t.requeue_all();
    for (;;) {
        while (!t.queue_empty()) {
            const int v = t.dequeue();
            if (!t.lift(v)) continue;
            if (stats) ++stats->lifts;
            if (t.is_top(v)) return false;
            t.touch_predecessors(v);
        }
        if (!t.stale()) return true;
        t.requeue_all();
    }
}

}  // namespace detail

/**
 * Runs both measure tables (one per player) and extracts winners and
 * strategies. make(subgame, alpha) builds the measure policy of the table that
 * measures alpha's wins on a subgame.
 */
template <class Make>
Solution solve_dual(const ParityGame& g, const VertexSet& sub, Make make, const LiftingOptions& opt)
{
    using Ops = decltype(make(sub, Player::Even));
    MeasureTable<Ops> even(g, sub, make(sub, Player::Even));
    MeasureTable<Ops> odd(g, sub, make(sub, Player::Odd));

    std::vector<int> order = sub.to_vector();
    if (opt.shuffle) {
        std::mt19937_64 rng(opt.seed);
        std::shuffle(order.begin(), order.end(), rng);
    } else {
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.priority(a) < g.priority(b); });
    }
    for (int v : order) {
        even.enqueue(v);
        odd.enqueue(v);
    }

    MeasureTable<Ops>* tables[2] = {&even, &odd};
    const std::uint64_t cadence = std::max(1, sub.size());
    std::uint64_t since_check[2] = {0, 0};
    const bool freezing = opt.early_strategies;
    std::vector<char> lost(g.size(), 0);

    auto check = [&](int i) {
        auto& t = *tables[i];
        auto& other = *tables[1 - i];
        since_check[i] = 0;
        const auto region = detail::stable_losing_region(g, sub, t);
        for (int u : region) lost[u] = 1;
        // The stable measures of t certify the region; a successor that
        // keeps u's measure is a winning move for the other player.
        std::vector<int> scratch(static_cast<std::size_t>(t.ops().width()));
        std::vector<int> causes(region.size(), -1);
        for (std::size_t j = 0; j < region.size(); ++j) {
            const int u = region[j];
            if (g.owner(u) != other.alpha()) continue;
            for (int w : g.successors(u)) {
                if (!lost[w] || t.prog(u, w, scratch)) continue;
                if (t.compare(scratch, false, t.measure(u), false) <= 0) {
                    causes[j] = w;
                    break;
                }
            }
        }
        // Freezing lowers bounds in t, so it waits until every cause is read.
        for (std::size_t j = 0; j < region.size(); ++j) {
            other.force_top(region[j], causes[j]);
            if (freezing) t.freeze(region[j]);
        }
        for (int u : region) lost[u] = 0;
    };

    for (;;) {
        if (freezing && even.top_count() + odd.top_count() == sub.size()) break;
        bool worked = false;
        for (int i = 0; i < 2; ++i) {
            auto& t = *tables[i];
            if (t.queue_empty()) {
                // A table that ran dry is at its fixpoint: everything below top is lost.
                if (t.apply_frozen()) {
                    worked = true;
                } else if (t.stale()) {
                    t.requeue_all();
                    worked = true;
                } else if (opt.attractor_check && since_check[i] > 0) {
                    check(i);
                    worked = true;
                }
                continue;
            }
            worked = true;
            const int v = t.dequeue();
            if (!t.lift(v)) continue;
            if (opt.stats) ++opt.stats->lifts;
            t.touch_predecessors(v);
            if (freezing && t.is_top(v)) tables[1 - i]->freeze(v);
            if (opt.attractor_check && ++since_check[i] >= cadence) {
                if (!t.apply_frozen() && t.stale()) t.requeue_all();
                check(i);
            }
        }
        if (worked) continue;
        bool again = false;
        for (auto* t : tables)
            if (t->stale()) {
                t->requeue_all();
                again = true;
            }
        if (!again) break;
    }

    Solution sol(g.size());
    sub.for_each([&](int v) {
        const bool e = even.is_top(v), o = odd.is_top(v);
        if (e == o) throw std::logic_error("progress measure tables disagree");
        const Player w = e ? Player::Even : Player::Odd;
        int s = -1;
        if (g.owner(v) == w) s = freezing ? tables[index(w)]->cause(v) : (e ? odd : even).argmin_prog(v);
        sol.set(v, w, s);
    });
    if (!freezing) return sol;

    // Check the winners' moves one player at a time. A player whose moves fail
    // gets them from the opponent's measures, lifted to their fixpoint on the
    // player's region only.
    VerifyOptions vo;
    vo.subgame = &sub;
    bool failed[2] = {false, false};
    sub.for_each([&](int v) {
        if (g.owner(v) == sol.winner(v) && sol.strategy(v) < 0) failed[index(sol.winner(v))] = true;
    });
    for (const auto& viol : verify(g, sol, vo).violations) failed[index(sol.winner(viol.vertex))] = true;
    for (Player alpha : {Player::Even, Player::Odd}) {
        if (!failed[index(alpha)]) continue;
        const VertexSet region = [&] {
            VertexSet r(g.size());
            sub.for_each([&](int v) {
                if (sol.winner(v) == alpha) r.insert(v);
            });
            return r;
        }();
        MeasureTable<Ops> t(g, region, make(region, opponent(alpha)));
        if (!detail::lift_to_fixpoint(t, opt.stats))
            throw std::logic_error("progress measures reached top inside a winning region");
        region.for_each([&](int v) {
            if (g.owner(v) == alpha) sol.set(v, alpha, t.argmin_prog(v));
        });
    }
    return sol;
}

}  // namespace pg
