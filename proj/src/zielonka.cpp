#include "pg/zielonka.hpp"

#include <algorithm>
#include <numeric>

#include "pg/attractor.hpp"
#include "pg/transform.hpp"

namespace pg {

namespace {

constexpr int kOut = -2;
constexpr int kFree = -1;

/*
 * Region array: kOut outside the game, kFree for unclaimed vertices of the
 * current subgame, otherwise the index of the attractor call that claimed the
 * vertex. A frame whose first claim index is r0 owns every vertex with a
 * value >= r0 or kFree.
 */
class Zielonka {
  public:
    Zielonka(const ParityGame& g, const VertexSet& sub, const ZielonkaOptions& opts)
        : g_(g), opts_(opts), region_(g.size(), kOut), winner_(g.size(), -1), strategy_(g.size(), -1),
          log_(g.size()), esc_(g.size())
    {
        order_.resize(g.size());
        std::iota(order_.begin(), order_.end(), 0);
        if (!g.sorted_by_priority())
            std::stable_sort(order_.begin(), order_.end(),
                             [&](int a, int b) { return g.priority(a) < g.priority(b); });
        sub.for_each([&](int v) { region_[v] = kFree; });
        size_ = sub.size();
    }

    Solution run();

  private:
    enum class Phase { Enter, AfterFirst, AfterSecond };

    struct Frame {
        int cursor;     // position in order_ at or above the top free vertex
        int size;       // vertices in the subgame
        int r0 = 0;
        std::size_t log_begin = 0;
        std::size_t a_end = 0;
        Player alpha = Player::Even;
        Phase phase = Phase::Enter;
    };

    template <bool Parallel>
    struct Ctx {
        Zielonka& z;
        int r;
        Player alpha;
        bool set_winner;

        int load(int v) const
        {
            if constexpr (Parallel) return std::atomic_ref<int>(z.region_[v]).load(std::memory_order_relaxed);
            else return z.region_[v];
        }
        bool candidate(int v) const { return load(v) == kFree; }
        // Earlier layers of an extended attractor are not part of the subgame.
        bool in_subgame(int v) const
        {
            int x = load(v);
            return x == kFree || x == r;
        }
        void record(int v, int via)
        {
            z.strategy_[v] = via;
            if (set_winner) z.winner_[v] = static_cast<std::int8_t>(alpha);
        }
        void claim(int v, int via)
        {
            z.region_[v] = r;
            record(v, via);
        }
        bool try_claim(int v, int via)
        {
            int expected = kFree;
            if (!std::atomic_ref<int>(z.region_[v]).compare_exchange_strong(expected, r, std::memory_order_acq_rel))
                return false;
            record(v, via);
            return true;
        }
    };

    void attract(Player alpha, int r, std::size_t seeds_begin, bool set_winner)
    {
        if (opts_.stats) ++opts_.stats->attractions;
        if (opts_.workers > 1) {
            Ctx<true> ctx{*this, r, alpha, set_winner};
            attract_parallel(g_, alpha, ctx, esc_, log_.data(), &log_size_, seeds_begin, opts_.workers);
        } else {
            Ctx<false> ctx{*this, r, alpha, set_winner};
            queue_.assign(log_.begin() + static_cast<std::ptrdiff_t>(seeds_begin),
                          log_.begin() + static_cast<std::ptrdiff_t>(log_size_));
            std::size_t done = queue_.size();
            attract_serial(g_, alpha, ctx, esc_, queue_);
            for (std::size_t i = done; i < queue_.size(); ++i) log_[log_size_++] = queue_[i];
        }
    }

    void enter(Frame& f);
    void after_first(Frame& f);
    void alpha_wins(const Frame& f, bool in_g_by_region);

    const ParityGame& g_;
    const ZielonkaOptions& opts_;
    std::vector<int> order_;
    std::vector<int> region_;
    std::vector<std::int8_t> winner_;
    std::vector<int> strategy_;
    std::vector<int> log_;
    std::size_t log_size_ = 0;
    std::vector<int> queue_, tmp_;
    EscapeCounters esc_;
    std::vector<Frame> stack_;
    int next_r_ = 0;
    int size_ = 0;
};

Solution Zielonka::run()
{
    stack_.push_back(Frame{g_.size() - 1, size_});
    while (!stack_.empty()) {
        Frame& f = stack_.back();
        switch (f.phase) {
        case Phase::Enter:
            if (f.size == 0) {
                stack_.pop_back();
                break;
            }
            enter(f);
            break;
        case Phase::AfterFirst:
            after_first(f);
            break;
        case Phase::AfterSecond:
            stack_.pop_back();
            break;
        }
    }

    Solution sol(g_.size());
    for (int v = 0; v < g_.size(); ++v) {
        if (winner_[v] < 0) continue;
        Player w = static_cast<Player>(winner_[v]);
        sol.set(v, w, g_.owner(v) == w ? strategy_[v] : -1);
    }
    return sol;
}

void Zielonka::enter(Frame& f)
{
    if (opts_.stats) ++opts_.stats->frames;
    f.log_begin = log_size_;
    f.r0 = next_r_;
    int c = f.cursor;
    while (region_[order_[c]] != kFree) --c;
    f.cursor = c;
    f.alpha = parity(g_.priority(order_[c]));

    for (;;) {
        const int r = next_r_++;
        const int p = g_.priority(order_[c]);
        const std::size_t seeds = log_size_;
        for (; c >= 0 && g_.priority(order_[c]) == p; --c) {
            int v = order_[c];
            if (region_[v] != kFree) continue;
            region_[v] = r;
            strategy_[v] = -1;
            log_[log_size_++] = v;
        }
        attract(f.alpha, r, seeds, false);
        if (!opts_.optimized) break;
        while (c >= 0 && region_[order_[c]] != kFree) --c;
        if (c < 0 || parity(g_.priority(order_[c])) != f.alpha) break;
    }
    f.a_end = log_size_;
    f.phase = Phase::AfterFirst;
    const int child_size = f.size - static_cast<int>(log_size_ - f.log_begin);
    stack_.push_back(Frame{c, child_size});
}

// Alpha wins every vertex of the frame that is not claimed by the opponent.
// When in_g_by_region is set the whole subgame is claimed and membership is
// tested by region index, otherwise the alpha part is exactly the free vertices.
void Zielonka::alpha_wins(const Frame& f, bool in_g_by_region)
{
    const std::size_t a_count = f.a_end - f.log_begin;
    for (std::size_t i = 0; i < a_count; ++i) {
        const int v = tmp_[i];
        winner_[v] = static_cast<std::int8_t>(f.alpha);
        if (g_.owner(v) != f.alpha || strategy_[v] >= 0) continue;
        for (int w : g_.successors(v)) {
            const int x = region_[w];
            if (in_g_by_region ? (x >= f.r0) : (x == kFree)) {
                strategy_[v] = w;
                break;
            }
        }
    }
}

void Zielonka::after_first(Frame& f)
{
    const Player na = opponent(f.alpha);
    tmp_.assign(log_.begin() + static_cast<std::ptrdiff_t>(f.log_begin),
                log_.begin() + static_cast<std::ptrdiff_t>(log_size_));
    const std::size_t child_off = f.a_end - f.log_begin;

    bool opponent_wins_some = false;
    for (std::size_t i = child_off; i < tmp_.size() && !opponent_wins_some; ++i)
        opponent_wins_some = winner_[tmp_[i]] == static_cast<std::int8_t>(na);
    if (!opponent_wins_some) {
        alpha_wins(f, true);
        stack_.pop_back();
        return;
    }

    const int r = next_r_++;
    log_size_ = f.log_begin;
    for (std::size_t i = 0; i < tmp_.size(); ++i) {
        const int v = tmp_[i];
        if (i >= child_off && winner_[v] == static_cast<std::int8_t>(na)) {
            region_[v] = r;
            log_[log_size_++] = v;
        } else {
            region_[v] = kFree;
        }
    }
    const std::size_t won = log_size_ - f.log_begin;
    attract(na, r, f.log_begin, true);
    const std::size_t attracted = log_size_ - f.log_begin - won;

    if (attracted == 0 && opts_.optimized) {
        alpha_wins(f, false);
        for (int v : tmp_) {
            if (region_[v] != kFree) continue;
            region_[v] = r;
            log_[log_size_++] = v;
        }
        stack_.pop_back();
        return;
    }

    if (opts_.on_reset) {
        std::vector<int> reset;
        for (int v : tmp_)
            if (region_[v] == kFree) reset.push_back(v);
        std::span<const int> w(log_.data() + f.log_begin, log_size_ - f.log_begin);
        opts_.on_reset(tmp_, w, reset);
    }
    for (int v : tmp_)
        if (region_[v] == kFree) winner_[v] = -1;
    f.phase = Phase::AfterSecond;
    const int child_size = f.size - static_cast<int>(log_size_ - f.log_begin);
    const int cursor = f.cursor;
    stack_.push_back(Frame{cursor, child_size});
}

}  // namespace

Solution zielonka_solve(const ParityGame& game, const VertexSet& subgame, const ZielonkaOptions& opts)
{
    Zielonka z(game, subgame, opts);
    return z.run();
}

VertexSet zielonka_attr(const ParityGame& game, const VertexSet& subgame, Player alpha)
{
    VertexSet a(game.size());
    VertexSet rest = subgame;
    while (!rest.empty()) {
        const int p = top_priority(game, rest);
        if (parity(p) != alpha) break;
        VertexSet top(game.size());
        rest.for_each([&](int v) {
            if (game.priority(v) == p) top.insert(v);
        });
        auto attr = attractor(game, rest, alpha, top);
        attr.set.for_each([&](int v) {
            a.insert(v);
            rest.erase(v);
        });
    }
    return a;
}

}  // namespace pg
