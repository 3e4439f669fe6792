#include "pg/attractor.hpp"

namespace pg {

namespace {

enum : int { kOutside = 0, kCandidate = 1, kInSet = 2 };

struct SerialSetCtx {
    std::vector<int>& state;
    std::vector<int>& strategy;
    bool candidate(int v) const { return state[v] == kCandidate; }
    bool in_subgame(int v) const { return state[v] != kOutside; }
    void claim(int v, int via)
    {
        state[v] = kInSet;
        strategy[v] = via;
    }
};

struct ParallelSetCtx {
    std::vector<int>& state;
    std::vector<int>& strategy;
    bool candidate(int v) const { return std::atomic_ref<int>(state[v]).load(std::memory_order_relaxed) == kCandidate; }
    bool in_subgame(int v) const { return std::atomic_ref<int>(state[v]).load(std::memory_order_relaxed) != kOutside; }
    bool try_claim(int v, int via)
    {
        int expected = kCandidate;
        if (!std::atomic_ref<int>(state[v]).compare_exchange_strong(expected, kInSet, std::memory_order_acq_rel))
            return false;
        strategy[v] = via;
        return true;
    }
};

AttractorResult run(const ParityGame& game, const VertexSet& subgame, Player alpha, const VertexSet& target,
                    int workers)
{
    const int n = game.size();
    std::vector<int> state(n, kOutside);
    std::vector<int> strategy(n, -1);
    subgame.for_each([&](int v) { state[v] = kCandidate; });

    std::vector<int> log;
    log.reserve(n);
    target.for_each([&](int v) {
        state[v] = kInSet;
        log.push_back(v);
    });

    EscapeCounters esc(n);
    if (workers <= 1) {
        SerialSetCtx ctx{state, strategy};
        attract_serial(game, alpha, ctx, esc, log);
    } else {
        std::size_t tail = log.size();
        log.resize(n);
        ParallelSetCtx ctx{state, strategy};
        attract_parallel(game, alpha, ctx, esc, log.data(), &tail, 0, workers);
    }

    AttractorResult out{VertexSet(n), std::move(strategy)};
    for (int v = 0; v < n; ++v)
        if (state[v] == kInSet) out.set.insert(v);
    return out;
}

}  // namespace

AttractorResult attractor(const ParityGame& game, const VertexSet& subgame, Player alpha, const VertexSet& target)
{
    return run(game, subgame, alpha, target, 1);
}

AttractorResult parallel_attractor(const ParityGame& game, const VertexSet& subgame, Player alpha,
                                   const VertexSet& target, int workers)
{
    return run(game, subgame, alpha, target, workers);
}

}  // namespace pg
