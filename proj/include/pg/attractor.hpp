#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include <omp.h>

#include "pg/game.hpp"

namespace pg {

/**
 * Escape counters for backward attractor computation. A slot packs
 * (stamp << 32 | remaining); a slot whose stamp is stale is lazily
 * re-initialised to the number of successors inside the subgame, so a new
 * attractor call only needs a fresh stamp.
 */
class EscapeCounters {
  public:
    explicit EscapeCounters(int n = 0) : slots_(static_cast<std::size_t>(n), 0) {}

    void resize(int n) { slots_.assign(static_cast<std::size_t>(n), 0); stamp_ = 0; }

    std::uint32_t fresh_stamp()
    {
        if (++stamp_ == 0) {
            std::fill(slots_.begin(), slots_.end(), 0);
            stamp_ = 1;
        }
        return stamp_;
    }

    /// Removes one escape edge of v and returns how many remain.
    template <class InSub>
    int decrement(const ParityGame& g, int v, std::uint32_t stamp, InSub&& in_sub)
    {
        std::uint64_t& slot = slots_[v];
        std::uint32_t left = (slot >> 32) == stamp ? static_cast<std::uint32_t>(slot) : initial(g, v, in_sub);
        --left;
        slot = (std::uint64_t{stamp} << 32) | left;
        return static_cast<int>(left);
    }

    template <class InSub>
    int decrement_atomic(const ParityGame& g, int v, std::uint32_t stamp, InSub&& in_sub)
    {
        std::atomic_ref<std::uint64_t> slot(slots_[v]);
        std::uint64_t old = slot.load(std::memory_order_relaxed);
        for (;;) {
            std::uint32_t left =
                (old >> 32) == stamp ? static_cast<std::uint32_t>(old) : initial(g, v, in_sub);
            --left;
            std::uint64_t next = (std::uint64_t{stamp} << 32) | left;
            if (slot.compare_exchange_weak(old, next, std::memory_order_acq_rel, std::memory_order_relaxed))
                return static_cast<int>(left);
        }
    }

  private:
    template <class InSub>
    static std::uint32_t initial(const ParityGame& g, int v, InSub& in_sub)
    {
        std::uint32_t c = 0;
        for (int w : g.successors(v))
            if (in_sub(w)) ++c;
        return c;
    }

    std::vector<std::uint64_t> slots_;
    std::uint32_t stamp_ = 0;
};

/*
 * Attractor kernels. A context supplies
 *   bool candidate(int v)       v is in the subgame and not yet in the set
 *   bool in_subgame(int v)      v counts as an escape successor
 *   void claim(int v, int via)  (serial) adds v; via is the successor for alpha-owned v, else -1
 *   bool try_claim(int v, int via)  (parallel) atomic version, false if someone else won
 */

/// Serial backward attractor. Vertices in queue from head on are expanded; newly claimed ones are appended.
template <class Ctx>
void attract_serial(const ParityGame& g, Player alpha, Ctx& ctx, EscapeCounters& esc, std::vector<int>& queue,
                    std::size_t head = 0)
{
    const std::uint32_t stamp = esc.fresh_stamp();
    auto in_sub = [&](int w) { return ctx.in_subgame(w); };
    while (head < queue.size()) {
        const int u = queue[head++];
        for (int v : g.predecessors(u)) {
            if (!ctx.candidate(v)) continue;
            if (g.owner(v) == alpha) {
                ctx.claim(v, u);
            } else {
                if (esc.decrement(g, v, stamp, in_sub) != 0) continue;
                ctx.claim(v, -1);
            }
            queue.push_back(v);
        }
    }
}

namespace detail {

template <class Ctx>
struct ParallelAttract {
    const ParityGame& g;
    Player alpha;
    Ctx& ctx;
    EscapeCounters& esc;
    std::uint32_t stamp;
    int* log;
    std::size_t* tail;

    static constexpr std::size_t kSplit = 256;

    void run(std::vector<int> work)
    {
        auto in_sub = [this](int w) { return ctx.in_subgame(w); };
        std::atomic_ref<std::size_t> t(*tail);
        while (!work.empty()) {
            const int u = work.back();
            work.pop_back();
            for (int v : g.predecessors(u)) {
                if (!ctx.candidate(v)) continue;
                int via = u;
                if (g.owner(v) != alpha) {
                    if (esc.decrement_atomic(g, v, stamp, in_sub) != 0) continue;
                    via = -1;
                }
                if (!ctx.try_claim(v, via)) continue;
                log[t.fetch_add(1, std::memory_order_relaxed)] = v;
                work.push_back(v);
            }
            if (work.size() >= kSplit) {
                std::vector<int> half(work.begin() + static_cast<std::ptrdiff_t>(work.size() / 2), work.end());
                work.resize(work.size() / 2);
                spawn(std::move(half));
            }
        }
    }

    void spawn(std::vector<int> work)
    {
#pragma omp task firstprivate(work) untied
        run(std::move(work));
    }
};

}  // namespace detail

/**
 * Task-parallel attractor. log[head, *tail) are the seeds; claimed vertices are
 * appended at *tail through an atomic cursor. log must have room for every
 * vertex that can be claimed.
 */
template <class Ctx>
void attract_parallel(const ParityGame& g, Player alpha, Ctx& ctx, EscapeCounters& esc, int* log,
                      std::size_t* tail, std::size_t head, int workers)
{
    detail::ParallelAttract<Ctx> job{g, alpha, ctx, esc, esc.fresh_stamp(), log, tail};
    const std::size_t seeds_end = *tail;
    constexpr std::size_t kChunk = 64;
#pragma omp parallel num_threads(workers)
#pragma omp single
    {
        for (std::size_t i = head; i < seeds_end; i += kChunk) {
            std::vector<int> work(log + i, log + std::min(seeds_end, i + kChunk));
            job.spawn(std::move(work));
        }
    }
}

struct AttractorResult {
    VertexSet set;
    /// Successor chosen for every attracted alpha-owned vertex, -1 elsewhere.
    std::vector<int> strategy;
};

/// Attr_alpha(target) inside subgame.
AttractorResult attractor(const ParityGame& game, const VertexSet& subgame, Player alpha, const VertexSet& target);

/// Same set as attractor(), computed with the task-parallel kernel; workers == 1 runs the serial kernel.
AttractorResult parallel_attractor(const ParityGame& game, const VertexSet& subgame, Player alpha,
                                   const VertexSet& target, int workers);

}  // namespace pg
