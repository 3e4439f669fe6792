#include "pg/priority_promotion.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace pg {

const char* name(PromotionVariant v)
{
    switch (v) {
    case PromotionVariant::PP: return "pp";
    case PromotionVariant::PPPlus: return "ppp";
    case PromotionVariant::RR: return "rr";
    case PromotionVariant::DP: return "dp";
    case PromotionVariant::RRDP: return "rrdp";
    }
    return "?";
}

std::optional<PromotionVariant> parse_promotion_variant(std::string_view s)
{
    for (auto v : {PromotionVariant::PP, PromotionVariant::PPPlus, PromotionVariant::RR, PromotionVariant::DP,
                   PromotionVariant::RRDP})
        if (s == name(v)) return v;
    return std::nullopt;
}

// Attractor for the player of measure p inside the vertices of measure <= p.
// Free vertices and members of lower regions can be claimed.
struct PromotionState::AttrCtx {
    PromotionState& s;
    int p;
    bool candidate(int v) const
    {
        const int r = s.region_[v];
        return r == kFree || (r >= 0 && r < p);
    }
    bool in_subgame(int v) const
    {
        const int r = s.region_[v];
        return r == kFree || (r >= 0 && r <= p);
    }
    void claim(int v, int via)
    {
        s.set_region(v, p);
        s.strategy_[v] = via;
        s.members_[p].push_back(v);
    }
};

// Attractor of a dominion over the whole unsolved game; mark_ tracks membership.
struct PromotionState::DominionCtx {
    PromotionState& s;
    bool candidate(int v) const { return s.unsolved(v) && !s.mark_[v]; }
    bool in_subgame(int v) const { return s.unsolved(v); }
    void claim(int v, int via)
    {
        s.mark_[v] = 1;
        s.strategy_[v] = via;
    }
};

PromotionState::PromotionState(const ParityGame& game, const VertexSet& subgame, PromotionVariant variant,
                               SolveStats* stats)
    : g_(game), variant_(variant), stats_(stats), esc_(game.size()), solution_(game.size())
{
    const int n = game.size();
    region_.assign(static_cast<std::size_t>(n), kSolved);
    strategy_.assign(static_cast<std::size_t>(n), -1);
    mark_.assign(static_cast<std::size_t>(n), 0);
    subgame.for_each([&](int v) {
        region_[v] = kFree;
        max_priority_ = std::max(max_priority_, game.priority(v));
        ++unsolved_;
    });
    const auto levels = static_cast<std::size_t>(max_priority_ + 1);
    members_.resize(levels);
    count_.assign(levels, 0);
    by_priority_.resize(levels);
    keep_.assign(levels, Keep::No);
    subgame.for_each([&](int v) { by_priority_[game.priority(v)].push_back(v); });
}

void PromotionState::set_region(int v, int x)
{
    const int old = region_[v];
    if (old >= 0) --count_[old];
    if (x >= 0) ++count_[x];
    region_[v] = x;
}

void PromotionState::reset(int p)
{
    for (int v : members_[p])
        if (region_[v] == p) set_region(v, kFree);
    members_[p].clear();
    keep_[p] = Keep::No;
}

bool PromotionState::has_candidates(int p) const
{
    if (count_[p] > 0) return true;
    for (int v : by_priority_[p])
        if (region_[v] == kFree) return true;
    return false;
}

int PromotionState::next_measure(int below) const
{
    for (int x = std::min(below, max_priority_ + 1) - 1; x >= 0; --x)
        if (has_candidates(x)) return x;
    return -1;
}

// Releases members of region p that its player can no longer keep inside it.
// Vertices of priority p are never released. With all_or_nothing the whole
// region is dissolved as soon as one member fails. Returns true if anything was released.
bool PromotionState::prune(int p, bool all_or_nothing)
{
    const Player beta = parity(p);
    auto holds = [&](int v) {
        if (g_.priority(v) == p) return true;
        if (g_.owner(v) == beta) {
            const int s = strategy_[v];
            return s >= 0 && region_[s] == p;
        }
        for (int w : g_.successors(v)) {
            const int r = region_[w];
            if (r == kFree || (r >= 0 && r < p)) return false;
        }
        return true;
    };

    queue_.clear();
    for (int v : members_[p])
        if (region_[v] == p) queue_.push_back(v);
    members_[p] = queue_;

    bool released = false;
    while (!queue_.empty()) {
        const int v = queue_.back();
        queue_.pop_back();
        if (region_[v] != p || holds(v)) continue;
        if (all_or_nothing) {
            reset(p);
            return true;
        }
        released = true;
        set_region(v, kFree);
        strategy_[v] = -1;
        for (int u : g_.predecessors(v))
            if (region_[u] == p) queue_.push_back(u);
    }
    return released;
}

void PromotionState::build_region(int p)
{
    if (count_[p] > 0) prune(p, keep_[p] == Keep::IfIntact);
    else members_[p].clear();
    keep_[p] = Keep::No;

    queue_.clear();
    for (int v : members_[p])
        if (region_[v] == p) queue_.push_back(v);
    members_[p] = queue_;
    for (int v : by_priority_[p]) {
        if (region_[v] != kFree) continue;
        set_region(v, p);
        strategy_[v] = -1;
        members_[p].push_back(v);
        queue_.push_back(v);
    }
    if (queue_.empty()) return;

    AttrCtx ctx{*this, p};
    attract_serial(g_, parity(p), ctx, esc_, queue_);
    if (stats_) ++stats_->attractions;
}

void PromotionState::decompose(int from)
{
    int x = from <= max_priority_ && from >= 0 && has_candidates(from) ? from : next_measure(from);
    for (; x >= 0; x = next_measure(x)) build_region(x);
}

RegionStatus PromotionState::status(int p)
{
    const Player beta = parity(p);
    int target = INT_MAX;
    for (int v : members_[p]) {
        if (region_[v] != p) continue;
        if (g_.owner(v) == beta) {
            const int s = strategy_[v];
            if (s >= 0 && region_[s] == p) continue;
            int pick = -1;
            for (int w : g_.successors(v))
                if (region_[w] == p) {
                    pick = w;
                    break;
                }
            if (pick < 0) return {RegionStatus::Open, -1};
            strategy_[v] = pick;
        } else {
            for (int w : g_.successors(v)) {
                const int r = region_[w];
                if (r == kFree || (r >= 0 && r < p)) return {RegionStatus::Open, -1};
                if (r > p && r < target) target = r;
            }
        }
    }
    if (target == INT_MAX) return {RegionStatus::Dominion, -1};
    if (parity(target) != beta) throw std::logic_error("promotion target of the wrong parity");
    return {RegionStatus::Escapes, target};
}

bool PromotionState::should_delay(int p, int q) const
{
    if (variant_ != PromotionVariant::DP && variant_ != PromotionVariant::RRDP) return false;
    const Player opp = opponent(parity(q));
    for (int x = p + 1; x < q; ++x)
        if (parity(x) == opp && count_[x] > 0) return true;
    return false;
}

void PromotionState::promote(int p, int q)
{
    if (stats_) ++stats_->promotions;
    for (int v : members_[p]) {
        if (region_[v] != p) continue;
        set_region(v, q);
        members_[q].push_back(v);
    }
    members_[p].clear();
    keep_[p] = Keep::No;

    const Player beta = parity(q);
    for (int x = 0; x < q; ++x) {
        if (count_[x] == 0) continue;
        const bool own = parity(x) == beta;
        switch (variant_) {
        case PromotionVariant::PP: reset(x); break;
        case PromotionVariant::PPPlus:
        case PromotionVariant::DP:
            if (own) keep_[x] = Keep::Prune;
            else reset(x);
            break;
        case PromotionVariant::RR:
        case PromotionVariant::RRDP: keep_[x] = own ? Keep::Prune : Keep::IfIntact; break;
        }
    }
    std::erase_if(delayed_, [q](const std::pair<int, int>& d) { return d.first <= q; });
}

int PromotionState::extract_dominion(int p)
{
    const Player beta = parity(p);
    queue_.clear();
    for (int v : members_[p])
        if (region_[v] == p && !mark_[v]) {
            mark_[v] = 1;
            queue_.push_back(v);
        }
    DominionCtx ctx{*this};
    attract_serial(g_, beta, ctx, esc_, queue_);
    for (int v : queue_) {
        mark_[v] = 0;
        solution_.set(v, beta, g_.owner(v) == beta ? strategy_[v] : -1);
        set_region(v, kSolved);
    }
    members_[p].clear();
    unsolved_ -= static_cast<int>(queue_.size());
    if (stats_) ++stats_->dominions;

    delayed_.clear();
    for (int x = 0; x <= max_priority_; ++x) {
        if (count_[x] == 0) continue;
        if (variant_ == PromotionVariant::PP) reset(x);
        else if (keep_[x] != Keep::IfIntact) keep_[x] = Keep::Prune;
    }
    return static_cast<int>(queue_.size());
}

Solution PromotionState::solve()
{
    int p = top_measure();
    while (unsolved_ > 0) {
        if (p < 0) {
            if (delayed_.empty()) throw std::logic_error("promotion descent ended without a closed region");
            auto best = std::min_element(delayed_.begin(), delayed_.end(), [](const auto& a, const auto& b) {
                return a.second != b.second ? a.second < b.second : a.first > b.first;
            });
            const auto [r, q] = *best;
            delayed_.erase(best);
            promote(r, q);
            p = q;
            continue;
        }
        build_region(p);
        if (count_[p] == 0) {
            p = next_measure(p);
            continue;
        }
        const RegionStatus st = status(p);
        switch (st.kind) {
        case RegionStatus::Open: p = next_measure(p); break;
        case RegionStatus::Dominion:
            extract_dominion(p);
            p = top_measure();
            break;
        case RegionStatus::Escapes:
            if (should_delay(p, st.target)) {
                if (stats_) ++stats_->delayed;
                delayed_.emplace_back(p, st.target);
                p = next_measure(p);
            } else {
                promote(p, st.target);
                p = st.target;
            }
            break;
        }
    }
    return solution_;
}

Solution pp_solve(const ParityGame& game, const VertexSet& subgame, PromotionVariant variant, SolveStats* stats)
{
    PromotionState state(game, subgame, variant, stats);
    return state.solve();
}

}  // namespace pg
