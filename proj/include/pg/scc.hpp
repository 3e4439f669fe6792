#pragma once

#include <span>
#include <vector>

namespace pg {

/**
 * Iterative Tarjan SCC decomposition over an induced subgraph. Components are
 * reported sinks first (reverse topological order), so the first one is a
 * bottom SCC. Scratch arrays are reused across runs.
 */
class SccFinder {
  public:
    explicit SccFinder(int n = 0) { resize(n); }

    void resize(int n)
    {
        index_.assign(static_cast<std::size_t>(n), -1);
        low_.assign(static_cast<std::size_t>(n), 0);
        on_stack_.assign(static_cast<std::size_t>(n), 0);
    }

    /**
     * roots: vertices to start from; in_sub(v): membership; succ(v): span of
     * successors; emit(span) is called per component. Returning true from
     * emit stops the search early.
     */
    template <class InSub, class Succ, class Emit>
    void run(std::span<const int> roots, InSub&& in_sub, Succ&& succ, Emit&& emit)
    {
        int counter = 0;
        bool stop = false;
        for (int root : roots) {
            if (stop) break;
            if (!in_sub(root) || index_[root] >= 0) continue;
            enter(root, counter);
            while (!calls_.empty() && !stop) {
                const int v = calls_.back().v;
                auto s = succ(v);
                std::size_t& i = calls_.back().edge;
                if (i < s.size()) {
                    const int w = s[i++];
                    if (!in_sub(w)) continue;
                    if (index_[w] < 0) enter(w, counter);
                    else if (on_stack_[w] && index_[w] < low_[v]) low_[v] = index_[w];
                    continue;
                }
                calls_.pop_back();
                if (!calls_.empty()) {
                    const int parent = calls_.back().v;
                    if (low_[v] < low_[parent]) low_[parent] = low_[v];
                }
                if (low_[v] != index_[v]) continue;
                component_.clear();
                int w;
                do {
                    w = stack_.back();
                    stack_.pop_back();
                    on_stack_[w] = 0;
                    component_.push_back(w);
                } while (w != v);
                stop = emit(std::span<const int>(component_));
            }
        }
        for (int v : touched_) {
            index_[v] = -1;
            on_stack_[v] = 0;
        }
        touched_.clear();
        calls_.clear();
        stack_.clear();
    }

  private:
    struct Call {
        int v;
        std::size_t edge;
    };

    void enter(int v, int& counter)
    {
        index_[v] = low_[v] = counter++;
        on_stack_[v] = 1;
        stack_.push_back(v);
        touched_.push_back(v);
        calls_.push_back({v, 0});
    }

    std::vector<int> index_, low_;
    std::vector<char> on_stack_;
    std::vector<int> stack_, touched_, component_;
    std::vector<Call> calls_;
};

/// True when the component contains a cycle: more than one vertex, or a self-loop.
template <class Succ>
bool nontrivial(std::span<const int> component, Succ&& succ)
{
    if (component.size() > 1) return true;
    for (int w : succ(component[0]))
        if (w == component[0]) return true;
    return false;
}

}  // namespace pg
