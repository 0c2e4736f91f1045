#ifndef PMRAMSEY_BUDGET_HH
#define PMRAMSEY_BUDGET_HH

#include <atomic>
#include <chrono>
#include <cstdint>

namespace pmramsey {

inline constexpr std::uint64_t default_node_budget = 100'000'000;

struct Budget
{
    std::uint64_t nodes = default_node_budget;
    std::chrono::milliseconds time{0}; ///< zero means no wall-clock limit
};

/// Shared node and wall-clock accounting for one search; workers charge it in batches.
class BudgetTracker
{
public:
    explicit BudgetTracker(Budget budget) :
        _budget(budget),
        _start(std::chrono::steady_clock::now())
    {
    }

    /// Adds nodes; returns false once either limit is exceeded.
    auto charge(std::uint64_t nodes) -> bool
    {
        auto total = _nodes.fetch_add(nodes, std::memory_order_relaxed) + nodes;
        if (total > _budget.nodes)
            _exhausted.store(true, std::memory_order_relaxed);
        else if (_budget.time.count() > 0 && elapsed() > _budget.time)
            _exhausted.store(true, std::memory_order_relaxed);
        return ! exhausted();
    }

    auto exhausted() const -> bool { return _exhausted.load(std::memory_order_relaxed); }
    auto nodes() const -> std::uint64_t { return _nodes.load(std::memory_order_relaxed); }

    auto elapsed() const -> std::chrono::milliseconds
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - _start);
    }

private:
    Budget _budget;
    std::chrono::steady_clock::time_point _start;
    std::atomic<std::uint64_t> _nodes{0};
    std::atomic<bool> _exhausted{false};
};

/// Per-worker node counter that flushes into a BudgetTracker every few thousand nodes.
class NodeMeter
{
public:
    explicit NodeMeter(BudgetTracker &tracker) : _tracker(tracker) {}
    NodeMeter(const NodeMeter &) = delete;
    auto operator=(const NodeMeter &) -> NodeMeter & = delete;
    ~NodeMeter() { flush(); }

    /// Returns false when the shared budget is gone.
    auto tick() -> bool
    {
        if (++_pending < batch)
            return true;
        return flush();
    }

    auto flush() -> bool
    {
        auto pending = _pending;
        _pending = 0;
        return _tracker.charge(pending);
    }

private:
    static constexpr std::uint64_t batch = 4096;
    BudgetTracker &_tracker;
    std::uint64_t _pending = 0;
};

} // namespace pmramsey

#endif
