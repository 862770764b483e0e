#ifndef FORBCFG_SEARCH_HPP
#define FORBCFG_SEARCH_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "config_check.hpp"
#include "matrix.hpp"

namespace forbcfg {

struct SearchOptions {
    double budget_seconds = 300.0;
    unsigned jobs = 1;
    /// Nodes with at most this many chosen columns are dropped unless the
    /// chosen set is the least among its row-permutation images.
    int symmetry_depth = 2;
};

struct SearchResult {
    int value = 0;
    BinaryMatrix witness;
    bool optimal = false; ///< the search space was exhausted
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
};

struct EnumerationResult {
    int value = 0;
    std::vector<BinaryMatrix> classes; ///< canonical forms, ascending
    bool exhaustive = false;
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
};

/// Largest m the pair-count engine accepts.
inline constexpr int kSearchRowLimit = 10;

namespace detail {

/// Fixed-width set of column indices.
template <std::size_t W>
class ColumnSet {
public:
    static constexpr std::size_t kCapacity = 64 * W;

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    int count() const
    {
        int n = 0;
        for (auto w : words_)
            n += std::popcount(w);
        return n;
    }
    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    std::size_t lowest() const
    {
        for (std::size_t k = 0; k < W; ++k)
            if (words_[k])
                return 64 * k + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return kCapacity;
    }

    ColumnSet operator&(const ColumnSet& o) const
    {
        ColumnSet r;
        for (std::size_t k = 0; k < W; ++k)
            r.words_[k] = words_[k] & o.words_[k];
        return r;
    }
    ColumnSet& operator|=(const ColumnSet& o)
    {
        for (std::size_t k = 0; k < W; ++k)
            words_[k] |= o.words_[k];
        return *this;
    }
    ColumnSet minus(const ColumnSet& o) const
    {
        ColumnSet r;
        for (std::size_t k = 0; k < W; ++k)
            r.words_[k] = words_[k] & ~o.words_[k];
        return r;
    }
    int count_and(const ColumnSet& o) const
    {
        int n = 0;
        for (std::size_t k = 0; k < W; ++k)
            n += std::popcount(words_[k] & o.words_[k]);
        return n;
    }
    /// Sets of equal size compare as their ascending sequences: the
    /// smaller set holds the least element of the symmetric difference.
    friend bool lex_less(const ColumnSet& a, const ColumnSet& b)
    {
        for (std::size_t k = 0; k < W; ++k) {
            std::uint64_t d = a.words_[k] ^ b.words_[k];
            if (d)
                return (a.words_[k] & d & (~d + 1)) != 0;
        }
        return false;
    }
    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t k = 0; k < W; ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(64 * k + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }
    bool operator==(const ColumnSet&) const = default;

private:
    std::array<std::uint64_t, W> words_{};
};

/// Pair rule for avoiding F(0,p,1,0); counts are "1 in row a, 0 in row b".
struct AvoidTwoRowRule {
    int p;

    /// Whether one more column with 1 in a and 0 in b creates the configuration.
    bool blocks(int ab, int ba) const { return (ab + 1 >= p && ba >= 1) || ba >= p; }

    /// Most further columns differing on {a, b} that this pair alone admits,
    /// given ra (resp. rb) candidates of each orientation.
    int capacity(int ab, int ba, int ra, int rb) const
    {
        int best = 0;
        if (ba == 0)
            best = std::max(best, ra);
        if (ab == 0)
            best = std::max(best, rb);
        if (ab <= p - 1 && ba <= p - 1)
            best = std::max(best, std::min(ra, p - 1 - ab) + std::min(rb, p - 1 - ba));
        return best;
    }
};

/// Pair rule for "rows differ in at most t columns".
struct BoundedDifferenceRule {
    int t;

    bool blocks(int ab, int ba) const { return ab + ba >= t; }
    int capacity(int ab, int ba, int ra, int rb) const { return std::min(ra + rb, t - ab - ba); }
};

enum class Mode { Maximize, Enumerate };

/// Branch and bound over the non-constant columns of K_m (index i holds
/// mask i+1), taken in ascending mask order.
template <std::size_t W, class Rule>
class PairCountSearch {
    using Set = ColumnSet<W>;

public:
    PairCountSearch(int m, Rule rule, const SearchOptions& options, Mode mode, int target)
        : m_(m), n_((std::size_t{1} << m) - 2), rule_(rule), options_(options), mode_(mode)
    {
        if (n_ > Set::kCapacity)
            throw std::logic_error("PairCountSearch: column set too narrow");
        best_.store(mode == Mode::Enumerate ? target : -1);
        target_ = target;

        pair_sets_.resize(static_cast<std::size_t>(m * m));
        for (std::size_t i = 0; i < n_; ++i) {
            const ColumnMask mask = i + 1;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    if (a != b && ((mask >> a) & 1U) && !((mask >> b) & 1U))
                        pair_sets_[static_cast<std::size_t>(a * m + b)].set(i);
            all_.set(i);
        }
        // Weight classes ordered by how many ordered pairs a column occupies.
        for (int w = 1; w < m; ++w) {
            Set s;
            for (std::size_t i = 0; i < n_; ++i)
                if (weight(i + 1) == w)
                    s.set(i);
            weight_classes_.push_back({w * (m - w), s});
        }
        std::sort(weight_classes_.begin(), weight_classes_.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });

        if (options.symmetry_depth > 0 && m <= 7) {
            std::vector<int> perm(static_cast<std::size_t>(m));
            std::iota(perm.begin(), perm.end(), 0);
            while (std::next_permutation(perm.begin(), perm.end())) {
                std::vector<std::uint16_t> image(n_);
                for (std::size_t i = 0; i < n_; ++i)
                    image[i] = static_cast<std::uint16_t>(permute_bits(i + 1, perm) - 1);
                perms_.push_back(std::move(image));
            }
        }
    }

    void run()
    {
        start_ = std::chrono::steady_clock::now();
        if (options_.jobs <= 1) {
            Worker w(*this);
            w.dfs(all_, 0);
            w.flush();
        } else {
            run_parallel();
        }
        elapsed_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    int best() const { return best_.load(); }
    bool exhausted() const { return !stop_.load(); }
    std::uint64_t nodes() const { return nodes_.load(); }
    double elapsed() const { return elapsed_; }

    /// Non-constant column masks of the best set found.
    std::vector<ColumnMask> best_columns() const
    {
        std::lock_guard lock(witness_mutex_);
        return to_masks(best_set_);
    }
    std::vector<std::vector<ColumnMask>> leaves() const
    {
        std::lock_guard lock(witness_mutex_);
        std::vector<std::vector<ColumnMask>> out;
        for (const auto& s : leaves_)
            out.push_back(to_masks(s));
        return out;
    }

private:
    class Worker {
    public:
        explicit Worker(PairCountSearch& s)
            : s_(s), counts_(static_cast<std::size_t>(s.m_ * s.m_), 0)
        {
        }

        void add(std::size_t i)
        {
            chosen_.set(i);
            ++size_;
            update(i + 1, +1);
        }
        void remove(std::size_t i)
        {
            chosen_.reset(i);
            --size_;
            update(i + 1, -1);
        }

        Set blocked() const
        {
            Set out;
            const int m = s_.m_;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    if (a != b && s_.rule_.blocks(count(a, b), count(b, a)))
                        out |= s_.pair_sets_[static_cast<std::size_t>(a * m + b)];
            return out;
        }

        int bound(const Set& remaining) const
        {
            const int m = s_.m_;
            const int free = remaining.count();
            int best = size_ + free;
            long budget = 0;
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b) {
                    const int ra = remaining.count_and(s_.pair_sets_[static_cast<std::size_t>(a * m + b)]);
                    const int rb = remaining.count_and(s_.pair_sets_[static_cast<std::size_t>(b * m + a)]);
                    const int cap = s_.rule_.capacity(count(a, b), count(b, a), ra, rb);
                    best = std::min(best, size_ + free - ra - rb + cap);
                    budget += cap;
                }
            // Every column with w ones uses w(m-w) ordered-pair slots.
            int greedy = 0;
            for (const auto& [cost, cls] : s_.weight_classes_) {
                const int avail = remaining.count_and(cls);
                const int take = static_cast<int>(std::min<long>(avail, budget / cost));
                greedy += take;
                budget -= static_cast<long>(take) * cost;
                if (take < avail)
                    break;
            }
            return std::min(best, size_ + greedy);
        }

        bool canonical() const
        {
            for (const auto& image : s_.perms_) {
                Set mapped;
                chosen_.for_each([&](std::size_t i) { mapped.set(image[i]); });
                if (lex_less(mapped, chosen_))
                    return false;
            }
            return true;
        }

        /// Explores supersets of the chosen set drawn from `remaining`,
        /// whose members are all admissible and above every chosen index.
        void dfs(Set remaining, int depth)
        {
            if ((++local_nodes_ & 1023U) == 0 && s_.out_of_time())
                return;
            if (s_.stop_.load(std::memory_order_relaxed))
                return;
            if (s_.mode_ == Mode::Maximize) {
                if (size_ > s_.best_.load(std::memory_order_relaxed))
                    s_.offer(chosen_, size_);
            } else if (size_ == s_.target_) {
                s_.record_leaf(chosen_);
                return;
            }
            while (!remaining.empty()) {
                const int limit = s_.best_.load(std::memory_order_relaxed);
                const int b = bound(remaining);
                if (s_.mode_ == Mode::Maximize ? b <= limit : b < s_.target_)
                    return;
                const std::size_t c = remaining.lowest();
                remaining.reset(c);
                add(c);
                if (depth + 1 > s_.options_.symmetry_depth || s_.perms_.empty() || canonical())
                    dfs(remaining.minus(blocked()), depth + 1);
                remove(c);
                if (s_.stop_.load(std::memory_order_relaxed))
                    return;
            }
        }

        void flush() { s_.nodes_.fetch_add(local_nodes_); local_nodes_ = 0; }

    private:
        int count(int a, int b) const { return counts_[static_cast<std::size_t>(a * s_.m_ + b)]; }

        void update(ColumnMask mask, int delta)
        {
            const int m = s_.m_;
            for (int a = 0; a < m; ++a) {
                if (!((mask >> a) & 1U))
                    continue;
                for (int b = 0; b < m; ++b)
                    if (!((mask >> b) & 1U))
                        counts_[static_cast<std::size_t>(a * m + b)] += delta;
            }
        }

        PairCountSearch& s_;
        std::vector<int> counts_;
        Set chosen_;
        int size_ = 0;
        std::uint64_t local_nodes_ = 0;

        friend class PairCountSearch;
    };

    void run_parallel()
    {
        // Tasks are the depth-two nodes in sequential visiting order.
        struct Task {
            std::size_t first, second;
        };
        std::vector<Task> tasks;
        {
            Worker w(*this);
            if (mode_ == Mode::Maximize && 0 > best_.load())
                offer(w.chosen_, 0);
            all_.for_each([&](std::size_t c) {
                w.add(c);
                if (perms_.empty() || w.canonical()) {
                    if (mode_ == Mode::Maximize && 1 > best_.load())
                        offer(w.chosen_, 1);
                    Set rest;
                    for (std::size_t i = c + 1; i < n_; ++i)
                        rest.set(i);
                    rest = rest.minus(w.blocked());
                    rest.for_each([&](std::size_t d) { tasks.push_back({c, d}); });
                }
                w.remove(c);
            });
        }
        std::atomic<std::size_t> next{0};
        auto body = [&] {
            Worker w(*this);
            for (std::size_t k = next.fetch_add(1); k < tasks.size(); k = next.fetch_add(1)) {
                if (stop_.load())
                    break;
                const auto [c, d] = tasks[k];
                w.add(c);
                Set rest;
                for (std::size_t i = c + 1; i < n_; ++i)
                    rest.set(i);
                rest = rest.minus(w.blocked());
                rest.reset(d);
                w.add(d);
                bool keep = options_.symmetry_depth < 2 || perms_.empty() || w.canonical();
                if (keep) {
                    Set after;
                    rest.for_each([&](std::size_t i) {
                        if (i > d)
                            after.set(i);
                    });
                    w.dfs(after.minus(w.blocked()), 2);
                }
                w.remove(d);
                w.remove(c);
            }
            w.flush();
        };
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < options_.jobs; ++j)
            pool.emplace_back(body);
        for (auto& t : pool)
            t.join();
    }

    bool out_of_time()
    {
        const double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (spent > options_.budget_seconds)
            stop_.store(true);
        return stop_.load();
    }

    void offer(const Set& chosen, int size)
    {
        std::lock_guard lock(witness_mutex_);
        if (size > best_.load()) {
            best_.store(size);
            best_set_ = chosen;
        }
    }

    void record_leaf(const Set& chosen)
    {
        std::lock_guard lock(witness_mutex_);
        leaves_.push_back(chosen);
    }

    std::vector<ColumnMask> to_masks(const Set& s) const
    {
        std::vector<ColumnMask> out;
        s.for_each([&](std::size_t i) { out.push_back(i + 1); });
        return out;
    }

    int m_;
    std::size_t n_;
    Rule rule_;
    SearchOptions options_;
    Mode mode_;
    int target_ = 0;

    std::vector<Set> pair_sets_;
    std::vector<std::pair<int, Set>> weight_classes_;
    std::vector<std::vector<std::uint16_t>> perms_;
    Set all_;

    std::atomic<int> best_{-1};
    std::atomic<bool> stop_{false};
    std::atomic<std::uint64_t> nodes_{0};
    mutable std::mutex witness_mutex_;
    Set best_set_;
    std::vector<Set> leaves_;
    std::chrono::steady_clock::time_point start_;
    double elapsed_ = 0.0;
};

struct PairSearchOutcome {
    int best = 0; ///< non-constant columns
    std::vector<ColumnMask> columns;
    std::vector<std::vector<ColumnMask>> leaves;
    bool exhausted = false;
    std::uint64_t nodes = 0;
    double elapsed = 0.0;
};

template <std::size_t W, class Rule>
PairSearchOutcome run_pair_search(int m, Rule rule, const SearchOptions& options, Mode mode, int target)
{
    PairCountSearch<W, Rule> search(m, rule, options, mode, target);
    search.run();
    return {search.best(), search.best_columns(), search.leaves(), search.exhausted(), search.nodes(),
            search.elapsed()};
}

template <class Rule>
PairSearchOutcome pair_search(int m, Rule rule, const SearchOptions& options, Mode mode, int target = 0)
{
    switch (m) {
    case 1:
    case 2:
    case 3:
    case 4:
    case 5:
    case 6:
        return run_pair_search<1>(m, rule, options, mode, target);
    case 7:
        return run_pair_search<2>(m, rule, options, mode, target);
    case 8:
        return run_pair_search<4>(m, rule, options, mode, target);
    case 9:
        return run_pair_search<8>(m, rule, options, mode, target);
    case 10:
        return run_pair_search<16>(m, rule, options, mode, target);
    default:
        throw std::invalid_argument("search supports 1 <= m <= " + std::to_string(kSearchRowLimit) + ", got " +
                                    std::to_string(m));
    }
}

inline void check_search_args(int m, const SearchOptions& options)
{
    if (!(options.budget_seconds > 0))
        throw std::invalid_argument("search budget must be positive");
    if (m > BinaryMatrix::kMaxRows)
        throw std::invalid_argument("m must be at most 63");
    if (m < 1 || m > kSearchRowLimit)
        throw std::invalid_argument("search supports 1 <= m <= " + std::to_string(kSearchRowLimit) + ", got " +
                                    std::to_string(m));
}

inline BinaryMatrix with_constant_columns(int m, const std::vector<ColumnMask>& nonconstant)
{
    std::vector<ColumnMask> columns{0};
    columns.insert(columns.end(), nonconstant.begin(), nonconstant.end());
    if (m >= 1)
        columns.push_back(all_ones_mask(m));
    return BinaryMatrix(m, std::move(columns));
}

/// Plain branch and bound over all 2^m columns for an arbitrary F, with a
/// full containment test at every node.
class GeneralSearch {
public:
    GeneralSearch(int m, BinaryMatrix f, const SearchOptions& options, Mode mode, int target)
        : m_(m), f_(std::move(f)), options_(options), mode_(mode), target_(target),
          best_(mode == Mode::Enumerate ? target : -1)
    {
    }

    void run()
    {
        start_ = std::chrono::steady_clock::now();
        const std::size_t universe = std::size_t{1} << m_;
        std::vector<ColumnMask> candidates(universe);
        std::iota(candidates.begin(), candidates.end(), ColumnMask{0});
        dfs(candidates, 0);
        elapsed_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    int m_;
    BinaryMatrix f_;
    SearchOptions options_;
    Mode mode_;
    int target_;
    int best_;
    std::vector<ColumnMask> chosen_;
    std::vector<ColumnMask> best_columns_;
    std::vector<std::vector<ColumnMask>> leaves_;
    bool stopped_ = false;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
    double elapsed_ = 0.0;

private:
    void dfs(const std::vector<ColumnMask>& candidates, std::size_t from)
    {
        if ((++nodes_ & 255U) == 0 &&
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() > options_.budget_seconds)
            stopped_ = true;
        if (stopped_)
            return;
        const int size = static_cast<int>(chosen_.size());
        if (mode_ == Mode::Maximize && size > best_) {
            best_ = size;
            best_columns_ = chosen_;
        }
        if (mode_ == Mode::Enumerate && size == target_) {
            leaves_.push_back(chosen_);
            return;
        }
        for (std::size_t k = from; k < candidates.size(); ++k) {
            const int bound = size + static_cast<int>(candidates.size() - k);
            if (mode_ == Mode::Maximize ? bound <= best_ : bound < target_)
                return;
            chosen_.push_back(candidates[k]);
            if (!contains_general(BinaryMatrix(m_, chosen_), f_))
                dfs(candidates, k + 1);
            chosen_.pop_back();
            if (stopped_)
                return;
        }
    }
};

} // namespace detail

/// forb(m, F) by exhaustive branch and bound.
///
/// For F(0,p,1,0) the all-zero and all-ones columns never take part in a
/// configuration and are always present; the search runs over the 2^m - 2
/// non-constant columns with pair-count pruning. Other patterns use a plain
/// search with full containment checks.
inline SearchResult forb_search(int m, const ForbiddenPattern& pattern, const SearchOptions& options = {})
{
    detail::check_search_args(m, options);
    SearchResult out;
    if (pattern.is_two_row()) {
        auto r = detail::pair_search(m, detail::AvoidTwoRowRule{pattern.p()}, options, detail::Mode::Maximize);
        out.witness = detail::with_constant_columns(m, r.columns);
        out.value = static_cast<int>(out.witness.cols());
        out.optimal = r.exhausted;
        out.nodes = r.nodes;
        out.elapsed_seconds = r.elapsed;
    } else {
        detail::GeneralSearch s(m, pattern.expand(), options, detail::Mode::Maximize, 0);
        s.run();
        out.witness = BinaryMatrix(m, s.best_columns_);
        out.value = s.best_;
        out.optimal = !s.stopped_;
        out.nodes = s.nodes_;
        out.elapsed_seconds = s.elapsed_;
    }
    return out;
}

/// Ext(m, F) up to row and column permutation.
///
/// Establishes forb(m, F) first, then lists every avoiding set of that size
/// without symmetry pruning and deduplicates by canonical form.
inline EnumerationResult enumerate_extremal(int m, const ForbiddenPattern& pattern, const SearchOptions& options = {})
{
    detail::check_search_args(m, options);
    if (m > kCanonicalRowLimit)
        throw std::invalid_argument("enumerate_extremal: canonical forms need m <= 10");
    const auto start = std::chrono::steady_clock::now();
    const SearchResult opt = forb_search(m, pattern, options);

    EnumerationResult out;
    out.value = opt.value;
    out.nodes = opt.nodes;
    SearchOptions rest = options;
    rest.symmetry_depth = 0;
    rest.budget_seconds = std::max(1e-3, options.budget_seconds - opt.elapsed_seconds);

    std::vector<BinaryMatrix> found;
    bool exhausted = opt.optimal;
    if (pattern.is_two_row()) {
        auto r = detail::pair_search(m, detail::AvoidTwoRowRule{pattern.p()}, rest, detail::Mode::Enumerate,
                                     opt.value - 2);
        for (const auto& leaf : r.leaves)
            found.push_back(detail::with_constant_columns(m, leaf));
        exhausted = exhausted && r.exhausted;
        out.nodes += r.nodes;
    } else {
        detail::GeneralSearch s(m, pattern.expand(), rest, detail::Mode::Enumerate, opt.value);
        s.run();
        for (const auto& leaf : s.leaves_)
            found.push_back(BinaryMatrix(m, leaf));
        exhausted = exhausted && !s.stopped_;
        out.nodes += s.nodes_;
    }
    std::set<std::vector<ColumnMask>> seen;
    for (const auto& a : found)
        seen.insert(canonical_form(a).sorted_columns());
    for (const auto& cols : seen)
        out.classes.emplace_back(m, cols);
    out.exhaustive = exhausted;
    out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

/// Largest simple k-rowed matrix of non-constant columns in which every
/// pair of rows differs in at most t columns.
inline SearchResult max_bounded_diff(int k, int t, const SearchOptions& options = {})
{
    detail::check_search_args(k, options);
    if (k < 2)
        throw std::invalid_argument("max_bounded_diff needs k >= 2");
    if (t < 0)
        throw std::invalid_argument("max_bounded_diff needs t >= 0");
    auto r = detail::pair_search(k, detail::BoundedDifferenceRule{t}, options, detail::Mode::Maximize);
    SearchResult out;
    out.witness = BinaryMatrix(k, r.columns);
    out.value = static_cast<int>(r.columns.size());
    out.optimal = r.exhausted;
    out.nodes = r.nodes;
    out.elapsed_seconds = r.elapsed;
    return out;
}

} // namespace forbcfg

#endif // FORBCFG_SEARCH_HPP
