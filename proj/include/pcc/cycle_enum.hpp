#pragma once

// Exhaustive enumeration of properly colored simple cycles by DFS over
// color-constrained simple paths.
//
// Every cycle is visited exactly once, in canonical form:
//   - the first vertex is the smallest vertex of the cycle;
//   - undirected cycles additionally fix the direction by requiring
//     second vertex < last vertex.
// With DFS children explored in ascending vertex order, canonical forms are
// produced in lexicographic order of their vertex sequences, which is what
// the deterministic tie-breaking in detect/search relies on.
//
// The color oracle is any callable (u, v) -> color, 0 meaning absent.
// For digraphs it is queried as (tail, head).

#include <cstdint>
#include <functional>
#include <vector>

namespace pcc {

enum class Walk { Continue, Stop };

struct EnumStats {
    std::uint64_t nodes_explored = 0;  // path extensions tried
    std::uint64_t cycles_seen = 0;
};

namespace detail {

template <bool Directed, class ColorAt, class Fn>
class PcCycleDfs {
public:
    PcCycleDfs(int n, ColorAt& color_at, Fn& fn, const int* len_cap, EnumStats* stats)
        : n_(n), color_at_(color_at), fn_(fn), len_cap_(len_cap), stats_(stats),
          used_(static_cast<std::size_t>(n), false) {}

    bool run() {
        for (int r = 0; r < n_; ++r) {
            path_.assign(1, r);
            cols_.clear();
            used_.assign(used_.size(), false);
            used_[static_cast<std::size_t>(r)] = true;
            if (!extend()) return false;  // stopped by callback
        }
        return true;
    }

private:
    static constexpr std::size_t min_len = Directed ? 2 : 3;

    bool extend() {
        const int r = path_.front();
        const int u = path_.back();

        // close the cycle back to the root
        if (path_.size() >= min_len && (!len_cap_ || path_.size() < static_cast<std::size_t>(*len_cap_))) {
            bool canonical = Directed || path_[1] < u;
            if (canonical) {
                int cc = color_at_(u, r);
                if (cc != 0 && cc != cols_.back() && cc != cols_.front()) {
                    if (stats_) ++stats_->cycles_seen;
                    cols_.push_back(cc);
                    Walk w = fn_(path_, cols_);
                    cols_.pop_back();
                    if (w == Walk::Stop) return false;
                }
            }
        }

        // a path of size L only ever closes to cycles of length >= L
        if (len_cap_ && path_.size() + 1 >= static_cast<std::size_t>(*len_cap_)) return true;
        for (int w = r + 1; w < n_; ++w) {
            if (used_[static_cast<std::size_t>(w)]) continue;
            int cc = color_at_(u, w);
            if (cc == 0) continue;
            if (!cols_.empty() && cc == cols_.back()) continue;
            if (stats_) ++stats_->nodes_explored;
            used_[static_cast<std::size_t>(w)] = true;
            path_.push_back(w);
            cols_.push_back(cc);
            bool keep_going = extend();
            cols_.pop_back();
            path_.pop_back();
            used_[static_cast<std::size_t>(w)] = false;
            if (!keep_going) return false;
        }
        return true;
    }

    int n_;
    ColorAt& color_at_;
    Fn& fn_;
    const int* len_cap_;
    EnumStats* stats_;
    std::vector<int> path_;
    std::vector<int> cols_;
    std::vector<char> used_;
};

}  // namespace detail

/// Calls fn(vertices, colors) for every properly colored simple cycle
/// (undirected, length >= 3) of the n-vertex graph described by color_at.
/// fn returns Walk::Stop to abort. If len_cap is given, only cycles of
/// length < *len_cap are explored (read before each extension, so the
/// callback may shrink it).
template <class ColorAt, class Fn>
void for_each_pc_cycle(int n, ColorAt color_at, Fn fn, const int* len_cap = nullptr,
                       EnumStats* stats = nullptr) {
    detail::PcCycleDfs<false, ColorAt, Fn> dfs(n, color_at, fn, len_cap, stats);
    dfs.run();
}

/// Directed variant: properly colored directed simple cycles, length >= 2.
template <class ColorAt, class Fn>
void for_each_pc_dicycle(int n, ColorAt color_at, Fn fn, const int* len_cap = nullptr,
                         EnumStats* stats = nullptr) {
    detail::PcCycleDfs<true, ColorAt, Fn> dfs(n, color_at, fn, len_cap, stats);
    dfs.run();
}

}  // namespace pcc
