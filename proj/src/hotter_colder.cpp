#include "adversolve/hotter_colder.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace adversolve {

namespace {

long long floor_div2(long long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
long long ceil_div2(long long v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }

int distance_to_interval(long long z, int length) {
    if (z < 1) return static_cast<int>(1 - z);
    if (z > length) return static_cast<int>(z - length);
    return 0;
}

struct Interval {
    int lo = 1;
    int hi = 0;
    bool empty() const { return lo > hi; }
    int length() const { return hi - lo + 1; }
};

Interval intersect(int lo, int hi, const HalfLine& hl) {
    Interval out{lo, hi};
    if (hl.bounded_low) out.lo = std::max<long long>(out.lo, hl.low);
    if (hl.bounded_high) out.hi = std::min<long long>(out.hi, hl.high);
    return out;
}

}  // namespace

HalfLine closer_part(int u, int v) {
    HalfLine hl;
    if (u < v) {
        hl.bounded_high = true;
        hl.high = floor_div2(static_cast<long long>(u) + v);
    } else if (u > v) {
        hl.bounded_low = true;
        hl.low = ceil_div2(static_cast<long long>(u) + v);
    }
    // u == v: every z ties, nothing is eliminated.
    return hl;
}

HcTable::HcTable(int n, int delay, HcMode mode) : n_(n), delay_(delay), mode_(mode) {
    if (n < 1) throw std::invalid_argument("hotter/colder needs n >= 1");
    if (delay < 1) throw std::invalid_argument("delay must be >= 1");
}

int HcTable::clamp_offset(int offset) const {
    // Candidates live in [-2n, 3n+1]. A comparator at or beyond [-3n, 4n+2]
    // is strictly farther from every surviving interval than any candidate,
    // so against every candidate the comparison saturates (the whole interval
    // is closer to the ask) and all such comparators act identically; folding
    // them onto the clamp edge keeps the memo key space finite without
    // changing any value.
    return std::clamp(offset, -3 * n_, 4 * n_ + 2);
}

std::vector<int> HcTable::translate(int a, const std::vector<int>& pending) const {
    std::vector<int> offsets;
    offsets.reserve(pending.size());
    for (int x : pending) offsets.push_back(clamp_offset(x - (a - 1)));
    return offsets;
}

std::vector<int> HcTable::candidates(int length, const std::vector<int>& pending) const {
    std::vector<int> out;
    if (mode_ == HcMode::ValidOnly) {
        out.reserve(length);
        for (int y = 1; y <= length; ++y) out.push_back(y);
        return out;
    }
    const int x = pending.front();
    const int dist_x = distance_to_interval(x, length);
    for (int y = -2 * n_; y <= 3 * n_ + 1; ++y) {
        bool midpoint_ok = 2 <= x + y && x + y <= 2 * length;
        bool closer_ok = dist_x > 0 && distance_to_interval(y, length) < dist_x;
        if (midpoint_ok || closer_ok) out.push_back(y);
    }
    return out;
}

bool HcTable::finishes_within(int length, std::vector<int> pending, int budget) {
    if (length <= 1) return true;
    std::vector<int> key;
    key.reserve(pending.size() + 1);
    key.push_back(length);
    key.insert(key.end(), pending.begin(), pending.end());
    auto [it, inserted] = memo_.try_emplace(
        std::move(key), std::make_pair(-1, std::numeric_limits<int>::max()));
    auto& [max_failed, min_ok] = it->second;
    if (budget >= min_ok) return true;
    if (budget <= max_failed) return false;

    bool ok = false;
    if (budget > 0) {
        const int x = pending.front();
        for (int y : candidates(length, pending)) {
            Interval hotter = intersect(1, length, closer_part(y, x));
            Interval colder = intersect(1, length, closer_part(x, y));
            bool feasible = true;
            for (const Interval& branch : {hotter, colder}) {
                if (branch.empty()) continue;  // that answer can never be given
                std::vector<int> next;
                next.reserve(pending.size());
                for (std::size_t i = 1; i < pending.size(); ++i) {
                    next.push_back(clamp_offset(pending[i] - (branch.lo - 1)));
                }
                next.push_back(clamp_offset(y - (branch.lo - 1)));
                if (!finishes_within(branch.length(), std::move(next), budget - 1)) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) {
                ok = true;
                break;
            }
        }
    }
    // The iterator stays valid: recursive calls only insert into the map.
    if (ok) {
        min_ok = std::min(min_ok, budget);
    } else {
        max_failed = std::max(max_failed, budget);
    }
    return ok;
}

int HcTable::value_of(int length, const std::vector<int>& pending) {
    const int cap = 2 * n_ + 2 * delay_ + 6;
    for (int budget = 0; budget <= cap; ++budget) {
        if (finishes_within(length, pending, budget)) return budget;
    }
    throw std::logic_error("hotter/colder value exceeded its search cap");
}

int HcTable::questions_for(int a, int b, const std::vector<int>& pending) {
    if (static_cast<int>(pending.size()) != delay_) {
        throw std::invalid_argument("pending ask count must equal the delay");
    }
    if (b < a) throw std::invalid_argument("empty candidate interval");
    return value_of(b - a + 1, translate(a, pending));
}

int HcTable::best_ask(int a, int b, const std::vector<int>& pending) {
    const int length = b - a + 1;
    std::vector<int> offsets = translate(a, pending);
    const int value = value_of(length, offsets);
    const int x = offsets.front();
    for (int y : candidates(length, offsets)) {
        Interval hotter = intersect(1, length, closer_part(y, x));
        Interval colder = intersect(1, length, closer_part(x, y));
        bool feasible = true;
        for (const Interval& branch : {hotter, colder}) {
            if (branch.empty()) continue;
            std::vector<int> next;
            for (std::size_t i = 1; i < offsets.size(); ++i) {
                next.push_back(clamp_offset(offsets[i] - (branch.lo - 1)));
            }
            next.push_back(clamp_offset(y - (branch.lo - 1)));
            if (!finishes_within(branch.length(), std::move(next), value - 1)) {
                feasible = false;
                break;
            }
        }
        if (feasible) return y + (a - 1);
    }
    throw std::logic_error("no ask realizes the computed value");
}

HcTable hc_min_questions(int n, int delay, HcMode mode) {
    HcTable table(n, delay, mode);
    if (n == 1) return table;  // already solved, no asks at all

    int best = std::numeric_limits<int>::max();
    std::vector<int> best_tuple;
    std::vector<int> tuple;
    // Initial asks: the first must be a potential secret; later unanswered
    // asks follow the mode's range rule against their predecessor.
    auto enumerate = [&](auto&& self) -> void {
        if (static_cast<int>(tuple.size()) == delay) {
            int v = table.value_of(n, table.translate(1, tuple));
            if (v < best || (v == best && tuple < best_tuple)) {
                best = v;
                best_tuple = tuple;
            }
            return;
        }
        if (tuple.empty()) {
            for (int x = 1; x <= n; ++x) {
                tuple.push_back(x);
                self(self);
                tuple.pop_back();
            }
            return;
        }
        if (mode == HcMode::ValidOnly) {
            for (int x = 1; x <= n; ++x) {
                tuple.push_back(x);
                self(self);
                tuple.pop_back();
            }
        } else {
            int prev = tuple.back();
            int dist_prev = distance_to_interval(prev, n);
            for (int y = -2 * n; y <= 3 * n + 1; ++y) {
                bool midpoint_ok = 2 <= prev + y && prev + y <= 2 * n;
                bool closer_ok = dist_prev > 0 && distance_to_interval(y, n) < dist_prev;
                if (!midpoint_ok && !closer_ok) continue;
                tuple.push_back(y);
                self(self);
                tuple.pop_back();
            }
        }
    };
    enumerate(enumerate);
    table.count_ = best;
    table.best_initial_ = best_tuple;
    return table;
}

HcPlayResult hc_play(HcTable& table, const std::function<bool(int, int)>& answer_hotter) {
    HcPlayResult out;
    if (table.n() == 1) {
        out.secret = 1;
        return out;
    }
    int a = 1;
    int b = table.n();
    std::vector<int> pending = table.best_initial();
    out.total_asks = static_cast<int>(pending.size());
    while (a < b) {
        int y = table.best_ask(a, b, pending);
        int x = pending.front();
        ++out.total_asks;
        ++out.answered_questions;
        bool hotter = answer_hotter(y, x);
        HalfLine hl = hotter ? closer_part(y, x) : closer_part(x, y);
        Interval next = intersect(a, b, hl);
        if (next.empty()) {
            throw std::runtime_error("inconsistent Hotter/Colder answers: no candidate left");
        }
        a = next.lo;
        b = next.hi;
        pending.erase(pending.begin());
        pending.push_back(y);
    }
    out.secret = a;
    return out;
}

}  // namespace adversolve
