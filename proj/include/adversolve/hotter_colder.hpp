#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace adversolve {

enum class HcMode {
    ValidOnly,     // every ask must be a still-possible secret value
    Unrestricted,  // asks follow the midpoint/closer range rule only
};

// Integer half-line {z : |z - u| <= |z - v|}, the survivors of an answer that
// compares distances to u against distances to v, ties kept (the answerer may
// report either way on a tie). For u == v nothing is eliminated.
struct HalfLine {
    bool bounded_low = false;
    bool bounded_high = false;
    long long low = 0;
    long long high = 0;
};
HalfLine closer_part(int u, int v);

// Worst-case question table for the Hotter/Colder game on [1, n] with delay
// `delay` >= 1. `count` excludes the initial unanswered asks.
class HcTable {
public:
    HcTable(int n, int delay, HcMode mode);

    int n() const { return n_; }
    int delay() const { return delay_; }
    HcMode mode() const { return mode_; }
    int count() const { return count_; }
    const std::vector<int>& best_initial() const { return best_initial_; }

    // Minimal worst-case questions for secret in [a, b] with the given
    // pending asks (absolute coordinates, oldest first, exactly `delay` of
    // them).
    int questions_for(int a, int b, const std::vector<int>& pending);

    // Smallest optimal next ask for that position.
    int best_ask(int a, int b, const std::vector<int>& pending);

    // Next-ask candidates for the translated interval [1, length] and
    // translated pending asks, per the mode's range rule.
    std::vector<int> candidates(int length, const std::vector<int>& pending) const;

    std::size_t memo_size() const { return memo_.size(); }

private:
    friend HcTable hc_min_questions(int n, int delay, HcMode mode);

    // Can the player always finish within `budget` more answered questions?
    bool finishes_within(int length, std::vector<int> pending, int budget);
    int value_of(int length, const std::vector<int>& pending);
    std::vector<int> translate(int a, const std::vector<int>& pending) const;
    int clamp_offset(int offset) const;

    int n_;
    int delay_;
    HcMode mode_;
    int count_ = 0;
    std::vector<int> best_initial_;
    // key = [L, pending...]; value = (largest budget known to fail, smallest
    // budget known to suffice).
    std::map<std::vector<int>, std::pair<int, int>> memo_;
};

// Builds the table and the optimal worst-case count
// min over initial asks of T(1, n, x1..xD).
HcTable hc_min_questions(int n, int delay, HcMode mode);

struct HcPlayResult {
    int secret = 0;
    int answered_questions = 0;
    int total_asks = 0;
};

// Plays the argmin policy against an answerer. `answer_hotter(y, x)` reports
// whether the hidden value is closer to y than to x (ties may go either way).
// Throws when the answers are inconsistent (the surviving set empties).
HcPlayResult hc_play(HcTable& table, const std::function<bool(int, int)>& answer_hotter);

}  // namespace adversolve
