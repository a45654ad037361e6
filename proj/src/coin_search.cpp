#include "adversolve/coin_search.hpp"

#include <algorithm>
#include <stdexcept>

namespace adversolve {

bool CoinState::solved() const { return coin_uncertainty(*this) == 0; }

int coin_uncertainty(const CoinState& state) {
    for (int c : state.num) {
        if (c < 0) throw std::invalid_argument("negative coin count");
    }
    return 2 * state.num[0] + state.num[1] + state.num[2] - 1;
}

namespace {

// Half-plane a*y + b*z <= c with a, b in {-1, 0, 1}.
struct HalfPlane {
    int a = 0;
    int b = 0;
    long long c = 0;
};

std::vector<HalfPlane> phase2_half_planes(const CoinState& s, int k, int x, int w) {
    const long long n2 = s.num[1], n3 = s.num[2], n4 = s.num[3];
    return {
        {-1, 0, -(w - x - k)},       // x+y+k >= w
        {0, -1, -(w - n2 - n3 + x + k)},  // num2+num3-x+z-k >= w
        {1, 1, n2 + n3 - w},         // num2+num3-z-y >= w
        {-1, 0, 0},                  // y >= 0
        {0, -1, 0},                  // z >= 0
        {0, 1, n2 - x},              // x+z <= num2
        {1, -1, n3 - k},             // y+k-z <= num3
        {1, 0, k - x},               // x+y <= k
        {0, 1, k},                   // z <= k
        {-1, 0, n4 - k + x},         // k-x-y <= num4 (type-4 availability)
    };
}

}  // namespace

bool coin_phase2_pair_feasible(const CoinState& state, int k, int x, int w) {
    std::vector<HalfPlane> planes = phase2_half_planes(state, k, x, w);
    // The feasible region is bounded (0 <= y, z <= k), so it is nonempty iff
    // some pairwise line intersection satisfies every constraint. All lines
    // are axis-parallel or diagonal with integer offsets, putting every
    // vertex on the half-integer grid; coordinates are tracked doubled.
    bool nonempty = false;
    for (std::size_t i = 0; i < planes.size(); ++i) {
        for (std::size_t j = i + 1; j < planes.size(); ++j) {
            long long det = static_cast<long long>(planes[i].a) * planes[j].b -
                            static_cast<long long>(planes[j].a) * planes[i].b;
            if (det == 0) continue;
            long long y2 = 2 * (planes[i].c * planes[j].b - planes[j].c * planes[i].b);
            long long z2 = 2 * (static_cast<long long>(planes[i].a) * planes[j].c -
                                static_cast<long long>(planes[j].a) * planes[i].c);
            if (y2 % det != 0 || z2 % det != 0) continue;  // off the half-grid
            y2 /= det;
            z2 /= det;
            bool inside = true;
            for (const HalfPlane& hp : planes) {
                if (hp.a * y2 + hp.b * z2 > 2 * hp.c) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            nonempty = true;
            if (y2 % 2 == 0 && z2 % 2 == 0) return true;  // integer vertex
        }
    }
    (void)nonempty;  // nonempty without an integer vertex: not accepted
    return false;
}

namespace {

struct Phase2Search {
    int k = 0, x = 0, y = 0, z = 0;
};

bool phase2_feasible(const CoinState& s, int w, Phase2Search* found) {
    const int n = s.total();
    for (int k = 1; 2 * k <= n; ++k) {
        for (int x = 0; x <= std::min(s.num[1], k); ++x) {
            if (!coin_phase2_pair_feasible(s, k, x, w)) continue;
            if (found) {
                // Lexicographically smallest integer (y, z) inside the
                // polygon: scan y upward, take the smallest legal z.
                const long long n2 = s.num[1], n3 = s.num[2], n4 = s.num[3];
                long long ylo = std::max<long long>({0, w - x - k, k - x - n4});
                long long yhi = k - x;
                long long zlo = std::max<long long>(0, w - n2 - n3 + x + k);
                long long zhi = std::min<long long>({n2 - x, k});
                for (long long y = ylo; y <= yhi; ++y) {
                    long long z_from = std::max(zlo, y - (n3 - k));
                    long long z_to = std::min(zhi, n2 + n3 - w - y);
                    if (z_from <= z_to) {
                        *found = Phase2Search{k, x, static_cast<int>(y),
                                              static_cast<int>(z_from)};
                        return true;
                    }
                }
                // The polygon passed the vertex test but holds no integer
                // point: fall through to the next pair.
                continue;
            }
            return true;
        }
    }
    return false;
}

CoinQuestion phase1_question(const CoinState& state) {
    const int m = state.num[0];
    const int n = state.total();
    std::vector<int> targets;
    if (state.num[3] == 0) {
        // No reference coins yet: both pans hold suspects only, so S = 2k.
        targets = {2 * (m / 3), 2 * ((m + 2) / 3)};
    } else {
        targets = {2 * m / 3, (2 * m + 2) / 3};
    }
    std::optional<CoinQuestion> best;
    for (int s : targets) {
        s = std::min(s, m);
        if (state.num[3] == 0) s -= s % 2;
        if (s < 1) continue;
        int k = (s + 1) / 2;
        int x = s - k;
        if (x + k > m || k - x > state.num[3] || 2 * k > n) continue;
        CoinQuestion q;
        q.phase1 = true;
        q.k = k;
        q.x = x;
        q.guaranteed_decrement = std::min(2 * s, 2 * m - s);
        if (!best || q.guaranteed_decrement > best->guaranteed_decrement ||
            (q.guaranteed_decrement == best->guaranteed_decrement && s < best->k + best->x)) {
            best = q;
        }
    }
    if (!best) throw std::runtime_error("no feasible weighing for this coin state");
    return *best;
}

CoinQuestion phase2_question(const CoinState& state) {
    int lo = 1, hi = state.num[1] + state.num[2];
    if (!phase2_feasible(state, lo, nullptr)) {
        // No weighing guarantees progress (fewer than 3 effective coins).
        throw std::runtime_error("no feasible weighing for this coin state");
    }
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (phase2_feasible(state, mid, nullptr)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Phase2Search found;
    if (!phase2_feasible(state, lo, &found)) {
        throw std::runtime_error("phase-2 extraction failed at the optimal decrement");
    }
    CoinQuestion q;
    q.phase1 = false;
    q.k = found.k;
    q.x = found.x;
    q.y = found.y;
    q.z = found.z;
    q.guaranteed_decrement = lo;
    return q;
}

}  // namespace

CoinQuestion coin_next_question(const CoinState& state) {
    if (coin_uncertainty(state) <= 0) {
        throw std::invalid_argument("state is already solved");
    }
    if (state.phase1()) return phase1_question(state);
    if (state.phase2()) return phase2_question(state);
    throw std::invalid_argument(
        "mixed state (type 1 together with types 2/3) cannot arise under this policy");
}

int coin_decrement_formula(const CoinState& state, const CoinQuestion& q, CoinOutcome outcome) {
    if (q.phase1) {
        int s = q.k + q.x;
        return outcome == CoinOutcome::Balanced ? 2 * s : 2 * state.num[0] - s;
    }
    int n23 = state.num[1] + state.num[2];
    switch (outcome) {
        case CoinOutcome::Balanced:
            return q.x + q.y + q.k;
        case CoinOutcome::LeftLight:
            return n23 - q.x + q.z - q.k;
        case CoinOutcome::LeftHeavy:
            return n23 - q.z - q.y;
    }
    throw std::logic_error("unreachable");
}

CoinState coin_apply_answer(const CoinState& state, const CoinQuestion& q, CoinOutcome outcome) {
    const int n = state.total();
    CoinState next;
    if (q.phase1) {
        if (q.x + q.k > state.num[0] || q.k - q.x > state.num[3] || q.x < 0 ||
            q.x > q.k || q.k < 1) {
            throw std::invalid_argument("question does not fit the state");
        }
        switch (outcome) {
            case CoinOutcome::Balanced:
                next = state;
                next.num[0] -= q.x + q.k;
                next.num[3] += q.x + q.k;
                break;
            case CoinOutcome::LeftLight:
                next = CoinState{{0, q.x, q.k, n - q.x - q.k}};
                break;
            case CoinOutcome::LeftHeavy:
                next = CoinState{{0, q.k, q.x, n - q.x - q.k}};
                break;
        }
    } else {
        if (q.x < 0 || q.y < 0 || q.z < 0 || q.x + q.z > state.num[1] ||
            q.y + q.k - q.z > state.num[2] || q.x + q.y > q.k || q.z > q.k ||
            q.k - q.x - q.y > state.num[3] || q.k < 1) {
            throw std::invalid_argument("question does not fit the state");
        }
        switch (outcome) {
            case CoinOutcome::Balanced:
                next = state;
                next.num[1] -= q.x + q.z;
                next.num[2] -= q.y + (q.k - q.z);
                next.num[3] += q.x + q.z + q.y + (q.k - q.z);
                break;
            case CoinOutcome::LeftLight:
                next = CoinState{{0, q.x, q.k - q.z, n - q.x - (q.k - q.z)}};
                break;
            case CoinOutcome::LeftHeavy:
                next = CoinState{{0, q.z, q.y, n - q.z - q.y}};
                break;
        }
    }
    if (coin_uncertainty(next) < 0) {
        throw std::runtime_error("outcome is inconsistent: it would leave every coin normal");
    }
    int drop = coin_uncertainty(state) - coin_uncertainty(next);
    if (drop != coin_decrement_formula(state, q, outcome)) {
        throw std::logic_error("uncertainty decrement disagrees with its formula");
    }
    return next;
}

CoinOutcome FixedAssignmentAnswerer::outcome(const std::vector<int>& left,
                                             const std::vector<int>& right) {
    for (int c : left) {
        if (c == coin_) return lighter_ ? CoinOutcome::LeftLight : CoinOutcome::LeftHeavy;
    }
    for (int c : right) {
        if (c == coin_) return lighter_ ? CoinOutcome::LeftHeavy : CoinOutcome::LeftLight;
    }
    return CoinOutcome::Balanced;
}

AdaptiveWorstCaseAnswerer::AdaptiveWorstCaseAnswerer(int n)
    : may_be_light_(n, true), may_be_heavy_(n, true) {}

std::vector<std::pair<int, bool>> AdaptiveWorstCaseAnswerer::survivors() const {
    std::vector<std::pair<int, bool>> out;
    for (std::size_t c = 0; c < may_be_light_.size(); ++c) {
        if (may_be_light_[c]) out.emplace_back(static_cast<int>(c), true);
        if (may_be_heavy_[c]) out.emplace_back(static_cast<int>(c), false);
    }
    return out;
}

CoinOutcome AdaptiveWorstCaseAnswerer::outcome(const std::vector<int>& left,
                                               const std::vector<int>& right) {
    const int n = static_cast<int>(may_be_light_.size());
    std::vector<int> side(n, 0);  // 0 off-pan, 1 left, 2 right
    for (int c : left) side[c] = 1;
    for (int c : right) side[c] = 2;

    auto survivors_after = [&](CoinOutcome o, std::vector<bool>& light, std::vector<bool>& heavy) {
        light = may_be_light_;
        heavy = may_be_heavy_;
        long long count = 0;
        for (int c = 0; c < n; ++c) {
            bool light_ok, heavy_ok;
            if (o == CoinOutcome::Balanced) {
                light_ok = heavy_ok = side[c] == 0;
            } else if (o == CoinOutcome::LeftLight) {
                light_ok = side[c] == 1;
                heavy_ok = side[c] == 2;
            } else {
                light_ok = side[c] == 2;
                heavy_ok = side[c] == 1;
            }
            light[c] = light[c] && light_ok;
            heavy[c] = heavy[c] && heavy_ok;
            count += light[c] + heavy[c];
        }
        return count;
    };

    CoinOutcome best = CoinOutcome::Balanced;
    long long best_count = -1;
    std::vector<bool> best_light, best_heavy;
    for (CoinOutcome o : {CoinOutcome::Balanced, CoinOutcome::LeftLight, CoinOutcome::LeftHeavy}) {
        std::vector<bool> light, heavy;
        long long count = survivors_after(o, light, heavy);
        if (count > best_count) {
            best_count = count;
            best = o;
            best_light = std::move(light);
            best_heavy = std::move(heavy);
        }
    }
    if (best_count <= 0) {
        throw std::logic_error("adaptive answerer has no consistent assignment left");
    }
    may_be_light_ = std::move(best_light);
    may_be_heavy_ = std::move(best_heavy);
    return best;
}

CoinRunResult coin_run(int n, CoinAnswerer& answerer, std::vector<CoinTraceEntry>* trace) {
    if (n < 3) throw std::invalid_argument("coin search needs n >= 3");
    CoinState state = CoinState::initial(n);
    std::vector<int> klass(n, 1);  // per-coin class, 1..4

    auto take = [&](int wanted, int count, std::vector<int>& into,
                    std::vector<char>& used) {
        for (int c = 0; c < n && count > 0; ++c) {
            if (!used[c] && klass[c] == wanted) {
                into.push_back(c);
                used[c] = 1;
                --count;
            }
        }
        if (count != 0) throw std::logic_error("not enough coins of the requested class");
    };

    CoinRunResult result;
    while (coin_uncertainty(state) > 0) {
        CoinQuestion q = coin_next_question(state);
        std::vector<int> left, right;
        std::vector<char> used(n, 0);
        if (q.phase1) {
            take(1, q.x, left, used);
            take(4, q.k - q.x, left, used);
            take(1, q.k, right, used);
        } else {
            take(2, q.x, left, used);
            take(3, q.y, left, used);
            take(4, q.k - q.x - q.y, left, used);
            take(2, q.z, right, used);
            take(3, q.k - q.z, right, used);
        }
        CoinOutcome outcome = answerer.outcome(left, right);
        ++result.questions;
        CoinState next = coin_apply_answer(state, q, outcome);

        // Per-coin class updates mirroring the counting rules.
        auto on_left = [&](int c) { return std::find(left.begin(), left.end(), c) != left.end(); };
        auto on_right = [&](int c) {
            return std::find(right.begin(), right.end(), c) != right.end();
        };
        for (int c = 0; c < n; ++c) {
            bool l = on_left(c), r = on_right(c);
            if (outcome == CoinOutcome::Balanced) {
                if (l || r) klass[c] = 4;
            } else {
                bool left_light = outcome == CoinOutcome::LeftLight;
                if (!l && !r) {
                    klass[c] = 4;
                } else if (klass[c] == 1) {
                    klass[c] = (l == left_light) ? 2 : 3;
                } else if (klass[c] == 2) {
                    // {N,L} survives only on the lighter pan
                    if (l != left_light) klass[c] = 4;
                } else if (klass[c] == 3) {
                    if (l == left_light) klass[c] = 4;
                }
            }
        }
        state = next;
        std::array<int, 4> check{0, 0, 0, 0};
        for (int c = 0; c < n; ++c) ++check[klass[c] - 1];
        if (check != state.num) {
            throw std::logic_error("per-coin classes drifted from the counting state");
        }
        if (trace) {
            trace->push_back(CoinTraceEntry{q, left, right, outcome, coin_uncertainty(state)});
        }
    }

    for (int c = 0; c < n; ++c) {
        if (klass[c] == 2 || klass[c] == 3) {
            result.coin = c;
            result.lighter = klass[c] == 2;
            return result;
        }
    }
    throw std::logic_error("solved state has no suspect coin");
}

}  // namespace adversolve
