#pragma once

#include <span>
#include <vector>

namespace adversolve {

// Answers subsequence queries against a secret string over [0, K-1].
// `ask` counts questions; implementations provide `answer`.
class SubsequenceOracle {
public:
    virtual ~SubsequenceOracle() = default;

    bool ask(const std::vector<int>& candidate) {
        ++questions_;
        return answer(candidate);
    }
    int questions() const { return questions_; }

protected:
    virtual bool answer(const std::vector<int>& candidate) = 0;

private:
    int questions_ = 0;
};

bool is_subsequence(std::span<const int> candidate, std::span<const int> text);

class FixedSecretOracle final : public SubsequenceOracle {
public:
    explicit FixedSecretOracle(std::vector<int> secret) : secret_(std::move(secret)) {}
    const std::vector<int>& secret() const { return secret_; }

protected:
    bool answer(const std::vector<int>& candidate) override {
        return is_subsequence(candidate, secret_);
    }

private:
    std::vector<int> secret_;
};

struct GuessTraceEntry {
    std::vector<int> asked;
    bool answer = false;
};

struct GuessResult {
    std::vector<int> secret;
    int questions = 0;
};

// Recovers the secret through zone-representation rounds: the first uncertain
// zone is probed with symbols cstart..K-1 (cstart = larger flanking certain
// symbol), split on the first yes, turned into an empty zone otherwise. Asks
// at most (K+1)*(L+1) questions for a secret of length L. An oracle whose
// answers contradict the recovered string (or that keeps confirming symbols
// past `max_length`) raises std::runtime_error.
GuessResult guess_secret_string(SubsequenceOracle& oracle, int alphabet,
                                std::vector<GuessTraceEntry>* trace = nullptr,
                                int max_length = 100000);

}  // namespace adversolve
