#include "adversolve/guess_string.hpp"

#include <stdexcept>

namespace adversolve {

bool is_subsequence(std::span<const int> candidate, std::span<const int> text) {
    std::size_t at = 0;
    for (int symbol : text) {
        if (at < candidate.size() && candidate[at] == symbol) ++at;
    }
    return at == candidate.size();
}

namespace {

enum class ZoneType { Uncertain, Empty, Certain };

struct Zone {
    ZoneType type = ZoneType::Uncertain;
    int symbol = -1;  // certain zones only
};

}  // namespace

GuessResult guess_secret_string(SubsequenceOracle& oracle, int alphabet,
                                std::vector<GuessTraceEntry>* trace, int max_length) {
    if (alphabet < 1) throw std::invalid_argument("alphabet size must be >= 1");
    std::vector<Zone> zones{Zone{}};
    std::vector<GuessTraceEntry> transcript;

    for (;;) {
        std::size_t uncertain = zones.size();
        for (std::size_t i = 0; i < zones.size(); ++i) {
            if (zones[i].type == ZoneType::Uncertain) {
                uncertain = i;
                break;
            }
        }
        if (uncertain == zones.size()) break;

        int certain_count = 0;
        for (const Zone& z : zones) certain_count += z.type == ZoneType::Certain;
        if (certain_count > max_length) {
            throw std::runtime_error("inconsistent oracle: secret length bound exceeded");
        }

        // Certain neighbours flank every uncertain zone except at the ends.
        int cstart = 0;
        if (uncertain > 0) {
            cstart = std::max(cstart, zones[uncertain - 1].symbol);
        }
        if (uncertain + 1 < zones.size()) {
            cstart = std::max(cstart, zones[uncertain + 1].symbol);
        }

        std::vector<int> prefix, suffix;
        for (std::size_t j = 0; j < uncertain; ++j) {
            if (zones[j].type == ZoneType::Certain) prefix.push_back(zones[j].symbol);
        }
        for (std::size_t j = uncertain + 1; j < zones.size(); ++j) {
            if (zones[j].type == ZoneType::Certain) suffix.push_back(zones[j].symbol);
        }

        bool split = false;
        for (int c = cstart; c < alphabet; ++c) {
            std::vector<int> candidate = prefix;
            candidate.push_back(c);
            candidate.insert(candidate.end(), suffix.begin(), suffix.end());
            bool yes = oracle.ask(candidate);
            transcript.push_back(GuessTraceEntry{std::move(candidate), yes});
            if (yes) {
                std::vector<Zone> widened;
                widened.reserve(zones.size() + 2);
                widened.insert(widened.end(), zones.begin(), zones.begin() + uncertain);
                widened.push_back(Zone{ZoneType::Uncertain, -1});
                widened.push_back(Zone{ZoneType::Certain, c});
                widened.push_back(Zone{ZoneType::Uncertain, -1});
                widened.insert(widened.end(), zones.begin() + uncertain + 1, zones.end());
                zones = std::move(widened);
                split = true;
                break;
            }
        }
        if (!split) zones[uncertain].type = ZoneType::Empty;
    }

    GuessResult result;
    for (const Zone& z : zones) {
        if (z.type == ZoneType::Certain) result.secret.push_back(z.symbol);
    }
    result.questions = oracle.questions();

    for (const GuessTraceEntry& entry : transcript) {
        if (is_subsequence(entry.asked, result.secret) != entry.answer) {
            throw std::runtime_error("inconsistent oracle: transcript contradicts the result");
        }
    }
    if (trace) *trace = std::move(transcript);
    return result;
}

}  // namespace adversolve
