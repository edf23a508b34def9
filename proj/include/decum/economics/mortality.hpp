#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "decum/common.hpp"
#include "decum/economics/params.hpp"

namespace decum {

// Unisex survival model built from gendered one-year death probabilities.
// Singles weight male/female rates by the proportions still alive; couples
// treat the two deaths as mutually exclusive, p_C = 1 - (qM + qF).
// Death probabilities are forced to 1 from terminal_age - 1 on, so survival
// past terminal_age is impossible.
class MortalityTable {
public:
    MortalityTable(int first_age, std::vector<double> qM, std::vector<double> qF,
                   int terminal_age)
        : first_age_(first_age), terminal_age_(terminal_age), qM_(std::move(qM)), qF_(std::move(qF)) {
        DECUM_REQUIRE(qM_.size() == qF_.size() && !qM_.empty(), InvalidInput,
                      "MortalityTable: male/female columns must be non-empty and equal length");
        DECUM_REQUIRE(first_age_ >= 0 && terminal_age_ > first_age_, InvalidInput,
                      "MortalityTable: need first_age >= 0 and terminal_age > first_age");
        const std::size_t need = static_cast<std::size_t>(terminal_age_ - first_age_) + 1;
        if (qM_.size() < need) {
            qM_.resize(need, 1.0);
            qF_.resize(need, 1.0);
        }
        for (std::size_t i = 0; i < qM_.size(); ++i) {
            DECUM_REQUIRE(qM_[i] >= 0.0 && qM_[i] <= 1.0 && qF_[i] >= 0.0 && qF_[i] <= 1.0,
                          InvalidInput, "MortalityTable: q outside [0,1] at age %d",
                          first_age_ + static_cast<int>(i));
        }
        for (int t = terminal_age_ - 1; t <= last_age(); ++t) {
            qM_[idx(t)] = 1.0;
            qF_[idx(t)] = 1.0;
        }

        // cumulative survival from the first table age, used as unisex weights
        cumM_.assign(qM_.size() + 1, 1.0);
        cumF_.assign(qF_.size() + 1, 1.0);
        for (std::size_t i = 0; i < qM_.size(); ++i) {
            cumM_[i + 1] = cumM_[i] * (1.0 - qM_[i]);
            cumF_[i + 1] = cumF_[i] * (1.0 - qF_[i]);
            if (qM_[i] + qF_[i] > 1.0 && first_age_ + static_cast<int>(i) < terminal_age_ - 1)
                couple_clip_ages_.push_back(first_age_ + static_cast<int>(i));
        }
    }

    // Ages where qM + qF > 1 forced the couple survival to clip at 0;
    // callers surface these as warnings.
    const std::vector<int>& couple_clip_ages() const { return couple_clip_ages_; }

    static MortalityTable from_csv(const std::string& path, int terminal_age) {
        std::ifstream in(path);
        DECUM_REQUIRE(in.good(), IoError, "cannot open life table '%s'", path.c_str());
        std::string line;
        DECUM_REQUIRE(static_cast<bool>(std::getline(in, line)), IoError,
                      "life table '%s' is empty", path.c_str());
        DECUM_REQUIRE(line.rfind("age,qM,qF", 0) == 0, IoError,
                      "life table '%s': expected header 'age,qM,qF'", path.c_str());
        std::vector<double> qM, qF;
        int first_age = -1, prev_age = -1, lineno = 1;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            std::istringstream ss(line);
            std::string a, m, f;
            const bool ok = static_cast<bool>(std::getline(ss, a, ',')) &&
                            static_cast<bool>(std::getline(ss, m, ',')) &&
                            static_cast<bool>(std::getline(ss, f));
            DECUM_REQUIRE(ok, IoError, "life table '%s' line %d: malformed row", path.c_str(), lineno);
            try {
                const int age = std::stoi(a);
                DECUM_REQUIRE(prev_age < 0 || age == prev_age + 1, IoError,
                              "life table '%s' line %d: ages must be consecutive", path.c_str(), lineno);
                if (first_age < 0) first_age = age;
                prev_age = age;
                qM.push_back(std::stod(m));
                qF.push_back(std::stod(f));
            } catch (const std::invalid_argument&) {
                throw IoError(strprintf("life table '%s' line %d: non-numeric field", path.c_str(), lineno));
            }
        }
        DECUM_REQUIRE(!qM.empty(), IoError, "life table '%s' has no data rows", path.c_str());
        return MortalityTable(first_age, std::move(qM), std::move(qF), terminal_age);
    }

    int first_age() const { return first_age_; }
    int last_age() const { return first_age_ + static_cast<int>(qM_.size()) - 1; }
    int terminal_age() const { return terminal_age_; }

    double qm(int t) const { return qM_[idx(t)]; }
    double qf(int t) const { return qF_[idx(t)]; }

    // One-year unisex survival for a single household: male/female death
    // rates weighted by the cumulative proportions alive at age t.
    double single_survival(int t) const {
        const double wM = cumM_[idx(t)], wF = cumF_[idx(t)];
        DECUM_REQUIRE(wM + wF > 0.0, InvalidInput,
                      "single_survival: nobody alive at age %d in this table", t);
        return 1.0 - (qm(t) * wM + qf(t) * wF) / (wM + wF);
    }

    // One-year survival of a couple household (neither spouse dies).
    // qM + qF > 1 clips to 0.
    double couple_survival(int t) const {
        return std::max(0.0, 1.0 - (qm(t) + qf(t)));
    }

    double survival(FamilyStatus d, int t) const {
        return d == FamilyStatus::Couple ? couple_survival(t) : single_survival(t);
    }

    // probability of surviving from age t to age t2 in status d
    double cumulative_survival(FamilyStatus d, int t, int t2) const {
        DECUM_REQUIRE(t2 >= t, InvalidInput, "cumulative_survival: t2 < t");
        double p = 1.0;
        for (int i = t; i < t2; ++i) p *= survival(d, i);
        return p;
    }

    // curtate life expectancy at age t: sum over horizons of cumulative survival
    double life_expectancy(FamilyStatus d, int t) const {
        double p = 1.0, e = 0.0;
        for (int i = t; i < terminal_age_; ++i) {
            p *= survival(d, i);
            e += p;
        }
        return e;
    }

private:
    std::size_t idx(int t) const {
        DECUM_REQUIRE(t >= first_age_ && t <= last_age(), OutOfRange,
                      "MortalityTable: age %d outside [%d, %d]", t, first_age_, last_age());
        return static_cast<std::size_t>(t - first_age_);
    }

    int first_age_;
    int terminal_age_;
    std::vector<double> qM_, qF_;
    std::vector<double> cumM_, cumF_;  // survival from first_age to each age
    std::vector<int> couple_clip_ages_;
};

// Family-status transition distribution at age t.
struct StatusTransition {
    FamilyStatus to[2];
    double prob[2];
    int count = 0;
};

inline StatusTransition family_transition(FamilyStatus g, int t, const MortalityTable& tables) {
    StatusTransition tr;
    switch (g) {
        case FamilyStatus::Couple: {
            const double pc = tables.couple_survival(t);
            tr.to[0] = FamilyStatus::Couple;
            tr.prob[0] = pc;
            tr.to[1] = FamilyStatus::Single;
            tr.prob[1] = 1.0 - pc;
            tr.count = 2;
            break;
        }
        case FamilyStatus::Single: {
            const double ps = tables.single_survival(t);
            tr.to[0] = FamilyStatus::Single;
            tr.prob[0] = ps;
            tr.to[1] = FamilyStatus::JustDied;
            tr.prob[1] = 1.0 - ps;
            tr.count = 2;
            break;
        }
        case FamilyStatus::JustDied:
        case FamilyStatus::Dead:
            tr.to[0] = FamilyStatus::Dead;
            tr.prob[0] = 1.0;
            tr.count = 1;
            break;
    }
    return tr;
}

}  // namespace decum
