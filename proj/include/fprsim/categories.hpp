#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace fprsim {

using Count = std::int64_t;
using PrintId = int;

// Outcome of one valued comparison decision.
enum class DecisionCategory : int {
    CorrectId = 0,           // identification to the true donor
    WrongFingerId = 1,       // identification to the wrong finger of the true donor
    WrongPersonId = 2,       // identification to the wrong person
    Inconclusive = 3,
    CorrectExclusion = 4,    // exclusion of all three candidate donors, none of whom matched
    ErroneousExclusion = 5,  // exclusion of the true donor
};

// Whether control prints from the latent's true source were among the
// three comparison sets.
enum class SourceScenario : int {
    SourcePresent = 0,
    SourceAbsent = 1,
};

inline constexpr int kCategoryCount = 6;
inline constexpr int kScenarioCount = 2;

inline constexpr std::array<DecisionCategory, kCategoryCount> kAllCategories = {
    DecisionCategory::CorrectId,        DecisionCategory::WrongFingerId,
    DecisionCategory::WrongPersonId,    DecisionCategory::Inconclusive,
    DecisionCategory::CorrectExclusion, DecisionCategory::ErroneousExclusion,
};

inline constexpr std::array<SourceScenario, kScenarioCount> kAllScenarios = {
    SourceScenario::SourcePresent,
    SourceScenario::SourceAbsent,
};

// A (scenario, category) cell is a structural zero when the decision is
// logically impossible under that scenario: with the true source present an
// exclusion of every donor is erroneous by definition, and with the source
// absent there is no true donor to identify or to erroneously exclude.
constexpr bool isStructuralZero(SourceScenario scenario, DecisionCategory category) {
    if (scenario == SourceScenario::SourcePresent) {
        return category == DecisionCategory::CorrectExclusion;
    }
    return category == DecisionCategory::CorrectId ||
           category == DecisionCategory::WrongFingerId ||
           category == DecisionCategory::ErroneousExclusion;
}

constexpr std::string_view categoryKey(DecisionCategory category) {
    switch (category) {
        case DecisionCategory::CorrectId: return "correctId";
        case DecisionCategory::WrongFingerId: return "wrongFingerId";
        case DecisionCategory::WrongPersonId: return "wrongPersonId";
        case DecisionCategory::Inconclusive: return "inconclusive";
        case DecisionCategory::CorrectExclusion: return "correctExclusion";
        case DecisionCategory::ErroneousExclusion: return "erroneousExclusion";
    }
    return "?";
}

constexpr std::string_view scenarioKey(SourceScenario scenario) {
    return scenario == SourceScenario::SourcePresent ? "present" : "absent";
}

constexpr int indexOf(DecisionCategory category) { return static_cast<int>(category); }
constexpr int indexOf(SourceScenario scenario) { return static_cast<int>(scenario); }

}  // namespace fprsim
