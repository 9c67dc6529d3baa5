#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "fprsim/categories.hpp"

namespace fprsim {

/**
 * A pair of decision-rate vectors over the six categories: one for test
 * cases whose true source is among the candidate donors, one for cases
 * where it is not. Each vector sums to 1 and is zero on every structurally
 * impossible cell. Immutable after construction.
 */
struct RateVectorPair {
    std::array<double, kCategoryCount> sourcePresent{};
    std::array<double, kCategoryCount> sourceAbsent{};
    std::string label = "custom";
    std::string provenance = "custom";  // preset name, or "custom"

    double rate(SourceScenario scenario, DecisionCategory category) const {
        const auto& v = scenario == SourceScenario::SourcePresent ? sourcePresent : sourceAbsent;
        return v[static_cast<std::size_t>(indexOf(category))];
    }

    /// Throws ConfigError if a vector does not sum to 1 within 1e-9, an
    /// entry leaves [0, 1], or a structural-zero cell is nonzero.
    void validate() const;
};

/**
 * The fixed frame of the two-phase study: print counts, packet counts, and
 * the per-phase attrition probabilities (decision returned, print deemed of
 * value). Defaults reproduce the 2014 Miami-Dade examination study: 80
 * latent prints of which the first 56 have control prints from their true
 * source, 109 phase-1 packets of 40 prints, and 2 x 44 phase-2 packets of
 * 20 prints.
 */
struct StudyDesign {
    int totalPrints = 80;
    int sourcePresentPrints = 56;
    int phase1Packets = 109;
    int phase1PrintsPerPacket = 40;
    int phase2PacketsPerGroup = 44;
    int phase2PrintsPerPacket = 20;
    double phase1ReturnProb = 4233.0 / 4360.0;
    double phase1ValueProb = 3210.0 / 4233.0;
    double phase2ReturnProb = 1730.0 / 1760.0;
    double phase2ValueProb = 1342.0 / 1730.0;

    bool isSourcePresent(PrintId id) const { return id <= sourcePresentPrints; }

    void validate() const;
};

/// Study-level attrition totals for one phase, as published.
struct PhaseTotals {
    Count possible = 0;  // packets x prints per packet
    Count returned = 0;  // decisions actually returned
    Count valued = 0;    // prints deemed of value for comparison
};

/**
 * An observed decision-count table: integer counts per (scenario, category)
 * cell plus the per-scenario decision totals, in the shape of the study's
 * published results table. Phase attrition totals ride along so a custom
 * counts file fully determines the matching StudyDesign probabilities.
 */
struct ObservedCounts {
    std::array<std::array<Count, kCategoryCount>, kScenarioCount> counts{};
    std::array<Count, kScenarioCount> decisionTotals{};
    std::array<PhaseTotals, 2> phases{};

    Count cell(SourceScenario scenario, DecisionCategory category) const {
        return counts[static_cast<std::size_t>(indexOf(scenario))]
                     [static_cast<std::size_t>(indexOf(category))];
    }
    Count& cell(SourceScenario scenario, DecisionCategory category) {
        return counts[static_cast<std::size_t>(indexOf(scenario))]
                     [static_cast<std::size_t>(indexOf(category))];
    }

    Count decisions(SourceScenario scenario) const {
        return decisionTotals[static_cast<std::size_t>(indexOf(scenario))];
    }
    Count totalDecisions() const { return decisionTotals[0] + decisionTotals[1]; }
    Count categoryTotal(DecisionCategory category) const {
        return cell(SourceScenario::SourcePresent, category) +
               cell(SourceScenario::SourceAbsent, category);
    }

    /// All erroneous identifications: wrong finger plus wrong person, both scenarios.
    Count erroneousIdTotal() const {
        return categoryTotal(DecisionCategory::WrongFingerId) +
               categoryTotal(DecisionCategory::WrongPersonId);
    }

    /// Throws ConfigError on a nonzero structural-zero cell, a row sum that
    /// disagrees with the scenario's decision total, or bad phase totals.
    void validate() const;

    /// The published Miami-Dade count table (2457/35/4/446/235 source-present,
    /// 3/403/953 source-absent) with its phase attrition totals.
    static ObservedCounts miamiDade();
};

/// Builds a StudyDesign whose attrition probabilities come from the counts'
/// phase totals; all other fields keep their defaults.
StudyDesign designFromCounts(const ObservedCounts& counts);

enum class InconclusiveMode {
    PerScenario,  // separate inconclusive rates for the two scenarios
    Common,       // one pooled inconclusive rate for both
};

/**
 * Assembles a RateVectorPair from an observed count table.
 *
 * Non-complement entries are derived first: the error rates from the counts
 * (or, when fprOverride is given, the single override assigned entirely to
 * wrong-person identifications in both scenarios, with the wrong-finger rate
 * forced to zero), the inconclusive rates per `mode`, and the caller's false
 * negative rate. Each is rounded to `roundingDecimals` places, half away
 * from zero, computed in integer arithmetic so the result is bit-stable.
 * The two correct rates are then the complements: correct identification is
 * 1 minus the sum of the other source-present entries, correct exclusion is
 * 1 minus the sum of the other source-absent entries.
 *
 * The per-scenario source-absent inconclusive rate is quoted one place
 * coarser (0.30, not 0.297, at the default three places): the reference
 * rate table this builder reproduces uses the two-decimal figure, and the
 * published complements (0.698, 0.670, 0.689, 0.691) are consistent only
 * with that quotation.
 *
 * Pass std::nullopt for roundingDecimals to skip rounding entirely and use
 * the exact observed frequencies (sensitivity mode).
 *
 * Throws ConfigError if any complement falls below zero or the counts are
 * structurally invalid.
 */
RateVectorPair buildRateVectorPair(const ObservedCounts& counts,
                                   InconclusiveMode mode,
                                   std::optional<double> fprOverride,
                                   double fnr,
                                   std::optional<int> roundingDecimals = 3,
                                   std::string_view label = "custom");

/**
 * The seven built-in rate-vector rows, derived from the Miami-Dade counts
 * through buildRateVectorPair:
 *
 *   observed    - rates from the observed frequencies, per-scenario inconclusives
 *   mdpd        - FPR 0.030 (42/1398), the study team's estimate
 *   mdpdCommon  - same FPR, pooled inconclusive rate 0.187
 *   osac        - FPR 0.011 (42/3687), the OSAC FRS estimate
 *   osacCommon  - same FPR, pooled inconclusive rate
 *   alt         - FPR 0.009 (42/4536), counting inconclusive decisions
 *   altCommon   - same FPR, pooled inconclusive rate
 *
 * The proposed-rate rows share the study's reported FNR of 0.075; the
 * observed row uses the observed 235/3177 (0.074).
 *
 * Throws ConfigError for an unknown name.
 */
RateVectorPair presetRateVectors(std::string_view name);

inline constexpr std::array<std::string_view, 7> kPresetNames = {
    "observed", "mdpd", "mdpdCommon", "osac", "osacCommon", "alt", "altCommon",
};

/// FNR reported by the study team, shared by all proposed-rate presets.
inline constexpr double kReportedFnr = 0.075;

}  // namespace fprsim
