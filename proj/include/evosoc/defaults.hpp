#pragma once

#include "evosoc/agent.hpp"
#include "evosoc/backend.hpp"
#include "evosoc/society.hpp"

namespace evosoc::defaults {

/// Initial attribute pools: 10 careers, 20 personalities (10 positive, 10
/// negative), 20 three-views entries.
AttributeTables attribute_tables();

/// Predefined decade norms 2000-2050 with the final social vision, plus a
/// ten-aspect questionnaire per generation.
NormSchedule schedule();

/// Eight named places; index 0 is home, where newborn agents start.
std::vector<Location> locations();

/// Rules for a fully offline demo run: plan, compression, questionnaire,
/// statement, and scoring responses.
ScriptedRules demo_rules();

} // namespace evosoc::defaults
