#pragma once

#include <map>
#include <string>
#include <string_view>

namespace evosoc::prompts {

// Versioned text assets. The version tag is stamped into every config
// snapshot so logged runs identify the exact templates they used.
inline constexpr std::string_view kPromptVersion = "v1";

extern const std::string kExploration;
extern const std::string kMemoryCompression;
extern const std::string kQuestionnaireGeneration;
extern const std::string kPersonaMutation;
extern const std::string kCareerMutation;
extern const std::string kThreeViewsMutation;
extern const std::string kNormEvolving;
extern const std::string kScoring;          // system message; score scale 1..7
extern const std::string kStatementSystem;  // statement elicitation context
extern const std::string kThought;          // baseline deliberation
extern const std::string kReflection;       // baseline self-reflection
extern const std::string kDownstreamJudge;  // single-answer grading, 1..7

/// Replaces each "{key}" with its value. Unknown placeholders are left
/// untouched, so literal braces in template prose survive rendering.
std::string render(std::string_view tmpl,
                   const std::map<std::string, std::string>& values);

} // namespace evosoc::prompts
