#pragma once

#include <stdexcept>
#include <string>

namespace evosoc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// backend
struct BackendError : Error {
    using Error::Error;
};
struct TransportError : BackendError {
    using BackendError::BackendError;
};
struct AuthError : BackendError {
    using BackendError::BackendError;
};
struct BudgetExceeded : BackendError {
    using BackendError::BackendError;
};
struct CacheIOError : Error {
    using Error::Error;
};

// society
struct ClockExhausted : Error {
    using Error::Error;
};
struct MissingNorm : Error {
    using Error::Error;
};
struct MalformedQuestionnaire : Error {
    using Error::Error;
};
struct EmptyNormText : Error {
    using Error::Error;
};
struct EmptyStrategies : Error {
    using Error::Error;
};

// agent
struct ConfigError : Error {
    using Error::Error;
};
struct PartialStatements : Error {
    using Error::Error;
};

// observer
struct MalformedScore : Error {
    using Error::Error;
};
struct ScoringAborted : Error {
    using Error::Error;
};

// evolution
struct DegeneratePopulation : Error {
    using Error::Error;
};
struct InsufficientParents : Error {
    using Error::Error;
};

// runner
struct IOError : Error {
    using Error::Error;
};
struct DatasetMissing : Error {
    using Error::Error;
};

} // namespace evosoc
