#pragma once

#include <stdexcept>

namespace rigidplan {

/// Base class for all rigidplan errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Agent 1 sits on the centre of mass, so the formation heading is undefined.
struct DegenerateHeading : Error {
  using Error::Error;
};

/// The two configurations are not related by a proper rigid motion.
struct NotCongruent : Error {
  using Error::Error;
};

/// The configurations match only up to a reflection, which a planar rigid
/// motion cannot realize.
struct ReflectionRequired : Error {
  using Error::Error;
};

/// Agent count outside the operation's domain.
struct InvalidN : Error {
  using Error::Error;
};

/// Non-positive or non-finite planning horizon.
struct InvalidHorizon : Error {
  using Error::Error;
};

/// Query time outside [0, t_f].
struct OutOfHorizon : Error {
  using Error::Error;
};

/// Fewer than two requested trajectory samples.
struct InvalidSampleCount : Error {
  using Error::Error;
};

/// Fewer than three transcription knots.
struct InvalidKnotCount : Error {
  using Error::Error;
};

/// The trajectory carries no control samples.
struct MissingControls : Error {
  using Error::Error;
};

/// Sample times are not uniformly spaced.
struct NonUniformGrid : Error {
  using Error::Error;
};

/// Too few samples for the requested stencil or statistic.
struct TooFewSamples : Error {
  using Error::Error;
};

/// The two solutions being compared were not produced from the same problem.
struct MismatchedProblems : Error {
  using Error::Error;
};

/// Scenario file is syntactically or semantically malformed.
struct ScenarioError : Error {
  using Error::Error;
};

/// Filesystem-level failure (missing input, unwritable output).
struct IoError : Error {
  using Error::Error;
};

}  // namespace rigidplan
