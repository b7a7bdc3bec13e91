#ifndef PAIRLAB_ERRORS_HPP
#define PAIRLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pairlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// make_params / params_from_q gave up within the attempt bound.
struct ParamSearchError : Error {
  using Error::Error;
};

// take_tuples asked for more rows than remain unconsumed.
struct TableExhausted : Error {
  using Error::Error;
};

// A response does not match the shape of the query it answers.
// Distinct from a false verification verdict.
struct MalformedResponse : Error {
  using Error::Error;
};

// A transcript lacks the messages an observer needs.
struct MalformedTranscript : Error {
  using Error::Error;
};

// Bad behavior/scenario configuration (unknown kind, index out of range, ...).
struct ConfigError : Error {
  using Error::Error;
};

// Invalid canonical encoding (non-decimal string, out-of-range value,
// element outside its group).
struct CodecError : Error {
  using Error::Error;
};

}  // namespace pairlab

#endif  // PAIRLAB_ERRORS_HPP
