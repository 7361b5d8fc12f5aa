#ifndef HAMCERT_ERRORS_HPP
#define HAMCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hamcert {

/// Caller handed in something outside an operation's contract (bad vertex index,
/// wrong graph class, size limit exceeded, ...).
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A state that the underlying structural argument rules out. Seeing one means
/// the implementation is wrong, never the input.
class InternalInvariantError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace hamcert

#endif  // HAMCERT_ERRORS_HPP
