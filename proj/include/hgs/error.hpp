#ifndef HGS_ERROR_HPP_
#define HGS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hgs {

// Bad user input: unparsable spec, invalid parameter, malformed file.
struct SpecError : std::runtime_error {
  explicit SpecError(std::string const& msg) : std::runtime_error(msg) {}
};

// Input is valid but exceeds a configured bound (closure limit, aut bound,
// isomorphism cap, oracle degree).
struct CapabilityError : std::runtime_error {
  explicit CapabilityError(std::string const& msg) : std::runtime_error(msg) {}
};

// A precondition violation or internal consistency failure.
struct InvariantError : std::logic_error {
  explicit InvariantError(std::string const& msg) : std::logic_error(msg) {}
};

}  // namespace hgs

#endif  // HGS_ERROR_HPP_
