#ifndef IHULL_ERRORS_HPP
#define IHULL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ihull {

/** Invalid mathematical argument (log of a nonpositive number, k < 2, ...). */
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/** Malformed external input (JSON, CLI arguments, CSV). Maps to exit code 2. */
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/** A desk-scale resource limit was hit (point cap, ensemble cap). Maps to exit code 3. */
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/** The polyhedron is unbounded where a bounded one is required; reports axis and sign. */
class UnboundedError : public std::runtime_error {
public:
    explicit UnboundedError(const std::string& what) : std::runtime_error(what) {}
};

/** The feasible region is empty where a nonempty one is required. */
class EmptyRegionError : public std::runtime_error {
public:
    explicit EmptyRegionError(const std::string& what) : std::runtime_error(what) {}
};

/** Truncated-hull vertex set failed to stabilize after the maximum number of box doublings. */
class InstabilityError : public std::runtime_error {
public:
    explicit InstabilityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ihull

#endif
