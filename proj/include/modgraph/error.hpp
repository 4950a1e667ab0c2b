#pragma once

#include <stdexcept>
#include <string>

namespace modgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed module/ring descriptor, bad invariant factor, or bad divisibility.
class DescriptorError : public Error {
public:
    using Error::Error;
};

/// Module order or lattice size beyond the configured guard.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

/// Operation combining submodules of different ambient modules, or a graph
/// kind that needs the ring acting on itself.
class ModuleMismatchError : public Error {
public:
    using Error::Error;
};

/// Unknown graph kind, export format, check id or family grammar.
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace modgraph
