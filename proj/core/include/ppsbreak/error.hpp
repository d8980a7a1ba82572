#ifndef PPSBREAK_ERROR_HPP
#define PPSBREAK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ppsbreak {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Chaotic-map input outside its domain (non-finite state, logistic z outside [0,1]).
class InvalidStateError : public Error {
public:
    using Error::Error;
};

/// Image dimensions are zero or two images disagree in size.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Secret-key string failed to parse or violates a key-range bound.
class KeyFormatError : public Error {
public:
    using Error::Error;
};

/// Malformed pixmap file; messages carry the byte offset of the defect.
class ImageFormatError : public Error {
public:
    using Error::Error;
};

/// A statistical test was asked for more structure than the sequence holds.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

} // namespace ppsbreak

#endif
