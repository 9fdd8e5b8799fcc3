#pragma once

#include <stdexcept>
#include <string>

namespace wgb {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dimension_error : public error {
public:
    using error::error;
};

class field_mismatch : public error {
public:
    using error::error;
};

class arity_error : public error {
public:
    using error::error;
};

/// A polynomial term whose exponents are not multiples of the weights.
class not_in_image : public error {
public:
    using error::error;
};

class not_homogeneous : public error {
public:
    using error::error;
};

class insufficient_window : public error {
public:
    using error::error;
};

class positive_dimension : public error {
public:
    using error::error;
};

class empty_support : public error {
public:
    using error::error;
};

class undefined_frobenius : public error {
public:
    using error::error;
};

/// Raised when an internal invariant that should be a theorem fails.
class consistency_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

} // namespace wgb
