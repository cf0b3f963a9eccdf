#pragma once

#include <stdexcept>
#include <string>

namespace prymcheck {

/// Base class of every error the toolkit raises.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dimension_mismatch : public error {
public:
    using error::error;
};

/// Input data admits no exact (integral, non-negative) answer.
class inconsistent_input : public error {
public:
    using error::error;
};

/// Degree-bounded Hilbert basis computation found an irreducible invariant
/// above the requested bound.
class not_saturated : public error {
public:
    using error::error;
};

class not_normalizing : public error {
public:
    using error::error;
};

class quasi_reflection : public error {
public:
    using error::error;
};

class unsupported_configuration : public error {
public:
    using error::error;
};

class incomplete_ledger : public error {
public:
    using error::error;
};

class underivable_entry : public error {
public:
    using error::error;
};

/// Malformed configuration document.
class schema_error : public error {
public:
    using error::error;
};

} // namespace prymcheck
