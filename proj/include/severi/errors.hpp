#pragma once

#include <stdexcept>
#include <string>

namespace severi {

// Bad input: violated precondition, unparseable class, unsupported variant.
// The CLI maps these to exit code 2.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Something the library guarantees did not hold. The CLI maps these to
// exit code 3.
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A recursion state with no free point conditions survived every guard.
class UnsupportedRecursionState : public InternalError {
public:
    explicit UnsupportedRecursionState(const std::string& key)
        : InternalError("unsupported-recursion-state: " + key) {}
};

// An overdetermined universal fit was inconsistent.
class UniversalityViolation : public InternalError {
public:
    explicit UniversalityViolation(const std::string& what)
        : InternalError("universality-violation: " + what) {}
};

class IntegralityError : public InternalError {
public:
    explicit IntegralityError(const std::string& what)
        : InternalError("integrality failure: " + what) {}
};

// Two records for one memo key disagree.
class CacheConflict : public InternalError {
public:
    explicit CacheConflict(const std::string& key)
        : InternalError("cache conflict for key " + key) {}
};

} // namespace severi
