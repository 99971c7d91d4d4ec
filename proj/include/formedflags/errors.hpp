#pragma once

#include <stdexcept>
#include <string>

namespace formedflags {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An invariant that the code relies on did not hold.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace formedflags
