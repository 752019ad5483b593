#pragma once

#include <stdexcept>
#include <string>

namespace hypack {

// Invalid argument for a mathematical operation (bad radius, degenerate input, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Result or intermediate would leave the representable range of doubles.
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

// Packing parameter would make bodies overlap.
class SaturationError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A Voronoi cell was still open when the site search radius ran out.
class UnboundedCellError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace hypack
