#pragma once

#include <stdexcept>
#include <string>

namespace atomic {

enum class ErrorKind {
    InvalidType,
    IndexOutOfRange,
    DimensionMismatch,
    SystemMismatch,
    NotReduced,
    NotAReflection,
    SubgroupTooLarge,
    NotDominant,
    OrbitTooLarge,
    UnsupportedType,
    PreconditionViolation,
    InvalidIndex,
    RadiusTooLarge,
    InvalidModulus,
    NotACore,
    SizeTooLarge,
    NotAdequate,
    InvalidPermutation,
};

inline const char* kind_name(ErrorKind k)
{
    switch (k) {
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SystemMismatch: return "SystemMismatch";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotAReflection: return "NotAReflection";
    case ErrorKind::SubgroupTooLarge: return "SubgroupTooLarge";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::OrbitTooLarge: return "OrbitTooLarge";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::NotACore: return "NotACore";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::NotAdequate: return "NotAdequate";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

    /// Errors raised by configured computation caps rather than bad input.
    bool is_cap() const noexcept
    {
        return kind_ == ErrorKind::OrbitTooLarge || kind_ == ErrorKind::SubgroupTooLarge ||
               kind_ == ErrorKind::RadiusTooLarge || kind_ == ErrorKind::SizeTooLarge;
    }

private:
    ErrorKind kind_;
};

} // namespace atomic
