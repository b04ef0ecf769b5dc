#pragma once

#include <stdexcept>
#include <string>

namespace ues {

// Base for all errors raised by this library. Each subclass carries a stable
// name() so the CLI can emit machine-readable error records.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define UES_DEFINE_ERROR(Type)                                        \
    class Type : public Error {                                       \
    public:                                                           \
        explicit Type(const std::string& what) : Error(#Type, what) {} \
    }

UES_DEFINE_ERROR(SizeError);        // vector/sequence length out of contract
UES_DEFINE_ERROR(DesignError);      // infeasible filter specification
UES_DEFINE_ERROR(DegenerateInput);  // constant or otherwise unusable data
UES_DEFINE_ERROR(NumericalError);   // NaN/Inf or singular linear system
UES_DEFINE_ERROR(ConfigError);      // invalid configuration value
UES_DEFINE_ERROR(FormatError);      // malformed file on disk
UES_DEFINE_ERROR(ValidationError);  // record/label violates an invariant
UES_DEFINE_ERROR(NoOpeningDetected); // predicted mask has no frame above threshold

#undef UES_DEFINE_ERROR

} // namespace ues
