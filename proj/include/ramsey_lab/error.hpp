#ifndef RAMSEY_LAB_ERROR_HPP
#define RAMSEY_LAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ramsey_lab {

enum class ErrorKind {
    invalid_parameter,
    index_out_of_range,
    label_out_of_range,
    malformed_edge,
    incompatible_uniformity,
    malformed_assignment,
    precondition_violation,
    hypothesis_violation,
    proof_gap,
    monochromatic_coloring,
    host_too_small,
    inconsistent_base,
    malformed_certificate,
    blue_edge_encountered,
    internal_assertion,
};

inline auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::invalid_parameter: return "invalid-parameter";
        case ErrorKind::index_out_of_range: return "index-out-of-range";
        case ErrorKind::label_out_of_range: return "label-out-of-range";
        case ErrorKind::malformed_edge: return "malformed-edge";
        case ErrorKind::incompatible_uniformity: return "incompatible-uniformity";
        case ErrorKind::malformed_assignment: return "malformed-assignment";
        case ErrorKind::precondition_violation: return "precondition-violation";
        case ErrorKind::hypothesis_violation: return "hypothesis-violation";
        case ErrorKind::proof_gap: return "proof-gap";
        case ErrorKind::monochromatic_coloring: return "monochromatic-coloring";
        case ErrorKind::host_too_small: return "host-too-small";
        case ErrorKind::inconsistent_base: return "inconsistent-base";
        case ErrorKind::malformed_certificate: return "malformed-certificate";
        case ErrorKind::blue_edge_encountered: return "blue-edge-encountered";
        case ErrorKind::internal_assertion: return "internal-assertion-failure";
    }
    return "unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & message) :
        std::runtime_error(std::string(to_string(kind)) + ": " + message),
        _kind(kind)
    {
    }

    [[nodiscard]] auto kind() const noexcept -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string & message)
{
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string & message)
{
    if (! condition)
        fail(kind, message);
}

} // namespace ramsey_lab

#endif
