#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adic {

/// Stable error codes. The CLI prints these names verbatim.
enum class errc {
    mismatched_groups,
    wrong_ring,
    not_convex_subgroup_of_value_group,
    unsupported_kind,
    characteristic_group_not_contained,
    not_continuous,
    context_mismatch,
    zero_series,
    all_zero,
    malformed_subset,
    not_unit_ideal,
    not_type_five,
    invalid_point,
    unknown_point,
    not_kolmogorov,
    unsupported_ring,
    not_a_specialization,
    non_functorial_presheaf,
    not_a_complex,
    truncation_too_small,
    parse_error,
    invalid_argument,
};

constexpr std::string_view errc_name(errc code) noexcept {
    switch (code) {
        case errc::mismatched_groups: return "MismatchedGroups";
        case errc::wrong_ring: return "WrongRing";
        case errc::not_convex_subgroup_of_value_group: return "NotConvexSubgroupOfValueGroup";
        case errc::unsupported_kind: return "UnsupportedKind";
        case errc::characteristic_group_not_contained: return "CharacteristicGroupNotContained";
        case errc::not_continuous: return "NotContinuous";
        case errc::context_mismatch: return "ContextMismatch";
        case errc::zero_series: return "ZeroSeries";
        case errc::all_zero: return "AllZero";
        case errc::malformed_subset: return "MalformedSubset";
        case errc::not_unit_ideal: return "NotUnitIdeal";
        case errc::not_type_five: return "NotTypeFive";
        case errc::invalid_point: return "InvalidPoint";
        case errc::unknown_point: return "UnknownPoint";
        case errc::not_kolmogorov: return "NotKolmogorov";
        case errc::unsupported_ring: return "UnsupportedRing";
        case errc::not_a_specialization: return "NotASpecialization";
        case errc::non_functorial_presheaf: return "NonFunctorialPresheaf";
        case errc::not_a_complex: return "NotAComplex";
        case errc::truncation_too_small: return "TruncationTooSmall";
        case errc::parse_error: return "ParseError";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace adic
