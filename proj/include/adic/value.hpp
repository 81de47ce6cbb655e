#pragma once

#include <compare>
#include <optional>
#include <string>

#include "adic/ordgroup.hpp"

namespace adic {

/// An element of Gamma ∪ {0}: either the adjoined zero or a group element.
/// Zero is below every group element and absorbs multiplication.
class value {
public:
    value() = default; // zero
    value(group_element g) : elem_(std::move(g)) {}

    static value zero() { return {}; }
    static value unit(const group_descriptor& g) { return value(group_element::unit(g)); }
    static value positive(const rational& q) { return q == 0 ? zero() : value(group_element::positive(q)); }

    bool is_zero() const noexcept { return !elem_.has_value(); }
    const group_element& element() const {
        if (!elem_) throw error(errc::invalid_argument, "zero value has no group element");
        return *elem_;
    }

    friend bool operator==(const value&, const value&) = default;

    friend std::strong_ordering operator<=>(const value& a, const value& b) {
        if (a.is_zero() || b.is_zero()) return !a.is_zero() <=> !b.is_zero();
        return group_cmp(*a.elem_, *b.elem_);
    }

    friend value operator*(const value& a, const value& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return value(group_mul(*a.elem_, *b.elem_));
    }

    std::string to_string() const { return elem_ ? elem_->to_string() : "0"; }

private:
    std::optional<group_element> elem_;
};

inline value max(const value& a, const value& b) { return a < b ? b : a; }

/// Inverse of value::to_string: "0" or a group element literal.
inline value parse_value(std::string_view text, const group_descriptor* expected = nullptr) {
    if (detail::trim(text) == "0") return value::zero();
    return value(parse_group_element(text, expected));
}

} // namespace adic
