#pragma once

#include <optional>
#include <string>
#include <vector>

#include "annobias/record.hpp"

namespace annobias {

// Predicate over one side's attribute sets: value membership (or, when
// negated, non-membership among records that carry the key at all).
struct GroupSelector {
    Side side = Side::annotator;
    Attribute key = Attribute::age;
    std::string value;
    bool negated = false;

    std::string to_string() const;
    static GroupSelector parse(std::string_view text);

    auto operator<=>(const GroupSelector&) const = default;
};

// True when the record's sets satisfy the selector. Records with an empty set
// for the key match neither the positive nor the negated form.
bool matches(const AnnotationRecord& rec, const GroupSelector& sel);

enum class Membership { in_group, out_group, absent };

// Positional relation of a record to a (non-negated) selector's group.
Membership membership(const AnnotationRecord& rec, const GroupSelector& sel);

// One selector per non-excluded (key, value) pair applicable to the side, in
// canonical key order then canonical value order.
std::vector<GroupSelector> enumerate_selectors(const AttributeSchema& schema, Side side);

void validate_selector(const GroupSelector& sel, const AttributeSchema& schema);

}  // namespace annobias
