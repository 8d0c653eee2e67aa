#include "annobias/selector.hpp"

namespace annobias {

std::string GroupSelector::to_string() const {
    std::string out(annobias::to_string(side));
    out += ":";
    out += annobias::to_string(key);
    out += negated ? "!=" : "=";
    out += value;
    return out;
}

GroupSelector GroupSelector::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw DataError("bad selector: " + std::string(text));
    GroupSelector sel;
    sel.side = side_from_string(text.substr(0, colon));
    std::string_view rest = text.substr(colon + 1);
    auto neq = rest.find("!=");
    if (neq != std::string_view::npos) {
        sel.negated = true;
        sel.key = attribute_from_string(rest.substr(0, neq));
        sel.value = std::string(rest.substr(neq + 2));
    } else {
        auto eq = rest.find('=');
        if (eq == std::string_view::npos) throw DataError("bad selector: " + std::string(text));
        sel.key = attribute_from_string(rest.substr(0, eq));
        sel.value = std::string(rest.substr(eq + 1));
    }
    return sel;
}

namespace {
const std::set<std::string>* value_set(const AnnotationRecord& rec, const GroupSelector& sel) {
    const AttrSets& attrs = sel.side == Side::annotator ? rec.annotator_attrs : rec.target_attrs;
    auto it = attrs.find(sel.key);
    if (it == attrs.end() || it->second.empty()) return nullptr;
    return &it->second;
}
}  // namespace

bool matches(const AnnotationRecord& rec, const GroupSelector& sel) {
    const auto* values = value_set(rec, sel);
    if (!values) return false;  // missing data contaminates neither side
    bool has = values->count(sel.value) > 0;
    return sel.negated ? !has : has;
}

Membership membership(const AnnotationRecord& rec, const GroupSelector& sel) {
    const auto* values = value_set(rec, sel);
    if (!values) return Membership::absent;
    return values->count(sel.value) > 0 ? Membership::in_group : Membership::out_group;
}

std::vector<GroupSelector> enumerate_selectors(const AttributeSchema& schema, Side side) {
    std::vector<GroupSelector> out;
    for (Attribute key : attributes_for_side(side))
        for (const auto& value : schema.values(key))
            if (!schema.excluded(side, key, value))
                out.push_back(GroupSelector{side, key, value, false});
    return out;
}

void validate_selector(const GroupSelector& sel, const AttributeSchema& schema) {
    if (!attribute_applies(sel.key, sel.side))
        throw DataError("selector key '" + std::string(to_string(sel.key)) +
                        "' not applicable to side " + std::string(to_string(sel.side)));
    if (!schema.allows(sel.key, sel.value))
        throw DataError("selector value '" + sel.value + "' not allowed for " +
                        std::string(to_string(sel.key)));
}

}  // namespace annobias
