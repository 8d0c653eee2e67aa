#include "annobias/schema.hpp"

#include <algorithm>

namespace annobias {

std::string_view to_string(Attribute a) {
    switch (a) {
        case Attribute::age: return "age";
        case Attribute::disability: return "disability";
        case Attribute::education: return "education";
        case Attribute::ideology: return "ideology";
        case Attribute::gender: return "gender";
        case Attribute::income: return "income";
        case Attribute::origin: return "origin";
        case Attribute::race: return "race";
        case Attribute::religion: return "religion";
        case Attribute::sexuality: return "sexuality";
    }
    return "?";
}

Attribute attribute_from_string(std::string_view name) {
    for (Attribute a : kAllAttributes)
        if (to_string(a) == name) return a;
    throw DataError("unknown attribute: " + std::string(name));
}

bool attribute_applies(Attribute a, Side side) {
    switch (a) {
        case Attribute::education:
        case Attribute::ideology:
        case Attribute::income:
            return side == Side::annotator;
        case Attribute::disability:
        case Attribute::origin:
            return side == Side::target;
        default:
            return true;
    }
}

std::vector<Attribute> attributes_for_side(Side side) {
    std::vector<Attribute> out;
    for (Attribute a : kAllAttributes)
        if (attribute_applies(a, side)) out.push_back(a);
    return out;
}

AttributeSchema::AttributeSchema(std::map<Attribute, std::vector<std::string>> allowed,
                                 std::set<std::tuple<Side, Attribute, std::string>> exclusions)
    : allowed_(std::move(allowed)), exclusions_(std::move(exclusions)) {
    validate();
}

void AttributeSchema::validate() const {
    for (const auto& [key, values] : allowed_) {
        std::set<std::string> seen;
        for (const auto& v : values) {
            if (v.empty()) throw DataError("schema: empty value for " + std::string(to_string(key)));
            if (v.find('|') != std::string::npos)
                throw DataError("schema: value contains '|': " + v);
            if (!seen.insert(v).second)
                throw DataError("schema: duplicate value '" + v + "' for " + std::string(to_string(key)));
        }
    }
    for (const auto& [side, key, value] : exclusions_) {
        if (!allows(key, value))
            throw DataError("schema: exclusion references unknown value '" + value + "' for " +
                            std::string(to_string(key)));
        if (!attribute_applies(key, side))
            throw DataError("schema: exclusion side not applicable for " +
                            std::string(to_string(key)));
    }
}

const std::vector<std::string>& AttributeSchema::values(Attribute key) const {
    static const std::vector<std::string> empty;
    auto it = allowed_.find(key);
    return it == allowed_.end() ? empty : it->second;
}

bool AttributeSchema::allows(Attribute key, const std::string& value) const {
    const auto& vals = values(key);
    return std::find(vals.begin(), vals.end(), value) != vals.end();
}

bool AttributeSchema::excluded(Side side, Attribute key, const std::string& value) const {
    return exclusions_.count({side, key, value}) > 0;
}

std::size_t AttributeSchema::value_rank(Attribute key, const std::string& value) const {
    const auto& vals = values(key);
    auto it = std::find(vals.begin(), vals.end(), value);
    if (it == vals.end())
        throw DataError("value '" + value + "' not allowed for " + std::string(to_string(key)));
    return static_cast<std::size_t>(it - vals.begin());
}

AttributeSchema AttributeSchema::default_schema() {
    std::map<Attribute, std::vector<std::string>> allowed = {
        {Attribute::age, {"young adults", "teenagers", "children", "middle aged", "seniors", "other"}},
        {Attribute::disability,
         {"cognitive", "physical", "unspecific", "neurological", "hearing impaired",
          "visually impaired", "other"}},
        {Attribute::education,
         {"college ba", "some college", "college aa", "high school", "master",
          "professional degree", "phd", "some high school"}},
        {Attribute::ideology,
         {"liberal", "neutral", "slightly liberal", "extremely liberal", "conservative",
          "slightly conservative", "extremely conservative", "no opinion"}},
        {Attribute::gender,
         {"women", "men", "transgender unspecified", "transgender men", "transgender women",
          "non binary", "other"}},
        {Attribute::income, {"10k-50k", "50k-100k", "100k-200k", "<10k", ">200k"}},
        {Attribute::origin,
         {"specific country", "immigrant", "undocumented", "migrant worker", "other"}},
        {Attribute::race,
         {"black", "white", "middle eastern", "latinx", "asian", "native american",
          "pacific islander", "other"}},
        {Attribute::religion,
         {"muslim", "christian", "jewish", "hindu", "atheist", "mormon", "buddhist", "other",
          "nothing"}},
        {Attribute::sexuality, {"gay", "lesbian", "bisexual", "straight", "other"}},
    };
    std::set<std::tuple<Side, Attribute, std::string>> exclusions;
    auto exclude_both = [&](Attribute key, const std::string& value) {
        if (attribute_applies(key, Side::annotator)) exclusions.insert({Side::annotator, key, value});
        if (attribute_applies(key, Side::target)) exclusions.insert({Side::target, key, value});
    };
    for (const auto& [key, values] : allowed) {
        if (std::find(values.begin(), values.end(), "other") != values.end())
            exclude_both(key, "other");
    }
    exclude_both(Attribute::religion, "nothing");
    return AttributeSchema(std::move(allowed), std::move(exclusions));
}

AttributeSchema AttributeSchema::from_json(const nlohmann::json& j) {
    std::map<Attribute, std::vector<std::string>> allowed;
    if (!j.contains("attributes") || !j["attributes"].is_array())
        throw DataError("schema json: missing 'attributes' array");
    for (const auto& entry : j["attributes"]) {
        Attribute key = attribute_from_string(entry.at("key").get<std::string>());
        std::vector<std::string> values = entry.at("values").get<std::vector<std::string>>();
        allowed[key] = std::move(values);
    }
    std::set<std::tuple<Side, Attribute, std::string>> exclusions;
    if (j.contains("exclusions")) {
        for (const auto& entry : j["exclusions"]) {
            Attribute key = attribute_from_string(entry.at("key").get<std::string>());
            std::string value = entry.at("value").get<std::string>();
            std::string side = entry.value("side", "both");
            if (side == "both" || side == "annotator")
                if (attribute_applies(key, Side::annotator))
                    exclusions.insert({Side::annotator, key, value});
            if (side == "both" || side == "target")
                if (attribute_applies(key, Side::target))
                    exclusions.insert({Side::target, key, value});
            if (side != "both" && side != "annotator" && side != "target")
                throw DataError("schema json: bad exclusion side: " + side);
        }
    }
    return AttributeSchema(std::move(allowed), std::move(exclusions));
}

nlohmann::json AttributeSchema::to_json() const {
    nlohmann::json attrs = nlohmann::json::array();
    for (Attribute a : kAllAttributes) {
        if (allowed_.count(a) == 0) continue;
        attrs.push_back({{"key", std::string(to_string(a))},
                         {"annotator", attribute_applies(a, Side::annotator)},
                         {"target", attribute_applies(a, Side::target)},
                         {"values", allowed_.at(a)}});
    }
    nlohmann::json excl = nlohmann::json::array();
    for (const auto& [side, key, value] : exclusions_) {
        excl.push_back({{"side", std::string(to_string(side))},
                        {"key", std::string(to_string(key))},
                        {"value", value}});
    }
    return {{"attributes", attrs}, {"exclusions", excl}};
}

}  // namespace annobias
