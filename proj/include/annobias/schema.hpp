#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "annobias/util.hpp"

namespace annobias {

enum class Side { annotator, target };

constexpr std::string_view to_string(Side s) {
    return s == Side::annotator ? "annotator" : "target";
}

inline Side side_from_string(std::string_view s) {
    if (s == "annotator") return Side::annotator;
    if (s == "target") return Side::target;
    throw DataError("unknown side: " + std::string(s));
}

// The ten socio-demographic attributes. Order is the canonical listing order
// used everywhere (headers, selector enumeration).
enum class Attribute {
    age,
    disability,
    education,
    ideology,
    gender,
    income,
    origin,
    race,
    religion,
    sexuality,
};

constexpr std::array<Attribute, 10> kAllAttributes = {
    Attribute::age,     Attribute::disability, Attribute::education, Attribute::ideology,
    Attribute::gender,  Attribute::income,     Attribute::origin,    Attribute::race,
    Attribute::religion, Attribute::sexuality,
};

std::string_view to_string(Attribute a);
Attribute attribute_from_string(std::string_view name);

// Side applicability: education/ideology/income describe annotators only,
// disability/origin describe targets only, the rest describe both.
bool attribute_applies(Attribute a, Side side);

std::vector<Attribute> attributes_for_side(Side side);

// Attribute vocabulary plus the (side, key, value) exclusion list that drives
// selector enumeration. Values are ordered; that order is the canonical one.
class AttributeSchema {
  public:
    AttributeSchema() = default;
    AttributeSchema(std::map<Attribute, std::vector<std::string>> allowed,
                    std::set<std::tuple<Side, Attribute, std::string>> exclusions);

    // Built-in vocabulary and default exclusions (all "other" values plus
    // religion:nothing, on both sides).
    static AttributeSchema default_schema();

    static AttributeSchema from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    const std::vector<std::string>& values(Attribute key) const;
    bool allows(Attribute key, const std::string& value) const;
    bool excluded(Side side, Attribute key, const std::string& value) const;

    // Index of value in the canonical order; throws if unknown.
    std::size_t value_rank(Attribute key, const std::string& value) const;

    const std::set<std::tuple<Side, Attribute, std::string>>& exclusions() const {
        return exclusions_;
    }

  private:
    void validate() const;

    std::map<Attribute, std::vector<std::string>> allowed_;
    std::set<std::tuple<Side, Attribute, std::string>> exclusions_;
};

}  // namespace annobias
