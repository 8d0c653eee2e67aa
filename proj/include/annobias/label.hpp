#pragma once

#include <array>
#include <string_view>

#include "annobias/util.hpp"

namespace annobias {

// Three-point ordinal label scale, increasing hatefulness.
enum class Label : int { non_hate = 0, maybe = 1, hate = 2 };

constexpr std::array<Label, 3> kAllLabels = {Label::non_hate, Label::maybe, Label::hate};

constexpr int ordinal(Label l) { return static_cast<int>(l); }

constexpr std::string_view to_string(Label l) {
    switch (l) {
        case Label::non_hate: return "non_hate";
        case Label::maybe: return "maybe";
        case Label::hate: return "hate";
    }
    return "?";
}

inline Label label_from_ordinal(int rank) {
    if (rank < 0 || rank > 2) throw DataError("label ordinal out of range: " + std::to_string(rank));
    return static_cast<Label>(rank);
}

inline Label label_from_string(std::string_view s) {
    if (s == "non_hate") return Label::non_hate;
    if (s == "maybe") return Label::maybe;
    if (s == "hate") return Label::hate;
    throw DataError("unknown label: " + std::string(s));
}

enum class SourceTag { human, llm };

constexpr std::string_view to_string(SourceTag s) {
    return s == SourceTag::human ? "human" : "llm";
}

inline SourceTag source_from_string(std::string_view s) {
    if (s == "human") return SourceTag::human;
    if (s == "llm") return SourceTag::llm;
    throw DataError("unknown source tag: " + std::string(s));
}

}  // namespace annobias
