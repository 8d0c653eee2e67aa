#pragma once

#include <array>
#include <cstdint>

#include <json.hpp>

#include "annobias/label.hpp"

namespace annobias {

// 3x3 cross-group label-pair counts. Rows = in-group label, columns =
// out-group label, both in (non_hate, maybe, hate) order. The lower triangle
// (row > col) holds pairs where the in-group assigned the more hateful label.
struct ConfusionMatrix {
    std::array<std::array<std::int64_t, 3>, 3> counts{};

    std::int64_t& at(Label in_group, Label out_group) {
        return counts[ordinal(in_group)][ordinal(out_group)];
    }
    std::int64_t at(Label in_group, Label out_group) const {
        return counts[ordinal(in_group)][ordinal(out_group)];
    }

    std::int64_t n_pairs() const;
    std::int64_t diagonal_sum() const;
    std::int64_t lower_sum() const;  // in-group overestimates
    std::int64_t upper_sum() const;  // in-group underestimates
    std::array<std::int64_t, 3> row_sums() const;
    std::array<std::int64_t, 3> col_sums() const;

    ConfusionMatrix transposed() const;
    ConfusionMatrix scaled(std::int64_t k) const;

    bool operator==(const ConfusionMatrix&) const = default;

    nlohmann::json to_json() const;
    static ConfusionMatrix from_json(const nlohmann::json& j);
};

}  // namespace annobias
