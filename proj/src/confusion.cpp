#include "annobias/confusion.hpp"

#include "annobias/util.hpp"

namespace annobias {

std::int64_t ConfusionMatrix::n_pairs() const {
    std::int64_t total = 0;
    for (const auto& row : counts)
        for (std::int64_t c : row) total += c;
    return total;
}

std::int64_t ConfusionMatrix::diagonal_sum() const {
    return counts[0][0] + counts[1][1] + counts[2][2];
}

std::int64_t ConfusionMatrix::lower_sum() const {
    return counts[1][0] + counts[2][0] + counts[2][1];
}

std::int64_t ConfusionMatrix::upper_sum() const {
    return counts[0][1] + counts[0][2] + counts[1][2];
}

std::array<std::int64_t, 3> ConfusionMatrix::row_sums() const {
    std::array<std::int64_t, 3> out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += counts[i][j];
    return out;
}

std::array<std::int64_t, 3> ConfusionMatrix::col_sums() const {
    std::array<std::int64_t, 3> out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[j] += counts[i][j];
    return out;
}

ConfusionMatrix ConfusionMatrix::transposed() const {
    ConfusionMatrix out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.counts[j][i] = counts[i][j];
    return out;
}

ConfusionMatrix ConfusionMatrix::scaled(std::int64_t k) const {
    ConfusionMatrix out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.counts[i][j] = counts[i][j] * k;
    return out;
}

nlohmann::json ConfusionMatrix::to_json() const {
    return {{"rows", {"non_hate", "maybe", "hate"}},
            {"counts",
             {{counts[0][0], counts[0][1], counts[0][2]},
              {counts[1][0], counts[1][1], counts[1][2]},
              {counts[2][0], counts[2][1], counts[2][2]}}},
            {"n_pairs", n_pairs()}};
}

ConfusionMatrix ConfusionMatrix::from_json(const nlohmann::json& j) {
    ConfusionMatrix m;
    const auto& rows = j.at("counts");
    if (!rows.is_array() || rows.size() != 3) throw DataError("matrix json: bad 'counts'");
    for (int i = 0; i < 3; ++i) {
        if (!rows[i].is_array() || rows[i].size() != 3)
            throw DataError("matrix json: bad 'counts' row");
        for (int j2 = 0; j2 < 3; ++j2) {
            std::int64_t v = rows[i][j2].get<std::int64_t>();
            if (v < 0) throw DataError("matrix json: negative cell");
            m.counts[i][j2] = v;
        }
    }
    if (j.contains("n_pairs") && j.at("n_pairs").get<std::int64_t>() != m.n_pairs())
        throw DataError("matrix json: n_pairs inconsistent with cells");
    return m;
}

}  // namespace annobias
