#include "annobias/record.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace annobias {

namespace {

std::string joined_values(const AttrSets& attrs, Attribute key, const AttributeSchema& schema) {
    auto it = attrs.find(key);
    if (it == attrs.end() || it->second.empty()) return "";
    // Serialize in canonical (schema) value order for determinism.
    std::vector<std::string> ordered(it->second.begin(), it->second.end());
    std::sort(ordered.begin(), ordered.end(), [&](const std::string& a, const std::string& b) {
        return schema.value_rank(key, a) < schema.value_rank(key, b);
    });
    return join(ordered, "|");
}

}  // namespace

std::string canonical_csv_row(const AnnotationRecord& rec, const AttributeSchema& schema) {
    std::vector<std::string> fields = {rec.record_id, rec.post_id, rec.annotator_id,
                                       std::string(to_string(rec.label)),
                                       std::string(to_string(rec.source))};
    for (Attribute key : attributes_for_side(Side::annotator))
        fields.push_back(joined_values(rec.annotator_attrs, key, schema));
    for (Attribute key : attributes_for_side(Side::target))
        fields.push_back(joined_values(rec.target_attrs, key, schema));
    return csv_join(fields);
}

Corpus::Corpus(AttributeSchema schema, std::vector<AnnotationRecord> records)
    : schema_(std::move(schema)), records_(std::move(records)) {
    std::set<std::string> ids;
    std::uint64_t h = fnv1a64("annobias-corpus-v1");
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const auto& rec = records_[i];
        validate_record(rec);
        if (!ids.insert(rec.record_id).second)
            throw DataError("duplicate record_id: " + rec.record_id);
        auto [it, inserted] = post_index_.try_emplace(rec.post_id);
        if (inserted) post_order_.push_back(rec.post_id);
        it->second.push_back(i);
        h = fnv1a64(canonical_csv_row(rec, schema_), h);
        h = fnv1a64("\n", h);
    }
    content_hash_ = h;
}

void Corpus::validate_record(const AnnotationRecord& rec) const {
    if (rec.record_id.empty()) throw DataError("record with empty record_id");
    if (rec.post_id.empty()) throw DataError("record " + rec.record_id + ": empty post_id");
    if (rec.annotator_id.empty())
        throw DataError("record " + rec.record_id + ": empty annotator_id");
    auto check = [&](const AttrSets& attrs, Side side, const char* which) {
        for (const auto& [key, values] : attrs) {
            if (!attribute_applies(key, side))
                throw DataError("record " + rec.record_id + ": attribute '" +
                                std::string(to_string(key)) + "' is not " + which + "-side");
            for (const auto& v : values)
                if (!schema_.allows(key, v))
                    throw DataError("record " + rec.record_id + ": value '" + v +
                                    "' not allowed for " + std::string(to_string(key)));
        }
    };
    check(rec.annotator_attrs, Side::annotator, "annotator");
    check(rec.target_attrs, Side::target, "target");
}

std::span<const std::size_t> Corpus::records_of_post(const std::string& post_id) const {
    auto it = post_index_.find(post_id);
    if (it == post_index_.end()) return {};
    return {it->second.data(), it->second.size()};
}

CorpusStats corpus_stats(const Corpus& corpus) {
    CorpusStats stats;
    stats.n_records = static_cast<std::int64_t>(corpus.size());
    std::set<std::string> annotators;
    std::map<std::string, std::int64_t> posts_per_annotator;
    std::map<std::tuple<Side, Attribute, std::string>, std::set<std::string>> group_annotators;
    for (const auto& rec : corpus.records()) {
        annotators.insert(rec.annotator_id);
        ++posts_per_annotator[rec.annotator_id];
        for (const auto& [key, values] : rec.annotator_attrs)
            for (const auto& v : values) {
                auto k = std::make_tuple(Side::annotator, key, v);
                ++stats.group_sizes[k].first;
                group_annotators[k].insert(rec.annotator_id);
            }
        for (const auto& [key, values] : rec.target_attrs)
            for (const auto& v : values) {
                auto k = std::make_tuple(Side::target, key, v);
                ++stats.group_sizes[k].first;
                group_annotators[k].insert(rec.annotator_id);
            }
    }
    for (auto& [key, counts] : stats.group_sizes)
        counts.second = static_cast<std::int64_t>(group_annotators[key].size());
    stats.n_annotators = static_cast<std::int64_t>(annotators.size());
    stats.n_posts = static_cast<std::int64_t>(corpus.post_ids().size());
    if (stats.n_posts > 0)
        stats.mean_labels_per_post = static_cast<double>(stats.n_records) / stats.n_posts;
    if (stats.n_annotators > 0)
        stats.mean_posts_per_annotator =
            static_cast<double>(stats.n_records) / stats.n_annotators;
    return stats;
}

std::string format_stats(const CorpusStats& stats) {
    std::ostringstream out;
    out << "records: " << stats.n_records << "\n"
        << "annotators: " << stats.n_annotators << "\n"
        << "posts: " << stats.n_posts << "\n"
        << "labels per post: " << format_real(stats.mean_labels_per_post, 1) << "\n"
        << "posts per annotator: " << format_real(stats.mean_posts_per_annotator, 1) << "\n";
    for (const auto& [key, counts] : stats.group_sizes) {
        const auto& [side, attr, value] = key;
        out << to_string(side) << ":" << to_string(attr) << "=" << value << "  records="
            << counts.first << " annotators=" << counts.second << "\n";
    }
    return out.str();
}

}  // namespace annobias
