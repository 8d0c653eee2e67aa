#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "annobias/label.hpp"
#include "annobias/schema.hpp"

namespace annobias {

// Attribute key -> set of values. Empty set = missing data.
using AttrSets = std::map<Attribute, std::set<std::string>>;

struct AnnotationRecord {
    std::string record_id;
    std::string post_id;
    std::string text_fingerprint;  // may be empty (canonical CSV carries none)
    std::string annotator_id;
    Label label = Label::non_hate;
    AttrSets annotator_attrs;
    AttrSets target_attrs;
    SourceTag source = SourceTag::human;

    bool operator==(const AnnotationRecord&) const = default;
};

// Immutable after construction; safe to share read-only across workers.
class Corpus {
  public:
    Corpus(AttributeSchema schema, std::vector<AnnotationRecord> records);

    const AttributeSchema& schema() const { return schema_; }
    const std::vector<AnnotationRecord>& records() const { return records_; }

    // Record indexes sharing a post, in corpus order. Empty span if unknown.
    std::span<const std::size_t> records_of_post(const std::string& post_id) const;

    // Post ids in first-appearance order.
    const std::vector<std::string>& post_ids() const { return post_order_; }

    std::size_t size() const { return records_.size(); }

    // Stable content hash over the canonical serialization of all records.
    std::uint64_t content_hash() const { return content_hash_; }
    std::string content_hash_hex() const { return to_hex(content_hash_); }

  private:
    void validate_record(const AnnotationRecord& rec) const;

    AttributeSchema schema_;
    std::vector<AnnotationRecord> records_;
    std::unordered_map<std::string, std::vector<std::size_t>> post_index_;
    std::vector<std::string> post_order_;
    std::uint64_t content_hash_ = 0;
};

// One line of the canonical CSV serialization (no trailing newline). Also the
// unit over which the corpus content hash is computed.
std::string canonical_csv_row(const AnnotationRecord& rec, const AttributeSchema& schema);

struct CorpusStats {
    std::int64_t n_records = 0;
    std::int64_t n_annotators = 0;
    std::int64_t n_posts = 0;
    double mean_labels_per_post = 0.0;
    double mean_posts_per_annotator = 0.0;
    // (side, key, value) -> matching record count and distinct annotator count.
    std::map<std::tuple<Side, Attribute, std::string>, std::pair<std::int64_t, std::int64_t>>
        group_sizes;
};

CorpusStats corpus_stats(const Corpus& corpus);
std::string format_stats(const CorpusStats& stats);

}  // namespace annobias
