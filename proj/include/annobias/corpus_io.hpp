#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "annobias/record.hpp"

namespace annobias {

enum class CorpusFormat { canonical_csv, canonical_jsonl };

CorpusFormat format_from_string(std::string_view s);

// Canonical CSV header for the given schema (fixed column order).
std::vector<std::string> canonical_header();

Corpus load_corpus(const std::string& path, CorpusFormat format, AttributeSchema schema);
Corpus load_corpus_stream(std::istream& in, CorpusFormat format, AttributeSchema schema,
                          const std::string& origin = "<stream>");

void save_corpus(const Corpus& corpus, const std::string& path, CorpusFormat format);
std::string serialize_corpus(const Corpus& corpus, CorpusFormat format);

nlohmann::json record_to_json(const AnnotationRecord& rec, const AttributeSchema& schema);
AnnotationRecord record_from_json(const nlohmann::json& j);

// --- Column-mapping driven adaptation of a columnar release -----------------
//
// Rule kinds:
//   indicator:   one source column per (side,key,value); truthy cell adds value
//   categorical: one source column per (side,key); cell mapped via `values`
//   range:       numeric source column bucketed into values via [min,max] ranges
//   conditional: ordered cases of {column: expected,...} -> value; first match
struct MappingRule {
    enum class Kind { indicator, categorical, range, conditional } kind;
    Side side;
    Attribute key;
    std::string column;               // indicator/categorical/range
    std::string value;                // indicator
    std::map<std::string, std::string> values;  // categorical: cell -> schema value
    struct Range {
        std::optional<double> min, max;
        std::string value;
    };
    std::vector<Range> ranges;        // range
    struct Case {
        std::map<std::string, std::string> when;  // column -> expected cell
        std::string value;
    };
    std::vector<Case> cases;          // conditional
};

struct MappingConfig {
    std::string record_id_column;     // empty -> synthesized from row number
    std::string post_id_column;
    std::string annotator_id_column;
    std::string label_column;
    std::map<std::string, std::string> label_values;  // cell -> non_hate|maybe|hate
    std::string text_column;          // optional; drives fingerprint + posts table
    std::vector<MappingRule> rules;

    static MappingConfig from_json(const nlohmann::json& j);
    static MappingConfig load(const std::string& path);
};

struct AdaptOutcome {
    AnnotationRecord record;
    std::string text;                       // empty when no text column mapped
    std::vector<std::string> multi_value_notes;  // contradictory single-valued attrs kept as sets
};

// One row of the source release -> one canonical record.
AdaptOutcome adapt_mhs(const std::map<std::string, std::string>& raw_row,
                       const MappingConfig& mapping, const AttributeSchema& schema,
                       std::size_t row_number);

struct MhsLoadResult {
    Corpus corpus;
    std::map<std::string, std::string> post_texts;
    std::vector<std::string> notes;
};

MhsLoadResult load_mhs(const std::string& path, const MappingConfig& mapping,
                       AttributeSchema schema);

// post_id,text two-column CSV used by the LLM harness.
std::map<std::string, std::string> load_post_texts(const std::string& path);
void save_post_texts(const std::map<std::string, std::string>& posts, const std::string& path);

}  // namespace annobias
