#include "annobias/corpus_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace annobias {

CorpusFormat format_from_string(std::string_view s) {
    if (s == "csv" || s == "canonical_csv") return CorpusFormat::canonical_csv;
    if (s == "jsonl" || s == "canonical_jsonl") return CorpusFormat::canonical_jsonl;
    throw UsageError("unknown corpus format: " + std::string(s));
}

std::vector<std::string> canonical_header() {
    std::vector<std::string> header = {"record_id", "post_id", "annotator_id", "label", "source"};
    for (Attribute key : attributes_for_side(Side::annotator))
        header.push_back("annotator_" + std::string(to_string(key)));
    for (Attribute key : attributes_for_side(Side::target))
        header.push_back("target_" + std::string(to_string(key)));
    return header;
}

namespace {

std::set<std::string> parse_value_set(const std::string& cell, Attribute key, Side /*side*/,
                                      const AttributeSchema& schema, std::size_t line) {
    std::set<std::string> out;
    if (cell.empty()) return out;
    for (const auto& raw : split(cell, '|')) {
        std::string v = trim(raw);
        if (v.empty()) continue;
        if (!schema.allows(key, v))
            throw DataError("line " + std::to_string(line) + ": value '" + v +
                            "' not allowed for " + std::string(to_string(key)));
        out.insert(v);
    }
    return out;
}

Corpus load_canonical_csv(std::istream& in, AttributeSchema schema, const std::string& origin) {
    CsvReader reader(in);
    std::vector<std::string> row;
    if (!reader.next_row(row)) throw DataError(origin + ": missing header");
    const auto expected = canonical_header();
    if (row != expected)
        throw DataError(origin + ": header mismatch; expected '" + csv_join(expected) + "'");
    const auto ann_keys = attributes_for_side(Side::annotator);
    const auto tgt_keys = attributes_for_side(Side::target);
    std::vector<AnnotationRecord> records;
    while (reader.next_row(row)) {
        std::size_t line = reader.line_number();
        if (row.size() != expected.size())
            throw DataError(origin + ": line " + std::to_string(line) + ": expected " +
                            std::to_string(expected.size()) + " fields, got " +
                            std::to_string(row.size()));
        AnnotationRecord rec;
        rec.record_id = row[0];
        rec.post_id = row[1];
        rec.annotator_id = row[2];
        try {
            rec.label = label_from_string(row[3]);
            rec.source = source_from_string(row[4]);
        } catch (const DataError& e) {
            throw DataError(origin + ": line " + std::to_string(line) + ": " + e.what());
        }
        std::size_t col = 5;
        for (Attribute key : ann_keys)
            rec.annotator_attrs[key] = parse_value_set(row[col++], key, Side::annotator, schema, line);
        for (Attribute key : tgt_keys)
            rec.target_attrs[key] = parse_value_set(row[col++], key, Side::target, schema, line);
        records.push_back(std::move(rec));
    }
    return Corpus(std::move(schema), std::move(records));
}

Corpus load_canonical_jsonl(std::istream& in, AttributeSchema schema, const std::string& origin) {
    std::vector<AnnotationRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw DataError(origin + ": line " + std::to_string(line_no) + ": invalid JSON");
        try {
            records.push_back(record_from_json(j));
        } catch (const std::exception& e) {
            throw DataError(origin + ": line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return Corpus(std::move(schema), std::move(records));
}

}  // namespace

Corpus load_corpus_stream(std::istream& in, CorpusFormat format, AttributeSchema schema,
                          const std::string& origin) {
    return format == CorpusFormat::canonical_csv
               ? load_canonical_csv(in, std::move(schema), origin)
               : load_canonical_jsonl(in, std::move(schema), origin);
}

Corpus load_corpus(const std::string& path, CorpusFormat format, AttributeSchema schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open corpus file: " + path);
    return load_corpus_stream(in, format, std::move(schema), path);
}

nlohmann::json record_to_json(const AnnotationRecord& rec, const AttributeSchema& schema) {
    auto attrs_json = [&](const AttrSets& attrs) {
        nlohmann::json out = nlohmann::json::object();
        for (const auto& [key, values] : attrs) {
            if (values.empty()) continue;
            std::vector<std::string> ordered(values.begin(), values.end());
            std::sort(ordered.begin(), ordered.end(),
                      [&](const std::string& a, const std::string& b) {
                          return schema.value_rank(key, a) < schema.value_rank(key, b);
                      });
            out[std::string(to_string(key))] = ordered;
        }
        return out;
    };
    nlohmann::json j = {{"record_id", rec.record_id},
                        {"post_id", rec.post_id},
                        {"annotator_id", rec.annotator_id},
                        {"label", std::string(to_string(rec.label))},
                        {"source", std::string(to_string(rec.source))},
                        {"annotator_attrs", attrs_json(rec.annotator_attrs)},
                        {"target_attrs", attrs_json(rec.target_attrs)}};
    if (!rec.text_fingerprint.empty()) j["text_fingerprint"] = rec.text_fingerprint;
    return j;
}

AnnotationRecord record_from_json(const nlohmann::json& j) {
    AnnotationRecord rec;
    rec.record_id = j.at("record_id").get<std::string>();
    rec.post_id = j.at("post_id").get<std::string>();
    rec.annotator_id = j.at("annotator_id").get<std::string>();
    rec.label = label_from_string(j.at("label").get<std::string>());
    rec.source = source_from_string(j.value("source", "human"));
    rec.text_fingerprint = j.value("text_fingerprint", "");
    auto read_attrs = [&](const char* field, AttrSets& out) {
        if (!j.contains(field)) return;
        for (const auto& [name, values] : j.at(field).items()) {
            Attribute key = attribute_from_string(name);
            for (const auto& v : values) out[key].insert(v.get<std::string>());
        }
    };
    read_attrs("annotator_attrs", rec.annotator_attrs);
    read_attrs("target_attrs", rec.target_attrs);
    return rec;
}

std::string serialize_corpus(const Corpus& corpus, CorpusFormat format) {
    std::string out;
    if (format == CorpusFormat::canonical_csv) {
        out = csv_join(canonical_header()) + "\n";
        for (const auto& rec : corpus.records())
            out += canonical_csv_row(rec, corpus.schema()) + "\n";
    } else {
        for (const auto& rec : corpus.records())
            out += record_to_json(rec, corpus.schema()).dump() + "\n";
    }
    return out;
}

void save_corpus(const Corpus& corpus, const std::string& path, CorpusFormat format) {
    write_file(path, serialize_corpus(corpus, format));
}

// --- mapping-driven adaptation ----------------------------------------------

MappingConfig MappingConfig::from_json(const nlohmann::json& j) {
    MappingConfig cfg;
    cfg.record_id_column = j.value("record_id_column", "");
    cfg.post_id_column = j.at("post_id_column").get<std::string>();
    cfg.annotator_id_column = j.at("annotator_id_column").get<std::string>();
    cfg.label_column = j.at("label_column").get<std::string>();
    if (j.contains("label_values"))
        cfg.label_values = j.at("label_values").get<std::map<std::string, std::string>>();
    cfg.text_column = j.value("text_column", "");
    for (const auto& r : j.value("attributes", nlohmann::json::array())) {
        MappingRule rule;
        std::string kind = r.at("kind").get<std::string>();
        rule.side = side_from_string(r.at("side").get<std::string>());
        rule.key = attribute_from_string(r.at("key").get<std::string>());
        if (kind == "indicator") {
            rule.kind = MappingRule::Kind::indicator;
            rule.column = r.at("column").get<std::string>();
            rule.value = r.at("value").get<std::string>();
        } else if (kind == "categorical") {
            rule.kind = MappingRule::Kind::categorical;
            rule.column = r.at("column").get<std::string>();
            rule.values = r.at("values").get<std::map<std::string, std::string>>();
        } else if (kind == "range") {
            rule.kind = MappingRule::Kind::range;
            rule.column = r.at("column").get<std::string>();
            for (const auto& rr : r.at("ranges")) {
                MappingRule::Range range;
                if (rr.contains("min")) range.min = rr.at("min").get<double>();
                if (rr.contains("max")) range.max = rr.at("max").get<double>();
                range.value = rr.at("value").get<std::string>();
                rule.ranges.push_back(std::move(range));
            }
        } else if (kind == "conditional") {
            rule.kind = MappingRule::Kind::conditional;
            for (const auto& cc : r.at("cases")) {
                MappingRule::Case c;
                c.when = cc.at("when").get<std::map<std::string, std::string>>();
                c.value = cc.at("value").get<std::string>();
                rule.cases.push_back(std::move(c));
            }
        } else {
            throw DataError("mapping: unknown rule kind: " + kind);
        }
        cfg.rules.push_back(std::move(rule));
    }
    return cfg;
}

MappingConfig MappingConfig::load(const std::string& path) {
    nlohmann::json j = nlohmann::json::parse(read_file(path), nullptr, false);
    if (j.is_discarded()) throw DataError("mapping config is not valid JSON: " + path);
    return from_json(j);
}

namespace {

bool truthy_cell(const std::string& cell) {
    std::string v = to_lower(trim(cell));
    if (v.empty() || v == "0" || v == "false" || v == "no" || v == "nan" || v == "none" ||
        v == "0.0")
        return false;
    return true;
}

const std::string* find_cell(const std::map<std::string, std::string>& row,
                             const std::string& column) {
    auto it = row.find(column);
    return it == row.end() ? nullptr : &it->second;
}

}  // namespace

AdaptOutcome adapt_mhs(const std::map<std::string, std::string>& raw_row,
                       const MappingConfig& mapping, const AttributeSchema& schema,
                       std::size_t row_number) {
    AdaptOutcome out;
    AnnotationRecord& rec = out.record;
    auto required = [&](const std::string& column) -> const std::string& {
        const std::string* cell = find_cell(raw_row, column);
        if (!cell)
            throw DataError("row " + std::to_string(row_number) + ": missing column '" + column +
                            "'");
        return *cell;
    };
    rec.post_id = trim(required(mapping.post_id_column));
    rec.annotator_id = trim(required(mapping.annotator_id_column));
    rec.record_id = mapping.record_id_column.empty()
                        ? rec.post_id + ":" + rec.annotator_id + ":" + std::to_string(row_number)
                        : trim(required(mapping.record_id_column));
    rec.source = SourceTag::human;

    std::string label_cell = trim(required(mapping.label_column));
    // Numeric cells may arrive as "2.0".
    std::string normalized = label_cell;
    if (auto dot = normalized.find(".0"); dot != std::string::npos && dot + 2 == normalized.size())
        normalized.erase(dot);
    auto mapped = mapping.label_values.find(normalized);
    if (mapped != mapping.label_values.end()) {
        rec.label = label_from_string(mapped->second);
    } else if (normalized == "0" || normalized == "1" || normalized == "2") {
        rec.label = label_from_ordinal(normalized[0] - '0');
    } else {
        throw DataError("row " + std::to_string(row_number) + ": label out of range: '" +
                        label_cell + "'");
    }

    if (!mapping.text_column.empty()) {
        out.text = required(mapping.text_column);
        rec.text_fingerprint = to_hex(fnv1a64(out.text));
    }

    auto add_value = [&](Side side, Attribute key, const std::string& value) {
        if (!schema.allows(key, value))
            throw DataError("row " + std::to_string(row_number) + ": mapped value '" + value +
                            "' not allowed for " + std::string(to_string(key)));
        AttrSets& attrs = side == Side::annotator ? rec.annotator_attrs : rec.target_attrs;
        attrs[key].insert(value);
    };

    for (const auto& rule : mapping.rules) {
        switch (rule.kind) {
            case MappingRule::Kind::indicator: {
                const std::string* cell = find_cell(raw_row, rule.column);
                if (cell && truthy_cell(*cell)) add_value(rule.side, rule.key, rule.value);
                break;
            }
            case MappingRule::Kind::categorical: {
                const std::string* cell = find_cell(raw_row, rule.column);
                if (!cell) break;
                auto it = rule.values.find(trim(*cell));
                if (it != rule.values.end()) add_value(rule.side, rule.key, it->second);
                break;
            }
            case MappingRule::Kind::range: {
                const std::string* cell = find_cell(raw_row, rule.column);
                if (!cell || trim(*cell).empty()) break;
                char* end = nullptr;
                double x = std::strtod(cell->c_str(), &end);
                if (end == cell->c_str()) break;  // not numeric; treat as unset
                for (const auto& range : rule.ranges) {
                    if (range.min && x < *range.min) continue;
                    if (range.max && x > *range.max) continue;
                    add_value(rule.side, rule.key, range.value);
                    break;
                }
                break;
            }
            case MappingRule::Kind::conditional: {
                for (const auto& c : rule.cases) {
                    bool match = true;
                    for (const auto& [column, expected] : c.when) {
                        const std::string* cell = find_cell(raw_row, column);
                        if (!cell || trim(*cell) != expected) {
                            match = false;
                            break;
                        }
                    }
                    if (match) {
                        add_value(rule.side, rule.key, c.value);
                        break;
                    }
                }
                break;
            }
        }
    }

    // Multi-valued results for nominally single-valued attributes are kept; note them.
    for (const auto& [key, values] : rec.annotator_attrs)
        if (values.size() > 1 &&
            (key == Attribute::education || key == Attribute::income || key == Attribute::ideology))
            out.multi_value_notes.push_back("row " + std::to_string(row_number) + ": " +
                                            std::string(to_string(key)) + " has " +
                                            std::to_string(values.size()) + " values");
    return out;
}

MhsLoadResult load_mhs(const std::string& path, const MappingConfig& mapping,
                       AttributeSchema schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    CsvReader reader(in);
    std::vector<std::string> header;
    if (!reader.next_row(header)) throw DataError(path + ": missing header");
    std::vector<std::string> row;
    std::vector<AnnotationRecord> records;
    std::map<std::string, std::string> posts;
    std::vector<std::string> notes;
    std::size_t row_number = 0;
    while (reader.next_row(row)) {
        ++row_number;
        if (row.size() != header.size())
            throw DataError(path + ": line " + std::to_string(reader.line_number()) +
                            ": field count mismatch");
        std::map<std::string, std::string> cells;
        for (std::size_t i = 0; i < header.size(); ++i) cells[header[i]] = row[i];
        AdaptOutcome outcome = adapt_mhs(cells, mapping, schema, row_number);
        if (!outcome.text.empty()) posts.emplace(outcome.record.post_id, outcome.text);
        for (auto& note : outcome.multi_value_notes) notes.push_back(std::move(note));
        records.push_back(std::move(outcome.record));
    }
    return {Corpus(std::move(schema), std::move(records)), std::move(posts), std::move(notes)};
}

std::map<std::string, std::string> load_post_texts(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open posts file: " + path);
    CsvReader reader(in);
    std::vector<std::string> row;
    if (!reader.next_row(row) || row.size() != 2 || row[0] != "post_id" || row[1] != "text")
        throw DataError(path + ": expected header 'post_id,text'");
    std::map<std::string, std::string> posts;
    while (reader.next_row(row)) {
        if (row.size() != 2)
            throw DataError(path + ": line " + std::to_string(reader.line_number()) +
                            ": expected 2 fields");
        posts[row[0]] = row[1];
    }
    return posts;
}

void save_post_texts(const std::map<std::string, std::string>& posts, const std::string& path) {
    std::string out = "post_id,text\n";
    for (const auto& [id, text] : posts) out += csv_join({id, text}) + "\n";
    write_file(path, out);
}

}  // namespace annobias
