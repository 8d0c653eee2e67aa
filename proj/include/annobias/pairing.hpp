#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "annobias/confusion.hpp"
#include "annobias/record.hpp"
#include "annobias/selector.hpp"

namespace annobias {

// Records whose annotator matches ann_sel and (if given) whose own target
// attributes match tgt_sel, in corpus order.
std::vector<std::string> select_annotations(const Corpus& corpus, const GroupSelector& ann_sel,
                                            const std::optional<GroupSelector>& tgt_sel);

// Cross-group confusion matrix: for every in-group annotation c of a
// qualifying post and every annotation of the same post by an out-group
// annotator, cell (label(c), label(other)) is incremented once. Ordered pairs.
ConfusionMatrix build_matrix(const Corpus& corpus, const GroupSelector& ann_sel,
                             const std::optional<GroupSelector>& tgt_sel);

// Row-side / column-side ordinal labels of every counted pair. |x| == |y| ==
// n_pairs, consistent with the matrix marginals.
struct PairedSamples {
    std::vector<int> x;
    std::vector<int> y;
};

PairedSamples paired_samples(const Corpus& corpus, const GroupSelector& ann_sel,
                             const std::optional<GroupSelector>& tgt_sel);

PairedSamples expand_matrix(const ConfusionMatrix& matrix);

// Optional on-disk matrix cache keyed by (corpus hash, ann_sel, tgt_sel).
class MatrixCache {
  public:
    explicit MatrixCache(std::filesystem::path dir);

    std::optional<ConfusionMatrix> load(const Corpus& corpus, const GroupSelector& ann_sel,
                                        const std::optional<GroupSelector>& tgt_sel) const;
    void store(const Corpus& corpus, const GroupSelector& ann_sel,
               const std::optional<GroupSelector>& tgt_sel, const ConfusionMatrix& matrix) const;

  private:
    std::filesystem::path entry_path(const Corpus& corpus, const GroupSelector& ann_sel,
                                     const std::optional<GroupSelector>& tgt_sel) const;
    std::filesystem::path dir_;
};

}  // namespace annobias
