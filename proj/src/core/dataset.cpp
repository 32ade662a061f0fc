#include "mltomo/dataset.hpp"

#include <utility>

namespace mltomo {

Dataset::Dataset(std::vector<Record> records)
    : records_(std::move(records)), total_(0) {
    if (records_.empty()) {
        throw EmptyDataset("dataset has no records");
    }
    const Eigen::Index d = records_.front().effect.dim();
    for (const Record &r : records_) {
        if (r.effect.dim() != d) {
            throw InconsistentDimensions(
                "dataset effects differ in dimension");
        }
        total_ += r.count;
    }
    if (total_ == 0) {
        throw EmptyDataset("dataset has no registered counts");
    }
}

std::vector<std::pair<Effect, double>> frequencies(const Dataset &data) {
    std::vector<std::pair<Effect, double>> out;
    out.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        out.emplace_back(data.records()[i].effect, data.frequency(i));
    }
    return out;
}

} // namespace mltomo
