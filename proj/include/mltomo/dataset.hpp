#pragma once

#include <cstdint>
#include <vector>

#include "mltomo/effect.hpp"

namespace mltomo {

/// One pooled measurement record: an effect and how often it fired.
struct Record {
    Effect effect;
    std::uint64_t count = 0;
};

/// The full sequential measurement record {N, N_i}. Counts stay integers so
/// the pooled frequencies f_i = N_i / N sum to one exactly as rationals.
class Dataset {
  public:
    explicit Dataset(std::vector<Record> records);

    const std::vector<Record> &records() const { return records_; }
    std::uint64_t total() const { return total_; }
    Eigen::Index dim() const { return records_.front().effect.dim(); }
    std::size_t size() const { return records_.size(); }

    double frequency(std::size_t i) const {
        return static_cast<double>(records_[i].count) /
               static_cast<double>(total_);
    }

  private:
    std::vector<Record> records_;
    std::uint64_t total_;
};

/// Pooled relative frequencies f_i = N_i / N, zero-count records retained.
std::vector<std::pair<Effect, double>> frequencies(const Dataset &data);

} // namespace mltomo
