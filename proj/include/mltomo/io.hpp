#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "mltomo/dataset.hpp"
#include "mltomo/density_matrix.hpp"

namespace mltomo {

/// On-disk form of a Dataset: schema_version "1", explicit [re, im] pairs
/// for every amplitude, integer counts, free-form string metadata.
struct DatasetFile {
    Dataset data;
    std::map<std::string, std::string> metadata;
};

std::string dataset_to_json(const Dataset &data,
                            const std::map<std::string, std::string> &metadata);
DatasetFile dataset_from_json(const std::string &text);

void write_dataset_file(const std::filesystem::path &path, const Dataset &data,
                        const std::map<std::string, std::string> &metadata);
DatasetFile read_dataset_file(const std::filesystem::path &path);

/// On-disk form of a DensityMatrix: schema_version "1", row-major dim x dim
/// complex pairs. Loading rejects matrices that fail the physicality checks
/// at tolerance 1e-8.
std::string state_to_json(const DensityMatrix &state);
DensityMatrix state_from_json(const std::string &text);

void write_state_file(const std::filesystem::path &path,
                      const DensityMatrix &state);
DensityMatrix read_state_file(const std::filesystem::path &path);

/// Formats a double with 17 significant digits so CSV readers recover the
/// exact bit pattern.
std::string csv_double(double value);

} // namespace mltomo
