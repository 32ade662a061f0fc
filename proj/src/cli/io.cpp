#include "mltomo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mltomo {

namespace {

using nlohmann::json;

constexpr double kLoadTol = 1e-8;

json complex_pair(const Complex &z) {
    return json::array({z.real(), z.imag()});
}

Complex parse_complex_pair(const json &j, const char *what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
        !j[1].is_number()) {
        throw SchemaError(std::string(what) +
                          ": complex values must be [re, im] pairs");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

json parse_document(const std::string &text, const char *what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw SchemaError(std::string(what) + ": malformed JSON document");
    }
    if (doc.value("schema_version", "") != "1") {
        throw SchemaError(std::string(what) +
                          ": unsupported or missing schema_version");
    }
    return doc;
}

std::string read_text(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw IoError("short write to " + path.string());
    }
}

} // namespace

std::string dataset_to_json(
    const Dataset &data, const std::map<std::string, std::string> &metadata) {
    json doc;
    doc["schema_version"] = "1";
    doc["dim"] = data.dim();
    json records = json::array();
    for (const Record &r : data.records()) {
        json effect = json::array();
        for (Eigen::Index k = 0; k < r.effect.dim(); ++k) {
            effect.push_back(complex_pair(r.effect.vector()(k)));
        }
        records.push_back(json{{"effect", std::move(effect)},
                               {"label", r.effect.label()},
                               {"count", r.count}});
    }
    doc["records"] = std::move(records);
    doc["total"] = data.total();
    doc["metadata"] = metadata;
    return doc.dump(2) + "\n";
}

DatasetFile dataset_from_json(const std::string &text) {
    const json doc = parse_document(text, "dataset");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
        throw SchemaError("dataset: missing integer dim");
    }
    const auto dim = doc["dim"].get<Eigen::Index>();
    if (dim < 1) {
        throw SchemaError("dataset: dim must be >= 1");
    }
    if (!doc.contains("records") || !doc["records"].is_array() ||
        doc["records"].empty()) {
        throw SchemaError("dataset: missing records");
    }

    std::vector<Record> records;
    std::uint64_t sum = 0;
    for (const json &entry : doc["records"]) {
        if (!entry.is_object() || !entry.contains("effect") ||
            !entry.contains("label") || !entry.contains("count")) {
            throw SchemaError("dataset: record needs effect, label, count");
        }
        const json &vec = entry["effect"];
        if (!vec.is_array() || static_cast<Eigen::Index>(vec.size()) != dim) {
            throw SchemaError("dataset: effect vector length must equal dim");
        }
        ComplexVector y(dim);
        for (Eigen::Index k = 0; k < dim; ++k) {
            y(k) = parse_complex_pair(vec[static_cast<std::size_t>(k)],
                                      "dataset");
        }
        const double norm = y.norm();
        if (std::abs(norm - 1.0) > 1e-10) {
            throw SchemaError("dataset: effect vector is not unit norm");
        }
        if (!entry["count"].is_number_unsigned() &&
            !(entry["count"].is_number_integer() &&
              entry["count"].get<long long>() >= 0)) {
            throw SchemaError("dataset: counts must be nonnegative integers");
        }
        const auto count = entry["count"].get<std::uint64_t>();
        sum += count;
        records.push_back(
            Record{Effect(y / norm, entry["label"].get<std::string>()), count});
    }
    if (!doc.contains("total") || !doc["total"].is_number_integer() ||
        doc["total"].get<std::uint64_t>() != sum) {
        throw SchemaError("dataset: total does not match the sum of counts");
    }

    DatasetFile file{Dataset(std::move(records)), {}};
    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object()) {
            throw SchemaError("dataset: metadata must be a string map");
        }
        for (const auto &[key, value] : doc["metadata"].items()) {
            if (!value.is_string()) {
                throw SchemaError("dataset: metadata values must be strings");
            }
            file.metadata.emplace(key, value.get<std::string>());
        }
    }
    return file;
}

void write_dataset_file(const std::filesystem::path &path, const Dataset &data,
                        const std::map<std::string, std::string> &metadata) {
    write_text(path, dataset_to_json(data, metadata));
}

DatasetFile read_dataset_file(const std::filesystem::path &path) {
    try {
        return dataset_from_json(read_text(path));
    } catch (const IoError &) {
        throw;
    } catch (const Error &e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

std::string state_to_json(const DensityMatrix &state) {
    json doc;
    doc["schema_version"] = "1";
    doc["dim"] = state.dim();
    json rows = json::array();
    for (Eigen::Index j = 0; j < state.dim(); ++j) {
        json row = json::array();
        for (Eigen::Index k = 0; k < state.dim(); ++k) {
            row.push_back(complex_pair(state.matrix()(j, k)));
        }
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    return doc.dump(2) + "\n";
}

DensityMatrix state_from_json(const std::string &text) {
    const json doc = parse_document(text, "state");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
        throw SchemaError("state: missing integer dim");
    }
    const auto dim = doc["dim"].get<Eigen::Index>();
    if (dim < 1) {
        throw SchemaError("state: dim must be >= 1");
    }
    if (!doc.contains("matrix") || !doc["matrix"].is_array() ||
        static_cast<Eigen::Index>(doc["matrix"].size()) != dim) {
        throw SchemaError("state: matrix must have dim rows");
    }
    ComplexMatrix m(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        const json &row = doc["matrix"][static_cast<std::size_t>(j)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
            throw SchemaError("state: matrix rows must have dim entries");
        }
        for (Eigen::Index k = 0; k < dim; ++k) {
            m(j, k) =
                parse_complex_pair(row[static_cast<std::size_t>(k)], "state");
        }
    }

    // A matrix written by this library reloads bit-exactly; anything messier
    // is accepted within 1e-8 and repaired, or rejected.
    try {
        return DensityMatrix::from_matrix(m);
    } catch (const Error &) {
        if (hermiticity_defect(m) > kLoadTol) {
            throw SchemaError("state: matrix is not Hermitian");
        }
        if (std::abs(m.trace().real() - 1.0) > kLoadTol) {
            throw SchemaError("state: matrix trace is not 1");
        }
        Eigensystem eig = hermitian_eigendecomposition(hermitize(m));
        if (eig.eigenvalues.minCoeff() < -kLoadTol) {
            throw SchemaError("state: matrix is not positive semidefinite");
        }
        return project_to_physical(hermitize(m));
    }
}

void write_state_file(const std::filesystem::path &path,
                      const DensityMatrix &state) {
    write_text(path, state_to_json(state));
}

DensityMatrix read_state_file(const std::filesystem::path &path) {
    try {
        return state_from_json(read_text(path));
    } catch (const IoError &) {
        throw;
    } catch (const SchemaError &) {
        throw;
    } catch (const Error &e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

std::string csv_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

} // namespace mltomo
