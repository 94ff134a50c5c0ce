#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

namespace glt::app {

/// Numeric table with column names.
struct Table {
  std::vector<std::string> header;
  Eigen::MatrixXd values;  // rows x cols
};

/// Reads a comma-separated numeric file. A first line with any non-numeric field is
/// taken as the header. Throws DataError naming the row and column of bad cells.
Table read_csv(const std::filesystem::path& path);

/// A single-column file as a vector; throws DataError when there is more than one column.
Eigen::VectorXd read_vector_csv(const std::filesystem::path& path);

/// Shortest-free fixed format: 17 significant digits, so values round-trip.
std::string format_double(double v);

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header, const Eigen::MatrixXd& values);
void write_vector_csv(const std::filesystem::path& path, const std::string& name, const Eigen::VectorXd& v);

/// Writes text atomically enough for our purposes (truncate + write).
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

/// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace glt::app
