#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "etq/coefficients.hpp"
#include "etq/graded.hpp"
#include "etq/quadric_engine.hpp"

namespace etq {

enum class Format { text, json, csv };

/// "text", "json" or "csv"; throws InvalidArgument otherwise.
Format parse_format(std::string_view name);

/// One cyclic summand of a cohomology table. order 0 means free.
struct OutputRecord {
  int degree = 0;
  int twist = 0;
  Integer order;
  std::string generator;
  std::optional<SourceTerm> source;
  bool algebraic = false;
  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

struct OutputTable {
  std::string target;
  std::string coefficients;
  std::vector<OutputRecord> records;
  friend bool operator==(const OutputTable&, const OutputTable&) = default;
};

/// Records sorted by degree, then source n descending, j ascending, label.
OutputTable make_table(std::string target, const Coefficients& coefficients, const Graded2Group& group);
void sort_records(std::vector<OutputRecord>& records);

nlohmann::ordered_json to_json(const OutputTable& table);
/// Throws ParseError on a document that does not follow the table schema.
OutputTable table_from_json(const nlohmann::json& document);

std::string render(const OutputTable& table, Format format);
std::string render(const MotiveDecomposition& decomposition, Format format);
std::string render(const NonalgebraicReport& report, Format format);

}  // namespace etq
