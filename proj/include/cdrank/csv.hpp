#pragma once

// Result-table CSV: header "dataset,<approach>,...", one row per dataset.
// RFC-4180 quoting, '.' decimal separator, empty cell or "-" means missing.

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "cdrank/error.hpp"
#include "cdrank/ranking.hpp"

namespace cdrank {

enum class MissingPolicy { Error, DropApproach, DropDataset };

inline const char* to_string(MissingPolicy p) noexcept {
  switch (p) {
    case MissingPolicy::Error: return "error";
    case MissingPolicy::DropApproach: return "drop-approach";
    case MissingPolicy::DropDataset: return "drop-dataset";
  }
  return "?";
}

namespace csv {

struct Field {
  std::string text;
  bool quoted = false;
  std::size_t column = 0;  // 1-based character column where the field starts
};

struct Record {
  std::vector<Field> fields;
  std::size_t line = 0;
};

inline std::vector<Record> split_records(std::string_view text) {
  std::vector<Record> records;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;

  while (pos < text.size()) {
    Record rec;
    rec.line = line;
    bool end_of_record = false;
    while (!end_of_record) {
      Field f;
      f.column = col;
      if (pos < text.size() && text[pos] == '"') {
        f.quoted = true;
        ++pos, ++col;
        const std::size_t open_line = line;
        const std::size_t open_col = f.column;
        for (;;) {
          if (pos >= text.size()) throw ParseError("unterminated quoted field", open_line, open_col);
          const char c = text[pos];
          if (c == '"') {
            if (pos + 1 < text.size() && text[pos + 1] == '"') {
              f.text.push_back('"');
              pos += 2, col += 2;
              continue;
            }
            ++pos, ++col;
            break;
          }
          if (c == '\n') ++line, col = 0;
          f.text.push_back(c);
          ++pos, ++col;
        }
        if (pos < text.size() && text[pos] != ',' && text[pos] != '\n' && text[pos] != '\r') {
          throw ParseError("unexpected character after closing quote", line, col);
        }
      } else {
        while (pos < text.size() && text[pos] != ',' && text[pos] != '\n' && text[pos] != '\r') {
          if (text[pos] == '"') throw ParseError("quote inside unquoted field", line, col);
          f.text.push_back(text[pos]);
          ++pos, ++col;
        }
      }
      rec.fields.push_back(std::move(f));

      if (pos >= text.size()) {
        end_of_record = true;
      } else if (text[pos] == ',') {
        ++pos, ++col;
      } else {
        if (text[pos] == '\r') ++pos;
        if (pos < text.size() && text[pos] == '\n') ++pos;
        ++line, col = 1;
        end_of_record = true;
      }
    }
    const bool blank = rec.fields.size() == 1 && rec.fields[0].text.empty() && !rec.fields[0].quoted;
    if (!blank) records.push_back(std::move(rec));
  }
  return records;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::string_view content(const Field& f) { return f.quoted ? std::string_view(f.text) : trim(f.text); }

inline bool needs_quoting(std::string_view s) {
  return s.find_first_of(",\"\r\n") != std::string_view::npos || s != trim(s) || s.empty() || s == "-";
}

inline std::string quote(std::string_view s) {
  if (!needs_quoting(s)) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// Shortest representation that parses back to the same double.
inline std::string format_exact(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace csv

inline ResultMatrix parse_results_csv(std::string_view text, Direction direction = Direction::HigherIsBetter,
                                      std::string metric_name = {}) {
  const auto records = csv::split_records(text);
  if (records.empty()) throw ParseError("empty input", 1, 0);

  const csv::Record& header = records.front();
  if (csv::content(header.fields[0]) != "dataset") {
    throw ParseError("first header cell must be 'dataset'", header.line, header.fields[0].column);
  }
  std::vector<std::string> approaches;
  for (std::size_t j = 1; j < header.fields.size(); ++j) {
    const auto name = csv::content(header.fields[j]);
    if (name.empty()) throw ParseError("empty approach name", header.line, header.fields[j].column);
    for (const auto& a : approaches) {
      if (a == name) throw ParseError("duplicate approach '" + std::string(name) + "'", header.line, header.fields[j].column);
    }
    approaches.emplace_back(name);
  }

  std::vector<std::string> datasets;
  std::vector<ResultMatrix::Cell> cells;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const csv::Record& rec = records[r];
    if (rec.fields.size() != header.fields.size()) {
      throw ParseError("expected " + std::to_string(header.fields.size()) + " cells, found " +
                           std::to_string(rec.fields.size()),
                       rec.line, 0);
    }
    const auto name = csv::content(rec.fields[0]);
    if (name.empty()) throw ParseError("empty dataset name", rec.line, rec.fields[0].column);
    for (const auto& d : datasets) {
      if (d == name) throw ParseError("duplicate dataset '" + std::string(name) + "'", rec.line, rec.fields[0].column);
    }
    datasets.emplace_back(name);

    for (std::size_t j = 1; j < rec.fields.size(); ++j) {
      const auto cell = csv::content(rec.fields[j]);
      if (cell.empty() || cell == "-") {
        cells.emplace_back(std::nullopt);
        continue;
      }
      std::string_view digits = cell;
      if (digits.front() == '+') digits.remove_prefix(1);
      double v = 0.0;
      const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size() || !std::isfinite(v)) {
        throw ParseError("malformed number '" + std::string(cell) + "'", rec.line, rec.fields[j].column);
      }
      cells.emplace_back(v);
    }
  }
  return ResultMatrix(std::move(approaches), std::move(datasets), std::move(cells), direction, std::move(metric_name));
}

inline std::string write_results_csv(const ResultMatrix& m) {
  std::string out = "dataset";
  for (const auto& a : m.approaches()) out += "," + csv::quote(a);
  out += "\n";
  for (std::size_t i = 0; i < m.num_datasets(); ++i) {
    out += csv::quote(m.datasets()[i]);
    for (std::size_t j = 0; j < m.num_approaches(); ++j) {
      out += ",";
      const auto& c = m.cell(i, j);
      out += c ? csv::format_exact(*c) : "-";
    }
    out += "\n";
  }
  return out;
}

struct PolicyOutcome {
  ResultMatrix matrix;
  std::vector<std::string> dropped_approaches;
  std::vector<std::string> dropped_datasets;
};

/// Makes the matrix complete. Error lists every missing cell; the drop
/// policies remove whole columns or rows that contain one.
inline PolicyOutcome apply_missing_policy(const ResultMatrix& m, MissingPolicy policy) {
  std::vector<bool> col_missing(m.num_approaches(), false);
  std::vector<bool> row_missing(m.num_datasets(), false);
  std::string listing;
  std::size_t count = 0;
  for (std::size_t i = 0; i < m.num_datasets(); ++i) {
    for (std::size_t j = 0; j < m.num_approaches(); ++j) {
      if (m.cell(i, j)) continue;
      col_missing[j] = row_missing[i] = true;
      listing += (count++ ? "; " : "") + m.datasets()[i] + "/" + m.approaches()[j];
    }
  }

  PolicyOutcome out;
  if (count == 0) {
    out.matrix = m;
  } else if (policy == MissingPolicy::Error) {
    throw DataError(std::to_string(count) + " missing cell(s) (dataset/approach): " + listing);
  } else {
    const bool drop_cols = policy == MissingPolicy::DropApproach;
    std::vector<std::size_t> keep_cols, keep_rows;
    for (std::size_t j = 0; j < m.num_approaches(); ++j) {
      if (drop_cols && col_missing[j]) out.dropped_approaches.push_back(m.approaches()[j]);
      else keep_cols.push_back(j);
    }
    for (std::size_t i = 0; i < m.num_datasets(); ++i) {
      if (!drop_cols && row_missing[i]) out.dropped_datasets.push_back(m.datasets()[i]);
      else keep_rows.push_back(i);
    }
    std::vector<std::string> approaches, datasets;
    std::vector<ResultMatrix::Cell> cells;
    for (auto j : keep_cols) approaches.push_back(m.approaches()[j]);
    for (auto i : keep_rows) {
      datasets.push_back(m.datasets()[i]);
      for (auto j : keep_cols) cells.push_back(m.cell(i, j));
    }
    out.matrix = ResultMatrix(std::move(approaches), std::move(datasets), std::move(cells), m.direction(), m.metric_name());
  }

  if (out.matrix.num_approaches() < 2 || out.matrix.num_datasets() < 2) {
    throw AnalysisError("after applying missing-data policy '" + std::string(to_string(policy)) + "': k = " +
                        std::to_string(out.matrix.num_approaches()) + ", N = " +
                        std::to_string(out.matrix.num_datasets()) + " (need k >= 2 and N >= 2)");
  }
  return out;
}

}  // namespace cdrank
