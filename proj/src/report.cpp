#include "etq/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "etq/error.hpp"

namespace etq {

namespace {

std::string order_text(const Integer& order) { return order.is_zero() ? "Z2" : "Z/" + order.to_string(); }

std::string source_text(const std::optional<SourceTerm>& s) {
  if (!s) return "-";
  return "M" + std::to_string(s->n) + "*T" + std::to_string(s->j);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Left-aligned columns separated by two spaces; no trailing blanks.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

std::string int_list(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

nlohmann::ordered_json order_json(const Integer& order) {
  if (!order.fits_int64()) throw Error(Errc::invalid_argument, "order " + order.to_string() + " does not fit a JSON integer");
  return order.to_int64();
}

[[noreturn]] void schema_fail(const std::string& what) { throw Error(Errc::parse_error, "table JSON: " + what); }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw Error(Errc::invalid_argument, "unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

void sort_records(std::vector<OutputRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const OutputRecord& a, const OutputRecord& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    const int an = a.source ? a.source->n : -1, bn = b.source ? b.source->n : -1;
    if (an != bn) return an > bn;
    const int aj = a.source ? a.source->j : -1, bj = b.source ? b.source->j : -1;
    if (aj != bj) return aj < bj;
    return a.generator < b.generator;
  });
}

OutputTable make_table(std::string target, const Coefficients& coefficients, const Graded2Group& group) {
  OutputTable t{std::move(target), coefficients.to_string(), {}};
  for (const auto& [degree, list] : group.degrees())
    for (const auto& s : list) t.records.push_back({degree, s.twist, s.order, s.label, s.source, s.algebraic});
  sort_records(t.records);
  return t;
}

nlohmann::ordered_json to_json(const OutputTable& table) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& r : table.records) {
    nlohmann::ordered_json rec;
    rec["degree"] = r.degree;
    rec["twist"] = r.twist;
    rec["order"] = order_json(r.order);
    rec["generator"] = r.generator;
    if (r.source)
      rec["source"] = {{"n", r.source->n}, {"j", r.source->j}};
    else
      rec["source"] = nullptr;
    rec["algebraic"] = r.algebraic;
    records.push_back(std::move(rec));
  }
  nlohmann::ordered_json out;
  out["target"] = table.target;
  out["coefficients"] = table.coefficients;
  out["records"] = std::move(records);
  return out;
}

OutputTable table_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) schema_fail("top level must be an object");
    OutputTable t;
    t.target = doc.at("target").get<std::string>();
    t.coefficients = doc.at("coefficients").get<std::string>();
    for (const auto& rec : doc.at("records")) {
      OutputRecord r;
      r.degree = rec.at("degree").get<int>();
      r.twist = rec.at("twist").get<int>();
      r.order = Integer(rec.at("order").get<long long>());
      r.generator = rec.at("generator").get<std::string>();
      const auto& src = rec.at("source");
      if (!src.is_null()) r.source = SourceTerm{src.at("n").get<int>(), src.at("j").get<int>()};
      r.algebraic = rec.at("algebraic").get<bool>();
      t.records.push_back(std::move(r));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    schema_fail(e.what());
  }
}

std::string render(const OutputTable& table, Format format) {
  switch (format) {
    case Format::json: return to_json(table).dump(2) + "\n";
    case Format::csv: {
      std::ostringstream os;
      os << "degree,twist,order,generator,source_n,source_j,algebraic\n";
      for (const auto& r : table.records) {
        os << r.degree << "," << r.twist << "," << r.order << "," << csv_field(r.generator) << ","
           << (r.source ? std::to_string(r.source->n) : "") << "," << (r.source ? std::to_string(r.source->j) : "")
           << "," << (r.algebraic ? "true" : "false") << "\n";
      }
      return os.str();
    }
    case Format::text: {
      std::vector<std::vector<std::string>> rows{{"degree", "twist", "order", "generator", "source", "algebraic"}};
      for (const auto& r : table.records)
        rows.push_back({std::to_string(r.degree), std::to_string(r.twist), order_text(r.order), r.generator,
                        source_text(r.source), r.algebraic ? "yes" : "no"});
      return "target: " + table.target + "\ncoefficients: " + table.coefficients + "\n" + aligned(rows);
    }
  }
  return {};
}

std::string render(const MotiveDecomposition& m, Format format) {
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (const auto& t : m.terms) terms.push_back({{"n", t.n}, {"j", t.j}});
      nlohmann::ordered_json out;
      out["d"] = m.d;
      out["exponents"] = m.expansion.exponents;
      out["residual"] = m.expansion.residual;
      out["terms"] = std::move(terms);
      out["compact"] = m.compact();
      out["complex_rank"] = m.complex_rank();
      return out.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream os;
      os << "n,j\n";
      for (const auto& t : m.terms) os << t.n << "," << t.j << "\n";
      return os.str();
    }
    case Format::text: {
      std::ostringstream os;
      os << "d: " << m.d << "\n";
      os << "expansion: " << m.d + 2 << " =";
      for (std::size_t i = 0; i < m.expansion.exponents.size(); ++i)
        os << (i == 0 ? " " : (i % 2 ? " - " : " + ")) << "2^" << m.expansion.exponents[i] + 1;
      if (m.expansion.residual)
        os << (m.expansion.exponents.size() % 2 ? " - " : " + ") << m.expansion.residual;
      os << "\n";
      os << "exponents: " << int_list(m.expansion.exponents) << "  residual: " << m.expansion.residual << "\n";
      os << "terms: " << m.to_string() << "\n";
      os << "compact: " << m.compact() << "\n";
      os << "complex rank: " << m.complex_rank() << "\n";
      return os.str();
    }
  }
  return {};
}

std::string render(const NonalgebraicReport& r, Format format) {
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
      for (const auto& e : r.entries)
        degrees.push_back({{"degree", e.degree},
                           {"class", e.degree % 4 == 0 ? "0 mod 4" : "2 mod 4"},
                           {"dimension", e.dimension},
                           {"free_quotient", e.free_quotient},
                           {"witnesses", e.witnesses}});
      nlohmann::ordered_json out;
      out["d"] = r.d;
      out["degrees"] = std::move(degrees);
      out["nonzero_0_mod_4"] = r.degrees_mod4();
      out["nonzero_2_mod_4"] = r.degrees_odd_twist();
      out["has_nonalgebraic"] = r.has_nonalgebraic();
      return out.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream os;
      os << "degree,class,dimension,free_quotient,witnesses\n";
      for (const auto& e : r.entries) {
        std::string w;
        for (std::size_t i = 0; i < e.witnesses.size(); ++i) w += (i ? " " : "") + e.witnesses[i];
        os << e.degree << "," << (e.degree % 4 == 0 ? "0mod4" : "2mod4") << "," << e.dimension << ","
           << e.free_quotient << "," << csv_field(w) << "\n";
      }
      return os.str();
    }
    case Format::text: {
      std::vector<std::vector<std::string>> rows{{"degree", "class", "dim", "free", "witnesses"}};
      for (const auto& e : r.entries) {
        std::string w;
        for (std::size_t i = 0; i < e.witnesses.size(); ++i) w += (i ? " " : "") + e.witnesses[i];
        rows.push_back({std::to_string(e.degree), e.degree % 4 == 0 ? "0 mod 4" : "2 mod 4",
                        std::to_string(e.dimension), std::to_string(e.free_quotient), w});
      }
      std::ostringstream os;
      os << "target: Q^" << r.d << "\n" << aligned(rows);
      os << "nonzero (0 mod 4): " << int_list(r.degrees_mod4()) << "\n";
      os << "nonzero (2 mod 4): " << int_list(r.degrees_odd_twist()) << "\n";
      os << "has_nonalgebraic: " << (r.has_nonalgebraic() ? "true" : "false") << "\n";
      return os.str();
    }
  }
  return {};
}

}  // namespace etq
