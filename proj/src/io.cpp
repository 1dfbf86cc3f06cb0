#include "pcm/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <sstream>

namespace pcm::io {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_number(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw Error("empty value");
  const char* begin = t.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + t.size()) throw Error("not a number: \"" + text + "\"");
  return v;
}

double cell_value(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_ratio(j.get<std::string>());
  throw Error("matrix cells must be numbers or ratio strings");
}

json deviation_to_json(double dev) {
  if (std::isfinite(dev)) return dev;
  return "infinity";
}

double deviation_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  return std::numeric_limits<double>::infinity();
}

std::optional<CheckKind> kind_from_label(const std::string& label) {
  if (label == "CO") return CheckKind::Correctness;
  if (label == "IT") return CheckKind::TriadInvariance;
  if (label == "characterization") return CheckKind::Characterization;
  return std::nullopt;
}

}  // namespace

double parse_ratio(const std::string& text) {
  const std::string t = trim(text);
  const std::size_t slash = t.find('/');
  if (slash == std::string::npos) return parse_number(t);
  const double p = parse_number(t.substr(0, slash));
  const double q = parse_number(t.substr(slash + 1));
  if (q == 0.0) throw Error("division by zero in \"" + text + "\"");
  return p / q;
}

PairwiseComparisonMatrix matrix_from_csv(const std::string& text,
                                         const ToleranceConfig& tol) {
  std::vector<std::vector<double>> grid;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cellText;
    while (std::getline(cells, cellText, ',')) {
      try {
        row.push_back(parse_ratio(cellText));
      } catch (const Error& e) {
        std::ostringstream os;
        os << "line " << line_no << ", column " << row.size() + 1 << ": "
           << e.what();
        throw Error(os.str());
      }
    }
    grid.push_back(std::move(row));
  }
  if (grid.empty()) throw Error("no matrix rows found");
  return build_matrix(grid, tol);
}

PairwiseComparisonMatrix matrix_from_json(const json& j,
                                          const ToleranceConfig& tol) {
  if (!j.is_object()) throw Error("matrix JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw Error("matrix JSON needs an integer field \"n\"");
  }
  const int n = j["n"].get<int>();
  const bool has_rows = j.contains("rows");
  const bool has_upper = j.contains("upper");
  if (has_rows == has_upper) {
    throw Error("matrix JSON needs exactly one of \"rows\" or \"upper\"");
  }
  if (has_rows) {
    const json& rows = j["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
      throw Error("\"rows\" must be an array of n rows");
    }
    std::vector<std::vector<double>> grid;
    grid.reserve(rows.size());
    for (const json& row : rows) {
      if (!row.is_array()) throw Error("\"rows\" must contain arrays");
      std::vector<double> r;
      r.reserve(row.size());
      for (const json& cell : row) r.push_back(cell_value(cell));
      grid.push_back(std::move(r));
    }
    return build_matrix(grid, tol);
  }
  const json& upper = j["upper"];
  if (!upper.is_array()) throw Error("\"upper\" must be an array");
  std::vector<double> values;
  values.reserve(upper.size());
  for (const json& cell : upper) values.push_back(cell_value(cell));
  return build_from_upper_triangle(values, n, tol);
}

PairwiseComparisonMatrix read_matrix(std::istream& in, const ToleranceConfig& tol) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::string stripped = trim(text);
  if (!stripped.empty() && stripped.front() == '{') {
    json j;
    try {
      j = json::parse(stripped);
    } catch (const json::parse_error& e) {
      throw Error(std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(j, tol);
  }
  return matrix_from_csv(text, tol);
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string format_sig(double value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
  return buf;
}

std::string to_csv(const PairwiseComparisonMatrix& A, int precision) {
  const int n = A.size();
  std::string out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out += ',';
      out += format_sig(A.entry(i, j), precision);
    }
    out += '\n';
  }
  return out;
}

std::string to_text(const PairwiseComparisonMatrix& A, int precision) {
  const int n = A.size();
  std::vector<std::string> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  std::size_t width = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cells.push_back(format_sig(A.entry(i, j), precision));
      width = std::max(width, cells.back().size());
    }
  }
  std::string out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::string& c = cells[static_cast<std::size_t>(i) * n + j];
      if (j) out += "  ";
      out.append(width - c.size(), ' ');
      out += c;
    }
    out += '\n';
  }
  return out;
}

json to_json(const PairwiseComparisonMatrix& A) {
  const int n = A.size();
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(A.entry(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"n", n}, {"rows", std::move(rows)}};
}

json to_json(const TriadTransform& t) {
  return json{{"triad", {t.triad.i + 1, t.triad.j + 1, t.triad.k + 1}},
              {"alpha", t.alpha}};
}

TriadTransform transform_from_json(const json& j) {
  if (!j.is_object() || !j.contains("triad") || !j.contains("alpha") ||
      !j["triad"].is_array() || j["triad"].size() != 3) {
    throw Error("transform JSON needs \"triad\" of three indices and \"alpha\"");
  }
  return TriadTransform{Triad{j["triad"][0].get<int>() - 1,
                              j["triad"][1].get<int>() - 1,
                              j["triad"][2].get<int>() - 1},
                        j["alpha"].get<double>()};
}

json to_json(const ConsistificationTrace& trace, bool include_identity_steps) {
  json steps = json::array();
  for (const auto& step : trace.steps) {
    if (!include_identity_steps &&
        std::abs(step.transform.alpha - 1.0) <= kIdentityAlphaTol) {
      continue;
    }
    json s = to_json(step.transform);
    s["matrix"] = to_json(step.result);
    steps.push_back(std::move(s));
  }
  return json{{"initial", to_json(trace.initial)},
              {"steps", std::move(steps)},
              {"final", to_json(trace.final_matrix())}};
}

json to_json(const AxiomReport& report) {
  json j{{"axiom", std::string(check_label(report.check))},
         {"method", report.method},
         {"verdict", report.pass ? "pass" : "fail"},
         {"trials", report.trials},
         {"weight_tol", report.weight_tol},
         {"witness", nullptr}};
  if (report.witness) {
    const AxiomWitness& w = *report.witness;
    json wj{{"trial", w.trial},
            {"matrix", to_json(w.matrix)},
            {"expected", w.expected},
            {"actual", w.actual},
            {"deviation", deviation_to_json(w.deviation)}};
    if (w.transform) wj["transform"] = to_json(*w.transform);
    if (w.violated) wj["violated"] = std::string(check_label(*w.violated));
    if (!w.note.empty()) wj["note"] = w.note;
    j["witness"] = std::move(wj);
  }
  return j;
}

AxiomReport report_from_json(const json& j) {
  if (!j.is_object()) throw Error("report JSON must be an object");
  const auto kind = kind_from_label(j.at("axiom").get<std::string>());
  if (!kind) throw Error("unknown axiom label in report");
  AxiomReport report;
  report.check = *kind;
  report.method = j.at("method").get<std::string>();
  report.pass = j.at("verdict").get<std::string>() == "pass";
  report.trials = j.at("trials").get<int>();
  report.weight_tol = j.at("weight_tol").get<double>();
  if (j.contains("witness") && !j["witness"].is_null()) {
    const json& wj = j["witness"];
    AxiomWitness w{wj.at("trial").get<int>(),
                   matrix_from_json(wj.at("matrix")),
                   std::nullopt,
                   wj.at("expected").get<std::vector<double>>(),
                   wj.at("actual").get<std::vector<double>>(),
                   deviation_from_json(wj.at("deviation")),
                   std::nullopt,
                   wj.value("note", std::string())};
    if (wj.contains("transform")) w.transform = transform_from_json(wj["transform"]);
    if (wj.contains("violated")) {
      w.violated = kind_from_label(wj["violated"].get<std::string>());
    }
    report.witness = std::move(w);
  }
  return report;
}

json to_json(const IndependenceTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    rows.push_back(json{{"method", row.method},
                        {"co", to_json(row.co)},
                        {"it", to_json(row.it)}});
  }
  return json{{"rows", std::move(rows)},
              {"independent", table.shows_independence()}};
}

}  // namespace pcm::io
