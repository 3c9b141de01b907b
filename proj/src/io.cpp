#include "dpp/io.hpp"

#include "dpp/error.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace dpp::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view token) {
  token = trim(token);
  const std::string text(token);
  if (text.empty())
    throw Error(ErrorCode::ParseError, "empty numeric field");
  char *end = nullptr;
  errno = 0;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size())
    throw Error(ErrorCode::ParseError, "not a number: '" + text + "'");
  if (!std::isfinite(value) || errno == ERANGE)
    throw Error(ErrorCode::ParseError, "non-finite value '" + text + "'");
  return value;
}

double json_real(const Json &j) {
  if (!j.is_number())
    throw Error(ErrorCode::ParseError, "expected a number, got " + j.dump());
  const double value = j.get<double>();
  if (!std::isfinite(value))
    throw Error(ErrorCode::ParseError, "non-finite value in JSON");
  return value;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

} // namespace

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Matrix parse_kernel_json(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
    throw Error(ErrorCode::ParseError, "kernel JSON needs \"n\" and \"entries\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 1)
    throw Error(ErrorCode::ParseError, "\"n\" must be a positive integer");
  const auto n = doc["n"].get<long>();
  const Json &rows = doc["entries"];
  if (!rows.is_array() || static_cast<long>(rows.size()) != n)
    throw Error(ErrorCode::ParseError, "\"entries\" must have n rows");
  Matrix m(n, n);
  for (long i = 0; i < n; ++i) {
    const Json &row = rows[i];
    if (!row.is_array() || static_cast<long>(row.size()) != n)
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i) + " must have n entries");
    for (long j = 0; j < n; ++j) {
      const Json &entry = row[j];
      if (entry.is_array() && entry.size() == 2)
        m(i, j) = Complex(json_real(entry[0]), json_real(entry[1]));
      else if (entry.is_number())
        m(i, j) = Complex(json_real(entry), 0.0);
      else
        throw Error(ErrorCode::ParseError, "entry must be [re, im]");
    }
  }
  return m;
}

Matrix parse_kernel_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos)
      eol = text.size();
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty())
      continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      row.push_back(parse_real(line.substr(start, comma - start)));
      if (comma == std::string_view::npos)
        break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0)
    throw Error(ErrorCode::ParseError, "empty CSV kernel");
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n)
      throw Error(ErrorCode::ParseError, "CSV kernel row " + std::to_string(i) +
                                             " does not have " + std::to_string(n) + " fields");
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

Matrix parse_diag_shorthand(std::string_view text) {
  text = trim(text);
  if (!text.starts_with("diag(") || !text.ends_with(")"))
    throw Error(ErrorCode::ParseError, "expected diag(a, b, ...)");
  const std::string_view body = text.substr(5, text.size() - 6);
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    values.push_back(parse_real(body.substr(start, comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  Matrix m = Matrix::Zero(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    m(i, i) = values[i];
  return m;
}

Matrix load_kernel(const std::string &source) {
  if (trim(source).starts_with("diag("))
    return parse_diag_shorthand(source);
  const std::string text = read_file(source);
  if (source.ends_with(".csv"))
    return parse_kernel_csv(text);
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{')
    return parse_kernel_json(body);
  return parse_kernel_csv(body);
}

Json kernel_to_json(const Matrix &m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.rows()}, {"entries", std::move(rows)}};
}

SimpleGraph parse_graph_json(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
      !doc["vertices"].is_number_integer() || !doc["edges"].is_array())
    throw Error(ErrorCode::ParseError, "graph JSON needs integer \"vertices\" and \"edges\"");
  std::vector<std::pair<int, int>> edges;
  for (const Json &e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw Error(ErrorCode::ParseError, "edge must be [u, v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return SimpleGraph(doc["vertices"].get<int>(), std::move(edges));
}

SimpleGraph load_graph(const std::string &path) { return parse_graph_json(read_file(path)); }

Json subset_to_json(const Subset &s) { return Json(s.indices()); }

Subset subset_from_json(const Json &j) {
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, "subset must be a JSON array");
  std::vector<int> out;
  for (const Json &v : j) {
    if (!v.is_number_integer())
      throw Error(ErrorCode::ParseError, "subset entries must be integers");
    out.push_back(v.get<int>());
  }
  Subset s(out);
  if (s.indices() != out)
    throw Error(ErrorCode::ParseError, "subset array must be strictly increasing");
  return s;
}

Json pmf_to_json(const ExactPmf &pmf) {
  Json out = Json::object();
  for (std::uint64_t mask : fock_order_masks(pmf.n()))
    out[Subset::from_mask(mask).to_string()] = pmf.at_mask(mask);
  return out;
}

Json histogram_to_json(const Histogram &h) {
  std::vector<std::pair<Subset, std::uint64_t>> entries(h.counts.begin(), h.counts.end());
  std::stable_sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) {
    return fock_order_less(a.first, b.first);
  });
  Json counts = Json::object();
  for (const auto &[s, c] : entries)
    counts[s.to_string()] = c;
  return Json{{"n", h.n}, {"draws", h.draws}, {"seed", h.seed}, {"counts", std::move(counts)}};
}

Json fock_vector_to_json(const fock::FockVector &v) {
  Json out = Json::array();
  for (const Complex &a : v.amplitudes())
    out.push_back(Json::array({a.real(), a.imag()}));
  return out;
}

Json arc_report_to_json(const ArcCountReport &r) {
  return Json{
      {"experiment", "cue"},
      {"n", r.n},
      {"arc", {{"length", r.arc.length}, {"center", r.arc.center}}},
      {"replicates", r.replicates},
      {"seed", r.seed},
      {"moments",
       {{"mean", r.mean},
        {"variance", r.variance},
        {"mean_standard_error", r.mean_standard_error},
        {"variance_standard_error", r.variance_standard_error},
        {"expected_mean", r.expected_mean},
        {"exact_variance", r.exact_variance}}},
      {"standardized",
       {{"mean", r.standardized_mean},
        {"variance", r.standardized_variance},
        {"skewness", r.standardized_skewness},
        {"excess_kurtosis", r.standardized_excess_kurtosis}}},
      {"empirical_pmf", r.empirical_pmf},
      {"exact_pmf", r.exact_pmf},
      {"pmf_tv", r.pmf_tv},
  };
}

Json ust_report_to_json(const UstReport &r) {
  Json out{
      {"experiment", "ust"},
      {"vertices", r.vertices},
      {"edges", r.edges},
      {"draws", r.draws},
      {"seed", r.seed},
      {"tv_dpp_wilson", r.tv_dpp_wilson},
      {"all_dpp_samples_spanning_trees", r.all_dpp_samples_spanning_trees},
      {"all_wilson_samples_spanning_trees", r.all_wilson_samples_spanning_trees},
  };
  if (r.exact_available)
    out["exact"] = {{"tree_count", r.tree_count},
                    {"max_discrepancy", r.exact_max_discrepancy}};
  out["dpp"] = histogram_to_json(r.dpp);
  out["wilson"] = histogram_to_json(r.wilson);
  return out;
}

} // namespace dpp::io
