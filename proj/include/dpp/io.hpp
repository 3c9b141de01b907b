#ifndef DPP_IO_HPP
#define DPP_IO_HPP

#include "dpp/counts.hpp"
#include "dpp/experiments.hpp"
#include "dpp/fock.hpp"
#include "dpp/measure.hpp"
#include "dpp/sampler.hpp"
#include "dpp/types.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace dpp::io {

using Json = nlohmann::ordered_json;

/// {"n": n, "entries": [[[re, im], ...], ...]}.
Matrix parse_kernel_json(std::string_view text);
/// n rows of n comma-separated reals.
Matrix parse_kernel_csv(std::string_view text);
/// "diag(a, b, ...)".
Matrix parse_diag_shorthand(std::string_view text);
/// Dispatches on shorthand, then on file extension (.csv) or content.
Matrix load_kernel(const std::string &source);

Json kernel_to_json(const Matrix &m);

/// {"vertices": n, "edges": [[u, v], ...]}.
SimpleGraph parse_graph_json(std::string_view text);
SimpleGraph load_graph(const std::string &path);

std::string read_file(const std::string &path);

Json subset_to_json(const Subset &s);
Subset subset_from_json(const Json &j);

/// {"0,2": p, ...} in Fock basis order.
Json pmf_to_json(const ExactPmf &pmf);
/// {"n", "draws", "seed", "counts": {"0,2": c, ...}}.
Json histogram_to_json(const Histogram &h);
/// Amplitudes as [[re, im], ...] in Fock basis order.
Json fock_vector_to_json(const fock::FockVector &v);

Json arc_report_to_json(const ArcCountReport &r);
Json ust_report_to_json(const UstReport &r);

} // namespace dpp::io

#endif // DPP_IO_HPP
