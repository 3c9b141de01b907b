#ifndef DPP_EXPERIMENTS_HPP
#define DPP_EXPERIMENTS_HPP

#include "dpp/kernel.hpp"
#include "dpp/rng.hpp"
#include "dpp/sampler.hpp"
#include "dpp/subset.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace dpp {

/// Arc of the unit circle: angles in [center - length/2, center + length/2),
/// taken modulo 2π.
struct Arc {
  double length = 0.0;
  double center = 0.0;

  Arc() = default;
  /// Throws OutOfRange unless 0 < length <= 2π.
  Arc(double length, double center = 0.0);

  bool contains(double angle) const;
};

/// Undirected simple graph; edge e = {u, v} is oriented smaller → larger.
class SimpleGraph {
public:
  /// Throws InvalidGraph on self-loops, duplicate edges or bad endpoints and
  /// Disconnected when the graph is not connected.
  SimpleGraph(int vertices, std::vector<std::pair<int, int>> edges);

  int vertices() const noexcept { return vertices_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  /// Oriented (tail, head) with tail < head.
  const std::vector<std::pair<int, int>> &edges() const noexcept { return edges_; }
  /// Edge index joining u and v, or -1.
  int edge_index(int u, int v) const;
  /// Neighbouring vertices of v with the joining edge index.
  const std::vector<std::pair<int, int>> &incident(int v) const { return adjacency_[v]; }

  static SimpleGraph complete(int vertices);

private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of R's diagonal moved into Q.
Matrix haar_unitary(int n, Rng &rng);

/// Eigenangles of a unitary in (-π, π].
std::vector<double> eigenangles(const Matrix &u);

/// Eigenvalues (descending) of M_jk = (1/2π) ∫_A e^{-i(j-k)θ} dθ, the
/// nonzero spectrum of the CUE projection kernel restricted to the arc.
std::vector<double> cue_arc_eigenvalues(int n, const Arc &arc);

struct ArcCountReport {
  int n = 0;
  Arc arc;
  int replicates = 0;
  std::uint64_t seed = 0;
  std::vector<int> counts;          // per replicate
  double expected_mean = 0.0;       // n |A| / 2π
  double exact_variance = 0.0;      // sum lambda (1 - lambda)
  double mean = 0.0;
  double variance = 0.0;            // unbiased
  double mean_standard_error = 0.0;
  double variance_standard_error = 0.0;
  double standardized_mean = 0.0;
  double standardized_variance = 0.0;
  double standardized_skewness = 0.0;
  double standardized_excess_kurtosis = 0.0;
  std::vector<double> empirical_pmf;
  std::vector<double> exact_pmf;    // Poisson-binomial of cue_arc_eigenvalues
  double pmf_tv = 0.0;
};

/// Counts CUE eigenangles falling in the arc over independent replicates;
/// replicate r uses Rng::for_replicate(seed, r).
ArcCountReport arc_count_experiment(int n, const Arc &arc, int replicates,
                                    const SamplerConfig &config);

/// K(e, f) = b_e^T L^+ b_f with b_e the signed incidence vector of e and L^+
/// the Laplacian pseudoinverse: the current through f when a unit current
/// enters at e's tail and leaves at its head.
HermitianKernel transfer_current_kernel(const SimpleGraph &g);

/// Uniform spanning tree by loop-erased random walks rooted at vertex 0.
Subset wilson_sample(const SimpleGraph &g, Rng &rng);

/// True when `edges` is the edge set of a spanning tree of g.
bool is_spanning_tree(const SimpleGraph &g, const Subset &edges);

/// All spanning trees, by filtering every (|V|-1)-subset of edges.
std::vector<Subset> enumerate_spanning_trees(const SimpleGraph &g);

struct UstReport {
  int vertices = 0;
  int edges = 0;
  std::uint64_t draws = 0;
  std::uint64_t seed = 0;
  bool exact_available = false;
  std::size_t tree_count = 0;
  /// max_S |P_DPP(X = S) - uniform tree law(S)| over all edge subsets.
  double exact_max_discrepancy = 0.0;
  Histogram dpp;
  Histogram wilson;
  double tv_dpp_wilson = 0.0;
  bool all_dpp_samples_spanning_trees = false;
  bool all_wilson_samples_spanning_trees = false;
};

/// DPP draws use Rng::for_replicate(seed, i); Wilson draws use the
/// substreams of splitmix64(seed ^ 0x57494C534F4E) so the two sides are
/// independent.
UstReport ust_compare(const SimpleGraph &g, std::uint64_t draws,
                      const SamplerConfig &config);

} // namespace dpp

#endif // DPP_EXPERIMENTS_HPP
