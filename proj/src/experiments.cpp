#include "dpp/experiments.hpp"

#include "dpp/counts.hpp"
#include "dpp/error.hpp"
#include "dpp/linalg.hpp"
#include "dpp/measure.hpp"
#include "dpp/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

namespace dpp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kWilsonDomain = 0x57494C534F4E; // "WILSON"

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[a] = b;
    return true;
  }
};

} // namespace

Arc::Arc(double length_, double center_) : length(length_), center(center_) {
  if (!(length > 0.0 && length <= kTwoPi) || !std::isfinite(center))
    throw Error(ErrorCode::OutOfRange, "arc length must lie in (0, 2π]");
}

bool Arc::contains(double angle) const {
  if (length >= kTwoPi)
    return true;
  double offset = std::fmod(angle - (center - 0.5 * length), kTwoPi);
  if (offset < 0.0)
    offset += kTwoPi;
  return offset < length;
}

SimpleGraph::SimpleGraph(int vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(vertices), adjacency_(std::max(vertices, 0)) {
  if (vertices < 1)
    throw Error(ErrorCode::InvalidGraph, "graph needs at least one vertex");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
    if (u == v)
      throw Error(ErrorCode::InvalidGraph, "self-loop at vertex " + std::to_string(u));
    if (u > v)
      std::swap(u, v);
    if (edge_index(u, v) >= 0)
      throw Error(ErrorCode::InvalidGraph, "duplicate edge {" + std::to_string(u) + ", " +
                                               std::to_string(v) + "}");
    const int e = static_cast<int>(edges_.size());
    edges_.emplace_back(u, v);
    adjacency_[u].emplace_back(v, e);
    adjacency_[v].emplace_back(u, e);
  }
  DisjointSets sets(vertices);
  int components = vertices;
  for (auto [u, v] : edges_)
    components -= sets.unite(u, v);
  if (components != 1)
    throw Error(ErrorCode::Disconnected,
                "graph has " + std::to_string(components) + " components");
}

int SimpleGraph::edge_index(int u, int v) const {
  if (u < 0 || u >= vertices_)
    return -1;
  for (auto [w, e] : adjacency_[u])
    if (w == v)
      return e;
  return -1;
}

SimpleGraph SimpleGraph::complete(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertices; ++u)
    for (int v = u + 1; v < vertices; ++v)
      edges.emplace_back(u, v);
  return SimpleGraph(vertices, std::move(edges));
}

Matrix haar_unitary(int n, Rng &rng) {
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "unitary dimension must be >= 1");
  Matrix z(n, n);
  const double scale = std::sqrt(0.5);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(i, j) = Complex(re, im) * scale;
    }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix &r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

std::vector<double> eigenangles(const Matrix &u) {
  Eigen::ComplexEigenSolver<Matrix> solver(u, false);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::DecompositionFailure, "unitary eigensolver did not converge");
  std::vector<double> out(u.rows());
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    out[i] = std::arg(solver.eigenvalues()[i]);
  return out;
}

std::vector<double> cue_arc_eigenvalues(int n, const Arc &arc) {
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  Matrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const int d = j - k;
      if (d == 0) {
        m(j, k) = arc.length / kTwoPi;
      } else {
        const double magnitude = std::sin(d * arc.length * 0.5) / (std::numbers::pi * d);
        m(j, k) = std::polar(magnitude, -d * arc.center);
      }
    }
  RealVector eig = linalg::hermitian_eigenvalues(m);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = std::clamp(eig[n - 1 - i], 0.0, 1.0);
  return out;
}

ArcCountReport arc_count_experiment(int n, const Arc &arc, int replicates,
                                    const SamplerConfig &config) {
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument, "arc experiment needs n >= 2");
  if (replicates < 100)
    throw Error(ErrorCode::InvalidArgument, "arc experiment needs at least 100 replicates");

  ArcCountReport out;
  out.n = n;
  out.arc = arc;
  out.replicates = replicates;
  out.seed = config.seed;
  out.counts.assign(replicates, 0);
  parallel_for(
      static_cast<std::size_t>(replicates),
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
          Rng rng = Rng::for_replicate(config.seed, r);
          int inside = 0;
          for (double angle : eigenangles(haar_unitary(n, rng)))
            inside += arc.contains(angle);
          out.counts[r] = inside;
        }
      },
      config.threads);

  const std::vector<double> lambdas = cue_arc_eigenvalues(n, arc);
  const PoissonBinomial exact = poisson_binomial_pmf(lambdas);
  out.exact_pmf = exact.pmf;
  out.expected_mean = n * arc.length / kTwoPi;
  out.exact_variance = count_moments(exact).variance;

  const double reps = replicates;
  out.empirical_pmf.assign(n + 1, 0.0);
  double sum = 0.0;
  for (int c : out.counts) {
    sum += c;
    out.empirical_pmf[c] += 1.0 / reps;
  }
  out.mean = sum / reps;
  double m2 = 0.0, m4 = 0.0;
  for (int c : out.counts) {
    const double d = c - out.mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  out.variance = m2 / (reps - 1.0);
  m4 /= reps;
  out.mean_standard_error = std::sqrt(out.variance / reps);
  const double s4 = out.variance * out.variance;
  out.variance_standard_error =
      std::sqrt(std::max(0.0, (m4 - s4 * (reps - 3.0) / (reps - 1.0)) / reps));
  out.pmf_tv = tv_distance(out.empirical_pmf, out.exact_pmf);

  std::vector<double> z(replicates);
  for (int r = 0; r < replicates; ++r)
    z[r] = standardized_count(out.counts[r], n, out.expected_mean);
  double zsum = 0.0;
  for (double v : z)
    zsum += v;
  out.standardized_mean = zsum / reps;
  double z2 = 0.0, z3 = 0.0, z4 = 0.0;
  for (double v : z) {
    const double d = v - out.standardized_mean;
    z2 += d * d;
    z3 += d * d * d;
    z4 += d * d * d * d;
  }
  out.standardized_variance = z2 / (reps - 1.0);
  const double biased = z2 / reps;
  if (biased > 0.0) {
    out.standardized_skewness = (z3 / reps) / std::pow(biased, 1.5);
    out.standardized_excess_kurtosis = (z4 / reps) / (biased * biased) - 3.0;
  }
  return out;
}

HermitianKernel transfer_current_kernel(const SimpleGraph &g) {
  if (g.edge_count() == 0)
    throw Error(ErrorCode::InvalidGraph, "graph has no edges");
  const int nv = g.vertices();
  RealMatrix laplacian = RealMatrix::Zero(nv, nv);
  for (auto [u, v] : g.edges()) {
    laplacian(u, u) += 1.0;
    laplacian(v, v) += 1.0;
    laplacian(u, v) -= 1.0;
    laplacian(v, u) -= 1.0;
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(laplacian);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::DecompositionFailure, "Laplacian eigensolver did not converge");
  // Connected: exactly one zero eigenvalue, the constant vector, which the
  // ascending order puts first.
  RealMatrix pinv = RealMatrix::Zero(nv, nv);
  for (int i = 1; i < nv; ++i) {
    const auto u = solver.eigenvectors().col(i);
    pinv.noalias() += (u * u.transpose()) / solver.eigenvalues()[i];
  }
  const RealMatrix centering =
      RealMatrix::Identity(nv, nv) - RealMatrix::Constant(nv, nv, 1.0 / nv);
  pinv = centering * pinv * centering;

  RealMatrix incidence = RealMatrix::Zero(g.edge_count(), nv);
  for (int e = 0; e < g.edge_count(); ++e) {
    incidence(e, g.edges()[e].first) = 1.0;
    incidence(e, g.edges()[e].second) = -1.0;
  }
  RealMatrix k = incidence * pinv * incidence.transpose();
  return validate_kernel(k.cast<Complex>());
}

Subset wilson_sample(const SimpleGraph &g, Rng &rng) {
  const int nv = g.vertices();
  std::vector<bool> in_tree(nv, false);
  std::vector<std::pair<int, int>> next(nv, {-1, -1}); // (vertex, edge)
  in_tree[0] = true;
  std::vector<int> tree_edges;
  tree_edges.reserve(nv - 1);
  for (int start = 0; start < nv; ++start) {
    // Random walk until the tree is hit; overwriting `next` on revisits
    // erases loops implicitly.
    for (int u = start; !in_tree[u]; u = next[u].first) {
      const auto &nbrs = g.incident(u);
      next[u] = nbrs[rng.below(nbrs.size())];
    }
    for (int u = start; !in_tree[u]; u = next[u].first) {
      in_tree[u] = true;
      tree_edges.push_back(next[u].second);
    }
  }
  return Subset(std::move(tree_edges));
}

bool is_spanning_tree(const SimpleGraph &g, const Subset &edges) {
  if (static_cast<int>(edges.size()) != g.vertices() - 1 || edges.bound() > g.edge_count())
    return false;
  DisjointSets sets(g.vertices());
  for (int e : edges)
    if (!sets.unite(g.edges()[e].first, g.edges()[e].second))
      return false;
  return true;
}

std::vector<Subset> enumerate_spanning_trees(const SimpleGraph &g) {
  if (g.edge_count() > Limits::enum_cap)
    throw Error(ErrorCode::DimensionTooLarge, "spanning tree enumeration needs <= " +
                                                  std::to_string(Limits::enum_cap) + " edges");
  std::vector<Subset> out;
  const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != g.vertices() - 1)
      continue;
    Subset s = Subset::from_mask(mask);
    if (is_spanning_tree(g, s))
      out.push_back(std::move(s));
  }
  return out;
}

UstReport ust_compare(const SimpleGraph &g, std::uint64_t draws, const SamplerConfig &config) {
  if (draws == 0)
    throw Error(ErrorCode::InvalidArgument, "draw count must be at least 1");
  const HermitianKernel kernel = transfer_current_kernel(g);
  const SpectralDecomposition spec = spectral_decompose(kernel);

  UstReport out;
  out.vertices = g.vertices();
  out.edges = g.edge_count();
  out.draws = draws;
  out.seed = config.seed;
  out.dpp = sample_batch(spec, draws, config);

  const int workers = worker_count(config.threads);
  const std::uint64_t wilson_seed = splitmix64(config.seed ^ kWilsonDomain);
  const std::size_t chunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), draws);
  const std::uint64_t per_chunk = (draws + chunks - 1) / chunks;
  std::vector<std::map<Subset, std::uint64_t>> partial(chunks);
  parallel_for(
      chunks,
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) {
          const std::uint64_t first = c * per_chunk;
          const std::uint64_t last = std::min(draws, first + per_chunk);
          for (std::uint64_t i = first; i < last; ++i) {
            Rng rng = Rng::for_replicate(wilson_seed, i);
            ++partial[c][wilson_sample(g, rng)];
          }
        }
      },
      workers);
  out.wilson = Histogram{g.edge_count(), draws, config.seed, {}};
  for (const auto &local : partial)
    for (const auto &[s, c] : local)
      out.wilson.counts[s] += c;

  out.tv_dpp_wilson = empirical_tv_distance(out.dpp, out.wilson);
  out.all_dpp_samples_spanning_trees = std::all_of(
      out.dpp.counts.begin(), out.dpp.counts.end(),
      [&](const auto &entry) { return is_spanning_tree(g, entry.first); });
  out.all_wilson_samples_spanning_trees = std::all_of(
      out.wilson.counts.begin(), out.wilson.counts.end(),
      [&](const auto &entry) { return is_spanning_tree(g, entry.first); });

  if (g.edge_count() <= Limits::enum_cap) {
    out.exact_available = true;
    const ExactPmf pmf = full_pmf(kernel);
    const std::vector<Subset> trees = enumerate_spanning_trees(g);
    out.tree_count = trees.size();
    std::vector<double> uniform(pmf.by_mask().size(), 0.0);
    for (const Subset &t : trees)
      uniform[t.mask()] = 1.0 / static_cast<double>(trees.size());
    for (std::size_t mask = 0; mask < uniform.size(); ++mask)
      out.exact_max_discrepancy =
          std::max(out.exact_max_discrepancy, std::abs(pmf.at_mask(mask) - uniform[mask]));
  }
  return out;
}

} // namespace dpp
