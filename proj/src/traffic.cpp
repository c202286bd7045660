#include "groom/traffic.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace groom {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix zero_matrix(int n) { return Matrix(n, std::vector<int>(n, 0)); }

Matrix random_matrix(int n, int lo, int hi, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m[i][j] = dist(rng);
  return m;
}

void fill_middles(TrafficSet& ts, std::mt19937& rng) {
  const Matrix& first = ts.demands.front();
  const Matrix& last = ts.demands.back();
  for (int m = 1; m < ts.M - 1; ++m)
    for (int i = 0; i < ts.n; ++i)
      for (int j = 0; j < ts.n; ++j) {
        if (i == j) continue;
        auto [lo, hi] = std::minmax(first[i][j], last[i][j]);
        ts.demands[m][i][j] = std::uniform_int_distribution<int>(lo, hi)(rng);
      }
}

void check_params(int n, int M, int lo, int hi) {
  if (n < 2) throw std::invalid_argument("traffic: n must be >= 2");
  if (M < 1) throw std::invalid_argument("traffic: M must be >= 1");
  if (lo < 0 || hi < lo) throw std::invalid_argument("traffic: need hi >= lo >= 0");
}

}  // namespace

TrafficSet generate(int n, int M, int g, std::uint32_t seed, int lo, int hi) {
  check_params(n, M, lo, hi);
  if (g < 1) throw std::invalid_argument("traffic: g must be >= 1");
  std::mt19937 rng(seed);
  TrafficSet ts{n, M, g, std::vector<Matrix>(M, zero_matrix(n))};
  ts.demands.front() = random_matrix(n, lo, hi, rng);
  if (M > 1) ts.demands.back() = random_matrix(n, lo, hi, rng);
  fill_middles(ts, rng);
  return ts;
}

TrafficSet interpolate(const TrafficSet& extremes, int M, std::uint32_t seed) {
  if (extremes.M < 1 || extremes.M > 2)
    throw std::invalid_argument("interpolate: extreme set must have 1 or 2 patterns");
  check_params(extremes.n, M, 0, 0);
  TrafficSet ts{extremes.n, M, extremes.g,
                std::vector<Matrix>(M, zero_matrix(extremes.n))};
  ts.demands.front() = extremes.demands.front();
  if (M > 1) ts.demands.back() = extremes.demands.back();
  std::mt19937 rng(seed);
  fill_middles(ts, rng);
  return ts;
}

int SplitResult::total_dedicated() const {
  int total = 0;
  for (auto& [id, count] : dedicated) total += count;
  return total;
}

SplitResult split_over_granularity(const TrafficSet& ts) {
  SplitResult out;
  out.residual = ts;
  const int N = ts.demand_count();
  for (int d = 0; d < N; ++d) {
    auto [i, j] = demand_pair(d, ts.n);
    int base = 0;
    for (int m = 0; m < ts.M; ++m) base = std::max(base, ts.demands[m][i][j] / ts.g);
    if (base == 0) continue;
    out.dedicated.emplace_back(d, base);
    for (int m = 0; m < ts.M; ++m) {
      int& r = out.residual.demands[m][i][j];
      r = std::max(0, r - base * ts.g);
    }
  }
  return out;
}

TrafficSet max_matrix(const TrafficSet& ts) {
  TrafficSet out{ts.n, 1, ts.g, {zero_matrix(ts.n)}};
  for (int m = 0; m < ts.M; ++m)
    for (int i = 0; i < ts.n; ++i)
      for (int j = 0; j < ts.n; ++j)
        out.demands[0][i][j] = std::max(out.demands[0][i][j], ts.demands[m][i][j]);
  return out;
}

std::string to_json_string(const TrafficSet& ts) {
  nlohmann::json doc{{"n", ts.n}, {"M", ts.M}, {"g", ts.g}, {"demands", ts.demands}};
  return doc.dump(2);
}

TrafficSet traffic_from_json_string(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  TrafficSet ts;
  ts.n = doc.at("n").get<int>();
  ts.M = doc.at("M").get<int>();
  ts.g = doc.at("g").get<int>();
  ts.demands = doc.at("demands").get<std::vector<Matrix>>();
  if (static_cast<int>(ts.demands.size()) != ts.M)
    throw std::invalid_argument("traffic document: M does not match demands");
  for (auto& mat : ts.demands) {
    if (static_cast<int>(mat.size()) != ts.n)
      throw std::invalid_argument("traffic document: matrix shape mismatch");
    for (auto& row : mat)
      if (static_cast<int>(row.size()) != ts.n)
        throw std::invalid_argument("traffic document: matrix shape mismatch");
  }
  return ts;
}

void save_traffic(const TrafficSet& ts, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write traffic file: " + path);
  out << to_json_string(ts) << '\n';
}

TrafficSet load_traffic(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open traffic file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return traffic_from_json_string(text);
}

}  // namespace groom
