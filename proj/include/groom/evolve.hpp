#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "groom/grooming.hpp"

namespace groom {

using Chromosome = std::vector<int>;

struct GaConfig {
  int mu = 200;
  int lambda = 200;
  int generations = 500;
  double crossoverRate = 0.6;
  double mutationRate = 0.4;
  int restarts = 1;
  std::uint32_t seed = 1;
};

// mu random permutations of [0, N-1]; pairwise distinct when the permutation
// space permits (bounded rejection). Reproducible from the seed (std::mt19937).
std::vector<Chromosome> init_population(int mu, int N, std::uint32_t seed);

// Order crossover (OX1): the child keeps p1[a..b] in place and fills the
// remaining positions, cyclically after b, with the missing values in the
// cyclic order they appear in p2 starting after b. Always a valid permutation.
Chromosome crossover(const Chromosome& p1, const Chromosome& p2, std::mt19937& rng);

// Inversion mutation: reverses a random segment [a..b], a < b.
Chromosome mutate(const Chromosome& p, std::mt19937& rng);

struct EvolutionResult {
  Chromosome bestGenes;
  GroomingSolution bestSolution;
  Fitness bestFitness;
  // Per restart, per generation (including the initial population) the best
  // fitness so far; non-worsening under the lexicographic order.
  std::vector<std::vector<Fitness>> fitnessTraces;
};

// (mu+lambda) evolution with elitist truncation selection on the
// lexicographic (ADM, wavelength) fitness; ties at the boundary break by
// genome lexicographic order so runs are reproducible. Restarts run
// independently from derived seeds and the overall best is returned.
EvolutionResult run(const Instance& inst, const GaConfig& cfg, bool reuse);

}  // namespace groom
