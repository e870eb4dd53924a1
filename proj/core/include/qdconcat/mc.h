// Copyright 2026 The qdconcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDCONCAT_MC_H
#define QDCONCAT_MC_H

#include <cstdint>
#include <random>
#include <vector>

#include "qdconcat/analytic.h"
#include "qdconcat/concat.h"

namespace qdc {

/// Which qubits share a correlation chain.
enum class CorrelationLayout {
    /// One chain per innermost block (the model behind the analytic formulas).
    kInnermostBlocks,
    /// One chain across the whole register, block after block.
    kFullRegister,
};

struct SampleConfig {
    NoiseModel model;
    ConcatSpec spec;
    uint64_t shots = 100000;
    uint64_t seed = 0;
    CorrelationLayout layout = CorrelationLayout::kInnermostBlocks;
    /// Worker threads; 0 picks the hardware concurrency. Never changes results.
    unsigned threads = 0;
};

/// Draws correlated Pauli errors. Within a chain the first letter follows the
/// marginal and each later letter follows p_(i|j) given its predecessor.
class ErrorSampler {
   public:
    ErrorSampler(const NoiseModel &model, const ConcatSpec &spec,
                 CorrelationLayout layout = CorrelationLayout::kInnermostBlocks);

    PauliString sample(std::mt19937_64 &rng) const;

   private:
    size_t draw_marginal(double u) const;

    NoiseModel model_;
    size_t n_;
    std::vector<Block> chains_;
    std::vector<double> cdf_;
};

PauliString sample_error(const NoiseModel &model, const ConcatSpec &spec, std::mt19937_64 &rng);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Seed of shard `index` derived from a base seed with SplitMix64.
uint64_t shard_seed(uint64_t seed, uint64_t index);

inline constexpr uint64_t kShardShots = 65536;

struct Estimate {
    uint64_t failures = 0;
    uint64_t shots = 0;
    double pf_hat = 0;
    double stderr_ = 0;
};

/// Samples, decodes with the lookup table, and counts logical failures.
/// Unseen syndromes and residuals with a nonzero syndrome count as failures.
Estimate estimate_pf(const SampleConfig &config, const ConcatenatedCode &code);
Estimate estimate_pf(const SampleConfig &config);

struct AgreementReport {
    Estimate estimate;
    double analytic = 0;
    double z = 0;
    bool flagged = false;
};

/// z = |pf_hat - analytic| / stderr; flagged when z > 4 with at least 1e5 shots.
AgreementReport compare(const Estimate &estimate, double analytic_pf);
AgreementReport compare(const SampleConfig &config, double analytic_pf);

}  // namespace qdc

#endif
