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

#include "qdconcat/mc.h"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "qdconcat/errors.h"

namespace qdc {

ErrorSampler::ErrorSampler(const NoiseModel &model, const ConcatSpec &spec, CorrelationLayout layout)
    : model_(model), n_(spec.n_cc) {
    if (layout == CorrelationLayout::kFullRegister) {
        chains_.push_back({0, spec.n_cc});
    } else {
        chains_ = spec.blocks;
    }
    double acc = 0;
    for (size_t i = 0; i < model.letter_count(); i++) {
        acc += model.marginal(i);
        cdf_.push_back(acc);
    }
}

size_t ErrorSampler::draw_marginal(double u) const {
    for (size_t i = 0; i + 1 < cdf_.size(); i++) {
        if (u < cdf_[i]) {
            return i;
        }
    }
    return cdf_.size() - 1;
}

PauliString ErrorSampler::sample(std::mt19937_64 &rng) const {
    uint64_t x = 0;
    uint64_t z = 0;
    for (const Block &chain : chains_) {
        size_t prev = 0;
        for (size_t k = 0; k < chain.size; k++) {
            size_t cur;
            if (k > 0 && uniform01(rng) < model_.mu) {
                cur = prev;
            } else {
                cur = draw_marginal(uniform01(rng));
            }
            char letter = model_.letter(cur);
            uint64_t bit = uint64_t{1} << (chain.begin + k);
            if (letter == 'X' || letter == 'Y') {
                x |= bit;
            }
            if (letter == 'Z' || letter == 'Y') {
                z |= bit;
            }
            prev = cur;
        }
    }
    return PauliString(n_, x, z, 0);
}

PauliString sample_error(const NoiseModel &model, const ConcatSpec &spec, std::mt19937_64 &rng) {
    return ErrorSampler(model, spec).sample(rng);
}

uint64_t shard_seed(uint64_t seed, uint64_t index) {
    uint64_t s = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    s = (s ^ (s >> 30)) * 0xBF58476D1CE4E5B9ULL;
    s = (s ^ (s >> 27)) * 0x94D049BB133111EBULL;
    return s ^ (s >> 31);
}

namespace {

struct FastCode {
    std::vector<PauliString> generators;
    std::vector<PauliString> logicals;

    uint64_t syndrome_bits(const PauliString &e) const {
        uint64_t s = 0;
        for (size_t i = 0; i < generators.size(); i++) {
            if (!commutes(generators[i], e)) {
                s |= uint64_t{1} << i;
            }
        }
        return s;
    }

    bool is_failure(const PauliString &residual) const {
        if (syndrome_bits(residual) != 0) {
            return true;
        }
        for (const auto &l : logicals) {
            if (!commutes(l, residual)) {
                return true;
            }
        }
        return false;
    }
};

uint64_t run_shard(const ErrorSampler &sampler, const FastCode &fast, const DecoderTable &table, uint64_t seed,
                   uint64_t shots) {
    std::mt19937_64 rng(seed);
    uint64_t failures = 0;
    for (uint64_t s = 0; s < shots; s++) {
        PauliString e = sampler.sample(rng);
        auto it = table.entries().find(fast.syndrome_bits(e));
        if (it == table.entries().end()) {
            failures++;
            continue;
        }
        if (fast.is_failure(multiply(it->second, e))) {
            failures++;
        }
    }
    return failures;
}

}  // namespace

Estimate estimate_pf(const SampleConfig &config, const ConcatenatedCode &code) {
    if (config.shots == 0) {
        throw DomainError("shots must be positive");
    }
    if (code.decoder.size() == 0) {
        throw ConsistencyError("decoder table is empty");
    }
    ErrorSampler sampler(config.model, config.spec, config.layout);
    FastCode fast{code.code.generators(), {}};
    for (const auto &l : code.code.logical_x()) {
        fast.logicals.push_back(l);
    }
    for (const auto &l : code.code.logical_z()) {
        fast.logicals.push_back(l);
    }

    uint64_t shard_count = (config.shots + kShardShots - 1) / kShardShots;
    std::vector<uint64_t> failures(shard_count, 0);
    std::atomic<uint64_t> next{0};
    auto worker = [&]() {
        for (uint64_t k = next.fetch_add(1); k < shard_count; k = next.fetch_add(1)) {
            uint64_t shots = std::min(kShardShots, config.shots - k * kShardShots);
            failures[k] = run_shard(sampler, fast, code.decoder, shard_seed(config.seed, k), shots);
        }
    };
    unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, shard_count));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    Estimate est;
    est.shots = config.shots;
    for (uint64_t f : failures) {
        est.failures += f;
    }
    est.pf_hat = static_cast<double>(est.failures) / static_cast<double>(est.shots);
    est.stderr_ = std::sqrt(est.pf_hat * (1 - est.pf_hat) / static_cast<double>(est.shots));
    return est;
}

Estimate estimate_pf(const SampleConfig &config) {
    return estimate_pf(config, ConcatenatedCode::build(config.spec));
}

AgreementReport compare(const Estimate &estimate, double analytic_pf) {
    AgreementReport r;
    r.estimate = estimate;
    r.analytic = analytic_pf;
    double diff = std::abs(estimate.pf_hat - analytic_pf);
    if (estimate.stderr_ > 0) {
        r.z = diff / estimate.stderr_;
    } else {
        r.z = diff == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    r.flagged = r.z > 4 && estimate.shots >= 100000;
    return r;
}

AgreementReport compare(const SampleConfig &config, double analytic_pf) {
    return compare(estimate_pf(config), analytic_pf);
}

}  // namespace qdc
