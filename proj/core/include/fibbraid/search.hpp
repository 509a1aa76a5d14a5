// Copyright 2026 The fibbraid Authors
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

#ifndef FIBBRAID_SEARCH_HPP
#define FIBBRAID_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fibbraid/braid.hpp"
#include "fibbraid/gate_analysis.hpp"
#include "fibbraid/representation.hpp"

namespace fibbraid {

enum class BackendPolicy { FloatFilterThenExact, ExactOnly };

struct SearchConfig {
    size_t max_length = 7;
    BackendPolicy policy = BackendPolicy::FloatFilterThenExact;
    /// Worker threads; shards are the ten first-letter prefixes.
    unsigned shards = 1;
    bool normalize_commuting = false;
    /// Empty: no file output and no checkpointing.
    std::string output_path;
    /// Skip shards already recorded in `<output_path>.ckpt`.
    bool resume = false;
    /// Stop after this many new shards, leaving the checkpoint for a later
    /// --resume. Zero means no limit.
    size_t shard_limit = 0;
};

struct SearchRecord {
    BraidWord word;
    GateReport report;
    std::string dedup_key;

    size_t length() const {
        return word.length();
    }
    /// One JSON-lines record, no trailing newline.
    std::string to_json() const;
};

/// Per-length counters; index l counts words of length exactly l.
struct SearchSummary {
    size_t max_length = 0;
    BackendPolicy policy = BackendPolicy::FloatFilterThenExact;
    std::vector<uint64_t> visited;
    std::vector<uint64_t> survivors;     // passed the float filter (all words when exact-only)
    std::vector<uint64_t> leakage_free;  // exact, before dedup
    std::vector<uint64_t> entangling;    // exact, before dedup
    uint64_t unique_gates = 0;           // leakage-free gates up to phase
    uint64_t float_multiplies = 0;
    uint64_t exact_multiplies = 0;
    /// w leakage-free iff w^-1 leakage-free; absent with commuting normalization.
    std::optional<bool> inverse_closure;

    explicit SearchSummary(size_t max_len = 0);
    void add(const SearchSummary &other);
    uint64_t total_visited() const;
    uint64_t total_entangling() const;
    /// {"summary":{...}} with per-length and cumulative counts.
    std::string to_json() const;
};

struct SearchResult {
    std::vector<SearchRecord> records;  // sorted by (length, word)
    SearchSummary summary;
    /// False when shard_limit stopped the run early; records and summary then
    /// cover only the finished shards and no output file is written.
    bool complete = true;
};

/// Phase-invariant key: hex of a 128-bit hash of the row M_ij * conj(M_p) of
/// M (x) conj(M), p the first nonzero entry in row-major order.
std::string dedup_key(const ExactMatrix &m);

/// Product of generator images kept as a stack: push costs one multiply.
class FloatProductStack {
  public:
    explicit FloatProductStack(const Representation &rep = standard_representation(), int strands = 6);

    void push(int letter);
    void pop();
    const FloatMatrix &top() const {
        return stack_.back();
    }
    size_t depth() const {
        return stack_.size() - 1;
    }
    uint64_t multiplies() const {
        return multiplies_;
    }

  private:
    const Representation &rep_;
    int strands_;
    std::vector<FloatMatrix> stack_;
    uint64_t multiplies_ = 0;
};

/// True iff the float filter lets the word through to exact confirmation.
bool passes_float_filter(const FloatMatrix &m);

/// Runs the whole search. Writes JSON lines to cfg.output_path if set.
/// Throws std::runtime_error on I/O failure and std::invalid_argument on a
/// bad config or a checkpoint written under a different config.
SearchResult run_search(const SearchConfig &cfg);

/// Search of the single shard whose words start with first_letter.
SearchResult run_shard(const SearchConfig &cfg, int first_letter);

void write_results(const SearchResult &result, std::ostream &out);

}  // namespace fibbraid

#endif
