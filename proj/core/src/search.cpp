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

#include "fibbraid/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "fibbraid/json_out.hpp"
#include "json.hpp"

namespace fibbraid {

namespace {

constexpr int kStrands = 6;
constexpr int kLetters = 2 * (kStrands - 1);
// Inverse-closure codes pack 4 bits per letter.
constexpr size_t kMaxCodedLength = 16;

struct Key128 {
    uint64_t hi = 0;
    uint64_t lo = 0;
    bool operator==(const Key128 &) const = default;
    bool operator<(const Key128 &o) const {
        return hi != o.hi ? hi < o.hi : lo < o.lo;
    }
};

struct Key128Hash {
    size_t operator()(const Key128 &k) const {
        return static_cast<size_t>(k.hi ^ (k.lo * 0x9e3779b97f4a7c15ULL));
    }
};

uint64_t splitmix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Key128 key128(const ExactMatrix &m) {
    const size_t n = m.dim();
    size_t p = 0;
    while (p < n * n && m(p / n, p % n).is_zero()) {
        p++;
    }
    uint64_t h1 = 0xcbf29ce484222325ULL;
    uint64_t h2 = 0x84222325cbf29ce4ULL;
    if (p == n * n) {
        return {h1, h2};
    }
    const FieldElement anchor = m(p / n, p % n).conj();
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            const FieldElement &x = m(i, j);
            if (x.is_zero()) {
                h1 = (h1 ^ 0x5a) * 0x100000001b3ULL;
                h2 = splitmix(h2 ^ 0x5a);
                continue;
            }
            const FieldElement y = x * anchor;
            y.hash_into(h1);
            uint64_t t = h2;
            y.hash_into(t);
            h2 = splitmix(t ^ h2);
        }
    }
    return {splitmix(h1), splitmix(h2 + 0x632be59bd9b4e019ULL)};
}

std::string key_hex(const Key128 &k) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%016llx%016llx", static_cast<unsigned long long>(k.hi),
                  static_cast<unsigned long long>(k.lo));
    return buf;
}

uint64_t encode(std::span<const int> word) {
    uint64_t code = 0;
    for (int l : word) {
        code = (code << 4) | static_cast<uint64_t>(letter_rank(l) + 1);
    }
    return code;
}

uint64_t encode_inverse(std::span<const int> word) {
    uint64_t code = 0;
    for (size_t i = word.size(); i-- > 0;) {
        code = (code << 4) | static_cast<uint64_t>(letter_rank(-word[i]) + 1);
    }
    return code;
}

const char *policy_name(BackendPolicy p) {
    return p == BackendPolicy::ExactOnly ? "exact-only" : "float-filter-then-exact";
}

struct GateEntry {
    std::vector<int> word;
    GateReport report;
};

using GateMap = std::unordered_map<Key128, GateEntry, Key128Hash>;

struct ShardOutput {
    int first_letter = 0;
    GateMap gates;
    SearchSummary summary;
    std::vector<uint64_t> lf_codes;
};

void merge_gate(GateMap &into, const Key128 &key, GateEntry entry) {
    auto it = into.find(key);
    if (it == into.end()) {
        into.emplace(key, std::move(entry));
    } else if (shortlex_less(entry.word, it->second.word)) {
        it->second.word = std::move(entry.word);
    }
}

class ShardRunner {
  public:
    ShardRunner(const SearchConfig &cfg, const Representation &rep)
        : cfg_(cfg),
          rep_(rep),
          options_{cfg.normalize_commuting},
          use_float_(cfg.policy == BackendPolicy::FloatFilterThenExact),
          track_codes_(!cfg.normalize_commuting && cfg.max_length <= kMaxCodedLength),
          fstack_(rep, kStrands),
          estack_(cfg.max_length + 1) {
        estack_[0] = ExactMatrix::identity(5);
    }

    ShardOutput run(int first_letter) {
        ShardOutput out;
        out.first_letter = first_letter;
        out.summary = SearchSummary(cfg_.max_length);
        summary_ = &out.summary;
        gates_ = &out.gates;
        codes_ = &out.lf_codes;
        const uint64_t float_before = fstack_.multiplies();
        const uint64_t exact_before = exact_multiplies_;
        extend(first_letter, 0);
        out.summary.float_multiplies = fstack_.multiplies() - float_before;
        out.summary.exact_multiplies = exact_multiplies_ - exact_before;
        return out;
    }

  private:
    void extend(int letter, size_t depth) {
        word_.push_back(letter);
        if (use_float_) {
            fstack_.push(letter);
        }
        exact_valid_ = std::min(exact_valid_, depth);
        visit(depth + 1);
        if (depth + 1 < cfg_.max_length) {
            for (int r = 0; r < kLetters; r++) {
                int next = letter_from_rank(r);
                if (allowed_successor(letter, next, options_)) {
                    extend(next, depth + 1);
                }
            }
        }
        if (use_float_) {
            fstack_.pop();
        }
        word_.pop_back();
    }

    void ensure_exact(size_t depth) {
        for (size_t d = exact_valid_ + 1; d <= depth; d++) {
            estack_[d] = estack_[d - 1] * rep_.exact_letter(kStrands, word_[d - 1]);
            exact_multiplies_++;
        }
        exact_valid_ = depth;
    }

    void visit(size_t depth) {
        summary_->visited[depth]++;
        if (use_float_ && !passes_float_filter(fstack_.top())) {
            return;
        }
        summary_->survivors[depth]++;
        ensure_exact(depth);
        const ExactMatrix &m = estack_[depth];
        if (!is_leakage_free(m)) {
            return;
        }
        summary_->leakage_free[depth]++;
        if (track_codes_) {
            codes_->push_back(encode(word_));
        }
        const Key128 key = key128(m);
        auto it = gates_->find(key);
        if (it == gates_->end()) {
            it = gates_->emplace(key, GateEntry{word_, classify(m)}).first;
        } else if (shortlex_less(word_, it->second.word)) {
            it->second.word = word_;
        }
        if (it->second.report.entangling.value_or(false)) {
            summary_->entangling[depth]++;
        }
    }

    const SearchConfig &cfg_;
    const Representation &rep_;
    EnumerationOptions options_;
    bool use_float_;
    bool track_codes_;
    FloatProductStack fstack_;
    std::vector<ExactMatrix> estack_;
    size_t exact_valid_ = 0;
    uint64_t exact_multiplies_ = 0;
    std::vector<int> word_;
    SearchSummary *summary_ = nullptr;
    GateMap *gates_ = nullptr;
    std::vector<uint64_t> *codes_ = nullptr;
};

// Checkpoint ------------------------------------------------------------------

nlohmann::json config_json(const SearchConfig &cfg) {
    return {{"max_length", cfg.max_length},
            {"policy", policy_name(cfg.policy)},
            {"normalize_commuting", cfg.normalize_commuting}};
}

std::string shard_line(const ShardOutput &s) {
    nlohmann::json j;
    j["shard"] = s.first_letter;
    const SearchSummary &sm = s.summary;
    j["visited"] = sm.visited;
    j["survivors"] = sm.survivors;
    j["leakage_free"] = sm.leakage_free;
    j["entangling"] = sm.entangling;
    j["float_multiplies"] = sm.float_multiplies;
    j["exact_multiplies"] = sm.exact_multiplies;
    nlohmann::json gates = nlohmann::json::array();
    for (const auto &[key, entry] : s.gates) {
        gates.push_back({{"hi", key.hi}, {"lo", key.lo}, {"word", entry.word}});
    }
    j["gates"] = std::move(gates);
    j["lf"] = s.lf_codes;
    return j.dump();
}

ShardOutput shard_from_json(const nlohmann::json &j, const SearchConfig &cfg, const Representation &rep) {
    ShardOutput s;
    s.first_letter = j.at("shard").get<int>();
    s.summary = SearchSummary(cfg.max_length);
    s.summary.visited = j.at("visited").get<std::vector<uint64_t>>();
    s.summary.survivors = j.at("survivors").get<std::vector<uint64_t>>();
    s.summary.leakage_free = j.at("leakage_free").get<std::vector<uint64_t>>();
    s.summary.entangling = j.at("entangling").get<std::vector<uint64_t>>();
    s.summary.float_multiplies = j.at("float_multiplies").get<uint64_t>();
    s.summary.exact_multiplies = j.at("exact_multiplies").get<uint64_t>();
    if (s.summary.visited.size() != cfg.max_length + 1) {
        throw std::invalid_argument("checkpoint: per-length counts do not match max_length");
    }
    for (const auto &g : j.at("gates")) {
        BraidWord w(kStrands, g.at("word").get<std::vector<int>>());
        Key128 key{g.at("hi").get<uint64_t>(), g.at("lo").get<uint64_t>()};
        s.gates.emplace(key, GateEntry{w.letters(), classify(rep.evaluate_exact(w))});
    }
    s.lf_codes = j.at("lf").get<std::vector<uint64_t>>();
    return s;
}

std::map<int, ShardOutput> load_checkpoint(const std::string &path, const SearchConfig &cfg,
                                           const Representation &rep) {
    std::map<int, ShardOutput> done;
    std::ifstream in(path);
    if (!in) {
        return done;
    }
    std::string line;
    if (!std::getline(in, line)) {
        return done;
    }
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument("checkpoint " + path + ": unreadable header: " + e.what());
    }
    if (header.value("config", nlohmann::json()) != config_json(cfg)) {
        throw std::invalid_argument("checkpoint " + path + " was written with a different search config");
    }
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        try {
            ShardOutput s = shard_from_json(nlohmann::json::parse(line), cfg, rep);
            int letter = s.first_letter;
            done.insert_or_assign(letter, std::move(s));
        } catch (const nlohmann::json::exception &) {
            // A run killed mid-write leaves a torn last line; redo that shard.
            break;
        }
    }
    return done;
}

}  // namespace

// SearchRecord / SearchSummary -------------------------------------------------

std::string SearchRecord::to_json() const {
    std::string report_json = report.to_json();
    // Splice the report's fields after word and len.
    return "{\"word\":" + json_string(word.to_string()) + ",\"len\":" + std::to_string(length()) + "," +
           report_json.substr(1, report_json.size() - 2) + ",\"dedup_key\":" + json_string(dedup_key) + "}";
}

SearchSummary::SearchSummary(size_t max_len)
    : max_length(max_len),
      visited(max_len + 1, 0),
      survivors(max_len + 1, 0),
      leakage_free(max_len + 1, 0),
      entangling(max_len + 1, 0) {}

void SearchSummary::add(const SearchSummary &other) {
    if (other.visited.size() != visited.size()) {
        throw std::invalid_argument("SearchSummary::add: mismatched max_length");
    }
    for (size_t l = 0; l < visited.size(); l++) {
        visited[l] += other.visited[l];
        survivors[l] += other.survivors[l];
        leakage_free[l] += other.leakage_free[l];
        entangling[l] += other.entangling[l];
    }
    float_multiplies += other.float_multiplies;
    exact_multiplies += other.exact_multiplies;
}

uint64_t SearchSummary::total_visited() const {
    uint64_t t = 0;
    for (uint64_t v : visited) {
        t += v;
    }
    return t;
}

uint64_t SearchSummary::total_entangling() const {
    uint64_t t = 0;
    for (uint64_t v : entangling) {
        t += v;
    }
    return t;
}

std::string SearchSummary::to_json() const {
    auto row = [](size_t l, uint64_t v, uint64_t s, uint64_t f, uint64_t e) {
        return "{\"len\":" + std::to_string(l) + ",\"visited\":" + std::to_string(v) + ",\"survivors\":" +
               std::to_string(s) + ",\"leakage_free\":" + std::to_string(f) + ",\"entangling\":" +
               std::to_string(e) + "}";
    };
    std::string per, cum;
    uint64_t cv = 0, cs = 0, cf = 0, ce = 0;
    for (size_t l = 1; l < visited.size(); l++) {
        cv += visited[l];
        cs += survivors[l];
        cf += leakage_free[l];
        ce += entangling[l];
        per += (l > 1 ? "," : "") + row(l, visited[l], survivors[l], leakage_free[l], entangling[l]);
        cum += (l > 1 ? "," : "") + row(l, cv, cs, cf, ce);
    }
    std::string out = "{\"summary\":{\"max_length\":" + std::to_string(max_length);
    out += ",\"policy\":" + json_string(policy_name(policy));
    out += ",\"words_visited\":" + std::to_string(cv);
    out += ",\"float_survivors\":" + std::to_string(cs);
    out += ",\"exact_leakage_free\":" + std::to_string(cf);
    out += ",\"entangling\":" + std::to_string(ce);
    out += ",\"unique_gates\":" + std::to_string(unique_gates);
    out += ",\"float_multiplies\":" + std::to_string(float_multiplies);
    out += ",\"exact_multiplies\":" + std::to_string(exact_multiplies);
    out += ",\"inverse_closure\":";
    out += inverse_closure.has_value() ? (*inverse_closure ? "true" : "false") : "null";
    out += ",\"by_length\":[" + per + "],\"cumulative\":[" + cum + "]}}";
    return out;
}

std::string dedup_key(const ExactMatrix &m) {
    return key_hex(key128(m));
}

// FloatProductStack -------------------------------------------------------------

FloatProductStack::FloatProductStack(const Representation &rep, int strands) : rep_(rep), strands_(strands) {
    require_supported_strands(strands);
    const Eigen::Index d = strands == 6 ? 5 : 2;
    stack_.push_back(FloatMatrix::Identity(d, d));
}

void FloatProductStack::push(int letter) {
    const FloatMatrix &g = rep_.float_letter(strands_, letter);
    stack_.push_back(stack_.back() * g);
    multiplies_++;
}

void FloatProductStack::pop() {
    if (stack_.size() == 1) {
        throw std::logic_error("FloatProductStack::pop on empty stack");
    }
    stack_.pop_back();
}

bool passes_float_filter(const FloatMatrix &m) {
    return is_leakage_free(m, kLeakageTolerance);
}

// Driver --------------------------------------------------------------------------

SearchResult run_shard(const SearchConfig &cfg, int first_letter) {
    if (cfg.max_length < 1) {
        throw std::invalid_argument("search: max_length must be >= 1");
    }
    if (first_letter == 0 || first_letter >= kStrands || -first_letter >= kStrands) {
        throw std::invalid_argument("search: bad shard letter");
    }
    const Representation &rep = standard_representation();
    ShardRunner runner(cfg, rep);
    ShardOutput out = runner.run(first_letter);
    SearchResult result;
    result.summary = out.summary;
    result.summary.policy = cfg.policy;
    result.summary.unique_gates = out.gates.size();
    for (auto &[key, entry] : out.gates) {
        result.records.push_back({BraidWord(kStrands, entry.word), entry.report, key_hex(key)});
    }
    std::sort(result.records.begin(), result.records.end(), [](const SearchRecord &a, const SearchRecord &b) {
        return shortlex_less(a.word.letters(), b.word.letters());
    });
    return result;
}

SearchResult run_search(const SearchConfig &cfg) {
    if (cfg.max_length < 1) {
        throw std::invalid_argument("search: max_length must be >= 1");
    }
    const Representation &rep = standard_representation();
    const bool track_codes = !cfg.normalize_commuting && cfg.max_length <= kMaxCodedLength;

    std::unique_ptr<std::ofstream> out;
    std::unique_ptr<std::ofstream> ckpt;
    std::string ckpt_path;
    std::map<int, ShardOutput> finished;
    if (!cfg.output_path.empty()) {
        ckpt_path = cfg.output_path + ".ckpt";
        if (cfg.resume) {
            finished = load_checkpoint(ckpt_path, cfg, rep);
        }
        out = std::make_unique<std::ofstream>(cfg.output_path, std::ios::trunc);
        if (!*out) {
            throw std::runtime_error("search: cannot open output file " + cfg.output_path);
        }
        ckpt = std::make_unique<std::ofstream>(ckpt_path, std::ios::trunc);
        if (!*ckpt) {
            throw std::runtime_error("search: cannot open checkpoint file " + ckpt_path);
        }
        *ckpt << nlohmann::json{{"config", config_json(cfg)}}.dump() << '\n';
        for (const auto &[letter, shard] : finished) {
            *ckpt << shard_line(shard) << '\n';
        }
        ckpt->flush();
    }

    std::vector<int> pending;
    for (int r = 0; r < kLetters; r++) {
        int letter = letter_from_rank(r);
        if (!finished.contains(letter)) {
            pending.push_back(letter);
        }
    }
    bool complete = true;
    if (cfg.shard_limit > 0 && pending.size() > cfg.shard_limit) {
        pending.resize(cfg.shard_limit);
        complete = false;
    }

    std::mutex mu;
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    auto worker = [&] {
        try {
            ShardRunner runner(cfg, rep);
            for (size_t i = next++; i < pending.size(); i = next++) {
                ShardOutput shard = runner.run(pending[i]);
                std::lock_guard lock(mu);
                if (ckpt) {
                    *ckpt << shard_line(shard) << '\n';
                    ckpt->flush();
                    if (!*ckpt) {
                        throw std::runtime_error("search: write to checkpoint " + ckpt_path + " failed");
                    }
                }
                finished.emplace(shard.first_letter, std::move(shard));
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) {
                failure = std::current_exception();
            }
            next = pending.size();
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(cfg.shards, static_cast<unsigned>(pending.size())));
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
    if (failure) {
        std::rethrow_exception(failure);
    }

    SearchResult result;
    result.complete = complete;
    result.summary = SearchSummary(cfg.max_length);
    result.summary.policy = cfg.policy;
    GateMap merged;
    std::unordered_set<uint64_t> codes;
    for (auto &[letter, shard] : finished) {
        result.summary.add(shard.summary);
        for (auto &[key, entry] : shard.gates) {
            merge_gate(merged, key, std::move(entry));
        }
        if (track_codes) {
            codes.insert(shard.lf_codes.begin(), shard.lf_codes.end());
        }
    }
    if (track_codes && complete) {
        bool closed = true;
        // Decode each code back to its word to form the inverse's code.
        std::vector<int> word;
        for (uint64_t c : codes) {
            word.clear();
            for (uint64_t x = c; x; x >>= 4) {
                word.push_back(letter_from_rank(static_cast<int>(x & 0xf) - 1));
            }
            std::reverse(word.begin(), word.end());
            if (!codes.contains(encode_inverse(word))) {
                closed = false;
                break;
            }
        }
        result.summary.inverse_closure = closed;
    }
    result.summary.unique_gates = merged.size();
    result.records.reserve(merged.size());
    for (auto &[key, entry] : merged) {
        result.records.push_back({BraidWord(kStrands, std::move(entry.word)), std::move(entry.report), key_hex(key)});
    }
    std::sort(result.records.begin(), result.records.end(), [](const SearchRecord &a, const SearchRecord &b) {
        return shortlex_less(a.word.letters(), b.word.letters());
    });

    if (out && !complete) {
        out->close();
        std::error_code ec;
        std::filesystem::remove(cfg.output_path, ec);
    } else if (out) {
        write_results(result, *out);
        out->flush();
        if (!*out) {
            throw std::runtime_error("search: write to " + cfg.output_path + " failed");
        }
        ckpt.reset();
        std::error_code ec;
        std::filesystem::remove(ckpt_path, ec);
    }
    return result;
}

void write_results(const SearchResult &result, std::ostream &out) {
    for (const SearchRecord &r : result.records) {
        out << r.to_json() << '\n';
    }
    out << result.summary.to_json() << '\n';
}

}  // namespace fibbraid
