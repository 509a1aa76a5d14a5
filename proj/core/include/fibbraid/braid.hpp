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

#ifndef FIBBRAID_BRAID_HPP
#define FIBBRAID_BRAID_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibbraid {

/// A freely reduced word in the Artin generators of B_n.
///
/// Letter i > 0 is sigma_i, letter -i is sigma_i^-1, with 1 <= |i| <= n-1.
/// Construction always freely reduces, so adjacent (i, -i) pairs never occur.
class BraidWord {
  public:
    BraidWord() = default;
    explicit BraidWord(int strands, std::vector<int> letters = {});

    /// Whitespace-separated signed integers, e.g. "3 2 1 -1 2".
    /// Throws std::invalid_argument on malformed text or out-of-range letters.
    static BraidWord parse(std::string_view text, int strands);

    int strands() const {
        return strands_;
    }
    const std::vector<int> &letters() const {
        return letters_;
    }
    size_t length() const {
        return letters_.size();
    }
    bool empty() const {
        return letters_.empty();
    }

    BraidWord inverse() const;
    /// w^n for any integer n (negative powers use the inverse).
    BraidWord power(int n) const;
    std::string to_string() const;

    bool operator==(const BraidWord &other) const = default;

  private:
    int strands_ = 2;
    std::vector<int> letters_;
};

/// Concatenation followed by free reduction. Throws on mismatched strand counts.
BraidWord compose(const BraidWord &u, const BraidWord &v);
inline BraidWord operator*(const BraidWord &u, const BraidWord &v) {
    return compose(u, v);
}

/// Appends `letters` to `out` with free reduction at the junction (and
/// cascading through it).
void append_reduced(std::vector<int> &out, std::span<const int> letters);
bool is_freely_reduced(std::span<const int> letters);

enum class NamedBraid { Delta, Sigma, HalfTwistTriple };

/// The half twist (15 letters), the pure braid Sigma = (s3 s2 s1)(s1 s2 s3)
/// and the factor (s3 s2 s1)(s4 s3 s2)(s5 s4 s3), all on six strands.
BraidWord named_braid(NamedBraid name);
/// Accepts "Delta", "Sigma", "HalfTwistTriple"; throws std::invalid_argument otherwise.
BraidWord named_braid(std::string_view name);

/// Position of a letter in the enumeration alphabet s1, s1^-1, s2, s2^-1, ...
inline int letter_rank(int letter) {
    return 2 * ((letter < 0 ? -letter : letter) - 1) + (letter < 0 ? 1 : 0);
}
inline int letter_from_rank(int rank) {
    int g = rank / 2 + 1;
    return rank % 2 ? -g : g;
}

/// Shortlex order over the enumeration alphabet.
bool shortlex_less(std::span<const int> a, std::span<const int> b);

struct EnumerationOptions {
    /// Additionally forbid adjacent commuting letters in decreasing index order.
    bool normalize_commuting = false;
};

/// True iff `next` may follow `prev` in an enumerated word.
bool allowed_successor(int prev, int next, const EnumerationOptions &options);

/// Streams every freely reduced word of a fixed length over 2(n-1) letters in
/// lexicographic alphabet order, optionally restricted to a fixed prefix.
class ReducedWordEnumerator {
  public:
    ReducedWordEnumerator(int strands, size_t length, EnumerationOptions options = {},
                          std::vector<int> prefix = {});

    std::optional<BraidWord> next();

    /// 2(n-1) (2(n-1)-1)^(L-1), or 1 for L = 0. Without commuting normalization.
    static uint64_t count(int strands, size_t length);

  private:
    bool fill_from(size_t pos);
    bool advance();

    int strands_;
    size_t length_;
    EnumerationOptions options_;
    size_t fixed_;
    std::vector<int> ranks_;
    bool started_ = false;
    bool done_ = false;
};

}  // namespace fibbraid

#endif
