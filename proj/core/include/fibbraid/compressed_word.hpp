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

#ifndef FIBBRAID_COMPRESSED_WORD_HPP
#define FIBBRAID_COMPRESSED_WORD_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "fibbraid/braid.hpp"

namespace fibbraid {

/// A freely reduced braid word stored as a straight-line program.
///
/// Words produced by iterated conjugation grow geometrically (the gate
/// iteration roughly triples the length per step), so they are kept as
/// sequences of slices into earlier words. Concatenation cancels across the
/// junctions letter by letter, so the represented word is always freely
/// reduced and length() is its exact reduced length.
class CompressedWord {
  public:
    struct Node;

    /// A contiguous range of a node, optionally read backwards with every
    /// letter negated (i.e. the inverse of that range).
    struct Slice {
        std::shared_ptr<const Node> node;
        uint64_t start = 0;
        uint64_t length = 0;
        bool inverted = false;

        int letter_at(uint64_t i) const;
    };

    struct Node {
        std::vector<int> leaf;  // non-empty iff this is a leaf
        std::vector<Slice> pieces;
        std::vector<uint64_t> offsets;  // prefix sums over pieces
        uint64_t length = 0;

        bool is_leaf() const {
            return pieces.empty();
        }
        int letter_at(uint64_t i) const;
    };

    CompressedWord() = default;
    explicit CompressedWord(const BraidWord &word);

    /// Free reduction of the concatenation of already reduced words.
    static CompressedWord concat(std::span<const CompressedWord> parts);

    CompressedWord inverse() const;

    int strands() const {
        return strands_;
    }
    uint64_t length() const {
        return root_.length;
    }
    int letter_at(uint64_t i) const {
        return root_.letter_at(i);
    }
    const Slice &root() const {
        return root_;
    }

    /// Visits every letter in order.
    void for_each_letter(const std::function<void(int)> &visit) const;
    /// Throws std::length_error if the word is longer than max_length.
    BraidWord expand(uint64_t max_length = uint64_t{1} << 26) const;

    /// Writes one rule per node, ending with the rule for the whole word:
    ///   N3 = 2 1 1 2          (leaf)
    ///   N7 = N3 N5[0:40]^-1 N3   (slices: [start:end) and ^-1 for inverse)
    ///   W = N7
    void write_grammar(std::ostream &out) const;

  private:
    int strands_ = 2;
    Slice root_;
};

}  // namespace fibbraid

#endif
