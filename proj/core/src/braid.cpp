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

#include "fibbraid/braid.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace fibbraid {

void append_reduced(std::vector<int> &out, std::span<const int> letters) {
    for (int l : letters) {
        if (!out.empty() && out.back() == -l) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
}

bool is_freely_reduced(std::span<const int> letters) {
    for (size_t i = 1; i < letters.size(); i++) {
        if (letters[i] == -letters[i - 1]) {
            return false;
        }
    }
    return true;
}

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands) {
    if (strands < 2) {
        throw std::invalid_argument("braid words need at least 2 strands");
    }
    for (int l : letters) {
        if (l == 0 || l >= strands || -l >= strands) {
            throw std::invalid_argument("generator " + std::to_string(l) + " out of range for B_" +
                                        std::to_string(strands));
        }
    }
    letters_.reserve(letters.size());
    append_reduced(letters_, letters);
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
    std::vector<int> letters;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            i++;
            continue;
        }
        size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' && text[j] != '\r') {
            j++;
        }
        std::string_view token = text.substr(i, j - i);
        const char *begin = token.data();
        const char *end = token.data() + token.size();
        if (!token.empty() && token.front() == '+') {
            begin++;
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr != end) {
            throw std::invalid_argument("bad braid letter '" + std::string(token) + "'");
        }
        letters.push_back(value);
        i = j;
    }
    return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::inverse() const {
    BraidWord r;
    r.strands_ = strands_;
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        r.letters_.push_back(-*it);
    }
    return r;
}

BraidWord BraidWord::power(int n) const {
    const BraidWord base = n < 0 ? inverse() : *this;
    BraidWord r(strands_);
    for (int k = 0; k < (n < 0 ? -n : n); k++) {
        append_reduced(r.letters_, base.letters_);
    }
    return r;
}

std::string BraidWord::to_string() const {
    std::string out;
    for (size_t i = 0; i < letters_.size(); i++) {
        if (i) {
            out += ' ';
        }
        out += std::to_string(letters_[i]);
    }
    return out;
}

BraidWord compose(const BraidWord &u, const BraidWord &v) {
    if (u.strands() != v.strands()) {
        throw std::invalid_argument("compose: strand counts differ (" + std::to_string(u.strands()) + " vs " +
                                    std::to_string(v.strands()) + ")");
    }
    std::vector<int> letters = u.letters();
    append_reduced(letters, v.letters());
    return BraidWord(u.strands(), std::move(letters));
}

BraidWord named_braid(NamedBraid name) {
    switch (name) {
        case NamedBraid::Delta:
            return BraidWord(6, {1, 2, 1, 3, 2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1});
        case NamedBraid::Sigma:
            return BraidWord(6, {3, 2, 1, 1, 2, 3});
        case NamedBraid::HalfTwistTriple:
            return BraidWord(6, {3, 2, 1, 4, 3, 2, 5, 4, 3});
    }
    throw std::invalid_argument("unknown named braid");
}

BraidWord named_braid(std::string_view name) {
    if (name == "Delta") {
        return named_braid(NamedBraid::Delta);
    }
    if (name == "Sigma") {
        return named_braid(NamedBraid::Sigma);
    }
    if (name == "HalfTwistTriple") {
        return named_braid(NamedBraid::HalfTwistTriple);
    }
    throw std::invalid_argument("unknown named braid '" + std::string(name) + "'");
}

bool shortlex_less(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    for (size_t i = 0; i < a.size(); i++) {
        int ra = letter_rank(a[i]);
        int rb = letter_rank(b[i]);
        if (ra != rb) {
            return ra < rb;
        }
    }
    return false;
}

bool allowed_successor(int prev, int next, const EnumerationOptions &options) {
    if (prev == -next) {
        return false;
    }
    if (options.normalize_commuting) {
        int a = prev < 0 ? -prev : prev;
        int b = next < 0 ? -next : next;
        if (a > b + 1) {
            return false;
        }
    }
    return true;
}

// ------------------------------------------------------- ReducedWordEnumerator

ReducedWordEnumerator::ReducedWordEnumerator(int strands, size_t length, EnumerationOptions options,
                                             std::vector<int> prefix)
    : strands_(strands), length_(length), options_(options), fixed_(prefix.size()) {
    if (strands < 2) {
        throw std::invalid_argument("enumeration needs at least 2 strands");
    }
    for (size_t i = 0; i < prefix.size(); i++) {
        int l = prefix[i];
        if (l == 0 || l >= strands || -l >= strands) {
            throw std::invalid_argument("prefix letter out of range");
        }
        if (i > 0 && !allowed_successor(prefix[i - 1], l, options_)) {
            done_ = true;
        }
        ranks_.push_back(letter_rank(l));
    }
    if (prefix.size() > length) {
        done_ = true;
    }
}

uint64_t ReducedWordEnumerator::count(int strands, size_t length) {
    if (length == 0) {
        return 1;
    }
    uint64_t k = 2 * static_cast<uint64_t>(strands - 1);
    uint64_t total = k;
    for (size_t i = 1; i < length; i++) {
        total *= k - 1;
    }
    return total;
}

bool ReducedWordEnumerator::fill_from(size_t pos) {
    const int alphabet = 2 * (strands_ - 1);
    ranks_.resize(pos);
    for (size_t i = pos; i < length_; i++) {
        int chosen = -1;
        for (int r = 0; r < alphabet; r++) {
            if (i == 0 || allowed_successor(letter_from_rank(ranks_[i - 1]), letter_from_rank(r), options_)) {
                chosen = r;
                break;
            }
        }
        if (chosen < 0) {
            return false;
        }
        ranks_.push_back(chosen);
    }
    return true;
}

bool ReducedWordEnumerator::advance() {
    const int alphabet = 2 * (strands_ - 1);
    size_t pos = length_;
    while (pos > fixed_) {
        pos--;
        for (int r = ranks_[pos] + 1; r < alphabet; r++) {
            if (pos == 0 || allowed_successor(letter_from_rank(ranks_[pos - 1]), letter_from_rank(r), options_)) {
                ranks_[pos] = r;
                if (fill_from(pos + 1)) {
                    return true;
                }
            }
        }
    }
    return false;
}

std::optional<BraidWord> ReducedWordEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }
    if (!started_) {
        started_ = true;
        if (!fill_from(fixed_)) {
            done_ = true;
            return std::nullopt;
        }
    } else if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    std::vector<int> letters;
    letters.reserve(length_);
    for (int r : ranks_) {
        letters.push_back(letter_from_rank(r));
    }
    return BraidWord(strands_, std::move(letters));
}

}  // namespace fibbraid
