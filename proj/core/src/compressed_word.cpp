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

#include "fibbraid/compressed_word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace fibbraid {

int CompressedWord::Slice::letter_at(uint64_t i) const {
    if (inverted) {
        return -node->letter_at(start + length - 1 - i);
    }
    return node->letter_at(start + i);
}

int CompressedWord::Node::letter_at(uint64_t i) const {
    if (is_leaf()) {
        return leaf[i];
    }
    auto it = std::upper_bound(offsets.begin(), offsets.end(), i);
    size_t k = static_cast<size_t>(it - offsets.begin()) - 1;
    return pieces[k].letter_at(i - offsets[k]);
}

CompressedWord::CompressedWord(const BraidWord &word) : strands_(word.strands()) {
    auto node = std::make_shared<Node>();
    node->leaf = word.letters();
    node->length = word.length();
    root_ = Slice{std::move(node), 0, word.length(), false};
}

namespace {

void trim_front(CompressedWord::Slice &s) {
    if (!s.inverted) {
        s.start++;
    }
    s.length--;
}

void trim_back(CompressedWord::Slice &s) {
    if (s.inverted) {
        s.start++;
    }
    s.length--;
}

}  // namespace

CompressedWord CompressedWord::concat(std::span<const CompressedWord> parts) {
    if (parts.empty()) {
        throw std::invalid_argument("concat of no words");
    }
    const int strands = parts.front().strands_;
    std::vector<Slice> stack;
    for (const auto &part : parts) {
        if (part.strands_ != strands) {
            throw std::invalid_argument("concat: strand counts differ");
        }
        Slice incoming = part.root_;
        while (incoming.length > 0 && !stack.empty()) {
            Slice &top = stack.back();
            if (top.letter_at(top.length - 1) != -incoming.letter_at(0)) {
                break;
            }
            trim_back(top);
            trim_front(incoming);
            if (top.length == 0) {
                stack.pop_back();
            }
        }
        if (incoming.length > 0) {
            stack.push_back(std::move(incoming));
        }
    }

    CompressedWord result;
    result.strands_ = strands;
    if (stack.empty()) {
        auto node = std::make_shared<Node>();
        result.root_ = Slice{std::move(node), 0, 0, false};
        return result;
    }
    if (stack.size() == 1) {
        result.root_ = stack.front();
        return result;
    }
    auto node = std::make_shared<Node>();
    uint64_t total = 0;
    for (auto &s : stack) {
        node->offsets.push_back(total);
        total += s.length;
        node->pieces.push_back(std::move(s));
    }
    node->length = total;
    result.root_ = Slice{std::move(node), 0, total, false};
    return result;
}

CompressedWord CompressedWord::inverse() const {
    CompressedWord r = *this;
    r.root_.inverted = !r.root_.inverted;
    return r;
}

namespace {

void visit_range(const CompressedWord::Node &node, uint64_t start, uint64_t length, bool inverted,
                 const std::function<void(int)> &visit);

void visit_slice(const CompressedWord::Slice &s, uint64_t start, uint64_t length, bool inverted,
                 const std::function<void(int)> &visit) {
    // Range [start, start+length) in slice coordinates.
    bool inv = s.inverted != inverted;
    uint64_t node_start = s.inverted ? s.start + s.length - (start + length) : s.start + start;
    visit_range(*s.node, node_start, length, inv, visit);
}

void visit_range(const CompressedWord::Node &node, uint64_t start, uint64_t length, bool inverted,
                 const std::function<void(int)> &visit) {
    if (length == 0) {
        return;
    }
    if (node.is_leaf()) {
        if (!inverted) {
            for (uint64_t i = start; i < start + length; i++) {
                visit(node.leaf[i]);
            }
        } else {
            for (uint64_t i = start + length; i-- > start;) {
                visit(-node.leaf[i]);
            }
        }
        return;
    }
    const uint64_t end = start + length;
    auto piece_range = [&](size_t k, uint64_t &a, uint64_t &b) {
        uint64_t lo = node.offsets[k];
        uint64_t hi = lo + node.pieces[k].length;
        a = std::max(lo, start) - lo;
        b = std::min(hi, end) - lo;
    };
    size_t first = static_cast<size_t>(std::upper_bound(node.offsets.begin(), node.offsets.end(), start) -
                                       node.offsets.begin()) - 1;
    size_t last = static_cast<size_t>(std::upper_bound(node.offsets.begin(), node.offsets.end(), end - 1) -
                                      node.offsets.begin()) - 1;
    if (!inverted) {
        for (size_t k = first; k <= last; k++) {
            uint64_t a, b;
            piece_range(k, a, b);
            visit_slice(node.pieces[k], a, b - a, false, visit);
        }
    } else {
        for (size_t k = last + 1; k-- > first;) {
            uint64_t a, b;
            piece_range(k, a, b);
            visit_slice(node.pieces[k], a, b - a, true, visit);
        }
    }
}

}  // namespace

void CompressedWord::for_each_letter(const std::function<void(int)> &visit) const {
    visit_slice(root_, 0, root_.length, false, visit);
}

BraidWord CompressedWord::expand(uint64_t max_length) const {
    if (length() > max_length) {
        throw std::length_error("compressed word has " + std::to_string(length()) + " letters, above the limit " +
                                std::to_string(max_length));
    }
    std::vector<int> letters;
    letters.reserve(length());
    for_each_letter([&](int l) { letters.push_back(l); });
    return BraidWord(strands_, std::move(letters));
}

void CompressedWord::write_grammar(std::ostream &out) const {
    std::unordered_map<const Node *, size_t> ids;
    std::vector<const Node *> order;
    std::function<void(const Node *)> collect = [&](const Node *n) {
        if (ids.count(n)) {
            return;
        }
        for (const auto &p : n->pieces) {
            collect(p.node.get());
        }
        ids[n] = order.size();
        order.push_back(n);
    };
    collect(root_.node.get());

    auto slice_text = [&](const Slice &s) {
        std::string t = "N" + std::to_string(ids.at(s.node.get()));
        if (s.start != 0 || s.length != s.node->length) {
            t += "[" + std::to_string(s.start) + ":" + std::to_string(s.start + s.length) + "]";
        }
        if (s.inverted) {
            t += "^-1";
        }
        return t;
    };

    out << "# fibbraid compressed braid word\n";
    out << "# strands " << strands_ << "\n";
    out << "# length " << length() << "\n";
    for (const Node *n : order) {
        out << "N" << ids.at(n) << " =";
        if (n->is_leaf()) {
            for (int l : n->leaf) {
                out << ' ' << l;
            }
        } else {
            for (const auto &p : n->pieces) {
                out << ' ' << slice_text(p);
            }
        }
        out << "\n";
    }
    out << "W = " << slice_text(root_) << "\n";
}

}  // namespace fibbraid
