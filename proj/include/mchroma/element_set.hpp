// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include "mchroma/errors.hpp"

namespace mchroma {

using Element = int;

// A subset of the ground set {0, ..., universe-1}, stored as packed 64-bit
// words. Up to 64 elements this is a single word, so the set algebra the
// oracles lean on is a handful of instructions.
class ElementSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    const_iterator() = default;
    const_iterator(const ElementSet* set, int pos) : set_(set), pos_(pos) {
      skip();
    }
    Element operator*() const { return pos_; }
    const_iterator& operator++() {
      ++pos_;
      skip();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    void skip() {
      const int n = static_cast<int>(set_->universe_);
      while (pos_ < n) {
        const std::uint64_t word = set_->words_[pos_ >> 6] >> (pos_ & 63);
        if (word != 0) {
          pos_ += std::countr_zero(word);
          return;
        }
        pos_ = ((pos_ >> 6) + 1) << 6;
      }
      pos_ = n;
    }

    const ElementSet* set_ = nullptr;
    int pos_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> elements)
      : ElementSet(universe) {
    for (Element e : elements) insert(e);
  }
  ElementSet(std::size_t universe, const std::vector<Element>& elements)
      : ElementSet(universe) {
    for (Element e : elements) insert(e);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
    return s;
  }

  // Only meaningful for universes of at most 64 elements.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask) {
    ElementSet s(universe);
    if (!s.words_.empty()) {
      s.words_[0] = universe >= 64 ? mask : mask & ((std::uint64_t{1} << universe) - 1);
    }
    return s;
  }
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  std::size_t universe() const { return universe_; }

  bool contains(Element e) const {
    check(e);
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  void insert(Element e) {
    check(e);
    words_[e >> 6] |= std::uint64_t{1} << (e & 63);
  }
  void erase(Element e) {
    check(e);
    words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }

  ElementSet with(Element e) const {
    ElementSet s = *this;
    s.insert(e);
    return s;
  }
  ElementSet without(Element e) const {
    ElementSet s = *this;
    s.erase(e);
    return s;
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool is_subset_of(const ElementSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  bool intersects(const ElementSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool operator==(const ElementSet& o) const = default;

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const {
    return const_iterator(this, static_cast<int>(universe_));
  }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Element e : *this) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

 private:
  void check(Element e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= universe_) {
      throw InputError("element " + std::to_string(e) +
                       " outside ground set of size " + std::to_string(universe_));
    }
  }
  void same_universe(const ElementSet& o) const {
    if (o.universe_ != universe_) {
      throw InputError("element sets over different ground sets (" +
                       std::to_string(universe_) + " vs " +
                       std::to_string(o.universe_) + ")");
    }
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  return os << s.to_string();
}

}  // namespace mchroma
