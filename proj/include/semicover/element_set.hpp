// Copyright 2026 The semicover Authors
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

#ifndef SEMICOVER_ELEMENT_SET_HPP_
#define SEMICOVER_ELEMENT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace semicover {

  //! Dense element index into a FiniteSemigroup; meaningless across carriers.
  using ElementId = std::uint32_t;

  //! A subset of {0, ..., universe - 1}, stored as a bitset.
  //!
  //! All binary operations require both operands to share a universe.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : _universe(universe), _words((universe + 63) / 64, 0) {}
    ElementSet(std::size_t universe, std::initializer_list<ElementId> elts)
        : ElementSet(universe) {
      for (auto x : elts) {
        insert(x);
      }
    }

    static ElementSet full(std::size_t universe) {
      ElementSet s(universe);
      for (std::size_t i = 0; i < universe; ++i) {
        s.insert(static_cast<ElementId>(i));
      }
      return s;
    }

    template <typename Range>
    static ElementSet from(std::size_t universe, Range const& elts) {
      ElementSet s(universe);
      for (auto x : elts) {
        s.insert(static_cast<ElementId>(x));
      }
      return s;
    }

    [[nodiscard]] std::size_t universe() const noexcept {
      return _universe;
    }

    [[nodiscard]] bool contains(ElementId x) const noexcept {
      return x < _universe && ((_words[x >> 6] >> (x & 63)) & 1U) != 0;
    }

    //! Returns true if \p x was not already present.
    bool insert(ElementId x) {
      std::uint64_t const bit = std::uint64_t(1) << (x & 63);
      bool const fresh        = (_words[x >> 6] & bit) == 0;
      _words[x >> 6] |= bit;
      return fresh;
    }

    void erase(ElementId x) {
      _words[x >> 6] &= ~(std::uint64_t(1) << (x & 63));
    }

    [[nodiscard]] std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : _words) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }

    [[nodiscard]] bool empty() const noexcept {
      for (auto w : _words) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] bool is_full() const noexcept {
      return count() == _universe;
    }

    [[nodiscard]] bool is_subset_of(ElementSet const& that) const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if ((_words[i] & ~that._words[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    ElementSet& operator|=(ElementSet const& that) {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] |= that._words[i];
      }
      return *this;
    }

    ElementSet& operator&=(ElementSet const& that) {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] &= that._words[i];
      }
      return *this;
    }

    //! Set difference.
    ElementSet& operator-=(ElementSet const& that) {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _words[i] &= ~that._words[i];
      }
      return *this;
    }

    friend ElementSet operator|(ElementSet a, ElementSet const& b) {
      return a |= b;
    }
    friend ElementSet operator&(ElementSet a, ElementSet const& b) {
      return a &= b;
    }
    friend ElementSet operator-(ElementSet a, ElementSet const& b) {
      return a -= b;
    }

    [[nodiscard]] ElementSet complement() const {
      return full(_universe) - *this;
    }

    //! Smallest member, or universe() if empty.
    [[nodiscard]] ElementId first() const noexcept {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if (_words[i] != 0) {
          return static_cast<ElementId>(i * 64 + std::countr_zero(_words[i]));
        }
      }
      return static_cast<ElementId>(_universe);
    }

    [[nodiscard]] std::vector<ElementId> elements() const {
      std::vector<ElementId> out;
      out.reserve(count());
      for_each([&out](ElementId x) { out.push_back(x); });
      return out;
    }

    template <typename Func>
    void for_each(Func&& f) const {
      for (std::size_t i = 0; i < _words.size(); ++i) {
        std::uint64_t w = _words[i];
        while (w != 0) {
          f(static_cast<ElementId>(i * 64 + std::countr_zero(w)));
          w &= w - 1;
        }
      }
    }

    [[nodiscard]] std::size_t hash() const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (auto w : _words) {
        h ^= w;
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h ^ _universe);
    }

    friend bool operator==(ElementSet const&, ElementSet const&) = default;

   private:
    std::size_t                _universe = 0;
    std::vector<std::uint64_t> _words;
  };

  struct ElementSetHash {
    std::size_t operator()(ElementSet const& s) const noexcept {
      return s.hash();
    }
  };

  //! Canonical order: by size, then lexicographically on sorted members.
  bool canonical_less(ElementSet const& a, ElementSet const& b);

}  // namespace semicover

#endif  // SEMICOVER_ELEMENT_SET_HPP_
