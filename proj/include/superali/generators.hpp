#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superali/errors.hpp"

namespace superali {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity parity_add(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}

inline bool is_odd(Parity p) { return p == Parity::odd; }

using GenId = std::uint32_t;

/// Ordered table of named generators of a free supercommutative algebra.
/// Ids are dense and assigned in declaration order; parity is fixed at
/// declaration. (name, index) pairs must be unique. Append-only.
class GeneratorTable {
public:
  struct Entry {
    std::string name;
    std::vector<int> index;
    Parity parity;
  };

  GenId add(std::string name, std::vector<int> index, Parity parity) {
    auto key = std::make_pair(name, index);
    if (by_key_.count(key))
      throw precondition_error("duplicate generator " + display(name, index));
    GenId id = static_cast<GenId>(entries_.size());
    by_key_.emplace(std::move(key), id);
    entries_.push_back(Entry{std::move(name), std::move(index), parity});
    if (parity == Parity::odd) ++odd_count_;
    return id;
  }

  GenId add_even(std::string name, std::vector<int> index = {}) {
    return add(std::move(name), std::move(index), Parity::even);
  }
  GenId add_odd(std::string name, std::vector<int> index = {}) {
    return add(std::move(name), std::move(index), Parity::odd);
  }

  std::size_t size() const { return entries_.size(); }
  std::size_t odd_count() const { return odd_count_; }
  Parity parity(GenId g) const { return entries_[g].parity; }
  const Entry& entry(GenId g) const { return entries_[g]; }

  std::string display_name(GenId g) const {
    return display(entries_[g].name, entries_[g].index);
  }

private:
  static std::string display(const std::string& name, const std::vector<int>& index) {
    if (index.empty()) return name;
    std::string s = name + "[";
    for (std::size_t i = 0; i < index.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(index[i]);
    }
    return s + "]";
  }

  std::vector<Entry> entries_;
  std::map<std::pair<std::string, std::vector<int>>, GenId> by_key_;
  std::size_t odd_count_ = 0;
};

} // namespace superali
