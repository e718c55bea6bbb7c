#pragma once

#include <memory>
#include <string>

#include "superali/generators.hpp"
#include "superali/superscalar.hpp"

namespace superali {

/// Polynomial superdomain with n even coordinates x_1..x_n and m odd
/// coordinates xi_1..xi_m. Coordinate generators occupy ids 0..n+m-1 of the
/// owned table; auxiliary coefficient generators are appended after them and
/// are never differentiated by operators on the domain.
class SuperDomain {
public:
  SuperDomain(std::uint32_t n_even, std::uint32_t n_odd,
              const std::string& even_name = "x", const std::string& odd_name = "xi")
      : tab_(std::make_unique<GeneratorTable>()), n_even_(n_even), n_odd_(n_odd) {
    for (std::uint32_t i = 0; i < n_even; ++i)
      tab_->add_even(even_name, {static_cast<int>(i + 1)});
    for (std::uint32_t j = 0; j < n_odd; ++j)
      tab_->add_odd(odd_name, {static_cast<int>(j + 1)});
  }

  const GeneratorTable& table() const { return *tab_; }
  GeneratorTable& table() { return *tab_; }

  std::uint32_t even_count() const { return n_even_; }
  std::uint32_t odd_count() const { return n_odd_; }
  std::uint32_t coordinate_count() const { return n_even_ + n_odd_; }

  GenId even_coord(std::uint32_t i) const { return i; }
  GenId odd_coord(std::uint32_t j) const { return n_even_ + j; }
  bool is_coordinate(GenId g) const { return g < coordinate_count(); }

  SuperScalar coordinate(GenId g) const { return SuperScalar::generator(*tab_, g); }
  SuperScalar constant(const Rational& c) const { return SuperScalar(c, tab_.get()); }

  /// Fresh auxiliary generator (odd eta by default).
  GenId fresh(const std::string& name, std::vector<int> index, Parity p) {
    return tab_->add(name, std::move(index), p);
  }

private:
  std::unique_ptr<GeneratorTable> tab_;
  std::uint32_t n_even_;
  std::uint32_t n_odd_;
};

} // namespace superali
