#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smeared/monomial.hpp"

namespace smeared {

/// Polynomial ring Q[x_1, ..., x_d] with a fixed variable precedence and monomial order.
class PolyRing {
 public:
  /// Throws PreconditionError on an empty list, duplicate or malformed names.
  PolyRing(std::vector<std::string> variable_names, MonomialOrder order = MonomialOrder::grevlex());

  static std::shared_ptr<const PolyRing> make(std::vector<std::string> variable_names,
                                              MonomialOrder order = MonomialOrder::grevlex());

  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::string& variable_name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  MonomialOrder order() const { return order_; }

  /// Same variables, different order.
  std::shared_ptr<const PolyRing> with_order(MonomialOrder order) const;

  /// True iff both rings have identical variable lists (orders may differ).
  bool same_variables(const PolyRing& other) const { return names_ == other.names_; }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

}  // namespace smeared
