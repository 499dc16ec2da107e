#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scrolls/field.hpp"
#include "scrolls/monomial.hpp"

namespace scrolls {

/// Immutable polynomial ring context: coefficient field, ambient monomial
/// order and variable names. Alternate spellings of a variable may be
/// registered as aliases; only the primary name is ever emitted.
class RingContext {
 public:
  RingContext(FieldSpec field, MonomialOrder order, std::vector<std::string> names);

  const FieldSpec& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::string& var_name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> find_var(std::string_view name) const;

  void add_alias(const std::string& name, std::size_t index);

  /// Structural equality: same field, order and primary variable names.
  bool same_structure(const RingContext& other) const {
    return field_ == other.field_ && order_ == other.order_ && names_ == other.names_;
  }

 private:
  FieldSpec field_;
  MonomialOrder order_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

using RingPtr = std::shared_ptr<const RingContext>;

RingPtr make_ring(FieldSpec field, MonomialOrder order, std::vector<std::string> names);

/// Same variables and field, different ambient order.
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

}  // namespace scrolls
