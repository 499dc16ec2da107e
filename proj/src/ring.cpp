#include "scrolls/ring.hpp"

namespace scrolls {

RingContext::RingContext(FieldSpec field, MonomialOrder order, std::vector<std::string> names)
    : field_(field), order_(std::move(order)), names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    auto [it, fresh] = lookup_.emplace(names_[i], i);
    if (!fresh) throw InvalidSpec("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> RingContext::find_var(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

void RingContext::add_alias(const std::string& name, std::size_t index) {
  if (index >= names_.size()) throw IndexOutOfRange("alias index out of range");
  auto [it, fresh] = lookup_.emplace(name, index);
  if (!fresh && it->second != index)
    throw InvalidSpec("alias '" + name + "' conflicts with an existing name");
}

RingPtr make_ring(FieldSpec field, MonomialOrder order, std::vector<std::string> names) {
  return std::make_shared<const RingContext>(field, std::move(order), std::move(names));
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  auto r = std::make_shared<RingContext>(ring->field(), std::move(order), ring->var_names());
  return r;
}

}  // namespace scrolls
