#include "smeared/poly_ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "smeared/errors.hpp"

namespace smeared {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

PolyRing::PolyRing(std::vector<std::string> variable_names, MonomialOrder order)
    : names_(std::move(variable_names)), order_(order) {
  if (names_.empty()) throw PreconditionError("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw PreconditionError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable name '" + n + "'");
  }
}

RingPtr PolyRing::make(std::vector<std::string> variable_names, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(variable_names), order);
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr PolyRing::with_order(MonomialOrder order) const { return make(names_, order); }

}  // namespace smeared
