#pragma once

#include <memory>
#include <string>
#include <vector>

#include "g2/rings.hpp"

namespace g2::detail {

/// Membership bitset (by element index) of the ideal generated by `generators`
/// in a finite ring.
std::vector<bool> ideal_closure(const Ring& base, const std::vector<std::int64_t>& generators);

/// True iff the ideal is proper and a*b in I forces a or b in I.
bool is_prime_ideal(const Ring& base, const std::vector<bool>& ideal);

std::shared_ptr<const RingImpl> materialize_localization(const Ring& base, const std::vector<Value>& generators,
                                                         const std::string& descriptor);

std::shared_ptr<const RingImpl> materialize_quotient(const Ring& base, const std::vector<Value>& generators,
                                                     const std::string& descriptor);

}  // namespace g2::detail
