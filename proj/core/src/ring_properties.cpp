#include <unordered_map>

#include "g2/rings.hpp"

namespace g2 {

std::vector<Value> units_of(const Ring& r) {
  if (!r->is_finite()) throw Error(ErrorCode::NotFinite, r.descriptor() + " is infinite");
  std::vector<Value> out;
  for (const auto& v : r->elements()) {
    if (r->is_unit(v)) out.push_back(v);
  }
  return out;
}

bool has_inverse_of_3(const Ring& r) { return r->has_inverse_of_3(); }

GenerationCertificate check_unit_2R_generation(const Ring& r) {
  if (!r->is_finite()) throw Error(ErrorCode::NotFinite, r.descriptor() + " is infinite");
  const auto n = *r->size();
  GenerationCertificate cert;
  std::vector<std::int64_t> step_of(static_cast<std::size_t>(n), -1);
  std::vector<std::int64_t> frontier;

  auto add_step = [&](GenerationStep step) {
    auto idx = static_cast<std::size_t>(r->index_of(step.value));
    if (step_of[idx] >= 0) return;
    step_of[idx] = static_cast<std::int64_t>(cert.steps.size());
    frontier.push_back(step_of[idx]);
    cert.steps.push_back(std::move(step));
  };

  using K = GenerationStep::Kind;
  add_step({K::Zero, r->zero(), -1, -1, {}});
  add_step({K::One, r->one(), -1, -1, {}});
  for (const auto& u : units_of(r)) add_step({K::Unit, u, -1, -1, {}});
  const Value two = r->from_int(2);
  for (const auto& x : r->elements()) add_step({K::TwoTimes, r->mul(two, x), -1, -1, x});

  // Closure under negation, sums and products; each new element is combined
  // with everything reached so far.
  std::size_t processed = 0;
  while (processed < cert.steps.size()) {
    const auto i = static_cast<std::int64_t>(processed++);
    const Value vi = cert.steps[static_cast<std::size_t>(i)].value;
    add_step({K::Negation, r->neg(vi), i, -1, {}});
    for (std::int64_t j = 0; j <= i; ++j) {
      const Value& vj = cert.steps[static_cast<std::size_t>(j)].value;
      add_step({K::Sum, r->add(vi, vj), i, j, {}});
      add_step({K::Product, r->mul(vi, vj), i, j, {}});
    }
    if (static_cast<std::int64_t>(cert.steps.size()) == n) break;
  }

  cert.generates = static_cast<std::int64_t>(cert.steps.size()) == n;
  if (!cert.generates) {
    for (std::int64_t k = 0; k < n; ++k) {
      if (step_of[static_cast<std::size_t>(k)] < 0) {
        cert.unreachable = r->element(k);
        break;
      }
    }
  }
  return cert;
}

bool replay_certificate(const Ring& r, const GenerationCertificate& cert) {
  using K = GenerationStep::Kind;
  const Value two = r->from_int(2);
  const auto size = static_cast<std::int64_t>(cert.steps.size());
  auto earlier = [&](std::int64_t idx, std::int64_t self) { return idx >= 0 && idx < self && idx < size; };
  for (std::int64_t k = 0; k < size; ++k) {
    const auto& s = cert.steps[static_cast<std::size_t>(k)];
    auto val = [&](std::int64_t idx) -> const Value& { return cert.steps[static_cast<std::size_t>(idx)].value; };
    bool ok = false;
    switch (s.kind) {
      case K::Zero: ok = s.value == r->zero(); break;
      case K::One: ok = s.value == r->one(); break;
      case K::Unit: ok = r->is_unit(s.value); break;
      case K::TwoTimes: ok = s.value == r->mul(two, s.operand); break;
      case K::Negation: ok = earlier(s.left, k) && s.value == r->neg(val(s.left)); break;
      case K::Sum:
        ok = earlier(s.left, k) && earlier(s.right, k) && s.value == r->add(val(s.left), val(s.right));
        break;
      case K::Product:
        ok = earlier(s.left, k) && earlier(s.right, k) && s.value == r->mul(val(s.left), val(s.right));
        break;
    }
    if (!ok) return false;
  }
  if (cert.generates && r->is_finite()) {
    std::vector<bool> seen(static_cast<std::size_t>(*r->size()), false);
    for (const auto& s : cert.steps) seen[static_cast<std::size_t>(r->index_of(s.value))] = true;
    for (bool b : seen) {
      if (!b) return false;
    }
  }
  return true;
}

}  // namespace g2
