#include "betti/hilbert.hpp"

#include <algorithm>
#include <set>

#include "betti/errors.hpp"

namespace betti {

HilbertFunction::HilbertFunction(std::vector<long> values, Tail tail)
    : values_(std::move(values)), tail_(tail) {
  if (values_.empty() || values_[0] != 1) {
    throw DomainError("h0", "a Hilbert function of a cyclic quotient starts with h(0) = 1");
  }
  bool seen_zero = false;
  for (long v : values_) {
    if (v < 0) throw DomainError("negative-value", "Hilbert function values must be non-negative");
    if (seen_zero && v != 0 && tail_ == Tail::Zero) {
      throw DomainError("nakayama", "a Hilbert function that reaches 0 stays 0");
    }
    seen_zero = seen_zero || v == 0;
  }
}

long HilbertFunction::operator()(int t) const {
  if (t < 0) return 0;
  if (t <= last_index()) return values_[t];
  if (tail_ == Tail::Zero) return 0;
  throw DomainError("unspecified-tail", "Hilbert function is unspecified past its last value");
}

int HilbertFunction::socle_degree() const {
  if (tail_ != Tail::Zero) throw DomainError("unspecified-tail", "socle degree needs a zero tail");
  int s = 0;
  for (int t = 0; t <= last_index(); ++t) {
    if (values_[t] > 0) s = t;
  }
  return s;
}

HilbertFunction HilbertFunction::normalized() const {
  if (tail_ != Tail::Zero) return *this;
  std::vector<long> v(values_.begin(), values_.begin() + socle_degree() + 1);
  return HilbertFunction(std::move(v), tail_);
}

bool HilbertFunction::operator==(const HilbertFunction& other) const {
  const HilbertFunction a = normalized();
  const HilbertFunction b = other.normalized();
  return a.tail_ == b.tail_ && a.values_ == b.values_;
}

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> generators) : num_vars_(num_vars) {
  if (num_vars < 1) throw DomainError("variable-count", "an ideal needs at least one variable");
  for (const auto& g : generators) {
    if (g.num_vars() != num_vars) {
      throw DomainError("variable-count", "generator has the wrong number of variables");
    }
    if (g.is_unit()) throw DomainError("unit-generator", "the unit ideal is not a valid input");
  }
  std::sort(generators.begin(), generators.end(), DegreeThenLex{});
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                       [&](const Monomial& kept) { return divides(kept, g); });
    if (!redundant) generators_.push_back(g);
  }
}

int MonomialIdeal::max_generator_degree() const {
  int d = 0;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

HilbertFunction hf_of_quotient(const MonomialIdeal& ideal, int bound) {
  if (bound < 0) throw DomainError("bound", "degree bound must be non-negative");
  std::vector<long> values;
  for (int t = 0; t <= bound; ++t) {
    long count = 0;
    for (const auto& m : monomials_of_degree(ideal.num_vars(), t)) {
      if (!ideal.contains(m)) ++count;
    }
    values.push_back(count);
  }
  const Tail tail = values.back() == 0 ? Tail::Zero : Tail::Unspecified;
  return HilbertFunction(std::move(values), tail);
}

std::vector<Monomial> lex_segment(int num_vars, int degree, std::int64_t count) {
  const std::int64_t total = count_monomials(num_vars, degree);
  if (count < 0 || count > total) {
    throw DomainError("segment-size", "lex segment size out of range");
  }
  std::vector<Monomial> all = monomials_of_degree(num_vars, degree);
  all.resize(static_cast<std::size_t>(count), Monomial::unit(num_vars));
  return all;
}

std::vector<Monomial> shadow(const std::vector<Monomial>& monomials) {
  if (monomials.empty()) return {};
  const int degree = monomials.front().degree();
  const int n = monomials.front().num_vars();
  std::set<Monomial, LexGreater> out;
  for (const auto& m : monomials) {
    if (m.degree() != degree) throw DomainError("mixed-degrees", "shadow needs equal-degree monomials");
    for (int i = 1; i <= n; ++i) out.insert(m * Monomial::variable(n, i));
  }
  return {out.begin(), out.end()};
}

namespace {

// Degrees whose ideal piece must be checked: 0..T, plus T+1 for a zero tail.
int last_checked_degree(const HilbertFunction& h) {
  return h.tail() == Tail::Zero ? h.last_index() + 1 : h.last_index();
}

}  // namespace

AdmissibilityCertificate is_admissible(const HilbertFunction& h, int num_vars) {
  if (num_vars < 1) throw DomainError("variable-count", "need at least one variable");
  AdmissibilityCertificate cert;
  const int last = last_checked_degree(h);
  for (int t = 0; t <= last; ++t) {
    const std::int64_t size = count_monomials(num_vars, t) - h(t);
    cert.ideal_sizes.push_back(size);
    if (size < 0) {
      cert.admissible = false;
      cert.failing_degree = t;
      return cert;
    }
  }
  for (int t = 0; t < last; ++t) {
    const std::int64_t shadow_size =
        static_cast<std::int64_t>(shadow(lex_segment(num_vars, t, cert.ideal_sizes[t])).size());
    cert.shadow_sizes.push_back(shadow_size);
    // Shadows of lex segments are lex segments, so containment is a size test.
    if (shadow_size > cert.ideal_sizes[t + 1]) {
      cert.admissible = false;
      cert.failing_degree = t + 1;
      return cert;
    }
  }
  return cert;
}

MonomialIdeal lex_ideal(const HilbertFunction& h, int num_vars) {
  const AdmissibilityCertificate cert = is_admissible(h, num_vars);
  if (!cert) {
    throw DomainError("macaulay-bound",
                      "Hilbert function violates Macaulay's bound at degree " +
                          std::to_string(*cert.failing_degree));
  }
  std::vector<Monomial> generators;
  std::vector<Monomial> previous;
  const int last = last_checked_degree(h);
  for (int t = 0; t <= last; ++t) {
    std::vector<Monomial> segment = lex_segment(num_vars, t, cert.ideal_sizes[t]);
    const std::vector<Monomial> reached = shadow(previous);
    for (const auto& m : segment) {
      if (!std::binary_search(reached.begin(), reached.end(), m, LexGreater{})) {
        generators.push_back(m);
      }
    }
    previous = std::move(segment);
  }
  MonomialIdeal ideal(num_vars, std::move(generators));
  if (h.tail() == Tail::Unspecified) ideal.mark_truncated(h.last_index());
  return ideal;
}

bool is_lex_ideal(const MonomialIdeal& ideal) {
  const int top = ideal.max_generator_degree();
  for (int t = 0; t <= top; ++t) {
    bool outside_seen = false;
    for (const auto& m : monomials_of_degree(ideal.num_vars(), t)) {
      const bool inside = ideal.contains(m);
      if (inside && outside_seen) return false;
      outside_seen = outside_seen || !inside;
    }
  }
  return true;
}

}  // namespace betti
