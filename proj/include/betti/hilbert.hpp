#pragma once

#include <optional>
#include <vector>

#include "betti/monomial.hpp"

namespace betti {

enum class Tail {
  Zero,         ///< Artinian: h(t) = 0 beyond the stored values.
  Unspecified,  ///< Known only through the last stored degree.
};

/// Finite list h(0), ..., h(T) with h(0) = 1 (cyclic quotients only).
class HilbertFunction {
 public:
  HilbertFunction(std::vector<long> values, Tail tail);

  const std::vector<long>& values() const { return values_; }
  Tail tail() const { return tail_; }
  int last_index() const { return static_cast<int>(values_.size()) - 1; }

  /// h(t); beyond T this is 0 for a Zero tail and an error otherwise.
  long operator()(int t) const;

  /// Largest t with h(t) > 0. Only defined for a Zero tail.
  int socle_degree() const;

  /// Trailing zeros removed for a Zero tail; equality compares this form.
  HilbertFunction normalized() const;

  bool operator==(const HilbertFunction& other) const;

 private:
  std::vector<long> values_;
  Tail tail_;
};

/// Minimal monomial generators in canonical order (ascending degree, then
/// lex-greater first). Redundant generators passed to the constructor are
/// dropped.
class MonomialIdeal {
 public:
  MonomialIdeal(int num_vars, std::vector<Monomial> generators);

  int num_vars() const { return num_vars_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  int max_generator_degree() const;

  bool contains(const Monomial& m) const;

  /// Set by lex_ideal for Unspecified tails: the ideal is only correct through
  /// degree valid_through(), and resolution routines refuse it.
  bool truncated() const { return valid_through_.has_value(); }
  std::optional<int> valid_through() const { return valid_through_; }
  void mark_truncated(int valid_through) { valid_through_ = valid_through; }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int num_vars_;
  std::vector<Monomial> generators_;
  std::optional<int> valid_through_;
};

/// h(t) = number of degree-t monomials outside L, for t = 0..bound.
HilbertFunction hf_of_quotient(const MonomialIdeal& ideal, int bound);

/// The `count` lex-greatest monomials of degree t.
std::vector<Monomial> lex_segment(int num_vars, int degree, std::int64_t count);

/// {x_i * m}: the degree t+1 monomials reachable from a degree-t set, in lex
/// descending order.
std::vector<Monomial> shadow(const std::vector<Monomial>& monomials);

/// Per-degree evidence for (in)admissibility. `ideal_sizes[t]` is
/// C(n-1+t,t) - h(t) and `shadow_sizes[t]` the size of the shadow of the
/// degree-t lex segment.
struct AdmissibilityCertificate {
  bool admissible = true;
  std::optional<int> failing_degree;
  std::vector<std::int64_t> ideal_sizes;
  std::vector<std::int64_t> shadow_sizes;

  explicit operator bool() const { return admissible; }
};

/// Macaulay's growth condition, decided with lex segments and shadows.
AdmissibilityCertificate is_admissible(const HilbertFunction& h, int num_vars);

/// The unique lex ideal with Hilbert function h. Throws DomainError with
/// reason "macaulay-bound" for inadmissible input; Unspecified tails give a
/// truncated ideal.
MonomialIdeal lex_ideal(const HilbertFunction& h, int num_vars);

/// True when every degree piece of the ideal is a lex-initial segment.
bool is_lex_ideal(const MonomialIdeal& ideal);

}  // namespace betti
