#include "betti/codim2.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "betti/detail/bmatching.hpp"
#include "betti/errors.hpp"

namespace betti {

long CodimTwoProfile::e_at(int j) const {
  if (j < 1 || j >= static_cast<int>(e.size())) return 0;
  return e[j];
}

CodimTwoProfile profile_from_hf(const HilbertFunction& input) {
  auto reject = [](const std::string& why) -> DomainError {
    return DomainError("codim2-shape", "not a codimension-two Artinian Hilbert function: " + why);
  };
  if (input.tail() != Tail::Zero) throw reject("tail must be zero");
  const HilbertFunction h = input.normalized();
  const int s = h.socle_degree();
  if (s < 1) throw reject("socle degree must be at least 1");

  int d = 0;
  while (d <= s && h(d) == d + 1) ++d;
  // h(t) = t+1 for t < d, then d = h(d-1) >= h(d) >= ... >= h(s) >= 1.
  if (h(d) > d) throw reject("h grows faster than in two variables");
  for (int t = d; t <= s; ++t) {
    if (h(t) > h(t - 1)) throw reject("h must be non-increasing after the initial degree");
  }

  CodimTwoProfile p;
  p.d = d;
  p.socle = s;
  p.h = h;
  p.e.assign(static_cast<std::size_t>(s) + 2, 0);
  for (int j = 1; j <= s + 1; ++j) p.e[j] = std::labs(h(j) - h(j - 1));

  long tail_sum = 0;
  for (int j = d; j <= s + 1; ++j) tail_sum += p.e[j];
  if (tail_sum != d) throw InvariantError("e-vector of a codimension-two profile must sum to d");

  p.lex = lex_ideal(h, 2);
  const auto& gens = p.lex.generators();
  if (static_cast<int>(gens.size()) != d + 1) {
    throw InvariantError("codimension-two lex ideal must have d+1 generators");
  }
  for (int i = 0; i <= d; ++i) {
    const Monomial& g = gens[i];
    if (g.exponent(1) != d - i) throw InvariantError("lex generators are not x^{d-i} y^{k_i}");
    p.k.push_back(g.exponent(2));
    if (i > 0 && p.k[i] <= p.k[i - 1]) throw InvariantError("k must be strictly increasing");
  }
  if (p.k[0] != 0) throw InvariantError("k_0 must be 0");

  // Generator degrees must match the e-vector count: e_d+1 in degree d,
  // e_j in degree j > d.
  std::vector<long> per_degree(static_cast<std::size_t>(s) + 2, 0);
  for (int i = 0; i <= d; ++i) ++per_degree.at(p.generator_degree(i));
  for (int j = d; j <= s + 1; ++j) {
    const long expected = p.e[j] + (j == d ? 1 : 0);
    if (per_degree[j] != expected) throw InvariantError("generator degrees disagree with e-vector");
  }
  return p;
}

BettiTable resolution_from_profile(const CodimTwoProfile& p) {
  std::vector<BettiRow> rows(3);
  rows[0][0] = 1;
  rows[1][p.d] = p.e_at(p.d) + 1;
  for (int j = 1; p.d + j <= p.socle + 1; ++j) rows[1][p.d + j] += p.e_at(p.d + j);
  for (int j = 0; p.d + j <= p.socle + 1; ++j) rows[2][p.d + j + 1] += p.e_at(p.d + j);
  return BettiTable(TableKind::Quotient, std::move(rows));
}

PolyMatrix hb_matrix(const CodimTwoProfile& p) {
  PolyMatrix m(p.d + 1, p.d, 2);
  const Monomial x = Monomial::variable(2, 1);
  for (int i = 1; i <= p.d; ++i) {
    m.set(i - 1, i - 1, Polynomial(Monomial({0, p.k[i] - p.k[i - 1]})));
    m.set(i, i - 1, Polynomial(x, -1));
  }
  return m;
}

int position_value(const CodimTwoProfile& p, const MatrixPosition& pos) {
  if (pos.row < 1 || pos.row > p.d + 1 || pos.col < 1 || pos.col > p.d) {
    throw DomainError("inadmissible-position", "position outside the Hilbert-Burch matrix");
  }
  // Column c is the syzygy of degree deg(gen_c) + 1; row r is generator r-1.
  const int column_shift = p.generator_degree(pos.col) + 1;
  const int row_shift = p.generator_degree(pos.row - 1);
  return column_shift - row_shift;
}

std::vector<AdmissiblePosition> admissible_positions(const CodimTwoProfile& p) {
  std::vector<AdmissiblePosition> out;
  for (int r = 1; r <= p.d + 1; ++r) {
    for (int c = 1; c <= p.d; ++c) {
      const int v = position_value(p, {r, c});
      if (v <= 0) out.push_back({{r, c}, v});
    }
  }
  return out;
}

std::vector<std::vector<MatrixPosition>> admissible_position_sets(const CodimTwoProfile& p) {
  const auto candidates = admissible_positions(p);
  std::vector<std::vector<MatrixPosition>> out;
  std::vector<MatrixPosition> current;
  std::set<int> rows_used;
  std::set<int> cols_used;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    out.push_back(current);
    for (std::size_t k = from; k < candidates.size(); ++k) {
      const auto& pos = candidates[k].position;
      if (rows_used.count(pos.row) || cols_used.count(pos.col)) continue;
      current.push_back(pos);
      rows_used.insert(pos.row);
      cols_used.insert(pos.col);
      self(self, k + 1);
      current.pop_back();
      rows_used.erase(pos.row);
      cols_used.erase(pos.col);
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<MatrixPosition> maximum_position_set(const CodimTwoProfile& p) {
  const auto candidates = admissible_positions(p);
  if (candidates.empty()) return {};
  std::vector<long> rows(static_cast<std::size_t>(p.d) + 1, 1);
  std::vector<long> cols(static_cast<std::size_t>(p.d), 1);
  std::vector<detail::BipartiteEdge> edges;
  for (const auto& a : candidates) edges.push_back({a.position.row - 1, a.position.col - 1});
  const auto flow = detail::max_bmatching(rows, cols, edges);
  std::vector<MatrixPosition> out;
  for (std::size_t k = 0; k < flow.size(); ++k) {
    if (flow[k] > 0) out.push_back(candidates[k].position);
  }
  return out;
}

std::vector<HilbertFunction> codim2_hilbert_functions(int max_socle) {
  std::vector<HilbertFunction> out;
  for (int s = 1; s <= max_socle; ++s) {
    std::vector<std::vector<long>> found;
    for (int d = 1; d <= s + 1; ++d) {
      std::vector<long> values;
      for (int t = 0; t < d; ++t) values.push_back(t + 1);
      if (d == s + 1) {
        found.push_back(values);
        continue;
      }
      // Non-increasing tails h_d >= ... >= h_s >= 1 with h_d <= d.
      auto extend = [&](auto&& self, long ceiling) -> void {
        if (static_cast<int>(values.size()) == s + 1) {
          found.push_back(values);
          return;
        }
        for (long v = ceiling; v >= 1; --v) {
          values.push_back(v);
          self(self, v);
          values.pop_back();
        }
      };
      extend(extend, d);
    }
    std::sort(found.begin(), found.end());
    for (auto& v : found) out.emplace_back(std::move(v), Tail::Zero);
  }
  return out;
}

Realization realize(const CodimTwoProfile& p, std::span<const MatrixPosition> positions) {
  std::set<int> rows_used;
  std::set<int> cols_used;
  PolyMatrix m = hb_matrix(p);
  for (const auto& pos : positions) {
    if (position_value(p, pos) > 0) {
      throw DomainError("inadmissible-position",
                        "position (" + std::to_string(pos.row) + "," + std::to_string(pos.col) +
                            ") has a positive degree-matrix value");
    }
    if (!rows_used.insert(pos.row).second || !cols_used.insert(pos.col).second) {
      throw DomainError("position-conflict",
                        "positions must use distinct rows and columns (one cancellation each)");
    }
    const Polynomial& entry = m.at(pos.row - 1, pos.col - 1);
    m.set(pos.row - 1, pos.col - 1, entry + Polynomial::constant(2, 1));
  }

  Realization out{m, {}};
  for (int r = 0; r <= p.d; ++r) {
    Polynomial minor = determinant(m.without_row(r));
    // 1-based row i = r+1; sign (-1)^{d+i+1} makes unperturbed minors monic.
    if ((p.d + r) % 2 == 1) minor = -minor;
    out.generators.push_back(std::move(minor));
  }
  return out;
}

bool gorenstein_admissible_codim2(const HilbertFunction& h) {
  const CodimTwoProfile p = profile_from_hf(h);
  return std::all_of(p.e.begin() + 1, p.e.end(), [](long v) { return v <= 1; });
}

}  // namespace betti
