#include "petristruct/nonneg_kernel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "petristruct/errors.hpp"

namespace petristruct {

namespace {

std::size_t column_count(const IntMatrix& a) {
  const std::size_t m = a.empty() ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != m) throw domain_error("coefficient matrix rows differ in length");
  }
  return m;
}

// Keeps the <=-minimal elements, removing duplicates.
std::vector<IntVector> minimal_elements(std::vector<IntVector> v) {
  auto total = [](const IntVector& x) {
    Integer s = 0;
    for (const auto& e : x) s += e;
    return s;
  };
  std::vector<std::pair<Integer, IntVector>> keyed;
  keyed.reserve(v.size());
  for (auto& x : v) keyed.emplace_back(total(x), std::move(x));
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  // Anything below x has a strictly smaller total, so earlier survivors suffice.
  std::vector<IntVector> out;
  for (auto& [s, x] : keyed) {
    const bool dominated =
        std::any_of(out.begin(), out.end(), [&](const IntVector& m) { return leq(m, x); });
    if (!dominated) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

std::vector<IntVector> minimal_balanced_solutions(const IntVector& pos, const IntVector& neg) {
  const std::size_t np = pos.size(), nn = neg.size(), n = np + nn;
  for (const auto& w : pos) {
    if (w.sign() <= 0) throw domain_error("minimal_balanced_solutions: weights must be positive");
  }
  for (const auto& w : neg) {
    if (w.sign() <= 0) throw domain_error("minimal_balanced_solutions: weights must be positive");
  }
  std::vector<IntVector> found;
  if (np == 0 || nn == 0) return found;

  // Breadth-first by total count. A partial vector with positive balance is
  // extended by a negative-side unit and vice versa; every minimal solution
  // admits such an ordering of its units starting from a positive one.
  struct State {
    IntVector x;
    Integer balance;
  };
  std::vector<State> level;
  for (std::size_t i = 0; i < np; ++i) {
    IntVector x(n);
    x[i] = 1;
    level.push_back({std::move(x), pos[i]});
  }
  while (!level.empty()) {
    std::set<IntVector> seen;
    std::vector<State> next;
    for (auto& st : level) {
      const bool pos_side = st.balance.sign() < 0;
      const std::size_t lo = pos_side ? 0 : np;
      const std::size_t hi = pos_side ? np : n;
      for (std::size_t k = lo; k < hi; ++k) {
        IntVector y = st.x;
        y[k] += 1;
        if (std::any_of(found.begin(), found.end(), [&](const IntVector& m) { return leq(m, y); })) continue;
        if (!seen.insert(y).second) continue;
        Integer b = pos_side ? Integer(st.balance + pos[k]) : Integer(st.balance - neg[k - np]);
        next.push_back({std::move(y), std::move(b)});
      }
    }
    level.clear();
    // Solutions of this level are minimal: anything smaller was found earlier.
    std::vector<IntVector> sols;
    for (auto& st : next) {
      if (st.balance.is_zero()) {
        sols.push_back(std::move(st.x));
      } else {
        level.push_back(std::move(st));
      }
    }
    found.insert(found.end(), sols.begin(), sols.end());
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<IntVector> hilbert_basis(const IntMatrix& coefficients) {
  const std::size_t n = coefficients.size();
  const std::size_t m = column_count(coefficients);
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  for (std::size_t j = 0; j < m && !gens.empty(); ++j) {
    IntVector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = coefficients[i][j];

    std::vector<IntVector> next, pos_gens, neg_gens;
    IntVector pos_w, neg_w;
    for (auto& g : gens) {
      Integer w = dot(g, col);
      if (w.is_zero()) {
        next.push_back(std::move(g));
      } else if (w.sign() > 0) {
        pos_w.push_back(std::move(w));
        pos_gens.push_back(std::move(g));
      } else {
        neg_w.push_back(-w);
        neg_gens.push_back(std::move(g));
      }
    }
    for (const auto& c : minimal_balanced_solutions(pos_w, neg_w)) {
      IntVector x(n);
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        const IntVector& g = k < pos_gens.size() ? pos_gens[k] : neg_gens[k - pos_gens.size()];
        for (std::size_t i = 0; i < n; ++i) x[i] += c[k] * g[i];
      }
      next.push_back(std::move(x));
    }
    gens = minimal_elements(std::move(next));
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

std::vector<IntVector> extreme_rays(const IntMatrix& coefficients) {
  const std::size_t n = coefficients.size();
  const std::size_t m = column_count(coefficients);

  // Row = (residual over the m columns, combination over the n variables).
  struct Row {
    IntVector residual;
    IntVector combo;
    std::vector<bool> support;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Row r{coefficients[i], IntVector(n), std::vector<bool>(n, false)};
    r.combo[i] = 1;
    r.support[i] = true;
    rows.push_back(std::move(r));
  }
  auto subset = [](const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] && !b[i]) return false;
    }
    return true;
  };

  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Row> next;
    std::vector<const Row*> plus, minus;
    for (const auto& r : rows) {
      const int s = r.residual[j].sign();
      if (s == 0) {
        next.push_back(r);
      } else {
        (s > 0 ? plus : minus).push_back(&r);
      }
    }
    const std::size_t kept = next.size();
    for (const Row* a : plus) {
      for (const Row* b : minus) {
        const Integer wa = -b->residual[j];
        const Integer wb = a->residual[j];
        Row c{IntVector(m), IntVector(n), std::vector<bool>(n, false)};
        for (std::size_t k = 0; k < m; ++k) c.residual[k] = wa * a->residual[k] + wb * b->residual[k];
        for (std::size_t k = 0; k < n; ++k) {
          c.combo[k] = wa * a->combo[k] + wb * b->combo[k];
          c.support[k] = !c.combo[k].is_zero();
        }
        // Candidates whose support contains a surviving row's support are not extreme.
        bool redundant = false;
        for (std::size_t r = 0; r < kept && !redundant; ++r) redundant = subset(next[r].support, c.support);
        if (redundant) continue;
        Integer g = boost::multiprecision::gcd(content(c.residual), content(c.combo));
        if (g > 1) {
          for (auto& x : c.residual) x /= g;
          for (auto& x : c.combo) x /= g;
        }
        next.push_back(std::move(c));
      }
    }
    // Drop rows whose support strictly contains another's; collapse equal supports.
    std::vector<bool> drop(next.size(), false);
    for (std::size_t a = 0; a < next.size(); ++a) {
      for (std::size_t b = 0; b < next.size() && !drop[a]; ++b) {
        if (a == b || !subset(next[b].support, next[a].support)) continue;
        drop[a] = next[b].support != next[a].support || b < a;
      }
    }
    std::vector<Row> pruned;
    for (std::size_t a = 0; a < next.size(); ++a) {
      if (!drop[a]) pruned.push_back(std::move(next[a]));
    }
    rows = std::move(pruned);
  }
  std::vector<IntVector> out;
  for (auto& r : rows) out.push_back(primitive(std::move(r.combo)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace petristruct
