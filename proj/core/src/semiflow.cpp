#include "petristruct/semiflow.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "petristruct/errors.hpp"
#include "petristruct/nonneg_kernel.hpp"

namespace petristruct {

std::string to_string(Ring r) {
  switch (r) {
    case Ring::integers: return "Z";
    case Ring::nonneg_rationals: return "Q+";
    case Ring::naturals: return "N";
  }
  return "?";
}

bool is_semiflow(const Net& net, const IntVector& v) {
  if (v.size() != net.num_places()) {
    throw domain_error("semiflow candidate has " + std::to_string(v.size()) + " entries, net has " +
                       std::to_string(net.num_places()) + " places");
  }
  for (std::size_t t = 0; t < net.num_transitions(); ++t) {
    if (!dot(v, net.effect_column(t)).is_zero()) return false;
  }
  return true;
}

Semiflow::Semiflow(const Net& net, IntVector coeffs) : coeffs_(std::move(coeffs)) {
  if (!is_semiflow(net, coeffs_)) throw domain_error("not a semiflow: " + to_string(coeffs_));
  if (is_zero(coeffs_)) throw domain_error("zero vector is not a generator");
}

std::vector<IntVector> GeneratingSet::vectors() const {
  std::vector<IntVector> r;
  for (const auto& e : elements) r.push_back(e.coeffs());
  return r;
}

GeneratingSet z_flow_basis(const Net& net) {
  const std::size_t d = net.num_places();
  // Rows of (Post - Pre)^T, reduced in place.
  IntMatrix m;
  for (std::size_t t = 0; t < net.num_transitions(); ++t) m.push_back(net.effect_column(t));

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < m.size(); ++c) {
    std::size_t i = r;
    while (i < m.size() && m[i][c].is_zero()) ++i;
    if (i == m.size()) continue;
    std::swap(m[r], m[i]);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == r || m[k][c].is_zero()) continue;
      const Integer a = m[r][c], b = m[k][c];
      for (std::size_t j = 0; j < d; ++j) m[k][j] = a * m[k][j] - b * m[r][j];
      m[k] = primitive(std::move(m[k]));
    }
    pivot_col.push_back(c);
    ++r;
  }

  Integer l = 1;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) {
    l = boost::multiprecision::lcm(l, abs(m[k][pivot_col[k]]));
  }
  GeneratingSet out;
  out.ring = Ring::integers;
  std::vector<IntVector> basis;
  for (std::size_t fc = 0; fc < d; ++fc) {
    if (std::find(pivot_col.begin(), pivot_col.end(), fc) != pivot_col.end()) continue;
    IntVector x(d);
    x[fc] = l;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
      x[pivot_col[k]] = -m[k][fc] * l / m[k][pivot_col[k]];
    }
    x = primitive(std::move(x));
    auto first = std::find_if(x.begin(), x.end(), [](const Integer& v) { return !v.is_zero(); });
    if (first != x.end() && first->sign() < 0) {
      for (auto& v : x) v = -v;
    }
    basis.push_back(std::move(x));
  }
  std::sort(basis.begin(), basis.end());
  for (auto& b : basis) out.elements.emplace_back(net, std::move(b));
  return out;
}

GeneratingSet nonneg_generating_set(const Net& net) {
  GeneratingSet out;
  out.ring = Ring::naturals;
  out.minimal_semiflows = true;
  for (auto& v : hilbert_basis(incidence(net))) out.elements.emplace_back(net, std::move(v));
  // Minimal semiflows have minimal support exactly when no other is smaller
  // on supports; report the flag only when it holds for every element.
  out.minimal_supports = minimal_supports(out).size() == out.elements.size();
  return out;
}

GeneratingSet minimal_support_generating_set(const Net& net) {
  GeneratingSet out;
  out.ring = Ring::nonneg_rationals;
  out.minimal_supports = true;
  out.minimal_semiflows = true;
  for (auto& v : extreme_rays(incidence(net))) out.elements.emplace_back(net, std::move(v));
  return out;
}

SupportSplit support_split(const IntVector& v) {
  SupportSplit s;
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (v[p].is_zero()) continue;
    s.support.insert(p);
    (v[p].sign() > 0 ? s.positive : s.negative).insert(p);
  }
  return s;
}

std::vector<MinimalSupport> minimal_supports(const GeneratingSet& gens) {
  if (gens.ring != Ring::naturals) {
    throw precondition_error("minimal_supports expects the generating set over N, got " + to_string(gens.ring));
  }
  std::vector<PlaceSet> supports;
  for (const auto& e : gens.elements) supports.push_back(support_split(e.coeffs()).support);
  std::vector<MinimalSupport> out;
  for (std::size_t i = 0; i < supports.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < supports.size() && minimal; ++j) {
      if (i == j) continue;
      const bool sub = std::includes(supports[i].begin(), supports[i].end(), supports[j].begin(), supports[j].end());
      minimal = !(sub && supports[j] != supports[i]);
    }
    if (!minimal) continue;
    // Equal minimal supports carry proportional semiflows; keep the smallest.
    auto dup = std::find_if(out.begin(), out.end(), [&](const MinimalSupport& m) { return m.support == supports[i]; });
    if (dup == out.end()) {
      out.push_back({supports[i], gens.elements[i]});
    } else if (leq(gens.elements[i].coeffs(), dup->semiflow.coeffs())) {
      dup->semiflow = gens.elements[i];
    }
  }
  return out;
}

static void check_nonneg_semiflow(const Net& net, const IntVector& f) {
  if (!is_semiflow(net, f)) throw precondition_error("not a semiflow: " + to_string(f));
  if (!all_nonnegative(f)) throw precondition_error("semiflow has a negative coordinate: " + to_string(f));
}

DecompositionResult decompose_over_n(const Net& net, const IntVector& f, const GeneratingSet& gens) {
  check_nonneg_semiflow(net, f);
  DecompositionResult res;
  res.residual = f;
  for (const auto& e : gens.elements) {
    const IntVector& g = e.coeffs();
    if (!all_nonnegative(g)) throw precondition_error("generator over N has a negative coordinate");
    // Largest k with residual - k*g >= 0.
    std::optional<Integer> k;
    for (std::size_t p = 0; p < g.size(); ++p) {
      if (g[p].is_zero()) continue;
      Integer q = res.residual[p] / g[p];
      if (!k || q < *k) k = q;
    }
    const Integer kk = k.value_or(0);
    if (!kk.is_zero()) {
      for (std::size_t p = 0; p < g.size(); ++p) res.residual[p] -= kk * g[p];
    }
    res.coefficients.emplace_back(kk);
  }
  return res;
}

namespace {

// Solves sum_j x_j cols[j] = f exactly. Returns nullopt when the columns are
// dependent or the system is inconsistent.
std::optional<std::vector<Rational>> solve_independent(const std::vector<const IntVector*>& cols,
                                                       const IntVector& f) {
  const std::size_t d = f.size(), k = cols.size();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(k + 1));
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t j = 0; j < k; ++j) a[p][j] = Rational((*cols[j])[p]);
    a[p][k] = Rational(f[p]);
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t i = row;
    while (i < d && a[i][c] == 0) ++i;
    if (i == d) return std::nullopt;
    std::swap(a[row], a[i]);
    const Rational piv = a[row][c];
    for (auto& v : a[row]) v /= piv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational m = a[r][c];
      for (std::size_t j = c; j <= k; ++j) a[r][j] -= m * a[row][j];
    }
    ++row;
  }
  for (std::size_t r = row; r < d; ++r) {
    if (a[r][k] != 0) return std::nullopt;
  }
  std::vector<Rational> x(k);
  for (std::size_t c = 0; c < k; ++c) x[c] = a[c][k];
  return x;
}

}  // namespace

DecompositionResult decompose_over_qplus(const Net& net, const IntVector& f, const std::vector<IntVector>& reps) {
  check_nonneg_semiflow(net, f);
  const PlaceSet fs = support_split(f).support;
  for (const auto& r : reps) {
    check_nonneg_semiflow(net, r);
    const PlaceSet rs = support_split(r).support;
    if (!std::includes(fs.begin(), fs.end(), rs.begin(), rs.end())) {
      throw precondition_error("representative " + to_string(r) + " is not supported inside ||f||");
    }
  }
  DecompositionResult res;
  res.coefficients.assign(reps.size(), Rational(0));
  res.residual = f;
  if (is_zero(f)) return res;

  const std::size_t k = reps.size();
  const std::size_t max_size = std::min(k, f.size());
  // Subsets in order of size, then lexicographically.
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      std::vector<const IntVector*> cols;
      for (auto i : pick) cols.push_back(&reps[i]);
      if (auto x = solve_independent(cols, f)) {
        if (std::all_of(x->begin(), x->end(), [](const Rational& v) { return v >= 0; })) {
          for (std::size_t j = 0; j < size; ++j) res.coefficients[pick[j]] = (*x)[j];
          std::fill(res.residual.begin(), res.residual.end(), Integer(0));
          return res;
        }
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == k - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw precondition_error("no non-negative rational decomposition of " + to_string(f) +
                           " over the given representatives");
}

std::string tableau(const Net& net, const GeneratingSet& gens) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const auto& p : net.places()) header.push_back(p);
  cells.push_back(header);
  for (std::size_t i = 0; i < gens.elements.size(); ++i) {
    std::vector<std::string> row{"f" + std::to_string(i + 1)};
    for (const auto& v : gens.elements[i].coeffs()) row.push_back(v.str());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << "  ";
      out << std::string(width[j] - row[j].size(), ' ') << row[j];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace petristruct
