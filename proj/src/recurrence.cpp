#include "cubic/recurrence.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace cubic::assemble {

std::vector<std::vector<BigInt>> rational_nullspace(const std::vector<std::vector<BigInt>>& rows, int ncols) {
  std::vector<std::vector<Rat>> m;
  for (const auto& r : rows) {
    std::vector<Rat> v(ncols);
    for (int j = 0; j < ncols; ++j) v[j] = Rat(r[j]);
    m.push_back(std::move(v));
  }
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < ncols && rank < int(m.size()); ++c) {
    int piv = -1;
    for (int i = rank; i < int(m.size()); ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    Rat inv = 1 / m[rank][c];
    for (int j = c; j < ncols; ++j) m[rank][j] *= inv;
    for (int i = 0; i < int(m.size()); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < ncols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<BigInt>> basis;
  for (int fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> v(ncols);
    v[fc] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -m[i][fc];
    BigInt l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<BigInt> iv(ncols);
    BigInt g = 0;
    for (int j = 0; j < ncols; ++j) {
      Rat t = v[j] * Rat(l);
      iv[j] = t.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[j].get_mpz_t());
    }
    if (g > 1)
      for (auto& x : iv) x /= g;
    basis.push_back(std::move(iv));
  }
  return basis;
}

BigInt Recurrence::eval(int i, const BigInt& n) const {
  BigInt r = 0;
  for (int j = degree; j >= 0; --j) r = r * n + p[i][j];
  return r;
}

BigInt Recurrence::residual(const std::vector<BigInt>& terms, int first, int n) const {
  BigInt s = 0;
  for (int i = 0; i <= order; ++i) s += eval(i, BigInt(n)) * terms.at(n + i - first);
  return s;
}

std::string Recurrence::to_string() const {
  std::ostringstream os;
  bool first_term = true;
  for (int i = 0; i <= order; ++i) {
    std::ostringstream poly;
    bool any = false;
    for (int j = degree; j >= 0; --j) {
      if (p[i][j] == 0) continue;
      BigInt c = p[i][j];
      if (any) poly << (c < 0 ? " - " : " + ");
      else if (c < 0) poly << "-";
      BigInt a = abs(c);
      if (j == 0 || a != 1) poly << a.get_str();
      if (j > 0) poly << (j == 0 || a != 1 ? "*" : "") << "n" << (j > 1 ? "^" + std::to_string(j) : "");
      any = true;
    }
    if (!any) continue;
    if (!first_term) os << " + ";
    os << "(" << poly.str() << ")*a(n" << (i ? "+" + std::to_string(i) : "") << ")";
    first_term = false;
  }
  os << " = 0";
  return os.str();
}

nlohmann::json Recurrence::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& pi : p) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : pi) row.push_back(c.get_str());
    cs.push_back(row);
  }
  return {{"order", order},
          {"degree", degree},
          {"first_index", first_index},
          {"training_equations", training_equations},
          {"holdout_equations", holdout_equations},
          {"coefficients", cs},
          {"text", to_string()}};
}

namespace {

std::vector<BigInt> equation_row(const std::vector<BigInt>& a, int first, int n, int r, int d) {
  std::vector<BigInt> row;
  row.reserve((r + 1) * (d + 1));
  for (int i = 0; i <= r; ++i) {
    BigInt np = 1;
    for (int j = 0; j <= d; ++j) {
      row.push_back(np * a[n + i - first]);
      np *= n;
    }
  }
  return row;
}

}  // namespace

std::optional<Recurrence> guess_recurrence(const std::vector<BigInt>& terms, int first_index, int max_order,
                                           int max_degree, int holdout) {
  const int M = int(terms.size());
  if (max_order < 1 || max_degree < 0 || holdout < 1) throw std::invalid_argument("bad recurrence search bounds");
  if ((max_order + 1) * (max_degree + 1) + holdout > M)
    throw InsufficientTerms("need (max_order+1)(max_degree+1) + holdout = " +
                            std::to_string((max_order + 1) * (max_degree + 1) + holdout) + " terms, have " +
                            std::to_string(M));
  std::vector<std::tuple<int, int, int>> shapes;
  for (int r = 1; r <= max_order; ++r)
    for (int d = 0; d <= max_degree; ++d) shapes.emplace_back((r + 1) * (d + 1), r, d);
  std::sort(shapes.begin(), shapes.end());

  for (auto [unknowns, r, d] : shapes) {
    int equations = M - r;
    int training = equations - holdout;
    if (training < unknowns) continue;  // underdetermined: any fit would be vacuous
    std::vector<std::vector<BigInt>> rows;
    for (int k = 0; k < training; ++k) rows.push_back(equation_row(terms, first_index, first_index + k, r, d));
    auto basis = rational_nullspace(rows, unknowns);
    for (const auto& v : basis) {
      Recurrence rec;
      rec.order = r;
      rec.degree = d;
      rec.first_index = first_index;
      rec.p.assign(r + 1, std::vector<BigInt>(d + 1));
      for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= d; ++j) rec.p[i][j] = v[i * (d + 1) + j];
      // trim vanishing leading polynomials
      while (rec.order > 0 && std::all_of(rec.p.back().begin(), rec.p.back().end(), [](const BigInt& c) { return c == 0; })) {
        rec.p.pop_back();
        --rec.order;
      }
      int nonzero_polys = 0;
      for (const auto& pi : rec.p)
        if (std::any_of(pi.begin(), pi.end(), [](const BigInt& c) { return c != 0; })) ++nonzero_polys;
      if (nonzero_polys < 2) continue;
      bool ok = true;
      for (int k = training; k < M - rec.order && ok; ++k)
        if (rec.residual(terms, first_index, first_index + k) != 0) ok = false;
      if (!ok) continue;
      const auto& lead = rec.p.back();
      int j = d;
      while (j > 0 && lead[j] == 0) --j;
      if (lead[j] < 0)
        for (auto& pi : rec.p)
          for (auto& c : pi) c = -c;
      rec.training_equations = training;
      rec.holdout_equations = M - rec.order - training;
      return rec;
    }
  }
  return std::nullopt;
}

std::optional<Recurrence> guess_recurrence(const CountTable& table, int max_order, int max_degree, int holdout) {
  std::vector<BigInt> terms;
  int first = -1;
  for (const auto& row : table.rows) {
    if (row.n % 2) continue;
    if (first < 0) first = row.n / 2;
    terms.push_back(row.count);
  }
  if (first < 0) throw InsufficientTerms("empty count table");
  return guess_recurrence(terms, first, max_order, max_degree, holdout);
}

}  // namespace cubic::assemble
