#include "nilorb/linalg.hpp"

#include <algorithm>

namespace nilorb {

namespace {

std::vector<std::vector<Integer>> integer_rows(const Matrix& a)
{
  if (a.field() != Field::Rational && a.entry_field() != Field::Rational)
    throw FieldMismatch("rank: rational matrix expected (realify first)");
  std::vector<std::vector<Integer>> rows(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j).rational();
      if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j).rational();
      if (sgn(x) != 0) rows[i][j] = x.get_num() * (l / x.get_den());
    }
  }
  return rows;
}

void strip_content(SparseRank::Row& row)
{
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a*x - b*y on sorted sparse rows
SparseRank::Row combine(const Integer& a, const SparseRank::Row& x, const Integer& b,
                        const SparseRank::Row& y)
{
  SparseRank::Row out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      Integer v = a * x[i].second - b * y[j].second;
      if (sgn(v) != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rank(const Matrix& a)
{
  auto m = integer_rows(a);
  std::size_t nr = a.rows(), nc = a.cols(), r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && sgn(m[p][c]) == 0) ++p;
    if (p == nr) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::size_t kernel_dim(const Matrix& a) { return a.cols() - rank(a); }

Signature congruence_signature(const Matrix& s)
{
  if (!s.square()) throw ShapeError("congruence_signature: non-square");
  if (s != conj_transpose(s)) throw std::invalid_argument("congruence_signature: not Hermitian");
  int degree = real_rank(s.field());
  Matrix m = realify(s);
  std::size_t n = m.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    auto swap_index = [&](std::size_t a, std::size_t b) {
      if (a == b) return;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.raw(a, j), m.raw(b, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(m.raw(i, a), m.raw(i, b));
    };
    std::size_t p = k;
    while (p < n && m(p, p).is_zero()) ++p;
    if (p < n) {
      swap_index(p, k);
    } else {
      // zero diagonal: e_a += e_b turns m(a,a) into 2 m(a,b)
      std::size_t a = n, b = n;
      for (std::size_t i = k; i < n && a == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!m(i, j).is_zero()) {
            a = i;
            b = j;
            break;
          }
      if (a == n) throw DegenerateForm("congruence_signature: degenerate form");
      for (std::size_t j = 0; j < n; ++j) m.raw(a, j) += m(b, j);
      for (std::size_t i = 0; i < n; ++i) m.raw(i, a) += m(i, b);
      swap_index(a, k);
    }
    Scalar d = m(k, k);
    (d.sign() > 0 ? sig.p : sig.q) += 1;
    Scalar inv = d.inverse();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      Scalar f = m(r, k) * inv;
      for (std::size_t c = k + 1; c < n; ++c)
        if (!m(k, c).is_zero()) m.raw(r, c) -= f * m(k, c);
    }
  }
  sig.p /= degree;
  sig.q /= degree;
  return sig;
}

SparseRank::SparseRank(std::size_t cols) : cols_(cols), pivot_(cols), forced_zero_(cols, false) {}

bool SparseRank::add_row(Row row)
{
  std::sort(row.begin(), row.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Row merged;
  for (auto& e : row) {
    if (e.first >= cols_) throw ShapeError("SparseRank: column out of range");
    if (forced_zero_[e.first]) continue;
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
  row = std::move(merged);

  while (!row.empty()) {
    std::size_t lead = row.front().first;
    const Row& piv = pivot_[lead];
    if (piv.empty()) {
      strip_content(row);
      if (row.size() == 1) forced_zero_[lead] = true;
      pivot_[lead] = std::move(row);
      ++rank_;
      return true;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), piv.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    Integer a = piv.front().second / g, b = row.front().second / g;
    row = combine(a, row, b, piv);
    strip_content(row);
  }
  return false;
}

}  // namespace nilorb
