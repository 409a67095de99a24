#include "lcert/homology.hpp"

#include <stdexcept>
#include <utility>

namespace lcert {

namespace {

Integer content(const LaurentPoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
  return g;
}

LaurentPoly divide_content(const LaurentPoly& p, const Integer& g) {
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = iota(1);
    return;
  }
  if (auto q = divide_exact(num_, den_)) {
    num_ = std::move(*q);
    den_ = iota(1);
    return;
  }
  // Move the unit part of the denominator into the numerator.
  const Associate a = normalize_associate(den_);
  den_ = a.canonical;
  num_ = num_ * LaurentPoly::from_unit(a.unit.inverse());
  Integer g = gcd(content(num_), content(den_));
  if (g > 1) {
    num_ = divide_content(num_, g);
    den_ = divide_content(den_, g);
  }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<PolyMatrix> differentials)
    : ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
  if (ranks_.empty()) throw std::invalid_argument("chain complex needs at least one module");
  if (diffs_.size() + 1 != ranks_.size())
    throw std::invalid_argument("chain complex: " + std::to_string(ranks_.size()) +
                                " modules need " + std::to_string(ranks_.size() - 1) +
                                " differentials, got " + std::to_string(diffs_.size()));
  for (std::size_t i = 1; i <= diffs_.size(); ++i) {
    const PolyMatrix& d = diffs_[i - 1];
    if (d.rows() != ranks_[i - 1] || d.cols() != ranks_[i])
      throw std::invalid_argument("chain complex: d_" + std::to_string(i) + " must be " +
                                  std::to_string(ranks_[i - 1]) + "x" +
                                  std::to_string(ranks_[i]));
    if (i >= 2 && !(diffs_[i - 2] * d).is_zero())
      throw std::invalid_argument("chain complex: d_" + std::to_string(i - 1) + " d_" +
                                  std::to_string(i) + " is not zero");
  }
}

std::size_t rank_qt(const PolyMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<RationalFunction> w;
  w.reserve(rows * cols);
  for (const auto& e : m.row_major()) w.emplace_back(e);
  auto at = [&](std::size_t i, std::size_t j) -> RationalFunction& { return w[i * cols + j]; };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (at(i, col).is_zero()) continue;
      const RationalFunction f = at(i, col) / at(rank, col);
      for (std::size_t j = col; j < cols; ++j) at(i, j) = at(i, j) - f * at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> betti_qt(const ChainComplex& c) {
  const std::size_t n = c.top_degree();
  std::vector<std::size_t> image_rank(n + 2, 0);  // image_rank[i] = rank d_i
  for (std::size_t i = 1; i <= n; ++i) image_rank[i] = rank_qt(c.differential(i));
  std::vector<std::size_t> betti(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t kernel = c.ranks()[i] - image_rank[i];
    betti[i] = kernel - image_rank[i + 1];
  }
  return betti;
}

LaurentPoly torsion_order(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("torsion_order: presentation is not square");
  const LaurentPoly d = determinant(m);
  if (d.is_zero())
    throw std::invalid_argument("torsion_order: presentation is not of full rank over Q(t)");
  return normalize_associate(d).canonical;
}

bool euler_check(const ChainComplex& c) {
  long chain_side = 0;
  long homology_side = 0;
  const auto betti = betti_qt(c);
  for (std::size_t i = 0; i <= c.top_degree(); ++i) {
    const long s = i % 2 == 0 ? 1 : -1;
    chain_side += s * static_cast<long>(c.ranks()[i]);
    homology_side += s * static_cast<long>(betti[i]);
  }
  return chain_side == homology_side;
}

}  // namespace lcert
