#pragma once

// Exact Laurent polynomial arithmetic: one variable over the integers,
// the quarter-exponent variant used for the Jones substitution, and the
// two-variable ring Z[s,s^-1,t,t^-1] together with dense matrices over it.
// All arithmetic is integer-exact; zero coefficients are never stored.

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vknot {

using Coeff = long long;

namespace detail {

inline void append_term_text(std::string& out, Coeff c, const std::string& vars) {
  bool first = out.empty();
  Coeff mag = c < 0 ? -c : c;
  if (first)
    out += (c < 0 ? "-" : "");
  else
    out += (c < 0 ? " - " : " + ");
  if (mag != 1 || vars.empty()) {
    out += std::to_string(mag);
    if (!vars.empty()) out += " ";
  }
  out += vars;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// One-variable Laurent polynomial with integer exponents.
// ---------------------------------------------------------------------------

class Laurent1 {
 public:
  Laurent1() = default;

  static Laurent1 constant(Coeff c) { return term(0, c); }

  static Laurent1 term(int exponent, Coeff c) {
    Laurent1 p;
    if (c != 0) p.terms_[exponent] = c;
    return p;
  }

  static Laurent1 zero() { return {}; }
  static Laurent1 one() { return constant(1); }

  bool is_zero() const { return terms_.empty(); }

  const std::map<int, Coeff>& terms() const { return terms_; }

  Coeff coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  int min_exponent() const {
    if (is_zero()) throw std::logic_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
  }

  int max_exponent() const {
    if (is_zero()) throw std::logic_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
  }

  Laurent1& operator+=(const Laurent1& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Laurent1& operator-=(const Laurent1& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Laurent1 operator+(Laurent1 a, const Laurent1& b) { return a += b; }
  friend Laurent1 operator-(Laurent1 a, const Laurent1& b) { return a -= b; }

  friend Laurent1 operator*(const Laurent1& a, const Laurent1& b) {
    Laurent1 r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  Laurent1 operator-() const {
    Laurent1 r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend bool operator==(const Laurent1& a, const Laurent1& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent1& a, const Laurent1& b) { return !(a == b); }

  Laurent1 pow(int n) const {
    if (n < 0) throw std::invalid_argument("Laurent1::pow: negative power");
    Laurent1 r = one();
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  // x -> x^k for nonzero integer k; k = -1 gives the mirror substitution.
  Laurent1 substitute_power(int k) const {
    if (k == 0) throw std::invalid_argument("substitute_power: k must be nonzero");
    Laurent1 r;
    for (const auto& [e, c] : terms_) r.add_term(e * k, c);
    return r;
  }

  void add_term(int exponent, Coeff c) {
    if (c == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
      terms_[exponent] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Terms ascending by exponent, explicit +/- separators: "-A^-4 - A^-2".
  std::string to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string vars;
      if (e == 1)
        vars = var;
      else if (e != 0)
        vars = var + "^" + std::to_string(e);
      detail::append_term_text(out, c, vars);
    }
    return out;
  }

 private:
  std::map<int, Coeff> terms_;
};

// ---------------------------------------------------------------------------
// Laurent polynomial in t with quarter-integer exponents, stored as integer
// numerators over the fixed denominator 4.  Produced by the substitution
// A = t^(-1/4) into a Laurent1 in A.
// ---------------------------------------------------------------------------

class QuarterLaurent {
 public:
  QuarterLaurent() = default;

  // exponents of `p` are read as quarter units of t
  explicit QuarterLaurent(Laurent1 quarters) : quarters_(std::move(quarters)) {}

  static QuarterLaurent from_bracket_variable(const Laurent1& in_a) {
    // A^k -> t^(-k/4)
    return QuarterLaurent(in_a.substitute_power(-1));
  }

  const Laurent1& quarter_terms() const { return quarters_; }

  bool is_zero() const { return quarters_.is_zero(); }

  bool all_exponents_integral() const {
    for (const auto& [q, c] : quarters_.terms())
      if (q % 4 != 0) return false;
    return true;
  }

  bool all_exponents_half_integral() const {
    for (const auto& [q, c] : quarters_.terms())
      if (q % 2 != 0) return false;
    return true;
  }

  friend bool operator==(const QuarterLaurent& a, const QuarterLaurent& b) {
    return a.quarters_ == b.quarters_;
  }
  friend bool operator!=(const QuarterLaurent& a, const QuarterLaurent& b) { return !(a == b); }

  std::string to_string() const {
    if (quarters_.is_zero()) return "0";
    std::string out;
    for (const auto& [q, c] : quarters_.terms()) {
      std::string vars;
      if (q != 0) {
        int num = q, den = 4;
        while (num % 2 == 0 && den > 1) num /= 2, den /= 2;
        vars = "t";
        if (!(num == 1 && den == 1)) {
          vars += "^" + std::to_string(num);
          if (den != 1) vars += "/" + std::to_string(den);
        }
      }
      detail::append_term_text(out, c, vars);
    }
    return out;
  }

 private:
  Laurent1 quarters_;
};

// ---------------------------------------------------------------------------
// Two-variable Laurent polynomials over Z in s and t.
// ---------------------------------------------------------------------------

struct STExp {
  int s = 0;
  int t = 0;
  friend bool operator==(const STExp& a, const STExp& b) { return a.s == b.s && a.t == b.t; }
  friend bool operator<(const STExp& a, const STExp& b) {
    return a.s != b.s ? a.s < b.s : a.t < b.t;
  }
};

class LaurentST {
 public:
  LaurentST() = default;

  static LaurentST constant(Coeff c) { return term(0, 0, c); }

  static LaurentST term(int se, int te, Coeff c) {
    LaurentST p;
    if (c != 0) p.terms_[{se, te}] = c;
    return p;
  }

  static LaurentST zero() { return {}; }
  static LaurentST one() { return constant(1); }
  static LaurentST s(int e = 1) { return term(e, 0, 1); }
  static LaurentST t(int e = 1) { return term(0, e, 1); }

  bool is_zero() const { return terms_.empty(); }

  const std::map<STExp, Coeff>& terms() const { return terms_; }

  LaurentST& operator+=(const LaurentST& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentST& operator-=(const LaurentST& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentST operator+(LaurentST a, const LaurentST& b) { return a += b; }
  friend LaurentST operator-(LaurentST a, const LaurentST& b) { return a -= b; }

  friend LaurentST operator*(const LaurentST& a, const LaurentST& b) {
    LaurentST r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea.s + eb.s, ea.t + eb.t}, ca * cb);
    return r;
  }

  LaurentST operator-() const {
    LaurentST r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend bool operator==(const LaurentST& a, const LaurentST& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentST& a, const LaurentST& b) { return !(a == b); }

  LaurentST pow(int n) const {
    if (n < 0) throw std::invalid_argument("LaurentST::pow: negative power");
    LaurentST r = one();
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  STExp min_exponents() const {
    if (is_zero()) throw std::logic_error("min_exponents of zero polynomial");
    STExp m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
      if (e.s < m.s) m.s = e.s;
      if (e.t < m.t) m.t = e.t;
    }
    return m;
  }

  // Multiply by the monomial s^ds t^dt (a unit of the ring).
  LaurentST shifted(int ds, int dt) const {
    LaurentST r;
    for (const auto& [e, c] : terms_) r.terms_[{e.s + ds, e.t + dt}] = c;
    return r;
  }

  // Exact division; throws std::domain_error when the remainder is nonzero.
  LaurentST exact_div(const LaurentST& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (is_zero()) return zero();
    // Shift both operands into the polynomial range so the lex leading-term
    // order is well founded, then divide greedily by leading terms.
    STExp mp = min_exponents(), mq = divisor.min_exponents();
    LaurentST p = shifted(-mp.s, -mp.t);
    LaurentST q = divisor.shifted(-mq.s, -mq.t);
    LaurentST quot;
    while (!p.is_zero()) {
      auto lead_p = *p.terms_.rbegin();
      auto lead_q = *q.terms_.rbegin();
      STExp de{lead_p.first.s - lead_q.first.s, lead_p.first.t - lead_q.first.t};
      if (de.s < 0 || de.t < 0 || lead_p.second % lead_q.second != 0)
        throw std::domain_error("exact_div: nonzero remainder");
      LaurentST tau = term(de.s, de.t, lead_p.second / lead_q.second);
      quot += tau;
      p -= tau * q;
    }
    return quot.shifted(mp.s - mq.s, mp.t - mq.t);
  }

  void add_term(STExp e, Coeff c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string vars;
      if (e.s == 1)
        vars = "s";
      else if (e.s != 0)
        vars = "s^" + std::to_string(e.s);
      if (e.t != 0) {
        if (!vars.empty()) vars += " ";
        vars += (e.t == 1) ? "t" : "t^" + std::to_string(e.t);
      }
      detail::append_term_text(out, c, vars);
    }
    return out;
  }

 private:
  std::map<STExp, Coeff> terms_;
};

// ---------------------------------------------------------------------------
// Dense matrix over Z[s^±1, t^±1] with exact determinants.
// ---------------------------------------------------------------------------

class STMatrix {
 public:
  STMatrix() = default;
  STMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols) {}

  static STMatrix identity(std::size_t n) {
    STMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentST::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  LaurentST& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const LaurentST& operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  friend STMatrix operator*(const STMatrix& a, const STMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("STMatrix: dimension mismatch");
    STMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend STMatrix operator*(const LaurentST& scalar, const STMatrix& m) {
    STMatrix r(m.rows_, m.cols_);
    for (std::size_t i = 0; i < m.cells_.size(); ++i) r.cells_[i] = scalar * m.cells_[i];
    return r;
  }

  friend bool operator==(const STMatrix& a, const STMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }
  friend bool operator!=(const STMatrix& a, const STMatrix& b) { return !(a == b); }

  STMatrix pow(int n) const {
    if (rows_ != cols_) throw std::invalid_argument("STMatrix::pow: not square");
    if (n < 0) throw std::invalid_argument("STMatrix::pow: negative power");
    STMatrix r = identity(rows_);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LaurentST> cells_;
};

// Cofactor (Laplace) expansion along the first row.  Exponential; intended
// for small matrices and as the second route of the determinant check.
inline LaurentST det_cofactor(const STMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_cofactor: not square");
  std::size_t n = m.rows();
  if (n == 0) return LaurentST::one();
  if (n == 1) return m(0, 0);
  LaurentST det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    STMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    LaurentST contrib = m(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      det += contrib;
    else
      det -= contrib;
  }
  return det;
}

// Fraction-free Bareiss elimination.  All divisions are exact in the Laurent
// ring; a missing pivot in a leading column means the determinant vanishes.
inline LaurentST det_bareiss(STMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_bareiss: not square");
  std::size_t n = m.rows();
  if (n == 0) return LaurentST::one();
  int sign = 1;
  LaurentST prev_pivot = LaurentST::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && m(pivot_row, k).is_zero()) ++pivot_row;
    if (pivot_row == n) return LaurentST::zero();
    if (pivot_row != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot_row, j));
      sign = -sign;
    }
    const LaurentST pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * pivot - m(i, k) * m(k, j)).exact_div(prev_pivot);
      m(i, k) = LaurentST::zero();
    }
    prev_pivot = pivot;
  }
  LaurentST det = m(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

}  // namespace vknot
