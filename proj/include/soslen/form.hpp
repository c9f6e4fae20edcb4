#pragma once

// Dense homogeneous polynomials over a pluggable coefficient domain
// (PrimeField or RationalDomain). Coefficients are stored in graded-lex
// monomial order, so a Form of degree e in n variables always has exactly
// N_{n,e} entries.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "soslen/errors.hpp"
#include "soslen/modular.hpp"
#include "soslen/monomial.hpp"

namespace soslen {

template <class Domain>
class Form {
 public:
  using value_type = typename Domain::value_type;

  Form(Domain domain, int n, int degree)
      : domain_(std::move(domain)), n_(n), degree_(degree),
        coeffs_(num_monomials(n, degree), domain_.zero()) {}

  Form(Domain domain, int n, int degree, std::vector<value_type> coeffs)
      : domain_(std::move(domain)), n_(n), degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != num_monomials(n, degree)) {
      throw ArgumentError("coefficient vector has length " + std::to_string(coeffs_.size()) +
                          ", expected " + std::to_string(num_monomials(n, degree)));
    }
  }

  static Form monomial(Domain domain, std::span<const int> exponents, value_type coeff) {
    const int n = static_cast<int>(exponents.size());
    int e = 0;
    for (int a : exponents) e += a;
    Form f(std::move(domain), n, e);
    f.coeffs_[mono_rank(exponents, e)] = std::move(coeff);
    return f;
  }

  const Domain& domain() const { return domain_; }
  int num_vars() const { return n_; }
  int degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }

  const value_type& operator[](std::size_t i) const { return coeffs_[i]; }
  value_type& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const value_type> coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!domain_.is_zero(c)) return false;
    }
    return true;
  }

  friend bool operator==(const Form& a, const Form& b) {
    return a.domain_ == b.domain_ && a.n_ == b.n_ && a.degree_ == b.degree_ &&
           a.coeffs_ == b.coeffs_;
  }

 private:
  Domain domain_;
  int n_;
  int degree_;
  std::vector<value_type> coeffs_;
};

/// Projective point representative: n coordinates, not all zero.
template <class Domain>
class Point {
 public:
  using value_type = typename Domain::value_type;

  Point(Domain domain, std::vector<value_type> coords)
      : domain_(std::move(domain)), coords_(std::move(coords)) {
    bool nonzero = false;
    for (const auto& c : coords_) nonzero = nonzero || !domain_.is_zero(c);
    if (!nonzero) throw ArgumentError("projective point with all coordinates zero");
  }

  const Domain& domain() const { return domain_; }
  int num_vars() const { return static_cast<int>(coords_.size()); }
  std::span<const value_type> coords() const { return coords_; }
  const value_type& operator[](std::size_t i) const { return coords_[i]; }

 private:
  Domain domain_;
  std::vector<value_type> coords_;
};

namespace detail {

template <class Domain>
void require_compatible(const Form<Domain>& f, const Form<Domain>& g, const char* op) {
  if (!(f.domain() == g.domain())) throw ArgumentError(std::string(op) + ": coefficient domain mismatch");
  if (f.num_vars() != g.num_vars()) throw ArgumentError(std::string(op) + ": variable count mismatch");
}

}  // namespace detail

template <class Domain>
Form<Domain> operator+(const Form<Domain>& f, const Form<Domain>& g) {
  detail::require_compatible(f, g, "add");
  if (f.degree() != g.degree()) throw ArgumentError("add: degree mismatch");
  Form<Domain> out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.domain().add(f[i], g[i]);
  return out;
}

template <class Domain>
Form<Domain> operator-(const Form<Domain>& f, const Form<Domain>& g) {
  detail::require_compatible(f, g, "sub");
  if (f.degree() != g.degree()) throw ArgumentError("sub: degree mismatch");
  Form<Domain> out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.domain().sub(f[i], g[i]);
  return out;
}

template <class Domain>
Form<Domain> scale(const Form<Domain>& f, const typename Domain::value_type& c) {
  Form<Domain> out = f;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.domain().mul(c, f[i]);
  return out;
}

template <class Domain>
Form<Domain> multiply(const Form<Domain>& f, const Form<Domain>& g) {
  detail::require_compatible(f, g, "multiply");
  const Domain& D = f.domain();
  const ProductTable& table = product_table(f.num_vars(), f.degree(), g.degree());
  Form<Domain> out(D, f.num_vars(), f.degree() + g.degree());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (D.is_zero(f[i])) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (D.is_zero(g[j])) continue;
      auto& slot = out[table.index(i, j)];
      slot = D.add(slot, D.mul(f[i], g[j]));
    }
  }
  return out;
}

template <class Domain>
Form<Domain> operator*(const Form<Domain>& f, const Form<Domain>& g) {
  return multiply(f, g);
}

/// Values of every degree-e monomial at the point, in rank order.
template <class Domain>
std::vector<typename Domain::value_type> monomial_values(const Domain& D,
                                                         std::span<const typename Domain::value_type> x,
                                                         int e) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<typename Domain::value_type>> powers(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) {
    powers[v].push_back(D.one());
    for (int k = 1; k <= e; ++k) powers[v].push_back(D.mul(powers[v].back(), x[v]));
  }
  const MonomialBasis& basis = monomial_basis(n, e);
  std::vector<typename Domain::value_type> out;
  out.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto exps = basis.exponents(i);
    typename Domain::value_type m = D.one();
    for (std::size_t v = 0; v < x.size(); ++v) {
      if (exps[v] != 0) m = D.mul(m, powers[v][static_cast<std::size_t>(exps[v])]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

template <class Domain>
typename Domain::value_type evaluate(const Form<Domain>& f, const Point<Domain>& p) {
  if (!(f.domain() == p.domain())) throw ArgumentError("evaluate: coefficient domain mismatch");
  if (f.num_vars() != p.num_vars()) throw ArgumentError("evaluate: variable count mismatch");
  const Domain& D = f.domain();
  const auto values = monomial_values(D, p.coords(), f.degree());
  typename Domain::value_type acc = D.zero();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!D.is_zero(f[i])) acc = D.add(acc, D.mul(f[i], values[i]));
  }
  return acc;
}

using RationalForm = Form<RationalDomain>;
using PrimeForm = Form<PrimeField>;

/// Coefficientwise reduction; throws ArgumentError when a denominator is divisible by p.
PrimeForm reduce_mod(const RationalForm& f, const PrimeField& field);

/// "c * x1^a1 x2^a2 + ..." with exact "p/q" coefficients; "0" for the zero form.
std::string to_text(const RationalForm& f);
std::string to_text(const PrimeForm& f);

/// Parses the to_text syntax for a form in n variables. The degree is taken
/// from the first term; a lone "0" needs the explicit degree.
RationalForm parse_form(const std::string& text, int n, int degree_if_zero = 0);

}  // namespace soslen
