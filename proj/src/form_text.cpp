#include <cctype>
#include <sstream>

#include "soslen/form.hpp"

namespace soslen {

PrimeForm reduce_mod(const RationalForm& f, const PrimeField& field) {
  std::vector<PrimeField::value_type> c;
  c.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c.push_back(field.from_mpq(f[i]));
  return PrimeForm(field, f.num_vars(), f.degree(), std::move(c));
}

namespace {

template <class Domain>
std::string render(const Form<Domain>& f) {
  const MonomialBasis& basis = monomial_basis(f.num_vars(), f.degree());
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.domain().is_zero(f[i])) continue;
    std::string c = f.domain().to_string(f[i]);
    if (first) {
      os << c;
    } else if (c.front() == '-') {
      os << " - " << c.substr(1);
    } else {
      os << " + " << c;
    }
    first = false;
    const auto exps = basis.exponents(i);
    bool star = false;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      os << (star ? " " : " * ") << 'x' << (v + 1);
      if (exps[v] != 1) os << '^' << exps[v];
      star = true;
    }
  }
  return first ? "0" : os.str();
}

class FormParser {
 public:
  FormParser(const std::string& text, int n) : s_(text), n_(n) {}

  RationalForm parse(int degree_if_zero) {
    std::vector<std::pair<mpq_class, std::vector<int>>> terms;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '0' && rest_is_blank(pos_ + 1)) {
      return RationalForm(RationalDomain{}, n_, degree_if_zero);
    }
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    while (true) {
      terms.push_back(term(negative));
      skip();
      if (pos_ >= s_.size()) break;
      if (peek('+')) negative = false;
      else if (peek('-')) negative = true;
      else fail("expected '+' or '-'");
      ++pos_;
    }
    int degree = 0;
    for (int a : terms.front().second) degree += a;
    RationalForm f(RationalDomain{}, n_, degree);
    for (auto& [c, exps] : terms) {
      const std::size_t idx = mono_rank(exps, degree);
      f[idx] += c;
    }
    return f;
  }

 private:
  std::pair<mpq_class, std::vector<int>> term(bool negative) {
    skip();
    mpq_class coeff = 1;
    bool seen = false;
    bool need_var = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) {
      std::string num = digits();
      if (peek('/')) {
        ++pos_;
        num += '/' + digits();
      }
      coeff = RationalDomain{}.parse(num);
      seen = true;
    }
    std::vector<int> exps(static_cast<std::size_t>(n_), 0);
    while (true) {
      skip();
      if (seen && peek('*')) {
        ++pos_;
        skip();
        need_var = true;
      }
      if (!peek('x')) {
        if (need_var) fail("expected a variable after '*'");
        break;
      }
      ++pos_;
      const int var = small_int();
      if (var < 1 || var > n_) fail("variable index out of range");
      int power = 1;
      if (peek('^')) {
        ++pos_;
        power = small_int();
      }
      exps[static_cast<std::size_t>(var - 1)] += power;
      seen = true;
      need_var = false;
    }
    if (!seen) fail("expected a term");
    return {negative ? mpq_class(-coeff) : coeff, exps};
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  int small_int() {
    const std::string d = digits();
    if (d.size() > 6) fail("integer too large");
    return std::stoi(d);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool rest_is_blank(std::size_t from) const {
    for (std::size_t i = from; i < s_.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(s_[i])) == 0) return false;
    }
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ArgumentError("parse_form: " + what + " at offset " + std::to_string(pos_) +
                        " in '" + s_ + "'");
  }

  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const RationalForm& f) { return render(f); }
std::string to_text(const PrimeForm& f) { return render(f); }

RationalForm parse_form(const std::string& text, int n, int degree_if_zero) {
  return FormParser(text, n).parse(degree_if_zero);
}

}  // namespace soslen
