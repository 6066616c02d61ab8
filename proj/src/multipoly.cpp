#include "spantree/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "spantree/errors.hpp"

namespace spantree {
namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

} // namespace

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::invalid_argument("negative variable count");
}

MultiPoly::MultiPoly(int nvars, const BigInt& constant) : MultiPoly(nvars) {
  add_term(Exponents(static_cast<std::size_t>(nvars), 0), constant);
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::out_of_range("variable index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[i - 1] = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponents& exps, const BigInt& coefficient) {
  MultiPoly p(static_cast<int>(exps.size()));
  p.add_term(exps, coefficient);
  return p;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.begin()->first);
}

void MultiPoly::require_same(const MultiPoly& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("polynomials over different variable counts (" + std::to_string(nvars_) +
                                " vs " + std::to_string(o.nvars_) + ")");
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same(b);
  MultiPoly out(a.nvars_);
  Exponents e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out(a.nvars_);
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

BigInt MultiPoly::evaluate(const std::vector<BigInt>& point) const {
  if (point.size() != static_cast<std::size_t>(nvars_))
    throw std::invalid_argument("evaluation point has the wrong number of coordinates");
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= boost::multiprecision::pow(point[i], e[i]);
    total += term;
  }
  return total;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt magnitude = c;
    if (c < 0) {
      os << (first ? "-" : " - ");
      magnitude = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    const bool constant = degree_of(e) == 0;
    bool need_star = false;
    if (magnitude != 1 || constant) {
      os << magnitude;
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (need_star) os << '*';
      os << 'x' << i + 1;
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

BigInt substitute_all_ones(const MultiPoly& p) {
  BigInt total = 0;
  for (const auto& [e, c] : p.terms()) total += c;
  return total;
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly result(p.nvars(), 1);
  MultiPoly base = p;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials over different variable counts");
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& [lead_e, lead_c] = *b.terms().begin();
  MultiPoly quotient(a.nvars());
  MultiPoly rest = a;
  Exponents e(lead_e.size());
  while (!rest.is_zero()) {
    // If b divides a, every remainder is a multiple of b, so its leading
    // term is divisible by that of b.
    const auto& [re, rc] = *rest.terms().begin();
    if (!divides(lead_e, re) || rc % lead_c != 0)
      throw ExactnessError("polynomial division is not exact: " + b.to_string() + " does not divide " +
                           a.to_string());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = re[i] - lead_e[i];
    const MultiPoly step = MultiPoly::monomial(e, rc / lead_c);
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

MultiPoly variable_sum(int nvars, const std::vector<Vertex>& vertices) {
  MultiPoly s(nvars);
  for (Vertex v : vertices) s += MultiPoly::variable(nvars, v);
  return s;
}

} // namespace spantree
