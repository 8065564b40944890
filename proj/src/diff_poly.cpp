#include "omatrix/diff_poly.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace omatrix {

namespace {

std::mutex g_sym_mutex;
std::vector<std::string>& sym_table() {
  static std::vector<std::string> table = {"u", "p", "v", "q", "X", "Y",
                                           "Z", "f", "g", "h", "A", "B"};
  return table;
}

std::atomic<int> g_max_jet_order{12};

// Merge two canonical monomials, adding exponents of equal jets.
JetMono merge_monos(const JetMono& a, const JetMono& b) {
  JetMono out;
  std::size_t i = 0, j = 0;
  auto key_less = [](const JetFactor& x, const JetFactor& y) {
    return x.sym != y.sym ? x.sym < y.sym : x.order < y.order;
  };
  while (i < a.size() && j < b.size()) {
    if (a[i].sym == b[j].sym && a[i].order == b[j].order) {
      Rational e = a[i].exp + b[j].exp;
      if (e != 0) out.push_back({a[i].sym, a[i].order, e});
      ++i;
      ++j;
    } else if (key_less(a[i], b[j])) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

}  // namespace

Sym diffsym(const std::string& name) {
  std::lock_guard<std::mutex> lock(g_sym_mutex);
  auto& table = sym_table();
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == name) return static_cast<Sym>(i);
  table.push_back(name);
  return static_cast<Sym>(table.size() - 1);
}

const std::string& diffsym_name(Sym s) {
  std::lock_guard<std::mutex> lock(g_sym_mutex);
  return sym_table().at(static_cast<std::size_t>(s));
}

int max_jet_order() { return g_max_jet_order.load(); }

void set_max_jet_order(int order) {
  if (order < 1) throw std::invalid_argument("jet ceiling must be positive");
  g_max_jet_order.store(order);
}

DiffPoly DiffPoly::constant(const Rational& c) {
  DiffPoly p;
  p.add_term({}, c);
  return p;
}

DiffPoly DiffPoly::jet(Sym s, int order, const Rational& exp) {
  DiffPoly p;
  if (exp == 0) {
    p.add_term({}, Rational(1));
    return p;
  }
  p.add_term({JetFactor{s, order, exp}}, Rational(1));
  return p;
}

DiffPoly DiffPoly::var(const std::string& name, int order) {
  return jet(diffsym(name), order);
}

Rational DiffPoly::constant_term() const {
  auto it = terms_.find(JetMono{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void DiffPoly::add_term(const JetMono& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const {
  DiffPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const {
  DiffPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

DiffPoly DiffPoly::operator-() const { return scaled(Rational(-1)); }

DiffPoly DiffPoly::operator*(const DiffPoly& o) const {
  DiffPoly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(merge_monos(m1, m2), c1 * c2);
  return out;
}

DiffPoly DiffPoly::scaled(const Rational& c) const {
  DiffPoly out;
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, c * v);
  return out;
}

bool DiffPoly::operator==(const DiffPoly& o) const { return terms_ == o.terms_; }

DiffPoly DiffPoly::total_derivative() const {
  int ceiling = max_jet_order();
  DiffPoly out;
  for (const auto& [m, c] : terms_)
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k].order + 1 > ceiling)
        throw std::runtime_error("jet order ceiling exceeded (raise with set_max_jet_order)");
      // c * exp * (factor with exp-1) * (sym, order+1)
      JetMono rest;
      rest.reserve(m.size());
      for (std::size_t t = 0; t < m.size(); ++t) {
        if (t == k) {
          Rational e = m[k].exp - 1;
          if (e != 0) rest.push_back({m[k].sym, m[k].order, e});
        } else {
          rest.push_back(m[t]);
        }
      }
      JetMono bumped{JetFactor{m[k].sym, m[k].order + 1, Rational(1)}};
      out.add_term(merge_monos(rest, bumped), c * m[k].exp);
    }
  return out;
}

DiffPoly DiffPoly::total_derivative(int times) const {
  DiffPoly out = *this;
  for (int i = 0; i < times; ++i) out = out.total_derivative();
  return out;
}

DiffPoly DiffPoly::partial(Sym s, int order) const {
  DiffPoly out;
  for (const auto& [m, c] : terms_)
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k].sym != s || m[k].order != order) continue;
      JetMono rest;
      for (std::size_t t = 0; t < m.size(); ++t) {
        if (t == k) {
          Rational e = m[k].exp - 1;
          if (e != 0) rest.push_back({m[k].sym, m[k].order, e});
        } else {
          rest.push_back(m[t]);
        }
      }
      out.add_term(rest, c * m[k].exp);
    }
  return out;
}

DiffPoly DiffPoly::variational_derivative(Sym s) const {
  int top = max_order_of(s);
  DiffPoly out;
  for (int n = 0; n <= top; ++n) {
    DiffPoly dn = partial(s, n).total_derivative(n);
    out = (n % 2 == 0) ? out + dn : out - dn;
  }
  return out;
}

DiffPoly DiffPoly::substitute(Sym s, const DiffPoly& image) const {
  DiffPoly out;
  for (const auto& [m, c] : terms_) {
    DiffPoly term = DiffPoly::constant(c);
    for (const auto& f : m) {
      if (f.sym != s) {
        DiffPoly keep;
        keep.add_term({f}, Rational(1));
        term = term * keep;
        continue;
      }
      if (!is_integer(f.exp) || f.exp < 0)
        throw std::invalid_argument("substitution needs nonnegative integer exponents");
      DiffPoly powed = image.total_derivative(f.order);
      long e = f.exp.get_num().get_si();
      for (long t = 0; t < e; ++t) term = term * powed;
    }
    out = out + term;
  }
  return out;
}

int DiffPoly::max_order_of(Sym s) const {
  int top = -1;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m)
      if (f.sym == s && f.order > top) top = f.order;
  return top;
}

int DiffPoly::max_order() const {
  int top = -1;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m)
      if (f.order > top) top = f.order;
  return top;
}

std::vector<Sym> DiffPoly::symbols() const {
  std::set<Sym> seen;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m) seen.insert(f.sym);
  return std::vector<Sym>(seen.begin(), seen.end());
}

std::string DiffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (const auto& f : m) {
      os << "*" << diffsym_name(f.sym);
      for (int t = 0; t < f.order && f.order <= 4; ++t) os << "'";
      if (f.order > 4) os << "^(" << f.order << ")";
      if (f.exp != 1) os << "^{" << rat_str(f.exp) << "}";
    }
  }
  return os.str();
}

bool im_partial_test(const DiffPoly& f) {
  if (f.constant_term() != 0) return false;
  for (Sym s : f.symbols())
    if (!f.variational_derivative(s).is_zero()) return false;
  return true;
}

}  // namespace omatrix
