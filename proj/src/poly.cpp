#include "qcl/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qcl {

namespace {

bool term_less(const Term& a, const Term& b) {
  return a.q != b.q ? a.q < b.q : a.c < b.c;
}

void combine_sorted(std::vector<Term>& v) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    mpz_class acc = std::move(v[i].coef);
    while (j < v.size() && v[j].q == v[i].q && v[j].c == v[i].c) {
      acc += v[j].coef;
      ++j;
    }
    if (acc != 0) {
      v[out].q = v[i].q;
      v[out].c = v[i].c;
      v[out].coef = std::move(acc);
      ++out;
    }
    i = j;
  }
  v.resize(out);
}

// Dense univariate polynomials over Z, index = degree in q.
using UPoly = std::vector<mpz_class>;

void trim(UPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

int deg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

mpz_class content(const UPoly& u) {
  mpz_class g = 0;
  for (const auto& x : u) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_exact(UPoly& u, const mpz_class& k) {
  if (k == 1) return;
  for (auto& x : u) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
}

UPoly primitive(UPoly u) {
  trim(u);
  if (u.empty()) return u;
  mpz_class g = content(u);
  if (u.back() < 0) g = -g;
  divide_exact(u, g);
  return u;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

// r <- x * r - y * s * q^shift
void mul_sub_shift(UPoly& r, const mpz_class& x, const UPoly& s, const mpz_class& y, int shift) {
  for (auto& v : r) v *= x;
  if (r.size() < s.size() + shift) r.resize(s.size() + shift);
  for (std::size_t j = 0; j < s.size(); ++j)
    mpz_submul(r[j + shift].get_mpz_t(), y.get_mpz_t(), s[j].get_mpz_t());
  trim(r);
}

UPoly prem(UPoly a, const UPoly& b) {
  const int db = deg(b);
  while (deg(a) >= db && !a.empty()) {
    mpz_class la = a.back();
    mul_sub_shift(a, b.back(), b, la, deg(a) - db);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) {
    if (!b.empty() && b.back() < 0)
      for (auto& x : b) x = -x;
    return b;
  }
  if (b.empty()) return ugcd(b, a);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg(b) == 0) {
      a = UPoly{1};
      break;
    }
    UPoly r = primitive(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  a = primitive(std::move(a));
  for (auto& x : a) x *= g;
  return a;
}

// Exact division over Z[q]; returns false when b does not divide a.
bool udiv_exact(const UPoly& a, const UPoly& b, UPoly& quot) {
  quot.clear();
  if (a.empty()) return true;
  if (deg(a) < deg(b)) return false;
  UPoly r = a;
  quot.assign(a.size() - b.size() + 1, 0);
  const mpz_class& lb = b.back();
  while (!r.empty() && deg(r) >= deg(b)) {
    if (!mpz_divisible_p(r.back().get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), r.back().get_mpz_t(), lb.get_mpz_t());
    const int shift = deg(r) - deg(b);
    quot[shift] = t;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_submul(r[j + shift].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    trim(r);
  }
  trim(quot);
  return r.empty();
}

// Polynomials in c with coefficients in Z[q]; index = degree in c.
using BiPoly = std::vector<UPoly>;

void trim(BiPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly content(const BiPoly& p) {
  UPoly g;
  for (const auto& u : p) {
    if (u.empty()) continue;
    g = g.empty() ? primitive(u) : ugcd(g, u);
    if (deg(g) == 0) {
      // Only an integer content can remain.
      mpz_class k = 0;
      for (const auto& v : p) mpz_gcd(k.get_mpz_t(), k.get_mpz_t(), content(v).get_mpz_t());
      return UPoly{k};
    }
  }
  if (!g.empty()) {
    mpz_class k = 0;
    for (const auto& v : p) mpz_gcd(k.get_mpz_t(), k.get_mpz_t(), content(v).get_mpz_t());
    g = primitive(g);
    for (auto& x : g) x *= k;
  }
  return g;
}

BiPoly primitive(const BiPoly& p) {
  UPoly g = content(p);
  BiPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].empty()) continue;
    if (!udiv_exact(p[i], g, r[i])) throw std::logic_error("primitive: content does not divide");
  }
  trim(r);
  return r;
}

BiPoly prem(BiPoly a, const BiPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    UPoly la = a.back();
    for (auto& u : a) u = mul(u, b.back());
    for (std::size_t j = 0; j < b.size(); ++j) {
      UPoly t = mul(la, b[j]);
      UPoly& dst = a[j + shift];
      if (dst.size() < t.size()) dst.resize(t.size());
      for (std::size_t k = 0; k < t.size(); ++k) dst[k] -= t[k];
      trim(dst);
    }
    trim(a);
  }
  return a;
}

BiPoly to_bipoly(const Poly& p) {
  BiPoly r;
  const int mq = p.min_q();
  const int mc = p.min_c();
  if (mq < 0 || mc < 0) throw std::logic_error("to_bipoly: negative exponent");
  r.resize(static_cast<std::size_t>(p.max_c()) + 1);
  for (const auto& t : p.terms()) {
    UPoly& u = r[static_cast<std::size_t>(t.c)];
    if (u.size() <= static_cast<std::size_t>(t.q)) u.resize(static_cast<std::size_t>(t.q) + 1);
    u[static_cast<std::size_t>(t.q)] = t.coef;
  }
  for (auto& u : r) trim(u);
  trim(r);
  return r;
}

Poly from_bipoly(const BiPoly& p) {
  std::vector<Term> ts;
  for (std::size_t c = 0; c < p.size(); ++c)
    for (std::size_t q = 0; q < p[c].size(); ++q)
      if (p[c][q] != 0) ts.push_back({static_cast<int>(q), static_cast<int>(c), p[c][q]});
  return Poly::from_terms(std::move(ts));
}

Poly from_upoly(const UPoly& u) {
  std::vector<Term> ts;
  for (std::size_t q = 0; q < u.size(); ++q)
    if (u[q] != 0) ts.push_back({static_cast<int>(q), 0, u[q]});
  return Poly::from_terms(std::move(ts));
}

Poly positive_leading(Poly p) {
  if (!p.is_zero() && p.leading().coef < 0) return -p;
  return p;
}

Poly gcd_shifted(const Poly& a, const Poly& b) {
  const bool ac = a.depends_on_c();
  const bool bc = b.depends_on_c();
  if (!ac && !bc) {
    BiPoly x = to_bipoly(a), y = to_bipoly(b);
    return from_upoly(ugcd(x[0], y[0]));
  }
  if (ac != bc) {
    const Poly& uni = ac ? b : a;
    const Poly& bi = ac ? a : b;
    UPoly g = to_bipoly(uni)[0];
    for (const auto& u : to_bipoly(bi)) {
      if (u.empty()) continue;
      g = ugcd(g, u);
      if (deg(g) == 0) break;
    }
    if (deg(g) == 0) {
      mpz_class k = 0;
      for (const auto& t : a.terms()) mpz_gcd(k.get_mpz_t(), k.get_mpz_t(), t.coef.get_mpz_t());
      mpz_class k2 = 0;
      for (const auto& t : b.terms()) mpz_gcd(k2.get_mpz_t(), k2.get_mpz_t(), t.coef.get_mpz_t());
      mpz_gcd(k.get_mpz_t(), k.get_mpz_t(), k2.get_mpz_t());
      return Poly(k);
    }
    return from_upoly(g);
  }
  BiPoly x = to_bipoly(a), y = to_bipoly(b);
  UPoly cg = ugcd(content(x), content(y));
  BiPoly px = primitive(x), py = primitive(y);
  if (px.size() < py.size()) std::swap(px, py);
  BiPoly res;
  while (true) {
    if (py.size() == 1) {
      res = BiPoly{UPoly{1}};
      break;
    }
    BiPoly r = prem(px, py);
    if (r.empty()) {
      res = primitive(py);
      break;
    }
    px = std::move(py);
    py = primitive(r);
  }
  for (auto& u : res) u = mul(u, cg);
  return from_bipoly(res);
}

mpq_class qpow(const mpq_class& x, int e) {
  if (e == 0) return 1;
  if (x == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  mpz_class n, d;
  const unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), ae);
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), ae);
  mpq_class r = e > 0 ? mpq_class(n, d) : mpq_class(d, n);
  r.canonicalize();
  return r;
}

}  // namespace

Poly::Poly(long v) {
  if (v != 0) terms_.push_back({0, 0, mpz_class(v)});
}

Poly::Poly(const mpz_class& v) {
  if (v != 0) terms_.push_back({0, 0, v});
}

Poly Poly::monomial(int eq, int ec, const mpz_class& coef) {
  Poly p;
  if (coef != 0) p.terms_.push_back({eq, ec, coef});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  combine_sorted(terms);
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].q == 0 && terms_[0].c == 0);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].q == 0 && terms_[0].c == 0 && terms_[0].coef == 1;
}

bool Poly::depends_on_c() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.c != 0; });
}

int Poly::min_q() const { return terms_.empty() ? 0 : terms_.front().q; }
int Poly::max_q() const { return terms_.empty() ? 0 : terms_.back().q; }

int Poly::min_c() const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.c < m) m = t.c;
    first = false;
  }
  return m;
}

int Poly::max_c() const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.c > m) m = t.c;
    first = false;
  }
  return m;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::shifted(int dq, int dc) const {
  Poly p = *this;
  for (auto& t : p.terms_) {
    t.q += dq;
    t.c += dc;
  }
  return p;
}

Poly Poly::scaled(const mpz_class& k) const {
  if (k == 0) return {};
  Poly p = *this;
  for (auto& t : p.terms_) t.coef *= k;
  return p;
}

Poly Poly::divided_exact(const mpz_class& k) const {
  Poly p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), k.get_mpz_t());
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && term_less(terms_[i], o.terms_[j]))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || term_less(o.terms_[j], terms_[i])) {
      out.push_back(o.terms_[j++]);
    } else {
      mpz_class s = terms_[i].coef + o.terms_[j].coef;
      if (s != 0) out.push_back({terms_[i].q, terms_[i].c, std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) return a.shifted(b.terms_[0].q, b.terms_[0].c).scaled(b.terms_[0].coef);
  if (a.is_monomial()) return b.shifted(a.terms_[0].q, a.terms_[0].c).scaled(a.terms_[0].coef);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back({x.q + y.q, x.c + y.c, x.coef * y.coef});
  return Poly::from_terms(std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const Term& x = a.terms_[i];
    const Term& y = b.terms_[i];
    if (x.q != y.q || x.c != y.c || x.coef != y.coef) return false;
  }
  return true;
}

mpq_class Poly::evaluate(const mpq_class& qv, const mpq_class& cv) const {
  std::map<int, mpq_class> qp, cp;
  mpq_class acc = 0;
  for (const auto& t : terms_) {
    auto qi = qp.find(t.q);
    if (qi == qp.end()) qi = qp.emplace(t.q, qpow(qv, t.q)).first;
    auto ci = cp.find(t.c);
    if (ci == cp.end()) ci = cp.emplace(t.c, qpow(cv, t.c)).first;
    acc += mpq_class(t.coef) * qi->second * ci->second;
  }
  return acc;
}

std::size_t Poly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    std::size_t v = static_cast<std::size_t>(t.q) * 1000003u ^ static_cast<std::size_t>(t.c) * 9176u;
    v ^= static_cast<std::size_t>(mpz_getlimbn(t.coef.get_mpz_t(), 0)) + (t.coef < 0 ? 77u : 0u);
    h = h * 1315423911u ^ v;
  }
  return h;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class k = it->coef;
    if (first) {
      if (k < 0) {
        os << "-";
        k = -k;
      }
    } else {
      os << (k < 0 ? " - " : " + ");
      if (k < 0) k = -k;
    }
    first = false;
    const bool unit = (k == 1);
    bool any = false;
    if (!unit || (it->q == 0 && it->c == 0)) {
      os << k.get_str();
      any = true;
    }
    auto factor = [&](const char* name, int e) {
      if (e == 0) return;
      if (any) os << "*";
      os << name;
      if (e != 1) os << "^" << e;
      any = true;
    };
    factor("c", it->c);
    factor("q", it->q);
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return positive_leading(b.shifted(-b.min_q(), -b.min_c()));
  if (b.is_zero()) return positive_leading(a.shifted(-a.min_q(), -a.min_c()));
  const Poly as = a.shifted(-a.min_q(), -a.min_c());
  const Poly bs = b.shifted(-b.min_q(), -b.min_c());
  if (as.is_constant() || bs.is_constant()) {
    mpz_class k;
    mpz_gcd(k.get_mpz_t(), as.content().get_mpz_t(), bs.content().get_mpz_t());
    return Poly(k);
  }
  return positive_leading(gcd_shifted(as, bs));
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    const Term& t = b.terms()[0];
    if (!mpz_divisible_p(a.content().get_mpz_t(), t.coef.get_mpz_t()))
      throw std::domain_error("exact_div: not divisible");
    return a.shifted(-t.q, -t.c).divided_exact(t.coef);
  }
  const int qlo = a.min_q() - b.min_q(), qhi = a.max_q() - b.max_q();
  const int clo = a.min_c() - b.min_c(), chi = a.max_c() - b.max_c();
  std::vector<Term> quot;
  Poly r = a;
  const Term& lb = b.leading();
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    const int dq = lr.q - lb.q, dc = lr.c - lb.c;
    if (dq < qlo || dq > qhi || dc < clo || dc > chi ||
        !mpz_divisible_p(lr.coef.get_mpz_t(), lb.coef.get_mpz_t()))
      throw std::domain_error("exact_div: not divisible");
    mpz_class k;
    mpz_divexact(k.get_mpz_t(), lr.coef.get_mpz_t(), lb.coef.get_mpz_t());
    quot.push_back({dq, dc, k});
    r -= b.shifted(dq, dc).scaled(k);
  }
  return Poly::from_terms(std::move(quot));
}

}  // namespace qcl
