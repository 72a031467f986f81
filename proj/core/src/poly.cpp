#include "cmdef/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstring>

#include "cmdef/errors.hpp"

namespace cmdef {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(std::size_t i, unsigned exponent) {
  Monomial m;
  m.set(i, exponent);
  return m;
}

void Monomial::set(std::size_t i, unsigned exponent) {
  if (i >= kMaxVars) throw ResourceCapExceeded("variable index beyond kMaxVars");
  if (exponent > 255) throw ResourceCapExceeded("exponent above 255");
  deg_ = static_cast<std::uint16_t>(deg_ - e_[i] + exponent);
  e_[i] = static_cast<std::uint8_t>(exponent);
}

bool Monomial::divides(const Monomial& other) const {
  if (deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

std::size_t Monomial::support_end() const {
  for (std::size_t i = kMaxVars; i-- > 0;)
    if (e_[i]) return i + 1;
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a.e_[i]) + b.e_[i];
    if (s > 255) throw ResourceCapExceeded("exponent above 255");
    r.e_[i] = static_cast<std::uint8_t>(s);
  }
  r.deg_ = static_cast<std::uint16_t>(a.deg_ + b.deg_);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint8_t>(a.e_[i] - b.e_[i]);
  r.deg_ = static_cast<std::uint16_t>(a.deg_ - b.deg_);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.deg_ = static_cast<std::uint16_t>(d);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.deg_ = static_cast<std::uint16_t>(d);
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < kMaxVars; i += 8) {
    std::uint64_t chunk;
    std::memcpy(&chunk, e_.data() + i, 8);
    h ^= chunk;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

// -------------------------------------------------------------------- Poly

namespace {

void normalize(std::vector<Term>& terms, const PrimeField& f) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return grevlex_less(y.mono, x.mono); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Coeff c = 0;
    std::size_t j = i;
    for (; j < terms.size() && terms[j].mono == terms[i].mono; ++j) c = f.add(c, terms[j].coeff);
    if (c != 0) {
      terms[out] = terms[i];
      terms[out].coeff = c;
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Poly::Poly(Coeff p, std::size_t nvars) : p_(p), nvars_(static_cast<std::uint32_t>(nvars)) {
  if (nvars > kMaxVars)
    throw ResourceCapExceeded("ring with " + std::to_string(nvars) + " variables (max " +
                              std::to_string(kMaxVars) + ")");
}

Poly Poly::constant(Coeff p, std::size_t nvars, std::int64_t c) {
  Poly r(p, nvars);
  Coeff v = PrimeField(p).reduce(c);
  if (v) r.terms_.push_back({Monomial(), v});
  return r;
}

Poly Poly::variable(Coeff p, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InvalidArgument("variable index out of range");
  return monomial(p, nvars, Monomial::var(i), 1);
}

Poly Poly::monomial(Coeff p, std::size_t nvars, const Monomial& m, Coeff c) {
  Poly r(p, nvars);
  c %= p;
  if (c) r.terms_.push_back({m, c});
  return r;
}

Poly Poly::from_terms(Coeff p, std::size_t nvars, std::vector<Term> terms) {
  Poly r(p, nvars);
  PrimeField f(p);
  for (auto& t : terms) t.coeff %= p;
  normalize(terms, f);
  r.terms_ = std::move(terms);
  return r;
}

void Poly::check_ring(const Poly& o) const {
  if (!same_ring(o))
    throw RingMismatch("polynomials from rings (p=" + std::to_string(p_) + ", n=" +
                       std::to_string(nvars_) + ") and (p=" + std::to_string(o.p_) +
                       ", n=" + std::to_string(o.nvars_) + ")");
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Poly Poly::homogeneous_component(unsigned d) const {
  Poly r(p_, nvars_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) r.terms_.push_back(t);
  return r;
}

Coeff Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return grevlex_less(x, t.mono);
  });
  return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

bool Poly::uses_var(std::size_t i) const {
  for (const auto& t : terms_)
    if (t.mono[i]) return true;
  return false;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(leading_coeff()));
}

Poly Poly::scaled(Coeff c) const {
  c %= p_;
  Poly r(p_, nvars_);
  if (c == 0) return r;
  PrimeField f(p_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = f.mul(t.coeff, c);
  return r;
}

Poly Poly::shifted(const Monomial& m, Coeff c) const {
  c %= p_;
  Poly r(p_, nvars_);
  if (c == 0) return r;
  PrimeField f(p_);
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves a monomial order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, f.mul(t.coeff, c)});
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(p_, nvars_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::substitute(std::span<const Poly> images, std::size_t target_nvars) const {
  if (images.size() != nvars_) throw InvalidArgument("substitution arity mismatch");
  for (const auto& im : images)
    if (im.p_ != p_ || im.nvars_ != target_nvars) throw RingMismatch("substitution image ring");
  std::vector<std::vector<Poly>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned e) -> const Poly& {
    auto& v = powers[i];
    if (v.empty()) {
      v.push_back(constant(p_, target_nvars, 1));
      v.push_back(images[i]);
    }
    while (v.size() <= e) v.push_back(v.back() * images[i]);
    return v[e];
  };
  std::vector<Term> acc;
  PrimeField f(p_);
  for (const auto& t : terms_) {
    Poly prod = constant(p_, target_nvars, t.coeff);
    for (std::size_t i = 0; i < nvars_ && !prod.is_zero(); ++i)
      if (t.mono[i]) prod *= power(i, t.mono[i]);
    acc.insert(acc.end(), prod.terms_.begin(), prod.terms_.end());
  }
  Poly r(p_, target_nvars);
  normalize(acc, f);
  r.terms_ = std::move(acc);
  return r;
}

Poly Poly::remap(std::size_t target_nvars, std::span<const std::size_t> index_map) const {
  if (index_map.size() != nvars_) throw InvalidArgument("remap arity mismatch");
  Poly r(p_, target_nvars);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!t.mono[i]) continue;
      if (index_map[i] >= target_nvars) throw InvalidArgument("remap target out of range");
      m.set(index_map[i], m[index_map[i]] + t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  normalize(out, field());
  r.terms_ = std::move(out);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  add_scaled(o, 1, Monomial());
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(o);
  add_scaled(o, p_ - 1, Monomial());
  return *this;
}

void Poly::add_scaled(const Poly& g, Coeff c, const Monomial& m) {
  c %= p_;
  if (c == 0 || g.is_zero()) return;
  PrimeField f(p_);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  const bool shift = !m.is_one();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    Monomial bm = shift ? b->mono * m : b->mono;
    if (a == terms_.end() || grevlex_less(a->mono, bm)) {
      out.push_back({bm, f.mul(b->coeff, c)});
      ++b;
    } else if (grevlex_less(bm, a->mono)) {
      out.push_back(*a++);
    } else {
      Coeff s = f.add(a->coeff, f.mul(b->coeff, c));
      if (s) out.push_back({a->mono, s});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.p_, a.nvars_);
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].mono, a.terms_[0].coeff);
  PrimeField f(a.p_);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back({x.mono * y.mono, f.mul(x.coeff, y.coeff)});
  Poly r(a.p_, a.nvars_);
  normalize(out, f);
  r.terms_ = std::move(out);
  return r;
}

Poly operator-(const Poly& a) { return a.scaled(a.p_ - 1); }

bool operator==(const Poly& a, const Poly& b) {
  if (!a.same_ring(b) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono))
      return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) out += '+';
    const auto& t = terms_[k];
    out += std::to_string(t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i) {
      unsigned e = t.mono[i];
      if (!e) continue;
      out += "*x";
      out += std::to_string(i);
      if (e > 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  bool neg = false;
  if (!s.empty() && s[0] == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidArgument("malformed polynomial text: '" + std::string(whole) + "'");
  return neg ? -v : v;
}

}  // namespace

Poly Poly::parse(std::string_view text, Coeff p, std::size_t nvars) {
  std::string s;
  // Binary minus becomes "+-" so every term is split on '+'.
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '-' && !s.empty() && s.back() != '+' && s.back() != '*' && s.back() != '^') s += '+';
    s += ch;
  }
  PrimeField f(p);
  std::vector<Term> terms;
  if (s.empty()) throw InvalidArgument("empty polynomial text");
  std::string_view rest(s);
  while (true) {
    auto plus = rest.find('+');
    std::string_view term = rest.substr(0, plus);
    if (term.empty()) throw InvalidArgument("malformed polynomial text: '" + s + "'");
    Coeff c = 1;
    Monomial m;
    while (!term.empty() && term[0] == '-') {
      c = f.neg(c);
      term.remove_prefix(1);
    }
    while (true) {
      auto star = term.find('*');
      std::string_view factor = term.substr(0, star);
      if (factor.empty()) throw InvalidArgument("malformed polynomial text: '" + s + "'");
      if (factor[0] == 'x') {
        auto caret = factor.find('^');
        std::int64_t idx = parse_int(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), s);
        std::int64_t e = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1), s);
        if (idx < 0 || static_cast<std::size_t>(idx) >= nvars)
          throw InvalidArgument("variable x" + std::to_string(idx) + " outside ring of " +
                                std::to_string(nvars) + " variables");
        if (e < 0) throw InvalidArgument("negative exponent in '" + s + "'");
        m.set(static_cast<std::size_t>(idx), m[static_cast<std::size_t>(idx)] + static_cast<unsigned>(e));
      } else {
        c = f.mul(c, f.reduce(parse_int(factor, s)));
      }
      if (star == std::string_view::npos) break;
      term.remove_prefix(star + 1);
    }
    terms.push_back({m, c});
    if (plus == std::string_view::npos) break;
    rest.remove_prefix(plus + 1);
  }
  return from_terms(p, nvars, std::move(terms));
}

// -------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, Coeff p, std::size_t nvars)
    : rows_(rows), cols_(cols), p_(p), nvars_(nvars), data_(rows * cols, Poly(p, nvars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, Coeff p, std::size_t nvars) {
  PolyMatrix m(n, n, p, nvars);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(p, nvars, 1);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, p_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::substitute(std::span<const Poly> images, std::size_t target_nvars) const {
  PolyMatrix r(rows_, cols_, p_, target_nvars);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!data_[k].is_zero()) r.data_[k] = data_[k].substitute(images, target_nvars);
  return r;
}

PolyMatrix PolyMatrix::remap(std::size_t target_nvars, std::span<const std::size_t> index_map) const {
  PolyMatrix r(rows_, cols_, p_, target_nvars);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].remap(target_nvars, index_map);
  return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix shape mismatch in product");
  if (a.p_ != b.p_ || a.nvars_ != b.nvars_) throw RingMismatch("matrix product across rings");
  PolyMatrix r(a.rows_, b.cols_, a.p_, a.nvars_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Poly& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix shape mismatch");
  PolyMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

}  // namespace cmdef
