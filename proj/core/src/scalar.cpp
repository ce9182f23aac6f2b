#include "hlsb/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hlsb {

Rational::Rational(long n, long d) {
  if (d == 0) throw ScalarError("rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  std::string t(s);
  if (t.empty()) throw ScalarError("empty rational literal");
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ScalarError("bad rational literal '" + t + "'");
  if (q.get_den() == 0) throw ScalarError("rational with zero denominator");
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ScalarError("division by zero");
  q_ /= o.q_;
  return *this;
}

// ---------------------------------------------------------------------------

ParamSpace::ParamSpace(std::vector<Param> params) : params_(std::move(params)) {
  for (std::size_t i = 0; i < params_.size(); ++i) {
    const auto& n = params_[i].name;
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw ScalarError("invalid parameter name '" + n + "'");
    for (char ch : n)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw ScalarError("invalid parameter name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (params_[j].name == n) throw ScalarError("duplicate parameter '" + n + "'");
  }
}

int ParamSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i].name == name) return static_cast<int>(i);
  return -1;
}

bool ParamSpace::same_as(const ParamSpace& o) const {
  if (params_.size() != o.params_.size()) return false;
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i].name != o.params_[i].name || params_[i].invertible != o.params_[i].invertible)
      return false;
  return true;
}

SpacePtr make_space(std::vector<ParamSpace::Param> params) {
  return std::make_shared<const ParamSpace>(std::move(params));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

// ---------------------------------------------------------------------------

Scalar::Scalar(const Rational& r) {
  if (!r.is_zero()) terms_.emplace(Exponents{}, r);
}

Scalar::Scalar(SpacePtr space, Terms terms) : space_(std::move(space)) {
  const std::size_t k = space_ ? space_->size() : 0;
  for (auto& [e, c] : terms) {
    if (e.size() != k) throw ScalarError("exponent vector has wrong length");
    if (!c.is_zero()) terms_.emplace(e, c);
  }
  check_exponents();
}

void Scalar::check_exponents() const {
  if (!space_) return;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 && !(*space_)[i].invertible)
        throw ScalarError("negative power of non-invertible parameter '" + (*space_)[i].name + "'");
}

Scalar Scalar::param(const SpacePtr& space, std::size_t index) {
  if (!space || index >= space->size()) throw ScalarError("parameter index out of range");
  Exponents e(space->size(), 0);
  e[index] = 1;
  Terms t;
  t.emplace(std::move(e), Rational(1));
  return Scalar(space, std::move(t));
}

Scalar Scalar::param(const SpacePtr& space, std::string_view name) {
  int i = space ? space->index_of(name) : -1;
  if (i < 0) throw ScalarError("unknown parameter '" + std::string(name) + "'");
  return param(space, static_cast<std::size_t>(i));
}

bool Scalar::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x != 0) return false;
  return true;
}

Rational Scalar::constant_value() const {
  if (!is_constant()) throw ScalarError("scalar is not constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool Scalar::is_unit() const {
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0 && !(*space_)[i].invertible) return false;
  return true;
}

void Scalar::lift_to(const SpacePtr& target) {
  // constant -> target space
  Terms t;
  const std::size_t k = target->size();
  for (auto& [e, c] : terms_) t.emplace(Exponents(k, 0), c);
  terms_ = std::move(t);
  space_ = target;
}

void Scalar::adopt_space(const SpacePtr& other) {
  if (same_space(space_, other)) return;
  if (!other) return;
  if (!space_) {
    lift_to(other);
    return;
  }
  throw ParamMismatch("scalars declared over different parameter sets");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.terms_.empty()) {
    adopt_space(o.space_);
    return *this;
  }
  adopt_space(o.space_);
  if (!o.space_ && space_) {
    Scalar l = o;
    l.lift_to(space_);
    return *this += l;
  }
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.space_ && b.space_ && !same_space(a.space_, b.space_))
    throw ParamMismatch("scalars declared over different parameter sets");
  Scalar r;
  r.space_ = a.space_ ? a.space_ : b.space_;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  const std::size_t k = r.space_ ? r.space_->size() : 0;
  Scalar::Exponents e(k);
  for (const auto& [e1, c1] : a.terms_) {
    for (const auto& [e2, c2] : b.terms_) {
      for (std::size_t i = 0; i < k; ++i)
        e[i] = (e1.empty() ? 0 : e1[i]) + (e2.empty() ? 0 : e2[i]);
      Rational c = c1 * c2;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator*=(int k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  if (k == 1) return *this;
  if (k == -1) {
    for (auto& [e, c] : terms_) c = -c;
    return *this;
  }
  Rational f(k);
  for (auto& [e, c] : terms_) c *= f;
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  if (!a.space_ || !b.space_) {
    if (!a.is_constant() || !b.is_constant()) return false;
    return a.constant_value() == b.constant_value();
  }
  if (!same_space(a.space_, b.space_)) throw ParamMismatch("comparing scalars over different parameter sets");
  return a.terms_ == b.terms_;
}

Scalar Scalar::inverse() const {
  if (!is_unit()) throw ScalarError("only monomials in invertible parameters can be inverted: " + to_string());
  const auto& [e, c] = *terms_.begin();
  Exponents ne(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
  Terms t;
  t.emplace(std::move(ne), Rational(1) / c);
  return Scalar(space_, std::move(t));
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), base = *this;
  if (space_) r.lift_to(space_);
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Rational Scalar::evaluate(const std::vector<Rational>& point) const {
  const std::size_t k = space_ ? space_->size() : 0;
  if (point.size() < k) throw ScalarError("evaluation point has too few coordinates");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && point[i].is_zero())
        throw ScalarError("invertible parameter '" + (*space_)[i].name + "' evaluated at 0");
      Rational b = e[i] > 0 ? point[i] : Rational(1) / point[i];
      for (int j = 0; j < std::abs(e[i]); ++j) t *= b;
    }
    total += t;
  }
  return total;
}

Scalar Scalar::substitute(const std::vector<Scalar>& images, const SpacePtr& target) const {
  if (!space_) {  // a bare constant: nothing to substitute
    Scalar out = *this;
    if (target) out.lift_to(target);
    return out;
  }
  const std::size_t k = space_->size();
  if (images.size() != k) throw ScalarError("substitution needs one image per parameter");
  Scalar out;
  out.space_ = target;
  std::vector<Scalar> inv(k);
  for (const auto& [e, c] : terms_) {
    Scalar term(c);
    if (target) term.lift_to(target);
    for (std::size_t i = 0; i < k; ++i) {
      if (e[i] > 0) {
        term *= images[i].pow(e[i]);
      } else if (e[i] < 0) {
        if (inv[i].is_zero()) inv[i] = images[i].inverse();
        term *= inv[i].pow(-e[i]);
      }
    }
    out += term;
  }
  return out;
}

Scalar Scalar::rebase(const SpacePtr& target) const {
  if (same_space(space_, target)) return *this;
  std::vector<Scalar> images;
  if (space_)
    for (const auto& p : space_->params()) images.push_back(Scalar::param(target, p.name));
  return substitute(images, target);
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  // highest total degree first, then reverse lexicographic on exponents
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  auto deg = [](const Exponents& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
  };
  std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    long da = deg(a->first), db = deg(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : order) {
    const auto& [e, c] = *t;
    bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    for (int x : e)
      if (x != 0) has_var = true;
    bool wrote = false;
    if (!(mag == Rational(1)) || !has_var) {
      os << mag.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << (*space_)[i].name;
      if (e[i] != 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// recursive-descent parser

namespace {

class Parser {
 public:
  Parser(std::string_view s, const SpacePtr& sp) : s_(s), sp_(sp) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ScalarError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Scalar d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        if (!d.is_unit()) {
          pos_ = at;
          fail("divisor must be a monomial in invertible parameters");
        }
        v *= d.inverse();
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar b = primary();
    if (eat('^')) {
      skip();
      bool paren = eat('(');
      bool neg = eat('-');
      skip();
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("expected integer exponent");
      int e = std::stoi(std::string(s_.substr(st, pos_ - st)));
      if (paren && !eat(')')) fail("expected ')'");
      if (neg) {
        if (!b.is_unit()) {
          pos_ = st;
          fail("negative power of a non-invertible expression");
        }
        return b.inverse().pow(e);
      }
      return b.pow(e);
    }
    return b;
  }

  Scalar primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(std::string(s_.substr(st, pos_ - st)), 10);
      Scalar v{Rational(mpq_class(z))};
      if (sp_ && !v.is_zero()) v = v.rebase(sp_);
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t st = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(st, pos_ - st));
      if (!sp_ || sp_->index_of(name) < 0) {
        pos_ = st;
        fail("unknown parameter '" + name + "'");
      }
      return Scalar::param(sp_, name);
    }
    fail("unexpected character");
  }

  std::string_view s_;
  SpacePtr sp_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text, const SpacePtr& space) {
  Scalar v = Parser(text, space).run();
  if (space && !v.space()) {
    Scalar r = v;
    r.lift_to(space);
    return r;
  }
  return v;
}

}  // namespace hlsb
