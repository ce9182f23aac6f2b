#pragma once
// Exact scalars: rationals and polynomials over Q in named parameters, with
// optional formal inverses of parameters declared invertible.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hlsb {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // accepts "-3", "7/4"
  static Rational parse(std::string_view s);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  std::string to_string() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_;
};

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when two scalars over different parameter declarations meet.
struct ParamMismatch : ScalarError {
  using ScalarError::ScalarError;
};

class ParamSpace {
 public:
  struct Param {
    std::string name;
    bool invertible = false;
  };

  ParamSpace() = default;
  explicit ParamSpace(std::vector<Param> params);

  std::size_t size() const { return params_.size(); }
  const Param& operator[](std::size_t i) const { return params_[i]; }
  const std::vector<Param>& params() const { return params_; }
  // -1 when absent
  int index_of(std::string_view name) const;

  bool same_as(const ParamSpace& o) const;

 private:
  std::vector<Param> params_;
};

using SpacePtr = std::shared_ptr<const ParamSpace>;

SpacePtr make_space(std::vector<ParamSpace::Param> params);

// Element of Q[p1..pk][q^-1 : q invertible]. A null space means a pure
// constant that is compatible with every declaration.
class Scalar {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  Scalar() = default;
  Scalar(long n) : Scalar(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r);               // NOLINT(google-explicit-constructor)
  Scalar(SpacePtr space, Terms terms);

  static Scalar param(const SpacePtr& space, std::size_t index);
  static Scalar param(const SpacePtr& space, std::string_view name);

  // Parses e.g. "3/2*a1^2*b4 - c2", "a5^-1*(b1 + 2)". Unknown names and
  // negative powers of non-invertible parameters are rejected.
  static Scalar parse(std::string_view text, const SpacePtr& space);

  const SpacePtr& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // requires is_constant()
  Rational constant_value() const;
  // single term whose variables all carry invertible declarations
  bool is_unit() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(int k);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator*(Scalar a, int k) { return a *= k; }
  friend Scalar operator*(int k, Scalar a) { return a *= k; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Inverse of a unit (monomial in invertible parameters).
  Scalar inverse() const;
  Scalar pow(int e) const;

  // Value at a point; entries for invertible parameters must be nonzero.
  Rational evaluate(const std::vector<Rational>& point) const;

  // images[i] replaces parameter i; every image lives over `target` (or is
  // constant). Parameters raised to negative powers need unit images.
  Scalar substitute(const std::vector<Scalar>& images, const SpacePtr& target) const;

  // Same polynomial re-expressed over a space containing all its names.
  Scalar rebase(const SpacePtr& target) const;

  std::string to_string() const;

 private:
  void adopt_space(const SpacePtr& other);
  void lift_to(const SpacePtr& target);
  void check_exponents() const;

  SpacePtr space_;
  Terms terms_;
};

bool same_space(const SpacePtr& a, const SpacePtr& b);

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace hlsb
