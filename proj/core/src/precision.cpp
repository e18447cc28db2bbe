#include "nestedpi/precision.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace nestedpi {

namespace {

constexpr int kMaxDigits = 2'000'000;

// Smallest precision given to context-less temporaries (default-constructed
// zeros and the like).
constexpr mpfr_prec_t kFloorPrec = 64;

mpfr_prec_t bits_for_digits(int working_digits) {
  // ceil(working * log2(10)) plus headroom for accumulated rounding.
  long bits = (static_cast<long>(working_digits) * 33220 + 9999) / 10000;
  return static_cast<mpfr_prec_t>(bits + 16);
}

}  // namespace

mpfr_prec_t PrecisionContext::bit_precision() const {
  return bits_for_digits(working_digits);
}

bool PrecisionContext::covers_radical_depth(int k) const {
  return guard_digits >= radical_guard_digits(k);
}

PrecisionContext PrecisionContext::widened(int extra_digits) const {
  PrecisionContext ctx = *this;
  ctx.guard_digits += extra_digits;
  ctx.working_digits += extra_digits;
  return ctx;
}

int radical_guard_digits(int k_hint) {
  // ceil(0.602 * k_hint) + 32, in exact integer arithmetic.
  return static_cast<int>((602L * k_hint + 999) / 1000) + 32;
}

PrecisionContext make_context(int target_digits, int k_hint) {
  if (target_digits < 1) {
    throw DomainError("make_context: target_digits must be >= 1");
  }
  if (target_digits > kMaxDigits) {
    throw PrecisionError("make_context: target_digits beyond supported range");
  }
  if (k_hint < 0) {
    throw DomainError("make_context: k_hint must be >= 0");
  }
  PrecisionContext ctx;
  ctx.target_digits = target_digits;
  ctx.guard_digits = radical_guard_digits(k_hint);
  ctx.working_digits = target_digits + ctx.guard_digits;
  return ctx;
}

HPReal::HPReal() : target_digits_(0), working_digits_(0) {
  mpfr_init2(value_, kFloorPrec);
  mpfr_set_zero(value_, 1);
}

HPReal::HPReal(mpfr_prec_t prec, int target_digits, int working_digits)
    : target_digits_(target_digits), working_digits_(working_digits) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

HPReal::HPReal(long value, const PrecisionContext& ctx)
    : HPReal(ctx.bit_precision(), ctx.target_digits, ctx.working_digits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

HPReal::HPReal(std::string_view decimal, const PrecisionContext& ctx)
    : HPReal(ctx.bit_precision(), ctx.target_digits, ctx.working_digits) {
  std::string text(decimal);
  if (mpfr_set_str(value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("HPReal: cannot parse decimal literal '" + text + "'");
  }
  ensure_finite("parse");
}

HPReal::HPReal(const HPReal& other)
    : target_digits_(other.target_digits_), working_digits_(other.working_digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

HPReal::HPReal(HPReal&& other) noexcept
    : target_digits_(other.target_digits_), working_digits_(other.working_digits_) {
  mpfr_init2(value_, kFloorPrec);
  mpfr_swap(value_, other.value_);
}

HPReal& HPReal::operator=(const HPReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    target_digits_ = other.target_digits_;
    working_digits_ = other.working_digits_;
  }
  return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
    target_digits_ = other.target_digits_;
    working_digits_ = other.working_digits_;
  }
  return *this;
}

HPReal::~HPReal() { mpfr_clear(value_); }

void HPReal::ensure_finite(const char* op) const {
  if (!mpfr_number_p(value_)) {
    throw DomainError(std::string("HPReal: non-finite result in ") + op);
  }
}

bool HPReal::is_zero() const { return mpfr_zero_p(value_) != 0; }

int HPReal::sign() const { return mpfr_sgn(value_); }

HPReal HPReal::abs() const {
  HPReal r(*this);
  mpfr_abs(r.value_, r.value_, MPFR_RNDN);
  return r;
}

HPReal HPReal::mul_pow2(long e) const {
  HPReal r(*this);
  mpfr_mul_2si(r.value_, r.value_, e, MPFR_RNDN);
  r.ensure_finite("mul_pow2");
  return r;
}

double HPReal::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

HPReal HPReal::operator-() const {
  HPReal r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

// Result shell carrying the joint precision metadata of two operands: the
// widest working precision, the narrowest render guarantee.
HPReal HPReal::combine_shell(const HPReal& a, const HPReal& b) {
  mpfr_prec_t prec = std::max(mpfr_get_prec(a.value_), mpfr_get_prec(b.value_));
  int target = a.target_digits_ == 0
                   ? b.target_digits_
                   : (b.target_digits_ == 0 ? a.target_digits_
                                            : std::min(a.target_digits_, b.target_digits_));
  int working = std::max(a.working_digits_, b.working_digits_);
  return HPReal(prec, target, working);
}

HPReal HPReal::value_like(const HPReal& proto, long v) {
  HPReal r(mpfr_get_prec(proto.value_), proto.target_digits_, proto.working_digits_);
  mpfr_set_si(r.value_, v, MPFR_RNDN);
  return r;
}

HPReal operator+(const HPReal& a, const HPReal& b) {
  HPReal r = HPReal::combine_shell(a, b);
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  r.ensure_finite("add");
  return r;
}

HPReal operator-(const HPReal& a, const HPReal& b) {
  HPReal r = HPReal::combine_shell(a, b);
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  r.ensure_finite("sub");
  return r;
}

HPReal operator*(const HPReal& a, const HPReal& b) {
  HPReal r = HPReal::combine_shell(a, b);
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  r.ensure_finite("mul");
  return r;
}

HPReal operator/(const HPReal& a, const HPReal& b) {
  if (b.is_zero()) {
    throw DomainError("HPReal: division by zero");
  }
  HPReal r = HPReal::combine_shell(a, b);
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  r.ensure_finite("div");
  return r;
}

HPReal operator*(const HPReal& a, long b) {
  HPReal r(a);
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  r.ensure_finite("mul_si");
  return r;
}

HPReal operator/(const HPReal& a, long b) {
  if (b == 0) {
    throw DomainError("HPReal: division by zero");
  }
  HPReal r(a);
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  r.ensure_finite("div_si");
  return r;
}

HPReal operator-(long a, const HPReal& b) {
  HPReal r(b);
  mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN);
  r.ensure_finite("si_sub");
  return r;
}

HPReal operator+(const HPReal& a, long b) {
  HPReal r(a);
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  r.ensure_finite("add_si");
  return r;
}

HPReal& HPReal::operator+=(const HPReal& b) {
  mpfr_add(value_, value_, b.value_, MPFR_RNDN);
  ensure_finite("add");
  return *this;
}

HPReal& HPReal::operator-=(const HPReal& b) {
  mpfr_sub(value_, value_, b.value_, MPFR_RNDN);
  ensure_finite("sub");
  return *this;
}

HPReal& HPReal::operator*=(const HPReal& b) {
  mpfr_mul(value_, value_, b.value_, MPFR_RNDN);
  ensure_finite("mul");
  return *this;
}

std::strong_ordering operator<=>(const HPReal& a, const HPReal& b) {
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const HPReal& a, const HPReal& b) {
  return mpfr_equal_p(a.value_, b.value_) != 0;
}

bool operator<(const HPReal& a, long b) { return mpfr_cmp_si(a.value_, b) < 0; }

bool operator>(const HPReal& a, long b) { return mpfr_cmp_si(a.value_, b) > 0; }

HPReal sqrt(const HPReal& x, const PrecisionContext& ctx) {
  if (x.sign() < 0) {
    throw DomainError("sqrt: negative input");
  }
  HPReal r(0, ctx);
  mpfr_sqrt(r.value_, x.raw(), MPFR_RNDN);
  return r;
}

DecimalDigits decimal_digits(const HPReal& x, int digits) {
  if (digits < 1) {
    throw DomainError("decimal_digits: digit count must be >= 1");
  }
  DecimalDigits out;
  if (x.is_zero()) {
    out.digits.assign(static_cast<size_t>(digits), '0');
    return out;
  }
  out.sign = x.sign();
  mpfr_exp_t exp = 0;
  char* s = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), x.raw(), MPFR_RNDN);
  if (s == nullptr) {
    throw Error("decimal_digits: conversion failed");
  }
  const char* p = s;
  if (*p == '-') ++p;
  out.digits.assign(p);
  mpfr_free_str(s);
  out.exp10 = static_cast<long>(exp);
  return out;
}

std::string render_decimal(const HPReal& x, int digits) {
  if (digits < 1) {
    throw DomainError("render_decimal: digit count must be >= 1");
  }
  if (digits > x.context_target_digits()) {
    throw PrecisionError("render_decimal: more digits requested than the context guarantees");
  }
  if (x.is_zero()) {
    return digits == 1 ? "0" : "0." + std::string(static_cast<size_t>(digits - 1), '0');
  }

  DecimalDigits d = decimal_digits(x, digits);
  const std::string sign = d.sign < 0 ? "-" : "";
  const long e = d.exp10;

  // Scientific form for tiny magnitudes and for values whose integer part
  // would not fit the digit budget.
  if (e <= -6 || e > digits) {
    std::string m(1, d.digits[0]);
    if (digits > 1) {
      m += '.';
      m += d.digits.substr(1);
    }
    return sign + m + "e" + std::to_string(e - 1);
  }
  if (e >= 1) {
    std::string intpart = d.digits.substr(0, static_cast<size_t>(e));
    if (e == digits) {
      return sign + intpart;
    }
    return sign + intpart + "." + d.digits.substr(static_cast<size_t>(e));
  }
  // 1e-6 <= |x| < 1: leading zeros after the point.
  return sign + "0." + std::string(static_cast<size_t>(-e), '0') + d.digits;
}

double log10_abs(const HPReal& x) {
  if (x.is_zero()) {
    throw DomainError("log10_abs: zero input");
  }
  DecimalDigits d = decimal_digits(x, 12);
  double mantissa = std::stod("0." + d.digits);
  return static_cast<double>(d.exp10) + std::log10(mantissa);
}

HPComplex HPComplex::conj() const { return HPComplex{re, -im}; }

HPReal HPComplex::norm_sq() const { return re * re + im * im; }

HPComplex HPComplex::reciprocal() const {
  HPReal n = norm_sq();
  if (n.is_zero()) {
    throw DomainError("HPComplex: reciprocal of zero");
  }
  return HPComplex{re / n, (-im) / n};
}

HPComplex operator*(const HPComplex& a, const HPComplex& b) {
  return HPComplex{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

HPComplex operator+(const HPComplex& a, const HPComplex& b) {
  return HPComplex{a.re + b.re, a.im + b.im};
}

HPComplex operator-(const HPComplex& a, const HPComplex& b) {
  return HPComplex{a.re - b.re, a.im - b.im};
}

HPComplex HPComplex::pow_int(long n) const {
  if (n < 0) {
    return reciprocal().pow_int(-n);
  }
  HPComplex acc{HPReal::value_like(re, 1), HPReal::value_like(im, 0)};
  HPComplex base = *this;
  while (n > 0) {
    if (n & 1) {
      acc = acc * base;
    }
    n >>= 1;
    if (n > 0) {
      base = base * base;
    }
  }
  return acc;
}

}  // namespace nestedpi
