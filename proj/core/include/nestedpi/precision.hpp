#pragma once

#include <mpfr.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nestedpi {

class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid input value (negative radicand, non-positive series argument, ...).
class DomainError : public Error {
  using Error::Error;
};

/// Request that the precision policy cannot honor (guard digits too small for
/// the radical depth, more digits asked for than a context guarantees, ...).
class PrecisionError : public Error {
  using Error::Error;
};

/// Decimal-digit precision policy for a computation run. Rounding is fixed to
/// nearest-even. Build one via make_context(); working_digits must stay equal
/// to target_digits + guard_digits.
struct PrecisionContext {
  int target_digits = 0;  ///< digits of the final answer the run promises
  int guard_digits = 0;   ///< extra working digits absorbing cancellation/rounding
  int working_digits = 0; ///< target_digits + guard_digits

  /// Binary precision used for the underlying arithmetic.
  mpfr_prec_t bit_precision() const;

  /// True when guard_digits absorb the cancellation in the depth-k complement
  /// (the subtraction 2 - a_(k-1) loses about 0.602*k decimal digits).
  bool covers_radical_depth(int k) const;

  /// Same target, working precision widened by extra_digits. Used by the
  /// recompute-at-higher-precision checks.
  PrecisionContext widened(int extra_digits) const;
};

/// Guard digits needed for radical depth k_hint: ceil(0.602*k_hint) + 32.
int radical_guard_digits(int k_hint);

/// Context for target_digits of output on a run that descends k_hint radical
/// levels. Rejects target_digits < 1 and k_hint < 0.
PrecisionContext make_context(int target_digits, int k_hint = 0);

/// Arbitrary-precision real number. Values are immutable in spirit: every
/// operation returns a fresh value carrying the working precision it was
/// produced under, and no public operation lets a NaN or infinity escape.
class HPReal {
 public:
  HPReal();  // zero with no context attached; render/compare before use
  HPReal(long value, const PrecisionContext& ctx);
  HPReal(std::string_view decimal, const PrecisionContext& ctx);
  HPReal(const HPReal& other);
  HPReal(HPReal&& other) noexcept;
  HPReal& operator=(const HPReal& other);
  HPReal& operator=(HPReal&& other) noexcept;
  ~HPReal();

  /// Working decimal digits of the producing context.
  int context_digits() const { return working_digits_; }
  /// Target decimal digits of the producing context (render limit).
  int context_target_digits() const { return target_digits_; }

  bool is_zero() const;
  int sign() const;  // -1, 0, +1
  HPReal abs() const;
  /// Exact scaling by 2^e.
  HPReal mul_pow2(long e) const;
  double to_double() const;

  HPReal operator-() const;
  friend HPReal operator+(const HPReal& a, const HPReal& b);
  friend HPReal operator-(const HPReal& a, const HPReal& b);
  friend HPReal operator*(const HPReal& a, const HPReal& b);
  friend HPReal operator/(const HPReal& a, const HPReal& b);
  friend HPReal operator*(const HPReal& a, long b);
  friend HPReal operator/(const HPReal& a, long b);
  friend HPReal operator-(long a, const HPReal& b);
  friend HPReal operator+(const HPReal& a, long b);

  HPReal& operator+=(const HPReal& b);
  HPReal& operator-=(const HPReal& b);
  HPReal& operator*=(const HPReal& b);

  friend std::strong_ordering operator<=>(const HPReal& a, const HPReal& b);
  friend bool operator==(const HPReal& a, const HPReal& b);
  friend bool operator<(const HPReal& a, long b);
  friend bool operator>(const HPReal& a, long b);

  /// Underlying handle, for same-library numeric kernels and the renderer.
  mpfr_srcptr raw() const { return value_; }

  friend HPReal sqrt(const HPReal& x, const PrecisionContext& ctx);

 private:
  friend struct HPComplex;
  HPReal(mpfr_prec_t prec, int target_digits, int working_digits);
  static HPReal combine_shell(const HPReal& a, const HPReal& b);
  static HPReal value_like(const HPReal& proto, long v);
  void ensure_finite(const char* op) const;

  mpfr_t value_;
  int target_digits_ = 0;
  int working_digits_ = 0;
};

/// Square root under a context. Rejects negative input.
HPReal sqrt(const HPReal& x, const PrecisionContext& ctx);

/// First `digits` significant decimal digits of |x| plus the decimal exponent:
/// |x| = 0.digits * 10^exp10 after round-to-nearest at position `digits`.
struct DecimalDigits {
  std::string digits;
  long exp10 = 0;
  int sign = 0;
};
DecimalDigits decimal_digits(const HPReal& x, int digits);

/// Round-to-nearest decimal rendering with exactly `digits` significant
/// digits. Magnitudes below 1e-6 (and ones too wide for the digit budget)
/// render in scientific form, e.g. "1.92858e-1564". Asking for more digits
/// than the producing context's target is a PrecisionError.
std::string render_decimal(const HPReal& x, int digits);

/// log10(|x|) as a double (about 12 correct digits). DomainError on zero.
double log10_abs(const HPReal& x);

/// Complex value as a real pair; used for the conjugate-pair series terms.
struct HPComplex {
  HPReal re;
  HPReal im;

  HPComplex conj() const;
  HPReal norm_sq() const;        // re^2 + im^2
  HPComplex reciprocal() const;  // conj(z) / |z|^2; DomainError on zero
  /// Integer power by squaring; negative exponents go through reciprocal().
  HPComplex pow_int(long n) const;

  friend HPComplex operator*(const HPComplex& a, const HPComplex& b);
  friend HPComplex operator+(const HPComplex& a, const HPComplex& b);
  friend HPComplex operator-(const HPComplex& a, const HPComplex& b);
};

}  // namespace nestedpi
