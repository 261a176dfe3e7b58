#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mmph {

/// Which field a scalar lives in. Rational values embed into either extension.
enum class Ring : std::uint8_t { Rational = 0, Quadratic = 1, Eisenstein = 2 };

const char* ring_name(Ring r) noexcept;

/// Common field of two tags; throws RingMismatch for Quadratic with Eisenstein.
Ring join_rings(Ring a, Ring b);

/// Exact element a + b*x of Q, Q(sqrt2) (x = sqrt2) or Q(omega) (x = omega,
/// omega^2 = -1 - omega). Coefficients are kept in lowest terms.
class RingScalar {
public:
    RingScalar() = default;
    RingScalar(long value); // NOLINT(google-explicit-constructor)
    RingScalar(Ring ring, mpq_class a, mpq_class b = 0);

    static RingScalar omega();
    static RingScalar omega_squared();
    static RingScalar sqrt2();

    Ring ring() const noexcept { return ring_; }
    const mpq_class& a() const noexcept { return a_; }
    const mpq_class& b() const noexcept { return b_; }

    bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const noexcept { return a_ == 1 && sgn(b_) == 0; }
    /// True when the value is rational (the irrational coefficient vanishes).
    bool is_rational() const noexcept { return sgn(b_) == 0; }

    /// Same value re-tagged into `target`; throws RingMismatch when impossible.
    RingScalar promoted(Ring target) const;

    RingScalar inverse() const;

    RingScalar& operator+=(const RingScalar& rhs);
    RingScalar& operator-=(const RingScalar& rhs);
    RingScalar& operator*=(const RingScalar& rhs);
    RingScalar& operator/=(const RingScalar& rhs);

    friend RingScalar operator+(RingScalar lhs, const RingScalar& rhs) { return lhs += rhs; }
    friend RingScalar operator-(RingScalar lhs, const RingScalar& rhs) { return lhs -= rhs; }
    friend RingScalar operator*(RingScalar lhs, const RingScalar& rhs) { return lhs *= rhs; }
    friend RingScalar operator/(RingScalar lhs, const RingScalar& rhs) { return lhs /= rhs; }
    RingScalar operator-() const;

    /// Value equality; a rational value equals itself under any tag.
    friend bool operator==(const RingScalar& x, const RingScalar& y);

    /// Total order by (ring, a, b); used for deterministic ray ordering only.
    friend std::strong_ordering compare(const RingScalar& x, const RingScalar& y);

    /// Text form in the scalar grammar; needs integral coefficients, otherwise
    /// a `p/q` rational is emitted per coefficient.
    std::string to_string() const;

private:
    void canonicalize();

    Ring ring_ = Ring::Rational;
    mpq_class a_{0};
    mpq_class b_{0};
};

RingScalar conjugate(const RingScalar& x);

/// Parses `term (('+'|'-') term)*` with term in {INT, [INT]w, [INT]w2, [INT]r2}.
/// UTF-8 omega, sqrt sign and superscript two are accepted as aliases.
RingScalar parse_scalar(std::string_view text);

/// Nonzero-or-not vector of scalars sharing one ring.
class RayVector {
public:
    RayVector() = default;
    explicit RayVector(std::vector<RingScalar> components);

    std::size_t dimension() const noexcept { return comps_.size(); }
    Ring ring() const noexcept { return ring_; }
    const std::vector<RingScalar>& components() const noexcept { return comps_; }
    const RingScalar& operator[](std::size_t i) const { return comps_[i]; }
    bool is_zero() const noexcept;

    RayVector scaled(const RingScalar& lambda) const;

    friend bool operator==(const RayVector&, const RayVector&) = default;

private:
    std::vector<RingScalar> comps_;
    Ring ring_ = Ring::Rational;
};

/// Sum of conj(u_i) * v_i.
RingScalar hermitian_inner(const RayVector& u, const RayVector& v);

/// True iff every 2x2 minor u_i v_j - u_j v_i vanishes.
bool is_proportional(const RayVector& u, const RayVector& v);

/// Projective class of a nonzero vector, represented with its first nonzero
/// component equal to one.
class Ray {
public:
    const RayVector& vector() const noexcept { return v_; }
    std::size_t dimension() const noexcept { return v_.dimension(); }
    Ring ring() const noexcept { return v_.ring(); }
    const RingScalar& operator[](std::size_t i) const { return v_[i]; }

    friend bool operator==(const Ray&, const Ray&) = default;
    friend bool operator<(const Ray& x, const Ray& y);

private:
    friend Ray normalize_ray(const RayVector& u);
    explicit Ray(RayVector v) : v_(std::move(v)) {}
    RayVector v_;
};

Ray normalize_ray(const RayVector& u);

/// Same ray re-tagged into a wider field (Rational -> Quadratic/Eisenstein).
Ray promoted(const Ray& r, Ring target);

inline bool orthogonal(const Ray& x, const Ray& y) { return hermitian_inner(x.vector(), y.vector()).is_zero(); }

/// Integral representative for display: denominators cleared, content removed,
/// and among unit multiples the one with the shortest text chosen.
RayVector display_vector(const Ray& r);

/// `{c1,c2,...}` using display_vector.
std::string format_ray(const Ray& r);

} // namespace mmph
