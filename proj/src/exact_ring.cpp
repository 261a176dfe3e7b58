#include "mmph/exact_ring.hpp"

#include "mmph/errors.hpp"

#include <array>
#include <cctype>

namespace mmph {

const char* ring_name(Ring r) noexcept {
    switch (r) {
    case Ring::Rational: return "rational";
    case Ring::Quadratic: return "sqrt2";
    case Ring::Eisenstein: return "eisenstein";
    }
    return "?";
}

Ring join_rings(Ring a, Ring b) {
    if (a == b || b == Ring::Rational) return a;
    if (a == Ring::Rational) return b;
    throw RingMismatch("cannot mix Q(sqrt2) and Q(omega) scalars");
}

RingScalar::RingScalar(long value) : a_(value) {}

RingScalar::RingScalar(Ring ring, mpq_class a, mpq_class b) : ring_(ring), a_(std::move(a)), b_(std::move(b)) {
    if (ring_ == Ring::Rational && sgn(b_) != 0) throw RingMismatch("rational scalar with irrational part");
    canonicalize();
}

RingScalar RingScalar::omega() { return {Ring::Eisenstein, 0, 1}; }
RingScalar RingScalar::omega_squared() { return {Ring::Eisenstein, -1, -1}; }
RingScalar RingScalar::sqrt2() { return {Ring::Quadratic, 0, 1}; }

void RingScalar::canonicalize() {
    a_.canonicalize();
    b_.canonicalize();
}

RingScalar RingScalar::promoted(Ring target) const {
    RingScalar r = *this;
    r.ring_ = join_rings(target, ring_);
    if (r.ring_ != target) throw RingMismatch("cannot demote scalar to rational");
    return r;
}

RingScalar& RingScalar::operator+=(const RingScalar& rhs) {
    ring_ = join_rings(ring_, rhs.ring_);
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

RingScalar& RingScalar::operator-=(const RingScalar& rhs) {
    ring_ = join_rings(ring_, rhs.ring_);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

RingScalar& RingScalar::operator*=(const RingScalar& rhs) {
    ring_ = join_rings(ring_, rhs.ring_);
    mpq_class ac = a_ * rhs.a_;
    mpq_class bd = b_ * rhs.b_;
    mpq_class cross = a_ * rhs.b_ + b_ * rhs.a_;
    switch (ring_) {
    case Ring::Rational:
        a_ = ac;
        break;
    case Ring::Quadratic:
        // (a + b r)(c + d r) = ac + 2bd + (ad + bc) r
        a_ = ac + 2 * bd;
        b_ = cross;
        break;
    case Ring::Eisenstein:
        // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w
        a_ = ac - bd;
        b_ = cross - bd;
        break;
    }
    return *this;
}

RingScalar RingScalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    switch (ring_) {
    case Ring::Rational:
        return {Ring::Rational, 1 / a_};
    case Ring::Quadratic: {
        mpq_class norm = a_ * a_ - 2 * b_ * b_;
        return {Ring::Quadratic, a_ / norm, -b_ / norm};
    }
    case Ring::Eisenstein: {
        // (a + b w)^-1 = ((a - b) - b w) / (a^2 - ab + b^2)
        mpq_class norm = a_ * a_ - a_ * b_ + b_ * b_;
        return {Ring::Eisenstein, (a_ - b_) / norm, -b_ / norm};
    }
    }
    return {};
}

RingScalar& RingScalar::operator/=(const RingScalar& rhs) { return *this *= rhs.inverse(); }

RingScalar RingScalar::operator-() const {
    RingScalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

bool operator==(const RingScalar& x, const RingScalar& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    return sgn(x.b_) == 0 || x.ring_ == y.ring_;
}

std::strong_ordering compare(const RingScalar& x, const RingScalar& y) {
    if (auto c = x.ring_ <=> y.ring_; c != 0) return c;
    if (int c = cmp(x.a_, y.a_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(x.b_, y.b_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

RingScalar conjugate(const RingScalar& x) {
    if (x.ring() != Ring::Eisenstein) return x;
    // conj(w) = w^2 = -1 - w, so a + b w -> (a - b) - b w
    return {Ring::Eisenstein, x.a() - x.b(), -x.b()};
}

namespace {

struct Term {
    mpq_class coeff;
    const char* unit; // "", "w", "w2", "r2"
};

void append_term(std::string& out, const mpq_class& c, const char* unit) {
    if (sgn(c) == 0) return;
    bool neg = sgn(c) < 0;
    mpq_class mag = abs(c);
    if (!out.empty()) out += neg ? '-' : '+';
    else if (neg) out += '-';
    bool has_unit = unit[0] != '\0';
    if (!has_unit || mag != 1) out += mag.get_str();
    out += unit;
}

std::string render(std::span<const Term> terms) {
    std::string out;
    for (const auto& t : terms) append_term(out, t.coeff, t.unit);
    return out.empty() ? "0" : out;
}

} // namespace

std::string RingScalar::to_string() const {
    if (sgn(b_) == 0) return render(std::array{Term{a_, ""}});
    if (ring_ == Ring::Quadratic) return render(std::array{Term{a_, ""}, Term{b_, "r2"}});
    // a + b w has three natural spellings; keep the shortest.
    //   p + q w2  with q = -b, p = a - b
    //   p w + q w2  with q = -a, p = b - a
    std::array<std::string, 3> forms = {
        render(std::array{Term{a_, ""}, Term{b_, "w"}}),
        render(std::array{Term{a_ - b_, ""}, Term{-b_, "w2"}}),
        render(std::array{Term{b_ - a_, "w"}, Term{-a_, "w2"}}),
    };
    std::size_t best = 0;
    for (std::size_t i = 1; i < forms.size(); ++i)
        if (forms[i].size() < forms[best].size()) best = i;
    return forms[best];
}

namespace {

std::string ascii_aliases(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };
        if (starts("\xCF\x89")) { // omega
            out += 'w';
            i += 2;
        } else if (starts("\xE2\x88\x9A")) { // square root sign
            out += 'r';
            i += 3;
        } else if (starts("\xC2\xB2")) { // superscript two
            out += '2';
            i += 2;
        } else {
            out += text[i++];
        }
    }
    return out;
}

} // namespace

RingScalar parse_scalar(std::string_view raw) {
    std::string text = ascii_aliases(raw);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    std::size_t start = 0;
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    text.erase(0, start);
    if (text.empty()) throw ParseError("empty scalar");

    RingScalar total;
    std::size_t i = 0;
    bool first = true;
    while (i < text.size()) {
        bool neg = false;
        if (text[i] == '+' || text[i] == '-') {
            neg = text[i] == '-';
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in scalar '" + std::string(raw) + "'");
        }
        std::size_t digits_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        mpz_class coeff = 1;
        bool has_digits = i > digits_start;
        if (has_digits) coeff = mpz_class(text.substr(digits_start, i - digits_start));
        RingScalar unit = 1;
        bool has_unit = false;
        if (i < text.size() && text[i] == 'w') {
            has_unit = true;
            ++i;
            if (i < text.size() && text[i] == '2') {
                unit = RingScalar::omega_squared();
                ++i;
            } else {
                unit = RingScalar::omega();
            }
        } else if (i < text.size() && text[i] == 'r') {
            ++i;
            if (i >= text.size() || text[i] != '2') throw ParseError("expected 'r2' in scalar '" + std::string(raw) + "'");
            ++i;
            has_unit = true;
            unit = RingScalar::sqrt2();
        }
        if (!has_digits && !has_unit) throw ParseError("malformed scalar '" + std::string(raw) + "'");
        RingScalar term = unit * RingScalar(Ring::Rational, mpq_class(coeff));
        total += neg ? -term : term;
        first = false;
    }
    return total;
}

RayVector::RayVector(std::vector<RingScalar> components) : comps_(std::move(components)) {
    for (const auto& c : comps_) ring_ = join_rings(ring_, c.ring());
    for (auto& c : comps_) c = c.promoted(ring_);
}

bool RayVector::is_zero() const noexcept {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

RayVector RayVector::scaled(const RingScalar& lambda) const {
    std::vector<RingScalar> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c * lambda);
    return RayVector(std::move(out));
}

namespace {

void require_compatible(const RayVector& u, const RayVector& v) {
    if (u.dimension() != v.dimension()) throw RingMismatch("vector dimensions differ");
    join_rings(u.ring(), v.ring());
}

} // namespace

RingScalar hermitian_inner(const RayVector& u, const RayVector& v) {
    require_compatible(u, v);
    RingScalar sum;
    for (std::size_t i = 0; i < u.dimension(); ++i) sum += conjugate(u[i]) * v[i];
    return sum;
}

bool is_proportional(const RayVector& u, const RayVector& v) {
    require_compatible(u, v);
    for (std::size_t i = 0; i < u.dimension(); ++i)
        for (std::size_t j = i + 1; j < u.dimension(); ++j)
            if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return false;
    return true;
}

bool operator<(const Ray& x, const Ray& y) {
    if (x.ring() != y.ring()) return x.ring() < y.ring();
    if (x.dimension() != y.dimension()) return x.dimension() < y.dimension();
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        auto c = compare(x[i], y[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

Ray normalize_ray(const RayVector& u) {
    for (std::size_t i = 0; i < u.dimension(); ++i) {
        if (u[i].is_zero()) continue;
        RayVector v = u.scaled(u[i].inverse());
        return Ray(std::move(v));
    }
    throw std::domain_error("cannot normalize the zero vector");
}

Ray promoted(const Ray& r, Ring target) {
    std::vector<RingScalar> comps;
    for (const auto& c : r.vector().components()) comps.push_back(c.promoted(target));
    return normalize_ray(RayVector(std::move(comps)));
}

RayVector display_vector(const Ray& r) {
    mpz_class lcm = 1;
    for (const auto& c : r.vector().components()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.a().get_den_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.b().get_den_mpz_t());
    }
    mpz_class content = 0;
    for (const auto& c : r.vector().components()) {
        mpz_class na = c.a().get_num() * (lcm / c.a().get_den());
        mpz_class nb = c.b().get_num() * (lcm / c.b().get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), na.get_mpz_t());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), nb.get_mpz_t());
    }
    RingScalar scale(Ring::Rational, mpq_class(lcm, content));
    RayVector base = r.vector().scaled(scale);

    std::vector<RingScalar> units = {1, -1};
    if (r.ring() == Ring::Eisenstein) {
        units = {1, RingScalar::omega(), RingScalar::omega_squared(), -1, -RingScalar::omega(),
                 -RingScalar::omega_squared()};
    }
    RayVector best;
    std::size_t best_len = 0;
    for (const auto& unit : units) {
        RayVector cand = base.scaled(unit);
        std::size_t len = 0;
        for (const auto& c : cand.components()) len += c.to_string().size();
        if (best.dimension() == 0 || len < best_len) {
            best = std::move(cand);
            best_len = len;
        }
    }
    return best;
}

std::string format_ray(const Ray& r) {
    RayVector v = display_vector(r);
    std::string out = "{";
    for (std::size_t i = 0; i < v.dimension(); ++i) {
        if (i) out += ',';
        out += v[i].to_string();
    }
    out += '}';
    return out;
}

} // namespace mmph
