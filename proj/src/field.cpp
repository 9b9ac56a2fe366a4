#include "talex/field.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "talex/errors.hpp"

namespace talex {

namespace {

// Dense polynomials over Q, c[i] = coefficient of t^i, no trailing zeros.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

// a = q*b + r with deg r < deg b.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    q.clear();
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (r.size() >= b.size()) {
        const size_t shift = r.size() - b.size();
        Rational c = r.back() / lead;
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
        trim(r);
    }
    trim(q);
}

// Phi_k = (t^k - 1) / prod_{d | k, d < k} Phi_d, filled bottom-up so
// every divisor is already in the cache when needed.
QPoly compute_cyclotomic(unsigned m, const std::map<unsigned, QPoly>& cache) {
    QPoly num(m + 1, Rational(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        QPoly q, r;
        divmod(num, cache.at(d), q, r);
        if (!r.empty()) throw Error("internal: cyclotomic division left a remainder");
        num = q;
    }
    return num;
}

const QPoly& cyclotomic_cached(unsigned m) {
    static std::mutex lock;
    static std::map<unsigned, QPoly> cache;
    std::scoped_lock guard(lock);
    if (!cache.count(m)) {
        for (unsigned d = 1; d <= m; ++d) {
            if (m % d == 0 && !cache.count(d)) cache.emplace(d, compute_cyclotomic(d, cache));
        }
    }
    return cache.at(m);
}

// Reduces an arbitrary-degree power-basis vector modulo Phi_m and pads
// to length phi(m).
std::vector<Rational> reduce_mod_cyclotomic(QPoly value, unsigned m) {
    const QPoly& phi = cyclotomic_cached(m);
    const size_t deg = phi.size() - 1;
    while (value.size() > deg) {
        const size_t shift = value.size() - 1 - deg;
        Rational c = value.back();
        for (size_t i = 0; i < phi.size(); ++i) value[shift + i] -= c * phi[i];
        trim(value);
    }
    value.resize(deg, Rational(0));
    return value;
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<Rational> cyclotomic_polynomial(unsigned m) {
    if (m < 1) throw Error("cyclotomic order must be positive");
    return cyclotomic_cached(m);
}

FieldDescriptor FieldDescriptor::cyclotomic(unsigned order) {
    if (order < 1) throw Error("cyclotomic order must be positive");
    if (order % 4 == 2) order /= 2;  // Q(zeta_m) = Q(zeta_{m/2}) for m == 2 mod 4
    if (order == 1) return rationals();
    return FieldDescriptor(Kind::Cyclotomic, order);
}

unsigned FieldDescriptor::degree() const {
    return is_rationals() ? 1 : euler_phi(order_);
}

std::string FieldDescriptor::to_string() const {
    if (is_rationals()) return "Q";
    return "cyclo(" + std::to_string(order_) + ")";
}

FieldDescriptor FieldDescriptor::parse(const std::string& text) {
    if (text == "Q" || text == "rationals") return rationals();
    for (const std::string prefix : {"cyclo(", "cyclotomic("}) {
        if (text.rfind(prefix, 0) == 0 && text.back() == ')') {
            const std::string inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
            if (inner.empty()) break;
            for (char c : inner) {
                if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("malformed field '" + text + "'");
            }
            return cyclotomic(static_cast<unsigned>(std::stoul(inner)));
        }
    }
    throw Error("malformed field '" + text + "'");
}

FieldElement FieldElement::zero(const FieldDescriptor& desc) {
    return FieldElement(desc, std::vector<Rational>(desc.degree(), Rational(0)));
}

FieldElement FieldElement::one(const FieldDescriptor& desc) {
    return from_rational(desc, Rational(1));
}

FieldElement FieldElement::from_rational(const FieldDescriptor& desc, const Rational& value) {
    std::vector<Rational> coeffs(desc.degree(), Rational(0));
    coeffs[0] = value;
    return FieldElement(desc, std::move(coeffs));
}

FieldElement FieldElement::from_int(const FieldDescriptor& desc, long value) {
    return from_rational(desc, Rational(value));
}

FieldElement FieldElement::root_of_unity(const FieldDescriptor& desc, long power) {
    if (desc.is_rationals()) return one(desc);
    const long m = desc.order();
    long k = power % m;
    if (k < 0) k += m;
    QPoly raw(static_cast<size_t>(k) + 1, Rational(0));
    raw.back() = 1;
    return FieldElement(desc, reduce_mod_cyclotomic(std::move(raw), desc.order()));
}

FieldElement FieldElement::from_coefficients(const FieldDescriptor& desc, std::vector<Rational> coeffs) {
    if (coeffs.size() != desc.degree()) {
        throw DescriptorMismatch("expected " + std::to_string(desc.degree()) + " coefficients, got " +
                                 std::to_string(coeffs.size()));
    }
    for (auto& c : coeffs) c.canonicalize();
    return FieldElement(desc, std::move(coeffs));
}

bool FieldElement::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool FieldElement::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return false;
    }
    return true;
}

void FieldElement::require_same(const FieldElement& other) const {
    if (desc_ != other.desc_) {
        throw DescriptorMismatch("field mismatch: " + desc_.to_string() + " vs " + other.desc_.to_string());
    }
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    require_same(other);
    std::vector<Rational> out(coeffs_);
    for (size_t i = 0; i < out.size(); ++i) out[i] += other.coeffs_[i];
    return FieldElement(desc_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
    require_same(other);
    std::vector<Rational> out(coeffs_);
    for (size_t i = 0; i < out.size(); ++i) out[i] -= other.coeffs_[i];
    return FieldElement(desc_, std::move(out));
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c = -c;
    return FieldElement(desc_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    require_same(other);
    if (desc_.is_rationals()) return FieldElement(desc_, {coeffs_[0] * other.coeffs_[0]});
    QPoly a(coeffs_), b(other.coeffs_);
    trim(a);
    trim(b);
    return FieldElement(desc_, reduce_mod_cyclotomic(mul(a, b), desc_.order()));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    if (desc_.is_rationals()) return FieldElement(desc_, {1 / coeffs_[0]});

    // Extended Euclid against Phi_m; Phi_m is irreducible over Q, so the
    // gcd with any nonzero residue is a nonzero constant.
    QPoly r0 = cyclotomic_cached(desc_.order());
    QPoly r1(coeffs_);
    trim(r1);
    QPoly u0 = {};             // coefficient of *this in r0
    QPoly u1 = {Rational(1)};  // coefficient of *this in r1
    while (!r1.empty()) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly u2 = u0;
        QPoly qu = mul(q, u1);
        if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.size() != 1) throw Error("internal: residue shares a factor with the cyclotomic polynomial");
    const Rational scale = 1 / r0[0];
    for (auto& c : u0) c *= scale;
    return FieldElement(desc_, reduce_mod_cyclotomic(std::move(u0), desc_.order()));
}

FieldElement FieldElement::conjugate() const {
    if (desc_.is_rationals()) return *this;
    const unsigned m = desc_.order();
    QPoly raw(m, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        raw[(m - i) % m] += coeffs_[i];
    }
    return FieldElement(desc_, reduce_mod_cyclotomic(std::move(raw), m));
}

bool FieldElement::operator==(const FieldElement& other) const {
    return desc_ == other.desc_ && coeffs_ == other.coeffs_;
}

std::string FieldElement::to_string() const {
    if (desc_.is_rationals()) return rational_to_string(coeffs_[0]);
    std::ostringstream out;
    out << "cyclo(" << desc_.order() << ")[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ",";
        out << rational_to_string(coeffs_[i]);
    }
    out << "]";
    return out.str();
}

FieldElement FieldElement::parse(const FieldDescriptor& desc, const std::string& text) {
    const size_t bracket = text.find('[');
    if (bracket == std::string::npos) {
        return from_rational(desc, parse_rational(text));
    }
    if (text.back() != ']') throw Error("malformed field element '" + text + "'");
    const FieldDescriptor written = FieldDescriptor::parse(text.substr(0, bracket));
    if (written != desc) {
        throw DescriptorMismatch("element written over " + written.to_string() + " used in " + desc.to_string());
    }
    std::vector<Rational> coeffs;
    std::string inner = text.substr(bracket + 1, text.size() - bracket - 2);
    size_t start = 0;
    while (start <= inner.size() && !inner.empty()) {
        size_t comma = inner.find(',', start);
        if (comma == std::string::npos) comma = inner.size();
        coeffs.push_back(parse_rational(inner.substr(start, comma - start)));
        start = comma + 1;
        if (start > inner.size()) break;
    }
    return from_coefficients(desc, std::move(coeffs));
}

}  // namespace talex
