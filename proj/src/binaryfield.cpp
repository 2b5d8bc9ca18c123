#include "ram2cert/binaryfield.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ram2::gf2 {

int Poly::degree() const {
    return bits == 0 ? -1 : 63 - std::countl_zero(bits);
}

Poly Poly::from_coeffs(const std::vector<int>& coeffs) {
    if (coeffs.size() > 64)
        throw input_error("binary polynomial degree exceeds capacity (63)");
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0 && coeffs[i] != 1)
            throw input_error("binary polynomial coefficients must be 0 or 1");
        b |= static_cast<std::uint64_t>(coeffs[i]) << i;
    }
    if (coeffs.size() == 64 && (b >> 63))
        throw input_error("binary polynomial degree exceeds capacity (63)");
    return {b};
}

std::vector<int> Poly::coeffs() const {
    std::vector<int> c(static_cast<std::size_t>(degree() + 1));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i));
    return c;
}

Poly operator*(Poly a, Poly b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    if (a.degree() + b.degree() > 63)
        throw internal_error("binary polynomial product exceeds capacity (63)");
    std::uint64_t r = 0, bb = b.bits;
    for (int i = 0; bb >> i; ++i)
        if (bb >> i & 1) r ^= a.bits << i;
    return {r};
}

Poly Poly::rem(Poly a, Poly m) {
    if (m.is_zero()) throw internal_error("division by the zero polynomial");
    const int dm = m.degree();
    int da = a.degree();
    while (da >= dm) {
        a.bits ^= m.bits << (da - dm);
        da = a.degree();
    }
    return a;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = rem(a, b);
        a = b;
        b = r;
    }
    return a;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) os << "1";
        else if (i == 1) os << "x";
        else os << "x^" << i;
    }
    return os.str();
}

namespace {

// square of a polynomial of degree <= 31 by bit spreading
Poly poly_square_mod(Poly a, Poly m) {
    a = Poly::rem(a, m);
    std::uint64_t r = 0;
    for (int i = 0; a.bits >> i; ++i)
        if (a.bits >> i & 1) r |= std::uint64_t(1) << (2 * i);
    return Poly::rem({r}, m);
}

} // namespace

bool is_irreducible(Poly p) {
    const int d = p.degree();
    if (d < 1) throw input_error("irreducibility requires degree >= 1");
    if (d == 1) return true;
    // x^(2^d) == x mod p, and gcd(x^(2^(d/q)) - x, p) == 1 for prime q | d
    Poly h = Poly::x();
    std::vector<Poly> frob(static_cast<std::size_t>(d) + 1);
    frob[0] = h;
    for (int i = 1; i <= d; ++i) {
        h = poly_square_mod(h, p);
        frob[static_cast<std::size_t>(i)] = h;
    }
    if (frob[static_cast<std::size_t>(d)] != Poly::rem(Poly::x(), p)) return false;
    int dd = d;
    for (int q = 2; q * q <= dd; ++q) {
        if (dd % q) continue;
        while (dd % q == 0) dd /= q;
        Poly g = Poly::gcd(frob[static_cast<std::size_t>(d / q)] + Poly::x(), p);
        if (g.degree() != 0) return false;
    }
    if (dd > 1) {
        Poly g = Poly::gcd(frob[static_cast<std::size_t>(d / dd)] + Poly::x(), p);
        if (g.degree() != 0) return false;
    }
    return true;
}

FieldContext::FieldContext(Poly modulus) : modulus_(modulus) {
    k_ = modulus.degree();
    if (k_ < 1 || k_ > 16)
        throw input_error("field degree must be between 1 and 16, got " + std::to_string(k_));
    if (!is_irreducible(modulus))
        throw input_error("modulus is not irreducible: " + modulus.str());
    order_ = (std::uint32_t(1) << k_) - 1;
    std::uint32_t n = order_;
    for (std::uint32_t q = 2; q * q <= n; ++q)
        while (n % q == 0) {
            if (group_factors_.empty() || group_factors_.back() != q) group_factors_.push_back(q);
            n /= q;
        }
    if (n > 1) group_factors_.push_back(n);

    if (k_ <= 8) {
        const std::uint32_t size = std::uint32_t(1) << k_;
        mul_table_.resize(std::size_t(size) * size);
        for (std::uint32_t a = 0; a < size; ++a)
            for (std::uint32_t b = a; b < size; ++b) {
                Poly r = Poly::rem(Poly{a} * Poly{b}, modulus_);
                mul_table_[std::size_t(a) * size + b] = static_cast<std::uint8_t>(r.bits);
                mul_table_[std::size_t(b) * size + a] = static_cast<std::uint8_t>(r.bits);
            }
    }
}

Element FieldContext::element(std::uint32_t bits) const {
    if (bits >> k_)
        throw input_error("element bits out of range for F_2^" + std::to_string(k_));
    return Element(this, bits);
}

Element FieldContext::x() const {
    if (k_ == 1) return Element(this, 1); // x == 1 in F_2
    return Element(this, 2);
}

std::uint32_t FieldContext::mul_bits(std::uint32_t a, std::uint32_t b) const {
    if (!mul_table_.empty())
        return mul_table_[(std::size_t(a) << k_) + b];
    return static_cast<std::uint32_t>(Poly::rem(Poly{a} * Poly{b}, modulus_).bits);
}

const FieldContext& Element::context() const {
    if (!ctx_) throw internal_error("element has no field context");
    return *ctx_;
}

namespace {
void require_same_context(const Element& a, const Element& b) {
    if (&a.context() != &b.context())
        throw input_error("field elements belong to different contexts");
}
} // namespace

Element Element::operator+(const Element& o) const {
    require_same_context(*this, o);
    return Element(ctx_, bits_ ^ o.bits_);
}

Element Element::operator*(const Element& o) const {
    require_same_context(*this, o);
    return Element(ctx_, ctx_->mul_bits(bits_, o.bits_));
}

bool Element::operator==(const Element& o) const {
    require_same_context(*this, o);
    return bits_ == o.bits_;
}

Element Element::pow(long long e) const {
    const auto& ctx = context();
    if (bits_ == 0) {
        if (e < 0) throw input_error("inversion of zero in F_2^" + std::to_string(ctx.degree()));
        return e == 0 ? ctx.one() : *this;
    }
    const long long n = ctx.group_order();
    e %= n;
    if (e < 0) e += n;
    Element r = ctx.one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Element Element::inverse() const {
    if (bits_ == 0)
        throw input_error("inversion of zero in F_2^" + std::to_string(context().degree()));
    return pow(static_cast<long long>(context().group_order()) - 1);
}

Element Element::frobenius(int power) const {
    const int k = context().degree();
    power %= k;
    if (power < 0) power += k;
    Element r = *this;
    for (int i = 0; i < power; ++i) r = r * r;
    return r;
}

unsigned Element::order() const {
    const auto& ctx = context();
    if (bits_ == 0) throw input_error("order of zero is undefined");
    unsigned o = ctx.group_order();
    for (std::uint32_t q : ctx.group_prime_factors())
        while (o % q == 0 && pow(o / q) == ctx.one()) o /= q;
    return o;
}

int Element::trace() const {
    const int k = context().degree();
    Element s = context().zero(), t = *this;
    for (int i = 0; i < k; ++i) {
        s = s + t;
        t = t * t;
    }
    if (s.bits() > 1) throw internal_error("absolute trace landed outside F_2");
    return static_cast<int>(s.bits());
}

std::string Element::str() const {
    return Poly{bits_}.str();
}

Poly minimal_polynomial(const Element& a) {
    const auto& ctx = a.context();
    std::vector<Element> conjugates;
    Element t = a;
    do {
        conjugates.push_back(t);
        t = t * t;
    } while (!(t == a));
    // multiply out prod (x + c) over the conjugates, coefficients in the field
    std::vector<Element> poly{ctx.one()};
    for (const Element& c : conjugates) {
        std::vector<Element> next(poly.size() + 1, ctx.zero());
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] + poly[i] * c;
        }
        poly = std::move(next);
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i].bits() > 1)
            throw internal_error("minimal polynomial has a coefficient outside F_2");
        bits |= static_cast<std::uint64_t>(poly[i].bits()) << i;
    }
    return Poly{bits};
}

GeneratorSearchResult find_consistent_generator(const FieldContext& ctx,
                                                const GeneratorSearchInput& input,
                                                const OrderFromTrace& order_from_trace) {
    if (input.entries.empty())
        throw input_error("generator search: table has no (eigenvalue, order) entries");
    if (input.p2_exponents.empty())
        throw input_error("generator search: table has no T(p2) eigenvalue");
    if (!order_from_trace)
        throw input_error("generator search: no order-from-trace callback supplied");

    const Poly target = input.octic_a * input.octic_b;
    GeneratorSearchResult result;
    for (std::uint32_t bits = 1; bits <= ctx.group_order(); ++bits) {
        Element g = ctx.element(bits);
        if (g.order() != ctx.group_order()) continue;
        ++result.primitive_count;

        bool ok = true;
        for (int e : input.p2_exponents)
            if (g.pow(e).order() != 3) { ok = false; break; }
        if (ok) {
            Poly mp_f = minimal_polynomial(g.pow(input.charpoly_exp_f));
            Poly mp_fp = minimal_polynomial(g.pow(input.charpoly_exp_fprime));
            ok = (mp_f * mp_fp == target);
        }
        if (ok) {
            for (const SearchEntry& entry : input.entries) {
                if (order_from_trace(g.pow(entry.exponent)) != entry.claimed_order) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            bool a_matches = minimal_polynomial(g.pow(input.charpoly_exp_f)) == input.octic_a;
            result.witnesses.push_back({g, a_matches});
        }
    }

    if (!result.witnesses.empty()) {
        std::vector<std::uint32_t> bits;
        for (const auto& w : result.witnesses) bits.push_back(w.alpha.bits());
        std::sort(bits.begin(), bits.end());
        std::vector<std::uint32_t> orbit;
        Element t = ctx.element(bits.front());
        for (int i = 0; i < ctx.degree(); ++i) {
            orbit.push_back(t.bits());
            t = t * t;
        }
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        result.witnesses_single_tau_orbit = (orbit == bits);
    }
    return result;
}

} // namespace ram2::gf2
