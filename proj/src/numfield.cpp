#include "ram2cert/numfield.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ram2::nf {

namespace {

// beta^k for k = 0..14 expressed in the basis; integer entries.
using Row = std::array<mpz_class, 8>;

const std::array<Row, 15>& power_table() {
    static const std::array<Row, 15> table = [] {
        std::array<Row, 15> t{};
        for (int k = 0; k < 8; ++k) t[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
        // beta^8 = 8 beta^6 - 20 beta^4 + 16 beta^2 - 2
        Row beta8{};
        beta8[0] = -2; beta8[2] = 16; beta8[4] = -20; beta8[6] = 8;
        t[8] = beta8;
        for (int k = 9; k <= 14; ++k) {
            const Row& prev = t[static_cast<std::size_t>(k - 1)];
            Row cur{};
            for (int i = 0; i < 7; ++i) cur[static_cast<std::size_t>(i + 1)] = prev[static_cast<std::size_t>(i)];
            const mpz_class& top = prev[7];
            for (int i = 0; i < 8; ++i)
                cur[static_cast<std::size_t>(i)] += top * beta8[static_cast<std::size_t>(i)];
            t[static_cast<std::size_t>(k)] = cur;
        }
        return t;
    }();
    return table;
}

} // namespace

Element::Element() {
    for (auto& v : c_) v = 0;
}

Element Element::from_coords(std::array<mpq_class, 8> coords) {
    Element e;
    for (int i = 0; i < 8; ++i) {
        coords[static_cast<std::size_t>(i)].canonicalize();
        e.c_[static_cast<std::size_t>(i)] = coords[static_cast<std::size_t>(i)];
    }
    return e;
}

Element Element::from_int_coords(const std::array<long, 8>& coords) {
    Element e;
    for (int i = 0; i < 8; ++i) e.c_[static_cast<std::size_t>(i)] = coords[static_cast<std::size_t>(i)];
    return e;
}

Element Element::integer(long n) {
    Element e;
    e.c_[0] = n;
    return e;
}

Element Element::beta() {
    Element e;
    e.c_[1] = 1;
    return e;
}

bool Element::is_integral() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const mpq_class& v) { return v.get_den() == 1; });
}

bool Element::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& v) { return v == 0; });
}

Element Element::operator+(const Element& o) const {
    Element r;
    for (int i = 0; i < 8; ++i) r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] + o.c_[static_cast<std::size_t>(i)];
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r;
    for (int i = 0; i < 8; ++i) r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] - o.c_[static_cast<std::size_t>(i)];
    return r;
}

Element Element::operator-() const {
    Element r;
    for (int i = 0; i < 8; ++i) r.c_[static_cast<std::size_t>(i)] = -c_[static_cast<std::size_t>(i)];
    return r;
}

Element Element::scaled(const mpq_class& s) const {
    Element r;
    for (int i = 0; i < 8; ++i) r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] * s;
    return r;
}

Element Element::operator*(const Element& o) const {
    std::array<mpq_class, 15> conv{};
    for (int i = 0; i < 8; ++i) {
        if (c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < 8; ++j)
            conv[static_cast<std::size_t>(i + j)] += c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
    }
    Element r;
    const auto& table = power_table();
    for (int k = 0; k < 15; ++k) {
        if (conv[static_cast<std::size_t>(k)] == 0) continue;
        for (int i = 0; i < 8; ++i)
            r.c_[static_cast<std::size_t>(i)] += conv[static_cast<std::size_t>(k)] * table[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    }
    return r;
}

std::string Element::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 8; ++i) {
        const mpq_class& v = c_[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        mpq_class a = v;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        } else if (a < 0) {
            os << "-";
            a = -a;
        }
        first = false;
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) os << (a != 1 ? "*b" : "b");
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Element apply_sigma(const Element& a, int power) {
    power %= 8;
    if (power < 0) power += 8;
    static const std::array<Element, 8> sigma_beta_powers = [] {
        // powers of sigma(beta) = -beta^3 + 3 beta
        std::array<Element, 8> pows;
        Element s = Element::from_int_coords({0, 3, 0, -1, 0, 0, 0, 0});
        pows[0] = Element::integer(1);
        for (int i = 1; i < 8; ++i) pows[static_cast<std::size_t>(i)] = pows[static_cast<std::size_t>(i - 1)] * s;
        return pows;
    }();
    Element cur = a;
    for (int step = 0; step < power; ++step) {
        Element next;
        for (int i = 0; i < 8; ++i) {
            if (cur.coord(i) == 0) continue;
            next = next + sigma_beta_powers[static_cast<std::size_t>(i)].scaled(cur.coord(i));
        }
        cur = next;
    }
    return cur;
}

mpq_class norm(const Element& a) {
    // multiplication-by-a matrix: column j = coordinates of a * beta^j
    std::array<std::array<mpq_class, 8>, 8> m;
    Element col = a;
    for (int j = 0; j < 8; ++j) {
        for (int i = 0; i < 8; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coord(i);
        if (j < 7) col = col * Element::beta();
    }
    // exact Gaussian elimination
    mpq_class det = 1;
    for (int k = 0; k < 8; ++k) {
        int pivot = -1;
        for (int i = k; i < 8; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(k)]);
            det = -det;
        }
        det *= m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        const mpq_class inv = 1 / m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i = k + 1; i < 8; ++i) {
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == 0) continue;
            const mpq_class factor = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * inv;
            for (int j = k; j < 8; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= factor * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        }
    }
    det.canonicalize();
    return det;
}

const mpz_class& field_discriminant() {
    static const mpz_class disc = [] {
        // resultant(m, m') via the 15x15 Sylvester matrix, fraction-free
        // Bareiss elimination; disc = (-1)^(8*7/2) res(m, m') = res(m, m')
        std::array<long, 9> m{};
        std::copy(kMinPoly.begin(), kMinPoly.end(), m.begin());
        std::array<long, 8> dm{};
        for (int i = 1; i <= 8; ++i) dm[static_cast<std::size_t>(i - 1)] = static_cast<long>(i) * kMinPoly[static_cast<std::size_t>(i)];
        const int n = 15;
        std::vector<std::vector<mpz_class>> s(static_cast<std::size_t>(n), std::vector<mpz_class>(static_cast<std::size_t>(n), 0));
        for (int r = 0; r < 7; ++r)
            for (int j = 0; j <= 8; ++j) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = m[static_cast<std::size_t>(8 - j)];
        for (int r = 0; r < 8; ++r)
            for (int j = 0; j <= 7; ++j) s[static_cast<std::size_t>(7 + r)][static_cast<std::size_t>(r + j)] = dm[static_cast<std::size_t>(7 - j)];
        mpz_class prev = 1;
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
                int pivot = -1;
                for (int i = k + 1; i < n; ++i)
                    if (s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) { pivot = i; break; }
                if (pivot < 0) return mpz_class(0);
                std::swap(s[static_cast<std::size_t>(k)], s[static_cast<std::size_t>(pivot)]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i) {
                for (int j = k + 1; j < n; ++j) {
                    mpz_class v = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                                  s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                    s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                }
                s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
            }
            prev = s[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        }
        return mpz_class(sign * s[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)]);
    }();
    return disc;
}

const PrimeIdealFactor& RationalPrimeFactorization::by_orbit(int index) const {
    for (const auto& f : factors)
        if (f.orbit_index == index) return f;
    throw input_error("no factor with orbit index " + std::to_string(index) +
                      " above p = " + std::to_string(p));
}

namespace {

fp::FpPoly min_poly_mod(std::uint64_t p) {
    std::vector<std::uint64_t> c(9);
    for (int i = 0; i <= 8; ++i) {
        long v = kMinPoly[static_cast<std::size_t>(i)] % static_cast<long>(p);
        if (v < 0) v += static_cast<long>(p);
        c[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(v);
    }
    return fp::FpPoly(p, std::move(c));
}

fp::FpPoly sigma_poly_mod(std::uint64_t p) {
    // sigma(beta) = 3x - x^3
    return fp::FpPoly(p, {0, 3 % p, 0, p - 1});
}

fp::FpPoly element_poly_mod(const Element& a, std::uint64_t p) {
    if (!a.is_integral()) throw input_error("generator must have integral coordinates");
    std::vector<std::uint64_t> c(8);
    const mpz_class pz = static_cast<long>(p);
    for (int i = 0; i < 8; ++i) {
        mpz_class v = a.coord(i).get_num() % pz;
        if (v < 0) v += pz;
        c[static_cast<std::size_t>(i)] = v.get_ui();
    }
    return fp::FpPoly(p, std::move(c));
}

// equal-degree splitting (Cantor-Zassenhaus), odd p, all factors degree f
std::vector<fp::FpPoly> equal_degree_factor(const fp::FpPoly& poly, int f) {
    const std::uint64_t p = poly.p;
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f));
    const mpz_class half = (q - 1) / 2;

    std::mt19937_64 rng(0x52414d32u); // fixed seed: reproducible runs
    std::vector<fp::FpPoly> done, work{poly.monic()};
    while (!work.empty()) {
        fp::FpPoly h = work.back();
        work.pop_back();
        if (h.degree() == f) {
            done.push_back(h);
            continue;
        }
        for (;;) {
            std::vector<std::uint64_t> rc(static_cast<std::size_t>(h.degree()));
            for (auto& v : rc) v = rng() % p;
            fp::FpPoly r(p, std::move(rc));
            if (r.is_zero()) continue;
            fp::FpPoly w = fp::pow_mod(r, half, h);
            w = fp::sub(w, fp::FpPoly(p, {1}));
            fp::FpPoly g = fp::gcd(w, h);
            if (g.degree() > 0 && g.degree() < h.degree()) {
                if (!fp::rem(h, g).is_zero())
                    throw internal_error("equal-degree splitting produced a non-divisor");
                // cofactor h / g by synthetic division
                fp::FpPoly r2 = h;
                std::vector<std::uint64_t> qa(static_cast<std::size_t>(h.degree() - g.degree() + 1), 0);
                const std::uint64_t lead_inv = fp::inv_mod(g.leading(), p);
                while (r2.degree() >= g.degree()) {
                    int shift = r2.degree() - g.degree();
                    std::uint64_t qc = fp::mul_mod(r2.leading(), lead_inv, p);
                    qa[static_cast<std::size_t>(shift)] = qc;
                    for (int i = 0; i <= g.degree(); ++i) {
                        auto& dst = r2.c[static_cast<std::size_t>(i + shift)];
                        dst = (dst + p - fp::mul_mod(qc, g.coeff(i), p)) % p;
                    }
                    r2.normalize();
                }
                work.push_back(g.monic());
                work.push_back(fp::FpPoly(p, std::move(qa)).monic());
                break;
            }
        }
    }
    return done;
}

} // namespace

std::pair<int, int> splitting_type_by_reciprocity(std::uint64_t p) {
    if (p == 2) throw input_error("reciprocity oracle does not apply at p = 2");
    if (!fp::is_prime_u64(p)) throw input_error(std::to_string(p) + " is not prime");
    const std::uint64_t r = p % 32;
    std::uint64_t v = r;
    int f = 1;
    while (v != 1 && v != 31) {
        v = v * r % 32;
        ++f;
    }
    return {f, 8 / f};
}

RationalPrimeFactorization factor_rational_prime(std::uint64_t p) {
    if (!fp::is_prime_u64(p)) throw input_error(std::to_string(p) + " is not prime");

    RationalPrimeFactorization fact;
    fact.p = p;

    if (p == 2) {
        // m = x^8 mod 2: the unique totally ramified prime (2, beta)
        PrimeIdealFactor f;
        f.p = 2;
        f.local_factor = fp::FpPoly(2, {0, 1});
        f.e = 8;
        f.f = 1;
        f.orbit_index = 1;
        fact.factors.push_back(std::move(f));
        return fact;
    }

    const fp::FpPoly m = min_poly_mod(p);
    // residue degree: smallest d | 8 with x^(p^d) == x mod every factor
    int f = 0;
    fp::FpPoly h(p, {0, 1}); // x
    const mpz_class pz = static_cast<unsigned long>(p);
    int powered = 0;
    for (int d : {1, 2, 4, 8}) {
        while (powered < d) {
            h = fp::pow_mod(h, pz, m);
            ++powered;
        }
        fp::FpPoly g = fp::gcd(fp::sub(h, fp::FpPoly(p, {0, 1})), m);
        if (g.degree() > 0) {
            if (g.degree() != 8)
                throw internal_error("mixed residue degrees above an unramified prime");
            f = d;
            break;
        }
    }
    if (f == 0) throw internal_error("residue degree of p does not divide 8");
    const int g_count = 8 / f;

    std::vector<fp::FpPoly> locals;
    if (f == 8) {
        locals.push_back(m.monic());
    } else if (f == 1 && p <= 1000000) {
        // deterministic fallback: exhaustive root scan
        for (std::uint64_t r = 0; r < p; ++r)
            if (m.eval(r) == 0) locals.emplace_back(p, std::vector<std::uint64_t>{(p - r) % p, 1});
        if (static_cast<int>(locals.size()) != 8)
            throw internal_error("completely split prime did not yield 8 roots");
    } else {
        locals = equal_degree_factor(m, f);
    }
    std::sort(locals.begin(), locals.end());

    for (auto& lf : locals) {
        PrimeIdealFactor pf;
        pf.p = p;
        pf.local_factor = lf;
        pf.e = 1;
        pf.f = f;
        fact.factors.push_back(std::move(pf));
    }
    if (static_cast<int>(fact.factors.size()) != g_count)
        throw internal_error("factor count does not match residue degree");

    // sigma-orbit labels: base point = canonical smallest factor, then
    // p^(i+1) = sigma(p^i)
    std::vector<int> order_of(fact.factors.size(), 0);
    std::size_t cur = 0;
    for (int idx = 1; idx <= g_count; ++idx) {
        order_of[cur] = idx;
        if (idx == g_count) break;
        const fp::FpPoly& hcur = fact.factors[cur].local_factor;
        const fp::FpPoly s = sigma_poly_mod(p);
        int next = -1;
        for (std::size_t j = 0; j < fact.factors.size(); ++j) {
            if (fp::compose_mod(hcur, s, fact.factors[j].local_factor).is_zero()) {
                if (next >= 0) throw internal_error("sigma image of a prime is ambiguous");
                next = static_cast<int>(j);
            }
        }
        if (next < 0) throw internal_error("sigma image of a prime not found");
        if (order_of[static_cast<std::size_t>(next)] != 0)
            throw internal_error("sigma-orbit on the factors is not a single cycle");
        cur = static_cast<std::size_t>(next);
    }
    for (std::size_t i = 0; i < fact.factors.size(); ++i)
        fact.factors[i].orbit_index = order_of[i];
    std::sort(fact.factors.begin(), fact.factors.end(),
              [](const PrimeIdealFactor& a, const PrimeIdealFactor& b) {
                  return a.orbit_index < b.orbit_index;
              });
    return fact;
}

const PrimeIdealFactor& sigma_on_prime(const RationalPrimeFactorization& fact,
                                       const PrimeIdealFactor& q) {
    if (q.p != fact.p) throw input_error("factor does not belong to this factorization");
    if (fact.p == 2) return fact.factors.front(); // the unique prime is sigma-stable
    const fp::FpPoly s = sigma_poly_mod(fact.p);
    const PrimeIdealFactor* found = nullptr;
    for (const auto& cand : fact.factors) {
        if (fp::compose_mod(q.local_factor, s, cand.local_factor).is_zero()) {
            if (found) throw internal_error("sigma image of a prime is ambiguous");
            found = &cand;
        }
    }
    if (!found) throw internal_error("sigma image of a prime not found");
    return *found;
}

int orbit_containing_generator(const RationalPrimeFactorization& fact, const Element& gen) {
    const fp::FpPoly gp = element_poly_mod(gen, fact.p);
    int found = 0, count = 0;
    for (const auto& f : fact.factors) {
        if (fp::rem(gp, f.local_factor).is_zero()) {
            found = f.orbit_index;
            ++count;
        }
    }
    if (count != 1)
        throw input_error("generator lies in " + std::to_string(count) +
                          " factors above p = " + std::to_string(fact.p) +
                          "; expected exactly one");
    return found;
}

RationalPrimeFactorization relabel_from_generator(RationalPrimeFactorization fact,
                                                  const Element& gen) {
    const int base = orbit_containing_generator(fact, gen);
    const int g = static_cast<int>(fact.factors.size());
    for (auto& f : fact.factors)
        f.orbit_index = (f.orbit_index - base + g) % g + 1;
    std::sort(fact.factors.begin(), fact.factors.end(),
              [](const PrimeIdealFactor& a, const PrimeIdealFactor& b) {
                  return a.orbit_index < b.orbit_index;
              });
    return fact;
}

} // namespace ram2::nf
