#include "oracles.hpp"

namespace oracles {

QPoly qp_trim(QPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return qp_trim(std::move(c));
}

QPoly qp_rem(QPoly a, const QPoly& m) {
    a = qp_trim(std::move(a));
    while (a.size() >= m.size() && !m.empty()) {
        mpq_class q = a.back() / m.back();
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= q * m[i];
        a = qp_trim(std::move(a));
    }
    return a;
}

QPoly qp_compose_mod(const QPoly& a, const QPoly& s, const QPoly& m) {
    QPoly r;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        r = qp_rem(qp_mul(r, s), m);
        if (r.empty()) r = QPoly{*it};
        else r[0] += *it;
        r = qp_trim(std::move(r));
    }
    return r;
}

mpq_class resultant(QPoly a, QPoly b) {
    a = qp_trim(std::move(a));
    b = qp_trim(std::move(b));
    if (a.empty() || b.empty()) return 0;
    const int da = static_cast<int>(a.size()) - 1;
    const int db = static_cast<int>(b.size()) - 1;
    if (db == 0) {
        mpq_class r = 1;
        for (int i = 0; i < da; ++i) r *= b[0];
        return r;
    }
    QPoly r = qp_rem(a, b);
    if (r.empty()) return 0;
    const int dr = static_cast<int>(r.size()) - 1;
    mpq_class lead_pow = 1;
    for (int i = 0; i < da - dr; ++i) lead_pow *= b.back();
    mpq_class sign = (da % 2 == 1 && db % 2 == 1) ? -1 : 1;
    return sign * lead_pow * resultant(b, r);
}

QPoly min_poly_q() {
    QPoly m(9);
    for (int i = 0; i <= 8; ++i) m[static_cast<std::size_t>(i)] = ram2::nf::kMinPoly[static_cast<std::size_t>(i)];
    return m;
}

QPoly element_to_poly(const ram2::nf::Element& a) {
    QPoly p(8);
    for (int i = 0; i < 8; ++i) p[static_cast<std::size_t>(i)] = a.coord(i);
    return qp_trim(std::move(p));
}

ram2::nf::Element poly_to_element(const QPoly& a) {
    std::array<mpq_class, 8> coords{};
    for (std::size_t i = 0; i < a.size(); ++i) coords.at(i) = a[i];
    return ram2::nf::Element::from_coords(coords);
}

mpq_class norm_by_resultant(const ram2::nf::Element& a) {
    return resultant(min_poly_q(), element_to_poly(a));
}

ram2::nf::Element sigma_by_substitution(const ram2::nf::Element& a) {
    const QPoly s = {0, 3, 0, -1}; // -x^3 + 3x
    return poly_to_element(qp_compose_mod(element_to_poly(a), s, min_poly_q()));
}

int quadratic_root_count(const ram2::gf2::Element& t) {
    const auto& ctx = t.context();
    int count = 0;
    for (std::uint32_t bits = 0; bits <= ctx.group_order(); ++bits) {
        ram2::gf2::Element r = ctx.element(bits);
        if (r * r + t * r + ctx.one() == ctx.zero()) ++count;
    }
    return count;
}

} // namespace oracles
