#include "ram2cert/descent.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ram2cert/sl2cert.hpp"

namespace ram2::descent {

using nlohmann::ordered_json;

namespace {

std::string prime_label(std::uint64_t p, int orbit) {
    return "p" + std::to_string(p) + "^" + std::to_string(orbit);
}

bool valid_claimed_order(unsigned o) {
    if (o == 0) return false;
    return o <= 2 || 255 % o == 0 || 257 % o == 0;
}

// split a degree-16 polynomial over F_2 into two irreducible octics
std::optional<std::pair<gf2::Poly, gf2::Poly>> split_into_octics(gf2::Poly c) {
    if (c.degree() != 16) return std::nullopt;
    for (std::uint64_t bits = (1u << 8) | 1; bits < (1u << 9); bits += 2) {
        gf2::Poly q{bits};
        if (!gf2::Poly::rem(c, q).is_zero() || !gf2::is_irreducible(q)) continue;
        // cofactor by long division
        gf2::Poly quot{0}, r = c;
        while (r.degree() >= q.degree()) {
            int shift = r.degree() - q.degree();
            quot.bits |= std::uint64_t(1) << shift;
            r.bits ^= q.bits << shift;
        }
        if (quot.degree() == 8 && gf2::is_irreducible(quot)) {
            if (quot < q) std::swap(q, quot);
            return std::make_pair(q, quot);
        }
    }
    return std::nullopt;
}

gf2::Poly charpoly_from_json(const ordered_json& j, const std::string& key) {
    const auto& v = j.at(key);
    std::vector<int> coeffs;
    if (v.is_string()) {
        for (char ch : v.get<std::string>()) {
            if (ch != '0' && ch != '1')
                throw parse_error("charpoly bitstring must contain only 0/1: " + key);
            coeffs.push_back(ch - '0');
        }
    } else {
        coeffs = v.get<std::vector<int>>();
    }
    return gf2::Poly::from_coeffs(coeffs);
}

const FormEntry* find_entry(const NewformRow& row, std::uint64_t p, int orbit) {
    for (const auto& e : row.entries)
        if (e.p == p && e.orbit == orbit) return &e;
    return nullptr;
}

NewformRow parse_row(const ordered_json& j, const std::string& label,
                     const std::vector<BasePrime>& primes) {
    NewformRow row;
    row.label = label;
    if (!j.contains("entries")) throw parse_error("form " + label + " has no entries");
    for (const auto& e : j.at("entries")) {
        FormEntry fe;
        fe.p = e.at("p").get<std::uint64_t>();
        fe.orbit = e.at("orbit").get<int>();
        fe.exponent = e.at("exponent").get<int>();
        fe.claimed_order = e.at("claimed_order").get<unsigned>();
        if (std::none_of(primes.begin(), primes.end(),
                         [&](const BasePrime& bp) { return bp.p == fe.p; }))
            throw parse_error("form " + label + " lists prime " + std::to_string(fe.p) +
                              " with no base-prime record");
        if (fe.orbit < 1 || fe.orbit > 8)
            throw parse_error("orbit index out of range 1..8 in form " + label);
        if (fe.exponent < 0 || fe.exponent > 254)
            throw parse_error("eigenvalue exponent out of range 0..254 in form " + label);
        if (!valid_claimed_order(fe.claimed_order))
            throw parse_error("claimed order " + std::to_string(fe.claimed_order) +
                              " divides neither 255 nor 257 (form " + label + ")");
        if (find_entry(row, fe.p, fe.orbit))
            throw parse_error("duplicate entry " + prime_label(fe.p, fe.orbit) +
                              " in form " + label);
        row.entries.push_back(fe);
    }
    std::sort(row.entries.begin(), row.entries.end(), [](const FormEntry& a, const FormEntry& b) {
        return a.p != b.p ? a.p < b.p : a.orbit < b.orbit;
    });
    for (const auto& bp : primes)
        for (int i = 1; i <= 8; ++i)
            if (!find_entry(row, bp.p, i))
                throw parse_error("form " + label + " is missing entry " + prime_label(bp.p, i));
    if (!j.contains("p2_exponent"))
        throw parse_error("form " + label + " is missing the T(p2) eigenvalue");
    row.p2_exponent = j.at("p2_exponent").get<int>();
    if (row.p2_exponent < 0 || row.p2_exponent > 254)
        throw parse_error("p2 exponent out of range 0..254 in form " + label);
    return row;
}

} // namespace

const FormEntry& NewformRow::at(std::uint64_t p, int orbit) const {
    const FormEntry* e = find_entry(*this, p, orbit);
    if (!e) throw input_error("no entry " + prime_label(p, orbit) + " in form " + label);
    return *e;
}

EigenvalueTable parse_table(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
    try {
        EigenvalueTable t;
        const auto& field = j.at("field");
        auto mp = field.at("minpoly").get<std::vector<long>>();
        auto sb = field.at("sigma_beta").get<std::vector<long>>();
        if (mp.size() != 9 || !std::equal(mp.begin(), mp.end(), nf::kMinPoly.begin()))
            throw parse_error("field descriptor: minimal polynomial does not match "
                              "x^8 - 8x^6 + 20x^4 - 16x^2 + 2");
        if (sb.size() != 8 || !std::equal(sb.begin(), sb.end(), nf::kSigmaBeta.begin()))
            throw parse_error("field descriptor: sigma(beta) does not match -beta^3 + 3*beta");
        std::copy(mp.begin(), mp.end(), t.minpoly.begin());
        std::copy(sb.begin(), sb.end(), t.sigma_beta.begin());

        const auto& alpha = j.at("alpha");
        t.modulus_bits = alpha.at("modulus_bits").get<std::uint32_t>();
        gf2::Poly modulus = gf2::Poly::from_bits(t.modulus_bits);
        if (modulus.degree() != 8)
            throw parse_error("alpha modulus must have degree 8, got degree " +
                              std::to_string(modulus.degree()));
        if (!gf2::is_irreducible(modulus))
            throw parse_error("alpha modulus is reducible: " + modulus.str());
        if (alpha.contains("witness_exponent"))
            t.witness_exponent = alpha.at("witness_exponent").get<int>();

        for (const auto& pj : j.at("primes")) {
            BasePrime bp;
            bp.p = pj.at("p").get<std::uint64_t>();
            if (!fp::is_prime_u64(bp.p))
                throw parse_error("base prime " + std::to_string(bp.p) + " is not prime");
            auto coords = pj.at("base_generator").get<std::vector<long>>();
            if (coords.size() != 8)
                throw parse_error("base generator must have 8 coordinates");
            std::array<long, 8> arr{};
            std::copy(coords.begin(), coords.end(), arr.begin());
            bp.generator = nf::Element::from_int_coords(arr);
            bp.generator_orbit = pj.value("orbit", 1);
            if (bp.generator_orbit < 1 || bp.generator_orbit > 8)
                throw parse_error("generator orbit index out of range 1..8");
            if (std::any_of(t.primes.begin(), t.primes.end(),
                            [&](const BasePrime& q) { return q.p == bp.p; }))
                throw parse_error("duplicate base prime " + std::to_string(bp.p));
            mpq_class n = nf::norm(bp.generator);
            if (n != static_cast<long>(bp.p) && n != -static_cast<long>(bp.p))
                throw parse_error("norm mismatch: |N(generator)| != " + std::to_string(bp.p) +
                                  " for generator " + bp.generator.str() +
                                  " (N = " + n.get_str() + ")");
            t.primes.push_back(std::move(bp));
        }
        if (t.primes.empty()) throw parse_error("table lists no primes");
        if (std::none_of(t.primes.begin(), t.primes.end(),
                         [](const BasePrime& bp) { return bp.p == 31; }))
            throw parse_error("table must list p = 31 (the T_p31_1 charpoly refers to it)");

        const auto& forms = j.at("forms");
        if (!forms.contains("f")) throw parse_error("missing row f");
        if (!forms.contains("f_prime")) throw parse_error("missing row f_prime");
        t.f = parse_row(forms.at("f"), "f", t.primes);
        t.f_prime = parse_row(forms.at("f_prime"), "f_prime", t.primes);

        const auto& cps = j.at("charpolys");
        t.charpoly_p2 = charpoly_from_json(cps, "T_p2");
        t.charpoly_p31 = charpoly_from_json(cps, "T_p31_1");
        if ((t.charpoly_p31.bits & ((std::uint64_t(1) << 41) - 1)) != 0)
            throw parse_error("charpoly(T(p31^1)) is not divisible by x^41");
        gf2::Poly cofactor{t.charpoly_p31.bits >> 41};
        if (!split_into_octics(cofactor))
            throw parse_error("charpoly(T(p31^1)) / x^41 does not split into two "
                              "irreducible octic factors");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("table structure: ") + e.what());
    }
}

EigenvalueTable load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open table file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str());
}

std::string serialize_table(const EigenvalueTable& t) {
    ordered_json j;
    j["field"]["minpoly"] = t.minpoly;
    j["field"]["sigma_beta"] = t.sigma_beta;
    j["alpha"]["modulus_bits"] = t.modulus_bits;
    if (t.witness_exponent) j["alpha"]["witness_exponent"] = *t.witness_exponent;
    j["primes"] = ordered_json::array();
    for (const auto& bp : t.primes) {
        ordered_json pj;
        pj["p"] = bp.p;
        std::vector<long> coords;
        for (int i = 0; i < 8; ++i) coords.push_back(static_cast<long>(bp.generator.coord(i).get_num().get_si()));
        pj["base_generator"] = coords;
        pj["orbit"] = bp.generator_orbit;
        j["primes"].push_back(pj);
    }
    auto row_json = [](const NewformRow& row) {
        ordered_json rj;
        rj["entries"] = ordered_json::array();
        for (const auto& e : row.entries) {
            ordered_json ej;
            ej["p"] = e.p;
            ej["orbit"] = e.orbit;
            ej["exponent"] = e.exponent;
            ej["claimed_order"] = e.claimed_order;
            rj["entries"].push_back(ej);
        }
        rj["p2_exponent"] = row.p2_exponent;
        return rj;
    };
    j["forms"]["f"] = row_json(t.f);
    j["forms"]["f_prime"] = row_json(t.f_prime);
    auto bits_json = [](gf2::Poly p) { return p.coeffs(); };
    j["charpolys"]["T_p2"] = bits_json(t.charpoly_p2);
    j["charpolys"]["T_p31_1"] = bits_json(t.charpoly_p31);
    return j.dump(2) + "\n";
}

CheckResult check_tau2_sigma2(const EigenvalueTable& table, const gf2::Element& alpha,
                              const std::string& form_label) {
    const NewformRow& row = (form_label == "f") ? table.f : table.f_prime;
    CheckResult res{"tau2_sigma2_" + form_label, true, "", {}};
    for (const auto& bp : table.primes) {
        for (int i = 1; i <= 8; ++i) {
            const int j = (i - 1 + 2) % 8 + 1;
            gf2::Element lhs = alpha.pow(row.at(bp.p, j).exponent);
            gf2::Element rhs = alpha.pow(row.at(bp.p, i).exponent).frobenius(2);
            if (!(lhs == rhs)) {
                res.passed = false;
                res.details = "counterexample (" + prime_label(bp.p, i) + ", " +
                              prime_label(bp.p, j) + "): a at sigma^2(p) != tau^2(a at p)";
                return res;
            }
        }
    }
    res.details = "a_{sigma^2(p)}(" + form_label + ") = tau^2(a_p(" + form_label +
                  ")) at all " + std::to_string(table.primes.size() * 8) + " listed primes";
    return res;
}

CheckResult check_sigma_swap(const EigenvalueTable& table, const gf2::Element& alpha,
                             std::vector<SwapSolution>* solutions) {
    CheckResult res{"sigma_swap", false, "", {}};
    std::vector<SwapSolution> sols;
    const std::array<std::pair<const NewformRow*, const NewformRow*>, 2> directions{
        std::make_pair(&table.f, &table.f_prime), std::make_pair(&table.f_prime, &table.f)};
    for (const auto& [to, from] : directions) {
        for (int shift = 0; shift < 8; ++shift) {
            for (int twist = 0; twist < 8; ++twist) {
                bool ok = true;
                for (const auto& bp : table.primes) {
                    for (int i = 1; i <= 8 && ok; ++i) {
                        const int j = (i - 1 + shift) % 8 + 1;
                        gf2::Element lhs = alpha.pow(to->at(bp.p, j).exponent);
                        gf2::Element rhs = alpha.pow(from->at(bp.p, i).exponent).frobenius(twist);
                        ok = (lhs == rhs);
                    }
                    if (!ok) break;
                }
                if (ok) sols.push_back({from->label, to->label, shift, twist});
            }
        }
    }
    res.passed = !sols.empty();
    std::ostringstream os;
    os << sols.size() << " swap relation(s) hold on the full table";
    res.details = os.str();
    for (const auto& s : sols) {
        res.notes.push_back("a_{sigma^" + std::to_string(s.shift) + "(p)}(" + s.to +
                            ") = tau^" + std::to_string(s.twist) + "(a_p(" + s.from + "))");
    }
    if (!res.passed) res.details = "no (direction, shift, twist) relation holds on the table";
    if (solutions) *solutions = std::move(sols);
    return res;
}

std::pair<gf2::Poly, gf2::Poly> stated_octics(const EigenvalueTable& table) {
    gf2::Poly cofactor{table.charpoly_p31.bits >> 41};
    auto split = split_into_octics(cofactor);
    if (!split)
        throw input_error("stated charpoly(T(p31^1)) / x^41 does not split into two octics");
    return *split;
}

CheckResult check_charpoly_consistency(const EigenvalueTable& table, const gf2::Element& alpha) {
    CheckResult res{"charpoly_consistency", true, "", {}};
    std::vector<std::string> failures;

    // (i) product of the two minimal polynomials matches the stated charpoly
    gf2::Poly mp_f = gf2::minimal_polynomial(alpha.pow(table.f.at(31, 1).exponent));
    gf2::Poly mp_fp = gf2::minimal_polynomial(alpha.pow(table.f_prime.at(31, 1).exponent));
    gf2::Poly product = mp_f * mp_fp;
    gf2::Poly rebuilt{product.bits << 41};
    if (rebuilt == table.charpoly_p31)
        res.notes.push_back("min-poly product: x^41 * mp(a(p31^1)(f)) * mp(a(p31^1)(f')) "
                            "matches the stated charpoly");
    else
        failures.push_back("x^41 * minpoly product != stated charpoly(T(p31^1))");

    // (ii) a(p2) satisfies x^2 + x + 1 for both forms
    for (const NewformRow* row : {&table.f, &table.f_prime}) {
        gf2::Element a2 = alpha.pow(row->p2_exponent);
        const auto& ctx = alpha.context();
        if (!(a2 * a2 + a2 + ctx.one() == ctx.zero()))
            failures.push_back("a(p2)(" + row->label + ") does not satisfy x^2 + x + 1");
    }

    // (iii) degree bookkeeping 41 + 8 + 8 = 57 on both stated charpolys
    if (table.charpoly_p31.degree() != 57)
        failures.push_back("charpoly(T(p31^1)) degree != 57");
    if (table.charpoly_p2.degree() != 57)
        failures.push_back("charpoly(T(p2)) degree != 57");

    // (iv) stated charpoly(T(p2)) equals x^41 (x^2+x+1)^8
    gf2::Poly sq{7}; // x^2 + x + 1
    gf2::Poly pow8 = gf2::Poly::one();
    for (int i = 0; i < 8; ++i) pow8 = pow8 * sq;
    if (!(gf2::Poly{pow8.bits << 41} == table.charpoly_p2))
        failures.push_back("stated charpoly(T(p2)) != x^41 (x^2+x+1)^8");

    if (!failures.empty()) {
        res.passed = false;
        std::ostringstream os;
        for (std::size_t i = 0; i < failures.size(); ++i)
            os << (i ? "; " : "") << failures[i];
        res.details = os.str();
    } else {
        res.details = "minimal-polynomial product, a(p2) quadratic, and degree 57 bookkeeping all hold";
    }
    return res;
}

CheckResult check_ordinarity(const EigenvalueTable& table, const gf2::Element& alpha) {
    CheckResult res{"ordinarity", true, "", {}};
    std::ostringstream os;
    for (const NewformRow* row : {&table.f, &table.f_prime}) {
        gf2::Element a2 = alpha.pow(row->p2_exponent);
        unsigned o = a2.is_zero() ? 0 : a2.order();
        if (o != 3) {
            res.passed = false;
            res.details = "a(p2)(" + row->label + ") = alpha^" +
                          std::to_string(row->p2_exponent) + " has order " + std::to_string(o) +
                          ", not 3 (not a generator of F_4^x)";
            return res;
        }
        os << (row == &table.f ? "" : ", ") << row->label << ": order(a(p2)) = 3";
    }
    res.details = os.str();
    return res;
}

CheckResult recompute_orders(const EigenvalueTable& table, const gf2::Element& alpha) {
    CheckResult res{"orders_recomputed", true, "", {}};
    int checked = 0;
    for (const NewformRow* row : {&table.f, &table.f_prime}) {
        for (const auto& e : row->entries) {
            sl2::FrobeniusOrder fo = sl2::order_from_trace(alpha.pow(e.exponent));
            ++checked;
            if (fo.order != e.claimed_order) {
                res.passed = false;
                res.details = "mismatch at (" + prime_label(e.p, e.orbit) + ", " + row->label +
                              "): recomputed order " + std::to_string(fo.order) +
                              ", claimed " + std::to_string(e.claimed_order);
                return res;
            }
        }
    }

    // emergent pattern: within each (row, prime), orders alternate between
    // divisors of 257 and divisors of 255 by orbit parity
    bool alternation = true;
    for (const NewformRow* row : {&table.f, &table.f_prime}) {
        for (const auto& bp : table.primes) {
            for (int parity : {0, 1}) {
                std::set<bool> kinds;
                for (int i = 1; i <= 8; ++i) {
                    if ((i - 1) % 2 != parity) continue;
                    kinds.insert(257 % row->at(bp.p, i).claimed_order == 0);
                }
                if (kinds.size() != 1) alternation = false;
            }
        }
    }
    res.details = std::to_string(checked) + "/" + std::to_string(checked) +
                  " claimed orders reproduced from traces";
    res.notes.push_back(alternation
                            ? "orders alternate between divisors of 257 and of 255 by orbit parity"
                            : "warning: parity alternation pattern does not hold");
    return res;
}

gf2::GeneratorSearchInput to_search_input(const EigenvalueTable& table) {
    gf2::GeneratorSearchInput in;
    for (const NewformRow* row : {&table.f, &table.f_prime}) {
        for (const auto& e : row->entries)
            in.entries.push_back({e.exponent, e.claimed_order,
                                  row->label + ":" + prime_label(e.p, e.orbit)});
        in.p2_exponents.push_back(row->p2_exponent);
    }
    auto [a, b] = stated_octics(table);
    in.octic_a = a;
    in.octic_b = b;
    in.charpoly_exp_f = table.f.at(31, 1).exponent;
    in.charpoly_exp_fprime = table.f_prime.at(31, 1).exponent;
    return in;
}

} // namespace ram2::descent
