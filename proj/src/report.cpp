#include "ram2cert/report.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <sstream>

#include "ram2cert/discbound.hpp"
#include "ram2cert/sl2cert.hpp"

namespace ram2::report {

using nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

namespace {

std::string fmt_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

ordered_json check_json(const descent::CheckResult& c) {
    ordered_json j;
    j["passed"] = c.passed;
    j["details"] = c.details;
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

ordered_json simple_check(bool passed, const std::string& details,
                          std::vector<std::string> notes = {}) {
    ordered_json j;
    j["passed"] = passed;
    j["details"] = details;
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

// splitting of 2 and of every table prime, cross-checked against the
// reciprocity oracle, plus the orbit pinning by the table generators
ordered_json splitting_check(const descent::EigenvalueTable& table) {
    std::vector<std::string> notes;
    bool ok = true;
    std::ostringstream fail;

    nf::RationalPrimeFactorization f2 = nf::factor_rational_prime(2);
    if (f2.factors.size() == 1 && f2.factors[0].e == 8 && f2.factors[0].f == 1)
        notes.push_back("p=2: one prime, e=8, f=1 (totally ramified)");
    else {
        ok = false;
        fail << "p=2 did not factor as a single e=8 prime; ";
    }

    for (const auto& bp : table.primes) {
        nf::RationalPrimeFactorization fp_ = nf::factor_rational_prime(bp.p);
        auto [rf, rg] = nf::splitting_type_by_reciprocity(bp.p);
        bool split_ok = fp_.factors.size() == 8 &&
                        std::all_of(fp_.factors.begin(), fp_.factors.end(),
                                    [](const nf::PrimeIdealFactor& q) { return q.e == 1 && q.f == 1; });
        bool recip_ok = (rf == 1 && rg == 8);
        int orbit = 0;
        bool pin_ok = true;
        try {
            orbit = nf::orbit_containing_generator(fp_, bp.generator);
        } catch (const input_error&) {
            pin_ok = false;
        }
        if (split_ok && recip_ok && pin_ok) {
            notes.push_back("p=" + std::to_string(bp.p) +
                            ": splits completely into 8 primes, e=1, f=1; reciprocity agrees; "
                            "generator pins one orbit position");
            (void)orbit;
        } else {
            ok = false;
            fail << "p=" << bp.p << ": splitting/reciprocity/generator check failed; ";
        }
    }
    return simple_check(ok, ok ? "splitting of 2 and of all table primes verified" : fail.str(),
                        std::move(notes));
}

ordered_json norms_check(const descent::EigenvalueTable& table) {
    bool ok = true;
    std::vector<std::string> notes;
    for (const auto& bp : table.primes) {
        mpq_class n = nf::norm(bp.generator);
        bool this_ok = (n == static_cast<long>(bp.p) || n == -static_cast<long>(bp.p));
        ok = ok && this_ok;
        notes.push_back("N(" + bp.generator.str() + ") = " + n.get_str() +
                        (this_ok ? "" : "  [expected +-" + std::to_string(bp.p) + "]"));
    }
    return simple_check(ok, ok ? "all generator norms have |N| = p" : "a generator norm is off",
                        std::move(notes));
}

ordered_json disc_check(int precision) {
    const mpz_class& d = nf::field_discriminant();
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, 31);
    bool ok = (d == expected);
    disc::DyadicExponent df = disc::delta_F();
    return simple_check(ok,
                        "disc(O_F) = " + d.get_str() + (ok ? " = 2^31" : " != 2^31") +
                            "; delta_F = " + df.render(precision));
}

ordered_json surjectivity_json(const sl2::SurjectivityCertificate& cert) {
    ordered_json j;
    j["passed"] = cert.certified;
    j["details"] = cert.certified ? "image certified to be all of SL2(F_2^8)"
                                  : "surjectivity not certified";
    if (cert.witness_257) j["witness_257"] = *cert.witness_257;
    if (cert.witness_255divisor) {
        j["witness_255divisor"]["label"] = cert.witness_255divisor->first;
        j["witness_255divisor"]["order"] = cert.witness_255divisor->second;
    }
    ordered_json fams = ordered_json::array();
    for (const auto& f : cert.excluded_families) {
        ordered_json fj;
        fj["family"] = f.family;
        fj["excluded"] = f.excluded;
        fj["reason"] = f.reason;
        fams.push_back(fj);
    }
    j["families"] = fams;
    j["narrative"] = cert.narrative;
    return j;
}

} // namespace

CertifyOutcome run_certification(const descent::EigenvalueTable& table,
                                 const std::string& raw_table_bytes,
                                 const CertifyOptions& options) {
    ordered_json rep;
    std::vector<std::string> failed;
    auto record = [&](const std::string& name, const ordered_json& j) {
        rep["checks"][name] = j;
        if (!j.at("passed").get<bool>()) failed.push_back(name);
    };

    rep["tool"] = "ram2cert";
    rep["table"]["digest"] = fnv1a_hex(raw_table_bytes);

    const std::uint32_t modulus_bits = options.modulus_bits.value_or(table.modulus_bits);
    gf2::FieldContext ctx(gf2::Poly::from_bits(modulus_bits));
    rep["alpha"]["modulus_bits"] = modulus_bits;
    rep["alpha"]["modulus"] = ctx.modulus().str();

    record("splitting", splitting_check(table));
    record("generator_norms", norms_check(table));
    record("field_discriminant", disc_check(options.precision));

    auto order_fn = [](const gf2::Element& t) { return sl2::order_from_trace(t).order; };

    std::optional<gf2::Element> alpha;
    if (options.alpha_exponent) {
        gf2::Element candidate = ctx.x().pow(*options.alpha_exponent);
        bool primitive = !candidate.is_zero() && candidate.order() == ctx.group_order();
        rep["alpha"]["bypassed"] = true;
        rep["alpha"]["chosen_bits"] = candidate.bits();
        rep["alpha"]["chosen"] = candidate.str();
        record("alpha_search",
               simple_check(primitive,
                            primitive ? "search bypassed; alpha = x^" +
                                            std::to_string(*options.alpha_exponent) + " is primitive"
                                      : "supplied alpha is not primitive"));
        if (primitive) alpha = candidate;
    } else {
        gf2::GeneratorSearchResult search =
            gf2::find_consistent_generator(ctx, descent::to_search_input(table), order_fn);
        rep["alpha"]["bypassed"] = false;
        rep["alpha"]["witness_count"] = search.witnesses.size();
        ordered_json wits = ordered_json::array();
        for (const auto& w : search.witnesses) wits.push_back(w.alpha.bits());
        rep["alpha"]["witnesses"] = wits;
        rep["alpha"]["single_tau_orbit"] = search.witnesses_single_tau_orbit;
        rep["alpha"]["primitive_count"] = search.primitive_count;
        if (!search.witnesses.empty()) {
            alpha = search.witnesses.front().alpha;
            rep["alpha"]["chosen_bits"] = alpha->bits();
            rep["alpha"]["chosen"] = alpha->str();
            rep["alpha"]["octic_assignment"] =
                search.witnesses.front().octic_a_matches_f
                    ? "minpoly(a(p31^1)(f)) is the lexicographically smaller octic"
                    : "minpoly(a(p31^1)(f)) is the lexicographically larger octic";
        }
        record("alpha_search",
               simple_check(!search.witnesses.empty(),
                            std::to_string(search.witnesses.size()) + " consistent generator(s) among " +
                                std::to_string(search.primitive_count) + " primitive elements" +
                                (search.witnesses_single_tau_orbit ? "; witnesses form one tau-orbit"
                                                                   : "")));
    }

    if (alpha) {
        record("orders_recomputed", check_json(descent::recompute_orders(table, *alpha)));

        for (const descent::NewformRow* row : {&table.f, &table.f_prime}) {
            std::vector<sl2::OrderWitness> witnesses;
            for (const auto& e : row->entries) {
                sl2::FrobeniusOrder fo = sl2::order_from_trace(alpha->pow(e.exponent));
                if (!fo.ambiguous)
                    witnesses.push_back({"p" + std::to_string(e.p) + "^" + std::to_string(e.orbit),
                                         fo.order});
            }
            record(row->label == "f" ? "surjectivity_f" : "surjectivity_f_prime",
                   surjectivity_json(sl2::dickson_certify(witnesses)));
        }

        record("tau2_sigma2_f", check_json(descent::check_tau2_sigma2(table, *alpha, "f")));
        record("tau2_sigma2_f_prime",
               check_json(descent::check_tau2_sigma2(table, *alpha, "f_prime")));

        std::vector<descent::SwapSolution> sols;
        descent::CheckResult swap = descent::check_sigma_swap(table, *alpha, &sols);
        bool literal = std::any_of(sols.begin(), sols.end(), [](const descent::SwapSolution& s) {
            return s.from == "f_prime" && s.to == "f" && s.shift == 1 && s.twist == 0;
        });
        ordered_json swap_json = check_json(swap);
        swap_json["literal_direction_holds"] = literal;
        if (!literal && swap.passed)
            swap_json["notes"].push_back(
                "the shift-by-one relation holds only up to a Frobenius twist or with the "
                "roles of f and f' exchanged; the literal untwisted direction "
                "a_{sigma(p)}(f) = a_p(f') does not hold on the rows as written");
        if (options.strict && !literal) {
            swap_json["passed"] = false;
            swap_json["details"] = swap_json["details"].get<std::string>() +
                                   " [strict: literal direction required but absent]";
        }
        record("sigma_swap", swap_json);

        record("charpoly_consistency",
               check_json(descent::check_charpoly_consistency(table, *alpha)));
        record("ordinarity", check_json(descent::check_ordinarity(table, *alpha)));
    } else {
        for (const char* name :
             {"orders_recomputed", "surjectivity_f", "surjectivity_f_prime", "tau2_sigma2_f",
              "tau2_sigma2_f_prime", "sigma_swap", "charpoly_consistency", "ordinarity"})
            record(name, simple_check(false, "no consistent generator available"));
    }

    // degree and group
    sl2::GroupDegree deg = sl2::compositum_degree();
    rep["degree"]["value"] = deg.value.get_str();
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < deg.factorization.size(); ++i)
            os << (i ? " * " : "") << deg.factorization[i].first.get_str() << "^"
               << deg.factorization[i].second;
        rep["degree"]["factorization"] = os.str();
    }
    rep["degree"]["group"] = deg.descriptor;
    rep["degree"]["degree_K_over_F"] = deg.degree_K_over_F.get_str();
    record("degree_arithmetic",
           simple_check(deg.value == mpz_class("2251731094732800"),
                        "[K:Q] = " + deg.value.get_str() + " = 2^19 (3*5*17*257)^2, group " +
                            deg.descriptor));

    // discriminant bound pipeline
    const int prec = options.precision;
    disc::DyadicExponent sup = disc::root_disc_upper_bound_sup();
    rep["discriminant"]["delta_F"] = disc::delta_F().render(prec);
    rep["discriminant"]["bound_exponent_formula"] = "47/8 - 2^(1-m)";
    rep["discriminant"]["bound_sup"] = sup.render(prec);
    {
        ordered_json per_m = ordered_json::array();
        for (long m = 1; m <= 4; ++m) {
            disc::DyadicExponent b = disc::root_disc_upper_bound(m);
            per_m.push_back("m=" + std::to_string(m) + ": " + b.render(prec));
        }
        rep["discriminant"]["bound_first_values"] = per_m;
    }
    disc::VerdictRecord verdict = disc::totally_complex_verdict(sup, deg.value);
    rep["discriminant"]["odlyzko_totally_real"] = fmt_double(verdict.odlyzko_totally_real, prec);
    rep["discriminant"]["bound_value"] = fmt_double(verdict.upper_bound, prec);
    rep["discriminant"]["verdict"] = disc::to_string(verdict.verdict);
    rep["discriminant"]["margin"] = fmt_double(verdict.margin, prec);
    rep["discriminant"]["note"] = verdict.note;
    record("totally_complex",
           simple_check(verdict.verdict == disc::Verdict::TotallyComplex,
                        "odlyzko totally-real bound " + fmt_double(verdict.odlyzko_totally_real, prec) +
                            " vs delta_K bound " + fmt_double(verdict.upper_bound, prec)));

    rep["overall"] = failed.empty() ? "certified" : "failed";
    rep["failed_checks"] = failed;
    return {rep, failed.empty()};
}

std::string human_report(const ordered_json& rep) {
    std::ostringstream os;
    os << "ram2cert certification report\n";
    os << "table digest: " << rep.at("table").at("digest").get<std::string>() << "\n";
    const auto& alpha = rep.at("alpha");
    os << "F_2^8 modulus: " << alpha.at("modulus").get<std::string>() << "\n";
    if (alpha.contains("witness_count"))
        os << "generator witnesses: " << alpha.at("witness_count").get<std::size_t>();
    if (alpha.contains("chosen"))
        os << "  (alpha = " << alpha.at("chosen").get<std::string>() << ")";
    os << "\n\nchecks:\n";
    for (const auto& [name, j] : rep.at("checks").items()) {
        os << "  [" << (j.at("passed").get<bool>() ? "pass" : "FAIL") << "] " << name << ": "
           << j.at("details").get<std::string>() << "\n";
        if (j.contains("notes"))
            for (const auto& n : j.at("notes")) os << "         - " << n.get<std::string>() << "\n";
    }
    const auto& deg = rep.at("degree");
    os << "\ndegree [K:Q] = " << deg.at("value").get<std::string>() << " = "
       << deg.at("factorization").get<std::string>() << "\n";
    os << "Galois group: " << deg.at("group").get<std::string>() << "\n";
    const auto& d = rep.at("discriminant");
    os << "\ndelta_F = " << d.at("delta_F").get<std::string>() << "\n";
    os << "delta_K < " << d.at("bound_sup").get<std::string>()
       << "  (exponent 47/8 - 2^(1-m), increasing in m)\n";
    os << "odlyzko totally-real bound at this degree: "
       << d.at("odlyzko_totally_real").get<std::string>() << "\n";
    os << "verdict: " << d.at("verdict").get<std::string>() << "\n";
    os << "note: " << d.at("note").get<std::string>() << "\n";
    os << "\noverall: " << rep.at("overall").get<std::string>() << "\n";
    return os.str();
}

} // namespace ram2::report
