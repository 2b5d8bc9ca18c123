#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ram2cert/descent.hpp"
#include "ram2cert/discbound.hpp"
#include "ram2cert/numfield.hpp"
#include "ram2cert/report.hpp"
#include "ram2cert/sl2cert.hpp"

namespace {

using nlohmann::ordered_json;

int cmd_certify(const std::string& path, bool json_out, const ram2::report::CertifyOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open table file: " << path << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();

    ram2::descent::EigenvalueTable table = ram2::descent::parse_table(bytes);
    ram2::report::CertifyOutcome outcome = ram2::report::run_certification(table, bytes, opts);
    if (json_out)
        std::cout << outcome.report.dump(2) << "\n";
    else
        std::cout << ram2::report::human_report(outcome.report);
    return outcome.certified ? 0 : 1;
}

int cmd_factor(std::uint64_t p, bool json_out) {
    ram2::nf::RationalPrimeFactorization fact = ram2::nf::factor_rational_prime(p);
    if (json_out) {
        ordered_json j;
        j["p"] = p;
        j["factors"] = ordered_json::array();
        for (const auto& f : fact.factors) {
            ordered_json fj;
            fj["orbit"] = f.orbit_index;
            fj["local_factor"] = f.local_factor.str();
            fj["e"] = f.e;
            fj["f"] = f.f;
            j["factors"].push_back(fj);
        }
        if (p != 2) {
            auto [rf, rg] = ram2::nf::splitting_type_by_reciprocity(p);
            j["reciprocity"]["f"] = rf;
            j["reciprocity"]["g"] = rg;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << fact.factors.size() << " prime(s) above " << p << ", e=" << fact.factors[0].e
                  << ", f=" << fact.factors[0].f << "\n";
        for (const auto& f : fact.factors)
            std::cout << "  p" << p << "^" << f.orbit_index << " = (" << p << ", "
                      << f.local_factor.str() << ")\n";
        if (p != 2) {
            auto [rf, rg] = ram2::nf::splitting_type_by_reciprocity(p);
            std::cout << "reciprocity cross-check: f=" << rf << ", g=" << rg << "\n";
        }
    }
    return 0;
}

int cmd_order(int exponent, std::uint32_t modulus_bits, std::optional<int> alpha_exp,
              const std::string& table_path, bool json_out) {
    ram2::gf2::FieldContext ctx(ram2::gf2::Poly::from_bits(modulus_bits));
    ram2::gf2::Element alpha = ctx.zero();
    if (alpha_exp) {
        alpha = ctx.x().pow(*alpha_exp);
        if (alpha.is_zero() || alpha.order() != ctx.group_order())
            throw ram2::input_error("--alpha does not give a primitive element");
    } else if (!table_path.empty()) {
        ram2::descent::EigenvalueTable table = ram2::descent::load_table(table_path);
        auto order_fn = [](const ram2::gf2::Element& t) {
            return ram2::sl2::order_from_trace(t).order;
        };
        auto search = ram2::gf2::find_consistent_generator(
            ctx, ram2::descent::to_search_input(table), order_fn);
        if (search.witnesses.empty())
            throw ram2::input_error("no consistent generator for this table and modulus");
        alpha = search.witnesses.front().alpha;
    } else {
        throw ram2::input_error("order requires --alpha or --table to fix the generator");
    }
    ram2::sl2::FrobeniusOrder fo = ram2::sl2::order_from_trace(alpha.pow(exponent));
    if (json_out) {
        ordered_json j;
        j["trace"] = "alpha^" + std::to_string(exponent);
        j["order"] = fo.order;
        j["split_type"] = ram2::sl2::to_string(fo.split_type);
        j["ambiguous"] = fo.ambiguous;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "ord(rho(Frob)) for trace alpha^" << exponent << ": " << fo.order << " ("
                  << ram2::sl2::to_string(fo.split_type) << ")"
                  << (fo.ambiguous ? " [ambiguous: trace 0]" : "") << "\n";
    }
    return 0;
}

int cmd_bound(long m, bool sup, int precision, bool json_out) {
    ram2::disc::DyadicExponent b =
        sup ? ram2::disc::root_disc_upper_bound_sup() : ram2::disc::root_disc_upper_bound(m);
    if (json_out) {
        ordered_json j;
        j["m"] = sup ? "sup" : std::to_string(m);
        j["exponent"] = b.exponent.get_str();
        j["bound"] = b.render(precision);
        std::cout << j.dump(2) << "\n";
    } else {
        if (sup)
            std::cout << "delta_K < " << b.render(precision) << "  (supremum over m)\n";
        else
            std::cout << "delta_K <= " << b.render(precision) << "  (m = " << m << ")\n";
    }
    return 0;
}

int cmd_odlyzko(const std::string& degree, const std::string& r1_str, const std::string& r2_str,
                bool all_real, int precision, bool json_out) {
    const mpz_class n(degree);
    mpz_class r1, r2;
    if (all_real) {
        r1 = n;
        r2 = 0;
    } else {
        if (r1_str.empty()) throw ram2::input_error("odlyzko needs --r1 or --all-real");
        r1 = mpz_class(r1_str);
        r2 = r2_str.empty() ? mpz_class((n - r1) / 2) : mpz_class(r2_str);
    }
    ram2::disc::OdlyzkoBound b = ram2::disc::odlyzko_lower_bound(n, r1, r2);
    if (json_out) {
        ordered_json j;
        j["n"] = n.get_str();
        j["r1"] = r1.get_str();
        j["r2"] = r2.get_str();
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", precision, b.value);
        j["bound"] = buf;
        std::snprintf(buf, sizeof buf, "%.3g", b.y);
        j["y"] = buf;
        std::snprintf(buf, sizeof buf, "%.2e", b.quadrature_margin);
        j["quadrature_margin"] = buf;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout.precision(precision);
        std::cout << "delta lower bound for degree " << n.get_str() << ", signature (r1="
                  << r1.get_str() << ", r2=" << r2.get_str() << "): >= " << b.value << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ram2cert: certification toolkit for the mod-2 eigenvalue table, the "
                 "SL2(F_2^8) surjectivity certificates, and the root-discriminant bound"};
    app.require_subcommand(1);

    bool json_out = false;
    app.add_flag("--json", json_out, "structured JSON output");
    int precision = 6;
    app.add_option("--precision", precision, "significant digits for numeric rendering")
        ->check(CLI::Range(1, 17));

    auto* certify = app.add_subcommand("certify", "run the full certification pipeline");
    std::string table_path;
    certify->add_option("table", table_path, "eigenvalue table file (JSON)")->required();
    ram2::report::CertifyOptions opts;
    std::uint32_t modulus_bits_flag = 0;
    certify->add_option("--modulus-bits", modulus_bits_flag,
                        "override the F_2^8 modulus (int-encoded polynomial)");
    int alpha_flag = -1;
    certify->add_option("--alpha", alpha_flag, "bypass the generator search; alpha = x^N");
    certify->add_flag("--strict", opts.strict,
                      "require the literal untwisted swap direction a_{sigma(p)}(f) = a_p(f')");

    auto* factor = app.add_subcommand("factor", "factor a rational prime in O_F");
    std::uint64_t factor_p = 0;
    factor->add_option("p", factor_p, "rational prime")->required();

    auto* order = app.add_subcommand("order", "Frobenius order from a trace exponent");
    int order_exp = 0;
    order->add_option("exponent", order_exp, "trace = alpha^exponent")->required();
    std::uint32_t order_modulus = 285;
    order->add_option("--modulus-bits", order_modulus, "F_2^8 modulus (default 285)");
    int order_alpha = -1;
    order->add_option("--alpha", order_alpha, "alpha = x^N (bypasses the table search)");
    std::string order_table;
    order->add_option("--table", order_table, "table file used to certify alpha");

    auto* bound = app.add_subcommand("bound", "root-discriminant upper bound for K");
    long bound_m = 1;
    bound->add_option("--m", bound_m, "2^m = ramification index above p_2");
    bool bound_sup = false;
    bound->add_flag("--sup", bound_sup, "report the supremum bound 2^(47/8)");

    auto* odlyzko = app.add_subcommand("odlyzko", "unconditional root-discriminant lower bound");
    std::string odl_degree, odl_r1, odl_r2;
    odlyzko->add_option("--degree", odl_degree, "field degree n")->required();
    odlyzko->add_option("--r1", odl_r1, "number of real places (or 'all')");
    odlyzko->add_option("--r2", odl_r2, "number of complex places");
    bool odl_all_real = false;
    odlyzko->add_flag("--all-real", odl_all_real, "totally real signature (r1 = n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*certify) {
            if (modulus_bits_flag) opts.modulus_bits = modulus_bits_flag;
            if (alpha_flag >= 0) opts.alpha_exponent = alpha_flag;
            opts.precision = precision;
            return cmd_certify(table_path, json_out, opts);
        }
        if (*factor) return cmd_factor(factor_p, json_out);
        if (*order)
            return cmd_order(order_exp, order_modulus,
                             order_alpha >= 0 ? std::optional<int>(order_alpha) : std::nullopt,
                             order_table, json_out);
        if (*bound) return cmd_bound(bound_m, bound_sup, precision, json_out);
        if (*odlyzko) {
            if (odl_r1 == "all") {
                odl_all_real = true;
                odl_r1.clear();
            }
            return cmd_odlyzko(odl_degree, odl_r1, odl_r2, odl_all_real, precision, json_out);
        }
    } catch (const ram2::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
