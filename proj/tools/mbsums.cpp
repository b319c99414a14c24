// mbsums: exact tables and single values of Bernoulli numbers, Moebius-
// Bernoulli numbers M_k(n) and M_k^N(n), coprime power-sum polynomials
// Psi_k(x,n) and their sums of products Psi_k^N(x,n), plus the `verify`
// subcommand that sweeps every cross-route identity in the library.
//
// Exit codes: 0 success, 1 verification failure (including route
// disagreement), 2 usage or input error. Output formats: docs/formats.md.

#include "mb/arith.hpp"
#include "mb/bernoulli.hpp"
#include "mb/moebius_bernoulli.hpp"
#include "mb/output.hpp"
#include "mb/powersums.hpp"
#include "mb/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

void emit(const std::string& command, const std::vector<mb::OutputRecord>& records,
          mb::OutputFormat format) {
    if (format == mb::OutputFormat::json) {
        nlohmann::ordered_json out;
        out["command"] = command;
        nlohmann::ordered_json recs = nlohmann::ordered_json::array();
        for (const auto& r : records) recs.push_back(mb::to_json(r));
        out["records"] = std::move(recs);
        std::cout << out.dump(2) << "\n";
    } else {
        if (records.empty()) return;
        std::cout << mb::csv_header(records.front()) << "\n";
        for (const auto& r : records)
            for (const std::string& row : mb::csv_rows(r)) std::cout << row << "\n";
    }
}

std::string i64str(std::int64_t v) { return std::to_string(v); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Moebius-Bernoulli numbers and coprime power-sum identities"};
    app.require_subcommand(1);

    std::string format_name = "json";
    int jobs = 1;
    app.add_option("--format", format_name, "output format: json|csv")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for verify sweeps")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();

    // bern
    auto* bern = app.add_subcommand("bern", "Bernoulli numbers B_0..B_max_k");
    int bern_max_k = 0;
    bern->add_option("--max-k", bern_max_k, "largest index")->required()->check(CLI::Range(0, 200));
    bern->fallthrough();

    // mb
    auto* mbcmd = app.add_subcommand("mb", "Moebius-Bernoulli numbers M_0(n)..M_max_k(n)");
    std::int64_t mb_n = 1;
    int mb_max_k = 0;
    mbcmd->add_option("--n", mb_n, "modulus n")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
    mbcmd->add_option("--max-k", mb_max_k, "largest index")->required()->check(CLI::Range(0, 200));
    mbcmd->fallthrough();

    // mbn
    auto* mbn = app.add_subcommand("mbn", "higher-order Moebius-Bernoulli number M_k^N(n)");
    std::int64_t mbn_n = 1;
    int mbn_N = 1, mbn_k = 0;
    std::string mbn_method = "auto";
    mbn->add_option("--n", mbn_n, "modulus n")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
    mbn->add_option("--N", mbn_N, "order")->required()->check(CLI::Range(1, 8));
    mbn->add_option("--k", mbn_k, "index")->required()->check(CLI::Range(0, 24));
    mbn->add_option("--method", mbn_method, "conv|partition|primepower|kernel|auto")
        ->capture_default_str();
    mbn->fallthrough();

    // psi
    auto* psi = app.add_subcommand("psi", "coprime power sum Psi_k(x,n)");
    std::int64_t psi_n = 1;
    int psi_k = 0;
    std::string psi_x;
    bool psi_want_poly = false;
    psi->add_option("--n", psi_n, "modulus n")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
    psi->add_option("--k", psi_k, "power")->required()->check(CLI::Range(0, 64));
    psi->add_option("--x", psi_x, "evaluation point (exact rational, e.g. 5/2)");
    psi->add_flag("--poly", psi_want_poly, "print the polynomial instead of evaluating");
    psi->fallthrough();

    // psiprod
    auto* psiprod = app.add_subcommand("psiprod", "sums of products Psi_k^N(x,n)");
    std::int64_t pp_n = 1;
    int pp_N = 1, pp_k = 0;
    std::string pp_x;
    bool pp_want_poly = false;
    psiprod->add_option("--n", pp_n, "modulus n")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
    psiprod->add_option("--N", pp_N, "order")->required()->check(CLI::Range(1, 8));
    psiprod->add_option("--k", pp_k, "power")->required()->check(CLI::Range(0, 24));
    psiprod->add_option("--x", pp_x, "evaluation point (exact rational)");
    psiprod->add_flag("--poly", pp_want_poly, "print the polynomial instead of evaluating");
    psiprod->fallthrough();

    // verify
    auto* verify = app.add_subcommand("verify", "run exact property-verification suites");
    std::string suite = "all";
    mb::VerifyBounds bounds;
    verify->add_option("--suite", suite, "all|arith|series|bernoulli|mb|psi")->capture_default_str();
    verify->add_option("--max-n", bounds.max_n, "largest modulus (2..100)")->capture_default_str();
    verify->add_option("--max-k", bounds.max_k, "largest index (0..min(order,20))")->capture_default_str();
    verify->add_option("--max-N", bounds.max_N, "largest order (1..8)")->capture_default_str();
    verify->add_option("--order", bounds.order, "series truncation order (4..64)")->capture_default_str();
    verify->fallthrough();

    try {
        app.parse(argc, argv);
        mb::OutputFormat format = mb::output_format_from_string(format_name);

        if (*bern) {
            std::vector<mb::OutputRecord> records;
            for (int k = 0; k <= bern_max_k; ++k)
                records.push_back({{{"k", i64str(k)}}, "recurrence", mb::bernoulli(k)});
            emit("bern", records, format);
            return 0;
        }

        if (*mbcmd) {
            std::vector<mb::OutputRecord> records;
            for (int k = 0; k <= mb_max_k; ++k)
                records.push_back(
                    {{{"n", i64str(mb_n)}, {"k", i64str(k)}}, "closed_form", mb::mb_number(k, mb_n)});
            emit("mb", records, format);
            return 0;
        }

        if (*mbn) {
            mb::HigherMBRequest request{.n = mbn_n,
                                        .N = mbn_N,
                                        .k = mbn_k,
                                        .method = mb::mb_method_from_string(mbn_method)};
            mb::Rational value = mb::mb_higher(request);
            std::vector<mb::OutputRecord> records{{{{"n", i64str(mbn_n)},
                                                    {"N", i64str(mbn_N)},
                                                    {"k", i64str(mbn_k)},
                                                    {"method", mbn_method}},
                                                   mb::mb_method_name(request.method),
                                                   value}};
            emit("mbn", records, format);
            return 0;
        }

        if (*psi) {
            if (!psi_want_poly && psi_x.empty())
                throw std::invalid_argument("psi: provide --x VALUE or --poly");
            if (psi_want_poly && !psi_x.empty())
                throw std::invalid_argument("psi: --x and --poly are mutually exclusive");
            std::vector<mb::OutputRecord> records;
            if (psi_want_poly) {
                records.push_back({{{"n", i64str(psi_n)}, {"k", i64str(psi_k)}},
                                   "closed_form",
                                   mb::psi_poly(psi_k, psi_n)});
            } else {
                mb::Rational x = mb::Rational::from_string(psi_x);
                records.push_back({{{"n", i64str(psi_n)}, {"k", i64str(psi_k)}, {"x", psi_x}},
                                   "closed_form",
                                   mb::psi_eval(psi_k, psi_n, x)});
            }
            emit("psi", records, format);
            return 0;
        }

        if (*psiprod) {
            if (!pp_want_poly && pp_x.empty())
                throw std::invalid_argument("psiprod: provide --x VALUE or --poly");
            if (pp_want_poly && !pp_x.empty())
                throw std::invalid_argument("psiprod: --x and --poly are mutually exclusive");
            std::string route = pp_n >= 2 ? "stirling_form" : "convolution";
            mb::Polynomial poly = pp_n >= 2 ? mb::psi_products_poly(pp_k, pp_N, pp_n)
                                            : mb::psi_products_conv(pp_k, pp_N, pp_n);
            std::vector<mb::OutputRecord> records;
            if (pp_want_poly) {
                records.push_back(
                    {{{"n", i64str(pp_n)}, {"N", i64str(pp_N)}, {"k", i64str(pp_k)}}, route, poly});
            } else {
                mb::Rational x = mb::Rational::from_string(pp_x);
                records.push_back(
                    {{{"n", i64str(pp_n)}, {"N", i64str(pp_N)}, {"k", i64str(pp_k)}, {"x", pp_x}},
                     route,
                     poly.eval(x)});
            }
            emit("psiprod", records, format);
            return 0;
        }

        if (*verify) {
            auto t0 = std::chrono::steady_clock::now();
            std::vector<mb::SuiteReport> reports = mb::run_suites(suite, bounds, jobs);
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            mb::write_reports(std::cout, reports, suite);
            std::fprintf(stderr, "# verify %s elapsed %.2f s\n", suite.c_str(), dt);
            return mb::reports_ok(reports) ? 0 : 1;
        }

        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const mb::RouteMismatchError& e) {
        std::cerr << "route disagreement: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
