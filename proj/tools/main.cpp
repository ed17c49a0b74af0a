#include <cstdio>
#include <filesystem>
#include <iostream>
#include <regex>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symmom/combinat.hpp"
#include "symmom/moments.hpp"
#include "symmom/quadform.hpp"
#include "symmom/sympow.hpp"
#include "symmom/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string rational_str(const symmom::Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

fs::path cache_dir() {
    if (const char* env = std::getenv("SYMMOM_CACHE_DIR"))
        return env;
    return fs::current_path();
}

fs::path cache_path(const std::string& label, long N) {
    return cache_dir() / (label + "_N" + std::to_string(N) + ".csv");
}

// load a cached delta series of length >= N if one exists, else compute
symmom::CoefficientSeries delta_series(long N) {
    std::regex pattern("delta_N([0-9]+)\\.csv");
    long best = 0;
    fs::path best_path;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(cache_dir(), ec)) {
        std::smatch m;
        std::string name = entry.path().filename().string();
        if (!std::regex_match(name, m, pattern))
            continue;
        long len = std::atol(m[1].str().c_str());
        if (len >= N && (best == 0 || len < best)) {
            best = len;
            best_path = entry.path();
        }
    }
    if (best > 0) {
        auto series = symmom::load_coefficients(best_path, 12);
        series.label = "delta";
        if (series.length > N) {
            series.length = N;
            series.raw.resize(series.has_raw() ? N + 1 : 0);
            series.lambda.resize(N + 1);
        }
        return series;
    }
    return symmom::delta_coefficients(N);
}

// "3" or "3..8"
std::pair<long, long> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        long v = std::atol(s.c_str());
        return {v, v};
    }
    return {std::atol(s.substr(0, pos).c_str()), std::atol(s.substr(pos + 2).c_str())};
}

int run_verify(const std::string& suite, long N) {
    auto checks = symmom::verify::run(suite, N);
    bool all_pass = true;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty())
            std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
        if (!c.pass && all_pass) {
            std::cerr << "verification failed: " << c.name << "\n";
            all_pass = false;
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric-power Hecke eigenvalue moments: Kostka decompositions, "
                 "error-term exponents, binary quadratic forms and desk-scale sums"};
    app.require_subcommand(1);
    app.fallthrough(); // accept the global options after a subcommand name
    std::string format = "text";
    app.add_option("--format", format, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    unsigned threads = 0;
    app.add_option("--threads", threads, "Cap internal parallelism (default: all cores)");

    // kostka
    auto* kostka = app.add_subcommand("kostka", "Decomposition multiplicities K_{i,d,l}");
    long kd = 2, kl = 2, ki = -1;
    bool kwant_i = false;
    kostka->add_option("--d", kd, "Symmetric-power degree d")->required();
    kostka->add_option("--l", kl, "Tensor-power exponent l")->required();
    auto* kiopt = kostka->add_option("--i", ki, "Single index i (default: full vector)");

    // theta-table
    auto* ttab = app.add_subcommand("theta-table", "Error-term exponent tables");
    std::string td = "2", tl = "2";
    bool tbqf = false, tbqf_h1 = false, tunchecked = false;
    int tplaces = 9;
    ttab->add_option("--d", td, "d value or range a..b");
    ttab->add_option("--l", tl, "l value or range a..b");
    ttab->add_flag("--bqf", tbqf, "Binary-quadratic-form variant (class number > 1)");
    ttab->add_flag("--bqf-h1", tbqf_h1, "Binary-quadratic-form variant (class number 1)");
    ttab->add_flag("--unchecked", tunchecked,
                   "Evaluate outside the proven range l >= 2, dl > 4 (non-theorem output)");
    ttab->add_option("--places", tplaces, "Decimal places");

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "Eigenform coefficients and cache");
    long cN = 1000;
    std::string cload;
    int cweight = 12;
    coeffs->add_option("--N", cN, "Length of the q-expansion");
    coeffs->add_option("--load", cload, "Validate a user-supplied coefficient CSV");
    coeffs->add_option("--weight", cweight, "Weight of the loaded form");

    // sympow
    auto* sympow = app.add_subcommand("sympow", "Symmetric-power eigenvalues lambda_{Sym^d}(n)");
    long sd = 2, sN = 100;
    sympow->add_option("--d", sd, "Symmetric-power degree")->required();
    sympow->add_option("--N", sN, "Number of coefficients");

    // moments
    auto* moments = app.add_subcommand("moments", "Partial sums of lambda_{Sym^d}(n)^l");
    long md = 1, ml = 2, mx = 100000;
    std::string mform;
    moments->add_option("--d", md, "Symmetric-power degree")->required();
    moments->add_option("--l", ml, "Moment exponent")->required();
    moments->add_option("--x", mx, "Largest cutoff");
    moments->add_option("--form", mform, "Weight by r(n,Q) for Q = a,b,c");

    // bqf
    auto* bqf = app.add_subcommand("bqf", "Binary quadratic forms and class groups");
    long bD = 0, bN = 100;
    std::string bform;
    bool bverify = false;
    int bchi = -1;
    bqf->add_option("--disc", bD, "Discriminant D < 0");
    bqf->add_option("--form", bform, "Form a,b,c");
    bqf->add_option("--limit", bN, "Upper bound N");
    bqf->add_flag("--verify", bverify, "Check the character decomposition of r(n,Q)");
    bqf->add_option("--chi", bchi, "Emit theta coefficients a_chi(n) for this character");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    std::string vsuite = "all";
    long vN = 10000;
    verify->add_option("--suite", vsuite,
                       "all, combinat, eigenform, sympow, quadform or moments");
    verify->add_option("--N", vN, "Coefficient length / enumeration bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    symmom::set_thread_cap(threads);
    kwant_i = kiopt->count() > 0;

    try {
        if (*kostka) {
            if (kwant_i) {
                std::cout << symmom::kostka_recursive(ki, kd, kl).str() << "\n";
            } else {
                auto mv = symmom::tensor_power_multiplicities(kd, kl);
                if (format == "json") {
                    json j;
                    for (const auto& [i, m] : mv)
                        j[std::to_string(i)] = m.str();
                    std::cout << j.dump() << "\n";
                } else if (format == "csv") {
                    std::cout << "i,K\n";
                    for (const auto& [i, m] : mv)
                        std::cout << i << "," << m.str() << "\n";
                } else {
                    bool first = true;
                    for (const auto& [i, m] : mv) {
                        std::cout << (first ? "" : " ") << i << ":" << m.str();
                        first = false;
                    }
                    std::cout << "\n";
                }
            }
        } else if (*ttab) {
            auto [dlo, dhi] = parse_range(td);
            auto [llo, lhi] = parse_range(tl);
            if (format == "csv")
                std::cout << "d,l,theta_exact,theta_decimal\n";
            for (long d = dlo; d <= dhi; ++d)
                for (long l = llo; l <= lhi; ++l) {
                    symmom::ThetaReport r =
                        tbqf || tbqf_h1 ? symmom::theta_bqf(d, l, tbqf_h1, tunchecked)
                                        : symmom::theta(d, l, tunchecked);
                    if (format == "csv") {
                        std::cout << d << "," << l << "," << rational_str(r.theta_exact) << ","
                                  << r.decimal(tplaces) << "\n";
                    } else if (format == "json") {
                        json j{{"d", d},
                               {"l", l},
                               {"theta_exact", rational_str(r.theta_exact)},
                               {"theta_decimal", r.decimal(tplaces)}};
                        std::cout << j.dump() << "\n";
                    } else {
                        std::printf("d=%-3ld l=%-3ld theta=%s  (= %s)\n", d, l,
                                    r.decimal(tplaces).c_str(),
                                    rational_str(r.theta_exact).c_str());
                    }
                }
        } else if (*coeffs) {
            if (!cload.empty()) {
                auto series = symmom::load_coefficients(cload, cweight);
                std::cout << "ok: " << series.label << " N=" << series.length
                          << (series.has_raw() ? " (exact)" : " (float)") << "\n";
            } else {
                auto series = delta_series(cN);
                auto path = cache_path(series.label, series.length);
                symmom::save_coefficients(series, path);
                std::cout << "wrote " << path.string() << "\n";
            }
        } else if (*sympow) {
            auto base = delta_series(sN);
            auto s = symmom::sym_series(base, sd, sN);
            std::cout << "n,lambda_sym_" << sd << "\n";
            for (long n = 1; n <= sN; ++n)
                std::cout << n << "," << fmt17(s.values[n]) << "\n";
        } else if (*moments) {
            auto base = delta_series(mx);
            auto s = symmom::sym_series(base, md, mx);
            std::vector<std::pair<double, double>> samples;
            long xlo = std::max<long>(100, mx / 1000);
            symmom::QuadForm q;
            bool weighted = !mform.empty();
            if (weighted && std::sscanf(mform.c_str(), "%ld,%ld,%ld", &q.a, &q.b, &q.c) != 3)
                throw symmom::FormatError("--form expects a,b,c");
            for (double x = static_cast<double>(xlo); x <= mx + 0.5; x *= 1.4) {
                long xi = std::min<long>(mx, static_cast<long>(x + 0.5));
                double S = weighted ? symmom::bqf_moment_sum(s, ml, q, xi)
                                    : symmom::moment_sum(s, ml, xi);
                samples.emplace_back(static_cast<double>(xi), S);
            }
            auto fit = symmom::fit_main_term(md, ml, samples);
            std::cout << "x,S,fit,residual\n";
            for (std::size_t i = 0; i < samples.size(); ++i) {
                double pred = 0.0, t = 1.0, lx = std::log(samples[i].first);
                for (double c : fit.fitted_coeffs) {
                    pred += c * t;
                    t *= lx;
                }
                double fitted = samples[i].first * pred;
                std::cout << fmt17(samples[i].first) << "," << fmt17(samples[i].second) << ","
                          << fmt17(fitted) << "," << fmt17(samples[i].second - fitted) << "\n";
            }
            std::cerr << "residual exponent estimate: " << fmt17(fit.residual_exponent) << "\n";
        } else if (*bqf) {
            symmom::QuadForm q;
            bool have_form = !bform.empty();
            if (have_form) {
                if (std::sscanf(bform.c_str(), "%ld,%ld,%ld", &q.a, &q.b, &q.c) != 3)
                    throw symmom::FormatError("--form expects a,b,c");
                if (bD == 0)
                    bD = q.disc();
            }
            if (bD == 0)
                throw symmom::InvalidDiscriminant("bqf: need --disc or --form");
            symmom::ClassGroup G(bD);
            if (!have_form)
                q = G.principal();
            if (bverify) {
                double res = symmom::verify_character_decomposition(G, q, bN);
                std::cout << "max residual " << fmt17(res) << " over n <= " << bN << "\n";
                return res < 1e-9 ? 0 : 1;
            }
            if (bchi >= 0) {
                auto t = symmom::theta_coefficients(G, bchi, bN);
                std::cout << "n,a_chi_re,a_chi_im\n";
                for (long n = 1; n <= bN; ++n)
                    std::cout << n << "," << fmt17(t.values[n].real()) << ","
                              << fmt17(t.values[n].imag()) << "\n";
            } else {
                std::cerr << "D=" << bD << " h=" << G.h() << " w=" << G.w() << "\n";
                auto r = symmom::representation_counts(q, bN);
                std::cout << "n,r\n";
                for (long n = 1; n <= bN; ++n)
                    std::cout << n << "," << r[n] << "\n";
            }
        } else if (*verify) {
            return run_verify(vsuite, vN);
        }
    } catch (const symmom::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
