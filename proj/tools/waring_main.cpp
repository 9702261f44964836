/*
 * Command-line surface for the binary-form rank toolkit.
 *
 * Subcommands: rank, decompose, invariant, canonicalize, scan, verify.
 * Every run is a pure function of the argument vector (plus WARING_PRECISION
 * for the default tolerance): fixed seeds, deterministic searches, ordered
 * JSON keys.  Exit codes: 0 success, 2 boundary or non-squarefree refusals,
 * 1 malformed input and exhausted searches.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "waring/apolarity.hpp"
#include "waring/emit.hpp"
#include "waring/invariants.hpp"
#include "waring/json_io.hpp"
#include "waring/oracle.hpp"
#include "waring/randomgen.hpp"
#include "waring/rank.hpp"
#include "waring/scan.hpp"

namespace {

using namespace waring;

struct FormInput {
    std::string inline_text;
    std::string file_path;
    bool binomial = false;
    bool allow_float = false;

    void attach(CLI::App* sub) {
        sub->add_option("coefficients", inline_text,
                        "comma-separated coefficients or a JSON form document ('-' for stdin)");
        sub->add_option("--file", file_path, "read the form from a file instead");
        sub->add_flag("--binomial", binomial,
                      "coefficients are in the binomial convention (a_i scaled by C(d,i))");
        sub->add_flag("--float", allow_float, "accept decimal literals, converted exactly");
    }

    BinaryForm read() const {
        std::string text = inline_text;
        if (!file_path.empty()) {
            std::ifstream in(file_path);
            if (!in) throw parse_error("cannot open '" + file_path + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        } else if (text == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            text = ss.str();
        }
        return parse_form(text, binomial ? Convention::binomial : Convention::monomial, allow_float);
    }
};

double default_precision() {
    if (const char* env = std::getenv("WARING_PRECISION")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1e-9;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string gaussian_text(const GaussianRational& g) {
    if (g.is_real()) return to_string(g.re);
    std::string out = to_string(g.re) + (sign(g.im) < 0 ? "-" : "+");
    Rational a = abs(g.im);
    if (a != 1) out += to_string(a) + "*";
    return out + "i";
}

std::string complex_text(const std::complex<double>& z) {
    char buf[64];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.12g", z.real());
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.12g%+.12g*i", z.real(), z.imag());
    return buf;
}

std::string decomposition_text(const Decomposition& dec, int degree) {
    std::ostringstream out;
    out << "rank " << dec.rank() << " over " << field_name(dec.field)
        << (dec.exact ? " (exact, residual 0)" : "") << "\n";
    if (!dec.exact) out << "residual " << dec.residual << "\n";
    for (const auto& t : dec.terms) {
        std::string c = t.exact ? gaussian_text(t.c_exact) : complex_text(t.c);
        std::string l0 = t.exact ? gaussian_text(t.l0_exact) : complex_text(t.l0);
        std::string l1 = t.exact ? gaussian_text(t.l1_exact) : complex_text(t.l1);
        out << "  + (" << c << ") * ((" << l0 << ")*x + (" << l1 << ")*y)^" << degree << "\n";
    }
    return out.str();
}

std::string rank_text(const RankResult& r) {
    std::ostringstream out;
    if (r.status == RankStatus::boundary)
        out << "boundary case: " << r.note << "\n";
    else if (r.status == RankStatus::unclassified)
        out << "unclassified: " << r.note << "\n";
    if (r.real_rank) out << "real rank " << *r.real_rank << "\n";
    if (r.complex_rank) out << "complex rank " << *r.complex_rank << "\n";
    if (!r.certificate.empty()) out << "certificate: " << r.certificate << "\n";
    if (r.lower_bound && r.upper_bound)
        out << "rank bracket [" << *r.lower_bound << ", " << *r.upper_bound << "]\n";
    return out.str();
}

int emit_result(const json& j, const std::string& format, const std::string& text) {
    if (format == "text")
        std::cout << text;
    else
        print_json(j);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Waring rank classification for binary forms of degree up to five"};
    app.require_subcommand(1);
    double precision = default_precision();
    app.add_option("--precision", precision,
                   "residual tolerance for numeric certificates (env WARING_PRECISION)");

    std::string format = "json";

    auto* rank_cmd = app.add_subcommand("rank", "classify real and complex rank");
    FormInput rank_in;
    rank_in.attach(rank_cmd);
    rank_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    bool want_witness = false;
    rank_cmd->add_flag("--witness", want_witness, "attach a power-sum decomposition as evidence");

    auto* dec_cmd = app.add_subcommand("decompose", "produce an explicit power-sum decomposition");
    FormInput dec_in;
    dec_in.attach(dec_cmd);
    dec_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    std::string field_opt = "real";
    dec_cmd->add_option("--field", field_opt, "decompose over this field")
        ->check(CLI::IsMember({"real", "complex"}));

    auto* inv_cmd = app.add_subcommand("invariant", "evaluate classification invariants");
    FormInput inv_in;
    inv_in.attach(inv_cmd);
    inv_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    std::string ab_opt;
    inv_cmd->add_option("--ab", ab_opt,
                        "evaluate the quintic-family invariants at 'a,b' instead of on a form");

    auto* can_cmd = app.add_subcommand("canonicalize", "reduce to a canonical family");
    FormInput can_in;
    can_in.attach(can_cmd);
    can_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* scan_cmd = app.add_subcommand("scan", "sign-scan the quintic-family parameter plane");
    std::string a_range = "-3:3", b_range = "-1:6", resolution = "600", scan_format = "csv";
    std::string out_path;
    unsigned scan_threads = 0;
    scan_cmd->add_option("--a-range", a_range, "a interval as 'lo:hi' (exact rationals)");
    scan_cmd->add_option("--b-range", b_range, "b interval as 'lo:hi' (exact rationals)");
    scan_cmd->add_option("--resolution", resolution, "cells per axis, 'N' or 'NxM'");
    scan_cmd->add_option("--format", scan_format)->check(CLI::IsMember({"csv", "svg"}));
    scan_cmd->add_option("--out", out_path, "write to a file instead of stdout");
    scan_cmd->add_option("--threads", scan_threads, "worker threads (0 = all cores)");

    auto* ver_cmd = app.add_subcommand("verify", "cross-check the classifier against a numeric fit");
    int ver_degree = 5, ver_count = 100, ver_restarts = 24;
    unsigned long long ver_seed = 0;
    ver_cmd->add_option("--degree", ver_degree, "form degree")->check(CLI::Range(2, 5));
    ver_cmd->add_option("--count", ver_count, "number of random forms");
    ver_cmd->add_option("--seed", ver_seed, "generator seed");
    ver_cmd->add_option("--restarts", ver_restarts, "fit restarts per rank probe");
    ver_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends: print and exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the usage message to stderr
        return 1;     // every command-line error maps to the error exit code
    }

    try {
        if (rank_cmd->parsed()) {
            BinaryForm f = rank_in.read();
            RankResult r = real_rank(f, want_witness);
            int code = r.status == RankStatus::boundary ? 2 : 0;
            emit_result(to_json(r), format, rank_text(r));
            return code;
        }

        if (dec_cmd->parsed()) {
            BinaryForm f = dec_in.read();
            Field field = field_opt == "complex" ? Field::complex : Field::real;
            Decomposition dec = sylvester_decompose(f, field, precision);
            return emit_result(to_json(dec), format, decomposition_text(dec, f.degree()));
        }

        if (inv_cmd->parsed()) {
            json out;
            std::ostringstream text;
            if (!ab_opt.empty()) {
                size_t comma = ab_opt.find(',');
                if (comma == std::string::npos)
                    throw parse_error("--ab expects two rationals 'a,b'");
                Rational a = parse_rational(ab_opt.substr(0, comma));
                Rational b = parse_rational(ab_opt.substr(comma + 1));
                out["a"] = to_string(a);
                out["b"] = to_string(b);
                out["I12"] = to_string(I12_explicit(a, b));
                out["I12_sign"] = I12_sign(a, b);
                out["D"] = to_string(D_ab(a, b));
                out["D_sign"] = D_sign(a, b);
                out["parabola_side"] = sign(b - a * a);
            } else {
                BinaryForm f = inv_in.read();
                int d = f.degree();
                out["degree"] = d;
                out["discriminant"] = to_string(discriminant(f));
                if (d == 3) {
                    Rational delta = cubic_delta(f);
                    out["delta"] = to_string(delta);
                    out["delta_sign"] = sign(delta);
                }
                if (d == 5) {
                    BinaryForm g = quintic_kernel_cubic(f);
                    out["kernel_cubic_vanishes"] = g.is_zero();
                    if (!g.is_zero()) {
                        Rational i12 = I12_general(f);
                        out["I12"] = to_string(i12);
                        out["I12_sign"] = sign(i12);
                    }
                }
            }
            for (auto it = out.begin(); it != out.end(); ++it)
                text << it.key() << ": "
                     << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                     << "\n";
            return emit_result(out, format, text.str());
        }

        if (can_cmd->parsed()) {
            BinaryForm f = can_in.read();
            CanonicalForm c = canonicalize(f, precision);
            std::ostringstream text;
            text << family_name(c.family) << ": a = " << c.a;
            if (c.family == CanonicalFamily::q5_complex || c.family == CanonicalFamily::q5_real)
                text << ", b = " << c.b;
            text << "\nresidual " << c.residual << "\n";
            return emit_result(to_json(c), format, text.str());
        }

        if (scan_cmd->parsed()) {
            auto parse_range = [](const std::string& s) {
                size_t colon = s.find(':');
                if (colon == std::string::npos) throw parse_error("range must be 'lo:hi'");
                return std::pair<Rational, Rational>{parse_rational(s.substr(0, colon)),
                                                     parse_rational(s.substr(colon + 1))};
            };
            auto [a_lo, a_hi] = parse_range(a_range);
            auto [b_lo, b_hi] = parse_range(b_range);
            int nx, ny;
            size_t x_at = resolution.find('x');
            if (x_at == std::string::npos) {
                nx = ny = std::stoi(resolution);
            } else {
                nx = std::stoi(resolution.substr(0, x_at));
                ny = std::stoi(resolution.substr(x_at + 1));
            }
            ScanResult scan = scan_region(a_lo, a_hi, b_lo, b_hi, nx, ny,
                                          CanonicalFamily::q5_complex, scan_threads);
            std::string payload = scan_format == "svg" ? emit_svg(scan) : emit_csv(scan);
            if (out_path.empty()) {
                std::cout << payload;
            } else {
                std::ofstream outf(out_path, std::ios::binary);
                if (!outf) throw std::runtime_error("cannot write '" + out_path + "'");
                outf << payload;
            }
            return 0;
        }

        if (ver_cmd->parsed()) {
            std::mt19937_64 rng(ver_seed);
            int agreements = 0, skipped = 0;
            json disagreements = json::array();
            for (int n = 0; n < ver_count; ++n) {
                BinaryForm f = random_squarefree_form(rng, ver_degree);
                RankResult r = real_rank(f);
                if (r.status != RankStatus::classified || !r.real_rank) {
                    ++skipped;
                    continue;
                }
                int rank = *r.real_rank;
                OracleResult at_r = numeric_rank_oracle(f, rank, ver_restarts);
                bool below_fails = true;
                if (rank > 1) {
                    OracleResult below = numeric_rank_oracle(f, rank - 1, ver_restarts);
                    below_fails = !below.achieved;
                }
                if (at_r.achieved && below_fails) {
                    ++agreements;
                } else {
                    json bad;
                    bad["form"] = f.pretty();
                    bad["classifier_rank"] = rank;
                    bad["certificate"] = r.certificate;
                    bad["fit_at_rank"] = to_json(at_r);
                    if (rank > 1) bad["fit_below_rank"] = to_json(numeric_rank_oracle(f, rank - 1, ver_restarts));
                    disagreements.push_back(bad);
                }
            }
            bool all_agree = disagreements.empty();
            json out{{"degree", ver_degree},       {"count", ver_count},
                     {"seed", ver_seed},           {"agreements", agreements},
                     {"skipped", skipped},         {"disagreements", disagreements},
                     {"all_agree", all_agree}};
            std::ostringstream text;
            text << "degree " << ver_degree << ": " << agreements << "/" << (ver_count - skipped)
                 << " classifier-fit agreements";
            if (skipped) text << " (" << skipped << " boundary forms skipped)";
            text << "\n";
            emit_result(out, format, text.str());
            return all_agree ? 0 : 1;
        }
    } catch (const squarefree_error& e) {
        print_json(error_json("non-squarefree", e.what()));
        return 2;
    } catch (const parse_error& e) {
        print_json(error_json("parse-error", e.what()));
        return 1;
    } catch (const search_error& e) {
        print_json(error_json("search-exhausted", e.what()));
        return 1;
    } catch (const convergence_error& e) {
        print_json(error_json("no-convergence", e.what()));
        return 1;
    } catch (const std::exception& e) {
        print_json(error_json("error", e.what()));
        return 1;
    }
    return 1;
}
