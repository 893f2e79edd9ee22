// Command-line surface: eval / verify / figure / faces.
//
// Exit codes: 0 ok, 1 verification failure, 2 domain error, 3 convergence
// failure, 64 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "selberg/continuation.hpp"
#include "selberg/identities.hpp"
#include "selberg/io.hpp"
#include "selberg/parse.hpp"
#include "selberg/verify.hpp"

namespace {

using selberg::cplx;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitDomain = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitUsage = 64;

// "a", "a+bi", "a-bi", "bi"
cplx parse_complex(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw selberg::syntax_error(0, "empty complex literal");
    if (t.back() == 'i' || t.back() == 'I') {
        t.pop_back();
        // split into real and imaginary parts at the last +/- that is not
        // an exponent sign
        std::size_t split = std::string::npos;
        for (std::size_t i = t.size(); i-- > 1;) {
            if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            if (t.empty() || t == "+" || t == "-") t += "1";
            return {0.0, std::stod(t)};
        }
        std::string im = t.substr(split);
        if (im == "+" || im == "-") im += "1";
        return {std::stod(t.substr(0, split)), std::stod(im)};
    }
    return {std::stod(t), 0.0};
}

std::vector<cplx> parse_complex_list(const std::string& s) {
    std::vector<cplx> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    return out;
}

struct Tolerances {
    double eval_target_rel = 1e-9;
    int eval_max_level = 8;
    double verify_tol_scale = 1.0;
    double contour_r = 1.0;
};

Tolerances load_config(const std::string& path) {
    Tolerances t;
    if (path.empty()) return t;
    std::ifstream in(path);
    if (!in) throw selberg::domain_error("config file not found: " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos || line.empty() || line[0] == '#') continue;
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 1);
        if (key == "eval.target_rel") t.eval_target_rel = std::stod(val);
        else if (key == "eval.max_level") t.eval_max_level = std::stoi(val);
        else if (key == "verify.tol_scale") t.verify_tol_scale = std::stod(val);
        else if (key == "contour.r") t.contour_r = std::stod(val);
    }
    return t;
}

selberg::GenericParams build_params(int N, const std::string& alpha, const std::string& beta,
                                    const std::string& gamma, bool symmetric) {
    selberg::GenericParams p(N);
    const auto av = parse_complex_list(alpha);
    const auto bv = parse_complex_list(beta);
    if (symmetric) {
        if (av.size() != 1 || bv.size() != 1)
            throw selberg::domain_error("symmetric mode expects scalar alpha/beta");
        std::fill(p.alpha.begin(), p.alpha.end(), av[0]);
        std::fill(p.beta.begin(), p.beta.end(), bv[0]);
    } else {
        if (static_cast<int>(av.size()) != N || static_cast<int>(bv.size()) != N)
            throw selberg::domain_error("alpha/beta must have N entries");
        p.alpha = av;
        p.beta = bv;
    }
    // gamma: a single value, or j,k=v pairs separated by ';'
    if (gamma.find('=') == std::string::npos) {
        const cplx g = parse_complex(gamma);
        std::fill(p.gamma.begin(), p.gamma.end(), g);
    } else {
        std::stringstream ss(gamma);
        std::string item;
        while (std::getline(ss, item, ';')) {
            const auto eq = item.find('=');
            const auto comma = item.find(',');
            if (eq == std::string::npos || comma == std::string::npos || comma > eq)
                throw selberg::domain_error("gamma pair syntax: j,k=v;...");
            const int j = std::stoi(item.substr(0, comma));
            const int k = std::stoi(item.substr(comma + 1, eq - comma - 1));
            p.set_gam(j, k, parse_complex(item.substr(eq + 1)));
        }
    }
    return p;
}

std::string hash_key(const std::string& s) {
    // FNV-1a 64
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int cmd_eval(const std::string& kind, const std::string& shape_str, int n_flag, bool symmetric,
             const std::string& alpha, const std::string& beta, const std::string& gamma,
             const std::string& fsrc, const std::string& method, const Tolerances& tol,
             const std::string& cache_dir) {
    selberg::RegionShape shape{0, 0, 0};
    int N = 0;
    if (!shape_str.empty()) {
        std::stringstream ss(shape_str);
        char c;
        ss >> shape.l >> c >> shape.m >> c >> shape.n;
        N = shape.N();
    } else {
        N = n_flag;
        shape = {0, N, 0};
    }
    const selberg::GenericParams p = build_params(N, alpha, beta, gamma, symmetric);
    const selberg::LaurentPoly F =
        fsrc.empty() ? selberg::LaurentPoly::one(N) : selberg::parse_poly(fsrc, N);

    selberg::QuadSettings qs;
    qs.target_rel = tol.eval_target_rel;
    qs.max_level = tol.eval_max_level;
    qs.contour_r = tol.contour_r;

    std::string cache_path;
    if (!cache_dir.empty()) {
        std::ostringstream key;
        key.precision(17);
        key << kind << "|" << shape.l << "," << shape.m << "," << shape.n << "|" << method << "|"
            << qs.target_rel << "|" << qs.max_level << "|" << selberg::emit_poly(F) << "|";
        for (const auto& v : p.alpha) key << v << ";";
        for (const auto& v : p.beta) key << v << ";";
        for (const auto& v : p.gamma) key << v << ";";
        cache_path = cache_dir + "/" + hash_key(key.str()) + ".json";
        std::ifstream cached(cache_path);
        if (cached) {
            std::cout << cached.rdbuf();
            return kExitOk;
        }
    }

    cplx value;
    double err_est = 0.0;
    if (method == "quad") {
        const selberg::QuadResult r = (kind == "I") ? selberg::df_quad(shape, F, p, qs)
                                                    : selberg::selberg_quad(shape, F, p, qs);
        value = r.value;
        err_est = r.err_est;
    } else if (method == "closed") {
        if (kind != "S") throw selberg::unsupported("closed form available for S only");
        if (N == 1) {
            value = 0.0;
            for (const auto& [k, c] : F.terms())
                value += c * selberg::beta_mero(p.alpha[0] + static_cast<double>(k[0]), p.beta[0]);
        } else if (N == 2 && p.is_constant() && F.is_one()) {
            selberg::SymmetricParams s;
            s.alpha = p.alpha[0];
            s.beta = p.beta[0];
            s.gamma = p.gamma[0];
            value = selberg::selberg_closed(2, s);
        } else if (N == 2) {
            value = selberg::s2_closed_insertion(p, F);
        } else if (p.is_constant() && F.is_one()) {
            selberg::SymmetricParams s;
            s.alpha = p.alpha[0];
            s.beta = p.beta[0];
            s.gamma = p.gamma.empty() ? cplx(0.0) : p.gamma[0];
            value = selberg::selberg_closed(N, s);
        } else {
            throw selberg::unsupported("closed form: N>2 needs constant parameters and F=1");
        }
    } else if (method == "continued") {
        if (N != 2) throw selberg::unsupported("continued evaluation is N=2 only");
        value = selberg::continue_s2(p, F);
    } else {
        throw selberg::unsupported("unknown method " + method);
    }

    nlohmann::json out;
    out["value_re"] = value.real();
    out["value_im"] = value.imag();
    out["err_est"] = err_est;
    out["method"] = method;
    const auto dc = selberg::in_domain(selberg::DomainKind::Omega, shape, p);
    out["domain_flags"] = {{"omega", dc.ok}};
    {
        const auto fac =
            selberg::gamma_factorization(shape, F, selberg::FactorizationVariant::Generic);
        nlohmann::json args = nlohmann::json::array();
        for (const auto& f : fac.factors) {
            const cplx a = f.gamma_argument(p);
            args.push_back({a.real(), a.imag()});
        }
        out["gamma_factor_arguments"] = args;
    }
    const std::string text = out.dump();
    std::cout << text << "\n";
    if (!cache_path.empty()) {
        std::filesystem::create_directories(cache_dir);
        std::ofstream co(cache_path);
        co << text << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, double tol_scale, bool quick) {
    selberg::SuiteOptions opt;
    opt.seed = seed;
    opt.tol_scale = tol_scale;
    opt.quick = quick;
    const auto reports = selberg::run_suites(suite, opt);
    int failures = 0;
    for (const auto& rep : reports) {
        for (const auto& c : rep.checks) {
            std::cout << selberg::to_json_line(c, rep.suite) << "\n";
            if (!c.skipped && !c.passed) ++failures;
        }
    }
    return failures == 0 ? kExitOk : kExitVerify;
}

int cmd_figure(const std::string& name, double start, double stop, int count, double beta,
               double gamma, const Tolerances& tol) {
    if (count < 2 || count > 100000) throw selberg::domain_error("figure: count out of range");
    std::cout << "alpha,abs_value,method\n";
    const selberg::LaurentPoly xx = selberg::parse_poly("x1^2+x2^2", 2);
    for (int i = 0; i < count; ++i) {
        const double a = start + (stop - start) * i / (count - 1);
        std::string method;
        cplx v;
        bool ok = true;
        try {
            selberg::GenericParams p(2);
            p.beta = {beta, beta};
            p.set_gam(1, 2, gamma);
            if (name == "fig-x2") {
                p.alpha = {a, a + 2.0};
                v = selberg::s2_closed(p);
                method = "s2_closed";
            } else if (name == "fig-y2") {
                p.alpha = {a + 2.0, a};
                v = selberg::s2_closed(p);
                method = "s2_closed";
            } else if (name == "fig-sum") {
                p.alpha = {a, a};
                v = selberg::s2_closed_insertion(p, xx);
                method = "s2_closed_insertion";
            } else if (name == "fig-reg") {
                selberg::SymmetricParams s;
                s.alpha = a;
                s.beta = beta;
                s.gamma = gamma;
                v = selberg::regularized_s2(xx, s);
                method = "regularized_s2";
            } else {
                throw selberg::unsupported("unknown figure " + name);
            }
        } catch (const selberg::pole_error&) {
            ok = false;
            method = "pole";
        } catch (const selberg::error&) {
            ok = false;
            method = "error";
        }
        std::printf("%.10g,", a);
        if (ok)
            std::printf("%.12g,%s\n", std::abs(v), method.c_str());
        else
            std::printf(",%s\n", method.c_str());
    }
    (void)tol;
    return kExitOk;
}

int cmd_faces(const std::string& shape_str, bool a_faces) {
    selberg::RegionShape shape{0, 0, 0};
    std::stringstream ss(shape_str);
    char c;
    ss >> shape.l >> c >> shape.m >> c >> shape.n;
    if (a_faces)
        std::cout << selberg::a_faces_to_json(shape) << "\n";
    else
        std::cout << selberg::k_faces_to_json(shape) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Selberg-like and Dotsenko-Fateev-like integral evaluator"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value tolerance file");

    auto* eval = app.add_subcommand("eval", "evaluate S or I");
    std::string kind = "S", shape_str, alpha, beta, gamma = "0", fsrc, method = "quad", cache_dir;
    int n_flag = 1;
    bool symmetric = false;
    eval->add_option("--kind", kind, "S or I");
    eval->add_option("--shape", shape_str, "l,m,n");
    eval->add_option("--n", n_flag, "N with the (0,N,0) shape");
    eval->add_flag("--symmetric", symmetric, "constant parameters");
    eval->add_option("--alpha", alpha)->required();
    eval->add_option("--beta", beta)->required();
    eval->add_option("--gamma", gamma);
    eval->add_option("--f", fsrc, "insertion polynomial");
    eval->add_option("--method", method, "quad | closed | continued");
    eval->add_option("--cache", cache_dir, "memoize results keyed by content hash");
    double flag_target_rel = -1.0;
    int flag_max_level = -1;
    eval->add_option("--target-rel", flag_target_rel);
    eval->add_option("--max-level", flag_max_level);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    std::uint64_t seed = 1;
    double tol_scale = 1.0;
    bool quick = false;
    verify->add_option("--suite", suite,
                       "combinatorics|special|quadrature|continuation|aomoto|symmetrization|df|all");
    verify->add_option("--seed", seed);
    verify->add_option("--tol", tol_scale, "tolerance scale factor");
    verify->add_flag("--quick", quick);

    auto* figure = app.add_subcommand("figure", "emit figure data as CSV");
    std::string fig_name;
    double fstart = -5.0, fstop = 0.0, fbeta = 0.5, fgamma = 1.0 / 3.0;
    int fcount = 200;
    figure->add_option("--name", fig_name, "fig-x2 | fig-y2 | fig-sum | fig-reg")->required();
    figure->add_option("--start", fstart);
    figure->add_option("--stop", fstop);
    figure->add_option("--count", fcount);
    figure->add_option("--beta", fbeta);
    figure->add_option("--gamma", fgamma);

    auto* faces = app.add_subcommand("faces", "dump face combinatorics");
    std::string faces_shape = "0,2,0";
    bool a_faces = false;
    faces->add_option("--shape", faces_shape, "l,m,n");
    faces->add_flag("--a", a_faces, "A-faces instead of K-faces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        Tolerances tol = load_config(config_path);
        if (flag_target_rel > 0) tol.eval_target_rel = flag_target_rel;
        if (flag_max_level > 0) tol.eval_max_level = flag_max_level;
        if (eval->parsed())
            return cmd_eval(kind, shape_str, n_flag, symmetric, alpha, beta, gamma, fsrc, method,
                            tol, cache_dir);
        if (verify->parsed()) return cmd_verify(suite, seed, tol_scale, quick);
        if (figure->parsed()) return cmd_figure(fig_name, fstart, fstop, fcount, fbeta, fgamma, tol);
        if (faces->parsed()) return cmd_faces(faces_shape, a_faces);
    } catch (const selberg::convergence_error& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const selberg::syntax_error& e) {
        std::cerr << "syntax error at byte " << e.offset << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const selberg::error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
