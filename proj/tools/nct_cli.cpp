// Command-line front end: every construction and verification as a
// subcommand with JSON on stdout and deterministic exit codes:
//   0 ok | 1 violation | 2 domain-error | 3 input-error
// Diagnostics (including elapsed time) go to stderr so that identical
// inputs and seeds produce byte-identical stdout.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nct/json_io.hpp"
#include "nct/linalg.hpp"
#include "nct/prng.hpp"

namespace {

using nct::Json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw nct::InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json load_json(const std::string& path) { return nct::parse_json(read_input(path)); }

nct::GroupElement load_group(const std::string& g_path, const std::string& word_path,
                             std::size_t n_hint) {
    if (!g_path.empty()) return nct::group_from_json(load_json(g_path));
    if (!word_path.empty()) {
        nct::GeneratorWord w = nct::word_from_json(load_json(word_path));
        std::size_t n = n_hint;
        if (n == 0) {
            for (const auto& t : w.tokens()) {
                const nct::GeneratorToken* cur = &t;
                while (cur->kind == nct::GeneratorToken::Kind::Inverse) cur = &cur->inner.front();
                if (cur->kind != nct::GeneratorToken::Kind::Sigma) {
                    n = cur->mat.rows();
                    break;
                }
            }
        }
        if (n == 0) throw nct::InputError("cannot infer n from the word; pass --n");
        return w.evaluate(n);
    }
    throw nct::InputError("pass --g or --word");
}

struct Options {
    std::string theta_path, g_path, word_path, rep_path, r_path;
    std::size_t n = 0, p = 1;
    long long bound = 2;
    long long pair_bound = 2;
    std::size_t max_word_len = 6;
    std::size_t count = 100;
    std::uint64_t seed = 0;
    std::string t32_mode = "half";
};

int finish(const Json& payload, const std::string& status,
           std::chrono::steady_clock::time_point start) {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    Json out{{"status", status}, {"payload", payload}};
    std::cout << out.dump(2) << "\n";
    std::cerr << "elapsed_ms: " << ms << "\n";
    if (status == "ok") return 0;
    if (status == "violation") return 1;
    if (status == "domain-error") return 2;
    return 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for noncommutative-torus dualities"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--theta", opt.theta_path, "antisymmetric matrix JSON (file or -)");
        cmd->add_option("--g", opt.g_path, "group element JSON");
        cmd->add_option("--word", opt.word_path, "generator word JSON");
        cmd->add_option("--n", opt.n, "ambient dimension when not inferable");
        cmd->add_option("--seed", opt.seed, "PRNG seed (default 0)");
    };

    CLI::App* act = app.add_subcommand("act", "apply a group element or word to theta");
    add_common(act);
    CLI::App* check_group = app.add_subcommand("check-group", "block equations + det membership");
    add_common(check_group);
    CLI::App* sigma_dual =
        app.add_subcommand("sigma-dual", "build the embedding and its dual for sigma_2p");
    add_common(sigma_dual);
    sigma_dual->add_option("--p", opt.p, "half-size of the inverted block (default 1)");
    sigma_dual->add_option("--t32-mode", opt.t32_mode, "upper | half (default half)");
    CLI::App* grassmann_act =
        app.add_subcommand("grassmann-act", "projective action on the Gaussian element");
    add_common(grassmann_act);
    CLI::App* intertwiner_cmd = app.add_subcommand("intertwiner", "dump U_g");
    add_common(intertwiner_cmd);
    CLI::App* trace_range_cmd = app.add_subcommand("trace-range", "trace range generator");
    add_common(trace_range_cmd);
    CLI::App* morita_trace = app.add_subcommand("morita-trace", "trace-range ratio under g");
    add_common(morita_trace);
    CLI::App* pfaffian_cmd = app.add_subcommand("pfaffian", "Pfaffian of a skew matrix");
    add_common(pfaffian_cmd);
    CLI::App* rep_check = app.add_subcommand("rep-check", "finite representation relations");
    rep_check->add_option("--rep", opt.rep_path, "RationalTheta JSON {q, P}")->required();
    rep_check->add_option("--R", opt.r_path, "unimodular integer matrix JSON");
    rep_check->add_option("--pair-bound", opt.pair_bound, "entry bound for pair sweeps");
    CLI::App* wedge_cmd =
        app.add_subcommand("wedge-counterexample", "exhaustive wedge-square sign search");
    wedge_cmd->add_option("--bound", opt.bound, "entry bound (default 2)");
    wedge_cmd->add_option("--seed", opt.seed, "PRNG seed for the det-identity sample");
    CLI::App* orbit_sample =
        app.add_subcommand("orbit-sample", "empirical domain statistics for random words");
    add_common(orbit_sample);
    orbit_sample->add_option("--max-word-len", opt.max_word_len, "max word length (default 6)");
    orbit_sample->add_option("--count", opt.count, "number of words (default 100)");

    CLI11_PARSE(app, argc, argv);
    auto start = std::chrono::steady_clock::now();

    try {
        if (act->parsed()) {
            nct::SkewMatrix theta = nct::skew_from_json(load_json(opt.theta_path));
            nct::GroupElement g = load_group(opt.g_path, opt.word_path, theta.n());
            nct::SkewMatrix moved = nct::act(g, theta);
            return finish(Json{{"theta_prime", nct::to_json(moved)}}, "ok", start);
        }
        if (check_group->parsed()) {
            Json j = load_json(opt.g_path.empty() ? opt.word_path : opt.g_path);
            // report membership rather than reject, so parse blocks by hand
            nct::RatMatrix a = nct::matrix_from_json(j.at("A"));
            nct::RatMatrix b = nct::matrix_from_json(j.at("B"));
            nct::RatMatrix c = nct::matrix_from_json(j.at("C"));
            nct::RatMatrix d = nct::matrix_from_json(j.at("D"));
            std::size_t n = a.rows();
            nct::RatMatrix m(2 * n, 2 * n);
            m.set_block(0, 0, a);
            m.set_block(0, n, b);
            m.set_block(n, 0, c);
            m.set_block(n, n, d);
            bool integral = m.is_integer();
            bool eq1 = (a.transpose() * c + c.transpose() * a).is_zero();
            bool eq2 = (b.transpose() * d + d.transpose() * b).is_zero();
            bool eq3 = (a.transpose() * d + c.transpose() * b).is_identity();
            nct::Rational dt = nct::det(m);
            bool in_o = integral && eq1 && eq2 && eq3 &&
                        (dt == nct::Rational(1) || dt == nct::Rational(-1));
            Json payload{{"n", n},
                         {"integral", integral},
                         {"block_equations", Json{{"AtC_CtA", eq1}, {"BtD_DtB", eq2},
                                                  {"AtD_CtB", eq3}}},
                         {"det", nct::to_json(dt)},
                         {"in_o_nn_z", in_o},
                         {"in_so_nn_z", in_o && dt == nct::Rational(1)}};
            return finish(payload, "ok", start);
        }
        if (sigma_dual->parsed()) {
            nct::SkewMatrix theta = nct::skew_from_json(load_json(opt.theta_path));
            nct::T32Mode mode;
            if (opt.t32_mode == "half")
                mode = nct::T32Mode::Half;
            else if (opt.t32_mode == "upper")
                mode = nct::T32Mode::Upper;
            else
                throw nct::InputError("--t32-mode must be upper or half");
            nct::EmbeddingData e = nct::build_embedding(theta, opt.p, mode);
            return finish(nct::to_json(e), "ok", start);
        }
        if (grassmann_act->parsed()) {
            nct::SkewMatrix theta = nct::skew_from_json(load_json(opt.theta_path));
            nct::GroupElement g = load_group(opt.g_path, opt.word_path, theta.n());
            auto [moved, scalar] = nct::projective_act(g, theta);
            nct::TransformedIdentityReport rep = nct::transformed_gaussian_identity(g, theta);
            Json payload{{"theta_prime", nct::to_json(moved)},
                         {"scalar", nct::to_json(scalar)},
                         {"annihilator_identity", rep.ok}};
            if (!rep.ok) {
                payload["failed_base"] = rep.failed_base;
                payload["failed_transformed"] = rep.failed_transformed;
                return finish(payload, "violation", start);
            }
            return finish(payload, "ok", start);
        }
        if (intertwiner_cmd->parsed()) {
            nct::GroupElement g = load_group(opt.g_path, opt.word_path, opt.n);
            nct::OperatorMatrix u = nct::intertwiner(g);
            return finish(Json{{"n", u.n()}, {"U", nct::to_json(u.matrix())}}, "ok", start);
        }
        if (trace_range_cmd->parsed()) {
            nct::SkewMatrix theta = nct::skew_from_json(load_json(opt.theta_path));
            return finish(Json{{"generator", nct::to_json(nct::trace_range(theta).generator)}},
                          "ok", start);
        }
        if (morita_trace->parsed()) {
            nct::SkewMatrix theta = nct::skew_from_json(load_json(opt.theta_path));
            nct::GroupElement g = load_group(opt.g_path, opt.word_path, theta.n());
            nct::Rational before = nct::trace_range(theta).generator;
            nct::Rational c = nct::morita_trace_check(theta, g);
            nct::Rational after = nct::trace_range(nct::act(g, theta)).generator;
            Json payload{{"c", nct::to_json(c)},
                         {"range_before", nct::to_json(before)},
                         {"range_after", nct::to_json(after)}};
            return finish(payload, "ok", start);
        }
        if (pfaffian_cmd->parsed()) {
            nct::SkewMatrix theta = nct::skew_from_json(load_json(opt.theta_path));
            return finish(Json{{"pfaffian", nct::to_json(nct::pfaffian(theta))}}, "ok", start);
        }
        if (rep_check->parsed()) {
            nct::RationalTheta rt = nct::rational_theta_from_json(load_json(opt.rep_path));
            nct::TorusRep rep = nct::build_rep(rt);
            nct::RelationReport rel = nct::verify_relations(rep);
            nct::RelationReport bi = nct::verify_bicharacter(rep, opt.pair_bound);
            Json payload{{"n", rt.n},
                         {"q", rt.q},
                         {"dim", rep.dim},
                         {"relations", rel.ok},
                         {"bicharacter", bi.ok}};
            bool ok = rel.ok && bi.ok;
            if (!rel.ok) payload["relations_detail"] = rel.detail;
            if (!bi.ok) payload["bicharacter_detail"] = bi.detail;
            if (!opt.r_path.empty()) {
                nct::RatMatrix r = nct::matrix_from_json(load_json(opt.r_path));
                nct::RelationReport iso = nct::verify_rho_iso(rep, r, opt.pair_bound);
                payload["iso_check"] = iso.ok;
                if (!iso.ok) payload["iso_detail"] = iso.detail;
                ok = ok && iso.ok;
            }
            return finish(payload, ok ? "ok" : "violation", start);
        }
        if (wedge_cmd->parsed()) {
            nct::CounterexampleReport rep = nct::counterexample_search(opt.bound);
            Json payload = nct::to_json(rep);
            // determinant identity sample alongside the exhaustive search
            nct::Prng rng(opt.seed);
            std::size_t samples = 10000;
            bool det_ok = true;
            for (std::size_t i = 0; i < samples && det_ok; ++i) {
                nct::Mat3 a{};
                for (auto& v : a) v = rng.range(-5, 5);
                long long d = nct::det_i64(a);
                det_ok = nct::det_i64(nct::wedge_square_i64(a)) == d * d;
            }
            payload["det_identity"] = Json{{"samples", samples}, {"holds", det_ok},
                                           {"seed", opt.seed}};
            payload["sign_obstruction"] =
                "target requires det(A^A) = -1 but det(A^A) = det(A)^2 >= 0";
            return finish(payload, det_ok ? "ok" : "violation", start);
        }
        if (orbit_sample->parsed()) {
            nct::SkewMatrix theta = nct::skew_from_json(load_json(opt.theta_path));
            nct::DomainReport rep =
                nct::sample_domain_report(theta, opt.max_word_len, opt.count, opt.seed);
            return finish(nct::to_json(rep), "ok", start);
        }
        throw nct::InputError("no subcommand");
    } catch (const nct::ViolationError& e) {
        return finish(Json{{"error", e.what()}}, "violation", start);
    } catch (const nct::DomainError& e) {
        return finish(Json{{"error", e.what()}}, "domain-error", start);
    } catch (const nct::InputError& e) {
        return finish(Json{{"error", e.what()}}, "input-error", start);
    } catch (const Json::exception& e) {
        return finish(Json{{"error", e.what()}}, "input-error", start);
    } catch (const std::exception& e) {
        return finish(Json{{"error", e.what()}}, "violation", start);
    }
}
