#include "sl2a/cert_json.hpp"
#include "sl2a/search.hpp"
#include "sl2a/text.hpp"
#include "sl2a/witness.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace sl2a;

long long env_ll(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoll(v);
    } catch (...) {
        return fallback;
    }
}

void apply_env(SearchBudget& b) {
    b.enum_ceiling = env_ll("SL2A_SEARCH_CEILING", b.enum_ceiling);
    b.layer_cap = env_ll("SL2A_LAYER_CAP", b.layer_cap);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

void print_verify_report(const VerifyReport& rep) {
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name
                  << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    std::cout << "claim tier: " << claim_tier_name(rep.tier) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact SL2 computations over finitely generated domains: valuations, "
                 "the Bruhat-Tits tree, amalgam normal forms, non-elementary witnesses"};
    app.require_subcommand(1);
    unsigned long long seed = 0;
    app.add_option("--seed", seed, "seed for sampling helpers");

    std::string ring_s, pi_s, expr_s, matrix_s, base_s, f_s, p_s, x_s, y_s, bprime_s;
    std::string from_s, to_s, vertex_s, out_path, dot_path, cert_path, target_s;
    bool json_out = false, assume_prime = false, assert_prime = false, rerun = false;
    int depth = 4, degree = 8, radius = 1, samples = 0;
    long long height = 16;
    int search_depth = 4, search_degree = 8;
    long long search_height = 16;

    auto* val_cmd = app.add_subcommand("val", "pi-adic valuation of an expression");
    val_cmd->add_option("--ring", ring_s)->required();
    val_cmd->add_option("--pi", pi_s)->required();
    val_cmd->add_option("--expr", expr_s)->required();
    val_cmd->add_flag("--assume-prime", assume_prime, "skip the primality check on pi");
    val_cmd->add_flag("--json", json_out);

    auto* cls_cmd = app.add_subcommand("classify", "amalgam side of a matrix");
    cls_cmd->add_option("--ring", ring_s)->required();
    cls_cmd->add_option("--pi", pi_s)->required();
    cls_cmd->add_option("--matrix", matrix_s)->required();
    cls_cmd->add_flag("--json", json_out);

    auto* red_cmd = app.add_subcommand("reduce", "amalgam normal form of a matrix");
    red_cmd->add_option("--ring", ring_s)->required();
    red_cmd->add_option("--pi", pi_s)->required();
    red_cmd->add_option("--matrix", matrix_s)->required();
    red_cmd->add_flag("--json", json_out);

    auto* tree_cmd = app.add_subcommand("tree", "Bruhat-Tits tree queries");
    tree_cmd->require_subcommand(1);
    auto* path_cmd = tree_cmd->add_subcommand("path", "geodesic between two vertices");
    path_cmd->add_option("--ring", ring_s)->required();
    path_cmd->add_option("--pi", pi_s)->required();
    path_cmd->add_option("--from", from_s)->required();
    path_cmd->add_option("--to", to_s)->required();
    path_cmd->add_flag("--json", json_out);
    auto* nb_cmd = tree_cmd->add_subcommand("neighbors", "neighborhood of a vertex");
    nb_cmd->add_option("--ring", ring_s)->required();
    nb_cmd->add_option("--pi", pi_s)->required();
    nb_cmd->add_option("--vertex", vertex_s)->required();
    nb_cmd->add_option("--radius", radius)->check(CLI::Range(1, 4));
    nb_cmd->add_option("--samples", samples, "extra samples when the residue ring is infinite");
    nb_cmd->add_option("--dot", dot_path, "write a DOT graph of the neighborhood");
    nb_cmd->add_flag("--json", json_out);

    auto* wit_cmd = app.add_subcommand("witness", "generate witness certificates");
    wit_cmd->require_subcommand(1);
    auto add_search_opts = [&](CLI::App* c) {
        c->add_option("--search-depth", search_depth, "0 skips the corroborating search");
        c->add_option("--search-height", search_height);
        c->add_option("--search-degree", search_degree);
        c->add_option("--out", out_path, "write the certificate JSON here");
    };
    auto* main_cmd = wit_cmd->add_subcommand("mainstep", "polynomial-ring witness");
    main_cmd->add_option("--base", base_s)->required();
    main_cmd->add_option("--f", f_s)->required();
    main_cmd->add_option("--p", p_s)->required();
    main_cmd->add_flag("--assert-prime", assert_prime);
    add_search_opts(main_cmd);
    auto* lau_cmd = wit_cmd->add_subcommand("laurent", "Laurent-ring witness");
    lau_cmd->add_option("--base", base_s)->required();
    lau_cmd->add_option("--x", x_s)->required();
    lau_cmd->add_option("--y", y_s)->required();
    add_search_opts(lau_cmd);
    auto* more_cmd = wit_cmd->add_subcommand("more", "witness from a congruent b'");
    more_cmd->add_option("--base", base_s)->required();
    more_cmd->add_option("--f", f_s)->required();
    more_cmd->add_option("--p", p_s)->required();
    more_cmd->add_option("--bprime", bprime_s)->required();
    more_cmd->add_flag("--assert-prime", assert_prime);
    add_search_opts(more_cmd);

    auto* se2_cmd = app.add_subcommand("search-e2", "bounded search over elementary words");
    se2_cmd->add_option("--ring", ring_s)->required();
    se2_cmd->add_option("--target", target_s)->required();
    se2_cmd->add_option("--depth", depth);
    se2_cmd->add_option("--height", height);
    se2_cmd->add_option("--degree", degree);
    se2_cmd->add_flag("--json", json_out);

    auto* sh0_cmd = app.add_subcommand("search-h0", "bounded search over A/B letters");
    sh0_cmd->add_option("--ring", ring_s)->required();
    sh0_cmd->add_option("--pi", pi_s)->required();
    sh0_cmd->add_option("--target", target_s)->required();
    sh0_cmd->add_option("--depth", depth);
    sh0_cmd->add_option("--height", height);
    sh0_cmd->add_option("--degree", degree);
    sh0_cmd->add_flag("--json", json_out);

    auto* ver_cmd = app.add_subcommand("verify", "re-check a certificate");
    ver_cmd->add_option("certificate", cert_path)->required();
    ver_cmd->add_flag("--rerun-search", rerun);

    auto* gens_cmd = app.add_subcommand("gens", "finite generating set of E2(S')");
    gens_cmd->add_option("--ring", ring_s)->required();
    gens_cmd->add_flag("--json", json_out);

    CLI11_PARSE(app, argc, argv);

    if (val_cmd->parsed()) {
        Rs rs = parse_ring_spec(ring_s);
        Valuation v = make_valuation(rs, parse_elem(pi_s, rs), assume_prime);
        ValExt x = valuation(parse_elem(expr_s, rs), v);
        std::string shown = x ? std::to_string(*x) : "+inf";
        if (json_out)
            std::cout << "{\"valuation\": \"" << shown << "\"}\n";
        else
            std::cout << shown << "\n";
        return 0;
    }
    if (cls_cmd->parsed()) {
        Rs rs = parse_ring_spec(ring_s);
        Valuation v = make_valuation(rs, parse_elem(pi_s, rs));
        SidePattern sp = classify_side(parse_matrix(matrix_s, rs), v);
        auto show = [](const ValExt& x) { return x ? std::to_string(*x) : "+inf"; };
        if (json_out)
            std::cout << "{\"class\": \"" << format_side(sp.cls) << "\", \"valuations\": [\""
                      << show(sp.v11) << "\", \"" << show(sp.v12) << "\", \"" << show(sp.v21)
                      << "\", \"" << show(sp.v22) << "\"]}\n";
        else
            std::cout << format_side(sp.cls) << "\n";
        return 0;
    }
    if (red_cmd->parsed()) {
        Rs rs = parse_ring_spec(ring_s);
        AmalgamContext ctx = make_amalgam_context(rs, parse_elem(pi_s, rs));
        Mat2 h = parse_matrix(matrix_s, rs);
        AmalgamWord w = amalgam_reduce(h, ctx);
        if (json_out)
            std::cout << amalgam_word_json(w);
        else
            std::cout << format_word(w) << "factors: " << w.factors.size()
                      << ", normal form: " << (is_normal_form(w, ctx) ? "yes" : "no")
                      << ", product verified: " << (word_product(w, h.rs()) == h ? "yes" : "no")
                      << "\n";
        return 0;
    }
    if (path_cmd->parsed()) {
        Rs rs = parse_ring_spec(ring_s);
        Valuation v = make_valuation(rs, parse_elem(pi_s, rs));
        auto path = geodesic(parse_vertex(from_s, rs), parse_vertex(to_s, rs), v);
        if (json_out) {
            std::cout << "{\"vertices\": [";
            for (size_t i = 0; i < path.size(); ++i)
                std::cout << (i ? ", " : "") << "\"" << format_vertex(path[i]) << "\"";
            std::cout << "], \"length\": " << path.size() - 1 << "}\n";
        } else {
            for (const auto& w : path) std::cout << format_vertex(w) << "\n";
            std::cout << "length: " << path.size() - 1 << "\n";
        }
        return 0;
    }
    if (nb_cmd->parsed()) {
        Rs rs = parse_ring_spec(ring_s);
        Valuation v = make_valuation(rs, parse_elem(pi_s, rs));
        TreeVertex w = parse_vertex(vertex_s, rs);
        if (!dot_path.empty()) {
            write_file(dot_path, dot_neighborhood(w, radius, v));
            std::cout << "wrote " << dot_path << "\n";
            return 0;
        }
        NeighborList nb = neighbors(w, v, samples);
        if (json_out) {
            std::cout << "{\"complete\": " << (nb.complete ? "true" : "false")
                      << ", \"neighbors\": [";
            for (size_t i = 0; i < nb.list.size(); ++i)
                std::cout << (i ? ", " : "") << "\"" << format_vertex(nb.list[i]) << "\"";
            std::cout << "]}\n";
        } else {
            for (const auto& x : nb.list) std::cout << format_vertex(x) << "\n";
            if (!nb.complete) std::cout << "(partial: residue ring is infinite)\n";
        }
        return 0;
    }
    if (wit_cmd->parsed()) {
        WitnessOptions opts;
        opts.assert_prime = assert_prime;
        opts.search_depth = search_depth;
        opts.search_height = search_height;
        opts.search_degree = search_degree;
        Rs base = parse_ring_spec(base_s);
        WitnessCertificate cert;
        if (main_cmd->parsed()) {
            Rs amb = mainstep_ambient(base);
            cert = mainstep_witness(base, parse_elem(f_s, amb), parse_elem(p_s, amb), opts);
        } else if (lau_cmd->parsed()) {
            cert = laurent_witness(base, parse_elem(x_s, base), parse_elem(y_s, base), opts);
        } else {
            Rs amb = mainstep_ambient(base);
            cert = more_examples_witness(base, parse_elem(f_s, amb), parse_elem(p_s, amb),
                                         parse_matrix(bprime_s, amb), opts);
        }
        std::string text = emit_certificate(cert);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            write_file(out_path, text);
            std::cout << "h = " << format_matrix(cert.h) << "\n"
                      << "claim tier: " << claim_tier_name(cert.tier) << "\n"
                      << "wrote " << out_path << "\n";
        }
        return 0;
    }
    if (se2_cmd->parsed() || sh0_cmd->parsed()) {
        Rs rs = parse_ring_spec(ring_s);
        SearchBudget b;
        SearchResult r;
        if (se2_cmd->parsed()) {
            b = default_e2_budget(rs, depth, height, degree);
            apply_env(b);
            r = bounded_e2_search(parse_matrix(target_s, rs), rs, b);
        } else {
            AmalgamContext ctx = make_amalgam_context(rs, parse_elem(pi_s, rs));
            b = default_h0_budget(ctx, depth, height, degree);
            apply_env(b);
            r = bounded_h0_search(parse_matrix(target_s, rs), ctx, b);
        }
        if (json_out) {
            std::cout << search_stats_json(r.stats);
        } else {
            std::cout << r.stats.verdict << " (depth " << r.stats.depth << ", "
                      << r.stats.words_enumerated.str() << " products formed)\n";
            if (r.found)
                std::cout << "word of " << r.word.size() << " tokens evaluating to the target\n";
            else if (sh0_cmd->parsed())
                std::cout << "covers the equal-depth e2 menu: "
                          << (r.stats.h0_covers_e2 ? "yes" : "no") << "\n";
        }
        return 0;
    }
    if (ver_cmd->parsed()) {
        WitnessCertificate cert = load_certificate(read_file(cert_path));
        VerifyReport rep = verify_certificate(cert, rerun);
        print_verify_report(rep);
        return rep.ok ? 0 : 1;
    }
    if (gens_cmd->parsed()) {
        Rs rs = parse_ring_spec(ring_s);
        auto gens = e2_generating_set(rs);
        if (json_out) {
            std::cout << "{\"count\": " << gens.size() << "}\n";
        } else {
            for (const auto& g : gens) std::cout << format_matrix(g) << "\n";
            std::cout << "count: " << gens.size() << "\n";
        }
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sl2a::SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const sl2a::UnknownVariable& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const sl2a::UnsupportedBase& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const sl2a::ZeroInverted& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const sl2a::SchemaError& e) {
        std::cerr << "certificate error: " << e.what() << "\n";
        return 2;
    } catch (const sl2a::Error& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
