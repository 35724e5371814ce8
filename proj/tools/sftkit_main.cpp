// sftkit command line: batch front end for the subshift toolkit.
// Results go to stdout, progress and diagnostics to stderr. Exit codes:
// 0 proven/ok, 1 refuted, 2 unknown, 64 usage or input errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sftkit/codes.hpp"
#include "sftkit/compiled.hpp"
#include "sftkit/constructions.hpp"
#include "sftkit/entropy.hpp"
#include "sftkit/io.hpp"
#include "sftkit/pool.hpp"
#include "sftkit/verify.hpp"

using namespace sftkit;

namespace {

constexpr int kExitProven = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInput = 64;

int exit_for(core::Status s) {
    switch (s) {
        case core::Status::proven: return kExitProven;
        case core::Status::refuted: return kExitRefuted;
        case core::Status::unknown: return kExitUnknown;
    }
    return kExitInput;
}

core::SftSpec load_spec(const std::string& path) {
    auto doc = io::parse_sft_file(path);
    if (doc.sft) return *doc.sft;
    if (doc.wang) return core::wang_to_sft(*doc.wang);
    throw InputError("no spec in " + path);
}

core::WangTileset load_wang(const std::string& path) {
    auto doc = io::parse_sft_file(path);
    if (!doc.wang) throw InputError("no wang section in " + path);
    return *doc.wang;
}

tm::TuringMachine load_tm(const std::string& path) { return io::parse_tm_file(path); }

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write " + out_path);
    out << text;
}

// --golden support: compare the produced text against a frozen file
int finish_build(const std::string& text, const std::string& out_path, const std::string& golden) {
    if (!golden.empty()) {
        std::ifstream in(golden);
        if (!in) throw InputError("cannot open golden file " + golden);
        std::stringstream buf;
        buf << in.rdbuf();
        if (buf.str() != text) {
            std::cout << "golden: mismatch\n";
            return kExitRefuted;
        }
        std::cout << "golden: match\n";
        return kExitProven;
    }
    emit(out_path, text);
    return kExitProven;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string palette_char(SymbolId v) {
    static const std::string chars =
        "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ#@%&+=.";
    return std::string(1, chars[static_cast<size_t>(v) % chars.size()]);
}

std::string svg_color(SymbolId v, int nsyms) {
    int hue = nsyms > 0 ? (static_cast<int>(v) * 360) / nsyms : 0;
    return "hsl(" + std::to_string(hue) + ",65%,60%)";
}

std::string render_cells_ascii(const Box& box, const std::function<SymbolId(const Coord&)>& at,
                               const core::Alphabet& alphabet) {
    std::ostringstream out;
    if (box.dim() == 1) {
        for (int x = box.lo()[0]; x <= box.hi()[0]; ++x) out << palette_char(at({x}));
        out << "\n";
    } else if (box.dim() == 2) {
        for (int y = box.hi()[1]; y >= box.lo()[1]; --y) {
            for (int x = box.lo()[0]; x <= box.hi()[0]; ++x) out << palette_char(at({x, y}));
            out << "\n";
        }
    } else {
        throw InputError("render supports dimensions 1 and 2");
    }
    out << "legend:\n";
    for (SymbolId v = 0; v < alphabet.size(); ++v)
        out << palette_char(v) << " = " << alphabet.name(v) << "\n";
    return out.str();
}

std::string render_cells_svg(const Box& box, const std::function<SymbolId(const Coord&)>& at,
                             int nsyms) {
    if (box.dim() != 2 && box.dim() != 1) throw InputError("render supports dimensions 1 and 2");
    int w = box.extent(0);
    int h = box.dim() == 2 ? box.extent(1) : 1;
    const int cell = 16;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * cell << "\" height=\""
        << h * cell << "\">\n";
    for (int x = box.lo()[0]; x <= box.hi()[0]; ++x) {
        int ylo = box.dim() == 2 ? box.lo()[1] : 0;
        int yhi = box.dim() == 2 ? box.hi()[1] : 0;
        for (int y = ylo; y <= yhi; ++y) {
            SymbolId v = box.dim() == 2 ? at({x, y}) : at({x});
            out << "<rect x=\"" << (x - box.lo()[0]) * cell << "\" y=\"" << (yhi - y) * cell
                << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
                << svg_color(v, nsyms) << "\" stroke=\"black\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

struct DeepenOpts {
    bool enabled = false;
    double seconds = 10.0;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subshift of finite type toolkit"};
    app.set_version_flag("--version", std::string("sftkit formats: ") + io::kSftFormatVersion + ", " +
                                          io::kCodeFormatVersion + ", " + io::kTmFormatVersion);
    int threads = 0;
    app.add_option("--threads", threads, "worker count (default: SFTKIT_THREADS or 1)");
    app.require_subcommand(1);

    std::string spec_path, source_path, target_path, code_path, f_path, g_path, pattern_str,
        out_path, golden_path, machine_path, left_path, right_path, svg_path, symbol, alphabet_csv;
    int radius = 0, n_max = 0, period_budget = 1, k_param = 0, max_radius = 0, max_k = 0,
        block_n = 0, ext_radius = 0, dim = 2, symbols = 2, dim_target = 3, max_height = 8;
    std::string n_list = "1,2,3";
    uint64_t limit = 0;
    bool count_only = false, full_report = false;
    DeepenOpts deepen;

    // --- admissible ---
    auto* c_adm = app.add_subcommand("admissible", "is a pattern admissible for a spec");
    c_adm->add_option("--spec", spec_path)->required();
    c_adm->add_option("--pattern", pattern_str, "pattern cells, e.g. '@(0,0)=a;'")->required();

    // --- blocks ---
    auto* c_blocks = app.add_subcommand("blocks", "enumerate admissible B_n blocks");
    c_blocks->add_option("--spec", spec_path)->required();
    c_blocks->add_option("--radius", radius)->required();
    c_blocks->add_option("--limit", limit, "stop after this many blocks");
    c_blocks->add_flag("--count-only", count_only);

    // --- empty / nonempty / extend ---
    auto* c_empty = app.add_subcommand("empty", "try to prove the spec empty");
    c_empty->add_option("--spec", spec_path)->required();
    c_empty->add_option("--n-max", n_max)->required();
    c_empty->add_flag("--deepen", deepen.enabled);
    c_empty->add_option("--deepen-seconds", deepen.seconds);

    auto* c_nonempty = app.add_subcommand("nonempty", "try to prove the spec nonempty");
    c_nonempty->add_option("--spec", spec_path)->required();
    c_nonempty->add_option("--period-budget", period_budget)->required();
    c_nonempty->add_flag("--deepen", deepen.enabled);
    c_nonempty->add_option("--deepen-seconds", deepen.seconds);

    auto* c_extend = app.add_subcommand("extend", "bounded extensibility check");
    c_extend->add_option("--spec", spec_path)->required();
    c_extend->add_option("--pattern", pattern_str)->required();
    c_extend->add_option("--radius", radius)->required();
    c_extend->add_option("--period-budget", period_budget)->required();
    c_extend->add_flag("--deepen", deepen.enabled);
    c_extend->add_option("--deepen-seconds", deepen.seconds);

    // --- entropy ---
    auto* c_entropy = app.add_subcommand("entropy", "admissible-count entropy bounds, CSV");
    c_entropy->add_option("--spec", spec_path)->required();
    c_entropy->add_option("--n", n_list, "comma-separated side lengths");

    // --- verifiers ---
    auto* c_vconj = app.add_subcommand("verify-conj", "verify a conjugacy certificate");
    c_vconj->add_option("--source", source_path)->required();
    c_vconj->add_option("--target", target_path)->required();
    c_vconj->add_option("--f", f_path, "code file, source -> target")->required();
    c_vconj->add_option("--g", g_path, "code file, target -> source")->required();
    c_vconj->add_option("--k", k_param)->required();

    auto* c_sconj = app.add_subcommand("search-conj", "enumerate table-code certificates");
    c_sconj->add_option("--source", source_path)->required();
    c_sconj->add_option("--target", target_path)->required();
    c_sconj->add_option("--max-radius", max_radius)->required();
    c_sconj->add_option("--max-k", max_k)->required();
    c_sconj->add_flag("--deepen", deepen.enabled);
    c_sconj->add_option("--deepen-seconds", deepen.seconds);

    auto* c_incl = app.add_subcommand("verify-factor-incl", "bounded check of F(X) within Y");
    c_incl->add_option("--code", code_path)->required();
    c_incl->add_option("--source", source_path)->required();
    c_incl->add_option("--target", target_path)->required();
    c_incl->add_option("--radius", radius)->required();

    auto* c_surj = app.add_subcommand("verify-surj", "per-block surjectivity evidence");
    c_surj->add_option("--code", code_path)->required();
    c_surj->add_option("--source", source_path)->required();
    c_surj->add_option("--target", target_path)->required();
    c_surj->add_option("--n", block_n)->required();
    c_surj->add_option("--extension-radius", ext_radius)->required();
    c_surj->add_option("--period-budget", period_budget)->required();
    c_surj->add_flag("--full-report", full_report);

    // --- build ---
    auto* c_build = app.add_subcommand("build", "emit constructed specs and tilesets");
    c_build->require_subcommand(1);
    auto add_build_common = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "output file (default stdout)");
        sub->add_option("--golden", golden_path, "compare against a frozen file instead of writing");
    };
    auto* b_full = c_build->add_subcommand("full", "full shift");
    b_full->add_option("--symbols", symbols);
    b_full->add_option("--dim", dim);
    add_build_common(b_full);
    auto* b_empty = c_build->add_subcommand("empty", "canonical empty spec");
    b_empty->add_option("--alphabet", alphabet_csv, "comma-separated symbols")->required();
    b_empty->add_option("--dim", dim);
    add_build_common(b_empty);
    auto* b_single = c_build->add_subcommand("singleton", "one-configuration spec");
    b_single->add_option("--symbol", symbol)->required();
    b_single->add_option("--dim", dim);
    add_build_common(b_single);
    auto* b_prod = c_build->add_subcommand("product", "product of two specs");
    b_prod->add_option("--left", left_path)->required();
    b_prod->add_option("--right", right_path)->required();
    add_build_common(b_prod);
    auto* b_union = c_build->add_subcommand("union", "disjoint union of two specs");
    b_union->add_option("--left", left_path)->required();
    b_union->add_option("--right", right_path)->required();
    add_build_common(b_union);
    auto* b_lift = c_build->add_subcommand("lift", "lift to a higher dimension");
    b_lift->add_option("--spec", spec_path)->required();
    b_lift->add_option("--dim-target", dim_target)->required();
    add_build_common(b_lift);
    auto* b_rob = c_build->add_subcommand("robinson", "the aperiodic tileset");
    add_build_common(b_rob);
    auto* b_strip = c_build->add_subcommand("tm-strip", "computation strip tiles for a machine");
    b_strip->add_option("--machine", machine_path)->required();
    b_strip->add_option("--max-height", max_height, "also probe the strip height up to this bound");
    add_build_common(b_strip);
    auto* b_hard = c_build->add_subcommand("hardness", "conjugacy hardness instance");
    b_hard->add_option("--spec", spec_path)->required();
    b_hard->add_option("--machine", machine_path)->required();
    add_build_common(b_hard);

    // --- render ---
    auto* c_render = app.add_subcommand("render", "draw a pattern as ASCII or SVG");
    c_render->add_option("--spec", spec_path, "spec supplying the alphabet")->required();
    c_render->add_option("--pattern", pattern_str)->required();
    c_render->add_option("--svg", svg_path, "write SVG here instead of ASCII to stdout");

    // --- convert ---
    auto* c_conv = app.add_subcommand("convert", "move between wang and sft forms");
    c_conv->require_subcommand(1);
    auto* v_w2s = c_conv->add_subcommand("wang2sft", "tileset to adjacency spec");
    v_w2s->add_option("--in", spec_path)->required();
    v_w2s->add_option("--out", out_path);
    auto* v_s2w = c_conv->add_subcommand("sft2wang", "spec to tileset with certificate codes");
    v_s2w->add_option("--in", spec_path)->required();
    v_s2w->add_option("--out", out_path);
    std::string codes_prefix;
    v_s2w->add_option("--codes-out", codes_prefix, "write <prefix>.f and <prefix>.g code files");

    // let global flags like --threads appear after the subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; })) {
            s->fallthrough();
            enable_fallthrough(s);
        }
    };
    enable_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);
    int nthreads = resolve_thread_count(threads);

    try {
        if (*c_adm) {
            auto spec = load_spec(spec_path);
            bool ok = core::is_admissible(io::parse_pattern_line(pattern_str), spec);
            std::cout << "admissible: " << (ok ? "true" : "false") << "\n";
            return ok ? kExitProven : kExitRefuted;
        }

        if (*c_blocks) {
            auto spec = load_spec(spec_path);
            Box box = Box::cube(spec.dim(), radius);
            uint64_t count = 0;
            core::enumerate_admissible_blocks(spec, radius, [&](const std::vector<SymbolId>& b) {
                ++count;
                if (!count_only)
                    std::cout << io::pattern_line(core::Pattern::from_block(box, b, spec.alphabet()))
                              << "\n";
                else if (count % 10000000 == 0)
                    std::cerr << "progress: " << count << " blocks\n";
                return limit == 0 || count < limit;
            });
            std::cout << "count: " << count << ((limit && count >= limit) ? "+" : "") << "\n";
            return kExitProven;
        }

        if (*c_empty) {
            auto spec = load_spec(spec_path);
            auto t0 = std::chrono::steady_clock::now();
            int budget = n_max;
            for (;;) {
                auto v = verify::prove_empty(spec, budget);
                if (v.status == core::Status::proven) {
                    std::cout << "verdict: proven\nn: " << v.radius << "\n";
                    return kExitProven;
                }
                if (!deepen.enabled || seconds_since(t0) > deepen.seconds) {
                    std::cout << "verdict: unknown\nn-max: " << budget << "\n";
                    return kExitUnknown;
                }
                ++budget;
                std::cerr << "deepening to n-max " << budget << "\n";
            }
        }

        if (*c_nonempty) {
            auto spec = load_spec(spec_path);
            auto t0 = std::chrono::steady_clock::now();
            int budget = period_budget;
            for (;;) {
                auto v = verify::prove_nonempty(spec, budget);
                if (v.status == core::Status::proven) {
                    std::cout << "verdict: proven\nwitness: "
                              << io::torus_line(*v.witness, spec.alphabet()) << "\n";
                    return kExitProven;
                }
                if (!deepen.enabled || seconds_since(t0) > deepen.seconds) {
                    std::cout << "verdict: unknown\nperiod-budget: " << budget << "\n";
                    return kExitUnknown;
                }
                ++budget;
                std::cerr << "deepening to period budget " << budget << "\n";
            }
        }

        if (*c_extend) {
            auto spec = load_spec(spec_path);
            auto p = io::parse_pattern_line(pattern_str);
            auto t0 = std::chrono::steady_clock::now();
            int r = radius, pb = period_budget;
            for (;;) {
                auto v = core::check_extensibility(p, spec, r, pb);
                if (v.status == core::Status::proven) {
                    std::cout << "verdict: proven\nwitness: "
                              << io::torus_line(*v.witness, spec.alphabet()) << "\n";
                    return kExitProven;
                }
                if (v.status == core::Status::refuted) {
                    std::cout << "verdict: refuted\n";
                    if (v.refuted_radius < 0)
                        std::cout << "note: pattern is itself inadmissible\n";
                    else
                        std::cout << "n: " << v.refuted_radius << "\n";
                    return kExitRefuted;
                }
                if (!deepen.enabled || seconds_since(t0) > deepen.seconds) {
                    std::cout << "verdict: unknown\nradius: " << r << "\nperiod-budget: " << pb << "\n";
                    return kExitUnknown;
                }
                ++r;
                ++pb;
                std::cerr << "deepening to radius " << r << ", period budget " << pb << "\n";
            }
        }

        if (*c_entropy) {
            auto spec = load_spec(spec_path);
            std::vector<int> ns;
            std::stringstream ss(n_list);
            std::string tok;
            while (std::getline(ss, tok, ',')) ns.push_back(std::stoi(tok));
            std::vector<entropy::EntropyEstimate> rows(ns.size());
            parallel_for(nthreads, ns.size(),
                         [&](size_t i) { rows[i] = entropy::entropy_upper_bound(spec, ns[i]); });
            std::cout << "n,count,value\n";
            for (const auto& e : rows) {
                std::cout << e.side << "," << e.count.to_string() << ",";
                if (e.value) {
                    std::ostringstream val;
                    val.precision(12);
                    val << *e.value;
                    std::string s = val.str();
                    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos)
                        s += ".0";
                    std::cout << s;
                } else {
                    std::cout << "empty";
                }
                std::cout << "\n";
            }
            return kExitProven;
        }

        if (*c_vconj) {
            auto X = load_spec(source_path);
            auto Y = load_spec(target_path);
            verify::ConjugacyCertificate cert{io::parse_code_file(f_path), io::parse_code_file(g_path),
                                              k_param};
            auto v = verify::verify_conjugacy_certificate(X, Y, cert, nthreads);
            std::cout << "verdict: " << core::status_name(v.status) << "\nk: " << v.k << "\n";
            if (v.counterexample) {
                std::cout << "witness-side: " << (v.counterexample_in_target ? "target" : "source")
                          << "\n";
                std::cout << "witness: " << io::pattern_line(*v.counterexample) << "\n";
            }
            return exit_for(v.status);
        }

        if (*c_sconj) {
            auto X = load_spec(source_path);
            auto Y = load_spec(target_path);
            auto t0 = std::chrono::steady_clock::now();
            int mr = max_radius, mk = max_k;
            for (;;) {
                auto v = verify::search_conjugacy(X, Y, mr, mk);
                if (v.status == core::Status::proven) {
                    std::cout << "verdict: proven\nradius-f: " << v.certificate->F.radius()
                              << "\nradius-g: " << v.certificate->G.radius()
                              << "\nk: " << v.certificate->k << "\n";
                    return kExitProven;
                }
                if (!deepen.enabled || seconds_since(t0) > deepen.seconds) {
                    std::cout << "verdict: unknown\nmax-radius: " << mr << "\nmax-k: " << mk << "\n";
                    return kExitUnknown;
                }
                ++mk;
                std::cerr << "deepening to max-k " << mk << "\n";
            }
        }

        if (*c_incl) {
            auto X = load_spec(source_path);
            auto Y = load_spec(target_path);
            auto F = io::parse_code_file(code_path);
            auto v = verify::check_factor_inclusion(F, X, Y, radius);
            std::cout << "verdict: " << core::status_name(v.status) << "\nradius: " << v.r << "\n";
            if (v.block) {
                std::cout << "witness: " << io::pattern_line(*v.block) << "\n";
                std::cout << "note: the block may be non-extensible; retry at a larger radius or run "
                             "extend on it\n";
            }
            return exit_for(v.status);
        }

        if (*c_surj) {
            auto X = load_spec(source_path);
            auto Y = load_spec(target_path);
            auto F = io::parse_code_file(code_path);
            auto rep = verify::check_surjectivity(F, X, Y, block_n, ext_radius, period_budget);
            std::cout << "verdict: " << core::status_name(rep.status) << "\n";
            if (rep.status == core::Status::proven)
                std::cout << "note: evidence at (n, R) = (" << rep.n << ", " << rep.extension_radius
                          << "), not a proof\n";
            int counts[4] = {0, 0, 0, 0};
            for (const auto& br : rep.blocks) ++counts[static_cast<int>(br.cls)];
            std::cout << "satisfied-by-preimage: " << counts[0] << "\n";
            std::cout << "satisfied-by-nonextensibility: " << counts[1] << "\n";
            std::cout << "refuted-blocks: " << counts[2] << "\n";
            std::cout << "undetermined: " << counts[3] << "\n";
            for (const auto& br : rep.blocks) {
                if (br.cls == verify::SurjectivityBlockClass::refuted)
                    std::cout << "refuted-block: " << io::pattern_line(br.block)
                              << " witness: " << io::torus_line(*br.witness, Y.alphabet()) << "\n";
                else if (full_report && br.cls == verify::SurjectivityBlockClass::undetermined)
                    std::cout << "undetermined-block: " << io::pattern_line(br.block) << "\n";
            }
            return exit_for(rep.status);
        }

        if (*c_build) {
            if (*b_full)
                return finish_build(io::write_sft(cons::full_shift(symbols, dim)), out_path, golden_path);
            if (*b_empty) {
                std::vector<std::string> names;
                std::stringstream ss(alphabet_csv);
                std::string tok;
                while (std::getline(ss, tok, ',')) names.push_back(tok);
                return finish_build(io::write_sft(cons::empty_sft(core::Alphabet(names), dim)), out_path,
                                    golden_path);
            }
            if (*b_single)
                return finish_build(io::write_sft(cons::singleton_sft(symbol, dim)), out_path,
                                    golden_path);
            if (*b_prod)
                return finish_build(
                    io::write_sft(cons::product(load_spec(left_path), load_spec(right_path))), out_path,
                    golden_path);
            if (*b_union)
                return finish_build(
                    io::write_sft(cons::disjoint_union(load_spec(left_path), load_spec(right_path))),
                    out_path, golden_path);
            if (*b_lift)
                return finish_build(io::write_sft(cons::lift_dimension(load_spec(spec_path), dim_target)),
                                    out_path, golden_path);
            if (*b_rob) return finish_build(io::write_wang(cons::robinson_tileset()), out_path, golden_path);
            if (*b_strip) {
                auto strip = cons::tm_strip_tileset(load_tm(machine_path));
                std::string text = io::write_wang(strip.tiles);
                int rc = finish_build(text, out_path, golden_path);
                std::cout << "start-color: " << strip.start_color << "\n";
                if (strip.seed_index)
                    std::cout << "seed-tile: " << *strip.seed_index << "\n";
                else
                    std::cout << "seed-tile: none\n";
                if (max_height > 0)
                    std::cout << "max-strip-height(<=" << max_height
                              << "): " << cons::max_seed_strip_height(strip, max_height) << "\n";
                return rc;
            }
            if (*b_hard)
                return finish_build(io::write_sft(cons::conj_hardness_instance(load_spec(spec_path),
                                                                               load_tm(machine_path))),
                                    out_path, golden_path);
        }

        if (*c_render) {
            auto spec = load_spec(spec_path);
            auto p = io::parse_pattern_line(pattern_str);
            auto bb = p.bounding_box();
            if (!bb) throw InputError("nothing to render");
            auto at = [&](const Coord& c) -> SymbolId {
                const std::string* s = p.at(c);
                if (!s) throw InputError("pattern support must fill its bounding box for rendering");
                return spec.alphabet().require(*s);
            };
            if (!svg_path.empty()) {
                std::ofstream out(svg_path);
                if (!out) throw InputError("cannot write " + svg_path);
                out << render_cells_svg(*bb, at, spec.alphabet().size());
                std::cout << "svg: " << svg_path << "\n";
            } else {
                std::cout << render_cells_ascii(*bb, at, spec.alphabet());
            }
            return kExitProven;
        }

        if (*c_conv) {
            if (*v_w2s)
                return finish_build(io::write_sft(core::wang_to_sft(load_wang(spec_path))), out_path, "");
            if (*v_s2w) {
                auto conv = codes::sft_to_wang(load_spec(spec_path));
                int rc = finish_build(io::write_wang(conv.tileset), out_path, "");
                if (!codes_prefix.empty()) {
                    emit(codes_prefix + ".f", io::write_code(conv.encode));
                    emit(codes_prefix + ".g", io::write_code(conv.decode));
                    std::cout << "codes: " << codes_prefix << ".f " << codes_prefix << ".g\n";
                }
                return rc;
            }
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const codes::RuleDomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
