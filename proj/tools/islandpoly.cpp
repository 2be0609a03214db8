// islandpoly: island boundary polynomials for embedded multigraphs.
//
// Exit codes: 0 success, 1 failed check (nonzero residual or mismatch),
// 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "islands/analysis.hpp"
#include "islands/closed_forms.hpp"
#include "islands/engine.hpp"
#include "islands/smap.hpp"

using json = nlohmann::ordered_json;
using namespace islands;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
    bool json_output = false;
    bool force = false;
    int threads = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json mpz_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
    return z.get_str();
}

json poly_to_json(const IntPoly& p) {
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(mpz_to_json(p.coeff(i)));
    return arr;
}

std::string rational_str(const mpq_class& q) {
    mpq_class r = q;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BuiltDocument load_document(const std::string& path, const Options& opt) {
    BuiltDocument doc = build_document(parse_smap(read_file(path)));
    if (doc.graph.marked_count() > kDefaultEnumerationLimit && !opt.force)
        throw Error("graph has " + std::to_string(doc.graph.marked_count()) +
                    " marked vertices; enumeration over 2^n subsets is expensive, pass --force to proceed");
    return doc;
}

struct AnalysisRecord {
    std::vector<unsigned long long> counts;
    IntPoly bar, total;
    int faces = 0, genus = 0;

    json to_json() const {
        json out;
        out["counts"] = counts;
        out["beta_bar"] = poly_to_json(bar);
        out["beta_total"] = poly_to_json(total);
        out["beta_at_minus1"] = mpz_to_json(total.eval(-1));
        out["faces"] = faces;
        out["genus"] = genus;
        return out;
    }
};

AnalysisRecord analyze(const EmbeddedGraph& eg, const std::optional<Coloring>& col, bool colored,
                       const Options& opt) {
    AnalysisRecord rec;
    if (colored) {
        if (!col) throw Error("--colored requires color directives in the document");
        rec.counts = colored_counts(eg, *col).d;
        rec.total = beta_colored(eg, *col);
        int c = col->color_count;
        rec.bar = rec.total - IntPoly::monomial(rec.total.coeff(c - 1), c - 1);
    } else {
        CountVector cv = island_counts(eg, opt.threads);
        rec.counts = cv.d;
        BetaPolynomials bp = beta_polynomials(cv);
        rec.bar = bp.bar;
        rec.total = bp.total;
    }
    rec.faces = eg.marked_face_count();
    rec.genus = eg.genus();
    return rec;
}

IdentityKind parse_kind(const std::string& name) {
    if (name == "disjoint") return IdentityKind::Disjoint;
    if (name == "appendix") return IdentityKind::Appendix;
    if (name == "bridge") return IdentityKind::Bridge;
    if (name == "wedge") return IdentityKind::Wedge;
    if (name == "contract") return IdentityKind::Contract;
    if (name == "split") return IdentityKind::Split;
    if (name == "color-merge") return IdentityKind::ColorMerge;
    if (name == "colored-disjoint") return IdentityKind::ColoredDisjoint;
    if (name == "colored-appendix") return IdentityKind::ColoredAppendix;
    if (name == "colored-bridge") return IdentityKind::ColoredBridge;
    if (name == "pants") return IdentityKind::Pants;
    throw Error("unknown identity kind '" + name + "'");
}

int color_id_by_name(const Coloring& col, const std::string& name) {
    for (size_t i = 0; i < col.names.size(); ++i)
        if (col.names[i] == name) return static_cast<int>(i);
    throw Error("color '" + name + "' not present");
}

/// Check file: `identity <kind>` plus operand lines (graph/edge/attach/vertex/
/// endpoints/colors/pos); graph paths are relative to the check file.
int run_check(const std::string& path, const Options& opt) {
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    std::istringstream in(read_file(path));
    std::string line;
    int lineno = 0;

    std::optional<IdentityKind> kind;
    IdentityInstance inst{};
    std::vector<std::optional<Coloring>> colorings;
    std::vector<std::string> merge_names;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        auto fail = [&](const std::string& msg) { throw ParseError(lineno, 1, msg); };
        if (word == "identity") {
            std::string name;
            if (!(ls >> name)) fail("missing identity kind");
            kind = parse_kind(name);
        } else if (word == "graph") {
            std::string rel;
            if (!(ls >> rel)) fail("missing graph path");
            BuiltDocument doc = build_document(parse_smap(read_file((base / rel).string())));
            inst.graphs.push_back(doc.graph);
            colorings.push_back(doc.coloring);
        } else if (word == "edge") {
            if (!(ls >> inst.edge)) fail("missing edge id");
        } else if (word == "vertex") {
            if (!(ls >> inst.v1)) fail("missing vertex");
        } else if (word == "attach") {
            if (!(ls >> inst.v1 >> inst.v2)) fail("attach needs two vertices");
        } else if (word == "endpoints") {
            if (!(ls >> inst.v1 >> inst.v2 >> inst.v3 >> inst.v4)) fail("endpoints needs four vertices");
        } else if (word == "colors") {
            merge_names.resize(2);
            if (!(ls >> merge_names[0] >> merge_names[1])) fail("colors needs two names");
        } else if (word == "pos") {
            if (!(ls >> inst.ins.first >> inst.ins.second)) fail("pos needs two positions");
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    if (!kind) throw Error("check file has no 'identity' line");
    inst.kind = *kind;
    (void)opt;

    bool needs_colors = inst.kind == IdentityKind::ColorMerge ||
                        inst.kind == IdentityKind::ColoredDisjoint ||
                        inst.kind == IdentityKind::ColoredAppendix ||
                        inst.kind == IdentityKind::ColoredBridge;
    if (needs_colors) {
        for (size_t i = 0; i < inst.graphs.size(); ++i) {
            if (!colorings[i]) throw Error("operand graph " + std::to_string(i) + " has no coloring");
            inst.colorings.push_back(*colorings[i]);
        }
        if (inst.kind == IdentityKind::ColorMerge) {
            if (merge_names.size() != 2) throw Error("color-merge needs a 'colors <c> <c2>' line");
            inst.v1 = color_id_by_name(inst.colorings.at(0), merge_names[0]);
            inst.v2 = color_id_by_name(inst.colorings.at(0), merge_names[1]);
        }
        if (inst.kind == IdentityKind::ColoredDisjoint || inst.kind == IdentityKind::ColoredBridge) {
            for (const std::string& name : inst.colorings.at(0).names)
                for (const std::string& other : inst.colorings.at(1).names)
                    if (name == other)
                        throw Error("operands share the color '" + name +
                                    "'; the identity needs disjoint color sets");
        }
    }

    IntPoly residual = check_identity(inst);
    if (opt.json_output) {
        json rec;
        rec["residual"] = poly_to_json(residual);
        rec["residual_text"] = residual.str();
        rec["holds"] = residual.is_zero();
        std::cout << rec.dump(2) << "\n";
    } else {
        std::cout << "residual: " << residual.str() << "\n";
    }
    return residual.is_zero() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"island boundary polynomials for embedded multigraphs"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    Options opt;
    if (const char* env = std::getenv("ISLANDPOLY_THREADS")) opt.threads = std::max(1, std::atoi(env));
    app.add_flag("--json", opt.json_output, "emit machine-readable JSON");
    app.add_flag("--force", opt.force, "lift the enumeration size guard");
    app.add_option("--threads", opt.threads, "worker threads for subset enumeration");

    std::string file, script_file, out_file, mode = "all", omega = "1", kind_name;
    bool colored = false, allow_multigraph = false;
    int arg_n = 0, arg_m = 0;
    std::string bd = "B";

    CLI::App* faces = app.add_subcommand("faces", "faces and genus of the marked graph");
    faces->add_option("file", file)->required();

    CLI::App* beta_cmd = app.add_subcommand("beta", "island boundary polynomials");
    beta_cmd->add_option("file", file)->required();
    beta_cmd->add_flag("--colored", colored, "use the document's coloring");

    CLI::App* counts_cmd = app.add_subcommand("counts", "island boundary counts D_1..D_n");
    counts_cmd->add_option("file", file)->required();
    counts_cmd->add_flag("--colored", colored, "use the document's coloring");

    CLI::App* transform = app.add_subcommand("transform", "apply an operation script");
    transform->add_option("file", file)->required();
    transform->add_option("script", script_file)->required();
    transform->add_option("--out", out_file, "write the transformed document here instead of stdout");

    CLI::App* check = app.add_subcommand("check", "verify an identity instance");
    check->add_option("file", file)->required();

    CLI::App* detect_cmd = app.add_subcommand("detect", "classify the graph from its polynomial");
    detect_cmd->add_option("file", file)->required();

    CLI::App* euler = app.add_subcommand("euler", "alternating subgraph sum against chi - 2f");
    euler->add_option("file", file)->required();
    euler->add_flag("--allow-multigraph", allow_multigraph);

    CLI::App* closedform = app.add_subcommand("closedform", "closed polynomial forms");
    closedform->add_option("kind", kind_name, "tree|cycle|cycle-nonsep|discrete|appendix-wedge")
        ->required();
    closedform->add_option("n", arg_n)->required();

    CLI::App* appendix = app.add_subcommand("appendix", "line/circle island totals");
    appendix->add_option("which", bd, "B (line) or D (circle)")->required();
    appendix->add_option("n", arg_n)->required();
    appendix->add_option("m", arg_m)->required();
    appendix->add_option("--mode", mode, "brute|closed|recurrence|via-b|alternating|all");

    CLI::App* tee_cmd = app.add_subcommand("tee", "multipartite information scaling");
    tee_cmd->add_option("file", file)->required();
    tee_cmd->add_option("--omega", omega, "rational prefactor p/q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (faces->parsed() || beta_cmd->parsed() || counts_cmd->parsed()) {
            BuiltDocument doc = load_document(file, opt);
            AnalysisRecord rec = analyze(doc.graph, doc.coloring, colored, opt);
            if (opt.json_output) {
                std::cout << rec.to_json().dump(2) << "\n";
            } else if (faces->parsed()) {
                std::cout << "faces: " << rec.faces << "\ngenus: " << rec.genus << "\n";
            } else if (counts_cmd->parsed()) {
                std::cout << "counts:";
                for (auto d : rec.counts) std::cout << " " << d;
                std::cout << "\n";
            } else {
                std::cout << "beta_bar: " << rec.bar.str() << "\n";
                std::cout << "beta_total: " << rec.total.str() << "\n";
                std::cout << "beta(-1): " << rec.total.eval(-1) << "\n";
            }
            return 0;
        }
        if (transform->parsed()) {
            BuiltDocument doc = build_document(parse_smap(read_file(file)));
            auto ops = parse_script(read_file(script_file));
            TransformState st = apply_script({doc.graph, doc.coloring}, ops);
            std::string rendered = render_smap(document_from(st.graph, st.coloring));
            if (out_file.empty()) {
                std::cout << rendered;
            } else {
                std::ofstream out(out_file, std::ios::binary);
                if (!out) throw Error("cannot write '" + out_file + "'");
                out << rendered;
            }
            return 0;
        }
        if (check->parsed()) return run_check(file, opt);
        if (detect_cmd->parsed()) {
            BuiltDocument doc = load_document(file, opt);
            IntPoly total = beta_total(doc.graph, opt.threads);
            DetectResult r = detect(total, doc.graph.marked_count());
            const char* kind_str = r.kind == DetectKind::Tree            ? "tree"
                                   : r.kind == DetectKind::DecoratedTree ? "decorated-tree"
                                   : r.kind == DetectKind::Cycle         ? "cycle"
                                                                         : "none";
            if (opt.json_output) {
                json rec;
                rec["kind"] = kind_str;
                rec["beta_total"] = poly_to_json(total);
                rec["planar_mode"] = !doc.graph.surface_mode();
                rec["genus"] = doc.graph.genus();
                if (r.kind == DetectKind::Tree || r.kind == DetectKind::DecoratedTree) {
                    rec["a"] = mpz_to_json(r.a);
                    rec["b"] = mpz_to_json(r.b);
                    rec["loops"] = mpz_to_json(r.loops);
                    rec["parallels"] = mpz_to_json(r.parallels);
                }
                if (r.kind == DetectKind::Cycle) rec["cycle_face_term"] = r.cycle_face_term;
                std::cout << rec.dump(2) << "\n";
            } else {
                std::cout << "kind: " << kind_str << "\n";
                if (r.kind == DetectKind::DecoratedTree)
                    std::cout << "loops: " << r.loops << "\nparallels: " << r.parallels << "\n";
                if (r.kind == DetectKind::Cycle)
                    std::cout << "cycle_face_term: " << r.cycle_face_term << "\n";
            }
            return 0;
        }
        if (euler->parsed()) {
            BuiltDocument doc = load_document(file, opt);
            EulerEmergence r = euler_emergence(doc.graph, allow_multigraph);
            bool recursion_ok = beta_recursion_residual(doc.graph).is_zero();
            bool ok = (r.lhs == r.rhs) && recursion_ok;
            if (opt.json_output) {
                json rec;
                rec["lhs"] = mpz_to_json(r.lhs);
                rec["rhs"] = mpz_to_json(r.rhs);
                rec["recursion_holds"] = recursion_ok;
                rec["holds"] = ok;
                std::cout << rec.dump(2) << "\n";
            } else {
                std::cout << "lhs: " << r.lhs << "\nrhs: " << r.rhs << "\n";
            }
            return ok ? 0 : kExitCheckFailed;
        }
        if (closedform->parsed()) {
            IntPoly p;
            if (kind_name == "tree") p = closed_beta(ClosedBetaKind::Tree, arg_n);
            else if (kind_name == "cycle") p = closed_beta(ClosedBetaKind::CycleSeparating, arg_n);
            else if (kind_name == "cycle-nonsep") p = closed_beta(ClosedBetaKind::CycleNonSeparating, arg_n);
            else if (kind_name == "discrete") p = closed_beta(ClosedBetaKind::Discrete, arg_n);
            else if (kind_name == "appendix-wedge") p = closed_beta(ClosedBetaKind::AppendixWedge, arg_n);
            else throw Error("unknown closed form '" + kind_name + "'");
            if (opt.json_output) {
                json rec;
                rec["poly"] = poly_to_json(p);
                rec["text"] = p.str();
                std::cout << rec.dump(2) << "\n";
            } else {
                std::cout << p.str() << "\n";
            }
            return 0;
        }
        if (appendix->parsed()) {
            bool circle;
            if (bd == "B") circle = false;
            else if (bd == "D") circle = true;
            else throw Error("first argument must be B or D");
            json modes;
            std::optional<mpz_class> value;
            auto record = [&](const std::string& name, const mpz_class& v) {
                modes[name] = mpz_to_json(v);
                value = v;
            };
            if (!circle) {
                if (mode == "brute" || mode == "all") record("brute", line_island_total(arg_n, arg_m, BMode::Brute));
                if (mode == "closed" || mode == "all") record("closed", line_island_total(arg_n, arg_m, BMode::Closed));
                if (mode == "recurrence" || mode == "all")
                    record("recurrence", line_island_total(arg_n, arg_m, BMode::Recurrence));
            } else {
                if (mode == "brute" || mode == "all") record("brute", circle_island_total(arg_n, arg_m, DMode::Brute));
                if (arg_m < arg_n) {
                    if (mode == "via-b" || mode == "all") record("via-b", circle_island_total(arg_n, arg_m, DMode::ViaB));
                    if (mode == "closed" || mode == "all") record("closed", circle_island_total(arg_n, arg_m, DMode::Closed));
                    if (mode == "alternating" || mode == "all")
                        record("alternating", circle_island_total(arg_n, arg_m, DMode::Alternating));
                } else if (mode != "brute" && mode != "all") {
                    throw Error("closed forms need m < n");
                }
            }
            if (!value) throw Error("unknown mode '" + mode + "'");
            bool agree = true;
            for (const auto& [k, v] : modes.items())
                if (v != modes.begin().value()) agree = false;
            if (opt.json_output) {
                json rec;
                rec["value"] = mpz_to_json(*value);
                rec["modes"] = modes;
                rec["modes_agree"] = agree;
                std::cout << rec.dump(2) << "\n";
            } else {
                std::cout << value->get_str() << "\n";
            }
            return agree ? 0 : kExitCheckFailed;
        }
        if (tee_cmd->parsed()) {
            BuiltDocument doc = load_document(file, opt);
            mpz_class b = beta_total(doc.graph, opt.threads).eval(-1);
            mpq_class om(omega);
            if (om.get_den() == 0) throw Error("omega has a zero denominator");
            om.canonicalize();
            mpq_class value = tee_information(b, om);
            if (opt.json_output) {
                json rec;
                rec["beta_at_minus1"] = mpz_to_json(b);
                rec["omega"] = rational_str(om);
                rec["coefficient"] = mpz_to_json(-b);
                rec["value"] = rational_str(value);
                std::cout << rec.dump(2) << "\n";
            } else {
                std::cout << "beta(-1): " << b << "\ninformation: " << rational_str(value) << "  ("
                          << mpz_class(-b) << " * omega)\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
