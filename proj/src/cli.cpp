#include "hamcert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hamcert/certificate.hpp"
#include "hamcert/connectivity.hpp"
#include "hamcert/errors.hpp"
#include "hamcert/families.hpp"
#include "hamcert/graph6.hpp"
#include "hamcert/hamilton.hpp"
#include "hamcert/induced_search.hpp"
#include "hamcert/split_certify.hpp"
#include "hamcert/tf_certify.hpp"
#include "hamcert/verifier.hpp"

namespace hamcert::cli {

namespace {

struct Config {
    std::string input;
    std::string format = "graph6";

    // gen
    std::string family;
    std::vector<std::string> params;

    // check
    bool two_connected = false;
    bool hamiltonian = false;
    bool hamiltonian_path = false;
    bool triangle_free = false;
    bool split = false;
    bool recognize = false;
    int toughness = -1;

    // certify / obstruction / verify
    std::string cls;
    int max_n = 8;
    int jobs = 1;

    // convert
    std::vector<int> highlight;
};

std::vector<Graph> read_graphs(const Config& c, std::istream& in) {
    if (c.input.empty() || c.input == "-") return read_graph6_stream(in);
    std::ifstream file(c.input);
    if (!file) throw PreconditionError("cannot open '" + c.input + "'");
    return read_graph6_stream(file);
}

std::vector<int> parse_params(const std::vector<std::string>& raw) {
    std::vector<int> out;
    for (const std::string& token : raw) {
        std::stringstream ss(token);
        std::string piece;
        while (std::getline(ss, piece, ',')) {
            if (piece.empty()) continue;
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(piece, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != piece.size()) throw PreconditionError("parameter '" + piece + "' is not an integer");
            out.push_back(value);
        }
    }
    return out;
}

void emit(std::ostream& out, const Config& c, const Graph& g, VertexSet highlight = {}) {
    if (c.format == "dot")
        out << write_dot(g, highlight);
    else
        out << write_graph6(g) << '\n';
}

VertexSet certificate_vertices(const Certificate& cert) {
    if (const auto* e = std::get_if<Embedding>(&cert)) return e->image();
    if (const auto* t = std::get_if<ToughnessWitness>(&cert)) return t->x;
    return {};
}

int cmd_gen(const Config& c, std::ostream& out) {
    const ObstructionKind k = parse_kind(c.family, parse_params(c.params));
    emit(out, c, generate(k));
    return kExitOk;
}

int cmd_check(const Config& c, std::istream& in, std::ostream& out) {
    int status = kExitOk;
    for (const Graph& g : read_graphs(c, in)) {
        std::string line;
        bool positive = true;
        if (c.two_connected) {
            auto w = two_connectivity_obstacle(g);
            positive = !w;
            if (!w) {
                line = "YES";
            } else if (w->kind == CutWitness::Kind::kTooSmall) {
                line = "NO too-small";
            } else if (w->kind == CutWitness::Kind::kDisconnected) {
                line = "NO disconnected " + std::to_string(w->a) + " " + std::to_string(w->b);
            } else {
                line = "NO cut-vertex " + std::to_string(w->a);
            }
        } else if (c.hamiltonian) {
            auto cycle = hamiltonian_cycle(g);
            positive = cycle.has_value();
            line = cycle ? format_certificate(*cycle) : "NONE";
        } else if (c.hamiltonian_path) {
            auto path = hamiltonian_path(g);
            positive = path.has_value();
            if (path) {
                line = "PATH";
                for (int v : path->order) line += " " + std::to_string(v);
            } else {
                line = "NONE";
            }
        } else if (c.triangle_free) {
            auto t = find_triangle(g);
            positive = !t;
            line = t ? "NO triangle " + std::to_string((*t)[0]) + " " + std::to_string((*t)[1]) + " " +
                           std::to_string((*t)[2])
                     : "YES";
        } else if (c.split) {
            auto p = split_partition(g);
            positive = p.has_value();
            if (p) {
                auto join = [](VertexSet s) {
                    std::string r;
                    for (int v : s) r += (r.empty() ? "" : ",") + std::to_string(v);
                    return r;
                };
                line = "SPLIT k=" + join(p->k) + " s=" + join(p->s);
            } else {
                line = "NONE";
            }
        } else if (c.recognize) {
            auto k = recognize_obstruction(g);
            positive = k.has_value();
            line = k ? to_string(*k) : "NONE";
        } else {
            const int limit = std::min(c.toughness, g.order());
            auto w = toughness_witness(g, limit);
            positive = w.has_value();
            line = w ? format_certificate(*w) : "NONE";
        }
        if (!positive) status = kExitNegative;
        out << line << '\n';
    }
    return status;
}

int cmd_certify(const Config& c, std::istream& in, std::ostream& out) {
    int status = kExitOk;
    for (const Graph& g : read_graphs(c, in)) {
        const Certificate cert = c.cls == "split" ? split_certify(g) : tf_certify(g);
        if (!validate(g, cert)) throw InternalInvariantError("certificate failed validation");
        if (!is_cycle(cert)) status = kExitNegative;
        if (c.format == "dot") {
            VertexSet mark = certificate_vertices(cert);
            out << write_dot(g, mark);
        } else {
            out << format_certificate(cert) << '\n';
        }
    }
    return status;
}

int cmd_obstruction(const Config& c, std::istream& in, std::ostream& out) {
    int status = kExitOk;
    for (const Graph& g : read_graphs(c, in)) {
        auto e = c.cls == "split" ? find_split_obstruction(g) : find_tf_obstruction(g);
        if (!e) status = kExitNegative;
        if (c.format == "dot") {
            out << write_dot(g, e ? e->image() : VertexSet{});
        } else {
            out << (e ? format_certificate(*e) : std::string("NONE")) << '\n';
        }
    }
    return status;
}

int cmd_verify(const Config& c, std::istream& in, std::ostream& out) {
    VerifyOptions options;
    options.cls = *parse_verify_class(c.cls);
    options.n_max = c.max_n;
    options.jobs = c.jobs;
    std::vector<Graph> source;
    if (!c.input.empty()) {
        source = read_graphs(c, in);
        options.source = &source;
    }
    const ObstructionReport report = verify_characterization(options);
    out << report.text();
    return report.pass.value_or(true) ? kExitOk : kExitNegative;
}

int cmd_convert(const Config& c, std::istream& in, std::ostream& out) {
    VertexSet mark;
    for (const Graph& g : read_graphs(c, in)) {
        for (int v : c.highlight) {
            if (v < 0 || v >= g.order()) throw PreconditionError("highlight vertex " + std::to_string(v) + " out of range");
            mark.insert(v);
        }
        emit(out, c, g, mark);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Hamiltonicity certificates and forbidden induced subgraphs", "hamcert"};
    app.require_subcommand(1, 1);
    const std::vector<std::string> formats{"graph6", "dot"};
    const std::vector<std::string> certify_classes{"split", "tf"};

    auto* gen = app.add_subcommand("gen", "Generate a family member");
    gen->add_option("family", c.family, "claw, net, snare, sun, nova, theta, closed-theta, wheel")->required();
    gen->add_option("params", c.params, "Integer parameters (spaces or commas)");
    gen->add_option("--format", c.format)->check(CLI::IsMember(formats));

    auto* check = app.add_subcommand("check", "Decide a property for each input graph");
    auto* f1 = check->add_flag("--two-connected", c.two_connected, "2-connectivity with a cut witness");
    auto* f2 = check->add_flag("--hamiltonian", c.hamiltonian, "Hamiltonian cycle");
    auto* f3 = check->add_flag("--hamiltonian-path", c.hamiltonian_path, "Hamiltonian path");
    auto* f4 = check->add_flag("--triangle-free", c.triangle_free, "Triangle-freeness");
    auto* f5 = check->add_flag("--split", c.split, "Split partition");
    auto* f6 = check->add_flag("--recognize", c.recognize, "Family member recognition");
    auto* f7 = check->add_option("--toughness", c.toughness, "Toughness witness with |X| <= K")->check(CLI::NonNegativeNumber);
    const std::vector<CLI::Option*> checks{f1, f2, f3, f4, f5, f6, f7};
    for (auto* a : checks)
        for (auto* b : checks)
            if (a != b) a->excludes(b);
    check->add_option("--input", c.input, "graph6 file (default stdin)");

    auto* certify = app.add_subcommand("certify", "Hamiltonian cycle or induced obstruction");
    certify->add_option("--class", c.cls)->required()->check(CLI::IsMember(certify_classes));
    certify->add_option("--input", c.input, "graph6 file (default stdin)");
    certify->add_option("--format", c.format)->check(CLI::IsMember(formats));

    auto* obstruction = app.add_subcommand("obstruction", "Search for an induced obstruction");
    obstruction->add_option("--class", c.cls)->required()->check(CLI::IsMember(certify_classes));
    obstruction->add_option("--input", c.input, "graph6 file (default stdin)");
    obstruction->add_option("--format", c.format)->check(CLI::IsMember(formats));

    auto* verify = app.add_subcommand("verify", "Exhaustive obstruction catalog check");
    verify->add_option("--class", c.cls)->required()->check(CLI::IsMember(std::vector<std::string>{"split", "tf", "hp", "all"}));
    verify->add_option("--max-n", c.max_n, "Largest vertex count")->check(CLI::Range(1, kObstructionCheckMaxOrder));
    verify->add_option("--input", c.input, "graph6 file replacing the builtin enumeration");
    verify->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1, 256));

    auto* convert = app.add_subcommand("convert", "Re-emit graphs as graph6 or DOT");
    convert->add_option("--input", c.input, "graph6 file (default stdin)");
    convert->add_option("--format", c.format)->check(CLI::IsMember(formats));
    convert->add_option("--highlight", c.highlight, "Vertices to mark")->delimiter(',');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (check->parsed() && checks.end() == std::find_if(checks.begin(), checks.end(), [](auto* o) { return o->count() > 0; })) {
        err << "check: one property flag is required\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(c, out);
        if (check->parsed()) return cmd_check(c, in, out);
        if (certify->parsed()) return cmd_certify(c, in, out);
        if (obstruction->parsed()) return cmd_obstruction(c, in, out);
        if (verify->parsed()) return cmd_verify(c, in, out);
        return cmd_convert(c, in, out);
    } catch (const Graph6Error& e) {
        err << "input error: " << e.what() << '\n';
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace hamcert::cli
