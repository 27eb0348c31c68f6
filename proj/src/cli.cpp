#include "rees/cli.hpp"

#include "rees/binomial.hpp"
#include "rees/exports.hpp"
#include "rees/fiber_type.hpp"
#include "rees/gb.hpp"
#include "rees/graph.hpp"
#include "rees/instance.hpp"
#include "rees/oracle.hpp"
#include "rees/quasi_matrix.hpp"
#include "rees/text.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace rees {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string render_polynomial(const Polynomial& p, const TermOrder& ord) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& [m, c] = p.term(i);
        Coeff abs = c < 0 ? Coeff(-c) : c;
        if (i == 0) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs != 1) os << abs.str() << "*";
        os << to_string(m, ord);
    }
    return os.str();
}

// Instance selection and order/cap options shared by the subcommands; command
// line flags override whatever the instance file's "options" object carries.
struct Selection {
    std::string file;
    std::optional<int> degcap;
    std::string xorder;
    std::string variant;
    std::string map = "rees";
};

struct Loaded {
    Instance inst;
    TermOrder ord;
    int degcap = 4;
};

OrderVariant parse_variant(const std::string& text) {
    if (text == "convention") return OrderVariant::t_above_x;
    if (text == "x-above-T") return OrderVariant::x_above_t;
    throw InputError("unknown order variant '" + text +
                     "' (expected convention or x-above-T)");
}

std::vector<int> parse_xorder_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InputError("invalid x-order entry '" + item + "'");
        }
    }
    return out;
}

Loaded load_instance(const Selection& sel) {
    std::ifstream in(sel.file);
    if (!in) throw InputError("cannot open instance file: " + sel.file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto [inst, opts] = parse_instance_json(buffer.str());
    validate(inst);

    OrderVariant variant = OrderVariant::t_above_x;
    if (!sel.variant.empty())
        variant = parse_variant(sel.variant);
    else if (opts.variant)
        variant = *opts.variant;

    std::vector<int> xorder;
    if (!sel.xorder.empty())
        xorder = parse_xorder_list(sel.xorder);
    else if (opts.xorder)
        xorder = *opts.xorder;

    Loaded loaded;
    loaded.inst = inst;
    try {
        loaded.ord = xorder.empty() ? TermOrder::standard(inst.n)
                                    : TermOrder::with_xorder(xorder, variant);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    loaded.ord.variant = variant;
    loaded.degcap = sel.degcap ? *sel.degcap : opts.degcap.value_or(4);
    if (loaded.degcap < 1) throw InputError("degree cap must be at least 1");
    return loaded;
}

MapKind map_kind(const Selection& sel) {
    return sel.map == "fiber" ? MapKind::fiber : MapKind::rees;
}

int run_matrix(const Loaded& L, std::optional<int> full_block, bool json,
               std::ostream& out) {
    QuasiMatrix M;
    if (full_block) {
        if (*full_block < 1 || *full_block > L.inst.r())
            throw InputError("block index out of range");
        M = build_B(*full_block, L.inst, L.ord);
    } else {
        M = build_C(L.inst, L.ord);
    }
    if (json) {
        out << matrix_to_json(M, L.inst) << "\n";
    } else {
        out << render(M);
        out << "filled cells: " << M.filled_cell_count() << "\n";
    }
    return 0;
}

int run_basis(const Loaded& L, MapKind kind, bool family, bool reduced, bool json,
              bool m2, std::ostream& out) {
    std::vector<Binomial> basis;
    if (family) {
        basis = kind == MapKind::rees ? gb_rees(L.inst, L.ord)
                                      : gb_fiber(L.inst, L.ord);
    } else if (reduced) {
        basis = reduced_gb(kind == MapKind::rees ? gb_rees(L.inst, L.ord)
                                                 : gb_fiber(L.inst, L.ord),
                           L.ord);
    } else {
        basis = minimal_generators(L.inst, kind, L.ord);
    }
    if (m2) {
        out << export_m2(basis, L.inst, L.ord);
    } else if (json) {
        out << basis_to_json(basis, L.inst, L.ord) << "\n";
    } else {
        for (const Binomial& b : basis) out << to_string(b, L.ord) << "\n";
        out << "count: " << basis.size() << "\n";
    }
    return 0;
}

int run_verify(const Loaded& L, MapKind kind, const std::string& method, bool json,
               std::ostream& out) {
    std::vector<Binomial> G =
        kind == MapKind::rees ? gb_rees(L.inst, L.ord) : gb_fiber(L.inst, L.ord);
    std::vector<Certificate> certs;
    if (method == "buchberger" || method == "all")
        certs.push_back(buchberger_verify(G, L.ord));
    if (method == "sink" || method == "all")
        certs.push_back(unique_sink_certify(L.inst, G, L.ord, L.degcap, kind));
    if (method == "oracle" || method == "all")
        certs.push_back(ideal_equal_up_to(
            G, brute_force_kernel(L.inst, L.degcap, kind, L.ord), L.ord, L.degcap,
            L.inst, kind));
    bool pass = true;
    for (const Certificate& c : certs) pass = pass && c.pass;
    if (json) {
        ordered_json results = ordered_json::array();
        for (const Certificate& c : certs)
            results.push_back(
                {{"method", c.method}, {"pass", c.pass}, {"witnesses", c.witnesses}});
        out << report_envelope(L.inst, results.dump()) << "\n";
    } else {
        for (const Certificate& c : certs) {
            out << c.method << ": " << (c.pass ? "pass" : "FAIL") << "\n";
            for (const std::string& w : c.witnesses) out << "  " << w << "\n";
        }
        out << "result: " << (pass ? "pass" : "fail") << "\n";
    }
    return pass ? 0 : 1;
}

int run_reduce(const Loaded& L, MapKind kind, const std::string& text,
               std::ostream& out) {
    Binomial f = parse_binomial(text, L.inst.n, L.inst.r(), L.ord);
    std::vector<Binomial> fam =
        kind == MapKind::rees ? gb_rees(L.inst, L.ord) : gb_fiber(L.inst, L.ord);
    std::vector<Binomial> basis = reduced_gb(fam, L.ord);
    ReductionResult res = reduce(Polynomial::from_binomial(f, L.ord), basis, L.ord);
    out << "normal form: " << render_polynomial(res.normal_form, L.ord) << "\n";
    out << "steps: " << res.steps.size() << "\n";
    for (const ReductionStep& s : res.steps) {
        out << "  subtract ";
        if (s.coeff != 1) out << s.coeff.str() << "*";
        if (!s.cofactor.is_unit() || s.coeff == 1)
            out << to_string(s.cofactor, L.ord) << "*";
        out << "(" << to_string(basis[s.divisor_index], L.ord) << ")\n";
    }
    return 0;
}

int run_chordal(const Loaded& L, const std::string& method, const std::string& which,
                bool dot, std::ostream& out) {
    BipartiteGraph g = which == "cycle" ? cycle_graph(L.inst, L.ord)
                                        : incidence_graph(L.inst);
    if (dot) {
        out << to_dot(g);
        return 0;
    }
    ChordalityVerdict v = is_chordal_bipartite(
        g, method == "p4" ? ChordalityMethod::p4_sweep : ChordalityMethod::exhaustive);
    out << "chordal bipartite: " << (v.chordal ? "yes" : "no") << "\n";
    if (v.witness) out << "chordless cycle: " << to_string(*v.witness, g) << "\n";
    return v.chordal ? 0 : 1;
}

int run_cycles(const Loaded& L, std::optional<int> max_len, bool dot, bool json,
               std::ostream& out) {
    BipartiteGraph g = cycle_graph(L.inst, L.ord);
    if (dot) {
        out << to_dot(g);
        return 0;
    }
    std::vector<EvenCycle> cycles = enumerate_admissible_cycles(g, max_len);
    if (json) {
        ordered_json arr = ordered_json::array();
        for (const EvenCycle& c : cycles) {
            CycleTranslation t = cycle_to_binomial(c, g, L.inst, L.ord);
            arr.push_back({{"cycle", to_string(c, g)},
                           {"binomial", to_string(t.binomial, L.ord)},
                           {"negated", t.negated}});
        }
        out << report_envelope(L.inst, arr.dump()) << "\n";
    } else {
        for (const EvenCycle& c : cycles) {
            CycleTranslation t = cycle_to_binomial(c, g, L.inst, L.ord);
            out << to_string(c, g) << "  =>  " << to_string(t.binomial, L.ord)
                << "\n";
        }
        out << "total: " << cycles.size() << "\n";
    }
    return 0;
}

int run_koszul(const Loaded& L, bool json, std::ostream& out) {
    std::optional<KoszulWitness> w = koszul_witness(L.inst, L.ord);
    if (!w) {
        if (json) {
            ordered_json results = {{"chordal", true}, {"obstructed", false}};
            out << report_envelope(L.inst, results.dump()) << "\n";
        } else {
            out << "chordal bipartite: yes\n";
            out << "no Koszul obstruction from chordless cycles\n";
        }
        return 0;
    }
    BipartiteGraph g = incidence_graph(L.inst);
    bool in_ker = phi_eval(w->alpha.plus, L.inst.r()) ==
                  phi_eval(w->alpha.minus, L.inst.r());
    QuadricSpanCertificate cert =
        not_quadric_generated(w->alpha, L.inst, MapKind::fiber, L.ord);
    if (json) {
        ordered_json results = {{"chordal", false},
                                {"cycle", to_string(w->cycle, g)},
                                {"witness", to_string(w->alpha, L.ord)},
                                {"kernel_membership", in_ker},
                                {"slice_dimension", cert.slice_dimension},
                                {"quadric_multiples", cert.quadric_multiples},
                                {"span_rank", cert.span_rank},
                                {"obstructed", cert.outside_span}};
        out << report_envelope(L.inst, results.dump()) << "\n";
    } else {
        out << "chordal bipartite: no\n";
        out << "chordless cycle: " << to_string(w->cycle, g) << "\n";
        out << "witness: " << to_string(w->alpha, L.ord) << "\n";
        out << "kernel membership: " << (in_ker ? "pass" : "FAIL") << "\n";
        out << "multidegree slice dimension: " << cert.slice_dimension << "\n";
        out << "quadric multiples in slice: " << cert.quadric_multiples << "\n";
        out << "quadric span rank: " << cert.span_rank << "\n";
        out << "outside quadric span: " << (cert.outside_span ? "yes" : "no")
            << "\n";
    }
    return cert.outside_span && in_ker ? 1 : 0;
}

int run_fiber_type(const Loaded& L, const std::string& text, std::ostream& out) {
    Binomial f = parse_binomial(text, L.inst.n, L.inst.r(), L.ord);
    QuasiMatrix C = build_C(L.inst, L.ord);
    std::optional<Combination> comb = rewrite_fiber_type(f, C, L.ord);
    if (!comb)
        throw InputError("binomial does not place as an x-binary quasi-minor of "
                         "the instance quasi-matrix");
    out << to_string(*comb, L.ord) << "\n";
    Polynomial target = Polynomial::from_binomial(f, L.ord);
    bool exact = expand(*comb, L.ord) == target;
    out << "identity: " << (exact ? "exact" : "MISMATCH") << "\n";
    out << "fiber-type shape: "
        << (is_fiber_type_shape(*comb, C, L.ord) ? "yes" : "no") << "\n";
    return exact ? 0 : 1;
}

struct Example {
    const char* name;
    const char* description;
    const char* json;
};

constexpr Example kExamples[] = {
    {"triangle",
     "three two-variable subspace ideals in a triangle, first powers",
     R"({"n": 3, "ideals": [{"vars": [1,2], "power": 1}, {"vars": [2,3], "power": 1}, {"vars": [1,3], "power": 1}]})"},
    {"triangle-squares",
     "the triangle supports with every ideal squared",
     R"({"n": 3, "ideals": [{"vars": [1,2], "power": 2}, {"vars": [2,3], "power": 2}, {"vars": [1,3], "power": 2}]})"},
    {"five-blocks",
     "five ideals on four variables with mixed powers",
     R"({"n": 4, "ideals": [{"vars": [1,2], "power": 2}, {"vars": [1,3], "power": 3}, {"vars": [2,3], "power": 2}, {"vars": [1,4], "power": 1}, {"vars": [2,4], "power": 1}]})"},
    {"single-block",
     "one ideal spanning all three variables, squared",
     R"({"n": 3, "ideals": [{"vars": [1,2,3], "power": 2}]})"},
};

int run_examples(const std::string& name, std::ostream& out) {
    if (name.empty()) {
        for (const Example& e : kExamples)
            out << e.name << " - " << e.description << "\n";
        return 0;
    }
    for (const Example& e : kExamples)
        if (name == e.name) {
            out << e.json << "\n";
            return 0;
        }
    throw InputError("unknown example '" + name + "' (try: examples)");
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Groebner bases of multi-Rees algebras and multi-fiber rings "
                 "over coordinate-subspace ideal powers",
                 "rees"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version));

    Selection sel;
    int status = 0;

    auto add_common = [&sel](CLI::App* cmd, bool with_map = false) {
        cmd->add_option("instance", sel.file, "instance JSON file")->required();
        cmd->add_option("--degcap", sel.degcap,
                        "verification degree cap (default: file option or 4)");
        cmd->add_option("--xorder", sel.xorder,
                        "x-precedence permutation, e.g. 2,1,3");
        cmd->add_option("--variant", sel.variant,
                        "term-order variant: convention or x-above-T");
        if (with_map)
            cmd->add_option("--map", sel.map, "presentation map: rees or fiber")
                ->check(CLI::IsMember({"rees", "fiber"}));
    };

    // matrix
    auto* matrix_cmd =
        app.add_subcommand("matrix", "print the block quasi-matrix of the instance");
    bool matrix_json = false;
    std::optional<int> matrix_full;
    add_common(matrix_cmd);
    matrix_cmd->add_flag("--json", matrix_json, "JSON output");
    matrix_cmd->add_option("--full-block", matrix_full,
                           "print the full single-block matrix for this block");
    matrix_cmd->callback([&] {
        status = run_matrix(load_instance(sel), matrix_full, matrix_json, out);
    });

    // gb / fiber-gb
    bool gb_family = false, gb_reduced = false, gb_json = false, gb_m2 = false;
    auto add_basis_cmd = [&](const char* name, const char* help, MapKind kind) {
        auto* cmd = app.add_subcommand(name, help);
        add_common(cmd);
        auto* fam = cmd->add_flag("--family", gb_family,
                                  "print the structural Groebner family");
        auto* red = cmd->add_flag("--reduced", gb_reduced,
                                  "print the reduced Groebner basis");
        fam->excludes(red);
        auto* j = cmd->add_flag("--json", gb_json, "JSON output");
        auto* m = cmd->add_flag("--m2", gb_m2, "Macaulay2 cross-check script");
        j->excludes(m);
        cmd->callback([&, kind] {
            status = run_basis(load_instance(sel), kind, gb_family, gb_reduced,
                               gb_json, gb_m2, out);
        });
    };
    add_basis_cmd("gb",
                  "defining equations of the multi-Rees algebra (minimal "
                  "generators; --family / --reduced for the Groebner views)",
                  MapKind::rees);
    add_basis_cmd("fiber-gb",
                  "defining equations of the multi-fiber ring (minimal "
                  "generators; --family / --reduced for the Groebner views)",
                  MapKind::fiber);

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "certify the structural family is a Groebner basis");
    std::string verify_method = "all";
    bool verify_json = false;
    add_common(verify_cmd, true);
    verify_cmd->add_option("--method", verify_method,
                           "buchberger, sink, oracle, or all")
        ->check(CLI::IsMember({"buchberger", "sink", "oracle", "all"}));
    verify_cmd->add_flag("--json", verify_json, "JSON report");
    verify_cmd->callback([&] {
        status = run_verify(load_instance(sel), map_kind(sel), verify_method,
                            verify_json, out);
    });

    // reduce
    auto* reduce_cmd =
        app.add_subcommand("reduce", "normal form of a binomial modulo the basis");
    std::string reduce_text;
    add_common(reduce_cmd, true);
    reduce_cmd->add_option("binomial", reduce_text, "binomial, e.g. "
                           "\"x1*T[x2,t1] - x2*T[x1,t1]\"")
        ->required();
    reduce_cmd->callback([&] {
        status = run_reduce(load_instance(sel), map_kind(sel), reduce_text, out);
    });

    // chordal
    auto* chordal_cmd = app.add_subcommand(
        "chordal", "test the incidence graph for chordal bipartiteness");
    std::string chordal_method = "exhaustive", chordal_which = "incidence";
    bool chordal_dot = false;
    add_common(chordal_cmd);
    chordal_cmd->add_option("--method", chordal_method, "exhaustive or p4")
        ->check(CLI::IsMember({"exhaustive", "p4"}));
    chordal_cmd->add_option("--graph", chordal_which, "incidence or cycle")
        ->check(CLI::IsMember({"incidence", "cycle"}));
    chordal_cmd->add_flag("--dot", chordal_dot, "print the graph in DOT format");
    chordal_cmd->callback([&] {
        status = run_chordal(load_instance(sel), chordal_method, chordal_which,
                             chordal_dot, out);
    });

    // cycles
    auto* cycles_cmd = app.add_subcommand(
        "cycles", "admissible cycles of the cycle graph and their binomials");
    std::optional<int> cycles_max;
    bool cycles_dot = false, cycles_json = false;
    add_common(cycles_cmd);
    cycles_cmd->add_option("--max-len", cycles_max, "maximum cycle length (edges)");
    cycles_cmd->add_flag("--dot", cycles_dot, "print the cycle graph in DOT format");
    cycles_cmd->add_flag("--json", cycles_json, "JSON report");
    cycles_cmd->callback([&] {
        status = run_cycles(load_instance(sel), cycles_max, cycles_dot, cycles_json,
                            out);
    });

    // koszul
    auto* koszul_cmd = app.add_subcommand(
        "koszul", "Koszulness obstruction for the multi-fiber ring");
    bool koszul_json = false;
    add_common(koszul_cmd);
    koszul_cmd->add_flag("--json", koszul_json, "JSON report");
    koszul_cmd->callback(
        [&] { status = run_koszul(load_instance(sel), koszul_json, out); });

    // fiber-type
    auto* ft_cmd = app.add_subcommand(
        "fiber-type",
        "decompose an x-binary quasi-minor into x-minors and x-free quasi-minors");
    std::string ft_text;
    add_common(ft_cmd);
    ft_cmd->add_option("binomial", ft_text, "the binomial to decompose")->required();
    ft_cmd->callback(
        [&] { status = run_fiber_type(load_instance(sel), ft_text, out); });

    // examples
    auto* ex_cmd =
        app.add_subcommand("examples", "bundled example instances (JSON)");
    std::string ex_name;
    ex_cmd->add_option("name", ex_name, "example name (omit to list)");
    ex_cmd->callback([&] { status = run_examples(ex_name, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << tool_version << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return 2;
    }
    return status;
}

} // namespace rees
