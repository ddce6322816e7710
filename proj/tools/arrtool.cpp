// arrtool: exact computations for affine hyperplane arrangements.
//
// Subcommands: flats, dense, esv, os-basis, betti, aomoto, profile,
// laurent-h, massey, holonomy, bar-pages, itint.  Input is file-based;
// output is deterministic structured text or JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include "arr/aomoto.hpp"
#include "arr/bar.hpp"
#include "arr/holonomy.hpp"
#include "arr/io.hpp"
#include "arr/itint.hpp"
#include "arr/laurent.hpp"
#include "arr/massey.hpp"
#include "arr/orlik_solomon.hpp"

#include <iostream>
#include <sstream>

using namespace arr;
using json = nlohmann::ordered_json;

namespace {

std::string key_str(const std::vector<int>& k) {
    std::string out = "(";
    for (size_t i = 0; i < k.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(k[i]);
    }
    return out + ")";
}

std::string flat_str(const Flat& f) {
    std::string out = "{";
    for (size_t i = 0; i < f.hyperplanes.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f.hyperplanes[i]);
    }
    return out + "}";
}

json flat_json(const Flat& f) {
    json j;
    j["hyperplanes"] = f.hyperplanes;
    j["rank"] = f.rank;
    j["moebius"] = f.moebius;
    return j;
}

struct Options {
    std::string input, a_file, weights, classes, format = "text", loop_file, forms, phi;
    int window = 4;
    int degree = 1;
    int smax = 3;
    int meridian = 0;
    double radius = 0.125;
    std::string rvalue = "1";
    bool projective = false;
    bool pairing = false;
};

std::vector<LaurentElement> parse_classes(const std::string& text, int N) {
    std::vector<LaurentElement> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ';') {
            out.push_back(parse_laurent(cur, N));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_laurent(cur, N));
    return out;
}

int cmd_flats(const Options& opt) {
    Arrangement a = load_arrangement_file(opt.input);
    FlatLattice lat = intersection_lattice(a, opt.projective);
    if (opt.format == "json") {
        json j;
        j["projective"] = lat.projective;
        j["flats"] = json::array();
        for (const auto& f : lat.flats) j["flats"].push_back(flat_json(f));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (int r = 0; r <= lat.max_rank(); ++r) {
        for (const auto* f : lat.by_rank(r))
            std::cout << "rank " << r << "  flat " << flat_str(*f) << "  mu "
                      << f->moebius << "\n";
    }
    return 0;
}

int cmd_dense(const Options& opt) {
    Arrangement a = load_arrangement_file(opt.input);
    auto flats = dense_flats(a);
    if (opt.format == "json") {
        json j = json::array();
        for (const auto& f : flats) {
            json fj = flat_json(f);
            fj["dense"] = f.dense;
            j.push_back(fj);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& f : flats)
        std::cout << "flat " << flat_str(f) << "  rank " << f.rank << "  "
                  << (f.dense ? "dense" : "not dense") << "\n";
    return 0;
}

int cmd_esv(const Options& opt) {
    Arrangement a = load_arrangement_file(opt.input);
    std::vector<Scalar> w = parse_weight_row(opt.weights);
    ESVReport rep = esv_check(a, w);
    if (opt.format == "json") {
        json j;
        j["valid"] = rep.valid;
        j["violations"] = json::array();
        for (const auto& v : rep.violations) {
            json vj;
            vj["flat"] = v.flat.hyperplanes;
            vj["sum"] = v.sum.str();
            j["violations"].push_back(vj);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << (rep.valid ? "valid" : "invalid") << "\n";
    for (const auto& v : rep.violations)
        std::cout << "violation at " << flat_str(v.flat) << " sum " << v.sum.str() << "\n";
    return 0;
}

int cmd_os_basis(const Options& opt) {
    OSAlgebra alg = build_os(load_arrangement_file(opt.input));
    if (opt.format == "json") {
        json j = json::array();
        for (int d = 0; d <= alg.rank(); ++d) {
            json dj = json::array();
            for (const auto& m : alg.basis(d)) dj.push_back(m);
            j.push_back(dj);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (int d = 0; d <= alg.rank(); ++d) {
        std::cout << "degree " << d << ":";
        for (const auto& m : alg.basis(d)) {
            OSElement e;
            e.add_term(m, Scalar(1));
            std::cout << " " << e.str();
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_betti(const Options& opt) {
    OSAlgebra alg = build_os(load_arrangement_file(opt.input));
    auto dims = alg.dims();
    if (opt.format == "json") {
        std::cout << json(dims).dump() << "\n";
        return 0;
    }
    for (size_t i = 0; i < dims.size(); ++i) std::cout << (i ? " " : "") << dims[i];
    std::cout << "\n";
    return 0;
}

int cmd_aomoto(const Options& opt) {
    OSAlgebra alg = build_os(load_arrangement_file(opt.input));
    std::vector<Scalar> w = parse_weight_row(opt.weights);
    CohomologyReport rep = aomoto_cohomology(alg, w);
    if (opt.format == "json") {
        json j;
        j["dims"] = rep.dims;
        j["coboundary_dims"] = rep.coboundary_dims;
        j["esv_valid"] = rep.esv_valid;
        json reps = json::array();
        for (const auto& degree_reps : rep.representatives) {
            json dj = json::array();
            for (const auto& e : degree_reps) dj.push_back(e.str());
            reps.push_back(dj);
        }
        j["representatives"] = reps;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "dims";
    for (int d : rep.dims) std::cout << " " << d;
    std::cout << "\nesv " << (rep.esv_valid ? "valid" : "invalid") << "\n";
    for (size_t p = 1; p < rep.representatives.size(); ++p)
        for (const auto& e : rep.representatives[p])
            std::cout << "H^" << p << " representative: " << e.str() << "\n";
    return 0;
}

int cmd_profile(const Options& opt) {
    OSAlgebra alg = build_os(load_arrangement_file(opt.input));
    WeightMatrix a = load_weight_matrix_file(opt.a_file);
    WindowBox box = WindowBox::radius(a.N(), opt.window);
    Profile prof = h1_completion_profile(alg, a, box);
    if (opt.format == "json") {
        json j = json::array();
        for (const auto& [k, e] : prof) {
            json ej;
            ej["k"] = k;
            ej["h1"] = e.h1;
            ej["h2"] = e.h2;
            ej["esv_valid"] = e.esv_valid;
            j.push_back(ej);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& [k, e] : prof)
        std::cout << "k=" << key_str(k) << " h1=" << e.h1 << " h2=" << e.h2 << " esv="
                  << (e.esv_valid ? "valid" : "invalid") << "\n";
    return 0;
}

int cmd_laurent_h(const Options& opt) {
    OSAlgebra alg = build_os(load_arrangement_file(opt.input));
    WeightMatrix a = load_weight_matrix_file(opt.a_file);
    WindowBox box = WindowBox::radius(a.N(), opt.window);
    auto coh = laurent_cohomology(alg, a, box);
    if (opt.format == "json") {
        json j = json::array();
        for (const auto& [k, rep] : coh) {
            json ej;
            ej["k"] = k;
            ej["dim"] = rep.dims[opt.degree];
            ej["esv_valid"] = rep.esv_valid;
            j.push_back(ej);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& [k, rep] : coh)
        std::cout << "k=" << key_str(k) << " dim H^" << opt.degree << " = "
                  << rep.dims[opt.degree] << " esv=" << (rep.esv_valid ? "valid" : "invalid")
                  << "\n";
    return 0;
}

int cmd_massey(const Options& opt) {
    OSAlgebra alg = build_os(load_arrangement_file(opt.input));
    WeightMatrix a = load_weight_matrix_file(opt.a_file);
    auto classes = parse_classes(opt.classes, a.N());
    if (classes.size() != 3)
        throw std::invalid_argument("--classes needs three ';'-separated degree-one classes");
    WindowBox box = WindowBox::radius(a.N(), opt.window);
    MasseyResult res = massey_triple(alg, a, classes[0], classes[1], classes[2], box);
    if (opt.format == "json") {
        json j;
        j["defined"] = res.defined;
        if (res.defined) {
            j["representative"] = res.representative.str();
            j["indeterminacy_dim"] = res.indeterminacy_basis.size();
            json basis = json::array();
            for (const auto& e : res.indeterminacy_basis) basis.push_back(e.str());
            j["indeterminacy_basis"] = basis;
            j["verdict"] = res.nonzero_mod_indeterminacy ? "NONZERO" : "ZERO";
            j["r12"] = res.r12.str();
            j["r23"] = res.r23.str();
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (!res.defined) {
        std::cout << "undefined: a cup product is nonzero in cohomology\n";
        return 1;
    }
    std::cout << "representative: " << res.representative.str() << "\n";
    std::cout << "primitive r12: " << res.r12.str() << "\n";
    std::cout << "primitive r23: " << res.r23.str() << "\n";
    std::cout << "indeterminacy dimension: " << res.indeterminacy_basis.size() << "\n";
    for (const auto& e : res.indeterminacy_basis)
        std::cout << "indeterminacy basis: " << e.str() << "\n";
    std::cout << "verdict: " << (res.nonzero_mod_indeterminacy ? "NONZERO" : "ZERO") << "\n";
    return 0;
}

int cmd_holonomy(const Options& opt) {
    OSAlgebra alg = build_os(load_arrangement_file(opt.input));
    HolonomyPresentation p = holonomy_presentation(alg);
    int maxdeg = std::min(opt.degree > 1 ? opt.degree : 3, 3);
    auto dims = lcs_dims(p, maxdeg);

    auto relation_str = [&](const Vec& rel) {
        std::string out;
        for (int i = 1; i <= p.n; ++i)
            for (int j = i + 1; j <= p.n; ++j) {
                const Scalar& c = rel[HolonomyPresentation::pair_index(p.n, i, j)];
                if (c.is_zero()) continue;
                std::string piece = "x" + std::to_string(i) + "^x" + std::to_string(j);
                if (!(c.is_one())) piece = c.str() + "*" + piece;
                out += (out.empty() ? "" : " + ") + piece;
            }
        return out.empty() ? "0" : out;
    };

    if (opt.format == "json") {
        json j;
        j["generators"] = p.n;
        json rels = json::array();
        for (const auto& r : p.relations) rels.push_back(relation_str(r));
        j["relations"] = rels;
        j["lcs_dims"] = dims;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "generators: " << p.n << "\n";
    std::cout << "relation space dimension: " << p.relations.size() << "\n";
    for (const auto& r : p.relations) std::cout << "relation: " << relation_str(r) << "\n";
    std::cout << "lcs dims:";
    for (int d : dims) std::cout << " " << d;
    std::cout << "\n";
    return 0;
}

int cmd_bar_pages(const Options& opt) {
    OSAlgebra alg = build_os(load_arrangement_file(opt.input));
    ConnectedDGA h = ConnectedDGA::from_os_untwisted(alg);
    EMPages pages = em_pages(h, opt.smax);
    if (opt.format == "json") {
        json j;
        json e1 = json::array(), e2 = json::array();
        for (const auto& [st, dim] : pages.e1) {
            json x;
            x["s"] = st.first;
            x["t"] = st.second;
            x["dim"] = dim;
            e1.push_back(x);
        }
        for (const auto& [st, dim] : pages.e2) {
            json x;
            x["s"] = st.first;
            x["t"] = st.second;
            x["dim"] = dim;
            e2.push_back(x);
        }
        j["E1"] = e1;
        j["E2"] = e2;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& [st, dim] : pages.e1)
        std::cout << "E1^{-" << st.first << "," << st.second << "} = " << dim << "\n";
    for (const auto& [st, dim] : pages.e2)
        std::cout << "E2^{-" << st.first << "," << st.second << "} = " << dim << "\n";
    return 0;
}

int cmd_itint(const Options& opt) {
    Arrangement a = load_arrangement_file(opt.input);
    Rat rv = Scalar::parse(opt.rvalue).rational();
    WeightMatrix wm;
    if (!opt.a_file.empty()) wm = load_weight_matrix_file(opt.a_file);

    if (opt.pairing) {
        // pairing table int_{gamma_j} omega_k for all j, k
        json rows = json::array();
        for (int j = 1; j <= a.size(); ++j) {
            Loop loop = standard_meridian(a, j, opt.radius,
                                          CxPoint(a.ambient_dim, Cx(-1.0 / 3, -2.0 / 3)));
            auto periods = loop_periods(a, loop);
            if (opt.format == "json") {
                json row = json::array();
                for (const auto& p : periods) row.push_back({p.real(), p.imag()});
                rows.push_back(row);
            } else {
                std::cout << "gamma_" << j << ":";
                for (const auto& p : periods) {
                    std::ostringstream os;
                    os.precision(4);
                    os << " " << p.real() << (p.imag() < 0 ? "-" : "+") << std::abs(p.imag())
                       << "i";
                    std::cout << os.str();
                }
                std::cout << "\n";
            }
        }
        if (opt.format == "json") std::cout << rows.dump(2) << "\n";
        return 0;
    }

    Loop loop = opt.loop_file.empty()
                    ? standard_meridian(a, opt.meridian > 0 ? opt.meridian : 1, opt.radius,
                                        CxPoint(a.ambient_dim, Cx(-1.0 / 3, -2.0 / 3)))
                    : load_loop_file(opt.loop_file);

    if (wm.rows.empty()) {
        // plain periods of the loop
        auto periods = loop_periods(a, loop);
        if (opt.format == "json") {
            json row = json::array();
            for (const auto& p : periods) row.push_back({p.real(), p.imag()});
            std::cout << row.dump() << "\n";
        } else {
            for (const auto& p : periods)
                std::cout << p.real() << (p.imag() < 0 ? "-" : "+") << std::abs(p.imag())
                          << "i\n";
        }
        return 0;
    }

    if (opt.forms.empty()) {
        auto rho = monodromy(a, wm, rv, loop);
        if (opt.format == "json") {
            json row = json::array();
            for (const auto& p : rho) row.push_back({p.real(), p.imag()});
            std::cout << row.dump() << "\n";
        } else {
            std::cout << "monodromy:";
            for (const auto& p : rho)
                std::cout << " " << p.real() << (p.imag() < 0 ? "-" : "+") << std::abs(p.imag())
                          << "i";
            std::cout << "\n";
        }
        return 0;
    }

    // twisted iterated integral of ';'-separated forms
    std::vector<TwistedForm> forms;
    for (const auto& cls : parse_classes(opt.forms, wm.N())) {
        if (cls.comps.size() != 1)
            throw std::invalid_argument("each form must have a single component");
        TwistedForm f;
        f.k = cls.comps.begin()->first;
        f.eta = cls.comps.begin()->second;
        forms.push_back(std::move(f));
    }
    std::vector<int> phi(wm.N(), 0);
    if (!opt.phi.empty()) {
        LaurentElement ph = parse_laurent(opt.phi, wm.N());
        if (ph.comps.size() == 1) phi = ph.comps.begin()->first;
    }
    Cx v = iterated_integral(a, wm, rv, forms, phi, loop);
    std::cout << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of affine hyperplane arrangements"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_input = true) {
        auto* o = sub->add_option("-i,--input", opt.input, "arrangement file (JSON)");
        if (needs_input) o->required();
        sub->add_option("--format", opt.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* flats = app.add_subcommand("flats", "intersection lattice with Moebius values");
    add_common(flats);
    flats->add_flag("--projective", opt.projective, "use the projective closure");

    auto* dense = app.add_subcommand("dense", "dense flats of the projective closure");
    add_common(dense);

    auto* esv = app.add_subcommand("esv", "non-resonance check for a weight row");
    add_common(esv);
    esv->add_option("--weights", opt.weights, "comma-separated scalar row")->required();

    auto* osb = app.add_subcommand("os-basis", "NBC monomial basis per degree");
    add_common(osb);

    auto* betti = app.add_subcommand("betti", "Orlik-Solomon dimensions per degree");
    add_common(betti);

    auto* aom = app.add_subcommand("aomoto", "twisted cohomology of a weight row");
    add_common(aom);
    aom->add_option("--weights", opt.weights, "comma-separated scalar row")->required();

    auto* prof = app.add_subcommand("profile", "H^1/H^2 dimensions over a window of characters");
    add_common(prof);
    prof->add_option("--a", opt.a_file, "weight matrix file")->required();
    prof->add_option("--window", opt.window, "window radius");

    auto* lh = app.add_subcommand("laurent-h", "per-component cohomology dimensions");
    add_common(lh);
    lh->add_option("--a", opt.a_file, "weight matrix file")->required();
    lh->add_option("--window", opt.window, "window radius");
    lh->add_option("--degree", opt.degree, "cohomological degree");

    auto* mas = app.add_subcommand("massey", "Massey triple product of degree-one classes");
    add_common(mas);
    mas->add_option("--a", opt.a_file, "weight matrix file")->required();
    mas->add_option("--classes", opt.classes, "three ';'-separated classes")->required();
    mas->add_option("--window", opt.window, "window radius");

    auto* hol = app.add_subcommand("holonomy", "holonomy Lie algebra presentation and dims");
    add_common(hol);
    hol->add_option("--degree", opt.degree, "maximum degree (<= 3)");

    auto* bp = app.add_subcommand("bar-pages", "Eilenberg-Moore page dimensions");
    add_common(bp);
    bp->add_option("--smax", opt.smax, "bar length truncation");

    auto* it = app.add_subcommand("itint", "numeric twisted iterated integrals");
    add_common(it);
    it->add_option("--a", opt.a_file, "weight matrix file");
    it->add_option("--r", opt.rvalue, "rational value substituted for r");
    it->add_option("--loop", opt.loop_file, "loop file (JSON)");
    it->add_option("--meridian", opt.meridian, "use the standard meridian of hyperplane j");
    it->add_option("--radius", opt.radius, "meridian radius");
    it->add_option("--forms", opt.forms, "';'-separated twisted one-forms");
    it->add_option("--phi", opt.phi, "q-monomial coefficient");
    it->add_flag("--pairing", opt.pairing, "print the meridian/omega pairing table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2
    }

    try {
        if (app.got_subcommand(flats)) return cmd_flats(opt);
        if (app.got_subcommand(dense)) return cmd_dense(opt);
        if (app.got_subcommand(esv)) return cmd_esv(opt);
        if (app.got_subcommand(osb)) return cmd_os_basis(opt);
        if (app.got_subcommand(betti)) return cmd_betti(opt);
        if (app.got_subcommand(aom)) return cmd_aomoto(opt);
        if (app.got_subcommand(prof)) return cmd_profile(opt);
        if (app.got_subcommand(lh)) return cmd_laurent_h(opt);
        if (app.got_subcommand(mas)) return cmd_massey(opt);
        if (app.got_subcommand(hol)) return cmd_holonomy(opt);
        if (app.got_subcommand(bp)) return cmd_bar_pages(opt);
        if (app.got_subcommand(it)) return cmd_itint(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
