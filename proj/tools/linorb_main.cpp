// linorb: exact predegree polynomials, stabilizers and orbit-closure degrees
// for configurations of lines in the projective plane, plus transversal
// hyperplane arrangements in higher projective space.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linorb/arrangements.hpp"
#include "linorb/errors.hpp"
#include "linorb/excess.hpp"
#include "linorb/io.hpp"
#include "linorb/predegree.hpp"
#include "linorb/stabilizer.hpp"

namespace {

using namespace linorb;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDisagree = 3;

std::vector<Int> integer_table(const TruncatedSeries& p) {
    std::vector<Int> out;
    for (const auto& v : predegree_table(p)) out.push_back(v.as_integer());
    return out;
}

struct EngineRun {
    TruncatedSeries closed{TruncatedSeries::kPlaneCap};
    TruncatedSeries blocks{TruncatedSeries::kPlaneCap};
    TruncatedSeries chow{TruncatedSeries::kPlaneCap};
    bool agree = false;
};

EngineRun run_engines(const LineConfiguration& cfg) {
    EngineRun r;
    r.closed = closed_form_predegree(cfg);
    r.blocks = assemble_bezout(cfg, EngineKind::explicit_blocks);
    r.chow = assemble_bezout(cfg, EngineKind::chow);
    r.agree = (r.closed == r.blocks) && (r.closed == r.chow);
    return r;
}

void print_disagreement(std::ostream& os, const EngineRun& r) {
    os << "engine disagreement (coefficient: closed-form / explicit-blocks / chow):\n";
    for (unsigned j = 0; j <= TruncatedSeries::kPlaneCap; ++j) {
        const auto &a = r.closed.coeff(j), &b = r.blocks.coeff(j), &c = r.chow.coeff(j);
        if (a == b && b == c) continue;
        os << "  t^" << j << ": " << a.str() << " / " << b.str() << " / " << c.str() << "\n";
    }
}

Report build_report(const LineConfiguration& cfg, bool verify, unsigned cap) {
    const ConfigClass cls = classify(cfg);
    Report rep;
    rep.classification = to_string(cls.tag);
    rep.orbit_dim = cls.orbit_dim;

    TruncatedSeries p = closed_form_predegree(cfg);
    if (verify) {
        const EngineRun run = run_engines(cfg);
        rep.engine_agreement = run.agree;
        if (!run.agree) {
            rep.polynomial = p.recap(cap);
            print_disagreement(std::cerr, run);
            return rep;
        }
    }
    rep.predegrees = integer_table(p);
    try {
        const StabilizerReport st = component_count(cfg, p);
        rep.components = st.components;
        rep.orbit_degree = st.orbit_degree;
    } catch (const NeedsCoordinates&) {
        // abstract star/fan/general: the polynomial stands on its own
    } catch (const NotApplicable&) {
    }
    if (cap != TruncatedSeries::kPlaneCap) {
        p = p.recap(cap);
        rep.predegrees.resize(std::min<std::size_t>(rep.predegrees.size(), cap + 1));
    }
    rep.polynomial = p;
    return rep;
}

void emit(const Report& rep, bool as_json) {
    if (as_json)
        std::cout << report_to_json(rep).dump() << "\n";
    else
        std::cout << report_to_text(rep);
}

int cmd_predegree(const std::string& input, bool verify, bool as_json, unsigned cap) {
    const Report rep = build_report(load_configuration(input), verify, cap);
    emit(rep, as_json);
    return (rep.engine_agreement && !*rep.engine_agreement) ? kExitDisagree : kExitOk;
}

int cmd_batch(const std::string& dir, bool verify, bool as_json, unsigned cap) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "no .json inputs under " << dir << "\n";
        return kExitInput;
    }

    const long n = static_cast<long>(files.size());
    std::vector<std::string> outputs(n);
    std::vector<int> codes(n, kExitOk);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        std::ostringstream os;
        try {
            const Report rep = build_report(load_configuration(files[i]), verify, cap);
            os << (as_json ? report_to_json(rep).dump() + "\n" : report_to_text(rep));
            if (rep.engine_agreement && !*rep.engine_agreement) codes[i] = kExitDisagree;
        } catch (const Error& e) {
            os << "error: " << e.what() << "\n";
            codes[i] = kExitInput;
        }
        outputs[i] = os.str();
    }

    int worst = kExitOk;
    for (long i = 0; i < n; ++i) {
        std::cout << "== " << files[i] << "\n" << outputs[i];
        worst = std::max(worst, codes[i]);
    }
    return worst;
}

int cmd_verify(const std::string& input, bool as_json) {
    const LineConfiguration cfg = load_configuration(input);
    const EngineRun run = run_engines(cfg);
    if (as_json) {
        nlohmann::json j;
        j["closedForm"] = series_to_json(run.closed);
        j["explicitBlocks"] = series_to_json(run.blocks);
        j["chow"] = series_to_json(run.chow);
        j["engineAgreement"] = run.agree;
        std::cout << j.dump() << "\n";
    } else if (run.agree) {
        std::cout << "engines agree: " << run.closed.str() << "\n";
    }
    if (!run.agree) {
        print_disagreement(std::cerr, run);
        return kExitDisagree;
    }
    return kExitOk;
}

int cmd_classify(const std::string& input, bool as_json) {
    const LineConfiguration cfg = load_configuration(input);
    const ConfigClass cls = classify(cfg);
    if (as_json) {
        nlohmann::json j;
        j["classification"] = to_string(cls.tag);
        j["orbitDim"] = cls.orbit_dim;
        if (cls.fan) {
            j["fan"]["starLines"] = cls.fan->star_lines;
            j["fan"]["oddLine"] = cls.fan->odd_line;
            j["fan"]["oddMult"] = cls.fan->odd_mult;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "classification : " << to_string(cls.tag) << "\n";
        std::cout << "orbit dim      : " << cls.orbit_dim << "\n";
        if (cls.fan) {
            std::cout << "star lines     : [";
            for (std::size_t i = 0; i < cls.fan->star_lines.size(); ++i)
                std::cout << (i ? ", " : "") << cls.fan->star_lines[i];
            std::cout << "]\nodd line       : " << cls.fan->odd_line << " (mult " << cls.fan->odd_mult << ")\n";
        }
    }
    return kExitOk;
}

int cmd_stabilizer(const std::string& input, bool as_json) {
    const LineConfiguration cfg = load_configuration(input);
    const TruncatedSeries p = closed_form_predegree(cfg);
    const StabilizerReport st = component_count(cfg, p);
    if (as_json) {
        nlohmann::json j;
        j["classification"] = to_string(st.tag);
        j["orbitDim"] = st.orbit_dim;
        j["components"] = st.components.get_str();
        j["orbitDegree"] = st.orbit_degree.get_str();
        if (st.pencil_elements) {
            auto& arr = j["pencilElements"] = nlohmann::json::array();
            for (const auto& g : *st.pencil_elements) arr.push_back(g.str());
        }
        if (st.dual_elements) {
            auto& arr = j["dualElements"] = nlohmann::json::array();
            for (const auto& g : *st.dual_elements) arr.push_back(g.str());
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "classification : " << to_string(st.tag) << "\n";
        std::cout << "orbit dim      : " << st.orbit_dim << "\n";
        std::cout << "components     : " << st.components.get_str() << "\n";
        std::cout << "orbit degree   : " << st.orbit_degree.get_str() << "\n";
        if (st.pencil_elements) {
            std::cout << "pencil stabilizer elements (" << st.pencil_elements->size() << "):\n";
            for (const auto& g : *st.pencil_elements) std::cout << "  " << g.str() << "\n";
        }
        if (st.dual_elements) {
            std::cout << "dual-plane stabilizer elements (" << st.dual_elements->size() << "):\n";
            for (const auto& g : *st.dual_elements) std::cout << "  " << g.str() << "\n";
        }
    }
    return kExitOk;
}

int cmd_degree(const std::string& input, bool as_json) {
    const LineConfiguration cfg = load_configuration(input);
    const TruncatedSeries p = closed_form_predegree(cfg);
    const StabilizerReport st = component_count(cfg, p);
    const Int predegree = predegree_table(p)[st.orbit_dim].as_integer();
    if (as_json) {
        nlohmann::json j;
        j["orbitDim"] = st.orbit_dim;
        j["predegree"] = predegree.get_str();
        j["components"] = st.components.get_str();
        j["orbitDegree"] = st.orbit_degree.get_str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "predegree " << predegree.get_str() << ", components " << st.components.get_str()
                  << ", degree " << st.orbit_degree.get_str() << "\n";
    }
    return kExitOk;
}

int cmd_arrangement(int dim, const std::vector<std::int64_t>& mults, bool as_json) {
    const HyperplaneArrangement arr(dim, mults);
    const TruncatedSeries p = hyperplane_predegree(arr);
    const Int top = hyperplane_top_predegree(arr);
    if (as_json) {
        nlohmann::json j;
        j["dim"] = dim;
        j["mults"] = mults;
        j["cap"] = arr.series_cap();
        j["polynomial"] = series_to_json(p);
        nlohmann::json table = nlohmann::json::array();
        for (const auto& v : predegree_table(p)) table.push_back(v.as_integer().get_str());
        j["predegreeTable"] = table;
        j["topPredegree"] = top.get_str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "ambient dim    : " << dim << " (series cap " << arr.series_cap() << ")\n";
        std::cout << "polynomial     : " << p.str() << "\n";
        std::cout << "top predegree  : " << top.get_str() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact predegree polynomials and orbit-closure degrees for line configurations"};
    app.require_subcommand(1);

    std::string input, batch_dir;
    bool verify = false, as_json = false;
    unsigned cap = TruncatedSeries::kPlaneCap;
    int dim = 3;
    std::vector<std::int64_t> mults;

    auto* pre = app.add_subcommand("predegree", "adjusted predegree polynomial and predegree table");
    pre->add_option("input", input, "configuration JSON file");
    pre->add_flag("--verify", verify, "also run both excess engines and compare");
    pre->add_flag("--json", as_json, "emit JSON");
    pre->add_option("--batch", batch_dir, "process every .json file in a directory");
    pre->add_option("--cap", cap, "re-cap the reported polynomial (experiments only)");

    auto* ver = app.add_subcommand("verify", "triple-engine comparison");
    ver->add_option("input", input, "configuration JSON file")->required();
    ver->add_flag("--json", as_json, "emit JSON");

    auto* cls = app.add_subcommand("classify", "small-orbit classification");
    cls->add_option("input", input, "configuration JSON file")->required();
    cls->add_flag("--json", as_json, "emit JSON");

    auto* stab = app.add_subcommand("stabilizer", "component count and enumerated stabilizer");
    stab->add_option("input", input, "configuration JSON file")->required();
    stab->add_flag("--json", as_json, "emit JSON");

    auto* deg = app.add_subcommand("degree", "orbit-closure degree = predegree / components");
    deg->add_option("input", input, "configuration JSON file")->required();
    deg->add_flag("--json", as_json, "emit JSON");

    auto* arr = app.add_subcommand("arrangement", "transversal hyperplane arrangement in P^n");
    arr->add_option("--dim", dim, "ambient dimension n")->required();
    arr->add_option("--mults", mults, "comma-separated hyperplane multiplicities")
        ->required()
        ->delimiter(',');
    arr->add_flag("--json", as_json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pre->parsed()) {
            if (!batch_dir.empty()) return cmd_batch(batch_dir, verify, as_json, cap);
            if (input.empty()) {
                std::cerr << "predegree needs an input file (or --batch DIR)\n";
                return kExitInput;
            }
            return cmd_predegree(input, verify, as_json, cap);
        }
        if (ver->parsed()) return cmd_verify(input, as_json);
        if (cls->parsed()) return cmd_classify(input, as_json);
        if (stab->parsed()) return cmd_stabilizer(input, as_json);
        if (deg->parsed()) return cmd_degree(input, as_json);
        if (arr->parsed()) return cmd_arrangement(dim, mults, as_json);
    } catch (const NeedsCoordinates& e) {
        std::cerr << "error: " << e.what()
                  << "\nhint: supply exact line coefficients; stabilizers of stars, fans and general "
                     "configurations depend on the positions, not just the incidence\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
