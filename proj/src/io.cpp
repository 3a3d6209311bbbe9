#include "linorb/io.hpp"

#include <fstream>
#include <sstream>

#include "linorb/errors.hpp"

namespace linorb {

namespace {

Rational rational_field(const nlohmann::json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const Error& e) {
            throw Error(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    throw Error(where + ": expected an exact rational string or integer, got " + j.dump());
}

std::int64_t mult_field(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw Error(where + ": multiplicity must be an integer, got " + j.dump());
    const auto m = j.get<std::int64_t>();
    if (m < 1) throw InvalidMultiplicity(where + ": multiplicity " + std::to_string(m) + " is below 1");
    return m;
}

}  // namespace

LineConfiguration parse_configuration(const nlohmann::json& j) {
    if (!j.is_object()) throw Error("configuration must be a JSON object");

    if (j.contains("lines")) {
        const auto& arr = j.at("lines");
        if (!arr.is_array() || arr.empty()) throw Error("\"lines\" must be a non-empty array");
        std::vector<RationalLine> lines;
        std::vector<std::int64_t> mults;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string where = "lines[" + std::to_string(i) + "]";
            const auto& entry = arr[i];
            if (!entry.is_object() || !entry.contains("coeffs"))
                throw Error(where + ": expected {\"coeffs\": [a,b,c], \"mult\": r}");
            const auto& cs = entry.at("coeffs");
            if (!cs.is_array() || cs.size() != 3) throw Error(where + ".coeffs: expected exactly 3 entries");
            lines.push_back(RationalLine::from_rationals(rational_field(cs[0], where + ".coeffs[0]"),
                                                         rational_field(cs[1], where + ".coeffs[1]"),
                                                         rational_field(cs[2], where + ".coeffs[2]")));
            mults.push_back(entry.contains("mult") ? mult_field(entry.at("mult"), where + ".mult") : 1);
        }
        return LineConfiguration::from_coordinates(std::move(lines), std::move(mults));
    }

    if (j.contains("abstract")) {
        const auto& a = j.at("abstract");
        if (!a.is_object() || !a.contains("mults"))
            throw Error("\"abstract\" must be an object with \"mults\" (and optional \"bundles\")");
        std::vector<std::int64_t> mults;
        for (std::size_t i = 0; i < a.at("mults").size(); ++i)
            mults.push_back(mult_field(a.at("mults")[i], "abstract.mults[" + std::to_string(i) + "]"));
        std::vector<std::vector<int>> bundles;
        if (a.contains("bundles")) {
            for (const auto& b : a.at("bundles")) {
                if (!b.is_array()) throw Error("abstract.bundles entries must be arrays of line indices");
                bundles.push_back(b.get<std::vector<int>>());
            }
        }
        const std::size_t n = mults.size();
        return LineConfiguration::from_incidence(n, std::move(mults), bundles);
    }

    throw Error("configuration needs a \"lines\" or \"abstract\" key");
}

LineConfiguration load_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(path + ": " + e.what());
    }
    return parse_configuration(j);
}

nlohmann::json series_to_json(const TruncatedSeries& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : s.coeffs()) arr.push_back(c.str());
    return arr;
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw Error("series must be a non-empty JSON array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_field(c, "series coefficient"));
    const auto cap = static_cast<unsigned>(coeffs.size() - 1);
    return TruncatedSeries(cap, std::move(coeffs));
}

nlohmann::json report_to_json(const Report& r) {
    nlohmann::json j;
    j["classification"] = r.classification;
    j["orbitDim"] = r.orbit_dim;
    if (r.formal) j["formal"] = true;
    j["polynomial"] = series_to_json(r.polynomial);
    nlohmann::json table = nlohmann::json::array();
    for (const auto& v : r.predegrees) table.push_back(v.get_str());
    j["predegreeTable"] = table;
    if (r.components) j["components"] = r.components->get_str();
    if (r.orbit_degree) j["orbitDegree"] = r.orbit_degree->get_str();
    if (r.engine_agreement) j["engineAgreement"] = *r.engine_agreement;
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.classification = j.at("classification").get<std::string>();
    r.orbit_dim = j.at("orbitDim").get<int>();
    r.polynomial = series_from_json(j.at("polynomial"));
    for (const auto& v : j.at("predegreeTable")) r.predegrees.push_back(Int(v.get<std::string>()));
    if (j.contains("components")) r.components = Int(j.at("components").get<std::string>());
    if (j.contains("orbitDegree")) r.orbit_degree = Int(j.at("orbitDegree").get<std::string>());
    if (j.contains("engineAgreement")) r.engine_agreement = j.at("engineAgreement").get<bool>();
    return r;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "classification : " << r.classification << "\n";
    os << "orbit dim      : " << r.orbit_dim << "\n";
    os << "polynomial     : " << r.polynomial.str() << "\n";
    os << "predegree table: [";
    for (std::size_t i = 0; i < r.predegrees.size(); ++i) os << (i ? ", " : "") << r.predegrees[i].get_str();
    os << "]\n";
    if (r.components) os << "components     : " << r.components->get_str() << "\n";
    if (r.orbit_degree) os << "orbit degree   : " << r.orbit_degree->get_str() << "\n";
    if (r.engine_agreement)
        os << "engines        : " << (*r.engine_agreement ? "agree" : "DISAGREE") << "\n";
    return os.str();
}

}  // namespace linorb
