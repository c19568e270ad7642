#include "parlat/json_io.hpp"

#include <stdexcept>

namespace parlat {

namespace {

std::string dec_to_string(Decoration d) {
    switch (d) {
        case Decoration::Minus: return "-";
        case Decoration::Plus: return "+";
        default: return "";
    }
}

Decoration dec_from_string(const std::string& s) {
    if (s == "-") return Decoration::Minus;
    if (s == "+") return Decoration::Plus;
    if (s.empty()) return Decoration::Exact;
    throw std::invalid_argument("bad decoration '" + s + "'");
}

}  // namespace

Json exponent_to_json(const EnrichedExponent& e) {
    Json j;
    if (e.base.is_infinite()) {
        j["num"] = 1;
        j["den"] = 0;
    } else {
        const Rational p = e.base.p();
        j["num"] = p.numerator();
        j["den"] = p.denominator();
    }
    j["dec"] = dec_to_string(e.dec);
    return j;
}

EnrichedExponent exponent_from_json(const Json& j) {
    const std::int64_t num = j.at("num").get<std::int64_t>();
    const std::int64_t den = j.at("den").get<std::int64_t>();
    const Decoration dec = dec_from_string(j.value("dec", ""));
    if (den == 0) return EnrichedExponent{Exponent::infinity(), dec};
    return EnrichedExponent::from_p(Rational(num, den), dec);
}

Json space_to_json(const SpacePoint& s) {
    Json j;
    switch (s.kind) {
        case SpaceKind::Chain: j["variant"] = "chain"; break;
        case SpaceKind::Square: j["variant"] = "square"; break;
        case SpaceKind::Amalgam: j["variant"] = "amalgam"; break;
    }
    j["local"] = exponent_to_json(s.local);
    j["global"] = exponent_to_json(s.global);
    j["text"] = format_space(s);
    return j;
}

SpacePoint space_from_json(const Json& j) {
    const std::string variant = j.at("variant").get<std::string>();
    const EnrichedExponent local = exponent_from_json(j.at("local"));
    if (variant == "chain") return SpacePoint::chain(local);
    const EnrichedExponent global = exponent_from_json(j.at("global"));
    if (variant == "square") return SpacePoint::square(local, global);
    if (variant == "amalgam") return SpacePoint::amalgam(local, global);
    throw std::invalid_argument("bad space variant '" + variant + "'");
}

Json relation_to_json(const FiniteRelationAlgebra& a) {
    Json j;
    j["n"] = a.n;
    j["involution"] = a.involution;
    j["unit"] = a.unit;
    std::vector<std::vector<int>> gamma(a.n, std::vector<int>(a.n, 0));
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y) gamma[x][y] = a.gamma(x, y) ? 1 : 0;
    j["gamma"] = gamma;
    return j;
}

FiniteRelationAlgebra relation_from_json(const Json& j) {
    return FiniteRelationAlgebra(
        j.at("n").get<int>(), j.at("involution").get<std::vector<int>>(),
        j.at("gamma").get<std::vector<std::vector<int>>>(), j.at("unit").get<int>());
}

Json galois_report_to_json(const GaloisLawReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json jc;
        jc["check"] = c.name;
        jc["pass"] = c.pass;
        if (!c.pass) jc["counterexample"] = c.counterexample;
        checks.push_back(jc);
    }
    return Json{{"pass", report.pass}, {"checks", checks}};
}

Json tightness_report_to_json(const TightnessReport& report) {
    Json members = Json::array();
    for (const auto& m : report.members)
        members.push_back(Json{{"set", subset_elements(m.set)}, {"dense", m.dense}});
    Json reached = Json::array();
    for (Subset s : report.reached) reached.push_back(subset_elements(s));
    return Json{{"tight", report.tight},
                {"universal", subset_elements(report.universal)},
                {"reached", reached},
                {"members", members}};
}

Json inequality_report_to_json(const InequalityReport& report) {
    return Json{{"check", report.check},
                {"lhs", report.lhs},
                {"rhs", report.rhs},
                {"ratio", report.ratio()},
                {"pass", report.pass}};
}

Json grid_to_json(const GridFunction& f) {
    Json values = Json::array();
    for (const auto& v : f.values) values.push_back(Json::array({v.real(), v.imag()}));
    Json j;
    j["domain"] = f.domain == Domain::UnitInterval ? "unit" : "window";
    if (f.domain == Domain::RealWindow) j["T"] = f.halfwidth;
    j["resolution"] = f.resolution;
    j["values"] = values;
    return j;
}

GridFunction grid_from_json(const Json& j) {
    const std::string domain = j.at("domain").get<std::string>();
    const int resolution = j.at("resolution").get<int>();
    GridFunction f = domain == "unit"
                         ? GridFunction::unit_interval(resolution)
                         : GridFunction::real_window(j.at("T").get<int>(), resolution);
    const Json& values = j.at("values");
    if (values.size() != f.values.size())
        throw std::invalid_argument("grid value count does not match domain/resolution");
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (values[i].is_array())
            f.values[i] = {values[i].at(0).get<double>(), values[i].at(1).get<double>()};
        else
            f.values[i] = values[i].get<double>();
    }
    return f;
}

HilbertScale scale_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    const int dim = j.at("dim").get<int>();
    const Json& w = j.at("weights");
    if (w.is_string()) {
        const std::string kind = w.get<std::string>();
        if (kind == "linear") return HilbertScale::make(n, dim, WeightKind::Linear);
        if (kind == "quadratic") return HilbertScale::make(n, dim, WeightKind::Quadratic);
        if (kind == "exponential")
            return HilbertScale::make(n, dim, WeightKind::Exponential);
        throw std::invalid_argument("bad weight kind '" + kind + "'");
    }
    return HilbertScale::make(n, dim, WeightKind::Custom, w.get<std::vector<double>>());
}

ScaleOperator operator_from_json(const Json& j, const HilbertScale& scale) {
    const double cap = j.value("cap", 10.0);
    ScaleOperator op;
    op.declared_order = j.value("order", 0);
    op.bound_cap = cap;
    if (j.contains("diagonal")) {
        const auto d = j.at("diagonal").get<std::vector<double>>();
        if (static_cast<int>(d.size()) != scale.dim)
            throw std::invalid_argument("diagonal length mismatch");
        op.matrix = Eigen::MatrixXcd::Zero(scale.dim, scale.dim);
        for (int k = 0; k < scale.dim; ++k) op.matrix(k, k) = d[k];
        return op;
    }
    if (j.contains("shift")) {
        op.matrix = ScaleOperator::shift(scale, j.at("shift").get<int>(), cap).matrix;
        return op;
    }
    const Json& m = j.at("matrix");
    if (static_cast<int>(m.size()) != scale.dim * scale.dim)
        throw std::invalid_argument("matrix must have dim*dim [re,im] entries");
    op.matrix = Eigen::MatrixXcd::Zero(scale.dim, scale.dim);
    for (int r = 0; r < scale.dim; ++r)
        for (int c = 0; c < scale.dim; ++c) {
            const Json& cell = m[static_cast<std::size_t>(r) * scale.dim + c];
            op.matrix(r, c) = {cell.at(0).get<double>(), cell.at(1).get<double>()};
        }
    return op;
}

}  // namespace parlat
