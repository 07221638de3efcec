#include "qrngkit/report.hpp"

#include <iomanip>
#include <sstream>

namespace qrngkit::sp90b {

namespace {

using nlohmann::json;

const char* axis_name(GroupAxis axis) { return axis == GroupAxis::row ? "row" : "column"; }

GroupAxis axis_from_name(const std::string& name) {
    if (name == "row") return GroupAxis::row;
    if (name == "column") return GroupAxis::column;
    throw std::invalid_argument("report_from_json: unknown axis '" + name + "'");
}

json to_json(const GroupId& id) {
    return json{{"axis", axis_name(id.axis)}, {"index", id.index}};
}

GroupId group_id_from_json(const json& j) {
    return GroupId{axis_from_name(j.at("axis").get<std::string>()), j.at("index").get<size_t>()};
}

json to_json(const TestAggregate& agg) {
    return json{{"median_p", agg.median_p},
                {"min_p", agg.min_p},
                {"below_threshold", agg.below_threshold},
                {"threshold", agg.threshold},
                {"all_above_threshold", agg.all_above_threshold}};
}

TestAggregate aggregate_from_json(const json& j) {
    TestAggregate agg;
    agg.median_p = j.at("median_p").get<double>();
    agg.min_p = j.at("min_p").get<double>();
    agg.below_threshold = j.at("below_threshold").get<size_t>();
    agg.threshold = j.at("threshold").get<double>();
    agg.all_above_threshold = j.at("all_above_threshold").get<bool>();
    return agg;
}

}  // namespace

json report_to_json(const BatteryReport& report) {
    json groups = json::array();
    for (const GroupStats& g : report.groups) {
        groups.push_back(json{{"id", to_json(g.id)},
                              {"length", g.length},
                              {"mcv", g.mcv},
                              {"chi2_independence", g.chi2_independence},
                              {"p_independence", g.p_independence},
                              {"chi2_gf", g.chi2_gf},
                              {"p_gf", g.p_gf},
                              {"lrs_length", g.lrs_len},
                              {"p_lrs", g.p_lrs}});
    }
    return json{{"rows", report.rows},
                {"cols", report.cols},
                {"group_count", report.group_count},
                {"sanity",
                 json{{"global_mcv", report.sanity.global_mcv},
                      {"min_entropy", report.sanity.min_entropy},
                      {"p_value", report.sanity.p_value},
                      {"pass", report.sanity.pass},
                      {"worst_group", to_json(report.sanity.worst_group)},
                      {"worst_group_length", report.sanity.worst_group_length},
                      {"threshold", kSanityThreshold}}},
                {"tests",
                 json{{"independence", to_json(report.independence)},
                      {"goodness_of_fit", to_json(report.goodness_of_fit)},
                      {"lrs", to_json(report.lrs)}}},
                {"groups", std::move(groups)}};
}

BatteryReport report_from_json(const json& j) {
    BatteryReport report;
    report.rows = j.at("rows").get<size_t>();
    report.cols = j.at("cols").get<size_t>();
    report.group_count = j.at("group_count").get<size_t>();

    const json& sanity = j.at("sanity");
    report.sanity.global_mcv = sanity.at("global_mcv").get<uint64_t>();
    report.sanity.min_entropy = sanity.at("min_entropy").get<double>();
    report.sanity.p_value = sanity.at("p_value").get<double>();
    report.sanity.pass = sanity.at("pass").get<bool>();
    report.sanity.worst_group = group_id_from_json(sanity.at("worst_group"));
    report.sanity.worst_group_length = sanity.at("worst_group_length").get<size_t>();

    const json& tests = j.at("tests");
    report.independence = aggregate_from_json(tests.at("independence"));
    report.goodness_of_fit = aggregate_from_json(tests.at("goodness_of_fit"));
    report.lrs = aggregate_from_json(tests.at("lrs"));

    for (const json& gj : j.at("groups")) {
        GroupStats g;
        g.id = group_id_from_json(gj.at("id"));
        g.length = gj.at("length").get<size_t>();
        g.mcv = gj.at("mcv").get<uint64_t>();
        g.chi2_independence = gj.at("chi2_independence").get<double>();
        g.p_independence = gj.at("p_independence").get<double>();
        g.chi2_gf = gj.at("chi2_gf").get<double>();
        g.p_gf = gj.at("p_gf").get<double>();
        g.lrs_len = gj.at("lrs_length").get<uint64_t>();
        g.p_lrs = gj.at("p_lrs").get<double>();
        report.groups.push_back(std::move(g));
    }
    return report;
}

std::string report_to_csv(const BatteryReport& report) {
    std::ostringstream out;
    out << std::setprecision(9);
    out << "test,mcv,min_entropy,median_p,min_p,below_threshold,threshold,pass\n";
    out << "sanity," << report.sanity.global_mcv << ',' << report.sanity.min_entropy << ",,"
        << report.sanity.p_value << ",," << kSanityThreshold << ','
        << (report.sanity.pass ? 1 : 0) << '\n';
    auto iid_row = [&](const char* name, const TestAggregate& agg) {
        out << name << ",,," << agg.median_p << ',' << agg.min_p << ',' << agg.below_threshold
            << ',' << agg.threshold << ',' << (agg.all_above_threshold ? 1 : 0) << '\n';
    };
    iid_row("independence", report.independence);
    iid_row("goodness_of_fit", report.goodness_of_fit);
    iid_row("lrs", report.lrs);
    return out.str();
}

}  // namespace qrngkit::sp90b
