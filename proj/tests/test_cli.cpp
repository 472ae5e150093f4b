#include "commands.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

using namespace uqs;
using namespace uqs::cli;

namespace {

RunConfig config(const std::string& type, int m, const std::string& element = "") {
    RunConfig c;
    c.type = type;
    c.m = m;
    c.element = element;
    return c;
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Sweep, CountsMatchWeylGroupOrder) {
    EXPECT_EQ(run_command("sweep", config("A1", 3)).certificates.size(), 2u);
    EXPECT_EQ(run_command("sweep", config("A2", 3)).certificates.size(), 6u);
    RunConfig classes = config("A2", 3);
    classes.mode = "classes";
    auto r = run_command("sweep", classes);
    ASSERT_EQ(r.certificates.size(), 3u);
    EXPECT_EQ(r.certificates[0].subject, "A2 e");
}

TEST(Sweep, B2AtFiveAllPass) {
    auto r = run_command("sweep", config("B2", 5));
    EXPECT_EQ(r.certificates.size(), 8u);
    for (const auto& c : r.certificates) EXPECT_EQ(c.verdict(), Status::pass) << c.subject;
    EXPECT_EQ(r.exit_status(), 0);
}

TEST(Sweep, DeterministicAcrossJobCounts) {
    RunConfig a = config("B2", 3), b = a;
    b.jobs = 2;
    EXPECT_EQ(report_to_json(run_command("sweep", a), false).dump(), report_to_json(run_command("sweep", b), false).dump());
}

TEST(Report, RoundTrip) {
    Report r = run_command("sweep", config("A2", 3));
    json j = report_to_json(r);
    EXPECT_EQ(report_to_json(report_from_json(j)).dump(), j.dump());
    json bad = j;
    bad["certificates"][0]["verdict"] = "counterexample";
    EXPECT_THROW(report_from_json(bad), InvalidArgument);
}

TEST(Report, ExitPolicy) {
    Report empty;
    EXPECT_EQ(empty.exit_status(), 0);
    EXPECT_TRUE(report_to_json(empty)["certificates"].empty());

    Report r;
    Certificate c;
    c.add("a", Status::pass);
    c.add("b", Status::rejected);
    r.certificates.push_back(c);
    EXPECT_EQ(c.verdict(), Status::rejected);
    EXPECT_EQ(r.exit_status(), 0);
    r.certificates.back().add("c", Status::counterexample);
    EXPECT_EQ(r.exit_status(), 1);
    EXPECT_NE(summary_table(r).find("counterexample"), std::string::npos);
}

TEST(Scalars, RoundTrip) {
    for (const Cyc& x : {Cyc(3), Cyc(Rational(-1, 8)), Cyc::root_power(5, 2) * Cyc(7) + Cyc(1)})
        EXPECT_EQ(parse_scalar(json(scalar_string(x))), x);
    EXPECT_EQ(parse_scalar(json(4)), Cyc(4));
    EXPECT_THROW(parse_scalar(json(0.5)), InvalidArgument);
}

TEST(Eta, JsonRoundTrip) {
    RootSystem rs(CartanDatum::from_type("A2"));
    auto ctx = whittaker_context(rs, adapted_ordering(rs, rs.parse_element("s1 s2")), 3);
    std::vector<Cyc> c = {Cyc(2), Cyc(3)};
    auto eta = slice_character(ctx, c, {Cyc(8), Cyc(Rational(1, 8))});
    auto back = eta_from_json(ctx, eta_to_json(eta), nullptr);
    EXPECT_EQ(back.values_x_minus, eta.values_x_minus);
    EXPECT_EQ(back.values_x_plus, eta.values_x_plus);
    EXPECT_EQ(back.values_l, eta.values_l);
    EXPECT_THROW(eta_from_json(ctx, json{{"l", {"1"}}}, nullptr), InvalidArgument);
    EXPECT_THROW(eta_from_json(ctx, json{{"l", {"1", "1"}}, {"x_minus", {{"(2,2)", "1"}}}}, nullptr), InvalidArgument);
}

TEST(Config, MergeAndValidate) {
    RunConfig c;
    c.merge(json{{"type", "B2"}, {"m", 5}, {"element", "s1"}, {"l", {"8", 1}}});
    EXPECT_EQ(c.type, "B2");
    EXPECT_EQ(c.m, 5);
    EXPECT_EQ(c.l_values, (std::vector<std::string>{"8", "1"}));
    EXPECT_THROW(c.merge(json{{"colour", 1}}), InvalidArgument);
    c.m = 4;
    EXPECT_THROW(c.validate(), InvalidArgument);
    c.m = 5;
    c.budget_dim = 0;
    EXPECT_THROW(c.validate(), InvalidArgument);
}

TEST(VerifyDkp, A1CertificateFields) {
    RunConfig c = config("A1", 3, "s1");
    c.l_values = {"8"};
    c.c_values = {"1"};
    auto cert = run_command("verify dkp", c).certificates.at(0);
    EXPECT_EQ(cert.verdict(), Status::pass);
    EXPECT_EQ(cert.data["divisibility"], true);
    EXPECT_EQ(cert.data["rank_identity"], true);
    EXPECT_EQ(cert.data["wq_dim"], 3);
    EXPECT_TRUE(cert.data["hypotheses"]["torus"].get<bool>());
}

TEST(VerifyDkp, OffSliceIsRejectedNotCounterexample) {
    RunConfig c = config("A1", 3, "s1");
    c.eta_path = temp_file("eta_off.json", R"j({"l": ["8"], "x_minus": {"(1)": "0"}})j");
    c.c_values = {"1"};
    auto r = run_command("verify dkp", c);
    EXPECT_EQ(r.certificates.at(0).verdict(), Status::rejected);
    EXPECT_EQ(r.exit_status(), 0);
}

TEST(VerifyDkp, TorusViolationHasWitness) {
    RunConfig c = config("A2", 3, "s1 s2");
    c.l_values = {"8", "1/8"};
    c.c_values = {"1", "1"};
    auto cert = run_command("verify dkp", c).certificates.at(0);
    EXPECT_EQ(cert.verdict(), Status::rejected);
    EXPECT_FALSE(cert.data["hypotheses"]["torus"].get<bool>());
    EXPECT_EQ(cert.data["hypotheses"]["torus_witnesses"].size(), 1u);
}

TEST(VerifyDkp, MissingChiIsAUsageError) {
    RunConfig c = config("A1", 3, "s1");
    c.l_values = {"8"};
    EXPECT_THROW(run_command("verify dkp", c), InvalidArgument);
}

TEST(Walg, A1) {
    RunConfig c = config("A1", 3, "s1");
    c.chi_path = temp_file("chi.json", R"({"c": ["1"]})");
    c.l_values = {"8"};
    auto cert = run_command("walg", c).certificates.at(0);
    EXPECT_EQ(cert.verdict(), Status::pass);
    EXPECT_EQ(cert.data["dim_q"], 9);
    EXPECT_EQ(cert.data["dim_w"], 3);
}

TEST(Commands, SingleCertificates) {
    EXPECT_EQ(run_command("roots", config("G2", 7)).certificates.at(0).data["num_positive"], 6);
    EXPECT_EQ(run_command("ordering", config("B2", 3, "s1 s2")).certificates.at(0).verdict(), Status::pass);
    EXPECT_EQ(run_command("relations", config("A2", 5, "s1 s2")).certificates.at(0).verdict(), Status::pass);
    auto u = run_command("ueta", config("A1", 3)).certificates.at(0);
    EXPECT_EQ(u.data["dim"], 27);
    EXPECT_EQ(u.data["frobenius_rank"], 27);
    EXPECT_THROW(run_command("nonsense", config("A1", 3)), InvalidArgument);
}
