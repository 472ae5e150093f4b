#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <set>
#include <thread>

namespace uqs::cli {

namespace {

using Clock = std::chrono::steady_clock;

// Runs one check, mapping library exceptions to statuses: unmet hypotheses are rejections, failed
// structural identities are counterexamples, exhausted budgets are skips.
void guarded(Certificate& cert, const std::string& name, const std::function<void()>& body) {
    try {
        body();
    } catch (const PreconditionRejected& e) {
        cert.add(name, Status::rejected, e.what());
    } catch (const SpecializationError& e) {
        cert.add(name, Status::rejected, e.what());
    } catch (const InvalidArgument& e) {
        cert.add(name, Status::rejected, e.what());
    } catch (const BudgetExceeded& e) {
        cert.add(name, Status::skipped, e.what());
    } catch (const NotSplit& e) {
        cert.add(name, Status::skipped, e.what());
    } catch (const Defect& e) {
        cert.add(name, Status::counterexample, e.what());
    } catch (const std::exception& e) {
        cert.add(name, Status::counterexample, std::string("internal error: ") + e.what());
    }
}

Status pass_if(bool ok) { return ok ? Status::pass : Status::counterexample; }

json roots_json(const std::vector<Root>& roots) {
    json out = json::array();
    for (const auto& r : roots) out.push_back(root_to_string(r));
    return out;
}

json qmatrix_json(const QMatrix& a) {
    json out = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j).get_str());
        out.push_back(row);
    }
    return out;
}

WeylElement element_of(const RootSystem& rs, const RunConfig& cfg) { return rs.parse_element(cfg.element); }

std::string element_label(const RootSystem& rs, const WeylElement& s) {
    IntVec w = rs.reduced_word(s);
    if (w.empty()) return "e";
    std::string out;
    for (size_t k = 0; k < w.size(); ++k) out += (k ? " s" : "s") + std::to_string(w[k] + 1);
    return out;
}

Certificate start(const RunConfig& cfg, const std::string& subject) {
    Certificate c;
    c.subject = subject;
    c.inputs = cfg.to_json();
    return c;
}

void finish(Certificate& c, Clock::time_point t0) {
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Cyc> parse_list(const std::vector<std::string>& values) {
    std::vector<Cyc> out;
    for (const auto& v : values) out.push_back(parse_scalar(json(v)));
    return out;
}

std::vector<Cyc> chi_values(const RunConfig& cfg, bool* given) {
    *given = true;
    if (!cfg.c_values.empty()) return parse_list(cfg.c_values);
    if (!cfg.chi_path.empty()) {
        json j = load_json_file(cfg.chi_path);
        std::vector<Cyc> out;
        for (const auto& v : j.at("c")) out.push_back(parse_scalar(v));
        return out;
    }
    *given = false;
    return {};
}

CentralCharacter load_eta(const RunConfig& cfg, const WhittakerContext& ctx, const std::vector<Cyc>* c) {
    json j;
    if (!cfg.eta_path.empty()) j = load_json_file(cfg.eta_path);
    else if (!cfg.l_values.empty()) j = {{"l", cfg.l_values}};
    else throw InvalidArgument("eta is required: pass --eta FILE or --l VALUES");
    return eta_from_json(ctx, j, c);
}

Root parse_root(const std::string& text) {
    static const std::regex number("-?[0-9]+");
    Root r;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it)
        r.push_back(std::stoi(it->str()));
    return r;
}

std::vector<CycModule> test_modules(const WhittakerData& w, const RunConfig& cfg, json& sources) {
    const UEta& u = w.u;
    std::vector<CycModule> out;
    if (u.algebra.dim() <= cfg.budget_dim) {
        try {
            for (auto& v : simple_modules(u.algebra, cfg.m, cfg.budget_dim)) {
                sources.push_back("simple");
                out.push_back(std::move(v));
            }
            return out;
        } catch (const NotSplit&) {
        }
    }
    std::vector<std::vector<Cyc>> roots;
    for (const auto& l : u.eta.values_l) {
        roots.push_back(mth_roots(l, cfg.m));
        if (roots.back().empty()) throw NotSplit("eta(l_i) = " + scalar_string(l) + " has no m-th root in Q(e)");
    }
    std::vector<size_t> idx(roots.size(), 0);
    while (true) {
        std::vector<Cyc> lambda;
        for (size_t i = 0; i < roots.size(); ++i) lambda.push_back(roots[i][idx[i]]);
        CycModule z = baby_verma(u, lambda);
        out.push_back(baby_verma_head(z));
        sources.push_back("baby Verma head");
        out.push_back(std::move(z));
        sources.push_back("baby Verma");
        size_t i = 0;
        while (i < idx.size() && ++idx[i] == roots[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return out;
}

json freeness_json(const FreenessVerdict& v) {
    json jordan = json::array(), mult = json::array();
    for (const auto& j : v.jordan)
        jordan.push_back({{"beta", root_to_string(j.beta)}, {"ranks", j.ranks}, {"all_blocks_size_m", j.all_blocks_size_m}});
    for (const auto& mp : v.multiplicities)
        mult.push_back({{"gamma", root_to_string(mp.gamma)}, {"multiplicities", mp.multiplicities}, {"equal", mp.equal}});
    return {{"dim", v.dim_v},
            {"dim_v_chi", v.dim_v_chi},
            {"divisor", v.divisor},
            {"divisibility", v.divisibility},
            {"rank_identity", v.rank_identity},
            {"jordan", jordan},
            {"multiplicities", mult},
            {"pass", v.pass()}};
}

struct Hypotheses {
    WhittakerContext ctx;
    std::optional<WhittakerData> w;
    std::optional<NilpotentSubalgebraData> nd;
    std::optional<WhittakerCharacter> chi;
};

// Builds the context and checks every hypothesis; returns false (with a rejected check) when one fails.
bool establish(Certificate& cert, const RunConfig& cfg, Hypotheses& h) {
    bool given = false;
    std::vector<Cyc> c = chi_values(cfg, &given);
    if (!given) throw InvalidArgument("chi is required: pass --chi FILE or --c VALUES");
    CentralCharacter eta = load_eta(cfg, h.ctx, given ? &c : nullptr);
    json hyp;
    bool ok = true;
    guarded(cert, "hypotheses", [&] {
        eta.validate(h.ctx.rs);
        h.w.emplace(whittaker_data(h.ctx, eta));
        auto violations = slice_violations(*h.w);
        hyp["slice"] = violations.empty();
        hyp["slice_violations"] = violations;
        auto torus = check_torus_genericity(h.ctx, eta);
        hyp["torus"] = torus.holds;
        json wit = json::array();
        for (const auto& t : torus.witnesses)
            wit.push_back({{"alpha", root_to_string(t.alpha)}, {"value", scalar_string(t.value)}, {"k", t.k}});
        hyp["torus_witnesses"] = wit;
        hyp["y_weights_separated"] = check_Y_weights_separated(h.ctx.rs, h.ctx.ao, cfg.m).holds;
        if (!violations.empty()) throw PreconditionRejected("eta is off the slice: " + violations.front());
        if (!torus.holds)
            throw PreconditionRejected("torus genericity fails at alpha = " + root_to_string(torus.witnesses[0].alpha));
        h.nd.emplace(build_m_minus(*h.w));
        h.chi.emplace(validate_chi(*h.w, *h.nd, c));
        hyp["chi"] = true;
        cert.add("hypotheses", Status::pass);
    });
    cert.data["hypotheses"] = hyp;
    if (cert.checks.back().status != Status::pass) ok = false;
    return ok;
}

WhittakerContext make_context(const RunConfig& cfg, const RootSystem& rs) {
    return whittaker_context(rs, adapted_ordering(rs, element_of(rs, cfg), {cfg.budget_search}), cfg.m);
}

}  // namespace

RootSystem make_root_system(const RunConfig& cfg) {
    CartanDatum cd = cfg.cartan ? CartanDatum::from_matrix(*cfg.cartan) : CartanDatum::from_type(cfg.type);
    cd.validate();
    return RootSystem(cd);
}

std::string scalar_string(const Cyc& x) {
    return x.is_rational() ? x.rational_value().get_str() : x.to_string();
}

Cyc parse_scalar(const json& value) {
    if (value.is_number_integer()) return Cyc(value.get<long>());
    if (value.is_string()) return Cyc::parse(value.get<std::string>());
    throw InvalidArgument("scalar must be an integer or an exact string, got " + value.dump());
}

CentralCharacter eta_from_json(const WhittakerContext& ctx, const json& j, const std::vector<Cyc>* c) {
    if (j.contains("m") && j["m"].get<int>() != ctx.m) throw InvalidArgument("eta file is for a different m");
    std::vector<Cyc> l;
    for (const auto& v : j.at("l")) l.push_back(parse_scalar(v));
    if (static_cast<int>(l.size()) != ctx.rs.rank()) throw InvalidArgument("eta needs one l-value per simple root");
    CentralCharacter eta;
    if (!j.contains("x_minus") && c) {
        eta = slice_character(ctx, *c, l);
    } else {
        eta = CentralCharacter::restricted(ctx.rs, ctx.m);
        eta.values_l = l;
    }
    for (const char* key : {"x_minus", "x_plus"}) {
        if (!j.contains(key)) continue;
        auto& target = std::string(key) == "x_minus" ? eta.values_x_minus : eta.values_x_plus;
        for (const auto& [root, value] : j[key].items()) {
            Root r = parse_root(root);
            if (!target.count(r)) throw InvalidArgument("eta key '" + root + "' is not a positive root");
            target[r] = parse_scalar(value);
        }
    }
    eta.validate(ctx.rs);
    return eta;
}

json eta_to_json(const CentralCharacter& eta) {
    json j = {{"m", eta.m}};
    j["l"] = json::array();
    for (const auto& v : eta.values_l) j["l"].push_back(scalar_string(v));
    for (const auto& [key, values] : {std::pair{"x_minus", &eta.values_x_minus}, std::pair{"x_plus", &eta.values_x_plus}}) {
        json m = json::object();
        for (const auto& [r, v] : *values) m[root_to_string(r)] = scalar_string(v);
        j[key] = m;
    }
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
}

int slice_dimension(const RootSystem& rs, const AdaptedOrdering& ao) {
    const WeylElement& s = ao.system.element;
    int fixed_roots = 0;
    for (const auto& r : rs.positive_roots()) fixed_roots += s.apply(r) == r;
    return rs.rank() - moved_rank(rs, s) + 2 * fixed_roots + rs.length(s);
}

Certificate run_roots(const RunConfig& cfg) {
    auto t0 = Clock::now();
    RootSystem rs = make_root_system(cfg);
    Certificate c = start(cfg, rs.datum().name());
    c.data = {{"cartan", rs.datum().a},
              {"d", rs.datum().d},
              {"num_positive", rs.num_positive()},
              {"positive_roots", roots_json(rs.positive_roots())},
              {"longest_word", element_label(rs, rs.longest_element())}};
    guarded(c, "root_system", [&] {
        int D = rs.num_positive();
        c.add("root_system", pass_if(rs.length(rs.longest_element()) == D));
    });
    finish(c, t0);
    return c;
}

namespace {

void carter_checks(Certificate& c, const RootSystem& rs, const WeylElement& s, int m) {
    guarded(c, "cayley_closed_form", [&] {
        CarterDecomposition cd = carter_decompose(rs, s);
        validate_decomposition(rs, cd);
        c.data["gammas1"] = roots_json(cd.gammas1);
        c.data["gammas2"] = roots_json(cd.gammas2);
        c.data["l_prime"] = cd.l_prime;
        if (cd.l_prime != moved_rank(rs, s)) throw Defect("l' differs from rank(1 - s)");
        if (cd.l_prime == 0) {
            c.add("cayley_closed_form", Status::pass, "no gammas");
            return;
        }
        QMatrix lhs = cayley_matrix(rs, cd), rhs = cayley_closed_form(rs, cd);
        c.data["cayley_matrix"] = qmatrix_json(lhs);
        json witness = nullptr;
        for (int i = 0; i < lhs.rows() && witness.is_null(); ++i)
            for (int j = 0; j < lhs.cols(); ++j)
                if (lhs(i, j) != rhs(i, j)) {
                    witness = {{"i", i + 1}, {"j", j + 1}, {"computed", lhs(i, j).get_str()}, {"closed_form", rhs(i, j).get_str()}};
                    break;
                }
        c.add("cayley_closed_form", pass_if(witness.is_null()), "", witness);
    });
    guarded(c, "arithmetic", [&] {
        CayleyData data = compute_arithmetic(rs, carter_decompose(rs, s), m);
        c.data["arithmetic"] = {{"d", data.d}, {"n", data.n}, {"c", qmatrix_json(data.c)}, {"n_ij", data.n_int}};
        c.add("arithmetic", pass_if(satisfies_nij_equation(data.n_int, data.c, rs.datum())));
    });
}

void ordering_checks(Certificate& c, const RootSystem& rs, const AdaptedOrdering& ao) {
    json order = json::array();
    for (int p = 0; p < ao.ordering.size(); ++p) order.push_back(root_to_string(ao.root_at(rs, p)));
    c.data["ordering"] = order;
    c.data["m_plus"] = {ao.seg_m_plus.begin, ao.seg_m_plus.end};
    c.data["length_s"] = ao.length_s;
    c.data["d0"] = ao.d0;
    std::string err = validate_ordering(rs, ao);
    c.add("ordering", pass_if(err.empty()), err);
    int size = ao.seg_m_plus.size();
    int sigma = slice_dimension(rs, ao);
    int dim_g = 2 * rs.num_positive() + rs.rank();
    c.data["dim_m_minus"] = size;
    c.data["dim_slice"] = sigma;
    bool ok = size == expected_m_plus_size(rs, ao) && 2 * size + sigma == dim_g;
    c.add("segment_length", pass_if(ok), "", ok ? json(nullptr) : json({{"size", size}, {"dim_slice", sigma}}));
    auto y = check_Y_weights_separated(rs, ao, 3);
    c.data["y_weights_separated_m3"] = y.holds;
}

void relation_checks(Certificate& c, const RootSystem& rs, const AdaptedOrdering& ao, int m) {
    guarded(c, "realization", [&] {
        if (rs.rank() > 2) {
            c.add("realization", Status::skipped, "symbolic relation check is limited to rank 2");
            return;
        }
        auto group = std::make_shared<QuantumGroup>(rs, ao.ordering);
        auto alg = std::make_shared<RootOfUnityAlgebra>(group, CyclotomicField{m});
        CayleyData data = compute_arithmetic(rs, ao.carter, m);
        for (bool inverse : {false, true}) Realization<CyclotomicField>::from_cayley(alg, data, inverse).verify_relations();
        c.add("realization", Status::pass);
    });
    guarded(c, "chi_residuals", [&] {
        WhittakerContext ctx = whittaker_context(rs, ao, m);
        auto res = chi_symbolic_residuals(ctx, rs.rank() > 2 ? 40 : -1);
        c.data["chi_residuals"] = res;
        c.add("chi_residuals", pass_if(res.empty()), res.empty() ? "" : res.front());
    });
}

}  // namespace

Certificate run_carter(const RunConfig& cfg) {
    auto t0 = Clock::now();
    RootSystem rs = make_root_system(cfg);
    WeylElement s = element_of(rs, cfg);
    Certificate c = start(cfg, rs.datum().name() + " " + element_label(rs, s));
    carter_checks(c, rs, s, cfg.m);
    finish(c, t0);
    return c;
}

Certificate run_ordering(const RunConfig& cfg) {
    auto t0 = Clock::now();
    RootSystem rs = make_root_system(cfg);
    WeylElement s = element_of(rs, cfg);
    Certificate c = start(cfg, rs.datum().name() + " " + element_label(rs, s));
    guarded(c, "ordering", [&] { ordering_checks(c, rs, adapted_ordering(rs, s, {cfg.budget_search})); });
    finish(c, t0);
    return c;
}

Certificate run_relations(const RunConfig& cfg) {
    auto t0 = Clock::now();
    RootSystem rs = make_root_system(cfg);
    WeylElement s = element_of(rs, cfg);
    Certificate c = start(cfg, rs.datum().name() + " " + element_label(rs, s));
    guarded(c, "ordering", [&] { relation_checks(c, rs, adapted_ordering(rs, s, {cfg.budget_search}), cfg.m); });
    finish(c, t0);
    return c;
}

Certificate run_ueta(const RunConfig& cfg) {
    auto t0 = Clock::now();
    RootSystem rs = make_root_system(cfg);
    Certificate c = start(cfg, rs.datum().name() + " m=" + std::to_string(cfg.m));
    guarded(c, "central_elements", [&] {
        auto group = std::make_shared<QuantumGroup>(rs, ordering_from_word(rs, rs.reduced_word(rs.longest_element())));
        central_elements(group, cfg.m, true, rs.rank() > 2 ? 2 : 1);
        c.add("central_elements", Status::pass);
        CentralCharacter eta = CentralCharacter::restricted(rs, cfg.m);
        if (!cfg.eta_path.empty() || !cfg.l_values.empty()) {
            WhittakerContext ctx = whittaker_context(rs, adapted_ordering(rs, WeylElement::identity(rs.rank())), cfg.m);
            eta = load_eta(cfg, ctx, nullptr);
        }
        UEta u = build_U_eta(group, eta);
        c.data["eta"] = eta_to_json(eta);
        c.data["dim"] = u.expected_dim();
        c.add("dimension", pass_if(u.expected_dim() == u.algebra.dim()));
        guarded(c, "frobenius", [&] {
            FrobeniusForm f = frobenius_form(u.algebra, cfg.budget_dim, 50, cfg.seed);
            c.data["frobenius_rank"] = f.rank;
            c.add("frobenius", pass_if(f.nondegenerate()));
        });
    });
    finish(c, t0);
    return c;
}

Certificate run_verify_dkp(const RunConfig& cfg) {
    auto t0 = Clock::now();
    RootSystem rs = make_root_system(cfg);
    WeylElement s = element_of(rs, cfg);
    Certificate c = start(cfg, rs.datum().name() + " " + element_label(rs, s) + " m=" + std::to_string(cfg.m));
    Hypotheses h{make_context(cfg, rs), {}, {}, {}};
    c.data["divisibility"] = nullptr;
    c.data["rank_identity"] = nullptr;
    c.data["jordan"] = json::array();
    c.data["wq_dim"] = nullptr;
    if (!establish(c, cfg, h)) {
        finish(c, t0);
        return c;
    }
    const auto& w = *h.w;
    const auto& chi = *h.chi;
    guarded(c, "freeness", [&] {
        json sources = json::array();
        auto mods = test_modules(w, cfg, sources);
        std::mt19937 rng(cfg.seed);
        if (mods.size() >= 2) {
            std::uniform_int_distribution<size_t> pick(0, mods.size() - 1);
            size_t a = pick(rng), b = pick(rng);
            mods.push_back(direct_sum(mods[a], mods[b]));
            sources.push_back("direct sum of modules " + std::to_string(a + 1) + " and " + std::to_string(b + 1));
        }
        bool divisibility = true, rank_identity = true, all = true, engel = true;
        json modules = json::array(), jordan = json::array();
        json witness = nullptr;
        for (size_t k = 0; k < mods.size(); ++k) {
            verify_module(w.u, mods[k]);
            auto v = verify_freeness(w, mods[k], chi);
            json jv = freeness_json(v);
            jv["source"] = sources[k];
            modules.push_back(jv);
            for (const auto& j : jv["jordan"]) jordan.push_back(j);
            divisibility &= v.divisibility;
            rank_identity &= v.rank_identity;
            engel &= v.dim_v_chi >= 1;
            if (!v.pass() && witness.is_null()) witness = jv;
            all &= v.pass();
        }
        c.data["modules"] = modules;
        c.data["divisibility"] = divisibility;
        c.data["rank_identity"] = rank_identity;
        c.data["jordan"] = jordan;
        c.add("engel", pass_if(engel));
        c.add("freeness", pass_if(all), "", witness);
    });
    guarded(c, "walg", [&] {
        auto q = build_Q_chi(w, chi, cfg.budget_dim);
        if (q.q.dim > 60) throw BudgetExceeded("Q_chi of dimension " + std::to_string(q.q.dim) + " is too large for End(Q_chi)");
        c.data["wq_dim"] = wq_algebra(w, q).dim_w;
        c.add("walg", Status::pass);
    });
    finish(c, t0);
    return c;
}

Certificate run_walg(const RunConfig& cfg) {
    auto t0 = Clock::now();
    RootSystem rs = make_root_system(cfg);
    WeylElement s = element_of(rs, cfg);
    Certificate c = start(cfg, rs.datum().name() + " " + element_label(rs, s) + " m=" + std::to_string(cfg.m));
    Hypotheses h{make_context(cfg, rs), {}, {}, {}};
    if (!establish(c, cfg, h)) {
        finish(c, t0);
        return c;
    }
    const auto& w = *h.w;
    guarded(c, "walg", [&] {
        const auto& ctx = h.ctx;
        auto q = build_Q_chi(w, *h.chi, cfg.budget_dim);
        long D = rs.num_positive(), l = rs.rank(), k = static_cast<long>(ctx.m_plus.size());
        long expected_q = 1, expected_w = 1;
        for (long i = 0; i < 2 * D + l - k; ++i) expected_q *= cfg.m;
        int sigma = slice_dimension(rs, ctx.ao);
        for (int i = 0; i < sigma; ++i) expected_w *= cfg.m;
        if (q.q.dim > 60) throw BudgetExceeded("Q_chi of dimension " + std::to_string(q.q.dim) + " is too large for End(Q_chi)");
        auto qw = wq_algebra(w, q);
        c.data["dim_q"] = q.q.dim;
        c.data["dim_w"] = qw.dim_w;
        c.data["dim_slice"] = sigma;
        c.data["d"] = qw.d;
        c.data["image_dim"] = qw.image_dim;
        c.data["centralizer_dim"] = qw.centralizer_dim;
        c.add("dim_q", pass_if(q.q.dim == expected_q));
        c.add("dim_w", pass_if(qw.dim_w == expected_w));
        c.add("mat_d", pass_if(qw.mat_d_pattern));
        json sk = json::array();
        bool all = true;
        for (const auto& v : simple_modules(w.u.algebra, cfg.m, cfg.budget_dim)) {
            auto r = skryabin_roundtrip(w, qw, v, *h.chi);
            sk.push_back({{"dim_v", r.dim_v},
                          {"dim_v_chi", r.dim_v_chi},
                          {"dim_hom", r.dim_hom},
                          {"dim_tensor", r.dim_tensor},
                          {"evaluation_rank", r.evaluation_rank},
                          {"whittaker_rank", r.whittaker_rank}});
            all &= r.holds();
        }
        c.data["skryabin"] = sk;
        c.add("skryabin", pass_if(all));
    });
    finish(c, t0);
    return c;
}

std::vector<Certificate> run_sweep(const RunConfig& cfg) {
    RootSystem rs = make_root_system(cfg);
    auto elements = rs.all_elements();
    if (cfg.mode == "classes") {
        std::vector<WeylElement> reps;
        std::set<WeylElement> seen;
        for (const auto& x : elements) {
            if (seen.count(x)) continue;
            reps.push_back(x);
            for (const auto& g : elements) seen.insert(g * x * rs.inverse(g));
        }
        elements = reps;
    }
    std::vector<Certificate> out(elements.size());
    auto item = [&](size_t k) {
        auto t0 = Clock::now();
        const WeylElement& s = elements[k];
        Certificate c = start(cfg, rs.datum().name() + " " + element_label(rs, s));
        c.inputs["element"] = element_label(rs, s);
        carter_checks(c, rs, s, cfg.m);
        guarded(c, "ordering", [&] {
            AdaptedOrdering ao = adapted_ordering(rs, s, {cfg.budget_search});
            ordering_checks(c, rs, ao);
            relation_checks(c, rs, ao, cfg.m);
        });
        finish(c, t0);
        out[k] = std::move(c);
    };
    int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(elements.size())));
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (size_t k; (k = next++) < elements.size();) item(k);
        });
    for (auto& t : pool) t.join();
    return out;
}

Report run_command(const std::string& command, const RunConfig& cfg) {
    cfg.validate();
    static const std::map<std::string, std::function<Certificate(const RunConfig&)>> single = {
        {"roots", run_roots},     {"carter", run_carter}, {"ordering", run_ordering},   {"relations", run_relations},
        {"ueta", run_ueta},       {"verify dkp", run_verify_dkp}, {"walg", run_walg}};
    Report r;
    r.command = command;
    r.config = cfg.to_json();
    if (command == "sweep") {
        r.certificates = run_sweep(cfg);
        return r;
    }
    auto it = single.find(command);
    if (it == single.end()) throw InvalidArgument("unknown command '" + command + "'");
    r.certificates.push_back(it->second(cfg));
    return r;
}

}  // namespace uqs::cli
