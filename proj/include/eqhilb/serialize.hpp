#pragma once

// JSON encodings of the domain types.  Every to_json has a matching from_json
// so emitted objects parse back into the originating type.
//
//   Partition        [4,3,2]
//   GroupParams      {"a":1,"b":-1,"n":3}
//   LPolynomial      {"coeffs":[0,2,1]}
//   MultiPartition   [[1],[],[]]
//   Abacus           {"word":"01011001","offset":0}
//   Quasipolynomial  {"period":2,"polys":[[],["1/2","1/2"]],"valid_from":3}
//
// Rationals are strings ("3/2", "-1", "0") so no precision is lost.

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "eqhilb/abacus.hpp"
#include "eqhilb/analysis.hpp"
#include "eqhilb/coloring.hpp"
#include "eqhilb/partition.hpp"
#include "eqhilb/stabilization.hpp"
#include "eqhilb/tangent.hpp"

namespace eqhilb {

using json = nlohmann::json;

inline void to_json(json& j, const Box& b) { j = json::array({b.i, b.j}); }
inline void from_json(const json& j, Box& b) {
    b.i = j.at(0).get<int>();
    b.j = j.at(1).get<int>();
}

inline void to_json(json& j, const Partition& p) {
    j = json::array();
    for (int r : p.rows()) j.push_back(r);
}
inline void from_json(const json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

inline void to_json(json& j, const LPolynomial& poly) {
    std::vector<std::uint64_t> c(poly.coeffs().begin(), poly.coeffs().end());
    j = json{{"coeffs", c}};
}
inline void from_json(const json& j, LPolynomial& poly) {
    poly = LPolynomial(j.at("coeffs").get<std::vector<std::uint64_t>>());
}

inline void to_json(json& j, const MultiPartition& mp) {
    j = json::array();
    for (const auto& p : mp.parts) j.push_back(p);
}
inline void from_json(const json& j, MultiPartition& mp) {
    mp.parts = j.get<std::vector<Partition>>();
}

inline void to_json(json& j, const Abacus& ab) {
    j = json{{"word", ab.word_string()}, {"offset", ab.offset()}};
}
inline void from_json(const json& j, Abacus& ab) {
    ab = Abacus::from_string(j.at("word").get<std::string>(), j.at("offset").get<std::int64_t>());
}

inline void to_json(json& j, const Arrow& a) {
    j = json{{"kind", a.kind == ArrowKind::D ? "D" : "U"},
             {"box", a.box},
             {"tail", a.tail},
             {"head", a.head},
             {"weight", json::array({a.w1(), a.w2()})}};
}
inline void from_json(const json& j, Arrow& a) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "D" && kind != "U") throw json::other_error::create(501, "arrow kind must be D or U", &j);
    a.kind = kind == "D" ? ArrowKind::D : ArrowKind::U;
    a.box = j.at("box").get<Box>();
    a.tail = j.at("tail").get<Box>();
    a.head = j.at("head").get<Box>();
}

inline std::string rational_string(const Rational& q) { return q.str(); }
inline Rational parse_rational(const std::string& s) { return Rational(s); }

inline void to_json(json& j, const Quasipolynomial& qp) {
    json polys = json::array();
    for (const auto& poly : qp.polys) {
        json coeffs = json::array();
        for (const auto& c : poly) coeffs.push_back(rational_string(c));
        polys.push_back(std::move(coeffs));
    }
    j = json{{"period", qp.period}, {"polys", std::move(polys)}, {"valid_from", qp.valid_from}};
}
inline void from_json(const json& j, Quasipolynomial& qp) {
    qp.period = j.at("period").get<int>();
    qp.valid_from = j.at("valid_from").get<std::int64_t>();
    qp.polys.clear();
    for (const auto& poly : j.at("polys")) {
        RationalPoly p;
        for (const auto& c : poly) p.push_back(parse_rational(c.get<std::string>()));
        qp.polys.push_back(std::move(p));
    }
}

inline json group_json(const GroupParams& g) { return json{{"a", g.a()}, {"b", g.b()}, {"n", g.n()}}; }

inline json core_quotient_json(const Partition& lambda, int n, const CoreQuotient& cq) {
    const int qsize = cq.quotient.total_size();
    return json{{"partition", lambda},
                {"n", n},
                {"abacus", to_abacus(lambda)},
                {"core", cq.core},
                {"quotient", cq.quotient},
                {"frame", cq.frame},
                {"canonical_quotient", canonical_quotient(cq)},
                {"size_identity",
                 {{"size", lambda.size()},
                  {"core_size", cq.core.size()},
                  {"quotient_size", qsize},
                  {"holds", lambda.size() == cq.core.size() + n * qsize}}}};
}

inline json period_report_json(const PeriodReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json witnesses = json::array();
        for (const auto& w : e.witnesses)
            witnesses.push_back(json{{"lambda", w.lambda},
                                     {"psi", w.image},
                                     {"beta", w.beta_before},
                                     {"beta_psi", w.beta_after}});
        entries.push_back(json{{"n", e.n},
                               {"n_shifted", e.n + rep.period},
                               {"class", e.class_at_n},
                               {"class_shifted", e.class_at_shifted},
                               {"classes_equal", e.classes_equal},
                               {"mismatched_coefficients", e.mismatched_coefficients},
                               {"bijective", e.bijective},
                               {"beta_preserved", e.beta_preserved},
                               {"inverse_agrees", e.inverse_agrees},
                               {"witnesses", std::move(witnesses)},
                               {"failures", e.failures},
                               {"passed", e.passed()}});
    }
    return json{{"a", rep.g.a()},
                {"b", rep.g.b()},
                {"r", rep.r},
                {"period", rep.period},
                {"entries", std::move(entries)},
                {"passed", rep.passed()}};
}

inline json quasipolynomial_report_json(const QuasipolynomialReport& rep) {
    json samples = json::array();
    for (const auto& s : rep.samples) samples.push_back(json{{"n", s.n}, {"count", s.count}});
    json classes = json::array();
    for (const auto& c : rep.fit.classes)
        classes.push_back(json{{"residue", c.residue},
                               {"samples", c.samples},
                               {"validated", c.validated},
                               {"observed_degree", c.observed_degree},
                               {"valid_from", c.valid_from},
                               {"held_out", c.held_out}});
    return json{{"a", rep.g.a()},
                {"b", rep.g.b()},
                {"r", rep.r},
                {"period", rep.period},
                {"reduced", rep.reduced},
                {"samples", std::move(samples)},
                {"quasipolynomial", rep.fit.qp},
                {"classes", std::move(classes)},
                {"passed", rep.passed()}};
}

inline json rectangle_report_json(const RectangleBijectionReport& rep) {
    return json{{"group", group_json(rep.g)},
                {"r", rep.r},
                {"source_count", rep.source_count},
                {"target_count", rep.target_count},
                {"unbalanced_images", rep.unbalanced_images},
                {"missed_targets", rep.missed_targets},
                {"bijective", rep.bijective()}};
}

}  // namespace eqhilb

template <>
struct nlohmann::adl_serializer<eqhilb::GroupParams> {
    static eqhilb::GroupParams from_json(const json& j) {
        return {j.at("a").get<int>(), j.at("b").get<int>(), j.at("n").get<int>()};
    }
    static void to_json(json& j, const eqhilb::GroupParams& g) { j = eqhilb::group_json(g); }
};
