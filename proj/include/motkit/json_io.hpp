#pragma once

// JSON serialization for the library types, used by the CLI and its tests.

#include "motkit/cocycles.hpp"
#include "motkit/dieudonne.hpp"
#include "motkit/kummer.hpp"
#include "motkit/local_field.hpp"
#include "motkit/log_model.hpp"
#include "motkit/motive.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace motkit {

using nlohmann::json;

inline void to_json(json& j, const PiMonomial& x) {
    j = json{{"c", rat_to_string(x.coeff)}, {"k", x.exponent}};
}

inline void from_json(const json& j, PiMonomial& x) {
    x = PiMonomial(rat_from_string(j.at("c").get<std::string>()), j.at("k").get<long>());
}

inline void to_json(json& j, const KElement& x) {
    std::vector<std::string> num, den;
    for (const Rat& c : x.num()) num.push_back(rat_to_string(c));
    for (const Rat& c : x.den()) den.push_back(rat_to_string(c));
    j = json{{"num", num}, {"den", den}};
}

inline void from_json(const json& j, KElement& x) {
    Poly num, den;
    for (const auto& s : j.at("num")) num.push_back(rat_from_string(s.get<std::string>()));
    for (const auto& s : j.at("den")) den.push_back(rat_from_string(s.get<std::string>()));
    x = KElement(std::move(num), std::move(den));
}

inline void to_json(json& j, const Motive& m) {
    j = json{{"r", m.r}, {"d", m.d}, {"entries", m.entries}};
}

inline void from_json(const json& j, Motive& m) {
    m = Motive(j.at("r").get<long>(), j.at("d").get<long>(),
               j.at("entries").get<std::vector<std::vector<PiMonomial>>>());
}

inline void to_json(json& j, const MonodromyMatrix& mu) { j = json{{"mu", mu.mu}}; }

inline void from_json(const json& j, MonodromyMatrix& mu) {
    mu.mu = j.at("mu").get<std::vector<std::vector<long>>>();
}

inline void to_json(json& j, const Cocycle2& c) {
    j = json{{"A", c.A.orders}, {"B", c.B.orders}, {"table", c.table}};
}

inline void from_json(const json& j, Cocycle2& c) {
    c.A = FinAbGroup(j.at("A").get<std::vector<long>>());
    c.B = FinAbGroup(j.at("B").get<std::vector<long>>());
    c.table = j.at("table").get<std::vector<FinAbElem>>();
}

inline void to_json(json& j, const ZCocycle& c) {
    j = json{{"A", c.A.orders}, {"B", "Z"}, {"table", c.table}};
}

inline void from_json(const json& j, ZCocycle& c) {
    c.A = FinAbGroup(j.at("A").get<std::vector<long>>());
    c.table = j.at("table").get<std::vector<long long>>();
}

inline void to_json(json& j, const KummerClass& k) {
    j = json{{"n", k.n}, {"r", k.r}, {"d", k.d}, {"cls", k.cls}};
}

inline void from_json(const json& j, KummerClass& k) {
    k.n = j.at("n").get<long>();
    k.r = j.at("r").get<long>();
    k.d = j.at("d").get<long>();
    k.cls = j.at("cls").get<std::vector<std::vector<PiMonomial>>>();
}

inline void to_json(json& j, const KatoPair& p) {
    j = json{{"classical", p.classical}, {"N", p.N}};
}

inline void from_json(const json& j, KatoPair& p) {
    p.classical = j.at("classical").get<KummerClass>();
    p.N = j.at("N").get<std::vector<std::vector<long>>>();
}

inline std::string point_key(const FinAbElem& a) {
    std::string s;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s;
}

namespace detail {

inline json model_tables(const ModelAlgebra& alg,
                         const std::vector<std::vector<PiMonomial>>& tbl) {
    json out = json::array();
    long npoints = alg.points.size();
    for (long i = 0; i < alg.d; ++i) {
        json row = json::object();
        for (long idx = 0; idx < npoints; ++idx)
            row[point_key(alg.points.elem_at(idx))] = tbl[i][idx];
        out.push_back(row);
    }
    return out;
}

}  // namespace detail

inline void to_json(json& j, const ModelAlgebra& alg) {
    j = json{{"n", alg.n},
             {"r", alg.r},
             {"d", alg.d},
             {"b", detail::model_tables(alg, alg.b)},
             {"factors",
              {{"b1", detail::model_tables(alg, alg.b1)},
               {"bplus", detail::model_tables(alg, alg.bplus)},
               {"bminus", detail::model_tables(alg, alg.bminus)}}}};
}

inline void from_json(const json& j, ModelAlgebra& alg) {
    alg.n = j.at("n").get<long>();
    alg.r = j.at("r").get<long>();
    alg.d = j.at("d").get<long>();
    alg.points = FinAbGroup(std::vector<long>(alg.r, alg.n));
    long npoints = alg.points.size();
    auto load = [&](const json& src, std::vector<std::vector<PiMonomial>>& dst) {
        dst.assign(alg.d, {});
        for (long i = 0; i < alg.d; ++i) {
            dst[i].reserve(npoints);
            for (long idx = 0; idx < npoints; ++idx)
                dst[i].push_back(
                    src.at(i).at(point_key(alg.points.elem_at(idx))).get<PiMonomial>());
        }
    };
    load(j.at("b"), alg.b);
    load(j.at("factors").at("b1"), alg.b1);
    load(j.at("factors").at("bplus"), alg.bplus);
    load(j.at("factors").at("bminus"), alg.bminus);
}

namespace detail {

inline std::vector<std::vector<long>> mat_to_long(const ModMatrix& m) {
    std::vector<std::vector<long>> out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (const Int& v : m[i]) out[i].push_back(v.convert_to<long>());
    return out;
}

inline ModMatrix mat_from_long(const std::vector<std::vector<long>>& m) {
    ModMatrix out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (long v : m[i]) out[i].push_back(Int(v));
    return out;
}

}  // namespace detail

inline void to_json(json& j, const DieudonneData& dd) {
    j = json{{"p", dd.p},
             {"m", dd.m},
             {"d", dd.d},
             {"r", dd.r},
             {"F", detail::mat_to_long(dd.F)},
             {"V", detail::mat_to_long(dd.V)},
             {"N", detail::mat_to_long(dd.Nop)}};
}

inline void from_json(const json& j, DieudonneData& dd) {
    dd.p = j.at("p").get<long>();
    dd.m = j.at("m").get<long>();
    dd.d = j.at("d").get<long>();
    dd.r = j.at("r").get<long>();
    dd.F = detail::mat_from_long(j.at("F").get<std::vector<std::vector<long>>>());
    dd.V = detail::mat_from_long(j.at("V").get<std::vector<std::vector<long>>>());
    dd.Nop = detail::mat_from_long(j.at("N").get<std::vector<std::vector<long>>>());
}

}  // namespace motkit
