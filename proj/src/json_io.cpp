#include "rnc/json_io.hpp"

namespace rnc::io {

json to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

json to_json(const Rat& v) {
    if (v.get_den() == 1) return to_json(Int(v.get_num()));
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

json to_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const xy::ASequence& a) { return to_json(a.entries()); }

json to_json(const xy::HilbertReport& r) {
    return json{{"h", to_json(r.h)},
                {"e", json::array({to_json(r.e0), to_json(r.e1), to_json(r.e2)})},
                {"colength", to_json(r.colength)},
                {"series_window", to_json(r.series_window)}};
}

json to_json(const tpoly::MonomialIdeal& I) {
    json a = json::array();
    for (const auto& g : I.gens()) a.push_back(g);
    return a;
}

json to_json(const tpoly::PureBinomial& b) { return json{{"lead", b.lead}, {"tail", b.tail}}; }

json to_json(const gb::ReducedGB& g) {
    json elems = json::array();
    for (const auto& e : g.elements) elems.push_back(to_json(e));
    json text = json::array();
    for (const auto& e : g.elements) text.push_back(tpoly::binomial_str(e));
    return json{{"d", g.d}, {"elements", elems}, {"text", text}};
}

json to_json(const cone::ConeSystem& s) {
    json ineqs = json::array();
    for (const auto& q : s.ineqs) ineqs.push_back(json{{"n", to_json(q.n)}, {"strict", q.strict}});
    return json{{"d", s.d}, {"inequalities", ineqs}};
}

json to_json(const hilb::LinearForm& f) { return to_json(f.c); }

json to_json(const hilb::SymbolicHilbert& s) {
    json h = json::array();
    for (const auto& f : s.h) h.push_back(to_json(f));
    return json{{"h", h},
                {"e", json::array({to_json(s.e0), to_json(s.e1), to_json(s.e2)})},
                {"q1", json::array({to_json(s.e0), to_json(s.e1), to_json(s.e2)})},
                {"stabilized_at", s.stabilized_at}};
}

json to_json(const hilb::CompareReport& r) {
    return json{{"e0_equal", r.e0_equal},       {"q_equal", r.q_equal},
                {"h_equal", r.h_equal},         {"q1_equal", r.q1_equal},
                {"radical_equal", r.radical_equal}, {"sat_equal", r.sat_equal},
                {"top_equal", r.top_equal},     {"toppo_consistent", r.toppo_consistent}};
}

json to_json(const fan::FanCell& c) {
    return json{{"initial_ideal", to_json(c.initial_ideal)},
                {"facets", to_json(c.cone)},
                {"interior_weight", to_json(c.interior_weight)},
                {"depth", c.depth}};
}

json census_json(const std::map<int, int>& census) {
    json o = json::object();
    for (const auto& [k, v] : census) o[std::to_string(k)] = v;
    return o;
}

}  // namespace rnc::io
