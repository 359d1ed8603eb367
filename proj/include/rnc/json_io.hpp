#pragma once

#include "rnc/aseq.hpp"
#include "rnc/cones.hpp"
#include "rnc/fan.hpp"
#include "rnc/groebner.hpp"
#include "rnc/hilbsym.hpp"
#include "rnc/tpoly.hpp"

#include <json.hpp>

namespace rnc::io {

using json = nlohmann::ordered_json;

json to_json(const Int& v);  // number when it fits in 64 bits, string otherwise
json to_json(const Rat& v);  // number for integers, "p/q" string otherwise
json to_json(const std::vector<Int>& v);
json to_json(const std::vector<Rat>& v);

json to_json(const xy::ASequence& a);
json to_json(const xy::HilbertReport& r);
json to_json(const tpoly::MonomialIdeal& I);  // array of exponent vectors
json to_json(const tpoly::PureBinomial& b);   // {lead: [...], tail: [...]}
json to_json(const gb::ReducedGB& g);
json to_json(const cone::ConeSystem& s);
json to_json(const hilb::LinearForm& f);
json to_json(const hilb::SymbolicHilbert& s);
json to_json(const hilb::CompareReport& r);
json to_json(const fan::FanCell& c);
json census_json(const std::map<int, int>& census);

}  // namespace rnc::io
