#pragma once

#include <json.hpp>

#include "ffword/analysis.hpp"
#include "ffword/criteria.hpp"
#include "ffword/dynasty.hpp"
#include "ffword/generators.hpp"
#include "ffword/radix.hpp"
#include "ffword/smooth.hpp"

// JSON projections for every boundary type; big naturals always cross as
// decimal strings so consumers never face integer-width surprises.
namespace ffword {

inline void to_json(nlohmann::json& j, const DigitWord& w) {
    j = nlohmann::json{{"digits", w.digits()}, {"base", w.base().value()}};
}

inline void to_json(nlohmann::json& j, const Node& n) {
    j = nlohmann::json{{"value", n.value.str()}, {"exponents", n.exponents}, {"weight", n.weight}};
}

inline nlohmann::json node_json(const Node& n, const PrimeSet& S) {
    return nlohmann::json{
        {"value", n.value.str()}, {"exponents", n.exponents}, {"primes", S.primes()}};
}

inline void to_json(nlohmann::json& j, const TruncationRecord& r) {
    j = nlohmann::json{{"cut", r.cut},
                       {"numerator", r.numerator.str()},
                       {"s_component", r.valid ? r.s_component.str() : "0"},
                       {"ff", r.ff},
                       {"pff", r.pff},
                       {"valid", r.valid},
                       {"first_nonzero_digit_position", r.first_nonzero_digit_position}};
}

inline void to_json(nlohmann::json& j, const StreamBlock& b) {
    j = nlohmann::json{{"value", b.block_value.str()},
                       {"exponents", b.node.exponents},
                       {"weight", b.weight.str()},
                       {"d", b.node.weight},
                       {"t", b.length},
                       {"filler_length", b.filler_length}};
}

inline void to_json(nlohmann::json& j, const GeneratedStream& s) {
    j = nlohmann::json{{"base", s.base.value()},
                       {"digits", s.digits.digits()},
                       {"cuts", s.cuts},
                       {"blocks", s.blocks}};
}

inline void to_json(nlohmann::json& j, const ChainRecord& c) {
    std::vector<std::string> members;
    members.reserve(c.members.size());
    for (const Node& m : c.members) members.push_back(m.value.str());
    j = nlohmann::json{{"members", members}, {"word", c.word.digits()}, {"length", c.length}};
}

inline void to_json(nlohmann::json& j, const LeastFFResult& r) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const Node& m : r.nodes)
        nodes.push_back(nlohmann::json{{"value", m.value.str()}, {"exponents", m.exponents}});
    j = nlohmann::json{{"prefix", r.prefix.digits()},
                       {"nodes", nodes},
                       {"digits", r.digits.digits()},
                       {"cuts", r.cuts}};
}

inline void to_json(nlohmann::json& j, const SmoothWordCount& c) {
    j = nlohmann::json{{"exact", c.exact.str()},
                       {"paper_bound", c.paper_bound},
                       {"corrected_bound", c.corrected_bound}};
}

}  // namespace ffword
