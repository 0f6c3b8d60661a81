#pragma once

// JSON (nlohmann), CSV and DOT serialization. Integers are always written as
// decimal strings since they leave the 64-bit range after a few levels.

#include "shadow_markov/dual_int.hpp"
#include "shadow_markov/init_space.hpp"
#include "shadow_markov/markov.hpp"
#include "shadow_markov/tree.hpp"
#include "shadow_markov/tripoly.hpp"
#include "shadow_markov/uniqueness.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace shadow_markov {

using Json = nlohmann::ordered_json;

namespace detail {

inline BigInt bigint_from_json(const Json& j) {
    if (j.is_string()) return parse_integer(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    throw ParseError("expected a decimal string or integer, got " + j.dump());
}

}  // namespace detail

// {"a": "<decimal>", "alpha": "<decimal>"}
inline void to_json(Json& j, const DualInt& x) { j = Json{{"a", x.real.str()}, {"alpha", x.shadow.str()}}; }

inline void from_json(const Json& j, DualInt& x) {
    x = DualInt(detail::bigint_from_json(j.at("a")), detail::bigint_from_json(j.at("alpha")));
}

// {"A": DualInt, "B": DualInt, "C": DualInt}
inline void to_json(Json& j, const DualTriple& t) { j = Json{{"A", t[Slot::A]}, {"B", t[Slot::B]}, {"C", t[Slot::C]}}; }

inline void from_json(const Json& j, DualTriple& t) {
    t = DualTriple(j.at("A").get<DualInt>(), j.at("B").get<DualInt>(), j.at("C").get<DualInt>());
}

inline void to_json(Json& j, const InitialTriple& s) {
    j = Json{{"alpha1", s.alpha1().str()},
             {"beta1", s.beta1().str()},
             {"gamma1", s.gamma1().str()},
             {"sigma", s.sigma().str()}};
}

inline Json moves_to_json(const std::vector<Slot>& moves) {
    Json out = Json::array();
    for (Slot s : moves) out.push_back(index(s));
    return out;
}

inline std::vector<Slot> moves_from_json(const Json& j) {
    std::vector<Slot> out;
    for (const auto& v : j) out.push_back(slot_from_index(v.get<long long>()));
    return out;
}

// Terms as [{"exponents": [i, j, k], "coefficient": "p/q"}], highest first.
inline void to_json(Json& j, const TriPoly& p) {
    j = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        j.push_back(Json{{"exponents", it->first.exp}, {"coefficient", it->second.str()}});
    }
}

inline void to_json(Json& j, const InvarianceReport& r) {
    Json basis = Json::array();
    Json identity_basis = Json::array();
    for (const auto& p : r.basis) basis.push_back(Json{{"polynomial", to_string(p)}, {"terms", p}});
    for (const auto& p : r.identity_basis) identity_basis.push_back(Json{{"polynomial", to_string(p)}, {"terms", p}});
    j = Json{{"max_degree", r.max_degree},
             {"slots", r.mode == SlotMode::AllSlots ? "A,B,C" : "A"},
             {"unknowns", r.unknowns},
             {"equations", r.equations},
             {"rank", r.rank},
             {"nullspace_dimension", r.nullspace_dimension},
             {"basis", std::move(basis)},
             {"identity_nullspace_dimension", r.identity_nullspace_dimension},
             {"identity_basis", std::move(identity_basis)}};
}

inline void to_json(Json& j, const TreeNode& n) {
    j = Json{{"path", n.path.str()},
             {"depth", n.depth()},
             {"state", Json{{"left", n.left}, {"right", n.right}, {"newest", n.newest}}}};
}

/// Nested {path, depth, state, children} records for a breadth-first node
/// list as produced by subtree().
inline Json tree_to_json(const InitialTriple& seed, const std::vector<TreeNode>& nodes) {
    std::function<Json(std::size_t)> build = [&](std::size_t i) {
        Json j = nodes[i];
        Json children = Json::array();
        for (std::size_t c = 2 * i + 1; c <= 2 * i + 2 && c < nodes.size(); ++c) children.push_back(build(c));
        j["children"] = std::move(children);
        return j;
    };
    Json out{{"seed", seed}, {"fundamental", fundamental_triple(seed)}};
    out["tree"] = nodes.empty() ? Json() : build(0);
    return out;
}

/// depth,path,a,alpha for the newest region of every node.
inline void write_tree_csv(std::ostream& os, const std::vector<TreeNode>& nodes) {
    os << "depth,path,a,alpha\n";
    for (const auto& n : nodes) {
        os << n.depth() << ',' << n.path.str() << ',' << n.newest.real << ',' << n.newest.shadow << '\n';
    }
}

/// Node ids are the path strings (the trunk is ""); labels use the canonical
/// dual-number text.
inline void write_tree_dot(std::ostream& os, const InitialTriple& seed, const std::vector<TreeNode>& nodes) {
    os << "digraph shadow_markov {\n";
    os << "  label=\"seed " << to_string(seed) << "; fundamental " << to_string(fundamental_triple(seed)) << "\";\n";
    for (const auto& n : nodes) os << "  \"" << n.path.str() << "\" [label=\"" << to_string(n.newest) << "\"];\n";
    for (const auto& n : nodes) {
        if (n.path.empty()) continue;
        const std::string parent = n.path.str().substr(0, n.path.size() - 1);
        os << "  \"" << parent << "\" -> \"" << n.path.str() << "\" [label=\"" << n.path.str().back() << "\"];\n";
    }
    os << "}\n";
}

/// alpha1,beta1,gamma1,depth,verdict,path,a,alpha
inline void write_positivity_csv(std::ostream& os, const std::vector<PositivityReport>& reports) {
    os << "alpha1,beta1,gamma1,depth,verdict,path,a,alpha\n";
    for (const auto& r : reports) {
        os << r.seed.alpha1() << ',' << r.seed.beta1() << ',' << r.seed.gamma1() << ',' << r.depth << ','
           << to_string(r.verdict) << ',';
        if (r.verdict != Verdict::AllPositive) {
            os << r.violation_path.str() << ',' << r.violation_value.real << ',' << r.violation_value.shadow;
        } else {
            os << ",,";
        }
        os << '\n';
    }
}

}  // namespace shadow_markov
