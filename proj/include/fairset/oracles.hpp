#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairset/fairness.hpp"
#include "fairset/graph.hpp"
#include "fairset/metric.hpp"
#include "fairset/vertex_set.hpp"

namespace fairset {

enum class WheelInterpretation { edges, vertices };

std::string interpretation_name(WheelInterpretation interpretation);

// Closed-form fair-set predicates. Pure functions of the parameters and the
// candidate set; none of them look at a Graph.

// K_n: every A with |A| != n-1. V itself qualifies under both flag settings
// (S = V is a witness); the narrower reading that V needs a singleton S is
// reported, not enforced.
bool oracle_complete(int n, VertexSet a, bool include_singleton_s);

// K_n minus the edge (0,1): |A| != n-1 and the endpoints 0,1 are together
// in A or together outside it.
bool oracle_complete_minus_edge(int n, VertexSet a);

// K_{m,n} with sides X = 0..m-1, Y = m..m+n-1: |A ∩ X| != m-1 and
// |A ∩ Y| != n-1.
bool oracle_complete_bipartite(int m, int n, VertexSet a);

// Wheel W_n (n >= 6, hub n-1): singletons, rim pairs at rim distance 2, V,
// and every A1 ∪ {hub} where A1 is not an induced rim path longer than n-6.
// "Longer" counts edges or vertices depending on the interpretation.
bool oracle_wheel(int n, VertexSet a, WheelInterpretation interpretation);

// W_5 has exactly six fair sets.
bool oracle_wheel5(VertexSet a);

// C_{2m+1}: closed under "adjacent pair (i, i+1) present => vertex i+m+1
// (mod 2m+1) present".
bool oracle_odd_cycle(int m, VertexSet a);

// Symmetric even host: A closed under the unique-eccentric-vertex map.
bool oracle_symmetric_even(const EccentricMap& em, VertexSet a);

struct OracleSpec {
    // One of: complete:n, complete_minus_edge:n, complete_bipartite:m,n,
    // wheel:n (n >= 6), wheel5, odd_cycle:k (odd cycle order), or
    // symmetric_even:<family> for any generated symmetric even host.
    std::string family;
    bool include_singleton_s = false;
    std::optional<WheelInterpretation> interpretation;  // wheels only
    int ceiling = kDefaultEnumerationCeiling;
    bool force = false;
    int workers = 1;
};

struct DiscrepancyReport {
    std::string family;
    std::string graph6;
    bool include_singleton_s = false;
    std::optional<WheelInterpretation> interpretation;
    std::uint64_t candidates_checked = 0;
    std::vector<VertexSet> false_positives;  // oracle says fair, brute force disagrees
    std::vector<VertexSet> false_negatives;  // brute force found, oracle rejects
    std::vector<std::string> notes;

    bool exact() const { return false_positives.empty() && false_negatives.empty(); }
};

// Compare the family's closed-form oracle against the brute-force inventory
// over every nonempty candidate subset.
DiscrepancyReport verify_family(const OracleSpec& spec);

struct ProductCheckReport {
    VertexSet s1, s2, product_s;
    VertexSet fc1, fc2, fc_product;
    bool identity_holds = false;      // FC(S1 x S2) = FC(S1) x FC(S2)
    bool additivity_holds = false;    // partiality adds coordinatewise
    bool connectivity_matches = false;  // product center connected iff both factors are
};

// Check the product identity for one factor pair; |s1|*|s2| >= 2 required.
ProductCheckReport verify_product_identity(const Graph& g1, const Graph& g2, VertexSet s1,
                                           VertexSet s2);

}  // namespace fairset
