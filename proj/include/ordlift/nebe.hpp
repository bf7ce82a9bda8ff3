#pragma once

#include "ordlift/lattice.hpp"
#include "ordlift/quiver.hpp"
#include "ordlift/report.hpp"

#include <string>
#include <vector>

namespace ordlift {

/// Ingested decomposition-matrix data for SL_2(2^f) in defining
/// characteristic: 0/1 rows over columns labeled by subsets of Z/f.
struct DecompFixture {
    std::string group;
    long p = 2, f = 0;
    struct Ordinary {
        std::string label;
        long degree = 0;
        long multiplicity = 1;
    };
    std::vector<Ordinary> ordinary;     // rows
    std::vector<long> columns;          // subset bitmasks, one per modular simple
    std::vector<std::vector<long>> rows; // 0/1 entries

    void validate() const;
    nlohmann::json to_json() const;
    static DecompFixture from_json(const nlohmann::json& j);
};

struct NebeResult {
    BlockOrder order;
    SymmElem u;
    Report report;
};

/// Builds Nebe's conjectural basic order of O SL_2(2^f) from the fixture
/// (beta-bases on the diagonal, 2^{|I-J|}-scaled bimodule pieces off it,
/// all unit functions identically one) and verifies it: order closure,
/// self-duality for u_C = chi_C(1)/|G|, piece ranks against the Koshita
/// Cartan matrix, and the Koshita relations modulo 2 for the canonical
/// arrow lifts.
NebeResult nebe_order(const DecompFixture& fx, const GradedAlgebra& koshita);

} // namespace ordlift
