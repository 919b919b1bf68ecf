#pragma once

#include "misbip/exact.hpp"
#include "misbip/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace misbip::theorem1
{
    /// Closed neighbourhood {u, x, y, z} of a vertex of I3, with x and y non-adjacent.
    struct Cell
    {
        int u = -1, x = -1, y = -1, z = -1;
        VertexSet vertices;
    };

    /// Cell indices (0..ell-1) are stored in VertexSet as well; ell <= 16 since cells are disjoint.
    using CellSet = VertexSet;

    /// How J2 (and through it I2) is formed.
    enum class J2Rule
    {
        /// J2 = vertices of J0 \ J1 with >= 2 neighbours in I0. A J1 vertex can then be shared by
        /// two I3 cells, so cells need not be disjoint.
        excluding_j1,
        /// J2 = vertices of J0 with >= 2 neighbours in I0, I2 = vertices of I0 \ I1 with a
        /// neighbour in J2. Every cell neighbour then has u as its only I0-neighbour.
        all_shared,
    };

    struct Decomposition
    {
        J2Rule rule = J2Rule::all_shared;
        int n = 0;
        int k = 0;
        VertexSet i0, j0, i1, j1, j2, i2, i3;
        std::vector<Cell> cells;
        int ell = 0;
        int edge_count_i0_j0 = 0;
    };

    /// One verified inequality or structural claim. Checks with `asserted` false are reported
    /// but do not fail a run.
    struct Check
    {
        std::string name;
        bool passed = false;
        std::string detail;
        bool asserted = true;
    };

    auto all_passed(const std::vector<Check> &checks) -> bool;

    /// Requires g K4-free with maximum degree <= 3 and i0 maximal independent; throws
    /// PreconditionError naming the offending clique, vertex or edge otherwise.
    auto decompose(const Graph &g, VertexSet i0, J2Rule rule = J2Rule::all_shared) -> Decomposition;

    /// For each u in I3 (increasing), x and y are the lexicographically first non-adjacent pair of
    /// its neighbours and z the remaining one.
    auto label_cells(const Graph &g, const Decomposition &dec) -> std::vector<Cell>;

    /// Set-size inequalities and cell invariants, in integer form.
    auto decomposition_checks(const Graph &g, const Decomposition &dec) -> std::vector<Check>;

    struct SelectionState
    {
        CellSet s, i4, i5, i6;
        /// Union of the cells outside S.
        VertexSet u;
        /// Cells of I4 joined when some edge of G runs between them (vertices are cell indices).
        Graph cell_graph;
        /// The auxiliary graph on I5 cells, as an induced subgraph of cell_graph.
        InducedSubgraph h;
        int h_max_degree = 0;
    };

    /// I6 is built greedily: take the lowest-index remaining I5 cell, then discard every I5 cell
    /// within distance 2 of it in cell_graph. Distance is measured through all I4 cells, so any two
    /// chosen cells are also at distance >= 3 in H.
    auto select(const Graph &g, const Decomposition &dec, CellSet s) -> SelectionState;

    auto selection_checks(const Graph &g, const Decomposition &dec, const SelectionState &state) -> std::vector<Check>;

    enum class BadCase
    {
        no_outside_neighbour,      // d = 0, q = 1/4
        one_outside_neighbour,     // d = 1, q = 3/16
        two_in_same_cell,          // d = 2, q = 1/8
        two_in_distinct_cells,     // d = 2, q = 9/64
    };

    auto to_string(BadCase c) -> std::string;

    struct BadEvent
    {
        Rational q;
        BadCase kind;
    };

    /// Probability, over a uniform random transversal of the I4 cells, that T contains v and no
    /// neighbour of v', where {v, v'} = {x, y} of the cell. Throws PreconditionError unless the cell
    /// is in I5 and v is its x or y.
    auto bad_event_probability(const Graph &g, const Decomposition &dec, const SelectionState &state, int cell, int v)
        -> BadEvent;

    /// P(B_i) = q(x) + q(y) for an I5 cell.
    auto cell_bad_probability(const Graph &g, const Decomposition &dec, const SelectionState &state, int cell) -> Rational;

    inline constexpr std::uint64_t census_limit = std::uint64_t{1} << 22;

    struct TransversalStats
    {
        std::uint64_t total = 0;
        /// Goodness required on I5 cells, whose x and y have all neighbours inside U.
        std::uint64_t good_count = 0;
        /// Goodness required on every I4 cell.
        std::uint64_t good_count_all_cells = 0;
        Rational p_good;
        Rational p_good_all_cells;
        /// Case analysis and exhaustive count for every I5 cell.
        std::map<int, Rational> per_cell_bad_prob;
        std::map<int, Rational> per_cell_bad_prob_exhaustive;
        /// Product of 1 - P(B_i) over I6.
        Rational product_bound;
    };

    /// Exhaustive over all 4^|I4| transversals; throws GuardError above 2^22.
    auto transversal_census(const Graph &g, const Decomposition &dec, const SelectionState &state) -> TransversalStats;

    struct MonteCarloEstimate
    {
        std::uint64_t samples = 0;
        double p_good = 0;
        double ci_low = 0, ci_high = 0; // 95% normal interval; approximate
    };

    auto transversal_estimate(const Graph &g, const Decomposition &dec, const SelectionState &state,
        std::uint64_t samples, std::uint64_t seed) -> MonteCarloEstimate;

    /// p_good <= prod(1 - P(B_i)) <= (3/4)^|I6|, and the cells touched by distinct I6 events are disjoint.
    auto verify_product_bound(const Graph &g, const Decomposition &dec, const SelectionState &state,
        const TransversalStats &stats) -> std::vector<Check>;

    struct CaptureFamily
    {
        CellSet s;
        std::uint64_t size = 0;
        int outside_u = 0; // |V \ U|
        std::uint64_t good_count = 0;
        std::uint64_t transversal_misses_all_cells = 0; // I ∩ U failing goodness on some I4 \ I5 cell
        std::vector<Check> checks;
    };

    struct CaptureReport
    {
        int k = 0;
        std::uint64_t sets_of_size_k = 0;
        std::vector<CaptureFamily> families;

        auto passed() const -> bool;
    };

    /// Groups the maximal independent sets of size k by S = {i : |I ∩ V_i| >= 2} and checks, per
    /// nonempty family: every cell is hit, k >= ell + |S|, I ∩ U is a good transversal, and
    /// |I_S| <= good * 2^|V \ U|.
    auto verify_is_capture(const Graph &g, const Decomposition &dec, int k) -> CaptureReport;

    /// Minimum-size maximal independent set, lexicographically first among those.
    auto minimum_maximal_independent_set(const Graph &g) -> VertexSet;

    struct PipelineReport
    {
        Decomposition decomposition;
        SelectionState state;
        std::vector<Check> checks;
        std::optional<TransversalStats> census;
        std::optional<MonteCarloEstimate> estimate;
        std::optional<CaptureReport> capture;

        auto passed() const -> bool;
    };

    struct PipelineOptions
    {
        std::optional<VertexSet> i0;
        CellSet s;
        J2Rule rule = J2Rule::all_shared;
        std::uint64_t seed = 1;
        std::uint64_t monte_carlo_samples = 200000;
        bool capture = true;
        /// Size of the independent sets grouped by the capture check; defaults to |I0|.
        std::optional<int> capture_k;
    };

    auto run_pipeline(const Graph &g, const PipelineOptions &options) -> PipelineReport;
}
