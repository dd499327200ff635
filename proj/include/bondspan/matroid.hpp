#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bondspan/errors.hpp"
#include "bondspan/mst.hpp"
#include "bondspan/multigraph.hpp"

namespace bondspan {

using ElementId = int;
using ElementSet = std::vector<ElementId>; // kept sorted

// Matroid given by its ground set and an independence oracle. Enumeration
// routines (bases, circuits, cocircuits) are exponential and guarded to
// desk-scale ground sets.
inline constexpr int kMaxMatroidGround = 16;

class MatroidOracle {
public:
    using IndepFn = std::function<bool(const ElementSet&)>;

    MatroidOracle(ElementSet ground, IndepFn indep, std::string name = "matroid")
        : ground_(std::move(ground)), indep_(std::move(indep)), name_(std::move(name)) {
        std::sort(ground_.begin(), ground_.end());
        for (size_t i = 1; i < ground_.size(); ++i)
            if (ground_[i] == ground_[i - 1]) throw ValidationError("duplicate ground element");
    }

    // Independent sets = acyclic edge subsets of g.
    static MatroidOracle graphic(const MultiGraph& g) {
        const int n = g.vertex_count();
        std::vector<std::pair<VertexId, VertexId>> ends;
        ElementSet ground;
        EdgeId max_id = -1;
        for (const Edge& e : g.edges()) max_id = std::max(max_id, e.id);
        ends.assign(max_id + 1, {-1, -1});
        for (const Edge& e : g.edges()) {
            ground.push_back(e.id);
            ends[e.id] = {e.u, e.v};
        }
        auto indep = [n, ends](const ElementSet& s) {
            UnionFind uf(n);
            for (ElementId id : s)
                if (!uf.unite(ends[id].first, ends[id].second)) return false;
            return true;
        };
        return MatroidOracle(std::move(ground), indep, "graphic");
    }

    // Independent iff the subset has at most k elements; ground 0..n-1.
    static MatroidOracle uniform(int k, int n) {
        if (n < 0 || k < 0) throw ValidationError("uniform matroid needs k, n >= 0");
        ElementSet ground(n);
        for (int i = 0; i < n; ++i) ground[i] = i;
        auto indep = [k](const ElementSet& s) { return (int)s.size() <= k; };
        return MatroidOracle(std::move(ground), indep,
                             "uniform_" + std::to_string(k) + "_" + std::to_string(n));
    }

    // Linear matroid over GF(2): element i is the column whose coordinate
    // bits are columns[i]; independence is linear independence, tested by
    // elimination. Ground ids are 0..n-1.
    static MatroidOracle binary(std::vector<uint32_t> columns) {
        ElementSet ground(columns.size());
        for (size_t i = 0; i < columns.size(); ++i) ground[i] = (int)i;
        auto indep = [columns](const ElementSet& s) {
            std::vector<uint32_t> pivots;
            for (ElementId e : s) {
                uint32_t v = columns[e];
                for (uint32_t p : pivots)
                    if (uint32_t lead = p & ~(p - 1); v & lead) v ^= p;
                if (v == 0) return false;
                pivots.push_back(v);
            }
            return true;
        };
        return MatroidOracle(std::move(ground), indep, "binary");
    }

    // The seven nonzero vectors of GF(2)^3: the smallest non-graphic,
    // non-uniform matroid, rank 3.
    static MatroidOracle fano() { return binary({1, 2, 3, 4, 5, 6, 7}); }

    const ElementSet& ground() const { return ground_; }
    const std::string& name() const { return name_; }

    bool independent(ElementSet s) const {
        std::sort(s.begin(), s.end());
        for (ElementId e : s)
            if (!std::binary_search(ground_.begin(), ground_.end(), e))
                throw ValidationError("element " + std::to_string(e) + " not in ground set");
        return indep_(s);
    }

    bool is_loop(ElementId e) const { return !independent({e}); }

    // Rank of a subset: size of a maximal independent subset, grown greedily.
    int rank(const ElementSet& s) const {
        ElementSet grown;
        for (ElementId e : s) {
            grown.push_back(e);
            if (!independent(grown)) grown.pop_back();
        }
        return (int)grown.size();
    }

    int rank() const { return rank(ground_); }

    // Minor M/e: independent sets are those that stay independent with e
    // added. Elements that become loops are removed from the ground set.
    MatroidOracle contracted(ElementId e) const {
        if (is_loop(e)) throw ValidationError("cannot contract a loop");
        IndepFn parent = indep_;
        auto indep = [parent, e](const ElementSet& s) {
            ElementSet with = s;
            with.insert(std::lower_bound(with.begin(), with.end(), e), e);
            return parent(with);
        };
        ElementSet ground;
        for (ElementId f : ground_) {
            if (f == e) continue;
            if (!indep_({std::min(e, f), std::max(e, f)})) continue; // loop in the minor
            ground.push_back(f);
        }
        return MatroidOracle(std::move(ground), indep, name_ + "/" + std::to_string(e));
    }

    std::vector<ElementSet> bases() const {
        guard();
        const int r = rank();
        std::vector<ElementSet> out;
        for_subsets([&](const ElementSet& s) {
            if ((int)s.size() == r && indep_(s)) out.push_back(s);
        });
        return out;
    }

    // Minimal dependent sets.
    std::vector<ElementSet> circuits() const {
        guard();
        std::vector<ElementSet> out;
        for_subsets([&](const ElementSet& s) {
            if (s.empty() || indep_(s)) return;
            for (size_t i = 0; i < s.size(); ++i) {
                ElementSet sub = s;
                sub.erase(sub.begin() + i);
                if (!indep_(sub)) return;
            }
            out.push_back(s);
        });
        return out;
    }

    // Cocircuits: minimal sets intersecting every basis.
    std::vector<ElementSet> cocircuits() const {
        guard();
        std::vector<ElementSet> basis_list = bases();
        auto hits_all = [&](const ElementSet& s) {
            for (const ElementSet& b : basis_list) {
                bool hit = false;
                for (ElementId e : s)
                    if (std::binary_search(b.begin(), b.end(), e)) {
                        hit = true;
                        break;
                    }
                if (!hit) return false;
            }
            return true;
        };
        std::vector<ElementSet> out;
        for_subsets([&](const ElementSet& s) {
            if (s.empty() || !hits_all(s)) return;
            for (size_t i = 0; i < s.size(); ++i) {
                ElementSet sub = s;
                sub.erase(sub.begin() + i);
                if (hits_all(sub)) return;
            }
            out.push_back(s);
        });
        return out;
    }

    // (size, witness) of a maximum-cardinality cocircuit; first maximizer in
    // subset enumeration order.
    std::pair<int, ElementSet> largest_cocircuit() const {
        std::pair<int, ElementSet> best{0, {}};
        for (const ElementSet& c : cocircuits())
            if ((int)c.size() > best.first) best = {(int)c.size(), c};
        return best;
    }

    // The unique circuit inside basis + {e}: e plus the basis elements whose
    // removal re-opens room for e.
    ElementSet fundamental_circuit(const ElementSet& basis, ElementId e) const {
        if (std::binary_search(basis.begin(), basis.end(), e))
            throw ValidationError("fundamental_circuit: element is in the basis");
        ElementSet with = basis;
        with.insert(std::lower_bound(with.begin(), with.end(), e), e);
        if (independent(with))
            throw ValidationError("fundamental_circuit: basis + element is independent");
        ElementSet circuit{e};
        for (ElementId x : basis) {
            ElementSet swapped;
            for (ElementId y : basis)
                if (y != x) swapped.push_back(y);
            swapped.insert(std::lower_bound(swapped.begin(), swapped.end(), e), e);
            if (indep_(swapped)) circuit.push_back(x);
        }
        std::sort(circuit.begin(), circuit.end());
        return circuit;
    }

private:
    void guard() const {
        if ((int)ground_.size() > kMaxMatroidGround)
            throw SizeGuardError("matroid enumeration guarded to ground sets of " +
                                 std::to_string(kMaxMatroidGround));
    }

    template <typename Fn>
    void for_subsets(const Fn& fn) const {
        const int g = (int)ground_.size();
        for (uint32_t mask = 0; mask < (1u << g); ++mask) {
            ElementSet s;
            for (int i = 0; i < g; ++i)
                if (mask & (1u << i)) s.push_back(ground_[i]);
            fn(s);
        }
    }

    ElementSet ground_;
    IndepFn indep_;
    std::string name_;
};

// Edmonds' greedy algorithm: scan elements in (weight, tie_break) order and
// keep those that preserve independence. Weights indexed by ElementId.
inline ElementSet greedy_min_basis(const MatroidOracle& m, const std::vector<double>& weights,
                                   const TieBreak& tie = {}) {
    ElementSet order = m.ground();
    std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
        double wa = weights.at(a), wb = weights.at(b);
        if (wa != wb) return wa < wb;
        return tie_less(tie, a, b);
    });
    ElementSet basis;
    for (ElementId e : order) {
        ElementSet with = basis;
        with.insert(std::lower_bound(with.begin(), with.end(), e), e);
        if (m.independent(with)) basis = std::move(with);
    }
    return basis;
}

} // namespace bondspan
