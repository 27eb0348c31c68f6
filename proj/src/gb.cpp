#include "rees/gb.hpp"

#include "rees/oracle.hpp"
#include "rees/quasi_matrix.hpp"
#include "rees/text.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rees {

std::vector<Binomial> gb_rees(const Instance& inst, const TermOrder& ord) {
    QuasiMatrix C = build_C(inst, ord);
    std::vector<Binomial> out = two_by_two_minors(C, ord);
    BipartiteGraph g = cycle_graph(inst, ord);
    for (const EvenCycle& c : enumerate_admissible_cycles(g))
        out.push_back(cycle_to_binomial(c, g, inst, ord).binomial);
    sort_basis(out, ord);
    return out;
}

std::vector<Binomial> gb_fiber(const Instance& inst, const TermOrder& ord) {
    std::vector<Binomial> out;
    for (const Binomial& b : gb_rees(inst, ord))
        if (b.plus.xpart.is_unit() && b.minus.xpart.is_unit()) out.push_back(b);
    return out;
}

namespace {

// Componentwise divisibility of image multidegrees, excluding equality.
bool properly_divides(const ImageMonomial& a, const ImageMonomial& b) {
    if (a == b) return false;
    if (!a.xpart.divides(b.xpart)) return false;
    for (std::size_t j = 0; j < a.tdeg.size(); ++j)
        if (a.tdeg[j] > b.tdeg[j]) return false;
    return true;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int size) : parent(size) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<Binomial> minimal_generators(const Instance& inst, MapKind kind,
                                         const TermOrder& ord) {
    std::vector<Binomial> fam =
        kind == MapKind::rees ? gb_rees(inst, ord) : gb_fiber(inst, ord);
    std::set<ImageMonomial> degrees;
    for (const Binomial& b : fam) degrees.insert(phi_eval(b.plus, inst.r()));

    std::vector<Binomial> out;
    for (const ImageMonomial& mu : degrees) {
        std::vector<SMonomial> F = fiber(mu, inst, kind, ord); // descending
        std::map<SMonomial, int> index;
        for (int i = 0; i < static_cast<int>(F.size()); ++i) index[F[i]] = i;
        UnionFind uf(static_cast<int>(F.size()));
        for (const Binomial& b : fam) {
            if (!properly_divides(phi_eval(b.plus, inst.r()), mu)) continue;
            for (int i = 0; i < static_cast<int>(F.size()); ++i)
                if (b.plus.divides(F[i]))
                    uf.unite(i, index.at(b.plus.divide_into(F[i]) * b.minus));
        }
        // Component representatives: the smallest element of each component;
        // with F descending, the last-seen member per root is the smallest.
        std::map<int, int> smallest; // root -> index of smallest element
        for (int i = 0; i < static_cast<int>(F.size()); ++i)
            smallest[uf.find(i)] = i;
        if (smallest.size() < 2) continue;
        int sink = uf.find(static_cast<int>(F.size()) - 1); // overall smallest
        for (const auto& [root, rep] : smallest) {
            if (root == sink) continue;
            auto b = make_binomial(F[rep], F[smallest.at(sink)], ord);
            out.push_back(*b);
        }
    }
    sort_basis(out, ord);
    return out;
}

StructuralReport structural_check(const std::vector<Binomial>& G, const Instance& inst,
                                  const TermOrder& ord) {
    StructuralReport report;
    for (const Binomial& b : G) {
        report.count_by_degree[b.degree()] += 1;
        if (!squarefree(b.plus))
            report.violations.push_back("leading term not squarefree: " +
                                        to_string(b, ord));
        if (b.degree() > inst.r() + 1)
            report.violations.push_back("degree exceeds block count + 1: " +
                                        to_string(b, ord));
        if (phi_eval(b.plus, inst.r()) != phi_eval(b.minus, inst.r()))
            report.violations.push_back("not in the kernel: " + to_string(b, ord));
    }
    report.pass = report.violations.empty();
    return report;
}

} // namespace rees
