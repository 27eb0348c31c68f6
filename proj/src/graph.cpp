#include "rees/graph.hpp"

#include "rees/text.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace rees {

int BipartiteGraph::edge_count() const {
    int count = 0;
    for (const auto& row : adj)
        for (char a : row) count += a;
    return count;
}

std::string BipartiteGraph::left_label(int i) const {
    return "x" + std::to_string(left[i]);
}

std::string BipartiteGraph::right_label(int j) const {
    const RightVertex& v = right[j];
    switch (v.kind) {
    case RightVertex::unit:
        return "1";
    case RightVertex::t_label:
        return "t" + std::to_string(v.block);
    case RightVertex::reduced_t:
        return to_string(TVariable(v.block, v.gen));
    }
    return "?";
}

BipartiteGraph incidence_graph(const Instance& inst) {
    BipartiteGraph g;
    std::set<int> xs;
    for (const IdealSpec& spec : inst.ideals)
        for (int i : spec.support) xs.insert(i);
    g.left.assign(xs.begin(), xs.end());
    for (int j = 1; j <= inst.r(); ++j) {
        RightVertex v;
        v.kind = RightVertex::t_label;
        v.block = j;
        g.right.push_back(v);
    }
    g.adj.assign(g.left.size(), std::vector<char>(g.right.size(), 0));
    for (int li = 0; li < g.left_size(); ++li)
        for (int rj = 0; rj < g.right_size(); ++rj) {
            const auto& support = inst.block(g.right[rj].block).support;
            if (std::find(support.begin(), support.end(), g.left[li]) != support.end())
                g.adj[li][rj] = 1;
        }
    return g;
}

BipartiteGraph cycle_graph(const Instance& inst, const TermOrder& ord) {
    BipartiteGraph g;
    for (int i = 1; i <= inst.n; ++i) g.left.push_back(i);
    RightVertex unit;
    unit.kind = RightVertex::unit;
    unit.block = 0;
    unit.gen = XMonomial::unit(inst.n);
    g.right.push_back(unit);
    for (int l = 1; l <= inst.r(); ++l) {
        IdealSpec reduced = inst.block(l);
        reduced.power -= 1;
        for (const XMonomial& m : generators(reduced, inst.n, ord)) {
            RightVertex v;
            v.kind = RightVertex::reduced_t;
            v.block = l;
            v.gen = m;
            g.right.push_back(v);
        }
    }
    g.adj.assign(g.left.size(), std::vector<char>(g.right.size(), 0));
    for (int li = 0; li < g.left_size(); ++li)
        for (int rj = 0; rj < g.right_size(); ++rj) {
            const RightVertex& v = g.right[rj];
            if (v.kind == RightVertex::unit) {
                g.adj[li][rj] = 1;
                continue;
            }
            const auto& support = inst.block(v.block).support;
            if (std::find(support.begin(), support.end(), g.left[li]) != support.end())
                g.adj[li][rj] = 1;
        }
    return g;
}

EvenCycle canonical_cycle(const EvenCycle& c) {
    const int k = static_cast<int>(c.xs.size());
    assert(static_cast<int>(c.rights.size()) == k && k >= 2);
    int best = 0;
    for (int i = 1; i < k; ++i)
        if (c.xs[i] < c.xs[best]) best = i;
    EvenCycle fwd;
    for (int i = 0; i < k; ++i) {
        fwd.xs.push_back(c.xs[(best + i) % k]);
        fwd.rights.push_back(c.rights[(best + i) % k]);
    }
    // Reversed traversal from the same start: rights[s] sits between xs[s] and
    // xs[s+1], so reflection pairs position i with original position k-1-i.
    EvenCycle rev;
    rev.xs.push_back(fwd.xs[0]);
    for (int i = 1; i < k; ++i) rev.xs.push_back(fwd.xs[k - i]);
    for (int i = 0; i < k; ++i) rev.rights.push_back(fwd.rights[(k - 1 - i) % k]);
    return fwd.rights.front() <= rev.rights.front() ? fwd : rev;
}

std::string to_string(const EvenCycle& c, const BipartiteGraph& g) {
    std::ostringstream os;
    for (std::size_t s = 0; s < c.xs.size(); ++s)
        os << g.left_label(c.xs[s]) << " - " << g.right_label(c.rights[s]) << " - ";
    os << g.left_label(c.xs[0]);
    return os.str();
}

namespace {

// Chordality helpers work on a unified vertex numbering: 0..L-1 for the left
// side, L..L+R-1 for the right side.
struct FlatGraph {
    int L, R;
    std::vector<std::vector<int>> nbr;

    explicit FlatGraph(const BipartiteGraph& g)
        : L(g.left_size()), R(g.right_size()), nbr(L + R) {
        for (int i = 0; i < L; ++i)
            for (int j = 0; j < R; ++j)
                if (g.adj[i][j]) {
                    nbr[i].push_back(L + j);
                    nbr[L + j].push_back(i);
                }
    }
    int size() const { return L + R; }
    bool edge(int u, int v) const {
        return std::find(nbr[u].begin(), nbr[u].end(), v) != nbr[u].end();
    }
};

// Vertex sequence around a cycle (alternating sides) -> EvenCycle.
EvenCycle cycle_from_sequence(std::vector<int> seq, const FlatGraph& fg) {
    if (seq[0] >= fg.L) std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    EvenCycle c;
    for (std::size_t i = 0; i < seq.size(); i += 2) {
        c.xs.push_back(seq[i]);
        c.rights.push_back(seq[i + 1] - fg.L);
    }
    return canonical_cycle(c);
}

// Lexicographic k-subset enumeration calling fn on each index vector; fn
// returns true to stop.
template <typename Fn> bool for_each_subset(int m, int k, Fn&& fn) {
    if (k > m) return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (fn(idx)) return true;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == m - k + pos) --pos;
        if (pos < 0) return false;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

// If the subset (ls, rs) induces a single chordless cycle, return its vertex
// walk; 2-regularity plus a full-length closed walk is exactly that.
std::optional<std::vector<int>> induced_cycle_walk(const FlatGraph& fg,
                                                   const std::vector<int>& verts) {
    std::set<int> in(verts.begin(), verts.end());
    std::map<int, std::vector<int>> sel;
    for (int v : verts) {
        for (int w : fg.nbr[v])
            if (in.count(w)) sel[v].push_back(w);
        if (sel[v].size() != 2) return std::nullopt;
    }
    std::vector<int> walk{verts.front()};
    int prev = -1, cur = verts.front();
    while (true) {
        const auto& two = sel[cur];
        int next = (two[0] == prev) ? two[1] : two[0];
        if (next == walk.front()) break;
        walk.push_back(next);
        prev = cur;
        cur = next;
    }
    if (walk.size() != verts.size()) return std::nullopt; // two components
    return walk;
}

std::optional<EvenCycle> chordless_cycle_exhaustive(const FlatGraph& fg) {
    std::optional<EvenCycle> found;
    const int kmax = std::min(fg.L, fg.R);
    for (int k = 3; k <= kmax && !found; ++k) {
        for_each_subset(fg.L, k, [&](const std::vector<int>& ls) {
            return for_each_subset(fg.R, k, [&](const std::vector<int>& rs) {
                std::vector<int> verts = ls;
                for (int j : rs) verts.push_back(fg.L + j);
                auto walk = induced_cycle_walk(fg, verts);
                if (!walk) return false;
                found = cycle_from_sequence(*walk, fg);
                return true;
            });
        });
    }
    return found;
}

// Polynomial-time sweep: a chordless cycle of length >= 6 exists iff some
// induced path a-b-c-d admits a d->a path of length >= 3 whose interior avoids
// the neighbourhoods of b and c.  A shortest such path closes a chordless
// cycle (shortest paths are induced, and a d-a edge would make the distance 1).
std::optional<EvenCycle> chordless_cycle_p4(const FlatGraph& fg) {
    const int V = fg.size();
    for (int b = 0; b < V; ++b) {
        for (int c : fg.nbr[b]) {
            for (int a : fg.nbr[b]) {
                if (a == c) continue;
                for (int d : fg.nbr[c]) {
                    if (d == b || d == a || fg.edge(a, d)) continue;
                    // Restricted BFS from d to a.
                    std::vector<char> allowed(V, 1);
                    allowed[b] = allowed[c] = 0;
                    for (int w : fg.nbr[b]) allowed[w] = 0;
                    for (int w : fg.nbr[c]) allowed[w] = 0;
                    allowed[a] = allowed[d] = 1;
                    std::vector<int> parent(V, -1);
                    std::vector<int> dist(V, -1);
                    std::queue<int> q;
                    q.push(d);
                    dist[d] = 0;
                    while (!q.empty()) {
                        int u = q.front();
                        q.pop();
                        for (int w : fg.nbr[u]) {
                            if (!allowed[w] || dist[w] >= 0) continue;
                            dist[w] = dist[u] + 1;
                            parent[w] = u;
                            q.push(w);
                        }
                    }
                    if (dist[a] < 3) continue;
                    std::vector<int> seq{a, b, c};
                    std::vector<int> back;
                    for (int v = a; v != d; v = parent[v]) back.push_back(v);
                    back.push_back(d);
                    // back = a..d following parents; append d..a interior.
                    for (auto it = back.rbegin(); it + 1 != back.rend(); ++it)
                        seq.push_back(*it);
                    return cycle_from_sequence(seq, fg);
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

ChordalityVerdict is_chordal_bipartite(const BipartiteGraph& g,
                                       ChordalityMethod method) {
    FlatGraph fg(g);
    ChordalityVerdict verdict;
    verdict.witness = method == ChordalityMethod::exhaustive
                          ? chordless_cycle_exhaustive(fg)
                          : chordless_cycle_p4(fg);
    verdict.chordal = !verdict.witness.has_value();
    return verdict;
}

namespace {

class AdmissibleCycleSearch {
public:
    AdmissibleCycleSearch(const BipartiteGraph& g, std::optional<int> max_len)
        : g_(g), max_len_(max_len), x_visited_(g.left_size(), 0) {}

    std::vector<EvenCycle> run() {
        for (int start = 0; start < g_.left_size(); ++start) {
            start_ = start;
            xs_ = {start};
            x_visited_[start] = 1;
            extend();
            x_visited_[start] = 0;
        }
        return out_;
    }

private:
    void extend() {
        const int x = xs_.back();
        if (max_len_ && 2 * static_cast<int>(xs_.size()) > *max_len_) return;
        for (int rj = 0; rj < g_.right_size(); ++rj) {
            if (!g_.adj[x][rj] || blocks_.count(g_.right[rj].block)) continue;
            rights_.push_back(rj);
            blocks_.insert(g_.right[rj].block);
            for (int x2 = 0; x2 < g_.left_size(); ++x2) {
                if (!g_.adj[x2][rj] || x2 == x) continue;
                if (x2 == start_) {
                    // Close: >= 2 right vertices, one canonical direction.
                    if (rights_.size() >= 2 && rights_.front() < rights_.back() &&
                        (!max_len_ ||
                         2 * static_cast<int>(rights_.size()) <= *max_len_)) {
                        EvenCycle c;
                        c.xs = xs_;
                        c.rights = rights_;
                        out_.push_back(c);
                    }
                    continue;
                }
                if (x2 < start_ || x_visited_[x2]) continue;
                xs_.push_back(x2);
                x_visited_[x2] = 1;
                extend();
                x_visited_[x2] = 0;
                xs_.pop_back();
            }
            blocks_.erase(g_.right[rj].block);
            rights_.pop_back();
        }
    }

    const BipartiteGraph& g_;
    std::optional<int> max_len_;
    int start_ = 0;
    std::vector<int> xs_, rights_;
    std::vector<char> x_visited_;
    std::set<int> blocks_;
    std::vector<EvenCycle> out_;
};

} // namespace

std::vector<EvenCycle> enumerate_admissible_cycles(const BipartiteGraph& g,
                                                   std::optional<int> max_len) {
    return AdmissibleCycleSearch(g, max_len).run();
}

namespace {

// The factor contributed by the edge between x_l (1-based) and right vertex v.
SMonomial edge_factor(int l, const RightVertex& v, int n) {
    if (v.kind == RightVertex::unit)
        return SMonomial(XMonomial::variable(l, n), {});
    return SMonomial(XMonomial::unit(n),
                     {TVariable(v.block, v.gen * XMonomial::variable(l, n))});
}

} // namespace

CycleTranslation cycle_to_binomial(const EvenCycle& c, const BipartiteGraph& g,
                                   const Instance& inst, const TermOrder& ord) {
    const int k = static_cast<int>(c.xs.size());
    SMonomial a = SMonomial::unit(inst.n);
    SMonomial b = SMonomial::unit(inst.n);
    for (int s = 0; s < k; ++s) {
        const RightVertex& v = g.right[c.rights[s]];
        a = a * edge_factor(g.left[c.xs[s]], v, inst.n);              // odd edge
        b = b * edge_factor(g.left[c.xs[(s + 1) % k]], v, inst.n);   // even edge
    }
    auto bin = make_binomial(a, b, ord);
    assert(bin.has_value());
    return CycleTranslation{*bin, !(bin->plus == a)};
}

std::optional<EvenCycle> binomial_to_cycle(const Binomial& b, const BipartiteGraph& g,
                                           const Instance& inst, const TermOrder& ord) {
    (void)ord;
    // Term shape: at most one x-variable each, and the same blocks exactly once
    // on both sides.
    if (b.plus.xpart.degree() > 1 || b.minus.xpart.degree() > 1) return std::nullopt;
    if (b.plus.xpart.degree() != b.minus.xpart.degree()) return std::nullopt;
    std::map<int, std::vector<XMonomial>> at, bt;
    for (const TVariable& t : b.plus.tpart) at[t.block].push_back(t.gen);
    for (const TVariable& t : b.minus.tpart) bt[t.block].push_back(t.gen);
    if (at.size() != bt.size()) return std::nullopt;

    auto right_index = [&](const RightVertex& v) -> std::optional<int> {
        for (int j = 0; j < g.right_size(); ++j)
            if (g.right[j] == v) return j;
        return std::nullopt;
    };
    auto single_variable = [](const XMonomial& m) -> std::optional<int> {
        if (m.degree() != 1) return std::nullopt;
        return m.support().front();
    };

    // One arc per right vertex: its x-neighbour on the leading-term side and on
    // the trailing-term side.
    struct Arc {
        int right;
        int ax, bx; // 1-based x-indices
        bool used = false;
    };
    std::vector<Arc> arcs;
    for (const auto& [block, agens] : at) {
        auto it = bt.find(block);
        if (it == bt.end()) return std::nullopt;
        if (agens.size() != 1 || it->second.size() != 1) return std::nullopt;
        const XMonomial &m = agens.front(), &mp = it->second.front();
        XMonomial base(std::vector<int>(inst.n, 0));
        for (int i = 0; i < inst.n; ++i)
            base.exponents[i] = std::min(m.exponents[i], mp.exponents[i]);
        auto u = single_variable(base.divide_into(m));
        auto v = single_variable(base.divide_into(mp));
        if (!u || !v) return std::nullopt;
        RightVertex rv;
        rv.kind = RightVertex::reduced_t;
        rv.block = block;
        rv.gen = base;
        auto rj = right_index(rv);
        if (!rj) return std::nullopt;
        arcs.push_back({*rj, *u, *v, false});
    }
    if (b.plus.xpart.degree() == 1) {
        auto u = single_variable(b.plus.xpart);
        auto v = single_variable(b.minus.xpart);
        if (*u == *v) return std::nullopt;
        RightVertex rv;
        rv.kind = RightVertex::unit;
        rv.block = 0;
        rv.gen = XMonomial::unit(inst.n);
        auto rj = right_index(rv);
        if (!rj) return std::nullopt;
        arcs.push_back({*rj, *u, *v, false});
    }
    if (arcs.size() < 2) return std::nullopt;

    // Stitch: arcs chain ax -> bx; one pass must visit every arc (connected).
    std::map<int, int> by_ax;
    std::set<int> bxs;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (!by_ax.emplace(arcs[i].ax, static_cast<int>(i)).second)
            return std::nullopt;
        if (!bxs.insert(arcs[i].bx).second) return std::nullopt;
    }
    auto left_index = [&](int x) -> std::optional<int> {
        for (int i = 0; i < g.left_size(); ++i)
            if (g.left[i] == x) return i;
        return std::nullopt;
    };
    EvenCycle c;
    int cur = arcs[0].ax;
    for (std::size_t step = 0; step < arcs.size(); ++step) {
        auto it = by_ax.find(cur);
        if (it == by_ax.end() || arcs[it->second].used) return std::nullopt;
        Arc& arc = arcs[it->second];
        arc.used = true;
        auto li = left_index(cur);
        if (!li) return std::nullopt;
        c.xs.push_back(*li);
        c.rights.push_back(arc.right);
        cur = arc.bx;
    }
    if (cur != arcs[0].ax) return std::nullopt; // did not close
    return canonical_cycle(c);
}

std::optional<KoszulWitness> koszul_witness(const Instance& inst,
                                            const TermOrder& ord) {
    BipartiteGraph g = incidence_graph(inst);
    ChordalityVerdict verdict = is_chordal_bipartite(g);
    if (verdict.chordal) return std::nullopt;
    const EvenCycle& c = *verdict.witness;
    const int m = static_cast<int>(c.xs.size());
    std::vector<TVariable> plus_t, minus_t;
    for (int s = 0; s < m; ++s) {
        const int i = g.left[c.xs[s]];
        const int inext = g.left[c.xs[(s + 1) % m]];
        const int j = g.right[c.rights[s]].block;
        const int a = inst.block(j).power;
        XMonomial pa = XMonomial::unit(inst.n);
        pa.exponents[i - 1] = a;
        XMonomial pb = XMonomial::unit(inst.n);
        pb.exponents[i - 1] = a - 1;
        pb.exponents[inext - 1] += 1;
        plus_t.push_back(TVariable(j, pa));
        minus_t.push_back(TVariable(j, pb));
    }
    auto alpha = make_binomial(SMonomial(XMonomial::unit(inst.n), plus_t),
                               SMonomial(XMonomial::unit(inst.n), minus_t), ord);
    assert(alpha.has_value());
    return KoszulWitness{c, *alpha};
}

QuadricSpanCertificate not_quadric_generated(const Binomial& alpha,
                                             const Instance& inst, MapKind kind,
                                             const TermOrder& ord) {
    using Rat = boost::multiprecision::cpp_rational;
    if (kind == MapKind::fiber &&
        (!alpha.plus.xpart.is_unit() || !alpha.minus.xpart.is_unit()))
        throw InputError("binomial is not x-free");
    if (phi_eval(alpha.plus, inst.r()) != phi_eval(alpha.minus, inst.r()))
        throw InputError("binomial is not in the kernel");

    const ImageMonomial mu = phi_eval(alpha.plus, inst.r());
    const std::vector<SMonomial> V = fiber(mu, inst, kind, ord);
    const int d = static_cast<int>(V.size());
    std::map<SMonomial, int> index;
    for (int i = 0; i < d; ++i) index.emplace(V[i], i);

    // Columns: all monomial multiples of degree-2 kernel binomials that land in
    // alpha's multidegree slice, each a difference of two slice basis vectors.
    std::set<std::pair<int, int>> cols;
    for (const Binomial& q : brute_force_kernel(inst, 2, kind, ord)) {
        for (int i = 0; i < d; ++i) {
            if (!q.plus.divides(V[i])) continue;
            SMonomial other = q.plus.divide_into(V[i]) * q.minus;
            auto it = index.find(other);
            assert(it != index.end());
            cols.insert({i, it->second});
        }
    }

    QuadricSpanCertificate cert;
    cert.slice_dimension = d;
    cert.quadric_multiples = static_cast<int>(cols.size());

    const int C = static_cast<int>(cols.size());
    std::vector<std::vector<Rat>> M(d, std::vector<Rat>(C + 1, Rat(0)));
    int ci = 0;
    for (const auto& [i, j] : cols) {
        M[i][ci] = 1;
        M[j][ci] = -1;
        ++ci;
    }
    M[index.at(alpha.plus)][C] = 1;
    M[index.at(alpha.minus)][C] = -1;

    // Row echelon over the rationals; a pivot in the final column means the
    // target is independent of the quadric multiples.
    int row = 0;
    bool target_pivot = false;
    for (int col = 0; col <= C && row < d; ++col) {
        int pivot = -1;
        for (int rr = row; rr < d; ++rr)
            if (M[rr][col] != 0) {
                pivot = rr;
                break;
            }
        if (pivot < 0) continue;
        std::swap(M[row], M[pivot]);
        for (int rr = row + 1; rr < d; ++rr) {
            if (M[rr][col] == 0) continue;
            Rat f = M[rr][col] / M[row][col];
            for (int cc = col; cc <= C; ++cc) M[rr][cc] -= f * M[row][cc];
        }
        if (col < C)
            ++cert.span_rank;
        else
            target_pivot = true;
        ++row;
    }
    cert.outside_span = target_pivot;
    return cert;
}

std::string to_dot(const BipartiteGraph& g) {
    std::ostringstream os;
    os << "graph {\n  rankdir=LR;\n";
    for (int i = 0; i < g.left_size(); ++i)
        os << "  L" << i << " [shape=box, label=\"" << g.left_label(i) << "\"];\n";
    for (int j = 0; j < g.right_size(); ++j)
        os << "  R" << j << " [shape=ellipse, label=\"" << g.right_label(j)
           << "\"];\n";
    for (int i = 0; i < g.left_size(); ++i)
        for (int j = 0; j < g.right_size(); ++j)
            if (g.adj[i][j]) os << "  L" << i << " -- R" << j << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace rees
