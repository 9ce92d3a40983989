#include "cecac/chain_dp.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cecac {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

struct AttrPool {
    std::map<std::string, int> ids;
    std::vector<std::string> names;

    int intern(const std::string& a) {
        auto [it, inserted] = ids.emplace(a, static_cast<int>(names.size()));
        if (inserted) names.push_back(a);
        return it->second;
    }
};

struct SLit {
    int attr = -1;
    bool neg = false;

    bool operator==(const SLit& o) const { return attr == o.attr && neg == o.neg; }
    bool operator<(const SLit& o) const { return attr != o.attr ? attr < o.attr : neg < o.neg; }
};

struct EndpointCoupling {
    int attr = -1;
    int s1 = -1, e1 = 0;  // string index, endpoint (0 first, 1 last)
    int s2 = -1, e2 = 0;
};

struct StringSet {
    std::vector<std::vector<SLit>> strings;
    std::vector<EndpointCoupling> couplings;
};

// Chains constraints whose rhs literal is some other constraint's lhs literal
// into maximal strings. Constraints left over after all chain starts are
// walked form closed cycles; those are stored with the wrap literal repeated.
StringSet build_strings(const std::vector<std::pair<SLit, SLit>>& cs,
                        const std::vector<std::string>& names) {
    std::map<int, int> occurrence;
    std::map<SLit, std::vector<int>> by_lhs;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        occurrence[cs[i].first.attr]++;
        occurrence[cs[i].second.attr]++;
        by_lhs[cs[i].first].push_back(static_cast<int>(i));
    }
    for (const auto& [attr, cnt] : occurrence)
        if (cnt > 2)
            throw DegreeViolation("attribute occurs more than twice: " +
                                  names[static_cast<std::size_t>(attr)]);

    const int n = static_cast<int>(cs.size());
    std::vector<int> succ(static_cast<std::size_t>(n), -1);
    std::vector<int> pred(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        auto it = by_lhs.find(cs[static_cast<std::size_t>(i)].second);
        if (it == by_lhs.end()) continue;
        // A second lhs match would need a third occurrence of the attribute.
        assert(it->second.size() == 1);
        succ[static_cast<std::size_t>(i)] = it->second.front();
        pred[static_cast<std::size_t>(it->second.front())] = i;
    }

    StringSet out;
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    auto walk = [&](int start) {
        std::vector<SLit> lits{cs[static_cast<std::size_t>(start)].first};
        int cur = start;
        while (true) {
            visited[static_cast<std::size_t>(cur)] = 1;
            lits.push_back(cs[static_cast<std::size_t>(cur)].second);
            int nxt = succ[static_cast<std::size_t>(cur)];
            if (nxt == -1 || nxt == start || visited[static_cast<std::size_t>(nxt)]) break;
            cur = nxt;
        }
        out.strings.push_back(std::move(lits));
    };
    for (int i = 0; i < n; ++i)
        if (!visited[static_cast<std::size_t>(i)] && pred[static_cast<std::size_t>(i)] == -1)
            walk(i);
    for (int i = 0; i < n; ++i)
        if (!visited[static_cast<std::size_t>(i)]) walk(i);

    // Interior positions consume both occurrences of their attribute, so any
    // attribute shared between two strings surfaces as a pair of endpoints.
    std::map<int, std::vector<std::pair<int, int>>> slots;  // attr -> (string, endpoint)
    for (std::size_t s = 0; s < out.strings.size(); ++s) {
        slots[out.strings[s].front().attr].push_back({static_cast<int>(s), 0});
        slots[out.strings[s].back().attr].push_back({static_cast<int>(s), 1});
    }
    for (const auto& [attr, v] : slots) {
        if (v.size() < 2) continue;
        assert(v.size() == 2);
        if (v[0].first == v[1].first) continue;  // both ends of the same string
        out.couplings.push_back({attr, v[0].first, v[0].second, v[1].first, v[1].second});
    }
    return out;
}

std::vector<std::pair<SLit, SLit>> intern_constraints(const std::vector<SimpleConstraint>& cs,
                                                      AttrPool& pool) {
    std::vector<std::pair<SLit, SLit>> out;
    out.reserve(cs.size());
    for (const auto& sc : cs)
        out.push_back({{pool.intern(sc.lhs.attr), sc.lhs.negated},
                       {pool.intern(sc.rhs.attr), sc.rhs.negated}});
    return out;
}

// Satisfying assignments of one string are exactly its prefixes: once a
// literal holds, every later literal must hold too. Collects the attribute
// truths realizing prefix j; false when a repeated attribute clashes.
bool prefix_demands(const std::vector<SLit>& lits, int j, std::map<int, bool>& demand) {
    demand.clear();
    for (std::size_t idx = 0; idx < lits.size(); ++idx) {
        const bool fulfilled = static_cast<int>(idx) >= j;
        const bool value = lits[idx].neg ? !fulfilled : fulfilled;
        auto [it, inserted] = demand.emplace(lits[idx].attr, value);
        if (!inserted && it->second != value) return false;
    }
    return true;
}

std::vector<int> legal_js(const std::vector<SLit>& lits) {
    const SLit& first = lits.front();
    const SLit& last = lits.back();
    const int t = static_cast<int>(lits.size());
    std::vector<int> out;
    if (first == last) {
        // A wrapped cycle: everything fulfilled or nothing.
        out = {0, t};
    } else if (first.attr == last.attr) {
        // Opposite polarity at the two ends rules out the all-fulfilled prefix.
        for (int j = 1; j <= t; ++j) out.push_back(j);
    } else {
        for (int j = 0; j <= t; ++j) out.push_back(j);
    }
    return out;
}

struct ChainCtx {
    const Instance& inst;
    std::vector<std::vector<int>> owners;  // per attr id, (profit desc, id asc)

    bool better(int a, int b) const {
        return better_candidate(inst.candidates[static_cast<std::size_t>(a)],
                                inst.candidates[static_cast<std::size_t>(b)]);
    }

    Profit profit(int c) const { return inst.candidates[static_cast<std::size_t>(c)].profit; }
};

std::vector<std::vector<int>> collect_owners(const Instance& inst, const AttrPool& pool) {
    std::vector<std::vector<int>> owners(pool.names.size());
    for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
        for (const std::string& a : inst.candidates[c].attributes) {
            auto it = pool.ids.find(a);
            if (it != pool.ids.end())
                owners[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(c));
        }
    }
    for (auto& v : owners)
        std::sort(v.begin(), v.end(), [&inst](int a, int b) {
            return better_candidate(inst.candidates[static_cast<std::size_t>(a)],
                                    inst.candidates[static_cast<std::size_t>(b)]);
        });
    return owners;
}

// One legal prefix of one string, turned into committee material: one owner
// per demanded-true attribute plus the surplus owners as an optional pool.
// Attributes in `excluded` are accounted by an earlier string of the walk.
struct RowInfo {
    bool ok = false;
    std::map<int, bool> demand;
    std::vector<int> n_part;
    Profit sum_n = 0;
    std::vector<int> pool;
    std::vector<Profit> pool_prefix;
};

RowInfo make_row(const ChainCtx& ctx, const std::vector<SLit>& lits, int j,
                 const std::set<int>& excluded) {
    RowInfo row;
    if (!prefix_demands(lits, j, row.demand)) return row;
    for (const auto& [attr, value] : row.demand) {
        if (!value || excluded.count(attr)) continue;
        const std::vector<int>& own = ctx.owners[static_cast<std::size_t>(attr)];
        if (own.empty()) return row;  // a required attribute nobody owns
        row.n_part.push_back(own.front());
        row.pool.insert(row.pool.end(), own.begin() + 1, own.end());
    }
    auto better = [&ctx](int a, int b) { return ctx.better(a, b); };
    std::sort(row.n_part.begin(), row.n_part.end(), better);
    std::sort(row.pool.begin(), row.pool.end(), better);
    for (int c : row.n_part) row.sum_n += ctx.profit(c);
    row.pool_prefix.assign(row.pool.size() + 1, 0);
    for (std::size_t q = 0; q < row.pool.size(); ++q)
        row.pool_prefix[q + 1] = row.pool_prefix[q] + ctx.profit(row.pool[q]);
    row.ok = true;
    return row;
}

struct FoldBest {
    Profit v = kNegInf;  // equals the profit sum of n plus p when populated
    std::vector<int> n;
    std::vector<int> p;
};

// Folds one coupling-connected component. The walk visits its strings as a
// path (cycles are cut open at one coupling and both truths of the cut
// attribute are tried); the state tracks, per member count, the best row
// combination for each truth of the attribute shared with the next string.
std::vector<FoldBest> fold_walk(const ChainCtx& ctx,
                                const std::vector<std::vector<SLit>>& strings,
                                const std::vector<int>& order, const std::vector<int>& link_attr,
                                int cut_attr, int k) {
    const int n = static_cast<int>(order.size());
    std::vector<FoldBest> result(static_cast<std::size_t>(k) + 1);
    const int tau_hi = cut_attr >= 0 ? 1 : 0;
    for (int tau_star = 0; tau_star <= tau_hi; ++tau_star) {
        std::vector<std::array<FoldBest, 2>> states(static_cast<std::size_t>(k) + 1);
        const auto& head = strings[static_cast<std::size_t>(order.front())];
        for (int j : legal_js(head)) {
            RowInfo row = make_row(ctx, head, j, {});
            if (!row.ok) continue;
            if (cut_attr >= 0 && row.demand.at(cut_attr) != static_cast<bool>(tau_star))
                continue;
            const bool tau_out = n > 1 && row.demand.at(link_attr.front());
            const int base = static_cast<int>(row.n_part.size());
            const int hi = std::min(k, base + static_cast<int>(row.pool.size()));
            for (int i = base; i <= hi; ++i) {
                Profit v = row.sum_n + row.pool_prefix[static_cast<std::size_t>(i - base)];
                FoldBest& slot = states[static_cast<std::size_t>(i)][tau_out];
                if (v > slot.v) {
                    slot.v = v;
                    slot.n = row.n_part;
                    slot.p.assign(row.pool.begin(), row.pool.begin() + (i - base));
                }
            }
        }
        for (int step = 1; step < n; ++step) {
            const auto& lits = strings[static_cast<std::size_t>(order[static_cast<std::size_t>(step)])];
            const bool tail = step == n - 1;
            std::set<int> excluded{link_attr[static_cast<std::size_t>(step - 1)]};
            if (tail && cut_attr >= 0) excluded.insert(cut_attr);
            std::vector<std::array<FoldBest, 2>> next(static_cast<std::size_t>(k) + 1);
            for (int j : legal_js(lits)) {
                RowInfo row = make_row(ctx, lits, j, excluded);
                if (!row.ok) continue;
                if (tail && cut_attr >= 0 &&
                    row.demand.at(cut_attr) != static_cast<bool>(tau_star))
                    continue;
                const bool tau_in = row.demand.at(link_attr[static_cast<std::size_t>(step - 1)]);
                const bool tau_out =
                    !tail && row.demand.at(link_attr[static_cast<std::size_t>(step)]);
                const int base = static_cast<int>(row.n_part.size());
                const int hi = std::min(k, base + static_cast<int>(row.pool.size()));
                for (int count = 0; count <= k; ++count) {
                    const FoldBest& st = states[static_cast<std::size_t>(count)][tau_in];
                    if (st.v == kNegInf) continue;
                    for (int i = base; i <= hi && count + i <= k; ++i) {
                        Profit v = st.v + row.sum_n +
                                   row.pool_prefix[static_cast<std::size_t>(i - base)];
                        FoldBest& slot = next[static_cast<std::size_t>(count + i)][tau_out];
                        if (v > slot.v) {
                            slot.v = v;
                            slot.n = merge_profit_sorted(ctx.inst, st.n, row.n_part);
                            std::vector<int> picked(row.pool.begin(),
                                                    row.pool.begin() + (i - base));
                            slot.p = merge_profit_sorted(ctx.inst, st.p, picked);
                        }
                    }
                }
            }
            states = std::move(next);
        }
        for (int count = 0; count <= k; ++count) {
            for (int tau = 0; tau < 2; ++tau) {
                const FoldBest& st = states[static_cast<std::size_t>(count)][tau];
                if (st.v > result[static_cast<std::size_t>(count)].v)
                    result[static_cast<std::size_t>(count)] = st;
            }
        }
    }
    return result;
}

std::vector<FoldBest> convolve(const Instance& inst, const std::vector<FoldBest>& a,
                               const std::vector<FoldBest>& b, int k) {
    std::vector<FoldBest> out(static_cast<std::size_t>(k) + 1);
    for (int x = 0; x <= k; ++x) {
        const FoldBest& fa = a[static_cast<std::size_t>(x)];
        if (fa.v == kNegInf) continue;
        for (int y = 0; x + y <= k; ++y) {
            const FoldBest& fb = b[static_cast<std::size_t>(y)];
            if (fb.v == kNegInf) continue;
            Profit v = fa.v + fb.v;
            FoldBest& slot = out[static_cast<std::size_t>(x + y)];
            if (v > slot.v) {
                slot.v = v;
                slot.n = merge_profit_sorted(inst, fa.n, fb.n);
                slot.p = merge_profit_sorted(inst, fa.p, fb.p);
            }
        }
    }
    return out;
}

// Best committee material per member count for one cluster's strings.
std::vector<FoldBest> solve_cluster(const ChainCtx& ctx, const Cluster& cluster,
                                    AttrPool& pool, int k) {
    std::vector<std::pair<SLit, SLit>> cs = intern_constraints(cluster.constraints, pool);
    StringSet ss = build_strings(cs, pool.names);

    const int ns = static_cast<int>(ss.strings.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(ns));
    for (std::size_t ci = 0; ci < ss.couplings.size(); ++ci) {
        adj[static_cast<std::size_t>(ss.couplings[ci].s1)].push_back(static_cast<int>(ci));
        adj[static_cast<std::size_t>(ss.couplings[ci].s2)].push_back(static_cast<int>(ci));
    }

    std::vector<FoldBest> table(static_cast<std::size_t>(k) + 1);
    table[0].v = 0;
    std::vector<char> seen(static_cast<std::size_t>(ns), 0);
    for (int s0 = 0; s0 < ns; ++s0) {
        if (seen[static_cast<std::size_t>(s0)]) continue;
        std::vector<int> comp;
        std::vector<int> work{s0};
        seen[static_cast<std::size_t>(s0)] = 1;
        while (!work.empty()) {
            int s = work.back();
            work.pop_back();
            comp.push_back(s);
            for (int ci : adj[static_cast<std::size_t>(s)]) {
                const auto& c = ss.couplings[static_cast<std::size_t>(ci)];
                int other = c.s1 == s ? c.s2 : c.s1;
                if (!seen[static_cast<std::size_t>(other)]) {
                    seen[static_cast<std::size_t>(other)] = 1;
                    work.push_back(other);
                }
            }
        }
        std::sort(comp.begin(), comp.end());

        // With every attribute occurring at most twice each string touches at
        // most two couplings, so a component is a path or a cycle of strings.
        std::vector<int> order;
        std::vector<int> link_attr;
        int cut_attr = -1;
        int start = -1;
        for (int s : comp)
            if (adj[static_cast<std::size_t>(s)].size() <= 1) {
                start = s;
                break;
            }
        if (start == -1) start = comp.front();  // cycle: cut it open here
        order.push_back(start);
        int cur = start;
        int via = -1;
        while (true) {
            int next_ci = -1;
            for (int ci : adj[static_cast<std::size_t>(cur)])
                if (ci != via) {
                    next_ci = ci;
                    break;
                }
            if (next_ci == -1) break;
            const auto& c = ss.couplings[static_cast<std::size_t>(next_ci)];
            int nxt = c.s1 == cur ? c.s2 : c.s1;
            if (nxt == start) {
                cut_attr = c.attr;
                break;
            }
            order.push_back(nxt);
            link_attr.push_back(c.attr);
            via = next_ci;
            cur = nxt;
        }
        assert(order.size() == comp.size());

        table = convolve(ctx.inst, table,
                         fold_walk(ctx, ss.strings, order, link_attr, cut_attr, k), k);
    }
    return table;
}

}  // namespace

std::vector<Cluster> cluster_constraints(const std::vector<SimpleConstraint>& simple) {
    AttrPool pool;
    std::vector<std::pair<int, int>> ends;
    ends.reserve(simple.size());
    for (const auto& sc : simple)
        ends.push_back({pool.intern(sc.lhs.attr), pool.intern(sc.rhs.attr)});
    UnionFind uf(pool.names.size());
    for (const auto& [a, b] : ends) uf.unite(a, b);

    std::vector<Cluster> out;
    std::map<int, int> cluster_of;  // attribute root -> cluster index
    for (std::size_t i = 0; i < simple.size(); ++i) {
        int root = uf.find(ends[i].first);
        auto [it, inserted] = cluster_of.emplace(root, static_cast<int>(out.size()));
        if (inserted) out.emplace_back();
        out[static_cast<std::size_t>(it->second)].constraints.push_back(simple[i]);
    }
    return out;
}

StringGraph build_strings_graph(const Cluster& cluster) {
    AttrPool pool;
    std::vector<std::pair<SLit, SLit>> cs = intern_constraints(cluster.constraints, pool);
    StringSet ss = build_strings(cs, pool.names);

    StringGraph g;
    for (const auto& lits : ss.strings) {
        ImplicationString s;
        for (const SLit& l : lits)
            s.literals.push_back({pool.names[static_cast<std::size_t>(l.attr)], l.neg});
        g.strings.push_back(std::move(s));
    }

    UnionFind groups(ss.strings.size());
    for (const auto& c : ss.couplings)
        if (c.e1 == c.e2) groups.unite(c.s1, c.s2);
    std::map<int, int> vertex_of;
    for (int s = 0; s < static_cast<int>(ss.strings.size()); ++s) {
        int root = groups.find(s);
        auto [it, inserted] = vertex_of.emplace(root, static_cast<int>(g.vertices.size()));
        if (inserted) g.vertices.emplace_back();
        g.vertices[static_cast<std::size_t>(it->second)].push_back(s);
    }
    for (const auto& c : ss.couplings) {
        if (c.e1 == c.e2) continue;
        // Last-first sharing with identical literals would have been chained
        // into one string, so the pair is a negation: an implication edge.
        int tail = c.e1 == 1 ? c.s1 : c.s2;
        int head = c.e1 == 1 ? c.s2 : c.s1;
        g.edges.push_back({vertex_of.at(groups.find(tail)), vertex_of.at(groups.find(head))});
    }
    return g;
}

const PrefixCell& PrefixDpTable::at(int i, int j) const {
    for (std::size_t idx = 0; idx < legal_j.size(); ++idx) {
        if (legal_j[idx] != j) continue;
        const auto& row = rows[idx];
        if (i < 0 || i >= static_cast<int>(row.size()))
            throw std::out_of_range("prefix table: i out of range");
        return row[static_cast<std::size_t>(i)];
    }
    throw std::out_of_range("prefix table: j is not a legal prefix");
}

PrefixDpTable string_prefix_table(const Instance& inst, const ImplicationString& s, int k) {
    if (s.literals.empty()) throw MalformedInput("empty implication string");
    if (describe_instance(inst).max_attrs_per_candidate > 1)
        throw NotApplicable("prefix tables need single-attribute candidates");

    AttrPool pool;
    std::vector<SLit> lits;
    lits.reserve(s.literals.size());
    for (const Literal& l : s.literals) lits.push_back({pool.intern(l.attr), l.negated});

    ChainCtx ctx{inst, collect_owners(inst, pool)};

    PrefixDpTable table;
    table.t = static_cast<int>(lits.size());
    table.legal_j = legal_js(lits);
    table.rows.assign(table.legal_j.size(),
                      std::vector<PrefixCell>(static_cast<std::size_t>(k) + 1));
    for (std::size_t idx = 0; idx < table.legal_j.size(); ++idx) {
        RowInfo row = make_row(ctx, lits, table.legal_j[idx], {});
        if (!row.ok) continue;  // contradictory prefix: the row stays -inf
        const int base = static_cast<int>(row.n_part.size());
        const int hi = std::min(k, base + static_cast<int>(row.pool.size()));
        for (int i = base; i <= hi; ++i) {
            PrefixCell& cell = table.rows[idx][static_cast<std::size_t>(i)];
            cell.v = row.sum_n + row.pool_prefix[static_cast<std::size_t>(i - base)];
            cell.n = row.n_part;
            cell.p.assign(row.pool.begin(), row.pool.begin() + (i - base));
        }
    }
    return table;
}

Solution solve_chain_dp(const Instance& inst) {
    if (describe_instance(inst).max_attrs_per_candidate > 1)
        throw NotApplicable("chain-dp needs single-attribute candidates");
    std::vector<SimpleConstraint> simple = normalize_simple(inst.constraints);

    AttrPool pool;
    std::map<int, int> occurrence;
    for (const auto& sc : simple) {
        occurrence[pool.intern(sc.lhs.attr)]++;
        occurrence[pool.intern(sc.rhs.attr)]++;
    }
    for (const auto& [attr, cnt] : occurrence)
        if (cnt > 2)
            throw NotApplicable("attribute occurs more than twice after normalization: " +
                                pool.names[static_cast<std::size_t>(attr)]);

    const int k = inst.k;
    if (simple.empty()) {
        std::vector<int> all(inst.candidates.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        return take_top_k(inst, all, k, SolverKind::ChainDp);
    }

    ChainCtx ctx{inst, collect_owners(inst, pool)};

    // Candidates free of constrained attributes: filler for leftover seats.
    std::vector<int> minus;
    for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
        bool constrained = false;
        for (const std::string& a : inst.candidates[c].attributes)
            if (pool.ids.count(a)) constrained = true;
        if (!constrained) minus.push_back(static_cast<int>(c));
    }
    std::sort(minus.begin(), minus.end(),
              [&ctx](int a, int b) { return ctx.better(a, b); });

    std::vector<Cluster> clusters = cluster_constraints(simple);
    // Clusters never share attributes, so the combination order only pins
    // down tie-breaking; smallest attribute name first keeps it stable.
    auto min_attr = [](const Cluster& cl) {
        const std::string* best = nullptr;
        for (const auto& sc : cl.constraints) {
            if (!best || sc.lhs.attr < *best) best = &sc.lhs.attr;
            if (sc.rhs.attr < *best) best = &sc.rhs.attr;
        }
        return *best;
    };
    std::vector<int> cluster_order(clusters.size());
    for (std::size_t i = 0; i < cluster_order.size(); ++i)
        cluster_order[i] = static_cast<int>(i);
    std::sort(cluster_order.begin(), cluster_order.end(), [&](int a, int b) {
        return min_attr(clusters[static_cast<std::size_t>(a)]) <
               min_attr(clusters[static_cast<std::size_t>(b)]);
    });

    std::vector<FoldBest> total(static_cast<std::size_t>(k) + 1);
    total[0].v = 0;
    for (int ci : cluster_order)
        total = convolve(inst, total,
                         solve_cluster(ctx, clusters[static_cast<std::size_t>(ci)], pool, k), k);

    Profit best = kNegInf;
    std::vector<int> best_committee;
    for (int c = 0; c <= k; ++c) {
        const FoldBest& cell = total[static_cast<std::size_t>(c)];
        if (cell.v == kNegInf) continue;
        const int need = k - static_cast<int>(cell.n.size());
        Profit pad = merged_top_sum(inst, cell.p, minus, need);
        if (pad == kNegInf) continue;  // not enough candidates to fill
        Profit sum_n = 0;
        for (int idx : cell.n) sum_n += ctx.profit(idx);
        Profit value = add_profit(sum_n, pad);
        if (value > best) {
            best = value;
            best_committee = cell.n;
            std::vector<int> picks = merged_top_pick(inst, cell.p, minus, need);
            best_committee.insert(best_committee.end(), picks.begin(), picks.end());
        }
    }

    Solution sol;
    sol.solver = solver_name(SolverKind::ChainDp);
    if (best != kNegInf && best >= inst.p) {
        sol.feasible = true;
        sol.committee = committee_ids(inst, best_committee);
        sol.profit = best;
    }
    return sol;
}

}  // namespace cecac
